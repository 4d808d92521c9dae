// Acceptance run: one PASS/FAIL line per criterion, with its time limit.
// Usage: acceptance [criterion...]   (no arguments runs all twelve)

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hgs/automorphisms.hpp"
#include "hgs/constructions.hpp"
#include "hgs/engine.hpp"
#include "hgs/groupspec.hpp"
#include "hgs/isomorphism.hpp"
#include "hgs/minimality.hpp"
#include "hgs/subgroups.hpp"
#include "oracles.hpp"

using namespace hgs;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string types_of(const ClassificationReport& r) {
  std::map<std::string, int> counts;
  for (const auto& s : r.structures) ++counts[s.structure.type_name];
  std::string out;
  for (const auto& [t, c] : counts) out += (out.empty() ? "" : ", ") + t + " x" + std::to_string(c);
  return out.empty() ? "none" : out;
}

ExtensionProblem complement_problem(const std::string& expr) {
  const BuiltGroup b = build_group(expr);
  return ExtensionProblem(b.group, *b.complement, "(" + b.group.name() + ", complement)");
}

const char* const kA4 = "SD(E(2,2), matgrp(2,2,[[[1,1],[1,0]]]))";
const char* const kG56 = "SD(E(2,3), matgrp(2,3,[[[1,1,1],[1,1,0],[1,0,0]]]))";
const char* const kG36 = "SD(E(3,2), matgrp(3,2,[[[0,1],[-1,0]]]))";

Verdict ac1() {
  Verdict v;
  const ExtensionProblem prob = ExtensionProblem::point_stabilizer(symmetric(4));
  const auto r = classify(prob);
  v.require(r.structures.size() == 1, "expected 1 structure, got " + std::to_string(r.structures.size()));
  if (r.structures.size() == 1) {
    const auto& s = r.structures[0];
    v.require(s.structure.type_name == "E(2,2)", "type " + s.structure.type_name);
    v.require(s.minimal, "not minimal");
    const auto stats = correspondence_stats(prob, s.structure);
    v.require(stats.subhopf_count == 2 && stats.intermediate_count == 2,
              "stats (" + std::to_string(stats.subhopf_count) + ", " +
                  std::to_string(stats.intermediate_count) + ")");
  }
  if (v.pass) v.detail = "1 structure, Klein E(2,2), minimal, stats (2, 2)";
  return v;
}

Verdict ac2() {
  Verdict v;
  const auto r = classify(ExtensionProblem::point_stabilizer(symmetric(5)));
  v.require(r.structures.empty(), std::to_string(r.structures.size()) + " structures");
  if (v.pass) v.detail = "0 structures";
  return v;
}

Verdict ac3() {
  Verdict v;
  const auto r = classify(ExtensionProblem::galois(cyclic(8)));
  v.require(r.structures.size() == 6, std::to_string(r.structures.size()) + " structures");
  v.require(types_of(r) == "C(8) x2, D(4) x2, Q(8) x2", "types " + types_of(r));
  v.require(r.minimal_count == 0, std::to_string(r.minimal_count) + " minimal");
  if (v.pass) v.detail = "6 structures: " + types_of(r) + ", 0 minimal";
  return v;
}

Verdict ac4() {
  Verdict v;
  for (std::size_t p : {2, 3, 5, 7}) {
    const auto r = classify(ExtensionProblem::galois(cyclic(p)));
    v.require(r.structures.size() == 1 && r.minimal_count == 1,
              "C(" + std::to_string(p) + "): " + std::to_string(r.structures.size()) + " structures, " +
                  std::to_string(r.minimal_count) + " minimal");
  }
  if (v.pass) v.detail = "C(2), C(3), C(5), C(7): 1 minimal structure each";
  return v;
}

Verdict ac5() {
  Verdict v;
  std::ostringstream d;
  for (std::size_t p : {3, 5}) {
    const auto r = classify(ExtensionProblem::galois(dihedral(p)));
    v.require(r.minimal_count == 0, "D(" + std::to_string(p) + ") has a minimal structure");
    d << "D(" << p << "): " << r.structures.size() << " structures, 0 minimal; ";
  }
  const CosetAction d3(ExtensionProblem::galois(dihedral(3)));
  const auto e1 = enumerate_regular_sets(d3);
  const auto e2 = enumerate_by_point_transversal(d3);
  v.require(e1 == e2, "engines disagree at degree 6");
  d << "engines agree at degree 6 (" << e1.size() << ")";
  if (v.pass) v.detail = d.str();
  return v;
}

Verdict ac6() {
  Verdict v;
  const BuiltGroup a4 = build_group(kA4);
  const ExtensionProblem prob(a4.group, *a4.complement);
  const auto r = classify(prob);
  bool klein_minimal = false;
  for (const auto& s : r.structures) klein_minimal |= s.minimal && s.structure.type_name == "E(2,2)";
  v.require(klein_minimal, "no minimal Klein structure");
  const auto comps = normal_complements(prob);
  v.require(comps.size() == 1 && comps[0] == *a4.normal, "normal complements are not {V}");
  const std::size_t bound = minimal_lower_bound(prob);
  v.require(bound == 1, "lower bound " + std::to_string(bound));
  v.require(bound <= r.minimal_count, "bound exceeds minimal count");
  if (v.pass) {
    v.detail = "Klein structure minimal, complements {V}, bound 1 <= minimal " +
               std::to_string(r.minimal_count);
  }
  return v;
}

Verdict minimal_n_structure(const char* expr, const std::string& type, std::size_t order) {
  Verdict v;
  const BuiltGroup b = build_group(expr);
  v.require(b.group.order() == order, "order " + std::to_string(b.group.order()));
  const ExtensionProblem prob(b.group, *b.complement);
  const CosetAction act(prob);
  const HGStructure s = complement_structure(act, *b.normal);
  v.require(is_regular(s.n) && is_normalized_by(s.n, act.generator_images()), "N is not a structure");
  v.require(s.type_name == type, "type " + s.type_name);
  v.require(is_minimal(s), "N structure not minimal");
  bool enumerated = false;
  for (const auto& n : enumerate_regular_sets(act)) enumerated |= n == s.n;
  v.require(enumerated, "N missing from the enumeration");
  if (v.pass) {
    v.detail = "order " + std::to_string(order) + ", degree " + std::to_string(prob.degree()) +
               ", N = " + type + " minimal";
  }
  return v;
}

Verdict ac7() { return minimal_n_structure(kG56, "E(2,3)", 56); }
Verdict ac8() { return minimal_n_structure(kG36, "E(3,2)", 36); }

Verdict ac9() {
  Verdict v;
  v.require(are_isomorphic(holomorph(elementary_abelian(2, 2)).group(), symmetric(4)),
            "Hol(E(2,2)) not isomorphic to S(4)");
  v.require(automorphism_group(elementary_abelian(2, 2)).group.order() == 6, "|Aut(E(2,2))| != 6");
  v.require(holomorph(cyclic(4)).group().order() == 8, "|Hol(C(4))| != 8");
  if (v.pass) v.detail = "Hol(E(2,2)) ~ S(4), |Aut(E(2,2))| = 6, |Hol(C(4))| = 8";
  return v;
}

Verdict ac10() {
  Verdict v;
  for (const auto& n : {symmetric(3), dihedral(4), quaternion(8)}) {
    const Holomorph hol = holomorph(n);
    const GammaSubgroups gamma = gamma_subgroups(hol);
    v.require(!gamma2_conjugation_counterexample(hol), n.name() + ": identity fails");
    v.require(is_normal(gamma.gamma1) && is_normal(gamma.gamma2), n.name() + ": gamma not normal");
    v.require((gamma.gamma1 != gamma.gamma2) == !n.is_abelian(), n.name() + ": distinctness");
  }
  const Holomorph hol = holomorph(alternating(5));
  const GammaSubgroups gamma = gamma_subgroups(hol);
  v.require(hol.group().order() == 7200, "|Hol(A(5))| != 7200");
  v.require(is_normalized_by_generators(hol.group(), gamma.gamma1), "A(5): gamma1 not normal");
  v.require(is_normalized_by_generators(hol.group(), gamma.gamma2), "A(5): gamma2 not normal");
  v.require(gamma.gamma1 != gamma.gamma2, "A(5): gamma1 == gamma2");
  if (v.pass) v.detail = "S(3), D(4), Q(8) exhaustive; A(5) gammas normal in Hol(A(5))";
  return v;
}

Verdict ac11() {
  Verdict v;
  std::vector<ExtensionProblem> problems{
      ExtensionProblem::point_stabilizer(symmetric(4)), ExtensionProblem::point_stabilizer(symmetric(5)),
      ExtensionProblem::point_stabilizer(symmetric(3)), ExtensionProblem::point_stabilizer(symmetric(2)),
      ExtensionProblem::galois(cyclic(8)),              ExtensionProblem::galois(cyclic(2)),
      ExtensionProblem::galois(cyclic(3)),              ExtensionProblem::galois(cyclic(5)),
      ExtensionProblem::galois(cyclic(7)),              ExtensionProblem::galois(dihedral(3)),
      ExtensionProblem::galois(dihedral(5)),            ExtensionProblem::point_stabilizer(dihedral(4)),
      complement_problem(kA4),                          complement_problem(kG56),
      complement_problem(kG36),                         complement_problem("Hol(E(2,2))")};
  std::size_t structures = 0, cross_checked = 0;
  for (const auto& prob : problems) {
    const std::string name = prob.description();
    const CosetAction act(prob);
    const auto r = classify(prob);
    const auto normals = normal_complements(prob);
    for (const auto& e : r.structures) {
      ++structures;
      const auto& s = e.structure;
      v.require(!e.obstruction || !e.minimal, name + ": (a) obstructed yet minimal");
      v.require(!is_prime(s.n.size()) || e.minimal, name + ": (b) prime order not minimal");
      const auto stats = correspondence_stats(prob, s);
      v.require(stats.subhopf_count <= stats.intermediate_count, name + ": (c) subhopf > intermediate");
      v.require(e.minimal == (e.lattice.size() == 2), name + ": (d) minimal vs lattice size");
      if (e.contained_in_lambda) {
        std::vector<Elem> pre;
        for (const auto& p : s.n) pre.push_back(*act.preimage(p));
        const SubgroupRef m(prob.group(), pre);
        v.require(std::find(normals.begin(), normals.end(), m) != normals.end(),
                  name + ": (e) preimage is not a normal complement");
      }
    }
    if (prob.degree() <= 8) {
      ++cross_checked;
      v.require(enumerate_regular_sets(act) == enumerate_by_point_transversal(act),
                name + ": (f) engines disagree");
    }
  }
  if (v.pass) {
    v.detail = std::to_string(problems.size()) + " problems, " + std::to_string(structures) +
               " structures, " + std::to_string(cross_checked) + " cross-checked";
  }
  return v;
}

Verdict ac12() {
  Verdict v;
  const FiniteGroup d4 = dihedral(4);
  const ExtensionProblem prob = ExtensionProblem::point_stabilizer(d4);
  v.require(prob.g_prime().order() == 2 && !prob.g_prime().is_subset_of(center(d4)),
            "G' is not a non-central subgroup of order 2");
  bool cyclic_complement = false;
  for (const auto& m : normal_complements(prob)) cyclic_complement |= iso_type(m.as_group()) == "C(4)";
  v.require(cyclic_complement, "no cyclic normal complement");

  // Brute force over all two-generated subgroups of Sym(4).
  const CosetAction act(prob);
  std::vector<oracle::Images> gens;
  for (const auto& p : act.generator_images()) gens.push_back(p.images());
  const auto brute = oracle::regular_normalized_two_generated(4, gens);
  std::vector<std::string> types;
  for (const auto& s : brute) {
    std::vector<Perm> perms;
    for (const auto& x : s) perms.emplace_back(x);
    types.push_back(iso_type(FiniteGroup::from_perms(PermSet(4, perms, true))));
  }
  const auto r = classify(prob);
  v.require(r.structures.size() == brute.size(), "enumeration disagrees with brute force");
  v.require(r.minimal_count == 0, "a minimal structure exists");
  std::string observed;
  bool all_cyclic = true;
  for (const auto& t : types) {
    observed += (observed.empty() ? "" : ", ") + t;
    all_cyclic &= t == "C(4)";
  }
  v.require(all_cyclic, "not all structures are cyclic-type: brute force finds " + observed);
  if (v.pass) v.detail = std::to_string(brute.size()) + " structures, all C(4), none minimal";
  else v.detail += " (none minimal: " + std::string(r.minimal_count == 0 ? "yes" : "no") + ")";
  return v;
}

struct Criterion {
  int id;
  double limit_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, 1, ac1},   {2, 5, ac2},   {3, 60, ac3},   {4, 10, ac4},  {5, 300, ac5},  {6, 1, ac6},
      {7, 30, ac7},  {8, 60, ac8},  {9, 1, ac9},    {10, 120, ac10}, {11, 600, ac11}, {12, 60, ac12}};
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = Verdict{false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      v.pass = false;
      v.detail += "; exceeded time limit";
    }
    std::printf("AC%-2d %s  %8.3fs (limit %gs)  %s\n", c.id, v.pass ? "PASS" : "FAIL", seconds,
                c.limit_seconds, v.detail.c_str());
    failures += !v.pass;
  }
  return failures == 0 ? 0 : 1;
}
