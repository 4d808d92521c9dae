#include <doctest.h>

#include "hgs/constructions.hpp"
#include "hgs/error.hpp"
#include "hgs/groupspec.hpp"
#include "hgs/minimality.hpp"
#include "hgs/subgroups.hpp"

using namespace hgs;

namespace {

HGStructure structure_for(const CosetAction& act, const PermSet& n) { return make_structure(n, act); }

/// The structure N = λ(G) (Galois case) and N = ρ(G), the right translations.
std::pair<HGStructure, HGStructure> classical_pair(const CosetAction& act) {
  const FiniteGroup& g = act.group();
  std::vector<Perm> rho;
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<Point> images(g.order());
    for (Elem y = 0; y < g.order(); ++y) {
      images[act.point_of(y)] = static_cast<Point>(act.point_of(g.mul(y, g.inv(x))));
    }
    rho.emplace_back(images);
  }
  return {structure_for(act, act.image()),
          structure_for(act, PermSet(g.order(), std::move(rho), true))};
}

}  // namespace

TEST_CASE("stable subgroups of classical structures on S3") {
  const ExtensionProblem prob = ExtensionProblem::galois(symmetric(3));
  const CosetAction act(prob);
  const auto [lambda, rho] = classical_pair(act);
  REQUIRE(is_regular(rho.n));
  REQUIRE(is_normalized_by(rho.n, act.generator_images()));
  // λ(G) acts on itself by conjugation: {1}, A3, S3.
  CHECK(g_stable_subgroups(lambda).size() == 3);
  // ρ(G) commutes with λ(G), so every subgroup is stable.
  CHECK(g_stable_subgroups(rho).size() == 6);
  CHECK(correspondence_stats(prob, rho).subhopf_count == 6);
  CHECK(correspondence_stats(prob, rho).intermediate_count == 6);
}

TEST_CASE("stable subgroups of cyclic structures") {
  const ExtensionProblem prob = ExtensionProblem::galois(cyclic(8));
  const CosetAction act(prob);
  const HGStructure s = structure_for(act, act.image());
  CHECK(g_stable_subgroups(s).size() == 4);
  CHECK(correspondence_stats(prob, s).intermediate_count == 4);
  CHECK_FALSE(is_minimal(s));

  for (std::size_t p : {2, 3, 5, 7}) {
    const CosetAction a(ExtensionProblem::galois(cyclic(p)));
    const HGStructure sp = structure_for(a, a.image());
    CHECK(g_stable_subgroups(sp).size() == 2);
    CHECK(is_minimal(sp));
  }
}

TEST_CASE("both lattice routes agree") {
  for (const auto& prob : {ExtensionProblem::galois(cyclic(8)), ExtensionProblem::galois(quaternion(8)),
                           ExtensionProblem::galois(dihedral(4)), ExtensionProblem::galois(dihedral(5)),
                           ExtensionProblem::point_stabilizer(symmetric(4)),
                           ExtensionProblem::galois(elementary_abelian(2, 3))}) {
    CAPTURE(prob.description());
    const CosetAction act(prob);
    for (const auto& s : enumerate_regular_normalized(act)) {
      const auto a = g_stable_subgroups(s);
      const auto b = g_stable_subgroups_by_orbits(s);
      CHECK(a.stable_subgroups == b.stable_subgroups);
      CHECK(a.stable_subgroups.front().is_trivial());
      CHECK(a.stable_subgroups.back().is_whole());
    }
  }
}

TEST_CASE("characteristic obstruction") {
  const CosetAction c8(ExtensionProblem::galois(cyclic(8)));
  const auto s = structure_for(c8, c8.image());
  const auto obs = characteristic_obstruction(s);
  REQUIRE(obs.has_value());
  CHECK(obs->order() == 4);

  const CosetAction q8(ExtensionProblem::galois(quaternion(8)));
  const auto q = characteristic_obstruction(structure_for(q8, q8.image()));
  REQUIRE(q.has_value());
  CHECK(q->order() == 2);

  const CosetAction s4(ExtensionProblem::point_stabilizer(symmetric(4)));
  const auto v = enumerate_regular_normalized(s4);
  REQUIRE(v.size() == 1);
  CHECK_FALSE(characteristic_obstruction(v[0]).has_value());
  CHECK(is_minimal(v[0]));
}

TEST_CASE("normal complements and the lower bound") {
  const BuiltGroup a4 = build_group("SD(E(2,2), matgrp(2,2,[[[1,1],[1,0]]]))");
  const ExtensionProblem pa4(a4.group, *a4.complement);
  const auto comps = normal_complements(pa4);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == *a4.normal);
  CHECK(minimal_lower_bound(pa4) == 1);

  // Oracle for the bound: none of the order-2 subgroups of V is normal in A4.
  for (const auto& u : all_subgroups(a4.group)) {
    if (u.order() == 2 && u.is_subset_of(*a4.normal)) CHECK_FALSE(is_normal(u));
  }

  const ExtensionProblem s4 = ExtensionProblem::point_stabilizer(symmetric(4));
  CHECK(normal_complements(s4).size() == 1);
  CHECK(minimal_lower_bound(s4) == 1);

  const ExtensionProblem s5 = ExtensionProblem::point_stabilizer(symmetric(5));
  CHECK(normal_complements(s5).empty());

  const ExtensionProblem c8 = ExtensionProblem::galois(cyclic(8));
  REQUIRE(normal_complements(c8).size() == 1);
  CHECK(normal_complements(c8)[0].is_whole());
  CHECK(minimal_lower_bound(c8) == 0);
}

TEST_CASE("holomorph certificate") {
  CHECK(lemma1_certificate(elementary_abelian(2, 2)));
  CHECK(lemma1_certificate(elementary_abelian(3, 2)));
  CHECK(lemma1_certificate(cyclic(5)));
  CHECK(lemma1_certificate(elementary_abelian(2, 3)));
  CHECK(lemma1_certificate(alternating(5)));
  CHECK_THROWS_AS(lemma1_certificate(cyclic(4)), InvalidArgument);
  CHECK_THROWS_AS(lemma1_certificate(symmetric(3)), InvalidArgument);

  const BuiltGroup g56 = build_group("SD(E(2,3), matgrp(2,3,[[[1,1,1],[1,1,0],[1,0,0]]]))");
  const BuiltGroup g36 = build_group("SD(E(3,2), matgrp(3,2,[[[0,1],[-1,0]]]))");
  for (const auto* b : {&g56, &g36}) {
    const ExtensionProblem prob(b->group, *b->complement);
    const CosetAction act(prob);
    CHECK(is_minimal(complement_structure(act, *b->normal)));
  }
}

TEST_CASE("is_minimal rejects the trivial structure") {
  const CosetAction act(ExtensionProblem::galois(cyclic(2)));
  HGStructure s = structure_for(act, act.image());
  s.n = PermSet(2, {Perm::identity(2)}, true);
  CHECK_THROWS_AS(is_minimal(s), InvalidArgument);
}

TEST_CASE("classification reports") {
  const auto s3 = classify(ExtensionProblem::point_stabilizer(symmetric(3)));
  REQUIRE(s3.structures.size() == 1);
  CHECK(s3.structures[0].structure.type_name == "C(3)");
  CHECK(s3.structures[0].minimal);

  const auto s5 = classify(ExtensionProblem::point_stabilizer(symmetric(5)));
  CHECK(s5.structures.empty());
  CHECK(s5.minimal_count == 0);

  const BuiltGroup g36 = build_group("SD(E(3,2), matgrp(3,2,[[[0,1],[-1,0]]]))");
  const auto r36 = classify(ExtensionProblem(g36.group, *g36.complement));
  bool found = false;
  for (const auto& e : r36.structures) found = found || (e.minimal && e.structure.type_name == "E(3,2)");
  CHECK(found);
  CHECK(r36.degree == 9);

  const auto c8 = classify(ExtensionProblem::galois(cyclic(8)));
  for (std::size_t i = 1; i < c8.structures.size(); ++i) {
    const auto& a = c8.structures[i - 1].structure;
    const auto& b = c8.structures[i].structure;
    CHECK((a.type_name < b.type_name || (a.type_name == b.type_name && a.n < b.n)));
  }
}

TEST_CASE("theorem properties across problems") {
  const BuiltGroup g56 = build_group("SD(E(2,3), matgrp(2,3,[[[1,1,1],[1,1,0],[1,0,0]]]))");
  std::vector<ExtensionProblem> problems{
      ExtensionProblem::galois(cyclic(8)),      ExtensionProblem::galois(quaternion(8)),
      ExtensionProblem::galois(dihedral(3)),    ExtensionProblem::point_stabilizer(alternating(4)),
      ExtensionProblem::galois(cyclic(7)),      ExtensionProblem::point_stabilizer(symmetric(4)),
      ExtensionProblem::point_stabilizer(dihedral(4)), ExtensionProblem(g56.group, *g56.complement)};
  for (const auto& prob : problems) {
    CAPTURE(prob.description());
    const auto report = classify(prob);
    CHECK(report.minimal_count >= report.normal_complement_bound);
    std::size_t minimal = 0;
    for (const auto& e : report.structures) {
      CHECK(e.lattice.size() >= 2);
      CHECK(e.lattice.size() <= report.intermediate_count);
      CHECK(e.minimal == (e.lattice.size() == 2));
      if (e.obstruction) CHECK_FALSE(e.minimal);
      if (is_prime(e.structure.n.size())) CHECK(e.minimal);
      minimal += e.minimal;
    }
    CHECK(minimal == report.minimal_count);
  }
}
