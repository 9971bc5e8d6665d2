#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "symj/catalog.hpp"
#include "symj/checker.hpp"
#include "symj/classifier.hpp"

using namespace symj;

namespace {

struct Relabeled {
  GroupPtr g;
  GroupInvolution tau;
  Orientation sigma;
};

// Conjugates the whole instance by a random permutation p of the element indices.
Relabeled relabel(const GroupInvolution& tau, const Orientation& s, std::mt19937& rng) {
  const Group& g = tau.group();
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[p[x]][p[y]] = p[g.mul(x, y)];
  auto h = std::make_shared<const Group>(Group::from_table(t));
  std::vector<Elem> m(n);
  std::vector<Scalar> v(n);
  for (int x = 0; x < n; ++x) {
    m[p[x]] = p[tau(x)];
    v[p[x]] = s(x);
  }
  return {h, GroupInvolution(h, m), Orientation(h, s.ring_ptr(), v)};
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("IA over z4, z3, z8") {
  auto c2 = catalog_group("C2");
  GroupInvolution id(c2, {0, 1});
  auto r4 = theorem_predicate(id, Orientation(c2, ring_from_token("z4"), {1, 3}));
  CHECK(r4.structure.tag == StructureTag::IA);
  CHECK(r4.ring_conditions.all());
  CHECK(r4.predicate);
  CHECK(r4.gp14 == Gp14Tag::A);

  auto r3 = theorem_predicate(id, Orientation(c2, ring_from_token("z3"), {1, 2}));
  CHECK(r3.structure.tag == StructureTag::IA);
  CHECK_FALSE(r3.ring_conditions.symmetric_pairs);
  CHECK_FALSE(r3.predicate);

  auto r8 = theorem_predicate(id, Orientation(c2, ring_from_token("z8"), {1, 7}));
  CHECK(r8.predicate);
  CHECK(r8.gp14 == Gp14Tag::A);
}

TEST_CASE("IB1: C4 with inversion") {
  auto c4 = catalog_group("C4");
  auto inv = GroupInvolution::inversion(c4);
  Orientation s4(c4, ring_from_token("z4"), {1, 3, 1, 3});
  auto sc = classify_structure(inv, s4);
  CHECK(sc.tag == StructureTag::IB1);
  REQUIRE(sc.s);
  CHECK(*sc.s == 2);
  CHECK(theorem_predicate(inv, s4).predicate);
  CHECK(theorem_predicate(inv, s4).gp14 == Gp14Tag::B);

  auto r8 = theorem_predicate(inv, Orientation(c4, ring_from_token("z8"), {1, 3, 1, 3}));
  CHECK_FALSE(r8.predicate);
  CHECK_FALSE(r8.ring_conditions.nonsymmetric_pairs);
}

TEST_CASE("D4 with inversion is IB2 with s = r^2 whenever compatible") {
  auto d4 = catalog_group("D4");
  auto inv = GroupInvolution::inversion(d4);
  const Elem r2 = d4->find("r^2");
  int seen = 0;
  for (const char* tok : {"z4", "z8", "z4xz2"})
    for (const auto& s : enumerate_orientations(d4, ring_from_token(tok))) {
      if (!is_compatible(inv, s)) continue;
      ++seen;
      auto sc = classify_structure(inv, s);
      CHECK(sc.tag == StructureTag::IB2);
      CHECK(sc.s == r2);
    }
  CHECK(seen > 0);
}

TEST_CASE("ring conditions are vacuous off the symmetric pairs when tau = Id") {
  for (const auto& g : builtin_catalog({8, false})) {
    if (!g->is_abelian()) continue;
    std::vector<Elem> idm(g->order());
    std::iota(idm.begin(), idm.end(), 0);
    GroupInvolution id(g, idm);
    for (const auto& s : enumerate_orientations(g, ring_from_token("z4"))) {
      auto rc = check_ring_conditions(id, s);
      CHECK(rc.nonsymmetric_pairs);
      CHECK(rc.mixed_pairs);
    }
  }
}

TEST_CASE("predicate is the conjunction of its parts") {
  for (const auto& g : builtin_catalog({8, false}))
    for (const char* tok : {"z4", "z8", "z4xz2", "z5"}) {
      RingPtr r = ring_from_token(tok);
      for (const auto& tau : enumerate_involutions(g))
        for (const auto& s : enumerate_orientations(g, r)) {
          if (!is_compatible(tau, s)) continue;
          auto res = theorem_predicate(tau, s);
          const int ch = r->characteristic();
          const bool gate = (res.structure.tag == StructureTag::IA && (ch == 4 || ch == 8)) ||
                            (res.structure.tag != StructureTag::IA &&
                             res.structure.tag != StructureTag::None && ch == 4);
          CHECK(res.predicate == (gate && res.ring_conditions.all()));
          if (res.structure.tag == StructureTag::IA) {
            CHECK(g->is_abelian());
            CHECK(tau.is_identity());
          }
        }
    }
}

TEST_CASE("characteristic two is rejected") {
  // F4 has units of order 3, so C3 has nontrivial orientations into it.
  auto c3 = catalog_group("C3");
  auto f4 = std::make_shared<const FiniteRing>(FiniteRing::from_tables(
      {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
      {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}));
  auto orients = enumerate_orientations(c3, f4);
  REQUIRE_FALSE(orients.empty());
  auto inv = GroupInvolution::inversion(c3);
  REQUIRE(is_compatible(inv, orients[0]));
  CHECK_THROWS_AS(theorem_predicate(inv, orients[0]), CharTwoRejected);
}

TEST_CASE("structure tag is invariant under relabeling") {
  std::mt19937 rng(2024);
  for (const auto& g : builtin_catalog())
    for (const char* tok : {"z4", "z4xz2"}) {
      RingPtr r = ring_from_token(tok);
      const auto invs = enumerate_involutions(g);
      for (std::size_t k = 0; k < invs.size(); k += 1 + invs.size() / 6)
        for (const auto& s : enumerate_orientations(g, r)) {
          if (!is_compatible(invs[k], s)) continue;
          const auto before = classify_structure(invs[k], s);
          auto rl = relabel(invs[k], s, rng);
          const auto after = classify_structure(rl.tau, rl.sigma);
          CHECK_MESSAGE(before.tag == after.tag, g->label());
          CHECK(theorem_predicate(invs[k], s).predicate == theorem_predicate(rl.tau, rl.sigma).predicate);
        }
    }
}

TEST_CASE("gp14 on C") {
  auto c4 = catalog_group("C4");
  std::vector<Elem> idm{0, 1, 2, 3};
  GroupInvolution id(c4, idm);
  CHECK(gp14_predicate(id, Orientation(c4, ring_from_token("z8"), {1, 7, 1, 7})) == Gp14Tag::A);
  CHECK(gp14_predicate(id, Orientation(c4, ring_from_token("z4"), {1, 3, 1, 3})) == Gp14Tag::A);

  auto d4 = catalog_group("D4");
  auto inv = GroupInvolution::inversion(d4);
  for (const auto& s : enumerate_orientations(d4, ring_from_token("z4"))) {
    if (!is_compatible(inv, s)) continue;
    // Over z4 every unit is +-1 so C = G; R2 = {0, 2} squares to zero.
    CHECK(s.subgroup_c().size() == 8);
    CHECK(gp14_predicate(inv, s) == Gp14Tag::C);
  }
  CHECK(to_string(Gp14Tag::C) == "GP14-C");
  CHECK(to_string(StructureTag::IB3) == "IB3");
}

TEST_CASE("two-commutator diagnosis") {
  CHECK(ib3_conditions().size() == 11);
  auto d4 = catalog_group("D4");
  auto inv = GroupInvolution::inversion(d4);
  for (const auto& s : enumerate_orientations(d4, ring_from_token("z4"))) {
    if (!is_compatible(inv, s)) continue;
    auto d = diagnose_ib3(inv, s);
    CHECK_FALSE(d.satisfied);
    CHECK_FALSE(d.first_failing.empty());
    CHECK(std::find(ib3_conditions().begin(), ib3_conditions().end(), d.first_failing) !=
          ib3_conditions().end());
  }
}

}  // TEST_SUITE
