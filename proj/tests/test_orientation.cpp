#include <doctest.h>

#include "oracle.hpp"
#include "symj/catalog.hpp"
#include "symj/involution.hpp"
#include "symj/orientation.hpp"

using namespace symj;

TEST_SUITE("orientation") {

TEST_CASE("counts") {
  auto c2 = catalog_group("C2");
  auto c3 = catalog_group("C3");
  CHECK(enumerate_orientations(c2, ring_from_token("z4")).size() == 1);
  CHECK(enumerate_orientations(c2, ring_from_token("z8")).size() == 3);
  CHECK(enumerate_orientations(c3, ring_from_token("z4")).empty());
  CHECK(enumerate_orientations(c3, ring_from_token("z4"), true).size() == 1);
}

TEST_CASE("enumeration equals brute force over z/n") {
  for (const auto& g : builtin_catalog({8, false}))
    for (int n : {3, 4, 5, 8}) {
      CAPTURE(g->label());
      CAPTURE(n);
      RingPtr r = ring_from_token("z" + std::to_string(n));
      std::vector<std::vector<Scalar>> got;
      for (const auto& s : enumerate_orientations(g, r, true)) got.push_back(s.values());
      CHECK(got == oracle::homs_to_units(g->table(), n));
    }
}

TEST_CASE("kernel and C") {
  auto c4 = catalog_group("C4");
  Orientation s(c4, ring_from_token("z8"), {1, 3, 1, 3});
  CHECK(s.kernel().members() == std::vector<Elem>{0, 2});
  CHECK(s.subgroup_c().members() == std::vector<Elem>{0, 2});
  Orientation t(c4, ring_from_token("z4"), {1, 3, 1, 3});
  CHECK(t.subgroup_c().size() == 4);
  CHECK(t.is_minus_one(1));
  CHECK_FALSE(t.is_trivial());
  CHECK_THROWS_AS(Orientation(c4, ring_from_token("z8"), {1, 3, 3, 3}), InvalidOrientation);
  CHECK_THROWS_AS(Orientation(c4, ring_from_token("z8"), {1, 2, 4, 0}), InvalidOrientation);
}

TEST_CASE("compatibility against x tau(x) in the kernel") {
  for (const auto& g : builtin_catalog({8, false}))
    for (const char* tok : {"z4", "z8", "z4xz2"}) {
      RingPtr r = ring_from_token(tok);
      for (const auto& tau : enumerate_involutions(g))
        for (const auto& s : enumerate_orientations(g, r)) {
          bool expected = true;
          for (Elem x = 0; x < g->order(); ++x) expected = expected && s(g->mul(x, tau(x))) == r->one();
          CHECK(is_compatible(tau, s) == expected);
          if (expected)
            for (Elem x = 0; x < g->order(); ++x) CHECK(r->mul(s(tau(x)), s(x)) == r->one());
        }
    }
}

TEST_CASE("incompatible example") {
  // tau = Id on C4 over z5, sigma(a) = 2: a tau(a) = a^2 has sigma 4.
  auto c4 = catalog_group("C4");
  GroupInvolution id(c4, {0, 1, 2, 3});
  CHECK_FALSE(is_compatible(id, Orientation(c4, ring_from_token("z5"), {1, 2, 4, 3})));
  CHECK(is_compatible(GroupInvolution::inversion(c4), Orientation(c4, ring_from_token("z5"), {1, 2, 4, 3})));
}

}  // TEST_SUITE
