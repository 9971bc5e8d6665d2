#include <doctest.h>

#include <fstream>
#include <numeric>
#include <set>

#include "symj/ring.hpp"

using namespace symj;

TEST_SUITE("ring") {

TEST_CASE("z/n against integer arithmetic") {
  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    FiniteRing r = build_zmod(n);
    CHECK(r.characteristic() == n);
    CHECK(r.minus_one() == n - 1);
    std::vector<Scalar> units, torsion;
    for (int a = 0; a < n; ++a) {
      if (std::gcd(a, n) == 1) units.push_back(a);
      if (2 * a % n == 0) torsion.push_back(a);
      for (int b = 0; b < n; ++b) {
        CHECK(r.add(a, b) == (a + b) % n);
        CHECK(r.mul(a, b) == a * b % n);
      }
      // Ann(v) in Z/n is the multiples of n / gcd(v, n).
      std::vector<Scalar> ann;
      const int step = n / std::gcd(a, n);
      for (int k = 0; k < n; k += step) ann.push_back(k);
      CHECK(r.annihilator(a).members == ann);
      CHECK(r.ideal_span(r.annihilator(a).generators) == ann);
    }
    CHECK(r.units() == units);
    CHECK(r.two_torsion() == torsion);
    for (Scalar u : units) CHECK(r.mul(u, r.unit_inverse(u)) == r.one());
  }
}

TEST_CASE("named examples") {
  FiniteRing z4 = build_zmod(4);
  CHECK(z4.units() == std::vector<Scalar>{1, 3});
  CHECK(z4.two_torsion() == std::vector<Scalar>{0, 2});
  CHECK(z4.annihilator(2).members == std::vector<Scalar>{0, 2});
  CHECK(z4.annihilator(2).generators == std::vector<Scalar>{2});
  CHECK(z4.annihilator(0).members.size() == 4);
  CHECK(z4.annihilator(1).members == std::vector<Scalar>{0});
  CHECK(z4.from_int(-1) == 3);
  CHECK(z4.times(6, 1) == 2);
  CHECK(z4.principal_ideal(2) == std::vector<Scalar>{0, 2});
}

TEST_CASE("products and dual numbers") {
  FiniteRing p = product_ring(build_zmod(4), build_zmod(2));
  CHECK(p.size() == 8);
  CHECK(p.characteristic() == 4);
  CHECK(p.units().size() == 2);
  CHECK(p.two_torsion().size() == 4);

  FiniteRing q = product_ring(build_zmod(4), build_zmod(3));
  CHECK(q.characteristic() == 12);

  FiniteRing d = dual_numbers(build_zmod(4));
  CHECK(d.size() == 16);
  CHECK(d.characteristic() == 4);
  // p + q u is a unit iff p is odd.
  CHECK(d.units().size() == 8);
  const Scalar u = 1;  // 0 + 1 u
  CHECK(d.mul(u, u) == d.zero());
  CHECK(d.annihilator(u).members.size() == 4);
}

TEST_CASE("annihilators are ideals over every catalog ring") {
  for (const char* tok : {"z4", "z8", "z4xz4", "z4xz2", "dual-z4", "z6", "z2xz3"}) {
    CAPTURE(tok);
    RingPtr r = ring_from_token(tok);
    for (Scalar v = 0; v < r->size(); ++v) {
      const auto ann = r->annihilator(v);
      std::set<Scalar> members(ann.members.begin(), ann.members.end());
      for (Scalar a = 0; a < r->size(); ++a) CHECK(members.count(a) == (r->mul(a, v) == r->zero()));
      for (Scalar a : ann.members) {
        for (Scalar b : ann.members) CHECK(members.count(r->add(a, b)));
        for (Scalar c = 0; c < r->size(); ++c) CHECK(members.count(r->mul(c, a)));
      }
      CHECK(r->ideal_span(ann.generators) == ann.members);
    }
  }
}

TEST_CASE("tokens") {
  CHECK(ring_from_token("z4xz4")->size() == 16);
  CHECK(ring_from_token("dual-z4")->label() == "dual-z4");
  CHECK(ring_from_token("z2xz2xz2")->size() == 8);
  CHECK_THROWS_AS(ring_from_token("z1"), std::invalid_argument);
  CHECK_THROWS_AS(ring_from_token("q4"), std::invalid_argument);
  CHECK_THROWS_AS(ring_from_token("z65"), std::invalid_argument);
}

TEST_CASE("table files") {
  const std::string path = "ring_f4_test.json";
  {
    // F4 = {0, 1, w, w+1}
    std::ofstream f(path);
    f << R"({"size": 4,
      "add": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]],
      "mul": [[0,0,0,0],[0,1,2,3],[0,2,3,1],[0,3,1,2]],
      "names": ["0","1","w","w+1"]})";
  }
  RingPtr f4 = ring_from_token(path);
  CHECK(f4->characteristic() == 2);
  CHECK(f4->units().size() == 3);
  CHECK(f4->name(2) == "w");
  std::remove(path.c_str());
}

TEST_CASE("axiom violations") {
  // Addition that is not associative.
  CHECK_THROWS_AS(FiniteRing::from_tables({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}},
                                          {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}),
                  NotARing);
  // Noncommutative multiplication.
  CHECK_THROWS_AS(FiniteRing::from_tables({{0, 1}, {1, 0}}, {{0, 1}, {0, 1}}), NotARing);
}

}  // TEST_SUITE
