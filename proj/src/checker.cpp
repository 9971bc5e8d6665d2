#include "symj/checker.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <sstream>

#include <omp.h>

namespace symj {

namespace {

struct Term {
  Elem x;
  Scalar c;
};

std::vector<Term> sparse(const GroupRingElement& a) {
  std::vector<Term> t;
  for (Elem x : a.support()) t.push_back({x, a[x]});
  return t;
}

// ab + ba == 0, accumulated over the (small) product support.
bool jordan_vanishes(const Group& g, const FiniteRing& r, const std::vector<Term>& a,
                     const std::vector<Term>& b, std::vector<Term>& acc) {
  acc.clear();
  auto accumulate = [&](Elem z, Scalar c) {
    for (Term& t : acc)
      if (t.x == z) {
        t.c = r.add(t.c, c);
        return;
      }
    acc.push_back({z, c});
  };
  for (const Term& p : a)
    for (const Term& q : b) {
      const Scalar c = r.mul(p.c, q.c);
      accumulate(g.mul(p.x, q.x), c);
      accumulate(g.mul(q.x, p.x), c);
    }
  return std::all_of(acc.begin(), acc.end(), [&](const Term& t) { return t.c == r.zero(); });
}

Verdict make_failure(const std::vector<GroupRingElement>& gens, std::size_t i, std::size_t j) {
  Verdict v;
  v.holds = false;
  v.witness = JordanWitness{i, j, gens[i], gens[j], jordan(gens[i], gens[j])};
  return v;
}

}  // namespace

Verdict check_anticommutative(const SymmetricGenerators& gens) { return check_anticommutative(gens.all()); }

Verdict check_anticommutative(const std::vector<GroupRingElement>& gens) {
  if (gens.empty()) return {};
  const Group& g = gens.front().group();
  const FiniteRing& r = gens.front().ring();
  std::vector<std::vector<Term>> sp;
  sp.reserve(gens.size());
  for (const auto& e : gens) sp.push_back(sparse(e));
  std::vector<Term> acc;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!jordan_vanishes(g, r, sp[i], sp[i], acc)) return make_failure(gens, i, i);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!jordan_vanishes(g, r, sp[i], sp[j], acc)) return make_failure(gens, i, j);
  return {};
}

Verdict check_anticommutative_parallel(const std::vector<GroupRingElement>& gens) {
  if (gens.empty()) return {};
  const Group& g = gens.front().group();
  const FiniteRing& r = gens.front().ring();
  const long n = static_cast<long>(gens.size());
  std::vector<std::vector<Term>> sp(gens.size());
  for (long i = 0; i < n; ++i) sp[i] = sparse(gens[i]);
  {
    std::vector<Term> acc;
    for (long i = 0; i < n; ++i)
      if (!jordan_vanishes(g, r, sp[i], sp[i], acc))
        return make_failure(gens, static_cast<std::size_t>(i), static_cast<std::size_t>(i));
  }

  // Smallest failing row; within that row the serial scan recovers the first column.
  long first_row = LONG_MAX;
#pragma omp parallel
  {
    std::vector<Term> acc;
#pragma omp for schedule(dynamic, 4) reduction(min : first_row)
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j < n; ++j)
        if (!jordan_vanishes(g, r, sp[i], sp[j], acc)) {
          first_row = std::min(first_row, i);
          break;
        }
  }
  if (first_row == LONG_MAX) return {};
  std::vector<Term> acc;
  for (long j = first_row + 1; j < n; ++j)
    if (!jordan_vanishes(g, r, sp[first_row], sp[j], acc))
      return make_failure(gens, static_cast<std::size_t>(first_row), static_cast<std::size_t>(j));
  return {};
}

bool LemmaReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.holds; });
}

const LemmaCheck* LemmaReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{
      "char-four-or-eight",     "nonidentity-star-char-four", "commuting-transfers-to-star",
      "nonsymmetric-products",  "nonsymmetric-squares-commute", "symmetric-conjugation",
      "symmetric-coefficients", "star-quotient-central",      "star-quotient-product-rule",
      "nonsymmetric-pair-cases"};
  return ids;
}

namespace {

// Shared context for the lemma checks.
struct Ctx {
  const Group& g;
  const FiniteRing& r;
  const GroupInvolution& tau;
  const Orientation& sigma;
  ElementSet sym;     // G_*
  ElementSet center;  // Z(G)
  std::vector<Elem> nonsym;

  Elem star(Elem x) const { return tau(x); }
  Elem m(Elem x, Elem y) const { return g.mul(x, y); }
  Elem comm(Elem x, Elem y) const { return g.commutator(x, y); }
  // c_x = x* x^-1
  Elem cx(Elem x) const { return g.mul(tau(x), g.inv(x)); }
  Scalar s(Elem x) const { return sigma(x); }
  Scalar two(Scalar a) const { return r.add(a, a); }
  bool zero(Scalar a) const { return a == r.zero(); }
  std::string pair(Elem x, Elem y) const { return "x=" + g.name(x) + ", y=" + g.name(y); }
};

class Recorder {
 public:
  Recorder(std::string id, std::string statement) : check_{std::move(id), std::move(statement), true, {}} {}
  // Records the first failure only.
  void require(bool cond, const std::string& where, const std::string& what) {
    if (cond || !check_.holds) return;
    check_.holds = false;
    check_.counterexample = where + ": " + what;
  }
  LemmaCheck done() { return std::move(check_); }

 private:
  LemmaCheck check_;
};

LemmaCheck char_four_or_eight(const Ctx& c) {
  Recorder rec("char-four-or-eight", "char(R) is 4 or 8");
  const int ch = c.r.characteristic();
  rec.require(ch == 4 || ch == 8, "R", "characteristic " + std::to_string(ch));
  return rec.done();
}

LemmaCheck nonidentity_star(const Ctx& c) {
  Recorder rec("nonidentity-star-char-four",
               "if * != Id: char(R) = 4 and for x not in G_*: x x* = x* x, x^2 in G_*");
  if (c.tau.is_identity()) return rec.done();
  rec.require(c.r.characteristic() == 4, "R", "characteristic " + std::to_string(c.r.characteristic()));
  for (Elem x : c.nonsym) {
    const std::string w = "x=" + c.g.name(x);
    rec.require(c.m(x, c.star(x)) == c.m(c.star(x), x), w, "x x* != x* x");
    rec.require(c.sym.contains(c.m(x, x)), w, "x^2 not symmetric");
  }
  return rec.done();
}

LemmaCheck commuting_transfers(const Ctx& c) {
  Recorder rec("commuting-transfers-to-star",
               "xy = yx iff x* y = y x*; for x, y not in G_* commuting: xy = yx = x*y* = y*x*, "
               "xy* = y*x = x*y = yx*, 2(1 + s(xy)) = 2(s(x) + s(y)) = 0");
  const int n = c.g.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      rec.require(c.g.commute(x, y) == c.g.commute(c.star(x), y), c.pair(x, y), "commutation not transferred to x*");
  for (Elem x : c.nonsym)
    for (Elem y : c.nonsym) {
      if (!c.g.commute(x, y)) continue;
      const Elem xs = c.star(x), ys = c.star(y);
      const std::string w = c.pair(x, y);
      const Elem xy = c.m(x, y);
      rec.require(xy == c.m(xs, ys) && xy == c.m(ys, xs), w, "xy != x*y* or y*x*");
      const Elem xys = c.m(x, ys);
      rec.require(xys == c.m(ys, x) && xys == c.m(xs, y) && xys == c.m(y, xs), w, "xy*, y*x, x*y, yx* differ");
      rec.require(c.zero(c.two(c.r.add(c.r.one(), c.s(xy)))), w, "2(1 + s(xy)) != 0");
      rec.require(c.zero(c.two(c.r.add(c.s(x), c.s(y)))), w, "2(s(x) + s(y)) != 0");
    }
  return rec.done();
}

LemmaCheck nonsymmetric_products(const Ctx& c) {
  Recorder rec("nonsymmetric-products",
               "for x, y not in G_*: xy in {yx, yx*, y*x, x*y*}; xy = yx iff xy in G_*; "
               "xy = yx* iff x*y = yx");
  for (Elem x : c.nonsym)
    for (Elem y : c.nonsym) {
      const Elem xs = c.star(x), ys = c.star(y), xy = c.m(x, y);
      const std::string w = c.pair(x, y);
      rec.require(xy == c.m(y, x) || xy == c.m(y, xs) || xy == c.m(ys, x) || xy == c.m(xs, ys), w,
                  "xy outside {yx, yx*, y*x, x*y*}");
      rec.require((xy == c.m(y, x)) == c.sym.contains(xy), w, "xy = yx does not match xy in G_*");
      rec.require((xy == c.m(y, xs)) == (c.m(xs, y) == c.m(y, x)), w, "xy = yx* does not match x*y = yx");
    }
  return rec.done();
}

LemmaCheck nonsymmetric_squares(const Ctx& c) {
  Recorder rec("nonsymmetric-squares-commute", "(x^2, y) = 1 for x, y not in G_*");
  for (Elem x : c.nonsym)
    for (Elem y : c.nonsym)
      rec.require(c.comm(c.m(x, x), y) == c.g.identity(), c.pair(x, y), "(x^2, y) != 1");
  return rec.done();
}

LemmaCheck symmetric_conjugation(const Ctx& c) {
  Recorder rec("symmetric-conjugation",
               "for y in G_*, x not in G_*, a y in S: x^y in {x, x*}; xy in G_* iff xy != yx; "
               "a(1 + s(x)) = 0 if xy != yx, 2a = 0 otherwise; (x, y^2) = (x^2, y) = (x x*, y) = 1");
  const Elem e = c.g.identity();
  for (Elem y : c.sym.members()) {
    const std::vector<Scalar> adm = admissible_coefficients(c.tau, c.sigma, y);
    for (Elem x : c.nonsym) {
      const std::string w = c.pair(x, y);
      const Elem conj = c.g.conjugate(x, y);
      const bool commuting = c.g.commute(x, y);
      rec.require(conj == x || conj == c.star(x), w, "x^y not in {x, x*}");
      rec.require(c.sym.contains(c.m(x, y)) == !commuting, w, "xy in G_* does not match xy != yx");
      for (Scalar a : adm) {
        const Scalar lhs = commuting ? c.two(a) : c.r.mul(a, c.r.add(c.r.one(), c.s(x)));
        rec.require(c.zero(lhs), w + ", a=" + c.r.name(a),
                    commuting ? "2a != 0" : "a(1 + s(x)) != 0");
      }
      rec.require(c.comm(x, c.m(y, y)) == e, w, "(x, y^2) != 1");
      rec.require(c.comm(c.m(x, x), y) == e, w, "(x^2, y) != 1");
      rec.require(c.comm(c.m(x, c.star(x)), y) == e, w, "(x x*, y) != 1");
    }
  }
  return rec.done();
}

LemmaCheck symmetric_coefficients(const Ctx& c) {
  Recorder rec("symmetric-coefficients",
               "for x, y in G_*, a x, b y in S: xy = yx iff xy in G_*; ab = 0 if xy != yx, "
               "2ab = 0 otherwise; (x, y^2) = (x^2, y) = 1");
  const Elem e = c.g.identity();
  for (Elem x : c.sym.members()) {
    const std::vector<Scalar> ax = admissible_coefficients(c.tau, c.sigma, x);
    for (Elem y : c.sym.members()) {
      const std::vector<Scalar> by = admissible_coefficients(c.tau, c.sigma, y);
      const std::string w = c.pair(x, y);
      const bool commuting = c.g.commute(x, y);
      rec.require(commuting == c.sym.contains(c.m(x, y)), w, "xy = yx does not match xy in G_*");
      for (Scalar a : ax)
        for (Scalar b : by) {
          const Scalar ab = c.r.mul(a, b);
          rec.require(c.zero(commuting ? c.two(ab) : ab), w + ", a=" + c.r.name(a) + ", b=" + c.r.name(b),
                      commuting ? "2ab != 0" : "ab != 0");
        }
      rec.require(c.comm(x, c.m(y, y)) == e, w, "(x, y^2) != 1");
      rec.require(c.comm(c.m(x, x), y) == e, w, "(x^2, y) != 1");
    }
  }
  return rec.done();
}

LemmaCheck star_quotient_central(const Ctx& c) {
  Recorder rec("star-quotient-central", "c_x = x* x^-1 is central for every x");
  for (Elem x = 0; x < c.g.order(); ++x)
    rec.require(c.center.contains(c.cx(x)), "x=" + c.g.name(x), "c_x not central");
  return rec.done();
}

LemmaCheck star_quotient_product_rule(const Ctx& c) {
  Recorder rec("star-quotient-product-rule",
               "x* = c_x x with c_x in G_* and Z(G), c_x^2 = 1; (x, y) in G_* with (x, y)^2 = 1; "
               "c_xy = c_x c_y (x, y), and c_xy in {c_x, c_y, (x, y)} when (x, y) != 1");
  const Elem e = c.g.identity();
  const int n = c.g.order();
  for (Elem x = 0; x < n; ++x) {
    const Elem cx = c.cx(x);
    const std::string w = "x=" + c.g.name(x);
    rec.require(c.star(x) == c.m(cx, x), w, "x* != c_x x");
    rec.require(c.sym.contains(cx) && c.center.contains(cx), w, "c_x not in G_* and Z(G)");
    rec.require(c.m(cx, cx) == e, w, "c_x^2 != 1");
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const std::string w = c.pair(x, y);
      const Elem k = c.comm(x, y);
      rec.require(c.sym.contains(k), w, "(x, y) not symmetric");
      rec.require(c.m(k, k) == e, w, "(x, y)^2 != 1");
      const Elem cxy = c.cx(c.m(x, y));
      rec.require(cxy == c.m(c.m(c.cx(x), c.cx(y)), k), w, "c_xy != c_x c_y (x, y)");
      if (k != e) rec.require(cxy == c.cx(x) || cxy == c.cx(y) || cxy == k, w, "c_xy not in {c_x, c_y, (x, y)}");
    }
  return rec.done();
}

LemmaCheck nonsymmetric_pair_cases(const Ctx& c) {
  Recorder rec("nonsymmetric-pair-cases",
               "for x, y not in G_*: if (x, y) = 1 then c_x = c_y and 2(1 + s(xy)) = 0 = 2(s(x) + s(y)); "
               "otherwise one of: (x,y) = c_x = c_y = c_xy with 1 + s(x) + s(y) + s(xy) = 0; "
               "(x,y) = c_x != c_y = c_xy with s(x) = -1; (x,y) = c_y != c_x = c_xy with s(y) = -1; "
               "(x,y) = c_xy != c_x = c_y with s(xy) = -1 and s(x) = -s(y)");
  const FiniteRing& r = c.r;
  const Scalar minus_one = r.minus_one();
  for (Elem x : c.nonsym)
    for (Elem y : c.nonsym) {
      const std::string w = c.pair(x, y);
      const Elem k = c.comm(x, y), xy = c.m(x, y);
      const Elem cx = c.cx(x), cy = c.cx(y), cxy = c.cx(xy);
      if (k == c.g.identity()) {
        rec.require(cx == cy, w, "commuting pair with c_x != c_y");
        rec.require(c.zero(c.two(r.add(r.one(), c.s(xy)))), w, "2(1 + s(xy)) != 0");
        rec.require(c.zero(c.two(r.add(c.s(x), c.s(y)))), w, "2(s(x) + s(y)) != 0");
        continue;
      }
      const bool case_a = k == cx && cx == cy && cy == cxy &&
                          c.zero(r.add(r.add(r.one(), c.s(x)), r.add(c.s(y), c.s(xy))));
      const bool case_b = k == cx && cx != cy && cy == cxy && c.s(x) == minus_one;
      const bool case_c = k == cy && cy != cx && cx == cxy && c.s(y) == minus_one;
      const bool case_d = k == cxy && cxy != cx && cx == cy && c.s(xy) == minus_one &&
                          c.s(x) == r.neg(c.s(y));
      rec.require(case_a || case_b || case_c || case_d, w, "noncommuting pair matches none of the four cases");
    }
  return rec.done();
}

}  // namespace

LemmaReport check_lemma_suite(const GroupInvolution& tau, const Orientation& sigma,
                              const SymmetricGenerators& gens) {
  if (!check_anticommutative(gens).holds)
    throw HypothesisNotMet("lemma suite requires an anticommuting symmetric span");
  const Group& g = sigma.group();
  Ctx c{g, sigma.ring(), tau, sigma, symmetric_set(tau), g.center(), {}};
  for (Elem x = 0; x < g.order(); ++x)
    if (!c.sym.contains(x)) c.nonsym.push_back(x);

  LemmaReport report;
  report.checks.push_back(char_four_or_eight(c));
  report.checks.push_back(nonidentity_star(c));
  report.checks.push_back(commuting_transfers(c));
  report.checks.push_back(nonsymmetric_products(c));
  report.checks.push_back(nonsymmetric_squares(c));
  report.checks.push_back(symmetric_conjugation(c));
  report.checks.push_back(symmetric_coefficients(c));
  report.checks.push_back(star_quotient_central(c));
  report.checks.push_back(star_quotient_product_rule(c));
  report.checks.push_back(nonsymmetric_pair_cases(c));
  return report;
}

}  // namespace symj
