#include "symj/classifier.hpp"

#include <algorithm>

namespace symj {

std::string to_string(StructureTag tag) {
  switch (tag) {
    case StructureTag::IA: return "IA";
    case StructureTag::IB1: return "IB1";
    case StructureTag::IB2: return "IB2";
    case StructureTag::IB3: return "IB3";
    case StructureTag::None: return "NONE";
  }
  return "NONE";
}

std::string to_string(Gp14Tag tag) {
  switch (tag) {
    case Gp14Tag::A: return "GP14-A";
    case Gp14Tag::B: return "GP14-B";
    case Gp14Tag::C: return "GP14-C";
    case Gp14Tag::None: return "NONE";
  }
  return "NONE";
}

namespace {

struct Setting {
  const Group& g;
  const GroupInvolution& tau;
  const Orientation& sigma;
  ElementSet sym;     // G_*
  ElementSet center;  // Z(G)
  ElementSet derived;
  ElementSet commutators;

  Setting(const GroupInvolution& t, const Orientation& s)
      : g(s.group()), tau(t), sigma(s), sym(symmetric_set(t)), center(g.center()),
        derived(g.derived_subgroup()), commutators(g.commutator_set()) {}

  // Candidate positions for s and t.
  std::vector<Elem> central_candidates(Placement p) const {
    std::vector<Elem> out;
    for (Elem x : sym.members())
      if (center.contains(x) && (p == Placement::Symmetric || sigma.kernel().contains(x))) out.push_back(x);
    return out;
  }

  // x* in {x, x s} for every x in `where` (all of G when null).
  bool star_by(Elem s, const ElementSet* where) const {
    for (Elem x = 0; x < g.order(); ++x) {
      if (where && !where->contains(x)) continue;
      if (tau(x) != x && tau(x) != g.mul(x, s)) return false;
    }
    return true;
  }
};

std::optional<Elem> find_single_s(const Setting& st, Placement p, bool need_derived) {
  const Elem e = st.g.identity();
  for (Elem s : st.central_candidates(p)) {
    if (st.g.mul(s, s) != e) continue;
    if (need_derived && !(st.derived.size() == 2 && st.derived.contains(s) && s != e)) continue;
    if (st.star_by(s, nullptr)) return s;
  }
  return std::nullopt;
}

// Conditions of the two-commutator case for a fixed (s, t); returns the index of the
// first failing condition, or the number of conditions when all hold.
std::size_t ib3_progress(const Setting& st, Elem s, Elem t) {
  const Group& g = st.g;
  const Elem e = g.identity();
  const ElementSet& c_set = st.sigma.subgroup_c();
  std::size_t k = 0;

  // derived-generated-by-s-t
  const std::vector<Elem> st_gens{s, t};
  if (!(st.derived == g.closure(st_gens))) return k;
  ++k;
  // only-commutators-s-t
  if (!(st.commutators == ElementSet(g.order(), {e, s, t}))) return k;
  ++k;
  // derived-of-C
  {
    std::vector<Elem> comms;
    for (Elem x : c_set.members())
      for (Elem y : c_set.members()) comms.push_back(g.commutator(x, y));
    const ElementSet c_derived = g.closure(comms);
    if (!(c_derived == ElementSet(g.order(), {e}) || c_derived == ElementSet(g.order(), {e, s}))) return k;
  }
  ++k;
  // star-on-C
  if (!st.star_by(s, &c_set)) return k;
  ++k;
  // star-off-C
  for (Elem x = 0; x < g.order(); ++x)
    if (!c_set.contains(x) && st.tau(x) != x && st.tau(x) != g.mul(x, t)) return k;
  ++k;
  std::vector<Elem> outer, c_nonsym;  // G \ (C u G_*), C \ G_*
  for (Elem x = 0; x < g.order(); ++x) {
    if (st.sym.contains(x)) continue;
    (c_set.contains(x) ? c_nonsym : outer).push_back(x);
  }
  // outer-commutators-in-1-t
  for (Elem x : outer)
    for (Elem y : outer) {
      const Elem k2 = g.commutator(x, y);
      if (k2 != e && k2 != t) return k;
    }
  ++k;
  // C-commutators-in-1-s
  for (Elem x : c_nonsym)
    for (Elem y = 0; y < g.order(); ++y) {
      const Elem k2 = g.commutator(x, y);
      if (k2 != e && k2 != s) return k;
    }
  ++k;
  // C-outer-commutators-equal-s
  {
    bool any = false;
    for (Elem x : c_nonsym)
      for (Elem y : outer) {
        if (g.commutator(x, y) != s) return k;
        any = true;
      }
    if (!any) return k;
  }
  ++k;
  return k;
}

Ib3Diagnosis diagnose(const Setting& st, Placement p) {
  const auto& names = ib3_conditions();
  Ib3Diagnosis d;
  const Elem e = st.g.identity();
  const ElementSet& c_set = st.sigma.subgroup_c();
  if (st.tau.is_identity_on(c_set)) {
    d.first_failing = "star-nonidentity-on-C";
    return d;
  }
  if (!st.tau.is_identity_on(st.sigma.kernel())) {
    d.first_failing = "star-identity-on-N";
    return d;
  }
  std::vector<Elem> cands;
  for (Elem x : st.central_candidates(p))
    if (x != e && st.g.mul(x, x) == e) cands.push_back(x);
  std::size_t best = 0;
  bool any_pair = false;
  for (Elem s : cands)
    for (Elem t : cands) {
      if (s == t) continue;
      const std::size_t k = ib3_progress(st, s, t);
      if (!any_pair || k > best) {
        best = k;
        d.s = s;
        d.t = t;
      }
      any_pair = true;
      if (k == names.size() - 3) {
        d.satisfied = true;
        d.first_failing.clear();
        return d;
      }
    }
  if (!any_pair) {
    d.first_failing = "central-involution-pair";
    return d;
  }
  d.first_failing = names[3 + best];
  return d;
}

StructureCase classify(const Setting& st, Placement p) {
  StructureCase sc;
  const Group& g = st.g;
  if (st.tau.is_identity()) {
    sc.tag = g.is_abelian() ? StructureTag::IA : StructureTag::None;
    return sc;
  }
  if (g.is_abelian()) {
    if (auto s = find_single_s(st, p, false)) {
      sc.tag = StructureTag::IB1;
      sc.s = s;
    }
    return sc;
  }
  if (auto s = find_single_s(st, p, true)) {
    sc.tag = StructureTag::IB2;
    sc.s = s;
    return sc;
  }
  Ib3Diagnosis d = diagnose(st, p);
  if (d.satisfied) {
    sc.tag = StructureTag::IB3;
    sc.s = d.s;
    sc.t = d.t;
  }
  return sc;
}

bool char_gate(StructureTag tag, int characteristic) {
  switch (tag) {
    case StructureTag::IA: return characteristic == 4 || characteristic == 8;
    case StructureTag::IB1:
    case StructureTag::IB2:
    case StructureTag::IB3: return characteristic == 4;
    case StructureTag::None: return false;
  }
  return false;
}

}  // namespace

const std::vector<std::string>& ib3_conditions() {
  static const std::vector<std::string> names{
      "star-nonidentity-on-C",     "star-identity-on-N",        "central-involution-pair",
      "derived-generated-by-s-t",  "only-commutators-s-t",      "derived-of-C",
      "star-on-C",                 "star-off-C",                "outer-commutators-in-1-t",
      "C-commutators-in-1-s",      "C-outer-commutators-equal-s"};
  return names;
}

Ib3Diagnosis diagnose_ib3(const GroupInvolution& tau, const Orientation& sigma, Placement placement) {
  return diagnose(Setting(tau, sigma), placement);
}

StructureCase classify_structure(const GroupInvolution& tau, const Orientation& sigma, Placement placement) {
  return classify(Setting(tau, sigma), placement);
}

RingConditions check_ring_conditions(const GroupInvolution& tau, const Orientation& sigma) {
  const Group& g = sigma.group();
  const FiniteRing& r = sigma.ring();
  const ElementSet sym = symmetric_set(tau);
  std::vector<Elem> nonsym;
  for (Elem x = 0; x < g.order(); ++x)
    if (!sym.contains(x)) nonsym.push_back(x);
  auto two = [&](Scalar a) { return r.add(a, a); };
  auto pair = [&](Elem x, Elem y) { return "x=" + g.name(x) + ", y=" + g.name(y); };
  const Scalar zero = r.zero(), one = r.one(), m1 = r.minus_one();

  RingConditions rc;
  for (Elem x : nonsym)
    for (Elem y : nonsym) {
      if (!rc.nonsymmetric_pairs) break;
      const Scalar sx = sigma(x), sy = sigma(y), sxy = sigma(g.mul(x, y));
      if (g.commute(x, y)) {
        if (two(r.add(one, sxy)) != zero || two(r.add(sx, sy)) != zero) {
          rc.nonsymmetric_pairs = false;
          rc.first_failure = "nonsymmetric commuting pair " + pair(x, y);
        }
      } else if (sx != m1 && sy != m1) {
        if (r.add(r.add(one, sx), r.add(sy, sxy)) != zero) {
          rc.nonsymmetric_pairs = false;
          rc.first_failure = "nonsymmetric noncommuting pair " + pair(x, y);
        }
      }
    }

  std::vector<std::vector<Scalar>> adm(g.order());
  for (Elem y : sym.members()) adm[y] = admissible_coefficients(tau, sigma, y);

  for (Elem x : nonsym)
    for (Elem y : sym.members()) {
      if (!rc.mixed_pairs) break;
      const bool commuting = g.commute(x, y);
      for (Scalar a : adm[y]) {
        const Scalar v = commuting ? two(a) : r.mul(a, r.add(one, sigma(x)));
        if (v != zero) {
          rc.mixed_pairs = false;
          if (rc.first_failure.empty()) rc.first_failure = "mixed pair " + pair(x, y) + ", a=" + r.name(a);
          break;
        }
      }
    }

  for (Elem x : sym.members())
    for (Elem y : sym.members()) {
      if (!rc.symmetric_pairs) break;
      const bool commuting = g.commute(x, y);
      for (Scalar a : adm[x]) {
        for (Scalar b : adm[y]) {
          const Scalar ab = r.mul(a, b);
          if ((commuting ? two(ab) : ab) != zero) {
            rc.symmetric_pairs = false;
            if (rc.first_failure.empty())
              rc.first_failure = "symmetric pair " + pair(x, y) + ", a=" + r.name(a) + ", b=" + r.name(b);
            break;
          }
        }
        if (!rc.symmetric_pairs) break;
      }
    }
  return rc;
}

Gp14Tag gp14_predicate(const GroupInvolution& tau, const Orientation& sigma) {
  const Group& g = sigma.group();
  const FiniteRing& r = sigma.ring();
  const ElementSet& c_set = sigma.subgroup_c();
  const ElementSet& kernel = sigma.kernel();
  const int ch = r.characteristic();
  const Elem e = g.identity();

  bool c_abelian = true;
  std::vector<Elem> comms;
  for (Elem x : c_set.members())
    for (Elem y : c_set.members()) {
      if (!g.commute(x, y)) c_abelian = false;
      comms.push_back(g.commutator(x, y));
    }

  if ((ch == 4 || ch == 8) && c_abelian && tau.is_identity_on(c_set)) return Gp14Tag::A;
  if (ch == 4 && c_abelian && tau.is_identity_on(kernel)) return Gp14Tag::B;
  if (ch != 4) return Gp14Tag::None;

  const ElementSet c_derived = g.closure(comms);
  if (c_derived.size() != 2) return Gp14Tag::None;
  const Elem s = c_derived.members()[0] == e ? c_derived.members()[1] : c_derived.members()[0];
  for (Elem x : c_set.members())
    if (tau(x) != x && tau(x) != g.mul(s, x)) return Gp14Tag::None;

  bool symmetric_outside_kernel_commute = true;
  for (Elem x : c_set.members())
    for (Elem y : c_set.members())
      if (tau(x) == x && tau(y) == y && !kernel.contains(x) && !kernel.contains(y) && !g.commute(x, y))
        symmetric_outside_kernel_commute = false;
  bool torsion_square_zero = true;
  const std::vector<Scalar> r2 = r.two_torsion();
  for (Scalar a : r2)
    for (Scalar b : r2)
      if (r.mul(a, b) != r.zero()) torsion_square_zero = false;
  return (symmetric_outside_kernel_commute || torsion_square_zero) ? Gp14Tag::C : Gp14Tag::None;
}

ClassificationResult theorem_predicate(const GroupInvolution& tau, const Orientation& sigma) {
  const int ch = sigma.ring().characteristic();
  if (ch == 2) throw CharTwoRejected();
  const Setting st(tau, sigma);
  ClassificationResult res;
  res.structure = classify(st, Placement::SymmetricKernel);
  res.ring_conditions = check_ring_conditions(tau, sigma);
  res.predicate = char_gate(res.structure.tag, ch) && res.ring_conditions.all();
  const StructureCase weak = classify(st, Placement::Symmetric);
  res.predicate_symmetric_placement = char_gate(weak.tag, ch) && res.ring_conditions.all();
  res.gp14 = gp14_predicate(tau, sigma);
  return res;
}

}  // namespace symj
