#include "symj/group_ring.hpp"

#include <algorithm>
#include <sstream>

namespace symj {

namespace {

void require_same(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.group_ptr() != b.group_ptr() || a.ring_ptr() != b.ring_ptr())
    throw MismatchedAmbient("group ring elements live in different rings");
}

void require_ambient(const GroupRingElement& a, const GroupInvolution& tau, const Orientation& sigma) {
  if (a.group_ptr() != tau.group_ptr() || a.group_ptr() != sigma.group_ptr() ||
      a.ring_ptr() != sigma.ring_ptr())
    throw MismatchedAmbient("element, involution and orientation disagree on G or R");
}

}  // namespace

GroupRingElement::GroupRingElement(GroupPtr group, RingPtr ring)
    : group_(std::move(group)), ring_(std::move(ring)), coeffs_(group_->order(), ring_->zero()) {}

GroupRingElement::GroupRingElement(GroupPtr group, RingPtr ring, std::vector<Scalar> coeffs)
    : group_(std::move(group)), ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != group_->order())
    throw std::invalid_argument("coefficient vector length differs from group order");
  for (Scalar c : coeffs_)
    if (c < 0 || c >= ring_->size()) throw std::invalid_argument("coefficient out of range");
}

GroupRingElement GroupRingElement::monomial(GroupPtr group, RingPtr ring, Scalar c, Elem x) {
  GroupRingElement e(std::move(group), std::move(ring));
  e.coeffs_[x] = c;
  return e;
}

bool GroupRingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](Scalar c) { return c == ring_->zero(); });
}

std::vector<Elem> GroupRingElement::support() const {
  std::vector<Elem> s;
  for (Elem x = 0; x < static_cast<int>(coeffs_.size()); ++x)
    if (coeffs_[x] != ring_->zero()) s.push_back(x);
  return s;
}

std::string GroupRingElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (Elem x : support()) {
    if (!first) os << " + ";
    first = false;
    if (coeffs_[x] != ring_->one()) os << ring_->name(coeffs_[x]) << "*";
    os << group_->name(x);
  }
  if (first) os << "0";
  return os.str();
}

GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b) {
  require_same(a, b);
  GroupRingElement out(a.group_ptr(), a.ring_ptr());
  for (Elem x = 0; x < a.group().order(); ++x) out[x] = a.ring().add(a[x], b[x]);
  return out;
}

GroupRingElement subtract(const GroupRingElement& a, const GroupRingElement& b) {
  require_same(a, b);
  GroupRingElement out(a.group_ptr(), a.ring_ptr());
  for (Elem x = 0; x < a.group().order(); ++x) out[x] = a.ring().sub(a[x], b[x]);
  return out;
}

GroupRingElement scale(Scalar c, const GroupRingElement& a) {
  GroupRingElement out(a.group_ptr(), a.ring_ptr());
  for (Elem x = 0; x < a.group().order(); ++x) out[x] = a.ring().mul(c, a[x]);
  return out;
}

GroupRingElement multiply(const GroupRingElement& a, const GroupRingElement& b) {
  require_same(a, b);
  const Group& g = a.group();
  const FiniteRing& r = a.ring();
  GroupRingElement out(a.group_ptr(), a.ring_ptr());
  const std::vector<Elem> sa = a.support(), sb = b.support();
  for (Elem x : sa)
    for (Elem y : sb) {
      const Elem z = g.mul(x, y);
      out[z] = r.add(out[z], r.mul(a[x], b[y]));
    }
  return out;
}

GroupRingElement jordan(const GroupRingElement& a, const GroupRingElement& b) {
  return add(multiply(a, b), multiply(b, a));
}

GroupRingElement lie(const GroupRingElement& a, const GroupRingElement& b) {
  return subtract(multiply(a, b), multiply(b, a));
}

GroupRingElement sigma_star(const GroupRingElement& a, const GroupInvolution& tau,
                            const Orientation& sigma) {
  require_ambient(a, tau, sigma);
  const FiniteRing& r = a.ring();
  GroupRingElement out(a.group_ptr(), a.ring_ptr());
  for (Elem x = 0; x < a.group().order(); ++x)
    out[tau(x)] = r.add(out[tau(x)], r.mul(sigma(x), a[x]));
  return out;
}

bool is_symmetric(const GroupRingElement& a, const GroupInvolution& tau, const Orientation& sigma) {
  return sigma_star(a, tau, sigma) == a;
}

std::vector<GroupRingElement> SymmetricGenerators::all() const {
  std::vector<GroupRingElement> out;
  out.reserve(s1_doubled.size() + s2.size() + s3.size());
  out.insert(out.end(), s1_doubled.begin(), s1_doubled.end());
  out.insert(out.end(), s2.begin(), s2.end());
  out.insert(out.end(), s3.begin(), s3.end());
  return out;
}

namespace {

void require_compatible(const GroupInvolution& tau, const Orientation& sigma) {
  if (tau.group_ptr() != sigma.group_ptr())
    throw MismatchedAmbient("involution and orientation live on different groups");
  if (!is_compatible(tau, sigma)) throw MismatchedAmbient("involution is not compatible with orientation");
}

SymmetricGenerators build_generators(const GroupInvolution& tau, const Orientation& sigma, Scalar n_star_coeff) {
  require_compatible(tau, sigma);
  const GroupPtr& gp = sigma.group_ptr();
  const RingPtr& rp = sigma.ring_ptr();
  const Group& g = *gp;
  const FiniteRing& r = *rp;

  SymmetricGenerators gens;
  gens.g_star = symmetric_set(tau);
  std::vector<Elem> nstar;
  for (Elem x : gens.g_star.members())
    if (sigma.kernel().contains(x)) nstar.push_back(x);
  gens.n_star = ElementSet(g.order(), nstar);

  for (Elem x : gens.n_star.members())
    if (n_star_coeff != r.zero()) gens.s1_doubled.push_back(GroupRingElement::monomial(gp, rp, n_star_coeff, x));

  for (Elem x : gens.g_star.members()) {
    if (sigma.kernel().contains(x)) continue;
    for (Scalar a : r.annihilator(r.sub(r.one(), sigma(x))).generators)
      if (a != r.zero()) gens.s2.push_back(GroupRingElement::monomial(gp, rp, a, x));
  }

  for (Elem x = 0; x < g.order(); ++x) {
    const Elem xs = tau(x);
    if (xs == x || xs < x) continue;
    GroupRingElement e(gp, rp);
    e[x] = r.one();
    e[xs] = sigma(x);
    gens.s3.push_back(std::move(e));
  }
  return gens;
}

}  // namespace

SymmetricGenerators symmetric_generators(const GroupInvolution& tau, const Orientation& sigma) {
  return build_generators(tau, sigma, sigma.ring().from_int(2));
}

std::vector<GroupRingElement> fixed_point_generators(const GroupInvolution& tau, const Orientation& sigma) {
  return build_generators(tau, sigma, sigma.ring().one()).all();
}

std::vector<Scalar> admissible_coefficients(const GroupInvolution& tau, const Orientation& sigma, Elem y) {
  const FiniteRing& r = sigma.ring();
  if (tau(y) != y) return {};
  if (sigma.kernel().contains(y)) return r.principal_ideal(r.from_int(2));
  return r.annihilator(r.sub(r.one(), sigma(y))).members;
}

}  // namespace symj
