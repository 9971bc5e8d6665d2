#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "symj/group.hpp"
#include "symj/involution.hpp"
#include "symj/orientation.hpp"
#include "symj/ring.hpp"

namespace symj {

class MismatchedAmbient : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// sum_x a_x x in RG, stored densely as one coefficient per group element.
class GroupRingElement {
 public:
  GroupRingElement(GroupPtr group, RingPtr ring);
  GroupRingElement(GroupPtr group, RingPtr ring, std::vector<Scalar> coeffs);
  /// c * x
  static GroupRingElement monomial(GroupPtr group, RingPtr ring, Scalar c, Elem x);

  const Group& group() const { return *group_; }
  const FiniteRing& ring() const { return *ring_; }
  const GroupPtr& group_ptr() const { return group_; }
  const RingPtr& ring_ptr() const { return ring_; }
  Scalar operator[](Elem x) const { return coeffs_[x]; }
  Scalar& operator[](Elem x) { return coeffs_[x]; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// Elements with nonzero coefficient, ascending.
  std::vector<Elem> support() const;
  std::string to_string() const;

  bool operator==(const GroupRingElement& o) const { return coeffs_ == o.coeffs_; }

 private:
  GroupPtr group_;
  RingPtr ring_;
  std::vector<Scalar> coeffs_;
};

GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement subtract(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement scale(Scalar c, const GroupRingElement& a);
/// (ab)_z = sum_{xy = z} a_x b_y
GroupRingElement multiply(const GroupRingElement& a, const GroupRingElement& b);
/// ab + ba
GroupRingElement jordan(const GroupRingElement& a, const GroupRingElement& b);
/// ab - ba
GroupRingElement lie(const GroupRingElement& a, const GroupRingElement& b);
/// sum sigma(x) a_x tau(x)
GroupRingElement sigma_star(const GroupRingElement& a, const GroupInvolution& tau,
                            const Orientation& sigma);
bool is_symmetric(const GroupRingElement& a, const GroupInvolution& tau, const Orientation& sigma);

/// Generating family of the symmetric span: 2x for x in N_*, a x for x in G_* \ N with a
/// ranging over annihilator generators of 1 - sigma(x), and x + sigma(x) tau(x) once per
/// orbit {x, tau(x)} of non-fixed elements (smaller index as representative). The other
/// representative gives sigma(tau(x)) times the same element, a unit multiple.
struct SymmetricGenerators {
  std::vector<GroupRingElement> s1_doubled;
  std::vector<GroupRingElement> s2;
  std::vector<GroupRingElement> s3;
  ElementSet g_star;
  ElementSet n_star;

  /// s1_doubled, then s2, then s3.
  std::vector<GroupRingElement> all() const;
};

/// Throws MismatchedAmbient unless (tau, sigma) are compatible on the same group.
SymmetricGenerators symmetric_generators(const GroupInvolution& tau, const Orientation& sigma);

/// Same family with x (not 2x) for x in N_*: it spans every sigma*-fixed element.
std::vector<GroupRingElement> fixed_point_generators(const GroupInvolution& tau,
                                                     const Orientation& sigma);

/// {a in R : a y lies in the symmetric span} for y in G_*: 2R on N_*, and the
/// annihilator of 1 - sigma(y) on G_* \ N. Empty for y outside G_*.
std::vector<Scalar> admissible_coefficients(const GroupInvolution& tau, const Orientation& sigma,
                                            Elem y);

}  // namespace symj
