#pragma once

#include <stdexcept>
#include <vector>

#include "symj/group.hpp"
#include "symj/involution.hpp"
#include "symj/ring.hpp"

namespace symj {

class InvalidOrientation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A homomorphism sigma: G -> U(R), with kernel N and C = {x : sigma(x) = +-1}.
class Orientation {
 public:
  /// Validates the homomorphism law and that every value is a unit.
  Orientation(GroupPtr group, RingPtr ring, std::vector<Scalar> values);

  const Group& group() const { return *group_; }
  const FiniteRing& ring() const { return *ring_; }
  const GroupPtr& group_ptr() const { return group_; }
  const RingPtr& ring_ptr() const { return ring_; }

  Scalar operator()(Elem x) const { return values_[x]; }
  const std::vector<Scalar>& values() const { return values_; }
  const ElementSet& kernel() const { return kernel_; }
  const ElementSet& subgroup_c() const { return subgroup_c_; }
  bool is_trivial() const { return static_cast<int>(kernel_.size()) == group_->order(); }
  bool is_minus_one(Elem x) const { return values_[x] == ring_->minus_one(); }

 private:
  GroupPtr group_;
  RingPtr ring_;
  std::vector<Scalar> values_;
  ElementSet kernel_;
  ElementSet subgroup_c_;
};

inline Scalar sigma_of(const Orientation& sigma, Elem x) { return sigma(x); }

/// All homomorphisms G -> U(R) (nontrivial only unless `include_trivial`), sorted
/// lexicographically by value list.
std::vector<Orientation> enumerate_orientations(const GroupPtr& g, const RingPtr& r,
                                                bool include_trivial = false);

/// x tau(x) lies in ker sigma for every x.
bool is_compatible(const GroupInvolution& tau, const Orientation& sigma);

}  // namespace symj
