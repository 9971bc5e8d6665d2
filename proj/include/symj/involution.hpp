#pragma once

#include <vector>

#include "symj/group.hpp"

namespace symj {

/// An anti-automorphism of order at most two: tau(xy) = tau(y) tau(x), tau(tau(x)) = x.
class GroupInvolution {
 public:
  /// Throws std::invalid_argument unless `map` satisfies is_involution.
  GroupInvolution(GroupPtr group, std::vector<Elem> map);

  static GroupInvolution inversion(GroupPtr group);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  Elem operator()(Elem x) const { return map_[x]; }
  const std::vector<Elem>& map() const { return map_; }
  bool is_identity() const { return is_identity_; }
  /// True when tau fixes every member of `s`.
  bool is_identity_on(const ElementSet& s) const;

  bool operator==(const GroupInvolution& o) const { return map_ == o.map_; }

 private:
  GroupPtr group_;
  std::vector<Elem> map_;
  bool is_identity_ = false;
};

bool is_involution(const Group& g, const std::vector<Elem>& map);

/// All involutions of `g`, sorted lexicographically by image list.
/// Backtracks over images of the greedy generating set and propagates via the
/// antihomomorphism law.
std::vector<GroupInvolution> enumerate_involutions(const GroupPtr& g);

/// Fixed points {x : tau(x) = x}.
ElementSet symmetric_set(const GroupInvolution& tau);

}  // namespace symj
