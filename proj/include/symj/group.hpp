#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace symj {

// Group elements are dense indices 0..order-1.
using Elem = int;

class Group;

/// Sorted subset of a group's elements with O(1) membership.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(int ambient_order, std::vector<Elem> members);

  static ElementSet from_mask(const std::vector<bool>& mask);

  bool contains(Elem x) const { return x >= 0 && x < static_cast<int>(mask_.size()) && mask_[x]; }
  const std::vector<Elem>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  int ambient_order() const { return static_cast<int>(mask_.size()); }

  bool operator==(const ElementSet& other) const { return members_ == other.members_; }

 private:
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

class NotAGroup : public std::runtime_error {
 public:
  enum class Reason { BadShape, NotLatinSquare, NoIdentity, NoInverse, NotAssociative };

  NotAGroup(Reason reason, std::vector<int> where, const std::string& detail);

  Reason reason() const { return reason_; }
  /// First violating indices, e.g. (row, col) or (i, j, k).
  const std::vector<int>& where() const { return where_; }

 private:
  Reason reason_;
  std::vector<int> where_;
};

std::string to_string(NotAGroup::Reason reason);

/// A finite group stored as its Cayley table. Immutable after construction.
class Group {
 public:
  /// Validates the table; the identity is located by scan and need not be 0.
  static Group from_table(const std::vector<std::vector<int>>& table,
                          std::vector<std::string> names = {},
                          std::string label = {});

  int order() const { return order_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem x, Elem y) const { return table_[static_cast<std::size_t>(x) * order_ + y]; }
  Elem inv(Elem x) const { return inverse_[x]; }
  Elem pow(Elem x, int k) const;
  int element_order(Elem x) const { return element_order_[x]; }

  /// x^-1 y^-1 x y
  Elem commutator(Elem x, Elem y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  /// y^-1 x y
  Elem conjugate(Elem x, Elem y) const { return mul(mul(inv(y), x), y); }
  bool commute(Elem x, Elem y) const { return mul(x, y) == mul(y, x); }
  bool is_abelian() const { return abelian_; }

  ElementSet center() const;
  ElementSet derived_subgroup() const;
  /// All values taken by the commutator map (not closed under products in general).
  ElementSet commutator_set() const;
  /// Subgroup generated by `gens`.
  ElementSet closure(std::span<const Elem> gens) const;
  bool is_subgroup(const ElementSet& s) const;
  bool is_normal(const ElementSet& s) const;

  /// Greedy generating set: repeatedly adds the element enlarging the closure most.
  const std::vector<Elem>& generators() const { return generators_; }

  const std::string& label() const { return label_; }
  const std::string& name(Elem x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of the element with the given display name; -1 when absent.
  Elem find(const std::string& name) const;

  std::vector<std::vector<int>> table() const;

 private:
  Group() = default;

  int order_ = 0;
  Elem identity_ = 0;
  bool abelian_ = true;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<int> element_order_;
  std::vector<Elem> generators_;
  std::vector<std::string> names_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const Group>;

}  // namespace symj
