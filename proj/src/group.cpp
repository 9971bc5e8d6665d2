#include "symj/group.hpp"

#include <algorithm>
#include <sstream>

namespace symj {

ElementSet::ElementSet(int ambient_order, std::vector<Elem> members)
    : members_(std::move(members)), mask_(static_cast<std::size_t>(ambient_order), false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Elem x : members_) {
    if (x < 0 || x >= ambient_order) throw std::out_of_range("element index out of range");
    mask_[x] = true;
  }
}

ElementSet ElementSet::from_mask(const std::vector<bool>& mask) {
  std::vector<Elem> members;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) members.push_back(static_cast<Elem>(i));
  return ElementSet(static_cast<int>(mask.size()), std::move(members));
}

std::string to_string(NotAGroup::Reason reason) {
  switch (reason) {
    case NotAGroup::Reason::BadShape: return "bad-shape";
    case NotAGroup::Reason::NotLatinSquare: return "not-latin-square";
    case NotAGroup::Reason::NoIdentity: return "no-identity";
    case NotAGroup::Reason::NoInverse: return "no-inverse";
    case NotAGroup::Reason::NotAssociative: return "not-associative";
  }
  return "unknown";
}

static std::string describe(NotAGroup::Reason reason, const std::vector<int>& where,
                            const std::string& detail) {
  std::ostringstream os;
  os << "not a group (" << to_string(reason) << ")";
  if (!where.empty()) {
    os << " at";
    for (int w : where) os << ' ' << w;
  }
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

NotAGroup::NotAGroup(Reason reason, std::vector<int> where, const std::string& detail)
    : std::runtime_error(describe(reason, where, detail)), reason_(reason), where_(std::move(where)) {}

Group Group::from_table(const std::vector<std::vector<int>>& table, std::vector<std::string> names,
                        std::string label) {
  using R = NotAGroup::Reason;
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroup(R::BadShape, {}, "empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw NotAGroup(R::BadShape, {i}, "row length differs from order");
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        throw NotAGroup(R::BadShape, {i, j}, "entry out of range");
  }

  // Latin square: every row and column is a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (int j = 0; j < n; ++j) {
      if (row_seen[table[i][j]]) throw NotAGroup(R::NotLatinSquare, {i, j}, "repeated entry in row");
      row_seen[table[i][j]] = true;
      if (col_seen[table[j][i]]) throw NotAGroup(R::NotLatinSquare, {j, i}, "repeated entry in column");
      col_seen[table[j][i]] = true;
    }
  }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = table[e][i] == i && table[i][e] == i;
    if (ok) identity = e;
  }
  if (identity < 0) throw NotAGroup(R::NoIdentity, {}, "no two-sided identity");

  std::vector<Elem> inverse(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (table[i][j] == identity && table[j][i] == identity) inverse[i] = j;
    if (inverse[i] < 0) throw NotAGroup(R::NoInverse, {i}, "no two-sided inverse");
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw NotAGroup(R::NotAssociative, {i, j, k}, "(ij)k != i(jk)");

  Group g;
  g.order_ = n;
  g.identity_ = identity;
  g.inverse_ = std::move(inverse);
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g.table_[static_cast<std::size_t>(i) * n + j] = table[i][j];
      if (table[i][j] != table[j][i]) g.abelian_ = false;
    }

  g.element_order_.resize(n);
  for (int i = 0; i < n; ++i) {
    int k = 1;
    for (Elem p = i; p != identity; p = g.mul(p, i)) ++k;
    g.element_order_[i] = k;
  }

  if (names.empty()) {
    for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  } else if (static_cast<int>(names.size()) != n) {
    throw NotAGroup(R::BadShape, {}, "names length differs from order");
  }
  g.names_ = std::move(names);
  g.label_ = label.empty() ? "G" + std::to_string(n) : std::move(label);

  // Greedy generating set.
  std::vector<Elem> gens;
  ElementSet span = g.closure(gens);
  while (static_cast<int>(span.size()) < n) {
    Elem best = -1;
    std::size_t best_size = 0;
    for (Elem x = 0; x < n; ++x) {
      if (span.contains(x)) continue;
      gens.push_back(x);
      const std::size_t sz = g.closure(gens).size();
      gens.pop_back();
      if (sz > best_size) {
        best_size = sz;
        best = x;
      }
    }
    gens.push_back(best);
    span = g.closure(gens);
  }
  g.generators_ = std::move(gens);
  return g;
}

Elem Group::pow(Elem x, int k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Elem r = identity_;
  for (int i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

ElementSet Group::center() const {
  std::vector<Elem> z;
  for (Elem x = 0; x < order_; ++x) {
    bool central = true;
    for (Elem y = 0; y < order_ && central; ++y) central = commute(x, y);
    if (central) z.push_back(x);
  }
  return ElementSet(order_, std::move(z));
}

ElementSet Group::commutator_set() const {
  std::vector<bool> mask(order_, false);
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = 0; y < order_; ++y) mask[commutator(x, y)] = true;
  return ElementSet::from_mask(mask);
}

ElementSet Group::derived_subgroup() const { return closure(commutator_set().members()); }

ElementSet Group::closure(std::span<const Elem> gens) const {
  std::vector<bool> mask(order_, false);
  std::vector<Elem> frontier{identity_};
  mask[identity_] = true;
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (Elem g : gens) {
        const Elem y = mul(x, g);
        if (!mask[y]) {
          mask[y] = true;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return ElementSet::from_mask(mask);
}

bool Group::is_subgroup(const ElementSet& s) const {
  if (!s.contains(identity_)) return false;
  for (Elem x : s.members()) {
    if (!s.contains(inv(x))) return false;
    for (Elem y : s.members())
      if (!s.contains(mul(x, y))) return false;
  }
  return true;
}

bool Group::is_normal(const ElementSet& s) const {
  if (!is_subgroup(s)) return false;
  for (Elem x : s.members())
    for (Elem y = 0; y < order_; ++y)
      if (!s.contains(conjugate(x, y))) return false;
  return true;
}

Elem Group::find(const std::string& name) const {
  for (Elem x = 0; x < order_; ++x)
    if (names_[x] == name) return x;
  return -1;
}

std::vector<std::vector<int>> Group::table() const {
  std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) t[i][j] = mul(i, j);
  return t;
}

}  // namespace symj
