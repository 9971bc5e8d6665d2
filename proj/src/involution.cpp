#include "symj/involution.hpp"

#include <algorithm>
#include <stdexcept>

namespace symj {

bool is_involution(const Group& g, const std::vector<Elem>& map) {
  const int n = g.order();
  if (static_cast<int>(map.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (Elem x : map) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = true;
  }
  for (Elem x = 0; x < n; ++x) {
    if (map[map[x]] != x) return false;
    for (Elem y = 0; y < n; ++y)
      if (map[g.mul(x, y)] != g.mul(map[y], map[x])) return false;
  }
  return true;
}

GroupInvolution::GroupInvolution(GroupPtr group, std::vector<Elem> map)
    : group_(std::move(group)), map_(std::move(map)) {
  if (!group_ || !is_involution(*group_, map_))
    throw std::invalid_argument("map is not an involution of the group");
  is_identity_ = true;
  for (Elem x = 0; x < group_->order(); ++x)
    if (map_[x] != x) is_identity_ = false;
}

GroupInvolution GroupInvolution::inversion(GroupPtr group) {
  std::vector<Elem> map(group->order());
  for (Elem x = 0; x < group->order(); ++x) map[x] = group->inv(x);
  return GroupInvolution(std::move(group), std::move(map));
}

bool GroupInvolution::is_identity_on(const ElementSet& s) const {
  for (Elem x : s.members())
    if (map_[x] != x) return false;
  return true;
}

namespace {

// Extends generator images to the whole group; empty result on contradiction.
std::vector<Elem> propagate(const Group& g, const std::vector<Elem>& gens,
                            const std::vector<Elem>& images) {
  const int n = g.order();
  std::vector<Elem> map(n, -1);
  map[g.identity()] = g.identity();
  std::vector<Elem> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Elem y = g.mul(x, gens[i]);
        const Elem image = g.mul(images[i], map[x]);
        if (map[y] < 0) {
          map[y] = image;
          next.push_back(y);
        } else if (map[y] != image) {
          return {};
        }
      }
    frontier = std::move(next);
  }
  return map;
}

}  // namespace

std::vector<GroupInvolution> enumerate_involutions(const GroupPtr& g) {
  const std::vector<Elem>& gens = g->generators();
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem y = 0; y < g->order(); ++y)
      if (g->element_order(y) == g->element_order(gens[i])) candidates[i].push_back(y);

  std::vector<std::vector<Elem>> found;
  std::vector<Elem> images(gens.size());
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      std::vector<Elem> map = propagate(*g, gens, images);
      if (!map.empty() && is_involution(*g, map)) found.push_back(std::move(map));
      return;
    }
    for (Elem y : candidates[depth]) {
      // tau(g) = y forces tau(y) = g; reject images that clash with earlier choices.
      bool clash = false;
      for (std::size_t i = 0; i < depth && !clash; ++i) {
        if (images[i] == y && gens[i] != gens[depth]) clash = true;
        if (gens[i] == y && images[i] != gens[depth]) clash = true;
      }
      if (clash) continue;
      images[depth] = y;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<GroupInvolution> out;
  out.reserve(found.size());
  for (auto& m : found) out.emplace_back(g, std::move(m));
  return out;
}

ElementSet symmetric_set(const GroupInvolution& tau) {
  std::vector<Elem> fixed;
  for (Elem x = 0; x < tau.group().order(); ++x)
    if (tau(x) == x) fixed.push_back(x);
  return ElementSet(tau.group().order(), std::move(fixed));
}

}  // namespace symj
