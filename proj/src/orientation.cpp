#include "symj/orientation.hpp"

#include <algorithm>

namespace symj {

Orientation::Orientation(GroupPtr group, RingPtr ring, std::vector<Scalar> values)
    : group_(std::move(group)), ring_(std::move(ring)), values_(std::move(values)) {
  const Group& g = *group_;
  const FiniteRing& r = *ring_;
  if (static_cast<int>(values_.size()) != g.order())
    throw InvalidOrientation("orientation needs one value per group element");
  for (Scalar v : values_)
    if (v < 0 || v >= r.size() || !r.is_unit(v)) throw InvalidOrientation("orientation value is not a unit");
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (values_[g.mul(x, y)] != r.mul(values_[x], values_[y]))
        throw InvalidOrientation("orientation violates the homomorphism law at (" + g.name(x) + ", " +
                                 g.name(y) + ")");
  std::vector<Elem> ker, c;
  for (Elem x = 0; x < g.order(); ++x) {
    if (values_[x] == r.one()) ker.push_back(x);
    if (values_[x] == r.one() || values_[x] == r.minus_one()) c.push_back(x);
  }
  kernel_ = ElementSet(g.order(), std::move(ker));
  subgroup_c_ = ElementSet(g.order(), std::move(c));
}

std::vector<Orientation> enumerate_orientations(const GroupPtr& g, const RingPtr& r,
                                                bool include_trivial) {
  const FiniteRing& ring = *r;
  const std::vector<Elem>& gens = g->generators();
  const std::vector<Scalar> units = ring.units();

  // A generator of order k can only go to a unit u with u^k = 1.
  std::vector<std::vector<Scalar>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Scalar u : units) {
      Scalar p = ring.one();
      for (int k = 0; k < g->element_order(gens[i]); ++k) p = ring.mul(p, u);
      if (p == ring.one()) candidates[i].push_back(u);
    }

  std::vector<std::vector<Scalar>> found;
  std::vector<Scalar> images(gens.size());
  auto extend = [&]() -> std::vector<Scalar> {
    std::vector<Scalar> values(g->order(), -1);
    values[g->identity()] = ring.one();
    std::vector<Elem> frontier{g->identity()};
    while (!frontier.empty()) {
      std::vector<Elem> next;
      for (Elem x : frontier)
        for (std::size_t i = 0; i < gens.size(); ++i) {
          const Elem y = g->mul(x, gens[i]);
          const Scalar v = ring.mul(values[x], images[i]);
          if (values[y] < 0) {
            values[y] = v;
            next.push_back(y);
          } else if (values[y] != v) {
            return {};
          }
        }
      frontier = std::move(next);
    }
    for (Elem x = 0; x < g->order(); ++x)
      for (Elem y = 0; y < g->order(); ++y)
        if (values[g->mul(x, y)] != ring.mul(values[x], values[y])) return {};
    return values;
  };
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      std::vector<Scalar> values = extend();
      if (values.empty()) return;
      const bool trivial = std::all_of(values.begin(), values.end(), [&](Scalar v) { return v == ring.one(); });
      if (!trivial || include_trivial) found.push_back(std::move(values));
      return;
    }
    for (Scalar u : candidates[depth]) {
      images[depth] = u;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Orientation> out;
  out.reserve(found.size());
  for (auto& v : found) out.emplace_back(g, r, std::move(v));
  return out;
}

bool is_compatible(const GroupInvolution& tau, const Orientation& sigma) {
  const Group& g = sigma.group();
  if (&tau.group() != &g && tau.group().table() != g.table()) return false;
  for (Elem x = 0; x < g.order(); ++x)
    if (!sigma.kernel().contains(g.mul(x, tau(x)))) return false;
  return true;
}

}  // namespace symj
