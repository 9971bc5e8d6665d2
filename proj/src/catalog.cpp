#include "symj/catalog.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace symj {

namespace {

std::string power_name(const std::string& letter, int k) {
  if (k == 0) return "";
  if (k == 1) return letter;
  return letter + "^" + std::to_string(k);
}

std::string join_names(const std::string& x, const std::string& y) {
  if (x == "1") return y;
  if (y == "1") return x;
  return x + y;
}

std::string or_one(std::string s) { return s.empty() ? "1" : s; }

}  // namespace

Group cyclic_group(int n, const std::string& letter) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = or_one(power_name(letter, i));
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return Group::from_table(t, std::move(names), "C" + std::to_string(n));
}

Group direct_product(const Group& a, const Group& b, std::string label) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int x = 0; x < n; ++x) {
    names[x] = join_names(a.name(x / nb), b.name(x % nb));
    for (int y = 0; y < n; ++y)
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  if (label.empty()) label = a.label() + "x" + b.label();
  return Group::from_table(t, std::move(names), std::move(label));
}

Group metacyclic_group(int m, int n, int r, int c, std::string label, const std::string& a_letter,
                       const std::string& b_letter) {
  const int order = m * n;
  std::vector<int> rpow(n, 1);
  for (int j = 1; j < n; ++j) rpow[j] = rpow[j - 1] * r % m;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<std::string> names(order);
  for (int x = 0; x < order; ++x) {
    const int i = x % m, j = x / m;
    names[x] = or_one(power_name(a_letter, i) + power_name(b_letter, j));
    for (int y = 0; y < order; ++y) {
      const int k = y % m, l = y / m;
      int ai = i + k * rpow[j];
      int bj = j + l;
      if (bj >= n) {
        bj -= n;
        ai += c;
      }
      t[x][y] = bj * m + ai % m;
    }
  }
  return Group::from_table(t, std::move(names), std::move(label));
}

Group semidirect_with_cyclic(const Group& normal, int k, const std::vector<Elem>& action,
                             std::string label, const std::string& b_letter) {
  const int nn = normal.order(), order = nn * k;
  if (static_cast<int>(action.size()) != nn) throw std::invalid_argument("action size mismatch");
  // act[j][x] = action^j(x)
  std::vector<std::vector<Elem>> act(k, std::vector<Elem>(nn));
  for (int x = 0; x < nn; ++x) act[0][x] = x;
  for (int j = 1; j < k; ++j)
    for (int x = 0; x < nn; ++x) act[j][x] = action[act[j - 1][x]];
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<std::string> names(order);
  for (int p = 0; p < order; ++p) {
    const int x = p % nn, j = p / nn;
    names[p] = or_one((x == normal.identity() ? "" : normal.name(x)) + power_name(b_letter, j));
    for (int q = 0; q < order; ++q) {
      const int y = q % nn, l = q / nn;
      t[p][q] = ((j + l) % k) * nn + normal.mul(x, act[j][y]);
    }
  }
  return Group::from_table(t, std::move(names), std::move(label));
}

namespace {

Group quaternion8() {
  Group q = metacyclic_group(4, 2, 3, 2, "Q8", "i", "j");
  // a = i, b = j, ab = k
  std::vector<std::string> names{"1", "i", "-1", "-i", "j", "k", "-j", "-k"};
  return Group::from_table(q.table(), std::move(names), "Q8");
}

// Automorphism of C_m x C_n2 given on exponent pairs (p, q).
template <typename F>
std::vector<Elem> product_action(int m, int n2, F f) {
  std::vector<Elem> act(m * n2);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < n2; ++q) {
      auto [pp, qq] = f(p, q);
      act[p * n2 + q] = ((pp % m + m) % m) * n2 + (qq % n2 + n2) % n2;
    }
  return act;
}

std::vector<GroupPtr> build_full_catalog() {
  std::vector<GroupPtr> out;
  auto add = [&](Group g) { out.push_back(std::make_shared<const Group>(std::move(g))); };
  auto cyc = [](int n, const char* l) { return cyclic_group(n, l); };
  auto dihedral = [](int n) {
    return metacyclic_group(n, 2, n - 1, 0, "D" + std::to_string(n), "r", "s");
  };

  add(cyclic_group(1));
  add(cyclic_group(2));
  add(cyclic_group(3));
  add(cyclic_group(4));
  add(direct_product(cyc(2, "a"), cyc(2, "b"), "C2xC2"));
  add(cyclic_group(5));
  add(cyclic_group(6));
  add(dihedral(3));
  add(cyclic_group(7));
  add(cyclic_group(8));
  add(direct_product(cyc(2, "b"), cyc(4, "a"), "C2xC4"));
  add(direct_product(direct_product(cyc(2, "a"), cyc(2, "b")), cyc(2, "c"), "C2xC2xC2"));
  add(dihedral(4));
  add(quaternion8());
  add(cyclic_group(9));
  add(direct_product(cyc(3, "a"), cyc(3, "b"), "C3xC3"));
  add(cyclic_group(10));
  add(dihedral(5));
  add(cyclic_group(11));
  add(cyclic_group(12));
  add(direct_product(cyc(2, "b"), cyc(6, "a"), "C2xC6"));
  add(dihedral(6));
  add(metacyclic_group(6, 2, 5, 3, "Dic3", "a", "b"));
  {
    const Group v4 = direct_product(cyc(2, "a"), cyc(2, "b"));
    // index = i*2 + j for a^i b^j; cycle a -> b -> ab -> a
    add(semidirect_with_cyclic(v4, 3, {0, 3, 1, 2}, "A4", "c"));
  }
  add(cyclic_group(13));
  add(cyclic_group(14));
  add(dihedral(7));
  add(cyclic_group(15));
  add(cyclic_group(16));
  add(direct_product(cyc(2, "b"), cyc(8, "a"), "C2xC8"));
  add(direct_product(cyc(4, "a"), cyc(4, "b"), "C4xC4"));
  add(direct_product(direct_product(cyc(2, "b"), cyc(2, "c")), cyc(4, "a"), "C2xC2xC4"));
  add(direct_product(direct_product(direct_product(cyc(2, "a"), cyc(2, "b")), cyc(2, "c")),
                     cyc(2, "d"), "C2xC2xC2xC2"));
  add(dihedral(8));
  add(metacyclic_group(8, 2, 7, 4, "Q16", "a", "b"));
  add(metacyclic_group(8, 2, 3, 0, "SD16", "a", "b"));
  add(metacyclic_group(8, 2, 5, 0, "M16", "a", "b"));
  add(metacyclic_group(4, 4, 3, 0, "C4:C4", "a", "b"));
  {
    const Group n = direct_product(cyc(4, "a"), cyc(2, "b"));
    // c a c^-1 = ab, c b c^-1 = b
    add(semidirect_with_cyclic(n, 2, product_action(4, 2, [](int p, int q) {
                                 return std::pair{p, p + q};
                               }),
                               "C2^2:C4", "c"));
  }
  {
    const Group n = direct_product(cyc(4, "i"), cyc(2, "x"));
    // z i z^-1 = i, z x z^-1 = i^2 x
    add(semidirect_with_cyclic(n, 2, product_action(4, 2, [](int p, int q) {
                                 return std::pair{p + 2 * q, q};
                               }),
                               "Pauli", "z"));
  }
  add(direct_product(cyc(2, "z"), dihedral(4), "C2xD4"));
  add(direct_product(cyc(2, "z"), quaternion8(), "C2xQ8"));
  return out;
}

const std::vector<GroupPtr>& full_catalog() {
  static const std::vector<GroupPtr> catalog = build_full_catalog();
  return catalog;
}

}  // namespace

std::vector<GroupPtr> builtin_catalog(const CatalogOptions& options) {
  if (options.max_order < 1 || options.max_order > 16)
    throw std::invalid_argument("builtin catalog covers orders 1..16");
  std::vector<GroupPtr> out;
  for (const GroupPtr& g : full_catalog()) {
    if (g->order() > options.max_order) continue;
    if (g->order() == 1 && !options.include_trivial_group) continue;
    out.push_back(g);
  }
  return out;
}

GroupPtr catalog_group(const std::string& label) {
  for (const GroupPtr& g : full_catalog())
    if (g->label() == label) return g;
  return nullptr;
}

}  // namespace symj
