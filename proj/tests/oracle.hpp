#pragma once

// Brute-force reference computations on raw tables and integers mod n.
// Nothing here goes through the library's algorithms.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;

inline int identity_of(const Table& t) {
  for (int e = 0; e < (int)t.size(); ++e) {
    bool ok = true;
    for (int x = 0; x < (int)t.size(); ++x) ok = ok && t[e][x] == x && t[x][e] == x;
    if (ok) return e;
  }
  return -1;
}

inline int inverse_of(const Table& t, int x) {
  const int e = identity_of(t);
  for (int y = 0; y < (int)t.size(); ++y)
    if (t[x][y] == e) return y;
  return -1;
}

// Smallest set containing `seed` closed under the table product.
inline std::set<int> close(const Table& t, std::set<int> seed) {
  seed.insert(identity_of(t));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(seed.begin(), seed.end());
    for (int a : cur)
      for (int b : cur)
        if (seed.insert(t[a][b]).second) grew = true;
  }
  return seed;
}

inline std::set<int> center(const Table& t) {
  std::set<int> z;
  for (int x = 0; x < (int)t.size(); ++x) {
    bool c = true;
    for (int y = 0; y < (int)t.size(); ++y) c = c && t[x][y] == t[y][x];
    if (c) z.insert(x);
  }
  return z;
}

inline int commutator(const Table& t, int x, int y) {
  return t[t[inverse_of(t, x)][inverse_of(t, y)]][t[x][y]];
}

inline std::set<int> derived(const Table& t) {
  std::set<int> c;
  for (int x = 0; x < (int)t.size(); ++x)
    for (int y = 0; y < (int)t.size(); ++y) c.insert(commutator(t, x, y));
  return close(t, c);
}

// Every permutation p with p(xy) = p(y)p(x) and p(p(x)) = x.
inline std::vector<std::vector<int>> involutions(const Table& t) {
  const int n = (int)t.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = p[p[x]] == x;
      for (int y = 0; y < n && ok; ++y) ok = p[t[x][y]] == t[p[y]][p[x]];
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int gcd(int a, int b) { return std::gcd(a, b); }

// All maps into the units of Z/n that respect the table product.
inline std::vector<std::vector<int>> homs_to_units(const Table& t, int n) {
  std::vector<int> units;
  for (int u = 1; u < n; ++u)
    if (gcd(u, n) == 1) units.push_back(u);
  const int g = (int)t.size();
  std::vector<std::vector<int>> out;
  std::vector<int> idx(g, 0);
  while (true) {
    std::vector<int> v(g);
    for (int i = 0; i < g; ++i) v[i] = units[idx[i]];
    bool ok = true;
    for (int x = 0; x < g && ok; ++x)
      for (int y = 0; y < g && ok; ++y) ok = v[t[x][y]] == v[x] * v[y] % n;
    if (ok) out.push_back(v);
    int k = 0;
    while (k < g && ++idx[k] == (int)units.size()) idx[k++] = 0;
    if (k == g) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Group ring arithmetic over Z/n with dense integer coefficient vectors.
using Vec = std::vector<int>;

inline Vec mul(const Table& t, const Vec& a, const Vec& b, int n) {
  Vec c(a.size(), 0);
  for (size_t x = 0; x < a.size(); ++x)
    for (size_t y = 0; y < b.size(); ++y) c[t[x][y]] = (c[t[x][y]] + a[x] * b[y]) % n;
  return c;
}

inline Vec jordan(const Table& t, const Vec& a, const Vec& b, int n) {
  Vec p = mul(t, a, b, n), q = mul(t, b, a, n);
  for (size_t i = 0; i < p.size(); ++i) p[i] = (p[i] + q[i]) % n;
  return p;
}

}  // namespace oracle
