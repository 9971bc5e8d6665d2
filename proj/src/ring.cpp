#include "symj/ring.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace symj {

FiniteRing FiniteRing::from_tables(const std::vector<std::vector<int>>& add,
                                   const std::vector<std::vector<int>>& mul,
                                   std::vector<std::string> names, std::string label) {
  const int n = static_cast<int>(add.size());
  if (n == 0 || static_cast<int>(mul.size()) != n) throw NotARing("tables must be nonempty and equal size");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(add[i].size()) != n || static_cast<int>(mul[i].size()) != n)
      throw NotARing("tables must be square");
    for (int j = 0; j < n; ++j)
      if (add[i][j] < 0 || add[i][j] >= n || mul[i][j] < 0 || mul[i][j] >= n)
        throw NotARing("table entry out of range");
  }

  auto find_identity = [n](const std::vector<std::vector<int>>& t) {
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = t[e][i] == i && t[i][e] == i;
      if (ok) return e;
    }
    return -1;
  };
  const int zero = find_identity(add);
  if (zero < 0) throw NotARing("no additive identity");
  const int one = find_identity(mul);
  if (one < 0) throw NotARing("no multiplicative identity");

  std::vector<Scalar> neg(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (add[i][j] == zero) neg[i] = j;
    if (neg[i] < 0) throw NotARing("element without additive inverse");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (add[i][j] != add[j][i]) throw NotARing("addition not commutative");
      if (mul[i][j] != mul[j][i]) throw NotARing("multiplication not commutative");
      for (int k = 0; k < n; ++k) {
        if (add[add[i][j]][k] != add[i][add[j][k]]) throw NotARing("addition not associative");
        if (mul[mul[i][j]][k] != mul[i][mul[j][k]]) throw NotARing("multiplication not associative");
        if (mul[i][add[j][k]] != add[mul[i][j]][mul[i][k]]) throw NotARing("not distributive");
      }
    }

  FiniteRing r;
  r.size_ = n;
  r.zero_ = zero;
  r.one_ = one;
  r.neg_ = std::move(neg);
  r.add_.resize(static_cast<std::size_t>(n) * n);
  r.mul_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r.add_[i * n + j] = add[i][j];
      r.mul_[i * n + j] = mul[i][j];
    }
  int c = 1;
  for (Scalar s = one; s != zero; s = r.add(s, one)) ++c;
  r.characteristic_ = c;
  if (names.empty())
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  if (static_cast<int>(names.size()) != n) throw NotARing("names length differs from size");
  r.names_ = std::move(names);
  r.label_ = label.empty() ? "R" + std::to_string(n) : std::move(label);
  return r;
}

Scalar FiniteRing::times(long k, Scalar a) const {
  Scalar acc = zero_;
  const long m = ((k % characteristic_) + characteristic_) % characteristic_;
  for (long i = 0; i < m; ++i) acc = add(acc, a);
  return acc;
}

Scalar FiniteRing::from_int(long k) const { return times(k, one_); }

std::vector<Scalar> FiniteRing::units() const {
  std::vector<Scalar> u;
  for (Scalar a = 0; a < size_; ++a)
    if (is_unit(a)) u.push_back(a);
  return u;
}

bool FiniteRing::is_unit(Scalar a) const { return unit_inverse(a) >= 0; }

Scalar FiniteRing::unit_inverse(Scalar a) const {
  for (Scalar b = 0; b < size_; ++b)
    if (mul(a, b) == one_) return b;
  return -1;
}

std::vector<Scalar> FiniteRing::two_torsion() const {
  std::vector<Scalar> t;
  for (Scalar a = 0; a < size_; ++a)
    if (add(a, a) == zero_) t.push_back(a);
  return t;
}

std::vector<Scalar> FiniteRing::ideal_span(const std::vector<Scalar>& gens) const {
  std::vector<bool> in(size_, false);
  in[zero_] = true;
  std::vector<Scalar> frontier{zero_};
  // Closure of {0} under x -> x + r g; reaches every combination sum r_i g_i.
  std::vector<Scalar> multiples;
  for (Scalar g : gens)
    for (Scalar r = 0; r < size_; ++r) multiples.push_back(mul(r, g));
  while (!frontier.empty()) {
    std::vector<Scalar> next;
    for (Scalar x : frontier)
      for (Scalar m : multiples) {
        const Scalar y = add(x, m);
        if (!in[y]) {
          in[y] = true;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::vector<Scalar> out;
  for (Scalar a = 0; a < size_; ++a)
    if (in[a]) out.push_back(a);
  return out;
}

std::vector<Scalar> FiniteRing::principal_ideal(Scalar a) const { return ideal_span({a}); }

Annihilator FiniteRing::annihilator(Scalar v) const {
  Annihilator ann;
  for (Scalar a = 0; a < size_; ++a)
    if (mul(a, v) == zero_) ann.members.push_back(a);
  // Greedy: take the smallest-index member outside the current span until it is exhausted.
  // For Z/n this yields the single generator n / gcd(n, v).
  std::vector<Scalar> span{zero_};
  for (Scalar a : ann.members) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    ann.generators.push_back(a);
    span = ideal_span(ann.generators);
  }
  return ann;
}

std::vector<std::vector<int>> FiniteRing::add_table() const {
  std::vector<std::vector<int>> t(size_, std::vector<int>(size_));
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) t[i][j] = add(i, j);
  return t;
}

std::vector<std::vector<int>> FiniteRing::mul_table() const {
  std::vector<std::vector<int>> t(size_, std::vector<int>(size_));
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) t[i][j] = mul(i, j);
  return t;
}

FiniteRing build_zmod(int n) {
  if (n < 2) throw std::invalid_argument("Z/n requires n >= 2");
  std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      add[i][j] = (i + j) % n;
      mul[i][j] = (i * j) % n;
    }
  return FiniteRing::from_tables(add, mul, {}, "z" + std::to_string(n));
}

FiniteRing product_ring(const FiniteRing& a, const FiniteRing& b, std::string label) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int x = 0; x < n; ++x) {
    names[x] = "(" + a.name(x / nb) + "," + b.name(x % nb) + ")";
    for (int y = 0; y < n; ++y) {
      add[x][y] = a.add(x / nb, y / nb) * nb + b.add(x % nb, y % nb);
      mul[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  if (label.empty()) label = a.label() + "x" + b.label();
  return FiniteRing::from_tables(add, mul, std::move(names), std::move(label));
}

FiniteRing dual_numbers(const FiniteRing& a, std::string label) {
  const int na = a.size(), n = na * na;
  std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int x = 0; x < n; ++x) {
    const int p = x / na, q = x % na;
    names[x] = a.name(p) + "+" + a.name(q) + "u";
    for (int y = 0; y < n; ++y) {
      const int r = y / na, s = y % na;
      add[x][y] = a.add(p, r) * na + a.add(q, s);
      // (p + q u)(r + s u) = pr + (ps + qr) u
      mul[x][y] = a.mul(p, r) * na + a.add(a.mul(p, s), a.mul(q, r));
    }
  }
  if (label.empty()) label = "dual-" + a.label();
  return FiniteRing::from_tables(add, mul, std::move(names), std::move(label));
}

namespace {

FiniteRing zmod_token(const std::string& tok) {
  if (tok.size() < 2 || tok[0] != 'z') throw std::invalid_argument("unknown ring token: " + tok);
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(tok.substr(1), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown ring token: " + tok);
  }
  if (used != tok.size() - 1 || n < 2 || n > 64) throw std::invalid_argument("unknown ring token: " + tok);
  return build_zmod(n);
}

FiniteRing ring_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open ring file: " + path);
  nlohmann::json j;
  try {
    in >> j;
    auto add = j.at("add").get<std::vector<std::vector<int>>>();
    auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
    if (j.contains("size") && j.at("size").get<int>() != static_cast<int>(add.size()))
      throw std::invalid_argument("ring file: size does not match tables");
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return FiniteRing::from_tables(add, mul, std::move(names), path);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("ring file " + path + ": " + e.what());
  } catch (const NotARing& e) {
    throw std::invalid_argument("ring file " + path + ": " + e.what());
  }
}

}  // namespace

RingPtr ring_from_token(const std::string& token) {
  if (token.ends_with(".json")) return std::make_shared<const FiniteRing>(ring_from_json_file(token));
  if (token.starts_with("dual-"))
    return std::make_shared<const FiniteRing>(dual_numbers(zmod_token(token.substr(5)), token));
  std::vector<std::string> parts;
  std::stringstream ss(token);
  for (std::string p; std::getline(ss, p, 'x');) parts.push_back(p);
  if (parts.empty()) throw std::invalid_argument("empty ring token");
  FiniteRing r = zmod_token(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) r = product_ring(r, zmod_token(parts[i]));
  return std::make_shared<const FiniteRing>(std::move(r));
}

}  // namespace symj
