#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace symj {

// Ring elements are dense indices 0..size-1.
using Scalar = int;

class NotARing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The annihilator ideal {a : a v = 0} together with R-module generators of it.
struct Annihilator {
  std::vector<Scalar> members;
  std::vector<Scalar> generators;
};

/// Finite commutative ring with unity given by addition and multiplication tables.
class FiniteRing {
 public:
  /// Checks every ring axiom exhaustively; zero and one are located by scan.
  static FiniteRing from_tables(const std::vector<std::vector<int>>& add,
                                const std::vector<std::vector<int>>& mul,
                                std::vector<std::string> names = {}, std::string label = {});

  int size() const { return size_; }
  Scalar zero() const { return zero_; }
  Scalar one() const { return one_; }
  Scalar minus_one() const { return neg_[one_]; }
  Scalar add(Scalar a, Scalar b) const { return add_[a * size_ + b]; }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg_[b]); }
  Scalar mul(Scalar a, Scalar b) const { return mul_[a * size_ + b]; }
  Scalar neg(Scalar a) const { return neg_[a]; }
  /// k * one for any integer k.
  Scalar from_int(long k) const;
  /// k-fold sum a + ... + a.
  Scalar times(long k, Scalar a) const;
  int characteristic() const { return characteristic_; }

  /// Units, ascending by index.
  std::vector<Scalar> units() const;
  bool is_unit(Scalar a) const;
  Scalar unit_inverse(Scalar a) const;
  /// {r : r + r = 0}
  std::vector<Scalar> two_torsion() const;
  Annihilator annihilator(Scalar v) const;
  /// The ideal generated by `gens` (all R-linear combinations).
  std::vector<Scalar> ideal_span(const std::vector<Scalar>& gens) const;
  /// {a * r : r in R}
  std::vector<Scalar> principal_ideal(Scalar a) const;

  const std::string& name(Scalar a) const { return names_[a]; }
  const std::string& label() const { return label_; }
  std::vector<std::vector<int>> add_table() const;
  std::vector<std::vector<int>> mul_table() const;

 private:
  FiniteRing() = default;

  int size_ = 0;
  Scalar zero_ = 0, one_ = 0;
  int characteristic_ = 0;
  std::vector<Scalar> add_, mul_, neg_;
  std::vector<std::string> names_;
  std::string label_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Z/n with element k the residue k.
FiniteRing build_zmod(int n);
/// Componentwise A x B; element index is a * |B| + b.
FiniteRing product_ring(const FiniteRing& a, const FiniteRing& b, std::string label = {});
/// A[u]/(u^2); element index a * |A| + b stands for a + b u.
FiniteRing dual_numbers(const FiniteRing& a, std::string label = {});

/// Ring from a catalog token: "zN", products "zAxzB[x...]", "dual-zN", or a path to a
/// JSON file {"size": n, "add": [[..]], "mul": [[..]]}. Throws std::invalid_argument.
RingPtr ring_from_token(const std::string& token);

}  // namespace symj
