#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symj/group_ring.hpp"

namespace symj {

struct JordanWitness {
  std::size_t first = 0;  // indices into SymmetricGenerators::all()
  std::size_t second = 0;
  GroupRingElement a;
  GroupRingElement b;
  GroupRingElement product;  // a o b, nonzero
};

struct Verdict {
  bool holds = true;
  std::optional<JordanWitness> witness;
};

/// Decides whether the span of `gens` anticommutes. By bilinearity and symmetry of
/// a o b this holds iff every unordered generator pair, self-pairs included, has
/// vanishing Jordan product. The witness is the first failing self-pair, else the first
/// failing pair i < j in row order.
Verdict check_anticommutative(const SymmetricGenerators& gens);
Verdict check_anticommutative(const std::vector<GroupRingElement>& gens);

/// OpenMP kernel for the same decision and the same witness.
Verdict check_anticommutative_parallel(const std::vector<GroupRingElement>& gens);

class HypothesisNotMet : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct LemmaCheck {
  std::string id;
  std::string statement;
  bool holds = true;
  std::string counterexample;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;

  bool all_hold() const;
  const LemmaCheck* find(const std::string& id) const;
};

/// Ids of the structural consequences of anticommutativity checked by check_lemma_suite.
const std::vector<std::string>& lemma_ids();

/// Asserts every consequence the classification derives from anticommutativity.
/// Throws HypothesisNotMet when the generators do not anticommute.
LemmaReport check_lemma_suite(const GroupInvolution& tau, const Orientation& sigma,
                              const SymmetricGenerators& gens);

}  // namespace symj
