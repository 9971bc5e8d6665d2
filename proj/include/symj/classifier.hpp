#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symj/group_ring.hpp"

namespace symj {

enum class StructureTag { IA, IB1, IB2, IB3, None };
enum class Gp14Tag { A, B, C, None };

std::string to_string(StructureTag tag);
/// "GP14-A", "GP14-B", "GP14-C" or "NONE".
std::string to_string(Gp14Tag tag);

struct StructureCase {
  StructureTag tag = StructureTag::None;
  std::optional<Elem> s;
  std::optional<Elem> t;  // IB3 only
};

/// Where the distinguished central elements s, t are searched.
enum class Placement {
  SymmetricKernel,  // N_* and Z(G)
  Symmetric,        // G_* and Z(G)
};

struct RingConditions {
  bool nonsymmetric_pairs = true;   // pairs x, y outside G_*
  bool mixed_pairs = true;          // x outside G_*, y in G_*
  bool symmetric_pairs = true;      // x, y in G_*
  std::string first_failure;

  bool all() const { return nonsymmetric_pairs && mixed_pairs && symmetric_pairs; }
};

struct ClassificationResult {
  StructureCase structure;
  RingConditions ring_conditions;
  bool predicate = false;
  Gp14Tag gp14 = Gp14Tag::None;
  /// Predicate value when s, t are only required to lie in G_* and Z(G).
  bool predicate_symmetric_placement = false;
};

class CharTwoRejected : public std::invalid_argument {
 public:
  CharTwoRejected() : std::invalid_argument("characteristic 2 coefficient rings are outside the classification") {}
};

/// Structural case of the classification, without the characteristic gate.
StructureCase classify_structure(const GroupInvolution& tau, const Orientation& sigma,
                                 Placement placement = Placement::SymmetricKernel);

/// Coefficient conditions on nonsymmetric pairs, mixed pairs and symmetric pairs,
/// quantified over every admissible coefficient.
RingConditions check_ring_conditions(const GroupInvolution& tau, const Orientation& sigma);

/// Full right-hand side of the anticommutativity criterion: a structural case with its
/// characteristic gate (4 or 8 for IA, 4 for IB*) and all three ring conditions.
/// Throws CharTwoRejected for characteristic 2.
ClassificationResult theorem_predicate(const GroupInvolution& tau, const Orientation& sigma);

/// The +-1-oriented criterion evaluated on C = {x : sigma(x) = +-1} with tau restricted to C.
Gp14Tag gp14_predicate(const GroupInvolution& tau, const Orientation& sigma);

/// Outcome of the exhaustive search for a two-commutator (IB3) structure.
struct Ib3Diagnosis {
  bool satisfied = false;
  std::optional<Elem> s, t;
  /// First condition failed by the best (s, t) candidate; empty when satisfied.
  std::string first_failing;
};

/// Ordered condition names used by diagnose_ib3.
const std::vector<std::string>& ib3_conditions();
Ib3Diagnosis diagnose_ib3(const GroupInvolution& tau, const Orientation& sigma,
                          Placement placement = Placement::SymmetricKernel);

}  // namespace symj
