#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symj/checker.hpp"
#include "symj/classifier.hpp"

namespace symj {

enum class Mode { Verify, Classify, Lemmas };
enum class Format { Json, Csv };

std::string to_string(Mode m);

struct SweepConfig {
  int max_order = 16;
  bool use_catalog = true;
  std::vector<std::string> group_files;
  std::vector<std::string> rings{"z4"};
  Mode mode = Mode::Verify;
  std::string out_path;
  Format format = Format::Json;
  int jobs = 1;
  bool include_trivial_sigma = false;
  bool include_trivial_group = false;
  /// Raises the order cap for table files from 16 to 32.
  bool allow_large = false;
  /// Adds wall-clock timing to the summary (breaks byte-identical reports).
  bool timing = false;
};

/// Throws std::invalid_argument when the config is unusable.
void validate(const SweepConfig& config);

struct Instance {
  GroupPtr group;
  RingPtr ring;
  std::string ring_token;
  std::size_t involution_index = 0;
  std::size_t orientation_index = 0;
  GroupInvolution tau;
  Orientation sigma;
};

/// Every (G, tau, sigma) with sigma compatible with tau, per ring, in deterministic order:
/// groups (catalog then files), rings as listed, involutions, orientations.
std::vector<Instance> enumerate_instances(const SweepConfig& config);

struct WitnessRecord {
  std::size_t first = 0, second = 0;
  std::string a, b, product;
  std::vector<Scalar> product_coeffs;
};

struct InstanceRecord {
  std::string group;
  std::string ring;
  std::size_t involution_index = 0;
  std::vector<Elem> involution;
  std::size_t orientation_index = 0;
  std::vector<Scalar> orientation;
  bool rejected_char_two = false;
  bool direct = false;
  bool predicate = false;
  bool agreement = true;
  StructureCase structure;
  Gp14Tag gp14 = Gp14Tag::None;
  bool c_is_kernel = true;
  bool placement_sensitive = false;
  RingConditions ring_conditions;
  std::optional<WitnessRecord> witness;
  std::optional<LemmaReport> lemmas;
};

/// Evaluates one instance: direct check, classification, and (Mode::Lemmas, when the
/// direct check holds) the lemma suite.
InstanceRecord evaluate_instance(const Instance& inst, Mode mode);

namespace serial {
std::vector<InstanceRecord> evaluate(const std::vector<Instance>& instances, Mode mode);
}
namespace omp {
/// Same records in the same order as serial::evaluate.
std::vector<InstanceRecord> evaluate(const std::vector<Instance>& instances, Mode mode, int jobs);
}

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t rejected = 0;
  std::size_t holds = 0;
  std::size_t predicate_true = 0;
  std::size_t mismatches = 0;
  std::size_t lemma_failures = 0;
  std::size_t restriction_violations = 0;  // direct holds, C != N, gp14 NONE
  std::size_t placement_sensitive = 0;
  std::map<std::string, std::size_t> structure_histogram;
  std::map<std::string, std::size_t> gp14_histogram;
  std::optional<double> elapsed_seconds;
};

SweepSummary summarize(const std::vector<InstanceRecord>& records);

nlohmann::ordered_json record_to_json(const InstanceRecord& r, Mode mode);
std::string report_json(const SweepConfig& config, const std::vector<InstanceRecord>& records,
                        const SweepSummary& summary);
std::string report_csv(const std::vector<InstanceRecord>& records, Mode mode);

/// Runs a configured sweep, writes the report and a short summary to `log`.
/// Returns 0 when clean, 2 on any mismatch or lemma failure.
int run_sweep(const SweepConfig& config, std::ostream& log);

/// Human-readable account of one instance: generators, Jordan table, case, witness.
std::string explain_instance(const Instance& inst);

}  // namespace symj
