#include "symj/sweep.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "symj/catalog.hpp"
#include "symj/io.hpp"

namespace symj {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Verify: return "verify";
    case Mode::Classify: return "classify";
    case Mode::Lemmas: return "lemmas";
  }
  return "verify";
}

void validate(const SweepConfig& config) {
  const int cap = config.allow_large ? 32 : 16;
  if (config.max_order < 1 || config.max_order > cap)
    throw std::invalid_argument("--max-order must be in 1.." + std::to_string(cap));
  if (!config.use_catalog && config.group_files.empty())
    throw std::invalid_argument("no group source: enable the catalog or pass group files");
  if (config.rings.empty()) throw std::invalid_argument("at least one ring is required");
  if (config.jobs < 1) throw std::invalid_argument("--jobs must be positive");
}

std::vector<Instance> enumerate_instances(const SweepConfig& config) {
  validate(config);
  std::vector<GroupPtr> groups;
  if (config.use_catalog)
    groups = builtin_catalog({std::min(config.max_order, 16), config.include_trivial_group});
  for (const std::string& path : config.group_files) {
    auto g = std::make_shared<const Group>(load_group_file(path));
    if (g->order() > config.max_order)
      throw std::invalid_argument(path + ": group order " + std::to_string(g->order()) + " exceeds --max-order");
    groups.push_back(std::move(g));
  }
  std::vector<std::pair<std::string, RingPtr>> rings;
  for (const std::string& tok : config.rings) rings.emplace_back(tok, ring_from_token(tok));

  std::vector<Instance> out;
  for (const GroupPtr& g : groups) {
    const std::vector<GroupInvolution> taus = enumerate_involutions(g);
    for (const auto& [tok, r] : rings) {
      const std::vector<Orientation> sigmas = enumerate_orientations(g, r, config.include_trivial_sigma);
      for (std::size_t i = 0; i < taus.size(); ++i)
        for (std::size_t j = 0; j < sigmas.size(); ++j)
          if (is_compatible(taus[i], sigmas[j])) out.push_back(Instance{g, r, tok, i, j, taus[i], sigmas[j]});
    }
  }
  return out;
}

InstanceRecord evaluate_instance(const Instance& inst, Mode mode) {
  InstanceRecord rec;
  rec.group = inst.group->label();
  rec.ring = inst.ring_token;
  rec.involution_index = inst.involution_index;
  rec.involution = inst.tau.map();
  rec.orientation_index = inst.orientation_index;
  rec.orientation = inst.sigma.values();
  rec.c_is_kernel = inst.sigma.subgroup_c() == inst.sigma.kernel();
  if (inst.ring->characteristic() == 2) {
    rec.rejected_char_two = true;
    return rec;
  }
  const SymmetricGenerators gens = symmetric_generators(inst.tau, inst.sigma);
  const std::vector<GroupRingElement> all = gens.all();
  const Verdict v = check_anticommutative(all);
  rec.direct = v.holds;
  if (v.witness) {
    const JordanWitness& w = *v.witness;
    rec.witness = WitnessRecord{w.first, w.second, w.a.to_string(), w.b.to_string(), w.product.to_string(),
                                w.product.coeffs()};
  }
  const ClassificationResult cls = theorem_predicate(inst.tau, inst.sigma);
  rec.predicate = cls.predicate;
  rec.agreement = rec.direct == rec.predicate;
  rec.structure = cls.structure;
  rec.gp14 = cls.gp14;
  rec.ring_conditions = cls.ring_conditions;
  rec.placement_sensitive = cls.predicate != cls.predicate_symmetric_placement;
  if (mode == Mode::Lemmas && v.holds) rec.lemmas = check_lemma_suite(inst.tau, inst.sigma, gens);
  return rec;
}

namespace serial {
std::vector<InstanceRecord> evaluate(const std::vector<Instance>& instances, Mode mode) {
  std::vector<InstanceRecord> out;
  out.reserve(instances.size());
  for (const Instance& inst : instances) out.push_back(evaluate_instance(inst, mode));
  return out;
}
}  // namespace serial

namespace omp {
std::vector<InstanceRecord> evaluate(const std::vector<Instance>& instances, Mode mode, int jobs) {
  std::vector<InstanceRecord> out(instances.size());
  const long n = static_cast<long>(instances.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
  for (long i = 0; i < n; ++i) out[i] = evaluate_instance(instances[i], mode);
  return out;
}
}  // namespace omp

SweepSummary summarize(const std::vector<InstanceRecord>& records) {
  SweepSummary s;
  s.instances = records.size();
  for (const InstanceRecord& r : records) {
    if (r.rejected_char_two) {
      ++s.rejected;
      continue;
    }
    if (r.direct) ++s.holds;
    if (r.predicate) ++s.predicate_true;
    if (!r.agreement) ++s.mismatches;
    if (r.lemmas && !r.lemmas->all_hold()) ++s.lemma_failures;
    if (r.direct && !r.c_is_kernel && r.gp14 == Gp14Tag::None) ++s.restriction_violations;
    if (r.placement_sensitive) ++s.placement_sensitive;
    ++s.structure_histogram[to_string(r.structure.tag)];
    ++s.gp14_histogram[to_string(r.gp14)];
  }
  return s;
}

nlohmann::ordered_json record_to_json(const InstanceRecord& r, Mode mode) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["ring"] = r.ring;
  j["involution_index"] = r.involution_index;
  j["involution"] = r.involution;
  j["orientation_index"] = r.orientation_index;
  j["orientation"] = r.orientation;
  if (r.rejected_char_two) {
    j["status"] = "rejected: char 2";
    return j;
  }
  j["status"] = "evaluated";
  j["direct"] = r.direct;
  j["predicate"] = r.predicate;
  j["agreement"] = r.agreement;
  if (mode != Mode::Verify) {
    nlohmann::ordered_json s;
    s["tag"] = to_string(r.structure.tag);
    s["s"] = r.structure.s ? nlohmann::ordered_json(*r.structure.s) : nlohmann::ordered_json(nullptr);
    s["t"] = r.structure.t ? nlohmann::ordered_json(*r.structure.t) : nlohmann::ordered_json(nullptr);
    j["structure"] = s;
    j["gp14"] = to_string(r.gp14);
    j["ring_conditions"] = {{"nonsymmetric_pairs", r.ring_conditions.nonsymmetric_pairs},
                            {"mixed_pairs", r.ring_conditions.mixed_pairs},
                            {"symmetric_pairs", r.ring_conditions.symmetric_pairs}};
    j["placement_sensitive"] = r.placement_sensitive;
  }
  if (r.witness) {
    j["witness"] = {{"first", r.witness->first},     {"second", r.witness->second},
                    {"a", r.witness->a},             {"b", r.witness->b},
                    {"product", r.witness->product}, {"product_coeffs", r.witness->product_coeffs}};
  } else {
    j["witness"] = nullptr;
  }
  if (mode == Mode::Lemmas) {
    if (r.lemmas) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const LemmaCheck& c : r.lemmas->checks) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["holds"] = c.holds;
        e["counterexample"] = c.holds ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.counterexample);
        arr.push_back(e);
      }
      j["lemmas"] = arr;
    } else {
      j["lemmas"] = nullptr;
    }
  }
  return j;
}

std::string report_json(const SweepConfig& config, const std::vector<InstanceRecord>& records,
                        const SweepSummary& summary) {
  nlohmann::ordered_json j;
  j["schema"] = "symj-report/1";
  j["mode"] = to_string(config.mode);
  j["config"] = {{"max_order", config.max_order},
                 {"catalog", config.use_catalog},
                 {"group_files", config.group_files},
                 {"rings", config.rings},
                 {"include_trivial_sigma", config.include_trivial_sigma}};
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const InstanceRecord& r : records) recs.push_back(record_to_json(r, config.mode));
  j["records"] = std::move(recs);
  nlohmann::ordered_json s;
  s["instances"] = summary.instances;
  s["rejected_char_two"] = summary.rejected;
  s["holds"] = summary.holds;
  s["predicate_true"] = summary.predicate_true;
  s["mismatches"] = summary.mismatches;
  s["lemma_failures"] = summary.lemma_failures;
  s["restriction_violations"] = summary.restriction_violations;
  s["placement_sensitive"] = summary.placement_sensitive;
  s["structure_histogram"] = summary.structure_histogram;
  s["gp14_histogram"] = summary.gp14_histogram;
  if (summary.elapsed_seconds) s["timing"] = {{"elapsed_seconds", *summary.elapsed_seconds}};
  j["summary"] = std::move(s);
  return j.dump(1) + "\n";
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string report_csv(const std::vector<InstanceRecord>& records, Mode mode) {
  std::ostringstream os;
  os << "group,ring,involution_index,involution,orientation_index,orientation,status,direct,predicate,"
        "agreement,structure.tag,structure.s,structure.t,gp14,"
        "ring_conditions.nonsymmetric_pairs,ring_conditions.mixed_pairs,ring_conditions.symmetric_pairs,"
        "witness.first,witness.second,witness.product";
  if (mode == Mode::Lemmas) os << ",lemmas.all_hold";
  os << "\n";
  auto opt = [](const std::optional<Elem>& e) { return e ? std::to_string(*e) : std::string(); };
  for (const InstanceRecord& r : records) {
    os << csv_quote(r.group) << ',' << csv_quote(r.ring) << ',' << r.involution_index << ','
       << join(r.involution) << ',' << r.orientation_index << ',' << join(r.orientation) << ',';
    if (r.rejected_char_two) {
      os << "rejected: char 2,,,,,,,,,,,,,";
      if (mode == Mode::Lemmas) os << ',';
      os << "\n";
      continue;
    }
    os << "evaluated," << r.direct << ',' << r.predicate << ',' << r.agreement << ','
       << to_string(r.structure.tag) << ',' << opt(r.structure.s) << ',' << opt(r.structure.t) << ','
       << to_string(r.gp14) << ',' << r.ring_conditions.nonsymmetric_pairs << ','
       << r.ring_conditions.mixed_pairs << ',' << r.ring_conditions.symmetric_pairs << ',';
    if (r.witness)
      os << r.witness->first << ',' << r.witness->second << ',' << csv_quote(r.witness->product);
    else
      os << ",,";
    if (mode == Mode::Lemmas) os << ',' << (r.lemmas ? (r.lemmas->all_hold() ? "1" : "0") : "");
    os << "\n";
  }
  return os.str();
}

int run_sweep(const SweepConfig& config, std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Instance> instances = enumerate_instances(config);
  const std::vector<InstanceRecord> records =
      config.jobs > 1 ? omp::evaluate(instances, config.mode, config.jobs) : serial::evaluate(instances, config.mode);
  SweepSummary summary = summarize(records);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (config.timing) summary.elapsed_seconds = elapsed;

  const std::string text = config.format == Format::Json ? report_json(config, records, summary)
                                                          : report_csv(records, config.mode);
  if (config.out_path.empty() || config.out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write report: " + config.out_path);
    out << text;
    if (!out) throw std::runtime_error("failed writing report: " + config.out_path);
  }

  log << "instances=" << summary.instances << " rejected=" << summary.rejected << " holds=" << summary.holds
      << " predicate=" << summary.predicate_true << " mismatches=" << summary.mismatches;
  if (config.mode == Mode::Lemmas) log << " lemma_failures=" << summary.lemma_failures;
  log << " (" << std::fixed << std::setprecision(2) << elapsed << "s)\n";
  for (const auto& [tag, n] : summary.structure_histogram) log << "  " << tag << ": " << n << "\n";

  bool dirty = summary.mismatches > 0 || summary.lemma_failures > 0;
  for (const InstanceRecord& r : records) {
    if (!r.agreement)
      log << "MISMATCH " << record_to_json(r, Mode::Classify).dump() << "\n";
    if (r.lemmas && !r.lemmas->all_hold())
      log << "LEMMA FAILURE " << record_to_json(r, Mode::Lemmas).dump() << "\n";
  }
  return dirty ? 2 : 0;
}

std::string explain_instance(const Instance& inst) {
  const Group& g = *inst.group;
  const FiniteRing& r = *inst.ring;
  std::ostringstream os;
  os << "group " << g.label() << " (order " << g.order() << "), ring " << inst.ring_token << " (char "
     << r.characteristic() << ")\n";
  os << "involution:";
  for (Elem x = 0; x < g.order(); ++x) os << ' ' << g.name(x) << "->" << g.name(inst.tau(x));
  os << "\norientation:";
  for (Elem x = 0; x < g.order(); ++x) os << ' ' << g.name(x) << "->" << r.name(inst.sigma(x));
  os << "\n";
  if (r.characteristic() == 2) {
    os << "rejected: char 2\n";
    return os.str();
  }
  const SymmetricGenerators gens = symmetric_generators(inst.tau, inst.sigma);
  const std::vector<GroupRingElement> all = gens.all();
  auto list = [&](const char* title, const std::vector<GroupRingElement>& v, std::size_t offset) {
    os << title << " (" << v.size() << "):";
    for (std::size_t i = 0; i < v.size(); ++i) os << "  [" << offset + i << "] " << v[i].to_string();
    os << "\n";
  };
  list("2*S1", gens.s1_doubled, 0);
  list("S2", gens.s2, gens.s1_doubled.size());
  list("S3", gens.s3, gens.s1_doubled.size() + gens.s2.size());

  os << "jordan table (. = 0, X = nonzero):\n";
  for (std::size_t i = 0; i < all.size(); ++i) {
    os << std::setw(4) << i << ' ';
    for (std::size_t j = 0; j < all.size(); ++j) os << (jordan(all[i], all[j]).is_zero() ? '.' : 'X');
    os << "\n";
  }
  const Verdict v = check_anticommutative(all);
  os << "direct verdict: " << (v.holds ? "anticommutative" : "not anticommutative") << "\n";
  if (v.witness)
    os << "witness: [" << v.witness->first << "] o [" << v.witness->second << "] = " << v.witness->product.to_string()
       << "\n";
  const ClassificationResult cls = theorem_predicate(inst.tau, inst.sigma);
  os << "structure case: " << to_string(cls.structure.tag);
  if (cls.structure.s) os << " s=" << g.name(*cls.structure.s);
  if (cls.structure.t) os << " t=" << g.name(*cls.structure.t);
  os << "\nring conditions: nonsymmetric=" << cls.ring_conditions.nonsymmetric_pairs
     << " mixed=" << cls.ring_conditions.mixed_pairs << " symmetric=" << cls.ring_conditions.symmetric_pairs;
  if (!cls.ring_conditions.first_failure.empty()) os << " (first failure: " << cls.ring_conditions.first_failure << ")";
  os << "\npredicate: " << (cls.predicate ? "true" : "false") << "\ngp14 on C: " << to_string(cls.gp14) << "\n";
  os << "agreement: " << (cls.predicate == v.holds ? "yes" : "NO") << "\n";
  return os.str();
}

}  // namespace symj
