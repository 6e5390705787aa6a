#pragma once

#include "thuelab/automorphism.hpp"
#include "thuelab/json_io.hpp"
#include "thuelab/solver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace thuelab {

/// "psi:N", a JSON coefficient array, or an expression in x and y.
BinaryForm resolve_form_spec(const std::string& spec);

/// Default Aut' precision, overridden by THUELAB_PRECISION_BITS.
long default_precision_bits();

struct SweepConfig {
  std::string form_spec;
  std::uint64_t pmin = 2;
  std::uint64_t pmax = 100;
  SolveMode mode = SolveMode::FixedK;
  int kmax = 1;            // fixed-k: k = 1 .. kmax
  Rational lambda = 0;
  long height = 100;
  std::string out_dir;     // used by the CLI only
  long precision_bits = 256;
  Integer denom_bound = 1000000;
  unsigned threads = 1;
  /// Theorem comparisons are asserted only where p^exponent exceeds this.
  Integer threshold = 10000;
  bool allow_any_form = false;

  /// Throws DomainError when the invariants fail.
  void validate() const;
};

/// Unknown keys are rejected. Keys: form, pmin, pmax, kmax, any_z, lambda,
/// height, out, precision_bits, denom_bound, threads, threshold, allow_any_form.
SweepConfig sweep_config_from_json(const Json& j);
Json to_json(const SweepConfig& cfg);

struct OrbitReport {
  std::uint64_t p = 0;
  SolveMode mode = SolveMode::FixedK;
  /// k in fixed-k mode, z in any-z mode; empty for an any-z prime without solutions.
  std::optional<long> exponent;
  std::vector<Solution> solutions;  // canonical, orbit ids set
  long orbit_count = 0;
  Integer max_t = 0;
  std::size_t aut_cardinality = 0;
  /// 2 * #solutions <= #Aut' (signed solutions against signed group elements).
  bool theorem1_holds = true;
  std::optional<Integer> theorem2_bound;
  /// 2 * #solutions <= bound; true when there is no bound.
  bool theorem2_holds = true;
  /// any-z: signed solutions over all z for this prime, compared with the bound.
  std::optional<long> prime_signed_total;
  bool theorem2_prime_holds = true;
  bool above_threshold = false;  // p^exponent > threshold
  Rational lambda;
  std::optional<Interval> f_d;
  bool lambda_below_f = false;
  bool determinant_law_verified = true;
  std::string error;

  long signed_count() const { return 2 * static_cast<long>(solutions.size()); }
  /// A theorem comparison failed.
  bool violation() const { return !theorem1_holds || !theorem2_holds; }
};

struct SweepResult {
  BinaryForm F{1, 0};
  EnhancedAutGroup group;
  bool orbit_relation_verified = false;  // identity present, inverses present, closed
  std::vector<std::string> notes;
  std::vector<OrbitReport> reports;  // ordered by (p, exponent)
};

SweepResult run_sweep(const SweepConfig& cfg);

/// Groups the solutions of one report into orbits under G and sets orbit ids
/// (0, 1, ... in order of the smallest member). Returns false when an image
/// breaks the determinant law.
bool assign_orbits(const BinaryForm& F, const EnhancedAutGroup& G, std::vector<Solution>& sols, long& orbit_count);

struct PairingResult {
  bool negation_pairs = true;
  /// "p=<p> k=<k>: <count>" for every report with more than one canonical solution.
  std::vector<std::string> multiple;
};
PairingResult verify_corollary_pairing(const std::vector<OrbitReport>& reports);

/// Reports violating a theorem comparison with p^exponent at or below the threshold.
std::vector<const OrbitReport*> sub_threshold_exceptions(const std::vector<OrbitReport>& reports);
/// Violations above the threshold; must be empty for the theorems to stand.
std::vector<const OrbitReport*> threshold_violations(const std::vector<OrbitReport>& reports);

Json to_json(const Solution& s, std::uint64_t p);
Json to_json(const OrbitReport& r);

/// One report per line.
std::string reports_jsonl(const SweepResult& res);
/// One solution per line, with p and orbit id.
std::string solutions_jsonl(const SweepResult& res);
/// p,exponent,solutions,orbits,max_t,theorem2_bound,theorem1_holds,theorem2_holds,above_threshold,error
std::string summary_csv(const SweepResult& res);

/// Writes reports.jsonl, solutions.jsonl and summary.csv into dir.
void write_sweep_outputs(const SweepResult& res, const std::string& dir);

}  // namespace thuelab
