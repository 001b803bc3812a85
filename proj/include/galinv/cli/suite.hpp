#pragma once

#include <string>
#include <vector>

#include "galinv/exact/constraint_system.hpp"

namespace galinv {

struct Check {
  std::string claim;
  bool pass = false;
  std::string witness;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;
  /// Wall-clock limit in seconds; 0 means none.
  double limit = 0;

  bool within_limit() const { return limit <= 0 || seconds < limit; }
  bool pass() const;
};

inline constexpr double kPropOneSeconds = 1.0;
inline constexpr double kPropTwoSeconds = 10.0;
inline constexpr double kPropertySuiteSeconds = 60.0;
/// Random group elements for the sampling oracle.
inline constexpr int kOracleElements = 20;
/// Random wave vectors in the dispersion test.
inline constexpr int kDispersionSamples = 12;

struct SuiteOptions {
  Exec exec = Exec::Parallel;
  unsigned seed = 20240611;
};

CriterionResult criterion_boost_nonexistence(const SuiteOptions& o);
CriterionResult criterion_first_order_family(const SuiteOptions& o);
CriterionResult criterion_square(const SuiteOptions& o);
CriterionResult criterion_power_invariance(const SuiteOptions& o);
CriterionResult criterion_fundamental(const SuiteOptions& o);
CriterionResult criterion_pauli_schrodinger(const SuiteOptions& o);
CriterionResult criterion_properties(const SuiteOptions& o);

/// Criteria 1..7 in order.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& o);

/// "PASS 2 <title> (0.31 s, limit 10 s)".
std::string summary_line(const CriterionResult& r);

}  // namespace galinv
