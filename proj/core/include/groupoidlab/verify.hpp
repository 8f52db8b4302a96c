#ifndef GROUPOIDLAB_VERIFY_HPP_
#define GROUPOIDLAB_VERIFY_HPP_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "groupoidlab/algebra.hpp"
#include "groupoidlab/haar.hpp"
#include "groupoidlab/morphism.hpp"

namespace gl {

using Json = nlohmann::json;
using Rng = std::mt19937_64;

struct PropertyOutcome {
  std::string name;
  bool pass = true;
  double residual = 0.0;
  std::string witness;
};

struct CaseResult {
  int case_id = 0;
  std::uint64_t seed = 0;
  bool pass = true;
  double time_ms = 0.0;
  std::vector<PropertyOutcome> properties;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  bool pass = true;
  std::vector<CaseResult> cases;
};

// Random fixtures. Groupoids are disjoint unions of action groupoids of
// groups from {Z/n (n ≤ 8), S3} on sets of ≤ 6 points, capped at 60
// elements; Haar systems come from haar_from_unit_weights with rationals in
// (0, 4]; morphisms are drawn from the constructor zoo plus compositions.
GroupoidPtr random_groupoid(Rng& rng);
HaarSystem random_haar(GroupoidPtr const& g, Rng& rng);
UnitMeasure random_full_measure(GroupoidPtr const& g, Rng& rng);
AlgebraElement random_element(HaarSystem const& haar, Rng& rng, int terms = 4);
std::vector<Morphism> morphism_zoo(HaarSystem const& haar, Rng& rng);

// One full property case over a random groupoid: every module-level
// invariant plus the decomposition, cocycle and norm identities. Cases run
// in a work pool capped by GROUPOIDLAB_THREADS; results are ordered by case
// id, so a fixed seed yields an identical report.
VerificationReport run_random_suite(std::uint64_t seed, int cases);

// The built-in curated suite: a handful of named fixtures with known
// closed-form answers plus a deterministic random sweep.
VerificationReport run_builtin_suite(std::uint64_t seed);

// Scenario file: {"kind":"scenario", "artifacts": {...}, "checks": [...]}.
VerificationReport run_scenario(Json const& scenario,
                                std::filesystem::path const& base_dir);

Json report_to_json(VerificationReport const& report);
std::string report_to_text(VerificationReport const& report);

}  // namespace gl
#endif  // GROUPOIDLAB_VERIFY_HPP_
