#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wtreelab/betti.hpp"
#include "wtreelab/weighted_tree.hpp"

namespace wtreelab {

enum class VerdictStatus { holds, counterexample, skipped_resource };

std::string to_string(VerdictStatus status);

/// Outcome of one claim checked on one instance. Counterexamples always
/// carry enough serialized witness data to re-verify the refutation without
/// rerunning the checker.
struct Verdict {
  std::string claim;
  std::string instance;
  VerdictStatus status = VerdictStatus::holds;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> witness;
  std::map<std::string, std::int64_t> metrics;

  bool operator==(const Verdict&) const = default;
};

struct CampaignParams {
  int n_min = 2;
  int n_max = 6;
  Weight max_weight = 3;  // 0 means: bound each instance by its own n
  int count = 10;
  std::uint64_t seed = 1;
  int t_max = 3;

  bool operator==(const CampaignParams&) const = default;
};

struct Campaign {
  std::string suite;
  CampaignParams params;
  std::vector<Verdict> verdicts;
  int instances = 0;
  int holds = 0;
  int counterexamples = 0;
  int skips = 0;

  bool operator==(const Campaign&) const = default;
};

/// "u v w" edge list on one line per edge; the instance tag of verdicts.
std::string describe_tree(const WeightedTree& tree);

// Theorem checkers. Preconditions on the weight class (increasing / strictly
// increasing) are enforced with std::invalid_argument; resource caps inside a
// checker yield skipped_resource verdicts instead of escaping.

Verdict check_pendant_colon(const WeightedTree& tree, int t_max);
Verdict check_colon_structure(const WeightedTree& tree);
Verdict check_depth_theorem(const WeightedTree& tree, int extra, const FieldSpec& field);
Verdict check_constant_depth_iff(const WeightedTree& tree, const FieldSpec& field);
Verdict check_depth_monotone(const WeightedTree& tree, int t_max, const FieldSpec& field);
Verdict check_taylor_minimal_and_betti(const WeightedTree& tree, const FieldSpec& field);
Verdict check_lcm_degree(const WeightedTree& tree);
Verdict check_reg_formula(const WeightedTree& tree, const FieldSpec& field);
Verdict check_reg_power(const WeightedTree& tree, int t_max, const FieldSpec& field);
Verdict check_nonstrict_reg_counterexample(const FieldSpec& field);
Verdict check_structure_lemmas(const WeightedTree& tree);

const std::vector<std::string>& suite_names();

/// Seeded campaign: `count` random trees of the class each suite requires,
/// every checker of the suite on every instance. Replayable: identical seed
/// and params give an identical verdict list.
Campaign run_campaign(const std::string& suite, const CampaignParams& params,
                      const FieldSpec& field);

/// The suite's checkers on one fixed tree; validates the weight class first.
Campaign run_suite_on(const std::string& suite, const WeightedTree& tree,
                      const FieldSpec& field, int t_max);

/// Parses the str_exponents() rendering back into an ideal.
MonomialIdeal parse_exponent_ideal(const std::string& text, int ring_dim);

/// Re-verifies an ideal-equality counterexample from its witness alone:
/// parses both sides and confirms they differ.
bool recheck_equality_witness(const Verdict& verdict);

}  // namespace wtreelab
