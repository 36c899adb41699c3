#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "coingame/game.hpp"

namespace coingame {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // measured margins
};

enum class VerifySuite { Fast, All };

struct VerifyOptions {
    std::filesystem::path data_dir;  // location of the bundled pi files
    VerifyOptions();                 // defaults to the build-time data directory
};

/// Scan of the two-sided Stirling bound over a grid, evaluated in 256-bit
/// arithmetic so the upper inequality is resolvable at large x. remainder(x)
/// = (log Gamma(x) - approx(x)) * 12x must stay strictly inside (0, 1).
struct StirlingSandwichScan {
    double worst_low = 0.0;       // min of scaled remainder over the grid
    double worst_high = 0.0;      // max of scaled remainder over the grid
    double max_impl_rel_err = 0.0;  // double implementation vs 256-bit reference
};
StirlingSandwichScan stirling_sandwich_scan(std::span<const double> xs);

// Individual property checks. Each returns pass/fail with measured margins;
// parameters let callers pin their own sizes.
CheckResult check_capital_product(int n_games, long n_rounds, std::uint64_t seed);
CheckResult check_stats_identity(std::uint64_t seed);
CheckResult check_replay_bitexact(std::uint64_t seed);
CheckResult check_bb_equivalence();
CheckResult check_negative_correspondence();
CheckResult check_bets_in_bounds();
CheckResult check_hg_hindsight();
CheckResult check_theorem41(int n_triples, long n_max, std::uint64_t seed);
CheckResult check_exchangeable_optimality(int n_max);
CheckResult check_stirling();
CheckResult check_asymptotic_bound(long count_max);
CheckResult check_kullback();
CheckResult check_bayes_optimality(int n_rounds, int n_perturbations, std::uint64_t seed);
CheckResult check_adversary(long n_max);
CheckResult check_drift(long n_max, bool positive_part);
CheckResult check_iid_reproducible();
CheckResult check_pi_provenance(const std::filesystem::path& data_dir);
CheckResult check_move_roundtrip();
CheckResult check_table_vs_run();
CheckResult check_deterministic_output();

/// The full property suite of every module; Fast trims iteration counts.
std::vector<CheckResult> run_verification(VerifySuite suite,
                                          const VerifyOptions& options = VerifyOptions());

}  // namespace coingame
