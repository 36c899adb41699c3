#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coingame/game.hpp"

namespace coingame {

/// One game, fully described: used by the CLI `run` subcommand and by sweeps.
struct RunConfig {
    double rho = 0.5;
    std::string strategy_spec;
    std::string reality_spec;
    long n_rounds = 0;
    std::optional<std::uint64_t> seed;  // default seed for iid realities without one
};

/// Parses the spec strings, drives the game, returns the per-round trace.
std::vector<CapitalRecord> run_game(const RunConfig& config);

/// CSV trace `n,nu,x,log_capital` with x as H/T; infinities print as -inf.
/// Identical configs (including seeds) produce byte-identical strings.
std::string format_trace_csv(std::span<const CapitalRecord> trace, int sig_figs = 17);

/// JSON trace; absorbed capital (log = -infinity) is emitted as null.
std::string format_trace_json(std::span<const CapitalRecord> trace);

}  // namespace coingame
