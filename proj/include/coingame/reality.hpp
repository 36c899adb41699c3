#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "coingame/game.hpp"

namespace coingame {

/// Reality-move generators spanning the regimes the capital theorems
/// distinguish: seeded IID coins, repeating patterns, the pointwise
/// capital-minimizing adversary, a controlled SLLN-violating drift, and
/// replay of a recorded path.
///
/// Each instance owns its state (the IID generator in particular) and must
/// be used by a single game at a time.
class RealityPolicy {
public:
    static RealityPolicy iid(double p, std::uint64_t seed);
    static RealityPolicy pattern(std::vector<Move> cycle);
    static RealityPolicy greedy_adversary(Move tie_break = Move::Tails);
    static RealityPolicy drift_target(double c);
    static RealityPolicy replay(std::vector<Move> path);

    /// Reality's move. round is 1-based; stats summarize the path before the
    /// move; nu is the bet Skeptic has just announced (the adversary reads it).
    Move next_move(long round, const PathStats& stats, BetFraction nu, RiskNeutralPrice rho);

    /// Adapter for play(). The policy must outlive the returned callable.
    RealityFn fn(RiskNeutralPrice rho);

private:
    struct Iid {
        double p;
        std::mt19937_64 rng;
    };
    struct Pattern {
        std::vector<Move> cycle;
    };
    struct GreedyAdversary {
        Move tie_break;
    };
    struct DriftTarget {
        double c;
    };
    struct Replay {
        std::vector<Move> path;
    };
    using Impl = std::variant<Iid, Pattern, GreedyAdversary, DriftTarget, Replay>;

    explicit RealityPolicy(Impl impl);

    Impl impl_;
};

/// Grammar: `iid:p=<real>,seed=<int>`, `pattern:<HT10...>`, `adversary`
/// (optionally `adversary:tie=H|T`), `drift:c=<real>`, `file:<path>`.
/// `default_seed` supplies the IID seed when the spec omits it.
RealityPolicy parse_reality_spec(const std::string& spec,
                                 std::optional<std::uint64_t> default_seed = {});

}  // namespace coingame
