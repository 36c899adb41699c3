#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "coingame/errors.hpp"

namespace coingame {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Ticket price rho in (0,1), strict. A heads ticket pays 1, so the centered
/// payoff per round is 1-rho (heads) or -rho (tails).
class RiskNeutralPrice {
public:
    explicit RiskNeutralPrice(double rho);

    double rho() const { return rho_; }
    double head_value() const { return 1.0 - rho_; }
    double tail_value() const { return -rho_; }

    // Closed bankruptcy-avoidance interval for the relative bet.
    double min_bet() const { return -1.0 / (1.0 - rho_); }
    double max_bet() const { return 1.0 / rho_; }

private:
    double rho_;
};

enum class Move : std::uint8_t { Tails = 0, Heads = 1 };

inline double move_value(Move m, RiskNeutralPrice rho) {
    return m == Move::Heads ? rho.head_value() : rho.tail_value();
}

/// Running summary of a move path: round count, heads/tails counts, the
/// centered sum s = h - rho*n, and the average xbar = s/n (0 for n = 0).
struct PathStats {
    long n = 0;
    long h = 0;
    long t = 0;
    double s = 0.0;
    double xbar = 0.0;

    void add(Move m, RiskNeutralPrice rho);
};

PathStats path_stats(std::span<const Move> path, RiskNeutralPrice rho);

/// Skeptic's stake relative to current capital, nu = M_n / K_{n-1}.
struct BetFraction {
    double nu = 0.0;
};

/// Closed-interval bound check with a few-ulp tolerance so bets computed from
/// equivalent expressions of the endpoints are not rejected.
bool bet_in_bounds(BetFraction bet, RiskNeutralPrice rho);

struct GameState {
    PathStats stats;
    double log_capital = 0.0;  // -infinity once capital is absorbed at exactly zero

    bool absorbed() const { return std::isinf(log_capital) && log_capital < 0.0; }
};

/// One protocol round: validates the bet, applies the multiplicative capital
/// update in log domain, and updates the running statistics. A capital factor
/// of exactly zero absorbs the state at -infinity permanently.
GameState step(const GameState& state, BetFraction bet, Move x, RiskNeutralPrice rho);

struct CapitalRecord {
    long round;
    double nu;
    Move x;
    double log_capital;
};

using Strategy = std::function<BetFraction(const PathStats&)>;

/// Reality's move for a round: receives the 1-based round number, the stats
/// before the move, and the bet Skeptic has just announced (protocol order:
/// Skeptic announces first).
using RealityFn = std::function<Move(long, const PathStats&, BetFraction)>;

/// Drives the protocol for n_rounds. Once capital is absorbed at zero the
/// strategy is no longer consulted and nu = 0 is recorded. An OffSupport
/// signal from the strategy is converted to the absorbed zero-capital state.
std::vector<CapitalRecord> play(const Strategy& strategy, const RealityFn& reality,
                                long n_rounds, RiskNeutralPrice rho);

}  // namespace coingame
