#include "coingame/game.hpp"

#include <cmath>
#include <sstream>

namespace coingame {

RiskNeutralPrice::RiskNeutralPrice(double rho) : rho_(rho) {
    if (!(rho > 0.0) || !(rho < 1.0)) {
        std::ostringstream msg;
        msg << "risk neutral price must lie strictly in (0,1), got " << rho;
        throw Error(msg.str());
    }
}

void PathStats::add(Move m, RiskNeutralPrice rho) {
    ++n;
    if (m == Move::Heads) {
        ++h;
    } else {
        ++t;
    }
    s = static_cast<double>(h) - rho.rho() * static_cast<double>(n);
    xbar = s / static_cast<double>(n);
}

PathStats path_stats(std::span<const Move> path, RiskNeutralPrice rho) {
    PathStats stats;
    for (Move m : path) {
        stats.add(m, rho);
    }
    return stats;
}

bool bet_in_bounds(BetFraction bet, RiskNeutralPrice rho) {
    const double lo = rho.min_bet();
    const double hi = rho.max_bet();
    const double tol = 16.0 * std::numeric_limits<double>::epsilon() *
                       std::max({1.0, std::fabs(lo), std::fabs(hi)});
    return bet.nu >= lo - tol && bet.nu <= hi + tol && std::isfinite(bet.nu);
}

GameState step(const GameState& state, BetFraction bet, Move x, RiskNeutralPrice rho) {
    if (!bet_in_bounds(bet, rho)) {
        std::ostringstream msg;
        msg << "bet " << bet.nu << " outside [" << rho.min_bet() << ", " << rho.max_bet()
            << "] at rho=" << rho.rho();
        throw BetOutOfBounds(msg.str());
    }
    GameState next = state;
    next.stats.add(x, rho);
    const double gain = bet.nu * move_value(x, rho);
    if (1.0 + gain <= 0.0) {
        next.log_capital = kNegInf;
    } else {
        next.log_capital += std::log1p(gain);
    }
    return next;
}

std::vector<CapitalRecord> play(const Strategy& strategy, const RealityFn& reality,
                                long n_rounds, RiskNeutralPrice rho) {
    if (n_rounds <= 0) {
        throw Error("n_rounds must be positive");
    }
    std::vector<CapitalRecord> trace;
    trace.reserve(static_cast<std::size_t>(n_rounds));
    GameState state;
    for (long round = 1; round <= n_rounds; ++round) {
        BetFraction bet{0.0};
        if (!state.absorbed()) {
            try {
                bet = strategy(state.stats);
            } catch (const OffSupport&) {
                state.log_capital = kNegInf;
            }
        }
        const Move x = reality(round, state.stats, bet);
        state = step(state, bet, x, rho);
        trace.push_back({round, bet.nu, x, state.log_capital});
    }
    return trace;
}

}  // namespace coingame
