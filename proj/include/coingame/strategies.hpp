#pragma once

#include <optional>
#include <string>
#include <variant>

#include "coingame/game.hpp"

namespace coingame {

struct BernoulliPrior {
    explicit BernoulliPrior(double p);
    double p;
};

/// Beta(alpha, beta) mixture of Bernoulli; alpha and beta act as prior
/// heads/tails counts. Real-valued parameters > 0 are accepted.
struct BetaBinomialPrior {
    BetaBinomialPrior(double alpha, double beta);
    double alpha;
    double beta;
};

/// Urn of red among total balls, drawn one by one without replacement; heads
/// when the drawn ball is red. A finite-horizon model: at most `total` rounds.
struct HypergeometricPrior {
    HypergeometricPrior(long red, long total);
    long red;    // M
    long total;  // N
};

using PriorSpec = std::variant<BernoulliPrior, BetaBinomialPrior, HypergeometricPrior>;

/// Conditional probability of heads for the next round.
struct Predictive {
    double p_hat = 0.0;
};

/// The log-optimal bet for a predictive: nu = (p_hat - rho) / (rho (1-rho)).
/// Always lands inside the closed bet bound for p_hat in [0,1].
BetFraction bayes_bet(Predictive p_hat, RiskNeutralPrice rho);

/// (alpha + h) / (alpha + beta + n) with (n, h) the stats before the round.
Predictive beta_binomial_predictive(double alpha, double beta, const PathStats& stats);

/// Closed form of bayes_bet(beta_binomial_predictive):
/// nu = ((1-rho) alpha - rho beta + s) / ((alpha + beta + n) rho (1-rho)).
BetFraction beta_binomial_bet(double alpha, double beta, RiskNeutralPrice rho,
                              const PathStats& stats);

/// (M - h) / (N - n). Throws HorizonExceeded when n >= N and OffSupport when
/// the stats left the urn's support.
Predictive hypergeometric_predictive(long red, long total, const PathStats& stats);

/// nu = (M - rho N - s) / ((N - n) rho (1-rho)).
BetFraction hypergeometric_bet(long red, long total, RiskNeutralPrice rho,
                               const PathStats& stats);

/// History-independent bet for the Bernoulli model (the fixed epsilon-strategy).
BetFraction constant_bet(double p, RiskNeutralPrice rho);

enum class Side { PositivePart, NegativePart };

/// Positive part max(nu, 0) (buy only) or negative part min(nu, 0) (sell only).
BetFraction one_sided(BetFraction bet, Side side);

/// Raw predictive formula (alpha + h) / (alpha + beta + n) without parameter
/// validation. Also valid under the negative parameterization alpha = -M,
/// beta = -(N-M), where it reduces to the hypergeometric predictive.
inline double beta_binomial_predictive_formula(double alpha, double beta, long n, long h) {
    return (alpha + static_cast<double>(h)) / (alpha + beta + static_cast<double>(n));
}

/// The Bayes strategy for a prior, as a pure function of the path statistics.
Strategy bayes_strategy(const PriorSpec& prior, RiskNeutralPrice rho);

Strategy one_sided_strategy(Strategy strategy, Side side);

/// Parsed form of a CLI strategy spec string.
struct StrategySpec {
    PriorSpec prior;
    std::optional<Side> side;
};

/// Grammar: `const:p=<real>`, `beta:a=<real>,b=<real>`, `hyper:M=<int>,N=<int>`,
/// optionally suffixed `:+` (positive part) or `:-` (negative part).
StrategySpec parse_strategy_spec(const std::string& spec);

Strategy make_strategy(const StrategySpec& spec, RiskNeutralPrice rho);

}  // namespace coingame
