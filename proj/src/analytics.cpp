#include "coingame/analytics.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>

namespace coingame {

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log sqrt(2 pi)

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// log (x! / (x-k)!) = log Gamma(x+1) - log Gamma(x-k+1), falling factorial of
// a non-negative integer x.
double log_falling_factorial(long x, long k) {
    return std::lgamma(static_cast<double>(x) + 1.0) -
           std::lgamma(static_cast<double>(x - k) + 1.0);
}

}  // namespace

SignedLog log_rising_factorial(double a, long m) {
    if (m < 0) {
        throw Error("rising factorial needs m >= 0");
    }
    if (m == 0) {
        return SignedLog{0.0, +1};  // empty product
    }
    if (a > 0.0) {
        return SignedLog{std::lgamma(a + static_cast<double>(m)) - std::lgamma(a), +1};
    }
    SignedLog out{0.0, +1};
    for (long j = 0; j < m; ++j) {
        const double factor = a + static_cast<double>(j);
        if (factor == 0.0) {
            std::ostringstream msg;
            msg << "rising factorial (" << a << ")_" << m << " hits zero at j=" << j;
            throw PoleHit(msg.str());
        }
        if (factor < 0.0) {
            out.sign = -out.sign;
        }
        out.log_abs += std::log(std::fabs(factor));
    }
    return out;
}

double log_prior_mass(const PriorSpec& prior, long h, long t) {
    if (h < 0 || t < 0) {
        throw Error("negative counts");
    }
    const long n = h + t;
    return std::visit(
        [&](const auto& q) -> double {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, BernoulliPrior>) {
                return static_cast<double>(h) * std::log(q.p) +
                       static_cast<double>(t) * std::log1p(-q.p);
            } else if constexpr (std::is_same_v<T, BetaBinomialPrior>) {
                return log_beta(q.alpha + static_cast<double>(h),
                                q.beta + static_cast<double>(t)) -
                       log_beta(q.alpha, q.beta);
            } else {
                if (n > q.total) {
                    std::ostringstream msg;
                    msg << "hypergeometric mass asked for n=" << n << " > N=" << q.total;
                    throw HorizonExceeded(msg.str());
                }
                if (h > q.red || t > q.total - q.red) {
                    return kNegInf;  // off support: Q = 0
                }
                return log_falling_factorial(q.red, h) +
                       log_falling_factorial(q.total - q.red, t) -
                       log_falling_factorial(q.total, n);
            }
        },
        prior);
}

double log_capital_closed_form(const PriorSpec& prior, const PathStats& stats,
                               RiskNeutralPrice rho) {
    const double log_q = log_prior_mass(prior, stats.h, stats.t);
    if (std::isinf(log_q)) {
        return kNegInf;
    }
    return log_q - static_cast<double>(stats.h) * std::log(rho.rho()) -
           static_cast<double>(stats.t) * std::log1p(-rho.rho());
}

double hindsight_log_capital(long h, long t, RiskNeutralPrice rho) {
    if (h < 0 || t < 0) {
        throw Error("negative counts");
    }
    const double log_comb = std::lgamma(static_cast<double>(h) + 1.0) +
                            std::lgamma(static_cast<double>(t) + 1.0) -
                            std::lgamma(static_cast<double>(h + t) + 1.0);
    return log_comb - static_cast<double>(h) * std::log(rho.rho()) -
           static_cast<double>(t) * std::log1p(-rho.rho());
}

double kullback(double p, double q) {
    if (!(p >= 0.0) || !(p <= 1.0) || !(q > 0.0) || !(q < 1.0)) {
        throw Error("kullback needs p in [0,1] and q in (0,1)");
    }
    double d = 0.0;
    if (p > 0.0) {
        d += p * std::log(p / q);
    }
    if (p < 1.0) {
        d += (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
    }
    return d;
}

StirlingLogGamma stirling_log_gamma(double x) {
    if (!(x > 0.0)) {
        throw Error("stirling_log_gamma needs x > 0");
    }
    const double approx = (x - 0.5) * std::log(x) - x + kLogSqrt2Pi;
    return StirlingLogGamma{approx, 1.0 / (12.0 * x)};
}

LogCapitalBreakdown log_capital_asymptotic(double alpha, double beta, RiskNeutralPrice rho,
                                           const PathStats& stats) {
    const BetaBinomialPrior prior(alpha, beta);
    if (stats.h == 0 || stats.t == 0) {
        throw DegenerateCounts("Stirling breakdown needs h >= 1 and t >= 1");
    }
    LogCapitalBreakdown out{};
    out.h_prime = prior.alpha + static_cast<double>(stats.h);
    out.t_prime = prior.beta + static_cast<double>(stats.t);
    out.n_prime = out.h_prime + out.t_prime;
    out.divergence_term = out.n_prime * kullback(out.h_prime / out.n_prime, rho.rho());
    out.half_log_term = -0.5 * std::log(out.h_prime * out.t_prime / out.n_prime);
    out.c0 = -log_beta(prior.alpha, prior.beta) + prior.alpha * std::log(rho.rho()) +
             prior.beta * std::log1p(-rho.rho()) + kLogSqrt2Pi;
    out.error_bound = 1.0 / (12.0 * out.h_prime) + 1.0 / (12.0 * out.t_prime) +
                      1.0 / (12.0 * out.n_prime);
    return out;
}

double growth_exponent(double xbar, long n, RiskNeutralPrice rho) {
    if (n < 2) {
        throw Error("growth_exponent needs n >= 2");
    }
    const double r = rho.rho() * (1.0 - rho.rho());
    const double nd = static_cast<double>(n);
    return (nd * xbar * xbar / std::log(nd) - r) / (2.0 * r);
}

double slln_statistic(const PathStats& stats) {
    if (stats.n < 2) {
        throw Error("slln_statistic needs n >= 2");
    }
    const double nd = static_cast<double>(stats.n);
    return std::sqrt(nd) * std::fabs(stats.xbar) / std::sqrt(std::log(nd));
}

double slln_threshold(RiskNeutralPrice rho) {
    return std::sqrt(rho.rho() * (1.0 - rho.rho()));
}

double hindsight_ratio_asymptotic(double alpha, double beta, const PathStats& stats) {
    const BetaBinomialPrior prior(alpha, beta);
    if (stats.h < 1 || stats.t < 1) {
        throw DegenerateCounts("hindsight ratio asymptotic needs h >= 1 and t >= 1");
    }
    const double nd = static_cast<double>(stats.n);
    const double log_ratio = std::log(nd) + log_beta(prior.alpha, prior.beta) +
                             (1.0 - prior.alpha) * std::log(static_cast<double>(stats.h) / nd) +
                             (1.0 - prior.beta) * std::log(static_cast<double>(stats.t) / nd);
    return std::exp(log_ratio);
}

double expected_log_capital(const PriorSpec& prior, const Strategy& strategy, int n_rounds,
                            RiskNeutralPrice rho, int max_exponent) {
    if (n_rounds < 1) {
        throw Error("expected_log_capital needs n >= 1");
    }
    if (n_rounds > max_exponent || max_exponent >= 63) {
        std::ostringstream msg;
        msg << "exhaustive enumeration of 2^" << n_rounds << " paths exceeds the cap 2^"
            << max_exponent;
        throw HorizonTooLarge(msg.str());
    }
    const std::uint64_t n_paths = std::uint64_t{1} << n_rounds;
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < n_paths; ++mask) {
        const long h = static_cast<long>(std::popcount(mask));
        const double log_q = log_prior_mass(prior, h, n_rounds - h);
        if (std::isinf(log_q)) {
            continue;  // Q = 0: contributes nothing even if capital is zero
        }
        GameState state;
        for (int round = 0; round < n_rounds; ++round) {
            const BetFraction bet = strategy(state.stats);
            const Move x = (mask >> round) & 1 ? Move::Heads : Move::Tails;
            state = step(state, bet, x, rho);
        }
        if (state.absorbed()) {
            total = kNegInf;  // a positive-mass path ended with zero capital
            continue;
        }
        total += std::exp(log_q) * state.log_capital;
    }
    return total;
}

}  // namespace coingame
