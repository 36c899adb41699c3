#pragma once

#include "coingame/game.hpp"
#include "coingame/strategies.hpp"

namespace coingame {

/// log |(a)_m| of the rising factorial (a)_m = a(a+1)...(a+m-1), with sign.
struct SignedLog {
    double log_abs = 0.0;
    int sign = 1;  // +1 or -1
};

/// For a > 0 uses the log-gamma identity (a)_m = Gamma(a+m)/Gamma(a); for
/// a <= 0 forms the product term by term. Throws PoleHit when some a+j == 0.
SignedLog log_rising_factorial(double a, long m);

/// log Q(xi^n) as a function of the head/tail counts. Legitimate because all
/// supported priors are exchangeable. Returns -infinity when Q assigns zero
/// mass (hypergeometric path off support). Throws HorizonExceeded when a
/// hypergeometric prior is evaluated past its horizon.
double log_prior_mass(const PriorSpec& prior, long h, long t);

/// log K_n for the Bayes strategy: log [ Q(xi^n) / (rho^h (1-rho)^t) ].
double log_capital_closed_form(const PriorSpec& prior, const PathStats& stats,
                               RiskNeutralPrice rho);

/// log K*_n = log [ (h! t! / (h+t)!) / (rho^h (1-rho)^t) ], the N = n
/// hypergeometric capital that upper-bounds every exchangeable Bayes strategy.
double hindsight_log_capital(long h, long t, RiskNeutralPrice rho);

/// Kullback divergence D(p||q) = p log(p/q) + (1-p) log((1-p)/(1-q)) between
/// Bernoulli(p) and Bernoulli(q), with the 0 log 0 = 0 convention at p in {0,1}.
double kullback(double p, double q);

/// The crude two-sided Stirling approximant and its guaranteed error bound:
/// 0 < log Gamma(x) - approx < max_error = 1/(12x) for all x > 0. Numerics
/// elsewhere use full-precision std::lgamma; this exists to expose the bound.
struct StirlingLogGamma {
    double approx;
    double max_error;
};
StirlingLogGamma stirling_log_gamma(double x);

/// Term-by-term Stirling expansion of the beta-binomial log capital,
///   log K_n = n' D(h'/n' || rho) - (1/2) log(h' t'/n') + c0(alpha,beta) + r,
/// with n' = alpha+beta+n, h' = alpha+h, t' = beta+t and
/// |r| <= error_bound = 1/(12h') + 1/(12t') + 1/(12n').
struct LogCapitalBreakdown {
    double n_prime;
    double h_prime;
    double t_prime;
    double divergence_term;
    double half_log_term;
    double c0;
    double error_bound;

    double sum() const { return divergence_term + half_log_term + c0; }
};

/// Throws DegenerateCounts when h == 0 or t == 0 (callers must use the closed
/// form there).
LogCapitalBreakdown log_capital_asymptotic(double alpha, double beta, RiskNeutralPrice rho,
                                           const PathStats& stats);

/// Polynomial growth order A with K_n ~ n^A:
/// A = (n xbar^2 / log n - rho(1-rho)) / (2 rho (1-rho)).
double growth_exponent(double xbar, long n, RiskNeutralPrice rho);

/// sqrt(n) |xbar| / sqrt(log n); compare against slln_threshold(rho).
double slln_statistic(const PathStats& stats);

/// The convergence factor sqrt(rho (1-rho)).
double slln_threshold(RiskNeutralPrice rho);

/// Leading term of the hindsight-to-beta-binomial capital ratio:
/// n B(alpha,beta) (h/n)^{1-alpha} (t/n)^{1-beta}.
double hindsight_ratio_asymptotic(double alpha, double beta, const PathStats& stats);

/// E_Q[log K_n] brute-forced over all 2^n paths, with Q(xi) = 0 contributing
/// zero regardless of the capital there (0 log 0 convention). Summation order
/// is fixed (paths in lexicographic order) so results are bit-stable. Throws
/// HorizonTooLarge when n_rounds > max_exponent.
double expected_log_capital(const PriorSpec& prior, const Strategy& strategy, int n_rounds,
                            RiskNeutralPrice rho, int max_exponent = 20);

}  // namespace coingame
