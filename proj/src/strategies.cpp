#include "coingame/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace coingame {

BernoulliPrior::BernoulliPrior(double p_) : p(p_) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw Error("Bernoulli prior requires p strictly in (0,1)");
    }
}

BetaBinomialPrior::BetaBinomialPrior(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
        throw Error("beta-binomial prior requires alpha > 0 and beta > 0");
    }
}

HypergeometricPrior::HypergeometricPrior(long red_, long total_) : red(red_), total(total_) {
    if (total < 1 || red < 0 || red > total) {
        throw Error("hypergeometric prior requires 0 <= M <= N and N >= 1");
    }
}

namespace {

// The Bayes formulas land inside the closed bet interval mathematically;
// clamping absorbs the last-ulp roundoff at the point-mass extremes.
BetFraction clamp_to_bounds(double nu, RiskNeutralPrice rho) {
    return BetFraction{std::clamp(nu, rho.min_bet(), rho.max_bet())};
}

}  // namespace

BetFraction bayes_bet(Predictive p_hat, RiskNeutralPrice rho) {
    return clamp_to_bounds((p_hat.p_hat - rho.rho()) / (rho.rho() * (1.0 - rho.rho())), rho);
}

Predictive beta_binomial_predictive(double alpha, double beta, const PathStats& stats) {
    const BetaBinomialPrior prior(alpha, beta);
    return Predictive{beta_binomial_predictive_formula(prior.alpha, prior.beta, stats.n, stats.h)};
}

BetFraction beta_binomial_bet(double alpha, double beta, RiskNeutralPrice rho,
                              const PathStats& stats) {
    const BetaBinomialPrior prior(alpha, beta);
    const double r = rho.rho();
    const double num = (1.0 - r) * prior.alpha - r * prior.beta + stats.s;
    const double den = (prior.alpha + prior.beta + static_cast<double>(stats.n)) * r * (1.0 - r);
    return clamp_to_bounds(num / den, rho);
}

namespace {

void require_on_support(long red, long total, const PathStats& stats) {
    if (stats.n >= total) {
        std::ostringstream msg;
        msg << "hypergeometric horizon exceeded: n=" << stats.n << " >= N=" << total;
        throw HorizonExceeded(msg.str());
    }
    if (stats.h > red || stats.t > total - red) {
        std::ostringstream msg;
        msg << "path off the urn support: h=" << stats.h << ", t=" << stats.t << ", M=" << red
            << ", N=" << total;
        throw OffSupport(msg.str());
    }
}

}  // namespace

Predictive hypergeometric_predictive(long red, long total, const PathStats& stats) {
    require_on_support(red, total, stats);
    return Predictive{static_cast<double>(red - stats.h) / static_cast<double>(total - stats.n)};
}

BetFraction hypergeometric_bet(long red, long total, RiskNeutralPrice rho,
                               const PathStats& stats) {
    require_on_support(red, total, stats);
    const double r = rho.rho();
    const double num = static_cast<double>(red) - r * static_cast<double>(total) - stats.s;
    const double den = static_cast<double>(total - stats.n) * r * (1.0 - r);
    return clamp_to_bounds(num / den, rho);
}

BetFraction constant_bet(double p, RiskNeutralPrice rho) {
    return clamp_to_bounds((p - rho.rho()) / (rho.rho() * (1.0 - rho.rho())), rho);
}

BetFraction one_sided(BetFraction bet, Side side) {
    if (side == Side::PositivePart) {
        return BetFraction{std::max(bet.nu, 0.0)};
    }
    return BetFraction{std::min(bet.nu, 0.0)};
}

Strategy bayes_strategy(const PriorSpec& prior, RiskNeutralPrice rho) {
    return std::visit(
        [rho](const auto& q) -> Strategy {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, BernoulliPrior>) {
                const BetFraction fixed = constant_bet(q.p, rho);
                return [fixed](const PathStats&) { return fixed; };
            } else if constexpr (std::is_same_v<T, BetaBinomialPrior>) {
                return [q, rho](const PathStats& stats) {
                    return beta_binomial_bet(q.alpha, q.beta, rho, stats);
                };
            } else {
                return [q, rho](const PathStats& stats) {
                    return hypergeometric_bet(q.red, q.total, rho, stats);
                };
            }
        },
        prior);
}

Strategy one_sided_strategy(Strategy strategy, Side side) {
    return [inner = std::move(strategy), side](const PathStats& stats) {
        return one_sided(inner(stats), side);
    };
}

namespace {

// key=value list parsing for spec strings, e.g. "a=100,b=100".
double parse_real_field(const std::string& body, const std::string& key, const std::string& spec) {
    const std::string needle = key + "=";
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t end = body.find(',', pos);
        if (end == std::string::npos) end = body.size();
        const std::string field = body.substr(pos, end - pos);
        if (field.rfind(needle, 0) == 0) {
            const std::string value = field.substr(needle.size());
            try {
                std::size_t used = 0;
                const double v = std::stod(value, &used);
                if (used != value.size()) throw std::invalid_argument(value);
                return v;
            } catch (const std::exception&) {
                throw SpecError("bad value for field '" + key + "' in spec '" + spec + "'");
            }
        }
        pos = end + 1;
    }
    throw SpecError("missing field '" + key + "' in spec '" + spec + "'");
}

long parse_int_field(const std::string& body, const std::string& key, const std::string& spec) {
    const double v = parse_real_field(body, key, spec);
    const long i = static_cast<long>(v);
    if (static_cast<double>(i) != v) {
        throw SpecError("field '" + key + "' must be an integer in spec '" + spec + "'");
    }
    return i;
}

}  // namespace

StrategySpec parse_strategy_spec(const std::string& spec) {
    std::string body = spec;
    std::optional<Side> side;
    if (body.size() >= 2 && body.compare(body.size() - 2, 2, ":+") == 0) {
        side = Side::PositivePart;
        body.resize(body.size() - 2);
    } else if (body.size() >= 2 && body.compare(body.size() - 2, 2, ":-") == 0) {
        side = Side::NegativePart;
        body.resize(body.size() - 2);
    }
    const std::size_t colon = body.find(':');
    const std::string head = body.substr(0, colon);
    const std::string args = colon == std::string::npos ? std::string() : body.substr(colon + 1);
    try {
        if (head == "const") {
            return StrategySpec{BernoulliPrior(parse_real_field(args, "p", spec)), side};
        }
        if (head == "beta") {
            return StrategySpec{BetaBinomialPrior(parse_real_field(args, "a", spec),
                                                  parse_real_field(args, "b", spec)),
                                side};
        }
        if (head == "hyper") {
            return StrategySpec{HypergeometricPrior(parse_int_field(args, "M", spec),
                                                    parse_int_field(args, "N", spec)),
                                side};
        }
    } catch (const SpecError&) {
        throw;
    } catch (const Error& e) {
        throw SpecError("invalid parameters in strategy spec '" + spec + "': " + e.what());
    }
    throw SpecError("unknown strategy '" + head + "' in spec '" + spec +
                    "' (expected const:, beta: or hyper:)");
}

Strategy make_strategy(const StrategySpec& spec, RiskNeutralPrice rho) {
    Strategy s = bayes_strategy(spec.prior, rho);
    if (spec.side) {
        s = one_sided_strategy(std::move(s), *spec.side);
    }
    return s;
}

}  // namespace coingame
