#include "coingame/reality.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "coingame/ingest.hpp"

namespace coingame {

RealityPolicy::RealityPolicy(Impl impl) : impl_(std::move(impl)) {}

RealityPolicy RealityPolicy::iid(double p, std::uint64_t seed) {
    if (!(p >= 0.0) || !(p <= 1.0)) {
        throw Error("iid reality needs p in [0,1]");
    }
    return RealityPolicy(Iid{p, std::mt19937_64(seed)});
}

RealityPolicy RealityPolicy::pattern(std::vector<Move> cycle) {
    if (cycle.empty()) {
        throw Error("pattern reality needs a nonempty cycle");
    }
    return RealityPolicy(Pattern{std::move(cycle)});
}

RealityPolicy RealityPolicy::greedy_adversary(Move tie_break) {
    return RealityPolicy(GreedyAdversary{tie_break});
}

RealityPolicy RealityPolicy::drift_target(double c) {
    if (!(c >= 0.0)) {
        throw Error("drift reality needs c >= 0");
    }
    return RealityPolicy(DriftTarget{c});
}

RealityPolicy RealityPolicy::replay(std::vector<Move> path) {
    return RealityPolicy(Replay{std::move(path)});
}

namespace {

// Uniform in [0,1) with 53 random bits; keeps the move stream reproducible
// across standard library implementations.
double next_u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Move RealityPolicy::next_move(long round, const PathStats& stats, BetFraction nu,
                              RiskNeutralPrice rho) {
    if (round < 1) {
        throw Error("rounds are 1-based");
    }
    struct Visitor {
        long round;
        const PathStats& stats;
        BetFraction nu;
        RiskNeutralPrice rho;

        Move operator()(Iid& iid) const { return next_u01(iid.rng) < iid.p ? Move::Heads : Move::Tails; }

        Move operator()(const Pattern& pattern) const {
            const std::size_t len = pattern.cycle.size();
            return pattern.cycle[static_cast<std::size_t>((round - 1) % static_cast<long>(len))];
        }

        Move operator()(const GreedyAdversary& adversary) const {
            // Minimize log(1 + nu x) pointwise: move against the sign of the bet.
            if (nu.nu > 0.0) return Move::Tails;
            if (nu.nu < 0.0) return Move::Heads;
            return adversary.tie_break;
        }

        Move operator()(const DriftTarget& drift) const {
            const double nd = static_cast<double>(round);
            const double target =
                drift.c * std::sqrt(std::log(nd + 1.0) / (nd + 1.0));
            const double xbar_heads = (stats.s + rho.head_value()) / nd;
            const double xbar_tails = (stats.s + rho.tail_value()) / nd;
            return std::fabs(xbar_heads - target) <= std::fabs(xbar_tails - target)
                       ? Move::Heads
                       : Move::Tails;
        }

        Move operator()(const Replay& replay) const {
            if (static_cast<std::size_t>(round) > replay.path.size()) {
                std::ostringstream msg;
                msg << "replay path of length " << replay.path.size() << " exhausted at round "
                    << round;
                throw RealityExhausted(msg.str());
            }
            return replay.path[static_cast<std::size_t>(round - 1)];
        }
    };
    return std::visit(Visitor{round, stats, nu, rho}, impl_);
}

RealityFn RealityPolicy::fn(RiskNeutralPrice rho) {
    return [this, rho](long round, const PathStats& stats, BetFraction nu) {
        return next_move(round, stats, nu, rho);
    };
}

namespace {

std::string field_value(const std::string& body, const std::string& key) {
    const std::string needle = key + "=";
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t end = body.find(',', pos);
        if (end == std::string::npos) end = body.size();
        const std::string field = body.substr(pos, end - pos);
        if (field.rfind(needle, 0) == 0) {
            return field.substr(needle.size());
        }
        pos = end + 1;
    }
    return {};
}

}  // namespace

RealityPolicy parse_reality_spec(const std::string& spec,
                                 std::optional<std::uint64_t> default_seed) {
    const std::size_t colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? std::string() : spec.substr(colon + 1);

    if (head == "iid") {
        const std::string p_str = field_value(args, "p");
        if (p_str.empty()) {
            throw SpecError("iid reality spec needs p=<real>: '" + spec + "'");
        }
        const std::string seed_str = field_value(args, "seed");
        std::uint64_t seed = 0;
        if (!seed_str.empty()) {
            seed = std::stoull(seed_str);
        } else if (default_seed) {
            seed = *default_seed;
        } else {
            throw SpecError("iid reality requires an explicit seed: '" + spec + "'");
        }
        try {
            return RealityPolicy::iid(std::stod(p_str), seed);
        } catch (const Error& e) {
            throw SpecError(std::string(e.what()) + ": '" + spec + "'");
        } catch (const std::exception&) {
            throw SpecError("bad number in reality spec '" + spec + "'");
        }
    }
    if (head == "pattern") {
        std::vector<Move> cycle;
        for (char c : args) {
            if (c == 'H' || c == 'h' || c == '1') {
                cycle.push_back(Move::Heads);
            } else if (c == 'T' || c == 't' || c == '0') {
                cycle.push_back(Move::Tails);
            } else {
                throw SpecError(std::string("bad pattern symbol '") + c + "' in '" + spec + "'");
            }
        }
        if (cycle.empty()) {
            throw SpecError("pattern reality needs at least one move: '" + spec + "'");
        }
        return RealityPolicy::pattern(std::move(cycle));
    }
    if (head == "adversary") {
        Move tie = Move::Tails;
        if (!args.empty()) {
            const std::string tie_str = field_value(args, "tie");
            if (tie_str == "H" || tie_str == "h") {
                tie = Move::Heads;
            } else if (tie_str == "T" || tie_str == "t") {
                tie = Move::Tails;
            } else {
                throw SpecError("adversary options accept only tie=H|T: '" + spec + "'");
            }
        }
        return RealityPolicy::greedy_adversary(tie);
    }
    if (head == "drift") {
        const std::string c_str = field_value(args, "c");
        if (c_str.empty()) {
            throw SpecError("drift reality spec needs c=<real>: '" + spec + "'");
        }
        try {
            return RealityPolicy::drift_target(std::stod(c_str));
        } catch (const Error& e) {
            throw SpecError(std::string(e.what()) + ": '" + spec + "'");
        } catch (const std::exception&) {
            throw SpecError("bad number in reality spec '" + spec + "'");
        }
    }
    if (head == "file") {
        if (args.empty()) {
            throw SpecError("file reality spec needs a path: '" + spec + "'");
        }
        return RealityPolicy::replay(load_moves(args));
    }
    throw SpecError("unknown reality '" + head + "' in spec '" + spec +
                    "' (expected iid:, pattern:, adversary, drift: or file:)");
}

}  // namespace coingame
