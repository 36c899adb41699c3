#include "coingame/run.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "coingame/reality.hpp"
#include "coingame/strategies.hpp"

namespace coingame {

std::vector<CapitalRecord> run_game(const RunConfig& config) {
    const RiskNeutralPrice rho(config.rho);
    const StrategySpec strategy_spec = parse_strategy_spec(config.strategy_spec);
    const Strategy strategy = make_strategy(strategy_spec, rho);
    RealityPolicy reality = parse_reality_spec(config.reality_spec, config.seed);
    return play(strategy, reality.fn(rho), config.n_rounds, rho);
}

std::string format_trace_csv(std::span<const CapitalRecord> trace, int sig_figs) {
    std::ostringstream out;
    out << "n,nu,x,log_capital\n";
    char buf[64];
    for (const CapitalRecord& rec : trace) {
        out << rec.round << ',';
        std::snprintf(buf, sizeof(buf), "%.*g", sig_figs, rec.nu);
        out << buf << ',' << (rec.x == Move::Heads ? 'H' : 'T') << ',';
        std::snprintf(buf, sizeof(buf), "%.*g", sig_figs, rec.log_capital);
        out << buf << '\n';
    }
    return out.str();
}

std::string format_trace_json(std::span<const CapitalRecord> trace) {
    nlohmann::json records = nlohmann::json::array();
    for (const CapitalRecord& rec : trace) {
        nlohmann::json r;
        r["n"] = rec.round;
        r["nu"] = rec.nu;
        r["x"] = rec.x == Move::Heads ? "H" : "T";
        if (std::isfinite(rec.log_capital)) {
            r["log_capital"] = rec.log_capital;
        } else {
            r["log_capital"] = nullptr;
        }
        records.push_back(std::move(r));
    }
    nlohmann::json j;
    j["records"] = std::move(records);
    return j.dump(2) + "\n";
}

}  // namespace coingame
