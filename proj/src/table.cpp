#include "coingame/table.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "coingame/analytics.hpp"
#include "coingame/ingest.hpp"
#include "coingame/pi.hpp"
#include "coingame/reality.hpp"
#include "coingame/strategies.hpp"

namespace coingame {

namespace {

constexpr std::array<double, 3> kAlphas = {1.0, 100.0, 500.0};

std::string alpha_label(double alpha) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g, %g", alpha, alpha);
    return buf;
}

std::string beta_spec(double alpha, std::optional<Side> side) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "beta:a=%g,b=%g", alpha, alpha);
    std::string out = buf;
    if (side == Side::PositivePart) out += ":+";
    if (side == Side::NegativePart) out += ":-";
    return out;
}

double final_log_capital(const Strategy& strategy, std::span<const Move> moves,
                         RiskNeutralPrice rho) {
    RealityPolicy reality = RealityPolicy::replay({moves.begin(), moves.end()});
    const auto trace = play(strategy, reality.fn(rho), static_cast<long>(moves.size()), rho);
    return trace.back().log_capital;
}

}  // namespace

CapitalTable table_from_moves(std::span<const Move> moves, std::string title) {
    CapitalTable table;
    table.title = std::move(title);
    table.rounds = static_cast<long>(moves.size());

    const RiskNeutralPrice half(0.5);
    const PathStats stats = path_stats(moves, half);

    TableRow hg{"HG", "hg", {}};
    for (std::size_t c = 0; c < kTableRhos.size(); ++c) {
        hg.values[c] = hindsight_log_capital(stats.h, stats.t, RiskNeutralPrice(kTableRhos[c]));
    }
    table.rows.push_back(std::move(hg));

    for (double alpha : kAlphas) {
        const PriorSpec prior = BetaBinomialPrior(alpha, alpha);
        TableRow plain{alpha_label(alpha), beta_spec(alpha, {}), {}};
        TableRow pos{"  (PP)", beta_spec(alpha, Side::PositivePart), {}};
        TableRow neg{"  (NP)", beta_spec(alpha, Side::NegativePart), {}};
        for (std::size_t c = 0; c < kTableRhos.size(); ++c) {
            const RiskNeutralPrice rho(kTableRhos[c]);
            const PathStats at_rho = path_stats(moves, rho);
            plain.values[c] = log_capital_closed_form(prior, at_rho, rho);
            pos.values[c] = final_log_capital(
                one_sided_strategy(bayes_strategy(prior, rho), Side::PositivePart), moves, rho);
            neg.values[c] = final_log_capital(
                one_sided_strategy(bayes_strategy(prior, rho), Side::NegativePart), moves, rho);
        }
        table.rows.push_back(std::move(plain));
        table.rows.push_back(std::move(pos));
        table.rows.push_back(std::move(neg));
    }
    return table;
}

namespace {

CapitalTable table_from_counts(long h, long t, std::string title) {
    CapitalTable table;
    table.title = std::move(title);
    table.rounds = h + t;

    TableRow hg{"HG", "hg", {}};
    for (std::size_t c = 0; c < kTableRhos.size(); ++c) {
        hg.values[c] = hindsight_log_capital(h, t, RiskNeutralPrice(kTableRhos[c]));
    }
    table.rows.push_back(std::move(hg));

    for (double alpha : kAlphas) {
        const PriorSpec prior = BetaBinomialPrior(alpha, alpha);
        TableRow plain{alpha_label(alpha), beta_spec(alpha, {}), {}};
        TableRow pos{"  (PP)", beta_spec(alpha, Side::PositivePart), {}};
        TableRow neg{"  (NP)", beta_spec(alpha, Side::NegativePart), {}};
        for (std::size_t c = 0; c < kTableRhos.size(); ++c) {
            const RiskNeutralPrice rho(kTableRhos[c]);
            PathStats stats;
            stats.n = h + t;
            stats.h = h;
            stats.t = t;
            stats.s = static_cast<double>(h) - rho.rho() * static_cast<double>(stats.n);
            stats.xbar = stats.s / static_cast<double>(stats.n);
            plain.values[c] = log_capital_closed_form(prior, stats, rho);
            // One-sided capital is path-dependent; counts alone cannot determine it.
        }
        table.rows.push_back(std::move(plain));
        table.rows.push_back(std::move(pos));
        table.rows.push_back(std::move(neg));
    }
    return table;
}

}  // namespace

CapitalTable make_table(TableKind kind, const std::optional<std::filesystem::path>& source) {
    if (kind == TableKind::Pi) {
        const std::string digits =
            source ? load_digit_file(*source) : std::string(pi_digits_500());
        const std::vector<Move> moves = digits_to_moves(digits);
        std::ostringstream title;
        title << "Log capital at n=" << moves.size() << " for the digits of pi";
        if (source) {
            title << " (" << source->string() << ")";
        }
        return table_from_moves(moves, title.str());
    }
    if (source) {
        const PriceSeries series = load_price_csv(*source);
        const std::vector<Move> moves = prices_to_moves(series);
        std::ostringstream title;
        title << "Log capital at n=" << moves.size() << " for the price series "
              << source->string();
        return table_from_moves(moves, title.str());
    }
    return table_from_counts(221, 279,
                             "Log capital at n=500 for Nikkei 225 (head/tail counts 221/279)");
}

namespace {

std::string format_value(const std::optional<double>& value, int sig_figs) {
    if (!value) {
        return "n/a (path unpublished)";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig_figs, *value);
    return buf;
}

const std::array<std::string, 3> kRhoHeaders = {"rho=1/2", "rho=2/3", "rho=2/5"};

}  // namespace

std::string format_table_text(const CapitalTable& table, int sig_figs) {
    std::ostringstream out;
    out << table.title << "\n";
    std::array<std::size_t, 4> widths = {12, 12, 12, 12};
    std::vector<std::array<std::string, 4>> grid;
    grid.push_back({"alpha, beta", kRhoHeaders[0], kRhoHeaders[1], kRhoHeaders[2]});
    for (const TableRow& row : table.rows) {
        grid.push_back({row.label, format_value(row.values[0], sig_figs),
                        format_value(row.values[1], sig_figs),
                        format_value(row.values[2], sig_figs)});
    }
    for (const auto& cells : grid) {
        for (std::size_t c = 0; c < 4; ++c) {
            widths[c] = std::max(widths[c], cells[c].size());
        }
    }
    for (const auto& cells : grid) {
        for (std::size_t c = 0; c < 4; ++c) {
            out << cells[c];
            if (c + 1 < 4) {
                out << std::string(widths[c] + 2 - cells[c].size(), ' ');
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string format_table_csv(const CapitalTable& table, int sig_figs) {
    std::ostringstream out;
    out << "strategy," << kRhoHeaders[0] << "," << kRhoHeaders[1] << "," << kRhoHeaders[2]
        << "\n";
    for (const TableRow& row : table.rows) {
        out << row.spec;
        for (const auto& value : row.values) {
            out << ",";
            if (value) {
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.*g", sig_figs, *value);
                out << buf;
            } else {
                out << "n/a";
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string format_table_json(const CapitalTable& table) {
    nlohmann::json j;
    j["title"] = table.title;
    j["rounds"] = table.rounds;
    j["columns"] = kRhoHeaders;
    j["rows"] = nlohmann::json::array();
    for (const TableRow& row : table.rows) {
        nlohmann::json r;
        r["strategy"] = row.spec;
        nlohmann::json values = nlohmann::json::array();
        for (const auto& value : row.values) {
            if (value) {
                values.push_back(*value);
            } else {
                values.push_back(nullptr);
            }
        }
        r["values"] = values;
        j["rows"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

}  // namespace coingame
