#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "coingame/game.hpp"

namespace coingame {

/// The three ticket prices every capital table is evaluated at.
inline constexpr std::array<double, 3> kTableRhos = {0.5, 2.0 / 3.0, 0.4};

struct TableRow {
    std::string label;                            // display label
    std::string spec;                             // machine label (strategy spec grammar)
    std::array<std::optional<double>, 3> values;  // one per kTableRhos; empty = n/a
};

struct CapitalTable {
    std::string title;
    long rounds = 0;
    std::vector<TableRow> rows;
};

enum class TableKind { NikkeiCounts, Pi };

/// Builds the capital table for the requested data set. For Pi the source, if
/// given, must be a digit file and replaces the bundled digits. NikkeiCounts
/// uses the published head/tail counts (221/279); the path-dependent one-sided
/// rows are n/a unless a price CSV source supplies the actual series.
CapitalTable make_table(TableKind kind,
                        const std::optional<std::filesystem::path>& source = {});

/// All rows (hindsight plus plain/positive-part/negative-part beta-binomial
/// for alpha = beta in {1, 100, 500}) computed by replaying the given path.
CapitalTable table_from_moves(std::span<const Move> moves, std::string title);

std::string format_table_text(const CapitalTable& table, int sig_figs = 7);
std::string format_table_csv(const CapitalTable& table, int sig_figs = 7);
std::string format_table_json(const CapitalTable& table);

}  // namespace coingame
