#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coingame/game.hpp"

namespace coingame {

struct PriceRecord {
    std::string label;
    double open;
};

/// Ordered opening prices; needs at least two records to yield a move.
using PriceSeries = std::vector<PriceRecord>;

/// Move n is Heads iff price(n+1) > price(n), strictly; ties map to Tails.
/// Output length is input length - 1. Throws TooShort below two records.
std::vector<Move> prices_to_moves(const PriceSeries& series);

/// Heads iff the digit is in {5,...,9}, position by position.
std::vector<Move> digits_to_moves(std::string_view digits);

/// One move per line, `H`/`T` or `1`/`0` (mixed allowed); blank lines skipped.
std::vector<Move> load_moves(const std::filesystem::path& source);

void save_moves(const std::filesystem::path& target, std::span<const Move> path);

/// CSV with header `label,open`, one record per line, `.` decimal separator.
PriceSeries load_price_csv(const std::filesystem::path& source);

/// Single line of decimal digits (surrounding whitespace tolerated).
std::string load_digit_file(const std::filesystem::path& source);

}  // namespace coingame
