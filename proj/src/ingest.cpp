#include "coingame/ingest.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace coingame {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::ifstream open_or_throw(const std::filesystem::path& source) {
    std::ifstream in(source);
    if (!in) {
        throw MissingData("cannot open " + source.string());
    }
    return in;
}

}  // namespace

std::vector<Move> prices_to_moves(const PriceSeries& series) {
    if (series.size() < 2) {
        throw TooShort("price series needs at least 2 records, got " +
                       std::to_string(series.size()));
    }
    for (const PriceRecord& rec : series) {
        if (!std::isfinite(rec.open) || rec.open <= 0.0) {
            throw Error("price series has a non-finite or non-positive price at '" + rec.label +
                        "'");
        }
    }
    std::vector<Move> moves;
    moves.reserve(series.size() - 1);
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
        moves.push_back(series[i + 1].open > series[i].open ? Move::Heads : Move::Tails);
    }
    return moves;
}

std::vector<Move> digits_to_moves(std::string_view digits) {
    if (digits.empty()) {
        throw BadDigit("digit string is empty");
    }
    std::vector<Move> moves;
    moves.reserve(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const char c = digits[i];
        if (c < '0' || c > '9') {
            std::ostringstream msg;
            msg << "non-digit character '" << c << "' at position " << i;
            throw BadDigit(msg.str());
        }
        moves.push_back(c >= '5' ? Move::Heads : Move::Tails);
    }
    return moves;
}

std::vector<Move> load_moves(const std::filesystem::path& source) {
    std::ifstream in = open_or_throw(source);
    std::vector<Move> moves;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string token = strip(line);
        if (token.empty()) {
            continue;
        }
        if (token == "H" || token == "h" || token == "1") {
            moves.push_back(Move::Heads);
        } else if (token == "T" || token == "t" || token == "0") {
            moves.push_back(Move::Tails);
        } else {
            throw ParseError("bad move token '" + token + "' in " + source.string() + " line " +
                                 std::to_string(line_no),
                             line_no);
        }
    }
    return moves;
}

void save_moves(const std::filesystem::path& target, std::span<const Move> path) {
    std::ofstream out(target);
    if (!out) {
        throw Error("cannot write " + target.string());
    }
    for (Move m : path) {
        out << (m == Move::Heads ? 'H' : 'T') << '\n';
    }
}

PriceSeries load_price_csv(const std::filesystem::path& source) {
    std::ifstream in = open_or_throw(source);
    PriceSeries series;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string row = strip(line);
        if (row.empty()) {
            continue;
        }
        if (line_no == 1) {
            if (row != "label,open") {
                throw ParseError("price CSV must start with header 'label,open', got '" + row +
                                     "'",
                                 line_no);
            }
            continue;
        }
        const std::size_t comma = row.find(',');
        if (comma == std::string::npos) {
            throw ParseError("missing comma in " + source.string() + " line " +
                                 std::to_string(line_no),
                             line_no);
        }
        const std::string label = strip(row.substr(0, comma));
        const std::string price_str = strip(row.substr(comma + 1));
        double price = 0.0;
        try {
            std::size_t used = 0;
            price = std::stod(price_str, &used);
            if (used != price_str.size()) throw std::invalid_argument(price_str);
        } catch (const std::exception&) {
            throw ParseError("bad price '" + price_str + "' in " + source.string() + " line " +
                                 std::to_string(line_no),
                             line_no);
        }
        if (!std::isfinite(price) || price <= 0.0) {
            throw ParseError("price must be finite and > 0 in " + source.string() + " line " +
                                 std::to_string(line_no),
                             line_no);
        }
        series.push_back(PriceRecord{label, price});
    }
    return series;
}

std::string load_digit_file(const std::filesystem::path& source) {
    std::ifstream in = open_or_throw(source);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return strip(content);
}

}  // namespace coingame
