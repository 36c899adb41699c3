#pragma once

#include <stdexcept>
#include <string>

namespace coingame {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Skeptic announced a bet outside [-1/(1-rho), 1/rho]; a strategy bug, not a game outcome.
class BetOutOfBounds : public Error {
public:
    using Error::Error;
};

// A finite move source (replay file) ran out before the game ended.
class RealityExhausted : public Error {
public:
    using Error::Error;
};

// Hypergeometric strategy asked to bet at round n >= N.
class HorizonExceeded : public Error {
public:
    using Error::Error;
};

// Path left the support of the prior (h > M or t > N-M); capital is already zero there.
class OffSupport : public Error {
public:
    using Error::Error;
};

// Rising factorial (a)_m hit a factor a+j == 0.
class PoleHit : public Error {
public:
    using Error::Error;
};

// Stirling-based breakdown requested with h == 0 or t == 0.
class DegenerateCounts : public Error {
public:
    using Error::Error;
};

// Exhaustive path enumeration would exceed the configured cap.
class HorizonTooLarge : public Error {
public:
    using Error::Error;
};

// Price series shorter than two records.
class TooShort : public Error {
public:
    using Error::Error;
};

// Non-digit character in a digit string.
class BadDigit : public Error {
public:
    using Error::Error;
};

// Malformed input file; message carries the line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, long line) : Error(what), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// A required data file is absent.
class MissingData : public Error {
public:
    using Error::Error;
};

// Strategy/reality spec string does not match the documented grammar.
class SpecError : public Error {
public:
    using Error::Error;
};

}  // namespace coingame
