#pragma once

#include <string>
#include <string_view>

namespace coingame {

/// First 500 fractional digits of pi. The verification suite checks this
/// constant against spigot_pi_digits(); the bundled data files carry the same
/// digits as a digit line and as a move file.
std::string_view pi_digits_500();

/// `count` fractional digits of pi from a Rabinowitz-Wagon spigot, exact
/// integer arithmetic throughout. Serves as the independent digit oracle.
std::string spigot_pi_digits(int count);

}  // namespace coingame
