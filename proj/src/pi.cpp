#include "coingame/pi.hpp"

#include <cstdint>
#include <vector>

#include "coingame/errors.hpp"

namespace coingame {

std::string_view pi_digits_500() {
    static constexpr std::string_view digits =
        "14159265358979323846264338327950288419716939937510"
        "58209749445923078164062862089986280348253421170679"
        "82148086513282306647093844609550582231725359408128"
        "48111745028410270193852110555964462294895493038196"
        "44288109756659334461284756482337867831652712019091"
        "45648566923460348610454326648213393607260249141273"
        "72458700660631558817488152092096282925409171536436"
        "78925903600113305305488204665213841469519415116094"
        "33057270365759591953092186117381932611793105118548"
        "07446237996274956735188575272489122793818301194912";
    return digits;
}

std::string spigot_pi_digits(int count) {
    if (count < 1) {
        throw Error("spigot needs count >= 1");
    }
    // One extra digit for the integer part "3", plus slack so held predigits
    // (runs of 9s) cannot starve the output.
    const int iterations = count + 32;
    const std::size_t len = static_cast<std::size_t>(10 * iterations / 3 + 1);
    std::vector<std::int64_t> a(len, 2);

    std::string out;
    out.reserve(static_cast<std::size_t>(count) + 8);
    int nines = 0;
    int predigit = 0;
    bool have_predigit = false;

    for (int j = 0; j < iterations && out.size() < static_cast<std::size_t>(count) + 1; ++j) {
        std::int64_t q = 0;
        for (std::size_t i = len; i-- > 0;) {
            const std::int64_t x = 10 * a[i] + q * static_cast<std::int64_t>(i + 1);
            const std::int64_t den = 2 * static_cast<std::int64_t>(i) + 1;
            a[i] = x % den;
            q = x / den;
        }
        a[0] = q % 10;
        q /= 10;
        if (q == 9) {
            ++nines;
        } else if (q == 10) {
            // Carry into the held predigit; held nines become zeros.
            out.push_back(static_cast<char>('0' + predigit + 1));
            out.append(static_cast<std::size_t>(nines), '0');
            predigit = 0;
            nines = 0;
        } else {
            if (have_predigit) {
                out.push_back(static_cast<char>('0' + predigit));
            }
            out.append(static_cast<std::size_t>(nines), '9');
            nines = 0;
            predigit = static_cast<int>(q);
            have_predigit = true;
        }
    }
    if (out.size() < static_cast<std::size_t>(count) + 1) {
        throw Error("spigot under-produced digits");  // not reachable with the slack above
    }
    return out.substr(1, static_cast<std::size_t>(count));
}

}  // namespace coingame
