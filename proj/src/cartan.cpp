#include "weylstat/cartan.hpp"

#include <cctype>
#include <sstream>

namespace weylstat {

std::string CartanType::str() const {
    std::ostringstream os;
    os << family << rank;
    if (family == 'I') os << '(' << m << ')';
    return os.str();
}

namespace {

[[noreturn]] void bad(std::string_view s, const char* why) {
    throw ParseError("bad Cartan type '" + std::string(s) + "': " + why);
}

}  // namespace

CartanType CartanType::parse(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) bad(s, "empty");
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i++])));
    if (fam < 'A' || fam > 'I') bad(s, "family must be one of A..I");

    long rank = 0;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        rank = rank * 10 + (s[i++] - '0');
        if (++digits > 3) bad(s, "rank out of range");
    }
    if (digits == 0) bad(s, "missing rank");

    long m = 0;
    if (i < s.size() && s[i] == '(') {
        ++i;
        std::size_t mdigits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            m = m * 10 + (s[i++] - '0');
            if (++mdigits > 4) bad(s, "m out of range");
        }
        if (mdigits == 0 || i == s.size() || s[i] != ')') bad(s, "malformed (m) suffix");
        ++i;
    }
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i != s.size()) bad(s, "trailing characters");

    CartanType t{fam, static_cast<int>(rank), static_cast<int>(m)};
    if (fam != 'I' && m != 0) bad(s, "(m) suffix is only valid for family I");
    switch (fam) {
        case 'A':
            if (rank < 1) bad(s, "A requires rank >= 1");
            break;
        case 'B':
        case 'C':
            if (rank < 2) bad(s, "B/C require rank >= 2");
            break;
        case 'D':
            if (rank < 3) bad(s, "D requires rank >= 3 (D3 = A3; D2 is not supported)");
            break;
        case 'E':
            if (rank < 6 || rank > 8) bad(s, "E requires rank in {6,7,8}");
            break;
        case 'F':
            if (rank != 4) bad(s, "F requires rank 4");
            break;
        case 'G':
            if (rank != 2) bad(s, "G requires rank 2");
            break;
        case 'H':
            if (rank < 2 || rank > 4) bad(s, "H requires rank in {2,3,4}");
            break;
        case 'I':
            if (rank != 2) bad(s, "I requires rank 2");
            if (m < 3) bad(s, "I2(m) requires m >= 3");
            break;
        default:
            bad(s, "unknown family");
    }
    return t;
}

std::int64_t gamma_table(const CartanType& t) {
    const std::int64_t n = t.rank;
    switch (t.family) {
        case 'A': return (n + 1) * (n + 1);
        case 'B':
        case 'C': return 4 * n * n + 2 * n - 2;
        case 'D': return (2 * n - 2) * (2 * n - 2);
        case 'E': return n == 6 ? 144 : (n == 7 ? 324 : 900);
        case 'F': return 162;
        case 'G': return 48;
        case 'H':
            if (n == 2) return 2 * 25 - 5 * 5 + 6;  // H2 = I2(5)
            return n == 3 ? 124 : 1116;
        case 'I': {
            const std::int64_t m = t.m;
            return 2 * m * m - 5 * m + 6;
        }
        default: throw UnsupportedType("no gamma for family " + std::string(1, t.family));
    }
}

}  // namespace weylstat
