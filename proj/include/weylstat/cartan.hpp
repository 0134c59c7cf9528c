#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "weylstat/errors.hpp"

namespace weylstat {

/// Finite Coxeter type. Families A..G are crystallographic and carry full
/// root data; H3, H4 and the dihedral I2(m) carry degree/exponent/gamma data
/// only. Node numbering follows the standard convention: A/B/C are chains
/// with the short node last in B and the long node last in C; D forks at node
/// n-2; E attaches node 2 to node 4 of the chain 1,3,4,...,n; F4 has long
/// nodes 1,2; G2 has short node 1.
struct CartanType {
    char family = 'A';
    int rank = 1;
    int m = 0;  // only meaningful for I2(m)

    bool crystallographic() const { return family >= 'A' && family <= 'G'; }

    /// "A2", "D4", "I2(7)"; inverse of parse().
    std::string str() const;

    /// Case-insensitive: "a2", "B3", "i2(7)". Throws ParseError for malformed
    /// strings and for invalid ranks (D2 is rejected; D3 is accepted and is
    /// isomorphic to A3; H2 is accepted as the I2(5) data point).
    static CartanType parse(std::string_view s);

    friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

/// Closed-form gamma = |highest root|^2/|highest short root|^2 * g * g_dual
/// per family: A_n (n+1)^2, B_n/C_n 4n^2+2n-2, D_n (2n-2)^2, E6 144, E7 324,
/// E8 900, F4 162, G2 48, H3 124, H4 1116, I2(m) 2m^2-5m+6 (H2 = I2(5)).
/// For crystallographic types RootSystem recomputes this from root data and
/// the two routes are cross-checked in the tests.
std::int64_t gamma_table(const CartanType& t);

}  // namespace weylstat
