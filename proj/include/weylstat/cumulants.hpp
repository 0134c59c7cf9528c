#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weylstat/qpoly.hpp"
#include "weylstat/rational.hpp"
#include "weylstat/root_system.hpp"

namespace weylstat::cumulants {

/// A distribution presented as prod [a_i]_q / prod [b_i]_q. Construction is
/// unchecked; expand() enforces that the quotient is a polynomial with
/// nonnegative coefficients.
struct QProduct {
    std::vector<std::int64_t> numerators;
    std::vector<std::int64_t> denominators;
};

/// kappa_r of the normalized distribution, by the Bernoulli-number formula
///   kappa_r = (B_r / r) * [ sum_i (a_i^r - 1) - sum_i (b_i^r - 1) ]
/// (written per element so it is invariant under padding either side with
/// [1]_q factors; B_1 = +1/2). Zero for odd r > 1.
Rational lemma_cumulant(const QProduct& d, int r);

/// The quotient as an explicit polynomial. Throws NonExactDivision when the
/// division leaves a remainder and NegativeCoefficient when the exact
/// quotient has a negative coefficient.
QPolynomial expand(const QProduct& d);

/// kappa_r computed the pedestrian way: expand, read off raw moments,
/// convert to cumulants. The equality with lemma_cumulant is a theorem and
/// is tested, never assumed.
Rational brute_cumulant(const QProduct& d, int r);
std::vector<Rational> brute_cumulants(const QProduct& d, int max_r);

/// Inversion-number distribution of the Coxeter group: prod [d_i]_q over the
/// degrees. Works for every finite type, including H3/H4/I2(m).
QProduct inversions_distribution(const RootSystem& rs);

/// Rational Catalan distribution prod [p + (p e_i mod h)]_q / [d_i]_q.
/// Requires gcd(p, h) = 1 (NotCoprime otherwise).
QProduct rational_catalan_distribution(const RootSystem& rs, std::int64_t p);

/// A minuscule poset: the order filter of positive roots through a minuscule
/// node, graded by root height. leq/geq are bitmask rows of the order
/// relation (bit j of leq[i] means element j <= element i); heights[i] is the
/// height of element i, ascending.
struct MinusculePoset {
    std::vector<std::int64_t> heights;
    std::int64_t size = 0;
    std::int64_t ambient_h = 0;  // Coxeter number of the ambient group
    std::vector<std::uint64_t> leq;
    std::vector<std::uint64_t> geq;
};

/// Build the poset for the given 1-based node. Throws NotMinuscule when the
/// node is not in the minuscule classification (A: all; B_n: n; C_n: 1;
/// D_n: 1, n-1, n; E6: 1, 6; E7: 7). The construction self-checks
/// sum(heights) = h|P|/2, max height <= h-1, and that the number of order
/// ideals equals the Weyl dimension of the minuscule weight.
MinusculePoset minuscule_poset(const RootSystem& rs, int node);

/// The a x b rectangle, realized as node a of A_{a+b-1}.
MinusculePoset rectangle_poset(std::int64_t a, std::int64_t b);

/// Number of order ideals (down-closed subsets), by divide and conquer over
/// the up-set/down-set split of one element.
Integer order_ideal_count(const MinusculePoset& poset);

/// Plane partitions over the poset with entries at most k:
/// prod [k + ht(p)]_q / [ht(p)]_q.
QProduct pp_distribution(const MinusculePoset& poset, std::int64_t k);

/// Major index of linear extensions: [|P|]!_q / prod [ht(p)]_q.
QProduct syt_maj_distribution(const MinusculePoset& poset);

/// Descending plane partitions: prod_{i=0}^{n-1} [3i+1]!_q / [n+i]!_q.
QProduct dpp_distribution(std::int64_t n);

/// The closed-form statistics the corollaries attach to each distribution.
/// kappa4 is present only where a fourth-cumulant formula exists (rational
/// Catalan). Each value equals the corresponding lemma_cumulant instance;
/// that equality is tested, not assumed.
struct ClosedFormStats {
    Rational mean;
    Rational variance;
    std::optional<Rational> kappa4;
};

ClosedFormStats closed_form_stats(const RootSystem& rs);                         // inversions
ClosedFormStats closed_form_stats(const RootSystem& rs, std::int64_t p);         // rational Catalan
ClosedFormStats closed_form_stats(const MinusculePoset& poset, std::int64_t k);  // plane partitions
ClosedFormStats closed_form_stats(const MinusculePoset& poset);                  // SYT major index
ClosedFormStats closed_form_stats(std::int64_t n);                               // descending pp

}  // namespace weylstat::cumulants
