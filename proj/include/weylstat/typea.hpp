#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "weylstat/parallel.hpp"
#include "weylstat/partition.hpp"
#include "weylstat/rational.hpp"

namespace weylstat::typea {

/// Content of a tableau: entry i counts occurrences of the value i+1.
using ContentVector = std::vector<std::int64_t>;

/// Enumerate semistandard Young tableaux of the given shape with entries in
/// {1, ..., n}, grouped by content (a Kostka-number table). Throws TooManyRows
/// when the shape has more than n nonzero rows.
std::map<ContentVector, Integer> enumerate_ssyt(const Partition& lambda, int n,
                                                Exec exec = Exec::serial);

/// Number of SSYT of the shape with entries in {1..n}: the hook-content /
/// Weyl product formula for s_lambda(1, ..., 1).
Integer schur_eval_ones(const Partition& lambda, int n);

/// Complete homogeneous symmetric polynomial h_i at (1, ..., 1): C(n+i-1, i).
Integer homog_eval_ones(std::int64_t i, int n);

/// E[sum_i c_i^2] - m^2/n over uniformly random SSYT of the shape, where c is
/// the content vector and m = |lambda|. Exact brute-force from the tableau
/// enumeration.
Rational expected_norm_tableaux(const Partition& lambda, int n,
                                Exec exec = Exec::serial);

/// Closed form for the same statistic: (1/(n+1)) <bar(lambda), bar(lambda+2 rho)>
/// with rho = (n-1, n-2, ..., 0) and bar(x) = x - mean(x).
Rational theorem_rhs(const Partition& lambda, int n);

/// Alternative closed form obtained from a Pieri-rule expansion:
///   -m^2/n + (n!/(n+1)) * sum_j [prod_{i != j} 1/(x_j - x_i)]
///                              * C(n+x_j, x_j) * (n + 2 x_j + 1)
/// with x_j = lambda_j - j (strictly decreasing, so no denominator vanishes).
Rational pieri_rhs_closed_form(const Partition& lambda, int n);

/// Evaluate both sides of the underlying rational-function identity at a point
/// x with distinct coordinates (throws RepeatedCoordinate otherwise):
///   LHS = 2 sum_{i<=j} x_i x_j + (n+1)^2 sum_i x_i + n(n+1)(3n^2+5n+4)/12
///   RHS = sum_j [prod_{i != j} 1/(x_j - x_i)] * P(x_j),
///         P(t) = (n + 2t + 1) * prod_{i=1}^{n} (t + i).
std::pair<Rational, Rational> polynomial_identity_check(const std::vector<Rational>& x);

}  // namespace weylstat::typea
