#pragma once

#include <vector>

#include "weylstat/qpoly.hpp"
#include "weylstat/rational.hpp"

namespace weylstat {

/// Raw moments -> cumulants. Input is (m_0 = 1, m_1, ..., m_R); output is
/// (kappa_1, ..., kappa_R) via the standard recursion
///   kappa_n = m_n - sum_{k=1}^{n-1} C(n-1, k-1) kappa_k m_{n-k}.
/// Throws Error unless moments[0] == 1.
std::vector<Rational> moments_to_cumulants(const std::vector<Rational>& moments);

/// Cumulants kappa_1..kappa_R of the distribution given by the coefficients
/// of a nonnegative, nonzero polynomial (exponent = value, coefficient = mass).
std::vector<Rational> distribution_cumulants(const QPolynomial& p, int R);

}  // namespace weylstat
