#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylstat/rational.hpp"

namespace weylstat {

/// Dense univariate polynomial in q with exact rational coefficients.
/// Invariant: the coefficient vector carries no trailing zeros; the zero
/// polynomial is the empty vector (degree() == -1).
class QPolynomial {
  public:
    QPolynomial() = default;
    explicit QPolynomial(Rational constant);
    /// coeffs[k] is the coefficient of q^k; trailing zeros are stripped.
    explicit QPolynomial(std::vector<Rational> coeffs);

    /// [n]_q = 1 + q + ... + q^(n-1). Requires n >= 1.
    static QPolynomial q_integer(std::int64_t n);
    static QPolynomial one() { return QPolynomial(Rational(1)); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    bool nonnegative() const;

    /// Sum of coefficients, i.e. the value at q = 1.
    Rational mass() const;

    /// r-th raw moment of the distribution the coefficients define:
    /// sum_k c_k k^r / mass(). Throws Error on zero mass.
    Rational raw_moment(int r) const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return !(a == b); }

    /// "1 - q + q^2" style rendering, deterministic.
    std::string str() const;

  private:
    void normalize();
    std::vector<Rational> c_;
};

/// Exact quotient num/den; throws NonExactDivision if the remainder is
/// nonzero and Error if den is zero. The quotient may have negative
/// coefficients — exactness is a statement about division, not positivity.
QPolynomial poly_divide_exact(const QPolynomial& num, const QPolynomial& den);

}  // namespace weylstat
