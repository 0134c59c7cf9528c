#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "weylstat/errors.hpp"

namespace weylstat {

/// Arbitrary-precision integer. GMP already gives us exact arithmetic and
/// value semantics; no reason to reinvent it.
using Integer = mpz_class;

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// C(n, k) as an exact integer; zero when k < 0 or (for n >= 0) k > n.
inline Integer binomial(const Integer& n, long k) {
    if (k < 0) return 0;
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

/// Exact rational number, always in lowest terms with positive denominator.
///
/// Thin wrapper over mpq_class whose only job is to guarantee the canonical
/// form on every construction path (mpq_class does not canonicalize its
/// two-argument constructor) and to fix the textual format "p/q".
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long n) : v_(Integer(n)) {}
    Rational(long long n) : v_(Integer(static_cast<long>(n))) {}
    Rational(const Integer& n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const Integer& num, const Integer& den) : v_(num, den) { canonicalize(); }
    Rational(long long num, long long den)
        : v_(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {
        canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parse "p", "-p", or "p/q". Throws ParseError on malformed input or q = 0.
    static Rational parse(std::string_view s) {
        mpq_class q;
        if (s.empty() || q.set_str(std::string(s), 10) != 0)
            throw ParseError("bad rational: '" + std::string(s) + "'");
        if (q.get_den() == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
        Rational r;
        r.v_ = std::move(q);
        r.canonicalize();
        return r;
    }

    const Integer& num() const { return v_.get_num(); }
    const Integer& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Exact integer value; throws Error if the value is not integral.
    Integer to_integer() const {
        if (!is_integer()) throw Error("not an integer: " + str());
        return v_.get_num();
    }

    /// Canonical text: "3/2", "-7/9"; integers without the "/1".
    std::string str() const { return v_.get_str(); }

    /// Decimal approximation, presentation only.
    double approx() const { return v_.get_d(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw Error("rational division by zero");
        return wrap(a.v_ / b.v_);
    }
    Rational operator-() const { return wrap(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    static Rational wrap(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);  // arithmetic on canonical operands stays canonical
        return r;
    }
    void canonicalize() {
        if (v_.get_den() == 0) throw Error("rational with zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

inline Rational pow(const Rational& base, unsigned long e) {
    Rational acc(1);
    Rational b = base;
    while (e != 0) {
        if (e & 1UL) acc *= b;
        b *= b;
        e >>= 1UL;
    }
    return acc;
}

}  // namespace weylstat
