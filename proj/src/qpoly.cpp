#include "weylstat/qpoly.hpp"

#include <sstream>

#include "weylstat/errors.hpp"

namespace weylstat {

QPolynomial::QPolynomial(Rational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void QPolynomial::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QPolynomial QPolynomial::q_integer(std::int64_t n) {
    if (n < 1) throw Error("q_integer requires n >= 1, got " + std::to_string(n));
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(1));
    return QPolynomial(std::move(c));
}

bool QPolynomial::nonnegative() const {
    for (const auto& x : c_)
        if (x.sign() < 0) return false;
    return true;
}

Rational QPolynomial::mass() const {
    Rational s(0);
    for (const auto& x : c_) s += x;
    return s;
}

Rational QPolynomial::raw_moment(int r) const {
    Rational total = mass();
    if (total.is_zero()) throw Error("raw_moment of a zero-mass polynomial");
    Rational s(0);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        Rational kr = pow(Rational(static_cast<long long>(k)), static_cast<unsigned long>(r));
        s += c_[k] * kr;
    }
    return s / total;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return QPolynomial{};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return QPolynomial(std::move(c));
}

std::string QPolynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        Rational a = c_[k];
        if (first) {
            if (a.sign() < 0) os << "-", a = -a;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        bool unit = (a == Rational(1));
        if (k == 0) {
            os << a.str();
        } else {
            if (!unit) os << a.str() << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

QPolynomial poly_divide_exact(const QPolynomial& num, const QPolynomial& den) {
    if (den.is_zero()) throw Error("poly_divide_exact: division by the zero polynomial");
    if (num.is_zero()) return QPolynomial{};
    if (num.degree() < den.degree())
        throw NonExactDivision("quotient degree would be negative: deg(num)=" +
                               std::to_string(num.degree()) +
                               " < deg(den)=" + std::to_string(den.degree()));
    std::vector<Rational> r = num.coeffs();
    const std::vector<Rational>& d = den.coeffs();
    const std::size_t dd = d.size() - 1;
    const Rational& lead = d.back();
    std::vector<Rational> q(r.size() - dd, Rational(0));
    for (std::size_t i = r.size(); i-- > dd;) {
        if (r[i].is_zero()) continue;
        Rational f = r[i] / lead;
        q[i - dd] = f;
        for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] -= f * d[j];
    }
    for (const auto& x : r)
        if (!x.is_zero())
            throw NonExactDivision("nonzero remainder in exact polynomial division");
    return QPolynomial(std::move(q));
}

}  // namespace weylstat
