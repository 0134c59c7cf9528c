#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "weylstat/bernoulli.hpp"
#include "weylstat/errors.hpp"
#include "weylstat/moments.hpp"
#include "weylstat/qpoly.hpp"
#include "weylstat/rational.hpp"

using namespace weylstat;

namespace {

Rational Q(long long n, long long d = 1) { return Rational(n, d); }

// Independent oracle: mean/variance of the distribution on {0..n-1} computed
// by direct summation, no Bernoulli numbers involved.
Rational direct_mean_uniform(std::int64_t n) {
    Rational s(0);
    for (std::int64_t k = 0; k < n; ++k) s += Q(k);
    return s / Q(n);
}

Rational direct_var_uniform(std::int64_t n) {
    Rational m = direct_mean_uniform(n);
    Rational s(0);
    for (std::int64_t k = 0; k < n; ++k) s += (Q(k) - m) * (Q(k) - m);
    return s / Q(n);
}

QPolynomial random_poly(std::mt19937_64& rng, int max_deg, bool nonneg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long long> num(nonneg ? 0 : -6, 6);
    std::uniform_int_distribution<long long> den(1, 4);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1, Rational(0));
    for (auto& x : c) x = Q(num(rng), den(rng));
    return QPolynomial(std::move(c));
}

}  // namespace

TEST_SUITE("numeric") {

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(6, 4) == Q(3, 2));
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(3, -2).str() == "-3/2");  // sign moves to the numerator
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(14, 7).str() == "2");
    CHECK(Rational::parse("3/2") == Q(3, 2));
    CHECK(Rational::parse("-7/9") == Q(-7, 9));
    CHECK(Rational::parse("42") == Q(42));
    CHECK(Rational::parse("4/6") == Q(2, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Q(1, 0), Error);
}

TEST_CASE("rational arithmetic") {
    CHECK(Q(1, 2) + Q(1, 3) == Q(5, 6));
    CHECK(Q(1, 2) - Q(1, 3) == Q(1, 6));
    CHECK(Q(2, 3) * Q(9, 4) == Q(3, 2));
    CHECK(Q(2, 3) / Q(4, 3) == Q(1, 2));
    CHECK(pow(Q(-2, 3), 3) == Q(-8, 27));
    CHECK(Q(1, 3) < Q(1, 2));
    CHECK(Q(5, 1).to_integer() == 5);
    CHECK_THROWS_AS(Q(1, 2).to_integer(), Error);
    CHECK_THROWS_AS(Q(1) / Q(0), Error);
}

TEST_CASE("integer helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(Integer(7), 4) == 35);
    CHECK(binomial(Integer(7), 0) == 1);
    CHECK(binomial(Integer(7), 8) == 0);
    CHECK(binomial(Integer(7), -1) == 0);
    CHECK(binomial(Integer(2), 3) == 0);  // C(n+x, x) terms with x < -1 vanish
}

TEST_CASE("q_integer and polynomial arithmetic") {
    CHECK(QPolynomial::q_integer(1) == QPolynomial::one());
    CHECK(QPolynomial::q_integer(4).str() == "1 + q + q^2 + q^3");
    CHECK(QPolynomial::q_integer(4).mass() == Q(4));
    CHECK_THROWS_AS(QPolynomial::q_integer(0), Error);

    QPolynomial a({Q(1), Q(-1), Q(1)});  // 1 - q + q^2
    QPolynomial b({Q(1), Q(1)});         // 1 + q
    CHECK((a * b).str() == "1 + q^3");
    CHECK((a + b) == QPolynomial({Q(2), Q(0), Q(1)}));
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(QPolynomial({Q(1), Q(2), Q(0), Q(0)}).degree() == 1);  // trailing zeros stripped
    CHECK_FALSE(a.nonnegative());
    CHECK(b.nonnegative());
}

TEST_CASE("poly_divide_exact basics") {
    // [4]/[2] = 1 + q^2
    QPolynomial q4 = QPolynomial::q_integer(4);
    QPolynomial q2 = QPolynomial::q_integer(2);
    CHECK(poly_divide_exact(q4, q2) == QPolynomial({Q(1), Q(0), Q(1)}));
    // division by a non-divisor is rejected
    CHECK_THROWS_AS(poly_divide_exact(QPolynomial::q_integer(3), q2), NonExactDivision);
    CHECK_THROWS_AS(poly_divide_exact(q2, q4), NonExactDivision);
    CHECK_THROWS_AS(poly_divide_exact(q2, QPolynomial{}), Error);
    CHECK(poly_divide_exact(QPolynomial{}, q2).is_zero());
}

TEST_CASE("poly_divide_exact: [6][1] over [2][3] is exact with quotient 1 - q + q^2") {
    // Frozen by long division: ([6] stays [6] after the neutral [1] factor and
    // [2][3] = 1 + 2q + 2q^2 + q^3 divides it exactly; the quotient has a
    // negative coefficient, which is legal for division).
    QPolynomial num = QPolynomial::q_integer(6) * QPolynomial::q_integer(1);
    QPolynomial den = QPolynomial::q_integer(2) * QPolynomial::q_integer(3);
    QPolynomial quot = poly_divide_exact(num, den);
    CHECK(quot == QPolynomial({Q(1), Q(-1), Q(1)}));
    CHECK(quot.str() == "1 - q + q^2");
    CHECK_FALSE(quot.nonnegative());
    CHECK(quot * den == num);  // round-trip
}

TEST_CASE("poly_divide_exact round-trip property") {
    std::mt19937_64 rng(20260815u);
    for (int t = 0; t < 200; ++t) {
        QPolynomial a = random_poly(rng, 6, false);
        QPolynomial b = random_poly(rng, 6, false);
        if (b.is_zero()) continue;
        CHECK(poly_divide_exact(a * b, b) == a);
    }
}

TEST_CASE("bernoulli values, sign convention frozen by the uniform distribution") {
    // kappa_1 of uniform{0..n-1} is (n-1)/2; the lemma shape (B_1/1)(n - 1)
    // forces B_1 = +1/2. kappa_2 = (n^2-1)/12 likewise pins B_2 = 1/6.
    for (std::int64_t n : {2, 3, 5, 8}) {
        CHECK(direct_mean_uniform(n) == bernoulli(1) * Q(n - 1));
        CHECK(direct_var_uniform(n) == bernoulli(2) / Q(2) * Q(n * n - 1));
    }
    CHECK(bernoulli(0) == Q(1));
    CHECK(bernoulli(1) == Q(1, 2));
    CHECK(bernoulli(2) == Q(1, 6));
    CHECK(bernoulli(4) == Q(-1, 30));
    CHECK(bernoulli(6) == Q(1, 42));
    CHECK(bernoulli(8) == Q(-1, 30));
    CHECK(bernoulli(12) == Q(-691, 2730));
    for (int r = 3; r <= 25; r += 2) CHECK(bernoulli(r) == Q(0));
    CHECK_THROWS_AS(bernoulli(-1), Error);
}

TEST_CASE("moments_to_cumulants frozen examples") {
    // point mass at 0
    CHECK(moments_to_cumulants({Q(1), Q(0), Q(0)}) == std::vector<Rational>{Q(0), Q(0)});
    // uniform on {0,1}: m = (1, 1/2, 1/2) -> kappa = (1/2, 1/4)
    CHECK(moments_to_cumulants({Q(1), Q(1, 2), Q(1, 2)}) ==
          std::vector<Rational>{Q(1, 2), Q(1, 4)});
    // uniform on {0,1,2}: kappa_2 = 2/3
    auto k = moments_to_cumulants({Q(1), Q(1), Q(5, 3)});
    CHECK(k[1] == Q(2, 3));
    CHECK_THROWS_AS(moments_to_cumulants({Q(2), Q(0)}), Error);
    CHECK_THROWS_AS(moments_to_cumulants({}), Error);
}

TEST_CASE("distribution cumulants match direct mean/variance") {
    std::mt19937_64 rng(77u);
    for (int t = 0; t < 100; ++t) {
        QPolynomial p = random_poly(rng, 8, true);
        if (p.is_zero()) continue;
        auto k = distribution_cumulants(p, 2);
        // direct mean / central variance
        Rational mean = p.raw_moment(1);
        Rational var = p.raw_moment(2) - mean * mean;
        CHECK(k[0] == mean);
        CHECK(k[1] == var);
    }
}

TEST_CASE("q_integer cumulants against the closed forms") {
    for (std::int64_t n : {1, 2, 3, 7, 12}) {
        auto k = distribution_cumulants(QPolynomial::q_integer(n), 3);
        CHECK(k[0] == Q(n - 1, 2));
        CHECK(k[1] == Q(n * n - 1, 12));
        CHECK(k[2] == Q(0));  // third cumulant of a symmetric distribution
    }
}

}  // TEST_SUITE
