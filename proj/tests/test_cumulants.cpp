#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "weylstat/cumulants.hpp"
#include "weylstat/errors.hpp"
#include "weylstat/partition.hpp"
#include "weylstat/qpoly.hpp"
#include "weylstat/root_system.hpp"

using namespace weylstat;
using cumulants::MinusculePoset;
using cumulants::QProduct;

namespace {

/// Generating function of order-preserving maps P -> {0..k} graded by the sum
/// of values: the plane-partition ground truth, enumerated directly.
QPolynomial order_preserving_maps(const MinusculePoset& poset, std::int64_t k) {
    const std::size_t n = static_cast<std::size_t>(poset.size);
    std::vector<std::int64_t> value(n, 0);
    std::map<std::int64_t, Rational> by_sum;
    auto dfs = [&](auto&& self, std::size_t i, std::int64_t sum) -> void {
        if (i == n) {
            by_sum[sum] += Rational(1);
            return;
        }
        for (std::int64_t v = 0; v <= k; ++v) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                if ((poset.leq[i] >> j) & 1ULL) ok = value[j] <= v;  // j <= i in P
                if (ok && ((poset.geq[i] >> j) & 1ULL)) ok = v <= value[j];
            }
            if (!ok) continue;
            value[i] = v;
            self(self, i + 1, sum + v);
        }
    };
    dfs(dfs, 0, 0);
    std::vector<Rational> coeffs;
    if (!by_sum.empty()) coeffs.assign(static_cast<std::size_t>(by_sum.rbegin()->first) + 1, Rational(0));
    for (const auto& [sum, count] : by_sum) coeffs[static_cast<std::size_t>(sum)] = count;
    return QPolynomial(coeffs);
}

std::multiset<std::int64_t> height_multiset(const MinusculePoset& poset) {
    return {poset.heights.begin(), poset.heights.end()};
}

}  // namespace

TEST_SUITE("cumulants") {

TEST_CASE("lemma cumulant basics") {
    for (std::int64_t n = 1; n <= 8; ++n) {
        QProduct d{{n}, {}};
        CHECK(cumulants::lemma_cumulant(d, 1) == Rational(n - 1, 2));
        CHECK(cumulants::lemma_cumulant(d, 2) == Rational(Integer(n) * n - 1, Integer(12)));
        CHECK(cumulants::lemma_cumulant(d, 3) == Rational(0));
        CHECK(cumulants::lemma_cumulant(d, 5) == Rational(0));
    }
    // odd cumulants above the first vanish for any product
    QProduct mixed{{4, 7, 9}, {2, 3}};
    CHECK(cumulants::lemma_cumulant(mixed, 3) == Rational(0));
    CHECK(cumulants::lemma_cumulant(mixed, 5) == Rational(0));
    CHECK_THROWS_AS(cumulants::lemma_cumulant(mixed, 0), Error);
    CHECK_THROWS_AS(cumulants::lemma_cumulant(QProduct{{0}, {}}, 1), Error);
    CHECK_THROWS_AS(cumulants::lemma_cumulant(QProduct{{3}, {-2}}, 1), Error);
}

TEST_CASE("lemma is invariant under padding with trivial factors") {
    QProduct bare{{5, 6}, {3}};
    QProduct padded{{5, 6, 1, 1, 1}, {3, 1, 1}};
    for (int r = 1; r <= 6; ++r)
        CHECK(cumulants::lemma_cumulant(bare, r) == cumulants::lemma_cumulant(padded, r));
}

TEST_CASE("expansion and the brute-force cumulants") {
    QProduct two_point{{4}, {2}};
    const QPolynomial poly = cumulants::expand(two_point);
    CHECK(poly == QPolynomial({Rational(1), Rational(0), Rational(1)}));
    CHECK(cumulants::brute_cumulant(two_point, 1) == Rational(1));
    CHECK(cumulants::brute_cumulant(two_point, 2) == Rational(1));
    for (std::int64_t n = 1; n <= 9; ++n) {
        QProduct d{{n}, {}};
        for (int r = 1; r <= 6; ++r)
            CHECK(cumulants::brute_cumulant(d, r) == cumulants::lemma_cumulant(d, r));
    }
    CHECK_THROWS_AS(cumulants::expand(QProduct{{3}, {2}}), NonExactDivision);
    // exact quotient with a negative coefficient: [6]/([2][3]) = 1 - q + q^2
    CHECK_THROWS_AS(cumulants::expand(QProduct{{6}, {2, 3}}), NegativeCoefficient);
}

TEST_CASE("inversions distribution across the catalog") {
    for (const char* name :
         {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2", "H3"}) {
        const auto rs = RootSystem::build(name);
        const QProduct d = cumulants::inversions_distribution(rs);
        CHECK(d.numerators == rs.degrees());
        CHECK(d.denominators.empty());
        // the expansion is the length generating function: mass = |W|
        CHECK(cumulants::expand(d).mass() == Rational(rs.weyl_order()));
        for (int r = 1; r <= 6; ++r)
            CHECK(cumulants::brute_cumulant(d, r) == cumulants::lemma_cumulant(d, r));
        const auto stats = cumulants::closed_form_stats(rs);
        CHECK(stats.mean == cumulants::lemma_cumulant(d, 1));
        CHECK(stats.variance == cumulants::lemma_cumulant(d, 2));
        CHECK_FALSE(stats.kappa4.has_value());
        if (rs.has_roots())
            CHECK(stats.mean ==
                  Rational(Integer(static_cast<long>(rs.positive_roots().size())), Integer(2)));
    }
    const auto a2 = RootSystem::build("A2");
    CHECK(cumulants::closed_form_stats(a2).mean == Rational(3, 2));
    CHECK(cumulants::closed_form_stats(a2).variance == Rational(11, 12));
    const auto a1 = RootSystem::build("A1");
    CHECK(cumulants::expand(cumulants::inversions_distribution(a1)) ==
          QPolynomial({Rational(1), Rational(1)}));
    CHECK(cumulants::closed_form_stats(a1).mean == Rational(1, 2));
}

TEST_CASE("rational catalan distribution") {
    const auto a1 = RootSystem::build("A1");
    const QProduct d13 = cumulants::rational_catalan_distribution(a1, 3);
    CHECK(d13.numerators == std::vector<std::int64_t>{4});
    CHECK(d13.denominators == std::vector<std::int64_t>{2});
    CHECK(cumulants::expand(d13) == QPolynomial({Rational(1), Rational(0), Rational(1)}));
    CHECK(cumulants::lemma_cumulant(d13, 1) == Rational(1));

    // p = 1 collapses to the constant distribution
    for (const char* name : {"A2", "B2", "G2"}) {
        const auto rs = RootSystem::build(name);
        const QProduct trivial = cumulants::rational_catalan_distribution(rs, 1);
        CHECK(cumulants::expand(trivial) == QPolynomial::one());
        for (int r = 1; r <= 4; ++r) CHECK(cumulants::lemma_cumulant(trivial, r) == Rational(0));
    }

    CHECK_THROWS_AS(cumulants::rational_catalan_distribution(RootSystem::build("A2"), 3),
                    NotCoprime);
    CHECK_THROWS_AS(cumulants::rational_catalan_distribution(RootSystem::build("A2"), 6),
                    NotCoprime);
    CHECK_THROWS_AS(cumulants::rational_catalan_distribution(RootSystem::build("B2"), 2),
                    NotCoprime);
    CHECK_THROWS_AS(cumulants::rational_catalan_distribution(a1, 0), Error);
}

TEST_CASE("rational catalan closed forms match the lemma") {
    for (const char* name : {"A1", "A2", "A3", "B2"}) {
        const auto rs = RootSystem::build(name);
        const std::int64_t h = rs.coxeter_number();
        for (std::int64_t p = 1; p <= 9; ++p) {
            if (std::gcd(p, h) != 1) continue;
            const QProduct d = cumulants::rational_catalan_distribution(rs, p);
            const auto stats = cumulants::closed_form_stats(rs, p);
            CHECK(stats.mean == cumulants::lemma_cumulant(d, 1));
            CHECK(stats.variance == cumulants::lemma_cumulant(d, 2));
            REQUIRE(stats.kappa4.has_value());
            CHECK(*stats.kappa4 == cumulants::lemma_cumulant(d, 4));
            for (int r = 1; r <= 6; ++r)
                CHECK(cumulants::brute_cumulant(d, r) == cumulants::lemma_cumulant(d, r));
        }
    }
}

TEST_CASE("coprime multiplication permutes exponents only in the crystallographic catalog") {
    for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "C4", "D4", "F4", "G2"}) {
        const auto rs = RootSystem::build(name);
        const std::int64_t h = rs.coxeter_number();
        std::multiset<std::int64_t> exponents(rs.exponents().begin(), rs.exponents().end());
        for (std::int64_t p = 1; p <= 9; ++p) {
            if (std::gcd(p, h) != 1) continue;
            std::multiset<std::int64_t> mapped;
            for (std::int64_t e : rs.exponents()) mapped.insert((p * e) % h);
            CHECK(mapped == exponents);
        }
    }
    // H3, p = 3: multiplication mod h = 10 does NOT permute {1, 5, 9}, and the
    // crystallographic variance formula correspondingly fails...
    const auto h3 = RootSystem::build("H3");
    std::multiset<std::int64_t> mapped;
    for (std::int64_t e : h3.exponents()) mapped.insert((3 * e) % 10);
    CHECK(mapped == std::multiset<std::int64_t>{3, 5, 7});
    CHECK(mapped != std::multiset<std::int64_t>{1, 5, 9});
    const QProduct d = cumulants::rational_catalan_distribution(h3, 3);
    CHECK(cumulants::closed_form_stats(h3, 3).variance != cumulants::lemma_cumulant(d, 2));
    // ...while the lemma itself, which never used that property, still holds
    for (int r = 1; r <= 6; ++r)
        CHECK(cumulants::brute_cumulant(d, r) == cumulants::lemma_cumulant(d, r));
}

TEST_CASE("minuscule poset construction") {
    const auto a1 = RootSystem::build("A1");
    const auto single = cumulants::minuscule_poset(a1, 1);
    CHECK(single.size == 1);
    CHECK(single.heights == std::vector<std::int64_t>{1});
    CHECK(cumulants::order_ideal_count(single) == 2);

    const auto d4 = RootSystem::build("D4");
    const auto vec = cumulants::minuscule_poset(d4, 1);
    CHECK(vec.size == 6);
    CHECK(vec.ambient_h == 6);
    CHECK(cumulants::order_ideal_count(vec) == 8);
    for (int node : {3, 4}) {
        const auto spin = cumulants::minuscule_poset(d4, node);
        CHECK(spin.size == 6);
        CHECK(cumulants::order_ideal_count(spin) == 8);
    }

    const auto b3 = RootSystem::build("B3");
    const auto spin3 = cumulants::minuscule_poset(b3, 3);
    CHECK(spin3.size == 6);
    CHECK(cumulants::order_ideal_count(spin3) == 8);

    const auto e6 = RootSystem::build("E6");
    const auto e6p = cumulants::minuscule_poset(e6, 1);
    CHECK(e6p.size == 16);
    CHECK(cumulants::order_ideal_count(e6p) == 27);

    const auto e7 = RootSystem::build("E7");
    const auto e7p = cumulants::minuscule_poset(e7, 7);
    CHECK(e7p.size == 27);
    CHECK(cumulants::order_ideal_count(e7p) == 56);

    // height symmetry holds for every constructed poset
    for (const auto* poset : {&single, &vec, &spin3, &e6p, &e7p}) {
        Integer total(0);
        for (std::int64_t ht : poset->heights) total += ht;
        CHECK(total * 2 == Integer(poset->ambient_h) * poset->size);
        CHECK(*std::max_element(poset->heights.begin(), poset->heights.end()) <=
              poset->ambient_h - 1);
    }
}

TEST_CASE("non-minuscule nodes are rejected") {
    CHECK_THROWS_AS(cumulants::minuscule_poset(RootSystem::build("B3"), 1), NotMinuscule);
    CHECK_THROWS_AS(cumulants::minuscule_poset(RootSystem::build("C3"), 2), NotMinuscule);
    CHECK_THROWS_AS(cumulants::minuscule_poset(RootSystem::build("D4"), 2), NotMinuscule);
    CHECK_THROWS_AS(cumulants::minuscule_poset(RootSystem::build("E6"), 2), NotMinuscule);
    CHECK_THROWS_AS(cumulants::minuscule_poset(RootSystem::build("E8"), 1), NotMinuscule);
    CHECK_THROWS_AS(cumulants::minuscule_poset(RootSystem::build("F4"), 1), NotMinuscule);
    CHECK_THROWS_AS(cumulants::minuscule_poset(RootSystem::build("G2"), 1), NotMinuscule);
    CHECK_THROWS_AS(cumulants::minuscule_poset(RootSystem::build("H3"), 1), NotMinuscule);
    CHECK_THROWS_AS(cumulants::minuscule_poset(RootSystem::build("A3"), 0), NotMinuscule);
    CHECK_THROWS_AS(cumulants::minuscule_poset(RootSystem::build("A3"), 4), NotMinuscule);
}

TEST_CASE("rectangle posets") {
    for (std::int64_t a = 1; a <= 3; ++a) {
        for (std::int64_t b = 1; b <= 3; ++b) {
            const auto poset = cumulants::rectangle_poset(a, b);
            CHECK(poset.size == a * b);
            CHECK(poset.ambient_h == a + b);
            std::multiset<std::int64_t> expected;
            for (std::int64_t r = 1; r <= a; ++r)
                for (std::int64_t s = 1; s <= b; ++s) expected.insert(r + s - 1);
            CHECK(height_multiset(poset) == expected);
            // ideal count = C(a+b, a), the rectangle lattice-path count
            CHECK(cumulants::order_ideal_count(poset) == binomial(Integer(a + b), a));
        }
    }
    // the rectangle heights coincide with the hook lengths of the a x b shape
    const auto p23 = cumulants::rectangle_poset(2, 3);
    Partition shape{3, 3};
    auto hooks = hook_lengths(shape);
    CHECK(height_multiset(p23) == std::multiset<std::int64_t>(hooks.begin(), hooks.end()));
}

TEST_CASE("plane partition distributions") {
    const auto rect22 = cumulants::rectangle_poset(2, 2);
    CHECK(cumulants::expand(cumulants::pp_distribution(rect22, 0)) == QPolynomial::one());
    const QPolynomial pp1 = cumulants::expand(cumulants::pp_distribution(rect22, 1));
    CHECK(pp1 == QPolynomial({Rational(1), Rational(1), Rational(2), Rational(1), Rational(1)}));
    CHECK(pp1.mass() == Rational(Integer(cumulants::order_ideal_count(rect22))));
    CHECK(cumulants::brute_cumulant(cumulants::pp_distribution(rect22, 1), 1) == Rational(2));
    const auto stats = cumulants::closed_form_stats(rect22, 1);
    CHECK(stats.mean == Rational(2));

    // box variance abc(a+b+c)/12 via the rectangle poset
    for (std::int64_t a = 1; a <= 3; ++a) {
        for (std::int64_t b = 1; b <= 3; ++b) {
            const auto poset = cumulants::rectangle_poset(a, b);
            for (std::int64_t c = 0; c <= 3; ++c) {
                const auto box = cumulants::closed_form_stats(poset, c);
                CHECK(box.variance ==
                      Rational(Integer(a) * b * c * (a + b + c), Integer(12)));
                CHECK(box.mean == Rational(Integer(a) * b * c, Integer(2)));
            }
        }
    }
    CHECK_THROWS_AS(cumulants::pp_distribution(rect22, -1), Error);
}

TEST_CASE("plane partition polynomials match the order-preserving-map oracle") {
    for (std::int64_t a = 1; a <= 3; ++a) {
        for (std::int64_t b = 1; b <= 3; ++b) {
            const auto poset = cumulants::rectangle_poset(a, b);
            for (std::int64_t k = 0; k <= 3; ++k) {
                CHECK(cumulants::expand(cumulants::pp_distribution(poset, k)) ==
                      order_preserving_maps(poset, k));
            }
        }
    }
    const auto d4 = cumulants::minuscule_poset(RootSystem::build("D4"), 1);
    for (std::int64_t k = 0; k <= 2; ++k) {
        CHECK(cumulants::expand(cumulants::pp_distribution(d4, k)) ==
              order_preserving_maps(d4, k));
    }
}

TEST_CASE("pp and syt lemma equals brute across the grid") {
    for (std::int64_t a = 1; a <= 3; ++a) {
        for (std::int64_t b = 1; b <= 3; ++b) {
            const auto poset = cumulants::rectangle_poset(a, b);
            for (std::int64_t k = 0; k <= 3; ++k) {
                const auto d = cumulants::pp_distribution(poset, k);
                for (int r = 1; r <= 6; ++r)
                    CHECK(cumulants::brute_cumulant(d, r) == cumulants::lemma_cumulant(d, r));
                const auto stats = cumulants::closed_form_stats(poset, k);
                CHECK(stats.mean == cumulants::lemma_cumulant(d, 1));
                CHECK(stats.variance == cumulants::lemma_cumulant(d, 2));
            }
            const auto maj = cumulants::syt_maj_distribution(poset);
            for (int r = 1; r <= 6; ++r)
                CHECK(cumulants::brute_cumulant(maj, r) == cumulants::lemma_cumulant(maj, r));
        }
    }
    const auto d4 = cumulants::minuscule_poset(RootSystem::build("D4"), 1);
    for (std::int64_t k = 0; k <= 2; ++k) {
        const auto d = cumulants::pp_distribution(d4, k);
        for (int r = 1; r <= 6; ++r)
            CHECK(cumulants::brute_cumulant(d, r) == cumulants::lemma_cumulant(d, r));
    }
}

TEST_CASE("syt major index distributions") {
    const auto rect22 = cumulants::rectangle_poset(2, 2);
    const auto maj = cumulants::syt_maj_distribution(rect22);
    CHECK(cumulants::expand(maj) == QPolynomial({Rational(1), Rational(0), Rational(1)}));
    CHECK(cumulants::closed_form_stats(rect22).mean == Rational(1));
    CHECK(cumulants::lemma_cumulant(maj, 1) == Rational(1));

    const auto single = cumulants::rectangle_poset(1, 1);
    CHECK(cumulants::expand(cumulants::syt_maj_distribution(single)) == QPolynomial::one());
    CHECK(cumulants::closed_form_stats(single).mean == Rational(0));

    for (std::int64_t a = 1; a <= 3; ++a) {
        for (std::int64_t b = 1; b <= 3; ++b) {
            const auto poset = cumulants::rectangle_poset(a, b);
            const auto d = cumulants::syt_maj_distribution(poset);
            const auto stats = cumulants::closed_form_stats(poset);
            CHECK(stats.mean ==
                  Rational(Integer(a) * (a - 1) * b * (b - 1), Integer(4)));
            CHECK(stats.mean == cumulants::lemma_cumulant(d, 1));
            CHECK(stats.variance == cumulants::lemma_cumulant(d, 2));
            // mass = number of standard tableaux of the rectangle
            Partition shape(static_cast<std::size_t>(a), b);
            Integer hooks_product(1);
            for (std::int64_t hook : hook_lengths(shape)) hooks_product *= hook;
            CHECK(cumulants::expand(d).mass() ==
                  Rational(factorial(static_cast<unsigned long>(a * b)), hooks_product));
        }
    }
}

TEST_CASE("descending plane partitions") {
    CHECK(cumulants::expand(cumulants::dpp_distribution(1)) == QPolynomial::one());
    CHECK(cumulants::closed_form_stats(std::int64_t{1}).mean == Rational(0));
    CHECK(cumulants::closed_form_stats(std::int64_t{1}).variance == Rational(0));

    const auto d2 = cumulants::dpp_distribution(2);
    CHECK(cumulants::expand(d2) == QPolynomial({Rational(1), Rational(0), Rational(1)}));
    CHECK(cumulants::closed_form_stats(std::int64_t{2}).mean == Rational(1));
    CHECK(cumulants::closed_form_stats(std::int64_t{2}).variance == Rational(1));

    CHECK(cumulants::closed_form_stats(std::int64_t{3}).mean == Rational(4));

    // masses are the alternating sign matrix counts 1, 2, 7, 42, 429
    const std::vector<long> asm_counts{1, 2, 7, 42, 429};
    for (std::int64_t n = 1; n <= 5; ++n) {
        const auto d = cumulants::dpp_distribution(n);
        CHECK(cumulants::expand(d).mass() ==
              Rational(Integer(asm_counts[static_cast<std::size_t>(n - 1)])));
        for (int r = 1; r <= 6; ++r)
            CHECK(cumulants::brute_cumulant(d, r) == cumulants::lemma_cumulant(d, r));
        const auto stats = cumulants::closed_form_stats(n);
        CHECK(stats.mean == cumulants::lemma_cumulant(d, 1));
        CHECK(stats.variance == cumulants::lemma_cumulant(d, 2));
    }
    CHECK_THROWS_AS(cumulants::dpp_distribution(0), Error);
}

}  // TEST_SUITE
