#include "weylstat/cumulants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "weylstat/bernoulli.hpp"
#include "weylstat/errors.hpp"
#include "weylstat/moments.hpp"
#include "weylstat/rep.hpp"

namespace weylstat::cumulants {

namespace {

Integer ipow(std::int64_t base, int r) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), Integer(base).get_mpz_t(), static_cast<unsigned long>(r));
    return out;
}

void require_positive_entries(const QProduct& d) {
    for (std::int64_t a : d.numerators)
        if (a < 1) throw Error("q-integer parameters must be positive");
    for (std::int64_t b : d.denominators)
        if (b < 1) throw Error("q-integer parameters must be positive");
}

bool minuscule_node(const CartanType& t, int node) {
    switch (t.family) {
        case 'A': return true;
        case 'B': return node == t.rank;
        case 'C': return node == 1;
        case 'D': return node == 1 || node == t.rank - 1 || node == t.rank;
        case 'E':
            if (t.rank == 6) return node == 1 || node == 6;
            if (t.rank == 7) return node == 7;
            return false;
        default: return false;
    }
}

}  // namespace

Rational lemma_cumulant(const QProduct& d, int r) {
    if (r < 1) throw Error("cumulant order must be positive");
    require_positive_entries(d);
    Integer sum(0);
    for (std::int64_t a : d.numerators) sum += ipow(a, r) - 1;
    for (std::int64_t b : d.denominators) sum -= ipow(b, r) - 1;
    return bernoulli(r) / Rational(r) * Rational(sum);
}

QPolynomial expand(const QProduct& d) {
    require_positive_entries(d);
    QPolynomial numerator = QPolynomial::one();
    for (std::int64_t a : d.numerators) numerator = numerator * QPolynomial::q_integer(a);
    QPolynomial denominator = QPolynomial::one();
    for (std::int64_t b : d.denominators) denominator = denominator * QPolynomial::q_integer(b);
    QPolynomial quotient = poly_divide_exact(numerator, denominator);
    if (!quotient.nonnegative())
        throw NegativeCoefficient("expanded distribution has a negative coefficient");
    return quotient;
}

Rational brute_cumulant(const QProduct& d, int r) { return brute_cumulants(d, r).back(); }

std::vector<Rational> brute_cumulants(const QProduct& d, int max_r) {
    if (max_r < 1) throw Error("cumulant order must be positive");
    return distribution_cumulants(expand(d), max_r);
}

QProduct inversions_distribution(const RootSystem& rs) {
    QProduct d;
    d.numerators = rs.degrees();
    return d;
}

QProduct rational_catalan_distribution(const RootSystem& rs, std::int64_t p) {
    if (p < 1) throw Error("rational Catalan parameter must be positive");
    const std::int64_t h = rs.coxeter_number();
    if (std::gcd(p, h) != 1)
        throw NotCoprime("p = " + std::to_string(p) + " shares a factor with the Coxeter number " +
                         std::to_string(h));
    QProduct d;
    for (std::int64_t e : rs.exponents()) d.numerators.push_back(p + (p * e) % h);
    d.denominators = rs.degrees();
    return d;
}

MinusculePoset minuscule_poset(const RootSystem& rs, int node) {
    const CartanType& t = rs.type();
    if (node < 1 || node > rs.rank())
        throw NotMinuscule("node " + std::to_string(node) + " is out of range for " + t.str());
    if (!t.crystallographic() || !minuscule_node(t, node))
        throw NotMinuscule("fundamental weight " + std::to_string(node) + " of " + t.str() +
                           " is not minuscule");

    // The poset lives on coroots: beta with <omega_node, beta^> = 1, i.e. the
    // positive coroots whose coordinate at the node is exactly one, ordered by
    // componentwise comparison of coroot coordinates and graded by coroot height.
    const auto& roots = rs.positive_roots();
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        const std::int64_t coeff = roots[k].coroot_coords[static_cast<std::size_t>(node - 1)];
        if (coeff > 1) throw Error("internal: minuscule node coefficient exceeds one");
        if (coeff == 1) members.push_back(k);
    }
    auto coroot_height = [&roots](std::size_t k) {
        const auto& coords = roots[k].coroot_coords;
        return std::accumulate(coords.begin(), coords.end(), std::int64_t{0});
    };
    std::stable_sort(members.begin(), members.end(),
                     [&](std::size_t x, std::size_t y) { return coroot_height(x) < coroot_height(y); });

    MinusculePoset poset;
    poset.size = static_cast<std::int64_t>(members.size());
    if (poset.size > 64) throw CapExceeded("poset too large for the ideal-count certificate");
    poset.ambient_h = rs.coxeter_number();
    poset.leq.assign(members.size(), 0);
    poset.geq.assign(members.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
        poset.heights.push_back(coroot_height(members[i]));
        for (std::size_t j = 0; j < members.size(); ++j) {
            const auto& lo = roots[members[j]].coroot_coords;
            const auto& hi = roots[members[i]].coroot_coords;
            bool below = true;
            for (std::size_t c = 0; c < lo.size() && below; ++c) below = lo[c] <= hi[c];
            if (below) {
                poset.leq[i] |= 1ULL << j;
                poset.geq[j] |= 1ULL << i;
            }
        }
    }

    Integer height_sum(0);
    std::int64_t max_height = 0;
    for (std::int64_t ht : poset.heights) {
        height_sum += ht;
        max_height = std::max(max_height, ht);
    }
    if (height_sum * 2 != Integer(poset.ambient_h) * poset.size)
        throw Error("internal: poset heights break the h|P|/2 symmetry");
    if (max_height > poset.ambient_h - 1)
        throw Error("internal: poset height exceeds the Coxeter bound");

    Weight omega(static_cast<std::size_t>(rs.rank()), 0);
    omega[static_cast<std::size_t>(node - 1)] = 1;
    if (order_ideal_count(poset) != weyl_dim(rs, omega))
        throw Error("internal: ideal count disagrees with the minuscule dimension");
    return poset;
}

MinusculePoset rectangle_poset(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) throw Error("rectangle sides must be positive");
    const auto rs = RootSystem::build(CartanType{'A', static_cast<int>(a + b - 1), 0});
    return minuscule_poset(rs, static_cast<int>(a));
}

Integer order_ideal_count(const MinusculePoset& poset) {
    if (poset.size < 0 || poset.size > 64) throw CapExceeded("poset too large for ideal counting");
    if (poset.size == 0) return Integer(1);
    std::unordered_map<std::uint64_t, Integer> memo;
    auto count = [&](auto&& self, std::uint64_t mask) -> Integer {
        if (mask == 0) return Integer(1);
        const auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        const int x = std::countr_zero(mask);
        // ideals avoiding x live in mask \ up(x); ideals containing x are
        // ideals of mask \ down(x) with down(x) adjoined
        Integer result = self(self, mask & ~poset.geq[static_cast<std::size_t>(x)]) +
                         self(self, mask & ~poset.leq[static_cast<std::size_t>(x)]);
        memo.emplace(mask, result);
        return result;
    };
    const std::uint64_t full =
        poset.size == 64 ? ~0ULL : ((1ULL << static_cast<unsigned>(poset.size)) - 1);
    return count(count, full);
}

QProduct pp_distribution(const MinusculePoset& poset, std::int64_t k) {
    if (k < 0) throw Error("plane-partition height must be nonnegative");
    QProduct d;
    for (std::int64_t ht : poset.heights) {
        d.numerators.push_back(k + ht);
        d.denominators.push_back(ht);
    }
    return d;
}

QProduct syt_maj_distribution(const MinusculePoset& poset) {
    QProduct d;
    for (std::int64_t i = 1; i <= poset.size; ++i) d.numerators.push_back(i);
    d.denominators = poset.heights;
    return d;
}

QProduct dpp_distribution(std::int64_t n) {
    if (n < 1) throw Error("descending plane partitions need n >= 1");
    QProduct d;
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 1; j <= 3 * i + 1; ++j) d.numerators.push_back(j);
        for (std::int64_t j = 1; j <= n + i; ++j) d.denominators.push_back(j);
    }
    return d;
}

ClosedFormStats closed_form_stats(const RootSystem& rs) {
    const std::int64_t n = rs.rank();
    const std::int64_t h = rs.coxeter_number();
    Integer exp_sum(0);
    for (std::int64_t e : rs.exponents()) exp_sum += e;
    ClosedFormStats stats;
    stats.mean = Rational(exp_sum, Integer(2));  // |Phi+|/2 = (sum e_i)/2
    stats.variance = Rational(Integer(n) * (Integer(rs.gamma()) + 5 * h + Integer(h) * h),
                              Integer(72));
    return stats;
}

ClosedFormStats closed_form_stats(const RootSystem& rs, std::int64_t p) {
    if (p < 1) throw Error("rational Catalan parameter must be positive");
    const std::int64_t h = rs.coxeter_number();
    if (std::gcd(p, h) != 1)
        throw NotCoprime("p = " + std::to_string(p) + " shares a factor with the Coxeter number " +
                         std::to_string(h));
    const Integer n(rs.rank());
    ClosedFormStats stats;
    stats.mean = Rational(Integer(n * (p - 1)), Integer(2));
    stats.variance = Rational(Integer(n * (p - 1) * (p + h + 1)), Integer(12));
    stats.kappa4 = Rational(Integer(-n * (p - 1) * (h + p + 1) *
                                    (Integer(p) * p + Integer(p) * h + rs.gamma() + 1)),
                            Integer(120));
    return stats;
}

ClosedFormStats closed_form_stats(const MinusculePoset& poset, std::int64_t k) {
    if (k < 0) throw Error("plane-partition height must be nonnegative");
    ClosedFormStats stats;
    stats.mean = Rational(Integer(k) * poset.size, Integer(2));
    stats.variance =
        Rational(Integer(k) * Integer(k + poset.ambient_h) * poset.size, Integer(12));
    return stats;
}

ClosedFormStats closed_form_stats(const MinusculePoset& poset) {
    ClosedFormStats stats;
    stats.mean =
        Rational(Integer(poset.size) * Integer(poset.size + 1 - poset.ambient_h), Integer(4));
    // variance straight from the lemma at r = 2: (sum i^2 - sum ht^2)/12
    Integer diff(0);
    for (std::int64_t i = 1; i <= poset.size; ++i) diff += Integer(i) * i;
    for (std::int64_t ht : poset.heights) diff -= Integer(ht) * ht;
    stats.variance = Rational(diff, Integer(12));
    return stats;
}

ClosedFormStats closed_form_stats(std::int64_t n) {
    if (n < 1) throw Error("descending plane partitions need n >= 1");
    ClosedFormStats stats;
    stats.mean = Rational(Integer(n) * (Integer(n) * n - 1), Integer(6));
    stats.variance = Rational(Integer(n) * n * (Integer(n) * n - 1), Integer(12));
    return stats;
}

}  // namespace weylstat::cumulants
