#include "weylstat/cores.hpp"

#include <algorithm>
#include <numeric>

#include "weylstat/errors.hpp"

namespace weylstat::cores {

namespace {

void require_positive(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) throw Error("core parameters must be positive");
}

void require_coprime(std::int64_t a, std::int64_t b) {
    require_positive(a, b);
    if (std::gcd(a, b) != 1)
        throw NotCoprime("gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") = " +
                         std::to_string(std::gcd(a, b)));
}

bool representable(std::int64_t p, std::int64_t a, std::int64_t b) {
    for (std::int64_t y = 0; y * b <= p; ++y)
        if ((p - y * b) % a == 0) return true;
    return false;
}

void validate_point(const AlcovePoint& x, std::int64_t a) {
    if (a < 2) throw Error("alcove statistics require a >= 2");
    if (static_cast<std::int64_t>(x.coords.size()) != a)
        throw DimensionMismatch("point has " + std::to_string(x.coords.size()) +
                                " coordinates, expected " + std::to_string(a));
    Rational sum(0);
    for (const Rational& c : x.coords) sum += c;
    if (!sum.is_zero()) throw Error("point coordinates must sum to zero");
}

/// rho_i = (a + 1 - 2i)/2 in 1-based Euclidean coordinates.
Rational rho_coordinate(std::int64_t a, std::size_t i) {
    return Rational(a - 1 - 2 * static_cast<std::int64_t>(i), 2);
}

/// x - b rho / a, the recentering shared by all three alcove statistics.
std::vector<Rational> shifted_point(const AlcovePoint& x, std::int64_t a, std::int64_t b) {
    std::vector<Rational> y(x.coords.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = x.coords[i] - Rational(Integer(b)) * rho_coordinate(a, i) / Rational(Integer(a));
    return y;
}

}  // namespace

bool is_core(const Partition& p, std::int64_t a) {
    if (a < 1) throw Error("core parameter must be positive");
    for (std::int64_t hook : hook_lengths(p))
        if (hook == a) return false;
    return true;
}

std::vector<CorePartition> simultaneous_cores(std::int64_t a, std::int64_t b, std::int64_t cap,
                                              Exec exec) {
    require_coprime(a, b);
    if (std::max(a, b) > cap)
        throw CapExceeded("core parameters (" + std::to_string(a) + ", " + std::to_string(b) +
                          ") exceed the cap " + std::to_string(cap));

    // Positive integers not representable as ax + by ("gaps"); every core's
    // beta-set is a down-closed subset of these under subtracting a or b.
    std::vector<std::int64_t> gaps;
    const std::int64_t frobenius = a * b - a - b;
    for (std::int64_t p = 1; p <= frobenius; ++p)
        if (!representable(p, a, b)) gaps.push_back(p);
    std::vector<std::int64_t> index(static_cast<std::size_t>(std::max<std::int64_t>(frobenius, 0)) + 1,
                                    -1);
    for (std::size_t i = 0; i < gaps.size(); ++i)
        index[static_cast<std::size_t>(gaps[i])] = static_cast<std::int64_t>(i);

    const std::size_t total = gaps.size();
    const std::size_t split = std::min<std::size_t>(total, 10);

    auto can_include = [&](const std::vector<char>& state, std::size_t i) {
        const std::int64_t p = gaps[i];
        // p - a and p - b are themselves gaps whenever positive
        if (p - a > 0 && !state[static_cast<std::size_t>(index[static_cast<std::size_t>(p - a)])])
            return false;
        if (p - b > 0 && !state[static_cast<std::size_t>(index[static_cast<std::size_t>(p - b)])])
            return false;
        return true;
    };

    // Valid assignments of the first `split` gaps; each extends independently.
    std::vector<std::vector<char>> frontier;
    {
        std::vector<char> state(total, 0);
        auto gen = [&](auto&& self, std::size_t i) -> void {
            if (i == split) {
                frontier.push_back(state);
                return;
            }
            state[i] = 0;
            self(self, i + 1);
            if (can_include(state, i)) {
                state[i] = 1;
                self(self, i + 1);
                state[i] = 0;
            }
        };
        gen(gen, 0);
    }

    std::vector<std::vector<std::vector<std::int64_t>>> collected(frontier.size());
    parallel_for(frontier.size(), exec, [&](std::size_t f) {
        std::vector<char> state = frontier[f];
        auto dfs = [&](auto&& self, std::size_t i) -> void {
            if (i == total) {
                std::vector<std::int64_t> beta;
                for (std::size_t k = total; k-- > 0;)
                    if (state[k]) beta.push_back(gaps[k]);
                collected[f].push_back(std::move(beta));
                return;
            }
            state[i] = 0;
            self(self, i + 1);
            if (can_include(state, i)) {
                state[i] = 1;
                self(self, i + 1);
                state[i] = 0;
            }
        };
        dfs(dfs, split);
    });

    std::vector<CorePartition> out;
    for (auto& bucket : collected) {
        for (auto& beta : bucket) {
            CorePartition core;
            core.partition = from_first_column_hooks(beta);
            core.beta_set = std::move(beta);
            core.size = partition_size(core.partition);
            if (!is_core(core.partition, a) || !is_core(core.partition, b))
                throw Error("internal: enumerated partition is not a simultaneous core");
            out.push_back(std::move(core));
        }
    }
    if (Integer(static_cast<long>(out.size())) != anderson_count(a, b))
        throw Error("internal: core count disagrees with the Anderson formula");
    std::sort(out.begin(), out.end(), [](const CorePartition& lhs, const CorePartition& rhs) {
        if (lhs.size != rhs.size) return lhs.size < rhs.size;
        return rhs.partition < lhs.partition;
    });
    return out;
}

Integer anderson_count(std::int64_t a, std::int64_t b) {
    require_coprime(a, b);
    Integer numerator = binomial(Integer(a + b), b);
    if (numerator % Integer(a + b) != 0) throw Error("internal: Anderson count not integral");
    return numerator / Integer(a + b);
}

Integer max_core_size(std::int64_t a, std::int64_t b) {
    require_coprime(a, b);
    Integer numerator = Integer(a * a - 1) * Integer(b * b - 1);
    if (numerator % 24 != 0) throw Error("internal: maximum core size not integral");
    return numerator / 24;
}

Rational expected_size(std::int64_t a, std::int64_t b, std::int64_t cap) {
    const auto cores = simultaneous_cores(a, b, cap);
    Integer sum(0);
    for (const CorePartition& core : cores) sum += core.size;
    return Rational(sum, Integer(static_cast<long>(cores.size())));
}

Rational expected_size_closed_form(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 0) throw Error("invalid core parameters");
    return Rational(Integer(a - 1) * Integer(b - 1) * Integer(a + b + 1), Integer(24));
}

AlcovePoint euclidean_point(const Weight& fund, std::int64_t a) {
    if (a < 2) throw Error("Euclidean model requires a >= 2");
    if (static_cast<std::int64_t>(fund.size()) != a - 1)
        throw DimensionMismatch("expected " + std::to_string(a - 1) +
                                " fundamental coordinates, got " + std::to_string(fund.size()));
    Integer weighted(0);  // sum_j j * c_j
    for (std::size_t j = 0; j < fund.size(); ++j)
        weighted += Integer(static_cast<std::int64_t>(j + 1)) * Integer(fund[j]);
    AlcovePoint x;
    x.coords.assign(static_cast<std::size_t>(a), Rational(0));
    Integer suffix(0);
    for (std::int64_t i = a - 1; i >= 0; --i) {
        if (i < a - 1) suffix += Integer(fund[static_cast<std::size_t>(i)]);
        x.coords[static_cast<std::size_t>(i)] = Rational(suffix) - Rational(weighted, Integer(a));
    }
    return x;
}

std::vector<AlcovePoint> alcove_points(std::int64_t a, std::int64_t b) {
    if (a < 2) throw Error("alcove enumeration requires a >= 2");
    if (b < 0) throw Error("dilation factor must be nonnegative");
    std::vector<AlcovePoint> out;
    Weight fund(static_cast<std::size_t>(a - 1), 0);
    auto dfs = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
        if (i == fund.size()) {
            out.push_back(euclidean_point(fund, a));
            return;
        }
        for (std::int64_t v = 0; v <= remaining; ++v) {
            fund[i] = v;
            self(self, i + 1, remaining - v);
        }
        fund[i] = 0;
    };
    dfs(dfs, 0, b);
    return out;
}

Rational size_b_statistic(const AlcovePoint& x, std::int64_t a, std::int64_t b) {
    validate_point(x, a);
    const auto y = shifted_point(x, a, b);
    Rational norm(0);
    for (const Rational& yi : y) norm += yi * yi;
    // (h/2) ||rho/h||^2 = (a^2 - 1)/24 with h = a
    return Rational(Integer(a), Integer(2)) * norm - Rational(Integer(a * a - 1), Integer(24));
}

Rational cx_statistic(const AlcovePoint& x, std::int64_t a, std::int64_t b) {
    validate_point(x, a);
    const auto y = shifted_point(x, a, b);
    Rational sum(0);
    for (std::size_t i = 0; i < y.size(); ++i) sum += y[(i + 1) % y.size()] * y[i];
    return sum;
}

Rational cx_mean(std::int64_t a, std::int64_t b) {
    const auto points = alcove_points(a, b);
    Rational sum(0);
    for (const AlcovePoint& x : points) sum += cx_statistic(x, a, b);
    return sum / Rational(Integer(static_cast<long>(points.size())));
}

Rational cx_mean_closed_form(std::int64_t a, std::int64_t b) {
    return Rational(Integer(a - 5) * Integer(a - 1) * Integer(b) * Integer(a + b),
                    Integer(12) * Integer(a) * Integer(a + 1));
}

Weight phi(const AlcovePoint& x, std::int64_t a, std::int64_t b) {
    validate_point(x, a);
    if (b < 0) throw Error("dilation factor must be nonnegative");
    for (std::size_t i = 0; i + 1 < x.coords.size(); ++i) {
        const Rational d = x.coords[i] - x.coords[i + 1];
        if (!d.is_integer()) throw NotInAlcove("not a coweight-lattice point");
        if (d.sign() < 0) throw NotInAlcove("negative pairing with a simple root");
    }
    if (x.coords.front() - x.coords.back() > Rational(Integer(b)))
        throw NotInAlcove("pairing with the highest root exceeds the dilation");

    const auto y = shifted_point(x, a, b);
    std::vector<Rational> image(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) image[i] = y[i] - y[(i + 1) % y.size()];
    Weight fund;
    for (std::size_t i = 0; i + 1 < image.size(); ++i) {
        const Rational d = image[i] - image[i + 1];
        if (!d.is_integer()) throw Error("internal: image weight not integral");
        const Integer value = d.to_integer();
        if (!value.fits_slong_p()) throw Error("internal: image coordinate out of range");
        fund.push_back(value.get_si());
    }
    return fund;
}

}  // namespace weylstat::cores
