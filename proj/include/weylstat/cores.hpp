#pragma once

#include <cstdint>
#include <vector>

#include "weylstat/parallel.hpp"
#include "weylstat/partition.hpp"
#include "weylstat/rational.hpp"
#include "weylstat/root_system.hpp"

namespace weylstat::cores {

/// A partition that is simultaneously an a-core and a b-core, together with
/// its beta-set (the first-column hook lengths, strictly decreasing).
struct CorePartition {
    Partition partition;
    std::vector<std::int64_t> beta_set;
    std::int64_t size = 0;
};

/// True iff no cell of p has hook length equal to a (equivalently, no hook
/// length divisible by a).
bool is_core(const Partition& p, std::int64_t a);

inline constexpr std::int64_t kDefaultCoreCap = 12;

/// All simultaneous (a,b)-cores, sorted by (size, partition descending-lex).
/// Enumerated through beta-sets: cores correspond to down-closed subsets of
/// the poset of integers not representable as ax + by. The Anderson count and
/// the two hook predicates are verified internally on every call.
/// Throws NotCoprime when gcd(a,b) != 1 and CapExceeded when max(a,b) > cap.
std::vector<CorePartition> simultaneous_cores(std::int64_t a, std::int64_t b,
                                              std::int64_t cap = kDefaultCoreCap,
                                              Exec exec = Exec::serial);

/// C(a+b, b) / (a+b), the number of simultaneous (a,b)-cores.
Integer anderson_count(std::int64_t a, std::int64_t b);

/// (a^2 - 1)(b^2 - 1) / 24, the largest size of an (a,b)-core.
Integer max_core_size(std::int64_t a, std::int64_t b);

/// Mean of |lambda| over all (a,b)-cores, computed by enumeration.
Rational expected_size(std::int64_t a, std::int64_t b, std::int64_t cap = kDefaultCoreCap);

/// (a-1)(b-1)(a+b+1)/24, the closed form for the same mean.
Rational expected_size_closed_form(std::int64_t a, std::int64_t b);

/// A point of the A_{a-1} coweight lattice (or any rational point) in the
/// sum-zero Euclidean model: a coordinates summing to zero.
struct AlcovePoint {
    std::vector<Rational> coords;
};

/// Euclidean sum-zero coordinates of the weight with the given fundamental
/// coordinates (length a-1).
AlcovePoint euclidean_point(const Weight& fund, std::int64_t a);

/// All coweight-lattice points of the b-fold dilated fundamental alcove:
/// <x, alpha_i> >= 0 for all simple roots and <x, theta> <= b. There are
/// C(a+b-1, b) of them.
std::vector<AlcovePoint> alcove_points(std::int64_t a, std::int64_t b);

/// (h/2) ||x - b rho/h||^2 - (h/2) ||rho/h||^2 with h = a, on the sum-zero
/// Euclidean coordinates. Defined for any rational point.
Rational size_b_statistic(const AlcovePoint& x, std::int64_t a, std::int64_t b);

/// <c x_b, x_b> where x_b = x - b rho/h and c is the long cycle acting by
/// coordinate rotation.
Rational cx_statistic(const AlcovePoint& x, std::int64_t a, std::int64_t b);

/// Mean of cx_statistic over alcove_points(a, b); equals
/// (a-5)(a-1) b (a+b) / (12 a (a+1)).
Rational cx_mean(std::int64_t a, std::int64_t b);
Rational cx_mean_closed_form(std::int64_t a, std::int64_t b);

/// The bijection (1 - c)(x - b rho/h) from alcove points onto the weights of
/// the b-th symmetric power representation, returned in fundamental
/// coordinates of A_{a-1}. Throws NotInAlcove when x is not a coweight point
/// of the closed dilated alcove.
Weight phi(const AlcovePoint& x, std::int64_t a, std::int64_t b);

}  // namespace weylstat::cores
