#pragma once

#include "weylstat/rational.hpp"

namespace weylstat {

/// Bernoulli number B_r in the convention with B_1 = +1/2 (all other values
/// agree with the classical B_1 = -1/2 table; odd indices >= 3 are zero).
/// That sign is forced by the distribution work here: the mean of the uniform
/// distribution on {0..n-1} is (n-1)/2 = (B_1/1)(n - 1).
/// Thread-safe: the memo table is grown under a lock.
Rational bernoulli(int r);

}  // namespace weylstat
