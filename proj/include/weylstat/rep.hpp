#pragma once

#include <cstdint>
#include <vector>

#include "weylstat/parallel.hpp"
#include "weylstat/rational.hpp"
#include "weylstat/root_system.hpp"

namespace weylstat {

/// One dominant weight of an irreducible highest-weight representation.
struct WeightEntry {
    Weight mu;               // fundamental coordinates
    std::int64_t level = 0;  // height of lambda - mu in the root lattice
    Integer multiplicity;
    Integer orbit;  // |W mu|
};

/// The weight system of V(lambda), stored one Weyl orbit per entry.
struct WeightSystem {
    Weight lambda;
    Integer dim;
    std::vector<WeightEntry> dominant;  // sorted by (level, mu)

    /// Every weight with its multiplicity (orbits expanded), sorted by
    /// weight. Size equals the number of distinct weights, so only use this
    /// when dim is genuinely small.
    std::vector<std::pair<Weight, Integer>> expanded(const RootSystem& rs,
                                                     Exec exec = Exec::serial) const;
};

/// dim V(lambda) by the Weyl dimension formula (exact).
Integer weyl_dim(const RootSystem& rs, const Weight& lambda);

/// Weight multiplicities of V(lambda) by Freudenthal's recursion, computed
/// per dominant weight. Throws NotDominant for non-dominant lambda and
/// CapExceeded when dim V(lambda) > dim_cap (the cost scales with the number
/// of dominant weights, but the cap keeps the arithmetic in an
/// overflow-checked fast path and bounds downstream orbit expansions).
WeightSystem weight_multiplicities(const RootSystem& rs, const Weight& lambda,
                                   std::int64_t dim_cap);

/// <lambda, lambda + 2 rho>, the quadratic Casimir eigenvalue on V(lambda)
/// in the normalization where long roots have squared norm 2.
Rational casimir_eigenvalue(const RootSystem& rs, const Weight& lambda);

/// E[<mu, mu>^r] over a uniformly random weight of V(lambda), counted with
/// multiplicity. r = 1 is the expected squared norm.
Rational expected_power_norm(const RootSystem& rs, const WeightSystem& ws, unsigned r);
inline Rational expected_norm(const RootSystem& rs, const WeightSystem& ws) {
    return expected_power_norm(rs, ws, 1);
}

/// The closed form the expected squared norm is asserted to equal:
/// <lambda, lambda + 2 rho> / (h + 1).
Rational expected_norm_closed_form(const RootSystem& rs, const Weight& lambda);

}  // namespace weylstat
