#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weylstat/cartan.hpp"
#include "weylstat/parallel.hpp"
#include "weylstat/rational.hpp"

namespace weylstat::verifier {

/// One exact comparison performed by a sweep. `passed` is lhs == rhs at
/// rational equality; params carries every grid coordinate of the check so
/// that (check_id, params) is a unique, sortable key.
struct CheckResult {
    std::string check_id;
    std::map<std::string, std::string> params;
    Rational lhs;
    Rational rhs;
    bool passed = false;
    std::int64_t elapsed_ms = 0;
};

struct Options {
    Exec exec = Exec::parallel;
    /// Record wall-clock elapsed_ms per check. Off by default so that reports
    /// are byte-identical across runs; the CLI never enables it.
    bool timings = false;
    /// Corrupt the lhs of the first check after collection (negative-path
    /// hook used to prove the failure plumbing reaches the exit code).
    bool inject_fault = false;
};

/// Expected-norm sweep: for every dominant lambda with fundamental
/// coordinates <= max_coord and weyl_dim <= dim_cap, compare the enumerated
/// E[<mu,mu>] against <lambda, lambda+2rho>/(h+1). Types A2 and C2 also emit
/// the worked-example checks (dimension, degenerate multiplicities, values in
/// a rescaled normalization), and A1 emits the rescaled m(m+2) series.
std::vector<CheckResult> sweep_main_theorem(const std::vector<CartanType>& types,
                                            std::int64_t max_coord, std::int64_t dim_cap,
                                            const Options& opts = {});

/// Core-partition sweep over coprime pairs 2 <= a < b <= max_ab: Anderson
/// count, mean size, maximum size, alcove-point statistics, the three-term
/// identity chain, and bijectivity of phi.
std::vector<CheckResult> sweep_cores(std::int64_t max_ab, const Options& opts = {});

/// Type A sweep: tableaux expectation vs the two closed forms for all shapes
/// with at most max_n rows and |shape| <= max_size, entries in {1..n} for
/// n <= max_n, plus deterministic evaluations of the rational-function
/// identity behind the Pieri form.
std::vector<CheckResult> sweep_typea(int max_n, std::int64_t max_size,
                                     const Options& opts = {});

/// Cumulant sweep over the desk-scale catalog: lemma vs brute-force for
/// r <= max_order (<= 8) and closed-form mean/variance (and kappa_4 where
/// available) vs the lemma, for inversions, rational Catalan, plane
/// partitions (including the order-preserving-map ground truth), SYT major
/// index, and descending plane partitions.
std::vector<CheckResult> sweep_cumulants(int max_order, const Options& opts = {});

/// Degree/exponent numerology for every cataloged type: the two power-sum
/// identities, and for crystallographic types of rank <= 8 the root-count,
/// adjoint-dimension and root-norm-sum identities.
std::vector<CheckResult> sweep_numerology(const Options& opts = {});

/// The default type list for the main sweep (used by `verify --suite main`).
std::vector<CartanType> default_main_types();

/// Run a named suite: "main", "cores", "typea", "cumulants", or "all" (the
/// four suites plus numerology). Throws ParseError for unknown names.
std::vector<CheckResult> run_suite(const std::string& suite, const Options& opts = {});

std::size_t count_failures(const std::vector<CheckResult>& checks);

/// One JSON object per line, keys in alphabetical order, rationals as "p/q"
/// strings; byte-deterministic for a fixed configuration.
std::string to_jsonl(const std::vector<CheckResult>& checks);

/// check_id,params,lhs,rhs,passed,elapsed_ms with the params column quoted.
std::string to_csv(const std::vector<CheckResult>& checks);

/// Human-readable summary table; approx appends decimal renderings (display
/// only, the comparison stays exact).
std::string to_table(const std::vector<CheckResult>& checks, bool approx = false);

}  // namespace weylstat::verifier
