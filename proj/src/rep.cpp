#include "weylstat/rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "weylstat/errors.hpp"

namespace weylstat {

namespace {

constexpr std::int64_t kFastPathCap = 10'000'000;

/// L * Gram as an integer matrix, L = lcm of the Gram denominators. All
/// pairings below carry the common factor L, which cancels in Freudenthal's
/// quotient.
std::vector<std::vector<std::int64_t>> scaled_gram(const RootSystem& rs, std::int64_t& L_out) {
    const auto& g = rs.gram();
    Integer L = 1;
    for (const auto& row : g)
        for (const auto& x : row) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.den().get_mpz_t());
    if (!L.fits_slong_p()) throw Error("internal: Gram denominator lcm out of range");
    L_out = L.get_si();
    std::vector<std::vector<std::int64_t>> gi(g.size(), std::vector<std::int64_t>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            Rational s = g[i][j] * Rational(L_out);
            gi[i][j] = static_cast<std::int64_t>(s.to_integer().get_si());
        }
    return gi;
}

std::int64_t pair_scaled(const std::vector<std::vector<std::int64_t>>& gi, const Weight& x,
                         const Weight& y) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        std::int64_t row = 0;
        for (std::size_t j = 0; j < y.size(); ++j) row += gi[i][j] * y[j];
        s += x[i] * row;
    }
    return s;
}

/// All dominant mu with lambda - mu in the nonnegative root lattice, found by
/// a DFS over the fundamental coordinates of mu. Every entry of A^{-1} is
/// positive for an irreducible finite type, so the residual root coordinates
/// of lambda - mu decrease monotonically in each mu coordinate and the cone
/// condition prunes exactly.
std::vector<std::pair<Weight, std::int64_t>> dominant_weights_below(const RootSystem& rs,
                                                                    const Weight& lambda) {
    const int n = rs.rank();
    const auto& a = rs.cartan_matrix();
    std::vector<std::vector<Rational>> ainv_col(n, std::vector<Rational>(n));
    {
        // Solve A x = e_j column by column (Gaussian elimination, exact).
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
            m[i][n + i] = Rational(1);
        }
        for (int c = 0; c < n; ++c) {
            int p = c;
            while (m[p][c].is_zero()) ++p;
            std::swap(m[p], m[c]);
            const Rational d = m[c][c];
            for (int j = 0; j < 2 * n; ++j) m[c][j] /= d;
            for (int r = 0; r < n; ++r) {
                if (r == c || m[r][c].is_zero()) continue;
                const Rational f = m[r][c];
                for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) ainv_col[j][i] = m[i][n + j];  // column j
    }

    std::vector<Rational> residual(n);  // root coordinates of lambda - mu so far
    for (int i = 0; i < n; ++i) {
        residual[i] = Rational(0);
        for (int j = 0; j < n; ++j)
            if (lambda[j] != 0) residual[i] += ainv_col[j][i] * Rational(lambda[j]);
    }

    std::vector<std::pair<Weight, std::int64_t>> out;
    Weight mu(n, 0);
    auto dfs = [&](auto&& self, int j) -> void {
        if (j == n) {
            std::int64_t level = 0;
            for (const auto& r : residual) {
                if (!r.is_integer()) return;
                level += r.to_integer().get_si();
            }
            out.emplace_back(mu, level);
            return;
        }
        for (std::int64_t b = 0;; ++b) {
            mu[j] = b;
            if (b > 0) {
                bool ok = true;
                for (int i = 0; i < n; ++i) {
                    residual[i] -= ainv_col[j][i];
                    ok = ok && residual[i] >= Rational(0);
                }
                if (!ok) {
                    for (int i = 0; i < n; ++i) residual[i] += ainv_col[j][i] * Rational(b);
                    break;
                }
            }
            self(self, j + 1);
        }
        mu[j] = 0;
    };
    dfs(dfs, 0);
    return out;
}

}  // namespace

Integer weyl_dim(const RootSystem& rs, const Weight& lambda) {
    if (!rs.is_dominant(lambda)) throw NotDominant("weyl_dim requires a dominant weight");
    Weight lr(lambda);
    for (auto& c : lr) ++c;  // lambda + rho
    Integer num = 1, den = 1;
    const auto& roots = rs.positive_roots();
    for (std::size_t k = 0; k < roots.size(); ++k) {
        num *= Integer(static_cast<long>(rs.coroot_pairing(k, lr)));
        den *= Integer(static_cast<long>(rs.coroot_pairing(k, rs.rho())));
    }
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw Error("internal: Weyl dimension quotient is not integral");
    return q;
}

WeightSystem weight_multiplicities(const RootSystem& rs, const Weight& lambda,
                                   std::int64_t dim_cap) {
    if (!rs.is_dominant(lambda))
        throw NotDominant("weight_multiplicities requires a dominant weight, got " +
                          weight_str(lambda));
    if (dim_cap < 1 || dim_cap > kFastPathCap)
        throw Error("dim cap must be between 1 and " + std::to_string(kFastPathCap));

    WeightSystem ws;
    ws.lambda = lambda;
    ws.dim = weyl_dim(rs, lambda);
    if (ws.dim > Integer(static_cast<long>(dim_cap)))
        throw CapExceeded("dim V(" + weight_str(lambda) + ") = " + to_string(ws.dim) +
                          " exceeds the cap " + std::to_string(dim_cap));

    auto below = dominant_weights_below(rs, lambda);
    std::sort(below.begin(), below.end(), [](const auto& x, const auto& y) {
        return std::tie(x.second, x.first) < std::tie(y.second, y.first);
    });

    std::map<Weight, std::size_t> index;
    for (std::size_t i = 0; i < below.size(); ++i) index.emplace(below[i].first, i);

    std::int64_t L = 0;
    const auto gi = scaled_gram(rs, L);
    const auto& roots = rs.positive_roots();
    const int n = rs.rank();
    const Weight& rho = rs.rho();

    auto casimir_scaled = [&](const Weight& x) {  // L * <x, x + 2 rho>
        Weight shifted(x);
        for (int i = 0; i < n; ++i) shifted[i] += 2 * rho[i];
        return pair_scaled(gi, x, shifted);
    };
    const std::int64_t c_lambda = casimir_scaled(lambda);

    std::vector<std::int64_t> mult(below.size(), 0);
    mult[0] = 1;  // the highest weight itself (level 0 is lambda alone)
    for (std::size_t i = 1; i < below.size(); ++i) {
        const Weight& mu = below[i].first;
        __int128 total = 0;
        for (std::size_t k = 0; k < roots.size(); ++k) {
            const Weight& alpha = roots[k].fund;
            const std::int64_t p_mu_a = pair_scaled(gi, mu, alpha);
            const std::int64_t p_a_a = pair_scaled(gi, alpha, alpha);
            Weight x(mu);
            for (std::int64_t step = 1;; ++step) {
                for (int j = 0; j < n; ++j) x[j] += alpha[j];
                auto it = index.find(rs.dominant_representative(x));
                if (it == index.end()) break;  // the alpha-string has left V(lambda)
                total += static_cast<__int128>(2) * mult[it->second] *
                         (p_mu_a + step * p_a_a);
            }
        }
        const std::int64_t denom = c_lambda - casimir_scaled(mu);
        if (denom <= 0 || total % denom != 0)
            throw Error("internal: Freudenthal quotient failed at " + weight_str(mu));
        const __int128 q = total / denom;
        if (q <= 0 || q > kFastPathCap)
            throw Error("internal: Freudenthal multiplicity out of range");
        mult[i] = static_cast<std::int64_t>(q);
    }

    Integer dim_check = 0;
    ws.dominant.reserve(below.size());
    for (std::size_t i = 0; i < below.size(); ++i) {
        WeightEntry e;
        e.mu = below[i].first;
        e.level = below[i].second;
        e.multiplicity = Integer(static_cast<long>(mult[i]));
        e.orbit = rs.orbit_size(e.mu);
        dim_check += e.multiplicity * e.orbit;
        ws.dominant.push_back(std::move(e));
    }
    if (dim_check != ws.dim)
        throw Error("internal: multiplicities sum to " + to_string(dim_check) +
                    ", expected dim " + to_string(ws.dim));
    return ws;
}

std::vector<std::pair<Weight, Integer>> WeightSystem::expanded(const RootSystem& rs,
                                                               Exec exec) const {
    std::vector<std::vector<std::pair<Weight, Integer>>> parts(dominant.size());
    parallel_for(dominant.size(), exec, [&](std::size_t i) {
        const auto& e = dominant[i];
        for (auto& w : rs.weyl_orbit(e.mu)) parts[i].emplace_back(std::move(w), e.multiplicity);
    });
    std::vector<std::pair<Weight, Integer>> all;
    for (auto& p : parts)
        for (auto& x : p) all.push_back(std::move(x));
    std::sort(all.begin(), all.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return all;
}

Rational casimir_eigenvalue(const RootSystem& rs, const Weight& lambda) {
    Weight shifted(lambda);
    for (auto& c : shifted) c += 2;  // lambda + 2 rho
    return rs.inner(lambda, shifted);
}

Rational expected_power_norm(const RootSystem& rs, const WeightSystem& ws, unsigned r) {
    Rational acc(0);
    for (const auto& e : ws.dominant) {
        const Rational norm = rs.inner(e.mu, e.mu);
        acc += Rational(Integer(e.multiplicity * e.orbit)) * pow(norm, r);
    }
    return acc / Rational(ws.dim);
}

Rational expected_norm_closed_form(const RootSystem& rs, const Weight& lambda) {
    return casimir_eigenvalue(rs, lambda) / Rational(rs.coxeter_number() + 1);
}

}  // namespace weylstat
