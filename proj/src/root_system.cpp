#include "weylstat/root_system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "weylstat/errors.hpp"

namespace weylstat {

std::string weight_str(const Weight& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    return os.str();
}

Weight parse_weight(std::string_view s) {
    Weight w;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t j = i;
        bool neg = false;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) neg = (s[j++] == '-');
        std::int64_t v = 0;
        std::size_t digits = 0;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') {
            v = v * 10 + (s[j++] - '0');
            if (++digits > 9) throw ParseError("weight coordinate out of range");
        }
        if (digits == 0) throw ParseError("bad weight '" + std::string(s) + "'");
        w.push_back(neg ? -v : v);
        if (j == s.size()) break;
        if (s[j] != ',') throw ParseError("bad weight '" + std::string(s) + "'");
        i = j + 1;
    }
    return w;
}

Weight parse_weight(std::string_view s, int rank) {
    Weight w = parse_weight(s);
    if (static_cast<int>(w.size()) != rank)
        throw DimensionMismatch("weight '" + std::string(s) + "' has " +
                                std::to_string(w.size()) + " coordinates, expected " +
                                std::to_string(rank));
    return w;
}

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

Matrix cartan_matrix_for(const CartanType& t) {
    const int n = t.rank;
    Matrix a(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto edge = [&](int i, int j, std::int64_t aij = -1, std::int64_t aji = -1) {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    switch (t.family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case 'B':  // short node last
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
            edge(n - 2, n - 1, -1, -2);
            break;
        case 'C':  // long node last
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
            edge(n - 2, n - 1, -2, -1);
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
            edge(n - 3, n - 1);
            break;
        case 'E':
            edge(0, 2);
            edge(1, 3);
            for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case 'F':
            edge(0, 1);
            edge(1, 2, -1, -2);
            edge(2, 3);
            break;
        case 'G':  // short node first
            edge(0, 1, -3, -1);
            break;
        default:
            throw UnsupportedType("no root data for " + t.str());
    }
    return a;
}

/// All positive roots of a (possibly reducible) generalized Cartan matrix of
/// finite type, as simple-root coordinate vectors, by closing the simple
/// roots under simple reflections while staying in the positive cone.
std::vector<std::vector<std::int64_t>> positive_root_closure(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::vector<std::int64_t>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> m(n, 0);
        m[i] = 1;
        seen.insert(m);
        queue.push_back(std::move(m));
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto m = queue[head];
        for (int i = 0; i < n; ++i) {
            std::int64_t pairing = 0;  // <alpha, coroot of alpha_i>
            for (int j = 0; j < n; ++j) pairing += a[i][j] * m[j];
            auto r = m;
            r[i] -= pairing;
            bool nonneg = true;
            for (auto c : r) nonneg = nonneg && c >= 0;
            if (!nonneg) continue;
            if (seen.insert(r).second) queue.push_back(std::move(r));
        }
    }
    std::sort(queue.begin(), queue.end(), [](const auto& x, const auto& y) {
        std::int64_t hx = 0, hy = 0;
        for (auto c : x) hx += c;
        for (auto c : y) hy += c;
        if (hx != hy) return hx < hy;
        return x < y;
    });
    return queue;
}

/// Exponents of an *irreducible* system from the height profile: the
/// conjugate of the partition (#roots of height k)_k.
std::vector<std::int64_t> exponents_from_heights(
    const std::vector<std::vector<std::int64_t>>& roots, int n) {
    std::vector<std::int64_t> count;  // count[k-1] = #roots of height k
    for (const auto& m : roots) {
        std::int64_t h = 0;
        for (auto c : m) h += c;
        if (static_cast<std::size_t>(h) > count.size()) count.resize(h, 0);
        ++count[h - 1];
    }
    std::vector<std::int64_t> e;
    for (int j = 1; j <= n; ++j) {
        std::int64_t c = 0;
        for (auto b : count)
            if (b >= j) ++c;
        e.push_back(c);
    }
    std::sort(e.begin(), e.end());
    return e;
}

/// |W_J| for the sub-diagram on `nodes`: split into connected components and
/// multiply each component's product of degrees (each component is
/// irreducible, so the height duality applies to it).
Integer subsystem_weyl_order(const Matrix& a, const std::vector<int>& nodes) {
    Integer order = 1;
    std::vector<bool> used(nodes.size(), false);
    for (std::size_t s = 0; s < nodes.size(); ++s) {
        if (used[s]) continue;
        std::vector<int> comp{static_cast<int>(s)};
        used[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (std::size_t t = 0; t < nodes.size(); ++t)
                if (!used[t] && a[nodes[comp[head]]][nodes[t]] != 0) {
                    used[t] = true;
                    comp.push_back(static_cast<int>(t));
                }
        Matrix sub(comp.size(), std::vector<std::int64_t>(comp.size()));
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = 0; j < comp.size(); ++j)
                sub[i][j] = a[nodes[comp[i]]][nodes[comp[j]]];
        auto roots = positive_root_closure(sub);
        for (auto e : exponents_from_heights(roots, static_cast<int>(comp.size())))
            order *= Integer(static_cast<long>(e + 1));
    }
    return order;
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    auto a = m;
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw Error("singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rational d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<std::int64_t> degrees_table_for(const CartanType& t) {
    switch (t.family) {
        case 'H':
            if (t.rank == 2) return {2, 5};
            if (t.rank == 3) return {2, 6, 10};
            return {2, 12, 20, 30};
        case 'I':
            return {2, t.m};
        default:
            throw UnsupportedType("no degree table for " + t.str());
    }
}

}  // namespace

RootSystem RootSystem::build(std::string_view type_string) {
    return build(CartanType::parse(type_string));
}

RootSystem RootSystem::build(const CartanType& type) {
    RootSystem rs;
    rs.type_ = type;
    rs.n_ = type.rank;

    if (!type.crystallographic()) {
        rs.degrees_ = degrees_table_for(type);
        rs.exponents_.reserve(rs.degrees_.size());
        for (auto d : rs.degrees_) rs.exponents_.push_back(d - 1);
        rs.h_ = rs.degrees_.back();
        rs.gamma_ = gamma_table(type);
        rs.weyl_order_ = 1;
        for (auto d : rs.degrees_) rs.weyl_order_ *= Integer(static_cast<long>(d));
        return rs;
    }

    rs.cartan_ = cartan_matrix_for(type);
    const int n = rs.n_;

    // Symmetrizers d_i = <alpha_i, alpha_i>/2, normalized so long roots get 1:
    // propagate d_j = d_i a_ij / a_ji along edges, then divide by the max.
    std::vector<Rational> d(n, Rational(0));
    d[0] = Rational(1);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (j == i || rs.cartan_[i][j] == 0 || !d[j].is_zero()) continue;
            d[j] = d[i] * Rational(rs.cartan_[i][j]) / Rational(rs.cartan_[j][i]);
            stack.push_back(j);
        }
    }
    Rational dmax = d[0];
    for (const auto& x : d) dmax = std::max(dmax, x);
    for (auto& x : d) x /= dmax;

    // Positive roots with all their coordinate systems.
    auto simple = positive_root_closure(rs.cartan_);
    rs.roots_.reserve(simple.size());
    for (auto& m : simple) {
        PositiveRoot r;
        r.simple_coords = m;
        r.fund.assign(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.fund[i] += rs.cartan_[i][j] * m[j];
        r.height = 0;
        for (auto c : m) r.height += c;
        Rational norm(0);  // m^T (diag(d) A) m
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m[i] != 0 && rs.cartan_[i][j] != 0)
                    norm += Rational(m[i] * m[j] * rs.cartan_[i][j]) * d[i];
        r.norm2 = norm;
        r.long_root = (norm == Rational(2));
        const Rational half_norm = norm / Rational(2);
        r.coroot_coords.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            Rational c = Rational(m[i]) * d[i] / half_norm;
            r.coroot_coords[i] = static_cast<std::int64_t>(c.to_integer().get_si());
        }
        rs.roots_.push_back(std::move(r));
    }

    // Gram matrix of the fundamental weights: G = diag(d) * A^{-1}.
    std::vector<std::vector<Rational>> aq(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) aq[i][j] = Rational(rs.cartan_[i][j]);
    rs.cartan_inv_ = invert(aq);
    rs.gram_.assign(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs.gram_[i][j] = d[i] * rs.cartan_inv_[i][j];

    rs.rho_.assign(n, 1);

    rs.exponents_ = exponents_from_heights(simple, n);
    rs.degrees_.reserve(rs.exponents_.size());
    for (auto e : rs.exponents_) rs.degrees_.push_back(e + 1);
    rs.h_ = rs.degrees_.back();

    // Highest root / highest short root (each the unique dominant one, found
    // as the unique height maximum in its length class).
    std::int64_t best = -1, best_short = -1;
    for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
        const auto& r = rs.roots_[k];
        if (r.height > best) {
            best = r.height;
            rs.highest_idx_ = k;
        }
        if (!r.long_root && r.height > best_short) {
            best_short = r.height;
            rs.highest_short_idx_ = k;
        }
    }
    if (best_short < 0) rs.highest_short_idx_ = rs.highest_idx_;  // simply laced
    if (rs.h_ != rs.roots_[rs.highest_idx_].height + 1)
        throw Error("internal: Coxeter number mismatch for " + type.str());

    // g = 1 + height of the highest root in the dual system; g_dual likewise
    // with the roles of long and short exchanged.
    std::int64_t g = 1, g_dual = 1;
    for (auto c : rs.roots_[rs.highest_idx_].coroot_coords) g += c;
    g_dual += rs.roots_[rs.highest_short_idx_].height;
    rs.dual_coxeter_ = g;
    const Rational ratio = Rational(2) / rs.roots_[rs.highest_short_idx_].norm2;
    rs.gamma_ = static_cast<std::int64_t>(
        (ratio * Rational(g) * Rational(g_dual)).to_integer().get_si());

    // Weyl group orders of every parabolic (node-subset) subgroup.
    rs.parabolic_order_.assign(std::size_t(1) << n, Integer(1));
    for (std::size_t mask = 1; mask < rs.parabolic_order_.size(); ++mask) {
        std::vector<int> nodes;
        for (int i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) nodes.push_back(i);
        rs.parabolic_order_[mask] = subsystem_weyl_order(rs.cartan_, nodes);
    }
    rs.weyl_order_ = rs.parabolic_order_.back();
    Integer from_degrees = 1;
    for (auto deg : rs.degrees_) from_degrees *= Integer(static_cast<long>(deg));
    if (rs.weyl_order_ != from_degrees)
        throw Error("internal: |W| disagrees with the degree product for " + type.str());
    return rs;
}

void RootSystem::require_roots() const {
    if (!has_roots())
        throw UnsupportedType(type_.str() + " carries degree/exponent data only; no root data");
}

void RootSystem::check_rank(const Weight& w) const {
    if (static_cast<int>(w.size()) != n_)
        throw DimensionMismatch("weight has " + std::to_string(w.size()) +
                                " coordinates, expected " + std::to_string(n_));
}

const std::vector<std::vector<std::int64_t>>& RootSystem::cartan_matrix() const {
    require_roots();
    return cartan_;
}

const std::vector<PositiveRoot>& RootSystem::positive_roots() const {
    require_roots();
    return roots_;
}

const std::vector<std::vector<Rational>>& RootSystem::gram() const {
    require_roots();
    return gram_;
}

const Weight& RootSystem::rho() const {
    require_roots();
    return rho_;
}

const PositiveRoot& RootSystem::highest_root() const {
    require_roots();
    return roots_[highest_idx_];
}

const PositiveRoot& RootSystem::highest_short_root() const {
    require_roots();
    return roots_[highest_short_idx_];
}

std::int64_t RootSystem::dual_coxeter() const {
    require_roots();
    return dual_coxeter_;
}

std::pair<bool, bool> RootSystem::suter_checks() const {
    Rational e2(0), e3(0);
    for (auto e : exponents_) {
        e2 += Rational(e * e);
        e3 += Rational(e * e * e);
    }
    const Rational n(static_cast<long long>(n_)), h(h_), gam(gamma_);
    const bool quad = e2 == n * (h * h + gam - h) / Rational(6);
    const bool cube = e3 == n * h * (gam - h) / Rational(4);
    return {quad, cube};
}

Rational RootSystem::inner(const Weight& x, const Weight& y) const {
    require_roots();
    check_rank(x);
    check_rank(y);
    Rational s(0);
    for (int i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n_; ++j)
            if (y[j] != 0) s += Rational(x[i] * y[j]) * gram_[i][j];
    }
    return s;
}

bool RootSystem::is_dominant(const Weight& w) const {
    check_rank(w);
    for (auto c : w)
        if (c < 0) return false;
    return true;
}

Weight RootSystem::reflect(Weight w, int i) const {
    require_roots();
    check_rank(w);
    const std::int64_t c = w[i];
    if (c != 0)
        for (int j = 0; j < n_; ++j) w[j] -= c * cartan_[j][i];
    return w;
}

Weight RootSystem::dominant_representative(Weight w) const {
    require_roots();
    check_rank(w);
    const std::size_t limit = roots_.size() + 1;
    for (std::size_t step = 0;; ++step) {
        int neg = -1;
        for (int i = 0; i < n_; ++i)
            if (w[i] < 0) {
                neg = i;
                break;
            }
        if (neg < 0) return w;
        if (step >= limit) throw Error("internal: dominant_representative did not converge");
        w = reflect(std::move(w), neg);
    }
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& w) const {
    require_roots();
    check_rank(w);
    std::set<Weight> orbit;
    std::vector<Weight> queue{dominant_representative(w)};
    orbit.insert(queue[0]);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Weight cur = queue[head];
        for (int i = 0; i < n_; ++i) {
            Weight nxt = reflect(cur, i);
            if (orbit.insert(nxt).second) queue.push_back(std::move(nxt));
        }
    }
    return std::vector<Weight>(orbit.begin(), orbit.end());
}

Integer RootSystem::orbit_size(const Weight& dominant_weight) const {
    require_roots();
    if (!is_dominant(dominant_weight)) throw NotDominant("orbit_size requires a dominant weight");
    std::size_t mask = 0;
    for (int i = 0; i < n_; ++i)
        if (dominant_weight[i] == 0) mask |= std::size_t(1) << i;
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), weyl_order_.get_mpz_t(),
                parabolic_order_[mask].get_mpz_t());
    if (r != 0) throw Error("internal: |W_J| does not divide |W|");
    return q;
}

std::int64_t RootSystem::coroot_pairing(std::size_t k, const Weight& mu) const {
    require_roots();
    check_rank(mu);
    std::int64_t s = 0;
    const auto& cc = roots_[k].coroot_coords;
    for (int i = 0; i < n_; ++i) s += cc[i] * mu[i];
    return s;
}

std::optional<std::vector<std::int64_t>> RootSystem::root_coordinates(const Weight& w) const {
    require_roots();
    check_rank(w);
    std::vector<std::int64_t> m(n_, 0);
    for (int i = 0; i < n_; ++i) {
        Rational c(0);
        for (int j = 0; j < n_; ++j)
            if (w[j] != 0) c += cartan_inv_[i][j] * Rational(w[j]);
        if (!c.is_integer()) return std::nullopt;
        m[i] = static_cast<std::int64_t>(c.to_integer().get_si());
    }
    return m;
}

}  // namespace weylstat
