#include "weylstat/rep.hpp"

#include <doctest.h>

#include <map>
#include <vector>

#include "oracles.hpp"
#include "weylstat/errors.hpp"

using namespace weylstat;

namespace {

constexpr std::int64_t kCap = 10'000'000;

// (mu, level, multiplicity, orbit) quadruples for compact frozen tables.
using Entry = std::tuple<Weight, std::int64_t, long, long>;

void check_ws(const RootSystem& rs, const Weight& lambda, long dim,
              const std::vector<Entry>& expected) {
    CAPTURE(rs.type().str());
    CAPTURE(weight_str(lambda));
    auto ws = weight_multiplicities(rs, lambda, kCap);
    CHECK(ws.dim == dim);
    REQUIRE(ws.dominant.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto& [mu, level, mult, orbit] = expected[i];
        CAPTURE(i);
        CHECK(ws.dominant[i].mu == mu);
        CHECK(ws.dominant[i].level == level);
        CHECK(ws.dominant[i].multiplicity == mult);
        CHECK(ws.dominant[i].orbit == orbit);
    }
}

}  // namespace

TEST_SUITE("rep") {

TEST_CASE("Weyl dimension formula on classical examples") {
    auto dim = [](const std::string& t, const Weight& w) {
        return weyl_dim(RootSystem::build(t), w);
    };
    CHECK(dim("A1", {0}) == 1);
    CHECK(dim("A1", {7}) == 8);
    CHECK(dim("A2", {1, 0}) == 3);
    CHECK(dim("A2", {1, 1}) == 8);
    CHECK(dim("A2", {2, 2}) == 27);
    CHECK(dim("A3", {0, 1, 0}) == 6);
    CHECK(dim("A3", {1, 0, 1}) == 15);
    CHECK(dim("B2", {1, 0}) == 5);
    CHECK(dim("B2", {0, 1}) == 4);
    CHECK(dim("B2", {0, 2}) == 10);
    CHECK(dim("B3", {0, 0, 1}) == 8);
    CHECK(dim("C3", {1, 0, 0}) == 6);
    CHECK(dim("C3", {0, 0, 1}) == 14);
    CHECK(dim("D4", {1, 0, 0, 0}) == 8);
    CHECK(dim("D4", {0, 0, 0, 1}) == 8);
    CHECK(dim("D4", {0, 1, 0, 0}) == 28);
    CHECK(dim("G2", {1, 0}) == 7);
    CHECK(dim("G2", {0, 1}) == 14);
    CHECK(dim("F4", {1, 0, 0, 0}) == 52);
    CHECK(dim("F4", {0, 0, 0, 1}) == 26);
    CHECK(dim("E6", {1, 0, 0, 0, 0, 0}) == 27);
    CHECK(dim("E7", {0, 0, 0, 0, 0, 0, 1}) == 56);
    CHECK(dim("E8", {0, 0, 0, 0, 0, 0, 0, 1}) == 248);
    CHECK_THROWS_AS(dim("A2", {-1, 0}), NotDominant);
}

TEST_CASE("Freudenthal multiplicities: frozen small representations") {
    check_ws(RootSystem::build("A1"), {4}, 5,
             {{{4}, 0, 1, 2}, {{2}, 1, 1, 2}, {{0}, 2, 1, 1}});
    check_ws(RootSystem::build("A2"), {1, 1}, 8,
             {{{1, 1}, 0, 1, 6}, {{0, 0}, 2, 2, 1}});
    check_ws(RootSystem::build("A2"), {2, 2}, 27,
             {{{2, 2}, 0, 1, 6},
              {{0, 3}, 1, 1, 3},
              {{3, 0}, 1, 1, 3},
              {{1, 1}, 2, 2, 6},
              {{0, 0}, 4, 3, 1}});
    check_ws(RootSystem::build("B2"), {0, 2}, 10,
             {{{0, 2}, 0, 1, 4}, {{1, 0}, 1, 1, 4}, {{0, 0}, 3, 2, 1}});
    check_ws(RootSystem::build("G2"), {0, 1}, 14,
             {{{0, 1}, 0, 1, 6}, {{1, 0}, 2, 1, 6}, {{0, 0}, 5, 2, 1}});
    check_ws(RootSystem::build("C3"), {0, 0, 1}, 14,
             {{{0, 0, 1}, 0, 1, 8}, {{1, 0, 0}, 2, 1, 6}});
    check_ws(RootSystem::build("B3"), {0, 0, 1}, 8, {{{0, 0, 1}, 0, 1, 8}});
    check_ws(RootSystem::build("D4"), {0, 1, 0, 0}, 28,
             {{{0, 1, 0, 0}, 0, 1, 24}, {{0, 0, 0, 0}, 5, 4, 1}});
    check_ws(RootSystem::build("F4"), {1, 0, 0, 0}, 52,
             {{{1, 0, 0, 0}, 0, 1, 24}, {{0, 0, 0, 1}, 3, 1, 24}, {{0, 0, 0, 0}, 11, 4, 1}});
}

TEST_CASE("adjoint representations have zero-weight multiplicity = rank") {
    const std::map<std::string, Weight> adjoints = {
        {"A2", {1, 1}},          {"A3", {1, 0, 1}},    {"B2", {0, 2}},
        {"B3", {0, 1, 0}},       {"C3", {2, 0, 0}},    {"D4", {0, 1, 0, 0}},
        {"G2", {0, 1}},          {"F4", {1, 0, 0, 0}}};
    for (const auto& [t, theta] : adjoints) {
        CAPTURE(t);
        auto rs = RootSystem::build(t);
        CHECK(rs.highest_root().fund == theta);
        auto ws = weight_multiplicities(rs, theta, kCap);
        const std::int64_t n_pos = static_cast<std::int64_t>(rs.positive_roots().size());
        CHECK(ws.dim == Integer(static_cast<long>(2 * n_pos + rs.rank())));
        CHECK(ws.dominant.back().mu == Weight(rs.rank(), 0));
        CHECK(ws.dominant.back().multiplicity == rs.rank());
    }
}

TEST_CASE("agreement with the character-formula oracle") {
    std::vector<std::pair<std::string, std::vector<Weight>>> cases = {
        {"A1", {{0}, {1}, {2}, {3}, {4}, {5}}},
        {"A2", {{1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 1}}},
        {"B2", {{1, 0}, {0, 1}, {1, 1}, {0, 2}, {2, 0}, {2, 2}}},
        {"G2", {{1, 0}, {0, 1}, {1, 1}, {2, 0}}},
        {"A3", {{1, 0, 1}, {1, 1, 1}}},
    };
    for (const auto& [t, lambdas] : cases) {
        auto rs = RootSystem::build(t);
        for (const auto& lambda : lambdas) {
            CAPTURE(t);
            CAPTURE(weight_str(lambda));
            auto brute = oracles::character_brute(rs, lambda);
            auto ws = weight_multiplicities(rs, lambda, kCap);
            auto expanded = ws.expanded(rs);
            REQUIRE(expanded.size() == brute.size());
            Integer total = 0;
            for (const auto& [w, m] : expanded) {
                auto it = brute.find(w);
                REQUIRE(it != brute.end());
                CHECK(it->second == m);
                total += m;
            }
            CHECK(total == ws.dim);
        }
    }
}

TEST_CASE("orbit expansion is identical in serial and parallel") {
    auto rs = RootSystem::build("B3");
    auto ws = weight_multiplicities(rs, {1, 1, 0}, kCap);
    CHECK(ws.expanded(rs, Exec::serial) == ws.expanded(rs, Exec::parallel));
}

TEST_CASE("dual representation has mirrored multiplicities") {
    auto rs = RootSystem::build("A2");
    for (const Weight& lambda : {Weight{2, 1}, Weight{3, 0}, Weight{2, 2}}) {
        Weight dual{lambda[1], lambda[0]};
        auto ws = weight_multiplicities(rs, lambda, kCap);
        auto wd = weight_multiplicities(rs, dual, kCap);
        REQUIRE(ws.dominant.size() == wd.dominant.size());
        std::map<Weight, Integer> mirrored;
        for (const auto& e : wd.dominant) mirrored.emplace(Weight{e.mu[1], e.mu[0]}, e.multiplicity);
        for (const auto& e : ws.dominant) {
            REQUIRE(mirrored.count(e.mu) == 1);
            CHECK(mirrored.at(e.mu) == e.multiplicity);
        }
    }
}

TEST_CASE("expected squared norm equals the closed form") {
    std::vector<std::pair<std::string, std::vector<Weight>>> grid = {
        {"A1", {{0}, {1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}}},
        {"A2", {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 1}, {3, 3}}},
        {"A3", {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 1}, {2, 0, 1}}},
        {"B2", {{1, 0}, {0, 1}, {1, 1}, {0, 2}, {2, 2}}},
        {"B3", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}},
        {"C3", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}}},
        {"D4", {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 1, 1}}},
        {"G2", {{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}}},
        {"F4", {{1, 0, 0, 0}, {0, 0, 0, 1}}},
    };
    for (const auto& [t, lambdas] : grid) {
        auto rs = RootSystem::build(t);
        for (const auto& lambda : lambdas) {
            CAPTURE(t);
            CAPTURE(weight_str(lambda));
            auto ws = weight_multiplicities(rs, lambda, kCap);
            CHECK(expected_norm(rs, ws) == expected_norm_closed_form(rs, lambda));
        }
    }
}

TEST_CASE("worked expected-norm values") {
    auto a2 = RootSystem::build("A2");
    auto ws = weight_multiplicities(a2, {1, 1}, kCap);
    CHECK(casimir_eigenvalue(a2, {1, 1}) == Rational(6));
    CHECK(expected_norm(a2, ws) == Rational(3, 2));

    // sl2: <m omega, m omega + 2 rho> = m(m+2)/2, so the expectation is
    // m(m+2)/6.
    auto a1 = RootSystem::build("A1");
    for (long m = 0; m <= 10; ++m) {
        CHECK(casimir_eigenvalue(a1, {m}) == Rational(m * (m + 2), 2));
        CHECK(expected_norm_closed_form(a1, {m}) == Rational(m * (m + 2), 6));
    }

    // lambda = 0 is the trivial representation.
    auto trivial = weight_multiplicities(a2, {0, 0}, kCap);
    CHECK(trivial.dim == 1);
    CHECK(expected_norm(a2, trivial) == Rational(0));
    CHECK(expected_power_norm(a2, ws, 0) == Rational(1));
}

TEST_CASE("second moment is polynomial in the highest weight") {
    // Interpolate E[<mu,mu>^2] on the degree-4 unisolvent triangle
    // {a + b <= 4} and verify the polynomial extends to held-out points.
    auto rs = RootSystem::build("A2");
    auto second_moment = [&](std::int64_t x, std::int64_t y) {
        auto ws = weight_multiplicities(rs, {x, y}, kCap);
        return expected_power_norm(rs, ws, 2);
    };
    std::vector<std::pair<int, int>> mono, pts;
    for (int d = 0; d <= 4; ++d)
        for (int a = 0; a <= d; ++a) mono.emplace_back(a, d - a);
    for (int x = 0; x <= 4; ++x)
        for (int y = 0; x + y <= 4; ++y) pts.emplace_back(x, y);
    const int N = static_cast<int>(mono.size());
    REQUIRE(static_cast<int>(pts.size()) == N);

    auto eval_mono = [&](int c, std::int64_t x, std::int64_t y) {
        Rational v(1);
        for (int k = 0; k < mono[c].first; ++k) v *= Rational(x);
        for (int k = 0; k < mono[c].second; ++k) v *= Rational(y);
        return v;
    };
    std::vector<std::vector<Rational>> m(N, std::vector<Rational>(N + 1, Rational(0)));
    for (int r = 0; r < N; ++r) {
        for (int c = 0; c < N; ++c) m[r][c] = eval_mono(c, pts[r].first, pts[r].second);
        m[r][N] = second_moment(pts[r].first, pts[r].second);
    }
    for (int c = 0; c < N; ++c) {
        int p = c;
        while (p < N && m[p][c].is_zero()) ++p;
        REQUIRE(p < N);
        std::swap(m[p], m[c]);
        const Rational d = m[c][c];
        for (int j = 0; j <= N; ++j) m[c][j] /= d;
        for (int r = 0; r < N; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            const Rational f = m[r][c];
            for (int j = 0; j <= N; ++j) m[r][j] -= f * m[c][j];
        }
    }
    for (auto [x, y] : {std::pair{5, 0}, {0, 5}, {5, 2}, {3, 4}, {6, 6}}) {
        Rational pred(0);
        for (int c = 0; c < N; ++c) pred += m[c][N] * eval_mono(c, x, y);
        CAPTURE(x);
        CAPTURE(y);
        CHECK(pred == second_moment(x, y));
    }
}

TEST_CASE("caps and argument validation") {
    auto rs = RootSystem::build("A2");
    CHECK_THROWS_AS(weight_multiplicities(rs, {4, 4}, 100), CapExceeded);
    CHECK_THROWS_AS(weight_multiplicities(rs, {-1, 0}, kCap), NotDominant);
    CHECK_THROWS_AS(weight_multiplicities(rs, {1, 0}, 0), Error);
    CHECK_THROWS_AS(weight_multiplicities(rs, {1, 0}, kCap + 1), Error);
    CHECK_NOTHROW(weight_multiplicities(rs, {4, 4}, 125));
}

TEST_CASE("a medium representation stays exact") {
    // B3 with a generic weight: checks the enumerator and the fast path on a
    // case with thousands of weights.
    auto rs = RootSystem::build("B3");
    Weight lambda{2, 1, 2};
    auto ws = weight_multiplicities(rs, lambda, kCap);
    CHECK(ws.dim == weyl_dim(rs, lambda));
    Integer total = 0;
    for (const auto& e : ws.dominant) total += e.multiplicity * e.orbit;
    CHECK(total == ws.dim);
    CHECK(expected_norm(rs, ws) == expected_norm_closed_form(rs, lambda));
}

}  // TEST_SUITE
