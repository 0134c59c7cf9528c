#include "weylstat/typea.hpp"

#include <algorithm>

#include "weylstat/errors.hpp"

namespace weylstat::typea {

namespace {

std::vector<std::int64_t> nonzero_parts(const Partition& lambda) {
    std::vector<std::int64_t> shape;
    for (std::int64_t part : lambda)
        if (part > 0) shape.push_back(part);
    return shape;
}

void require_shape(const Partition& lambda, int n) {
    if (n <= 0) throw Error("alphabet size must be positive");
    if (!is_partition(lambda)) throw Error("not a partition: " + partition_str(lambda));
    if (static_cast<int>(nonzero_parts(lambda).size()) > n)
        throw TooManyRows(partition_str(lambda) + " has more than " + std::to_string(n) +
                          " rows; no tableau with entries <= " + std::to_string(n) + " exists");
}

/// The first i parts of lambda padded with zeros to exactly n slots.
std::vector<std::int64_t> padded(const Partition& lambda, int n) {
    std::vector<std::int64_t> lam(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < lambda.size() && i < lam.size(); ++i) lam[i] = lambda[i];
    return lam;
}

/// Fill the cells of `shape` from (row, col) onward in row-major order:
/// weakly increasing along rows, strictly increasing down columns.
void fill_cells(const std::vector<std::int64_t>& shape, int n,
                std::vector<std::vector<int>>& cells, std::size_t row, std::int64_t col,
                ContentVector& content, std::map<ContentVector, Integer>& out) {
    if (row == shape.size()) {
        out[content] += 1;
        return;
    }
    if (col == shape[row]) {
        fill_cells(shape, n, cells, row + 1, 0, content, out);
        return;
    }
    int lo = 1;
    if (col > 0) lo = cells[row][static_cast<std::size_t>(col - 1)];
    if (row > 0) lo = std::max(lo, cells[row - 1][static_cast<std::size_t>(col)] + 1);
    for (int v = lo; v <= n; ++v) {
        cells[row][static_cast<std::size_t>(col)] = v;
        ++content[static_cast<std::size_t>(v - 1)];
        fill_cells(shape, n, cells, row, col + 1, content, out);
        --content[static_cast<std::size_t>(v - 1)];
    }
}

}  // namespace

std::map<ContentVector, Integer> enumerate_ssyt(const Partition& lambda, int n, Exec exec) {
    require_shape(lambda, n);
    const auto shape = nonzero_parts(lambda);
    if (shape.empty()) return {{ContentVector(static_cast<std::size_t>(n), 0), Integer(1)}};

    // Fan out over the weakly increasing choices for the first row; each
    // branch fills the remaining rows independently.
    std::vector<std::vector<int>> first_rows;
    {
        std::vector<int> row(static_cast<std::size_t>(shape[0]));
        auto gen = [&](auto&& self, std::int64_t col, int lo) -> void {
            if (col == shape[0]) {
                first_rows.push_back(row);
                return;
            }
            for (int v = lo; v <= n; ++v) {
                row[static_cast<std::size_t>(col)] = v;
                self(self, col + 1, v);
            }
        };
        gen(gen, 0, 1);
    }

    std::vector<std::map<ContentVector, Integer>> parts(first_rows.size());
    parallel_for(first_rows.size(), exec, [&](std::size_t idx) {
        std::vector<std::vector<int>> cells;
        for (std::int64_t len : shape) cells.emplace_back(static_cast<std::size_t>(len), 0);
        ContentVector content(static_cast<std::size_t>(n), 0);
        for (std::size_t c = 0; c < first_rows[idx].size(); ++c) {
            cells[0][c] = first_rows[idx][c];
            ++content[static_cast<std::size_t>(first_rows[idx][c] - 1)];
        }
        fill_cells(shape, n, cells, 1, 0, content, parts[idx]);
    });

    std::map<ContentVector, Integer> out;
    for (const auto& part : parts)
        for (const auto& [content, count] : part) out[content] += count;
    return out;
}

Integer schur_eval_ones(const Partition& lambda, int n) {
    require_shape(lambda, n);
    const auto lam = padded(lambda, n);
    Rational value(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            value *= Rational(Integer(lam[static_cast<std::size_t>(i)] -
                                      lam[static_cast<std::size_t>(j)] + j - i),
                              Integer(j - i));
    return value.to_integer();
}

Integer homog_eval_ones(std::int64_t i, int n) {
    if (n <= 0) throw Error("alphabet size must be positive");
    return binomial(Integer(n) + Integer(i) - 1, i);
}

Rational expected_norm_tableaux(const Partition& lambda, int n, Exec exec) {
    const auto kostka = enumerate_ssyt(lambda, n, exec);
    Integer total(0);
    Integer weighted(0);  // sum over all tableaux of sum_i c_i^2
    for (const auto& [content, count] : kostka) {
        Integer norm(0);
        for (std::int64_t c : content) norm += Integer(c) * Integer(c);
        total += count;
        weighted += count * norm;
    }
    const Integer m(partition_size(lambda));
    return Rational(weighted, total) - Rational(m * m, Integer(n));
}

Rational theorem_rhs(const Partition& lambda, int n) {
    require_shape(lambda, n);
    const auto lam = padded(lambda, n);
    const Rational mean_lambda(Integer(partition_size(lambda)), Integer(n));
    // mean of lambda + 2 rho, rho = (n-1, ..., 1, 0)
    const Rational mean_shifted = mean_lambda + Rational(n - 1);
    Rational sum(0);
    for (int i = 0; i < n; ++i) {
        const Rational a = Rational(Integer(lam[static_cast<std::size_t>(i)])) - mean_lambda;
        const Rational b =
            Rational(Integer(lam[static_cast<std::size_t>(i)] + 2 * (n - 1 - i))) - mean_shifted;
        sum += a * b;
    }
    return sum / Rational(n + 1);
}

Rational pieri_rhs_closed_form(const Partition& lambda, int n) {
    require_shape(lambda, n);
    const auto lam = padded(lambda, n);
    std::vector<std::int64_t> x(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = lam[static_cast<std::size_t>(j)] - (j + 1);
    Rational sum(0);
    for (int j = 0; j < n; ++j) {
        const std::int64_t xj = x[static_cast<std::size_t>(j)];
        if (xj < 0) continue;  // C(n + x_j, x_j) vanishes
        Integer denom(1);
        for (int i = 0; i < n; ++i)
            if (i != j) denom *= Integer(xj - x[static_cast<std::size_t>(i)]);
        sum += Rational(binomial(Integer(n) + xj, xj) * Integer(n + 2 * xj + 1), denom);
    }
    const Integer m(partition_size(lambda));
    return Rational(factorial(static_cast<unsigned long>(n)), Integer(n + 1)) * sum -
           Rational(m * m, Integer(n));
}

std::pair<Rational, Rational> polynomial_identity_check(const std::vector<Rational>& x) {
    const int n = static_cast<int>(x.size());
    if (n < 1) throw Error("need at least one coordinate");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (x[static_cast<std::size_t>(i)] == x[static_cast<std::size_t>(j)])
                throw RepeatedCoordinate("coordinate " + std::to_string(i + 1) + " repeats at " +
                                         std::to_string(j + 1));

    Rational s1(0);
    Rational s2(0);
    for (const Rational& xi : x) {
        s1 += xi;
        s2 += xi * xi;
    }
    const Integer nn(n);
    // 2 sum_{i<=j} x_i x_j = (sum x)^2 + sum x^2
    const Rational lhs = s1 * s1 + s2 + Rational(Integer((nn + 1) * (nn + 1))) * s1 +
                         Rational(Integer(nn * (nn + 1) * (3 * nn * nn + 5 * nn + 4)), Integer(12));

    Rational rhs(0);
    for (int j = 0; j < n; ++j) {
        const Rational& xj = x[static_cast<std::size_t>(j)];
        Rational denom(1);
        for (int i = 0; i < n; ++i)
            if (i != j) denom *= xj - x[static_cast<std::size_t>(i)];
        Rational p = Rational(2) * xj + Rational(n + 1);
        for (int i = 1; i <= n; ++i) p *= xj + Rational(i);
        rhs += p / denom;
    }
    return {lhs, rhs};
}

}  // namespace weylstat::typea
