#include "weylstat/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "weylstat/errors.hpp"
#include "weylstat/root_system.hpp"

namespace weylstat {

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

Partition parse_partition(std::string_view s) {
    Weight w = parse_weight(s);
    Partition p(w.begin(), w.end());
    if (!is_partition(p)) throw ParseError("not weakly decreasing: " + std::string(s));
    return p;
}

std::string partition_str(const Partition& p) {
    Weight w(p.begin(), p.end());
    return weight_str(w);
}

std::int64_t partition_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), std::int64_t{0});
}

Partition conjugate(const Partition& p) {
    Partition q;
    for (std::int64_t j = 0; p.empty() ? false : j < p[0]; ++j) {
        std::int64_t count = 0;
        for (std::int64_t part : p) count += (part > j) ? 1 : 0;
        q.push_back(count);
    }
    return q;
}

std::vector<std::int64_t> hook_lengths(const Partition& p) {
    Partition conj = conjugate(p);
    std::vector<std::int64_t> hooks;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::int64_t j = 0; j < p[i]; ++j) {
            // arm + leg + 1
            hooks.push_back((p[i] - 1 - j) + (conj[static_cast<std::size_t>(j)] - 1 - static_cast<std::int64_t>(i)) + 1);
        }
    }
    return hooks;
}

std::vector<std::int64_t> first_column_hooks(const Partition& p) {
    std::vector<std::int64_t> hooks;
    std::int64_t rows = 0;
    for (std::int64_t part : p) rows += (part > 0) ? 1 : 0;
    for (std::int64_t i = 0; i < rows; ++i) hooks.push_back(p[static_cast<std::size_t>(i)] + rows - 1 - i);
    return hooks;
}

Partition from_first_column_hooks(std::vector<std::int64_t> hooks) {
    std::sort(hooks.begin(), hooks.end(), std::greater<>());
    for (std::size_t i = 0; i + 1 < hooks.size(); ++i) {
        if (hooks[i] == hooks[i + 1]) throw Error("first-column hooks must be distinct");
    }
    Partition p;
    const std::int64_t rows = static_cast<std::int64_t>(hooks.size());
    for (std::int64_t i = 0; i < rows; ++i) {
        std::int64_t part = hooks[static_cast<std::size_t>(i)] - (rows - 1 - i);
        if (part < 0) throw Error("invalid first-column hook set");
        p.push_back(part);
    }
    if (!is_partition(p)) throw Error("invalid first-column hook set");
    return p;
}

}  // namespace weylstat
