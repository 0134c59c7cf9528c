#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace weylstat {

/// Weakly decreasing nonnegative parts. Trailing zeros are permitted and
/// meaningful to callers that treat the length as a number of slots.
using Partition = std::vector<std::int64_t>;

bool is_partition(const Partition& p);

/// Parse "3,1,1" (weakly decreasing, nonnegative). Throws ParseError.
Partition parse_partition(std::string_view s);
std::string partition_str(const Partition& p);

std::int64_t partition_size(const Partition& p);

/// Conjugate (transpose) partition, trailing zeros dropped.
Partition conjugate(const Partition& p);

/// All hook lengths, row by row.
std::vector<std::int64_t> hook_lengths(const Partition& p);

/// First-column hook lengths: strictly decreasing, one per nonzero row.
std::vector<std::int64_t> first_column_hooks(const Partition& p);

/// Inverse of first_column_hooks (input in any order, values distinct).
Partition from_first_column_hooks(std::vector<std::int64_t> hooks);

}  // namespace weylstat
