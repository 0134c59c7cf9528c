#include "weylstat/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "weylstat/errors.hpp"

namespace weylstat {

// Classical recurrence for the B_1 = -1/2 convention:
//   sum_{j=0}^{m} C(m+1, j) B_j = 0  for m >= 1,  B_0 = 1.
// The public accessor flips only index 1 to +1/2.
Rational bernoulli(int r) {
    if (r < 0) throw Error("bernoulli index must be nonnegative");
    if (r == 1) return Rational(1, 2);

    static std::mutex lock;
    static std::vector<Rational> table{Rational(1)};  // B_0

    std::lock_guard<std::mutex> guard(lock);
    while (static_cast<int>(table.size()) <= r) {
        const std::size_t m = table.size();
        Rational s(0);
        for (std::size_t j = 0; j < m; ++j)
            s += Rational(binomial(Integer(static_cast<long>(m + 1)), static_cast<long>(j))) *
                 table[j];
        table.push_back(-s / Rational(static_cast<long long>(m + 1)));
    }
    return table[static_cast<std::size_t>(r)];
}

}  // namespace weylstat
