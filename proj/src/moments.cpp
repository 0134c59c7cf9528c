#include "weylstat/moments.hpp"

#include "weylstat/errors.hpp"

namespace weylstat {

std::vector<Rational> moments_to_cumulants(const std::vector<Rational>& moments) {
    if (moments.empty() || moments[0] != Rational(1))
        throw Error("moments_to_cumulants: moments[0] must be 1");
    const std::size_t R = moments.size() - 1;
    std::vector<Rational> kappa(R + 1, Rational(0));  // kappa[0] unused
    for (std::size_t n = 1; n <= R; ++n) {
        Rational s = moments[n];
        for (std::size_t k = 1; k < n; ++k)
            s -= Rational(binomial(Integer(static_cast<long>(n - 1)), static_cast<long>(k - 1))) *
                 kappa[k] * moments[n - k];
        kappa[n] = s;
    }
    return std::vector<Rational>(kappa.begin() + 1, kappa.end());
}

std::vector<Rational> distribution_cumulants(const QPolynomial& p, int R) {
    std::vector<Rational> m;
    m.reserve(static_cast<std::size_t>(R) + 1);
    m.emplace_back(1);
    for (int r = 1; r <= R; ++r) m.push_back(p.raw_moment(r));
    return moments_to_cumulants(m);
}

}  // namespace weylstat
