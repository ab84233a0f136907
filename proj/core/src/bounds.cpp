#include "wiener/bounds.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "wiener/checked.hpp"
#include "wiener/errors.hpp"
#include "wiener/solvers.hpp"

namespace wiener {

bool leq_rational(std::int64_t v, const Rational& r) {
    return checked_mul(v, r.den) <= r.num;
}

double path_distance_spectral_radius(std::int64_t k, double tol,
                                     std::int64_t max_iters) {
    if (k < 1) throw InputError("need k >= 1");
    if (k == 1) return 0.0;
    const auto n = static_cast<std::size_t>(k);
    std::vector<double> z(n, 1.0 / std::sqrt(static_cast<double>(k)));
    std::vector<double> y(n);
    double prev = 0.0;
    for (std::int64_t it = 1; it <= max_iters; ++it) {
        // y = Cz with C[i][j] = |i-j|, via prefix sums of z_j and j*z_j:
        // y_i = i*(2*prefA_i - A) - 2*prefB_i + B.
        double a = 0.0, b = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            a += z[j];
            b += static_cast<double>(j) * z[j];
        }
        double pa = 0.0, pb = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            pa += z[i];
            pb += static_cast<double>(i) * z[i];
            y[i] = static_cast<double>(i) * (2.0 * pa - a) - 2.0 * pb + b;
        }
        double lambda = 0.0, norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            lambda += z[i] * y[i];
            norm2 += y[i] * y[i];
        }
        const double norm = std::sqrt(norm2);
        if (norm == 0.0)
            throw NoConvergenceError("power iteration collapsed to zero");
        for (std::size_t i = 0; i < n; ++i) z[i] = y[i] / norm;
        if (it >= 2 &&
            std::abs(lambda - prev) <= tol * std::max(1.0, std::abs(lambda)))
            return lambda;
        prev = lambda;
    }
    throw NoConvergenceError("power iteration did not settle within " +
                             std::to_string(max_iters) + " iterations");
}

BoundReport upper_bound(const WeightMultiset& w) {
    const std::int64_t n = w.tree_size();
    const std::int64_t k = w.k();
    std::int64_t sumsq = 0;
    for (std::int64_t wv : w.values())
        sumsq = checked_add(sumsq, checked_square(wv));
    std::int64_t num = checked_add(checked_mul(4, checked_square(n - 1)),
                                   checked_mul(checked_mul(k, k - 1), sumsq));
    std::int64_t den = 4;
    const std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;

    BoundReport r;
    r.bound = {num, den};
    r.tight = (k == 2 && w.values()[0] == w.values()[1]);
    r.lambda_cap = k * (k - 1) / 2;
    r.lambda1 = k >= 2 ? path_distance_spectral_radius(k) : 0.0;
    return r;
}

BoundReport upper_bound(const DegreeSequence& ds) {
    return upper_bound(WeightMultiset::from_degrees(ds));
}

} // namespace wiener
