#pragma once

#include <cstdint>

#include "wiener/degree_sequence.hpp"
#include "wiener/solvers.hpp"

namespace wiener {

/// Exact rational with a small denominator (here always 1, 2 or 4), reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool operator==(const Rational&) const = default;
};

/// True when v <= r, compared exactly.
bool leq_rational(std::int64_t v, const Rational& r);

/// Largest eigenvalue of the k x k matrix with entries |i - j|, which is
/// the distance matrix of the path on k vertices.  Matrix-free power
/// iteration, O(k) per step; deterministic for fixed arguments.  Requires
/// k >= 1; throws NoConvergenceError if the tolerance is not reached.
double path_distance_spectral_radius(std::int64_t k, double tol = 1e-10,
                                     std::int64_t max_iters = 100000);

/// The degree-based upper bound (n-1)^2 + k(k-1)/4 * sum (d_i - 1)^2 over
/// internal degrees, kept exact as a rational.
struct BoundReport {
    Rational bound;
    /// The bound is attained exactly when k = 2 and the two internal
    /// degrees are equal.
    bool tight = false;
    /// Spectral radius of the path distance matrix on k vertices
    /// (0 when k < 2); the derivation bounds it by k(k-1)/2.
    double lambda1 = 0.0;
    std::int64_t lambda_cap = 0;
};

BoundReport upper_bound(const DegreeSequence& ds);
/// Same bound from the internal weights alone (w_i = d_i - 1, n = sum + 2).
BoundReport upper_bound(const WeightMultiset& w);

} // namespace wiener
