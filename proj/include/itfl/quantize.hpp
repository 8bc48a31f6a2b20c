#pragma once

#include <Eigen/Dense>

#include "itfl/field.hpp"
#include "itfl/rng.hpp"

namespace itfl {

inline constexpr double kNormFloor = 1e-12;

struct NormalizedUpdate {
    Eigen::VectorXd values;  // unit norm
    double original_norm = 0.0;
};

struct QuantizedUpdate {
    FieldVector values;  // entry lifts in [-q, q]
    int q = 0;
};

// u / ||u||; throws DegenerateUpdate below the norm floor
NormalizedUpdate normalize(const Eigen::VectorXd& u, double norm_floor = kNormFloor);

// Unbiased stochastic rounding to the grid {k/q}: returns floor(qx)/q with
// probability 1-(qx-floor(qx)), else (floor(qx)+1)/q. Requires |x| <= 1.
double stochastic_quantize(double x, int q, Rng& rng);

// entry-wise phi(q * Q_q(x))
QuantizedUpdate embed(const NormalizedUpdate& nu, int q, const PrimeField& f, Rng& rng);

// (lift(num) / lift(den)) / q; the fixed-point scales of numerator and
// denominator cancel to a single residual factor q
double dequantize_ratio(const Fp& num, const Fp& den, int q);
Eigen::VectorXd dequantize_ratio(const FieldVector& num, const Fp& den, int q);

}  // namespace itfl
