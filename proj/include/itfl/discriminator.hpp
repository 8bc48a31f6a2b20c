#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "itfl/field.hpp"
#include "itfl/quantize.hpp"

namespace itfl {

using bigint = boost::multiprecision::cpp_int;

// Degree-3 trust-score polynomial replacing FLTrust's ReLU, with fixed-point
// field coefficients: field_coeffs[k] = phi(round(h_k * q^(2*(tau-k)))) so
// every term of H(X) shares the scale q^(2*tau) when X ~ q^2 cos(theta).
struct DiscriminatorPoly {
    std::vector<double> real_coeffs;  // h_0 .. h_tau
    std::vector<bigint> int_coeffs;   // round(h_k * q^(2*(tau-k)))
    std::vector<Fp> field_coeffs;
    int tau = 3;
    int q = 0;

    static const std::vector<double>& default_coeffs();
    static DiscriminatorPoly make(const PrimeField& f, int q,
                                  const std::vector<double>& real_coeffs = default_coeffs());
};

double h_real(double x, const std::vector<double>& coeffs = DiscriminatorPoly::default_coeffs());

Fp h_field(const Fp& x, const DiscriminatorPoly& poly);

struct AggregateResult {
    double sigma1 = 0.0;                        // sum of trust scores
    Eigen::VectorXd sigma2;                     // trust-weighted sum of unit updates
    Eigen::VectorXd nu;                         // sigma2 / sigma1
    Eigen::VectorXd final_update;               // norm- and sign-adjusted
    bool degenerate = false;                    // nu == 0
    std::vector<double> trust_scores;
};

// Exact-real oracle for the aggregation rule: TS_i = h(<u0_hat, ui_hat>),
// nu = sum TS_i ui_hat / sum TS_i, final update rescaled to ||u0|| with the
// sign flipped when <nu, u0> < 0. Throws DegenerateUpdate when sigma1 == 0.
AggregateResult plaintext_aggregate_real(const NormalizedUpdate& u0,
                                         const std::vector<NormalizedUpdate>& users,
                                         const std::vector<double>& coeffs =
                                             DiscriminatorPoly::default_coeffs());

struct ExactSigma {
    bigint sigma1;
    std::vector<bigint> sigma2;
};

// Unbounded-integer mirror of the in-field computation: X_i = <lift(u0),
// lift(ui)>, Sigma1 = sum H_int(X_i), Sigma2 = sum H_int(X_i) * lift(ui).
ExactSigma plaintext_aggregate_exact(const QuantizedUpdate& u0,
                                     const std::vector<QuantizedUpdate>& users,
                                     const DiscriminatorPoly& poly);

struct FinalUpdate {
    Eigen::VectorXd update;
    bool degenerate = false;  // nu was zero; update is the zero vector
};

// ||u0|| * nu / ||nu||, sign-flipped when <nu, u0> < 0 (ties keep the sign)
FinalUpdate finalize_update(const Eigen::VectorXd& nu, const Eigen::VectorXd& u0);

}  // namespace itfl
