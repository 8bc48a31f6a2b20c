#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "itfl/field.hpp"
#include "itfl/rng.hpp"

namespace itfl {

struct SharingParams {
    int n = 0;  // number of share points
    int m = 1;  // packed sub-vectors per sharing
    int t = 0;  // collusion bound
    int degree() const { return m + t - 1; }
    void validate() const;
};

// alphas: n distinct nonzero share points; betas: m+t distinct nonzero
// secret/randomness anchor points, disjoint from the alphas.
struct EvaluationDomain {
    FieldVector alphas;
    FieldVector betas;

    // alphas = 1..n, betas = n+1..n+m+t
    static EvaluationDomain standard(const PrimeField& f, int n, int m, int t);
    void validate(const SharingParams& params) const;
};

struct Share {
    Fp point;
    FieldVector value;  // one sub-vector of length d/m (scalar sharing: length 1)
    int owner = -1;
};

// --- polynomial helpers -----------------------------------------------------

// Horner evaluation; coeffs[k] multiplies x^k
Fp poly_eval(const std::vector<Fp>& coeffs, const Fp& x);

// coefficients of the unique interpolating polynomial through the points
std::vector<Fp> lagrange_interpolate(const FieldVector& xs, const FieldVector& ys);

// weights w_i with f(target) = sum_i w_i * f(xs[i]) for any deg <= |xs|-1 poly
FieldVector lagrange_weights(const FieldVector& xs, const Fp& target);

// evaluate the interpolant through (xs, ys) at target without forming coefficients
Fp lagrange_eval(const FieldVector& xs, const FieldVector& ys, const Fp& target);

// --- LCC / Shamir sharing ---------------------------------------------------

// zero-pad to the next multiple of m
FieldVector pad_to_multiple(FieldVector v, int m, const PrimeField& f);

// Scalar sharing at an explicit polynomial degree: random g with
// g(betas[0]) = secret, evaluated at all alphas. Degree 0 shares the constant.
std::vector<Fp> share_scalar_at_degree(const Fp& secret, int deg, const EvaluationDomain& domain,
                                       Rng& rng);

// LCC encoding: the degree-(m+t-1) polynomial through (beta_j, secret block j)
// for j in [m] and (beta_{m+j}, fresh uniform r_j) for j in [t], evaluated at
// the alphas. secret.size() must be divisible by m.
std::vector<Share> lcc_share(const FieldVector& secret, const SharingParams& params,
                             const EvaluationDomain& domain, Rng& rng);

// Lagrange-interpolate the unique degree-deg (vector-valued) polynomial through
// the shares and evaluate at the targets. Requires >= deg+1 shares with
// pairwise distinct points.
std::vector<FieldVector> reconstruct(const std::vector<Share>& shares, int deg,
                                     const FieldVector& targets);

// concatenated secret blocks (evaluations at betas[0..m))
FieldVector lcc_reconstruct_secret(const std::vector<Share>& shares, const SharingParams& params,
                                   const EvaluationDomain& domain);

// per-party local evaluation of h on scalar share values
std::vector<Fp> eval_poly_on_shares(const std::vector<Fp>& share_values,
                                    const std::vector<Fp>& h_coeffs);

// --- Reed-Solomon error correction ------------------------------------------

struct RsResult {
    std::vector<Fp> coeffs;            // degree <= deg
    std::vector<int> error_positions;  // indices into the input arrays
};

// Berlekamp-Welch. Corrects up to floor((N - deg - 1) / 2) corrupted values
// among the N provided points; erasures are handled by the caller passing only
// responsive points. Returns nullopt when no polynomial within capability fits.
std::optional<RsResult> rs_decode(const FieldVector& points, const FieldVector& values, int deg);

// --- verifiable sharing (bivariate consistency) ------------------------------

// Dealing of one secret via a symmetric bivariate polynomial. Recipient i
// holds the univariate restriction f_i(y) = S(alpha_i, y) per coordinate;
// its LCC share value is f_i(0) = S(alpha_i, 0).
struct ItvssDealing {
    // [recipient][coordinate] -> coefficients of f_i(y), length degree+1
    std::vector<std::vector<std::vector<Fp>>> f_polys;
};

ItvssDealing itvss_distribute(const FieldVector& secret, const SharingParams& params,
                              const EvaluationDomain& domain, Rng& rng);

Share itvss_main_share(const ItvssDealing& dealing, int recipient,
                       const EvaluationDomain& domain);

// Pairwise cross-evaluation checks f_i(alpha_j) == f_j(alpha_i) among the
// given recipients; returns dealer ids (indices into dealings) with at least
// one failed check. Missing dealings are skipped.
std::vector<int> itvss_verify(const std::vector<std::optional<ItvssDealing>>& dealings,
                              const std::vector<int>& recipients, const EvaluationDomain& domain);

// --- re-randomization --------------------------------------------------------

// observer(dealer, recipient, sub_share) for transcripts and privacy tests
using SubShareObserver = std::function<void(int, int, const Fp&)>;

// Fresh degree-target_deg sharing of the secret carried by scalar shares lying
// on a degree-input_deg polynomial: each contributor sub-shares its value with
// a fresh polynomial and everyone linearly recombines with the Lagrange
// weights of the input-degree reconstruction. m = 1 only.
std::vector<Fp> rerandomize(const std::vector<Fp>& shares, const std::vector<int>& contributors,
                            int input_deg, int target_deg, const SharingParams& params,
                            const EvaluationDomain& domain, Rng& rng,
                            const SubShareObserver& observer = nullptr);

}  // namespace itfl
