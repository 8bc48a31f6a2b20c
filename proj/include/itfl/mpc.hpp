#pragma once

#include <vector>

#include "itfl/field.hpp"
#include "itfl/rng.hpp"
#include "itfl/sharing.hpp"

namespace itfl {

struct MacKey {
    Fp alpha;  // global per session, sampled from F_p \ {0}
    Fp beta;   // fresh per tagged value
};

// MAC_{alpha,beta}(v) = alpha * v + beta
Fp mac_tag(const Fp& value, const MacKey& key);

// Accepts iff combined_tag = alpha * (claimed - c) + sum_i a_i * beta_i, the
// homomorphic image of the individual tags under y = sum a_i s_i + c.
bool mac_check_linear(const Fp& claimed, const Fp& combined_tag, const std::vector<Fp>& coeffs,
                      const Fp& constant, const Fp& alpha, const std::vector<Fp>& betas);

// One party's view of a tagged share, together with the federator-side key
// shadow that tracks the same linear operations on the MAC keys. The value
// and tag travel with the share owner; beta and cpub are what the federator
// derives from its key ledger and the public transcript.
struct TrackedShare {
    Fp v;     // share value
    Fp tag;   // alpha * v0 + beta, carried homomorphically
    Fp beta;  // federator: accumulated beta under the same linear map
    Fp cpub;  // federator: accumulated public constant

    TrackedShare() = default;
    TrackedShare(const Fp& value, const Fp& t, const Fp& b, const Fp& c)
        : v(value), tag(t), beta(b), cpub(c) {}

    static TrackedShare zero(const PrimeField& f);
    static TrackedShare public_constant(const Fp& c);

    TrackedShare operator+(const TrackedShare& o) const;
    TrackedShare operator-(const TrackedShare& o) const;
    TrackedShare scaled(const Fp& a) const;
    TrackedShare plus_const(const Fp& c) const;
    TrackedShare& operator+=(const TrackedShare& o) { return *this = *this + o; }

    bool mac_ok(const Fp& alpha) const { return tag == alpha * (v - cpub) + beta; }
};

using TrackedVector = std::vector<TrackedShare>;

TrackedVector add(const TrackedVector& a, const TrackedVector& b);
TrackedVector sub(const TrackedVector& a, const TrackedVector& b);
TrackedVector scaled(const TrackedVector& a, const Fp& c);
TrackedVector plus_const(const TrackedVector& a, const FieldVector& c);

enum class TripleKind { scalar, dot, scalar_vector };

// per-party slices of one correlated triple
struct ScalarTriple {
    std::vector<TrackedShare> gamma, omega, kappa;  // indexed by party
    bool consumed = false;
};

struct DotProductTriple {
    std::vector<TrackedVector> iota, phi;  // [party][coordinate]
    std::vector<TrackedShare> chi;
    bool consumed = false;
};

struct ScalarVectorTriple {
    std::vector<TrackedShare> zeta;
    std::vector<TrackedVector> xi, psi;
    bool consumed = false;
};

// TTP-side generator: Shamir-shares each component at degree t and tags every
// share with a fresh beta under the global alpha.
class TripleGenerator {
public:
    TripleGenerator(const PrimeField& f, const SharingParams& params,
                    const EvaluationDomain& domain, Rng& rng);

    Fp alpha() const { return alpha_; }

    std::vector<TrackedShare> share_tagged(const Fp& secret, Rng& rng) const;
    std::vector<TrackedVector> share_tagged_vector(const FieldVector& secret, Rng& rng) const;

    ScalarTriple scalar_triple(Rng& rng) const;
    DotProductTriple dot_triple(std::size_t dim, Rng& rng) const;
    ScalarVectorTriple scalar_vector_triple(std::size_t dim, Rng& rng) const;

private:
    const PrimeField* f_;
    SharingParams params_;
    const EvaluationDomain* domain_;
    Fp alpha_;
};

// Reconstruction channel for the public openings of Beaver multiplication.
// The protocol engine implements this with MAC checks, transcripts and
// adversarial corruption; tests use an honest in-memory channel.
class BroadcastChannel {
public:
    virtual ~BroadcastChannel() = default;
    // opens the secret carried by the per-party tagged shares
    virtual Fp open(const std::vector<TrackedShare>& shares) = 0;
};

// Honest channel: plain Lagrange reconstruction at the secret anchor.
class PlainChannel : public BroadcastChannel {
public:
    PlainChannel(const SharingParams& params, const EvaluationDomain& domain)
        : params_(params), domain_(domain) {}
    Fp open(const std::vector<TrackedShare>& shares) override;

private:
    SharingParams params_;
    EvaluationDomain domain_;
};

// z[i] = eps*del + eps*omega[i] + del*gamma[i] + kappa[i] after opening
// eps = s - gamma, del = v - omega. Marks the triple consumed; reuse throws.
std::vector<TrackedShare> beaver_multiply(const std::vector<TrackedShare>& s,
                                          const std::vector<TrackedShare>& v, ScalarTriple& triple,
                                          BroadcastChannel& channel);

std::vector<TrackedShare> beaver_dot(const std::vector<TrackedVector>& x,
                                     const std::vector<TrackedVector>& y, DotProductTriple& triple,
                                     BroadcastChannel& channel);

std::vector<TrackedVector> beaver_scale_vector(const std::vector<TrackedShare>& c,
                                               const std::vector<TrackedVector>& x,
                                               ScalarVectorTriple& triple,
                                               BroadcastChannel& channel);

}  // namespace itfl
