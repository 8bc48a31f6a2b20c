#include "itfl/mpc.hpp"

namespace itfl {

Fp mac_tag(const Fp& value, const MacKey& key) { return key.alpha * value + key.beta; }

bool mac_check_linear(const Fp& claimed, const Fp& combined_tag, const std::vector<Fp>& coeffs,
                      const Fp& constant, const Fp& alpha, const std::vector<Fp>& betas) {
    if (coeffs.size() != betas.size()) throw ProtocolError("mac_check_linear: size mismatch");
    Fp beta_sum(0, claimed.field());
    for (std::size_t i = 0; i < coeffs.size(); i++) beta_sum += coeffs[i] * betas[i];
    return combined_tag == alpha * (claimed - constant) + beta_sum;
}

TrackedShare TrackedShare::zero(const PrimeField& f) {
    Fp z(0, f);
    return {z, z, z, z};
}

TrackedShare TrackedShare::public_constant(const Fp& c) {
    Fp z(0, c.field());
    return {c, z, z, c};
}

TrackedShare TrackedShare::operator+(const TrackedShare& o) const {
    return {v + o.v, tag + o.tag, beta + o.beta, cpub + o.cpub};
}

TrackedShare TrackedShare::operator-(const TrackedShare& o) const {
    return {v - o.v, tag - o.tag, beta - o.beta, cpub - o.cpub};
}

TrackedShare TrackedShare::scaled(const Fp& a) const {
    return {a * v, a * tag, a * beta, a * cpub};
}

TrackedShare TrackedShare::plus_const(const Fp& c) const { return {v + c, tag, beta, cpub + c}; }

TrackedVector add(const TrackedVector& a, const TrackedVector& b) {
    if (a.size() != b.size()) throw ProtocolError("tracked vector size mismatch");
    TrackedVector r(a.size());
    for (std::size_t i = 0; i < a.size(); i++) r[i] = a[i] + b[i];
    return r;
}

TrackedVector sub(const TrackedVector& a, const TrackedVector& b) {
    if (a.size() != b.size()) throw ProtocolError("tracked vector size mismatch");
    TrackedVector r(a.size());
    for (std::size_t i = 0; i < a.size(); i++) r[i] = a[i] - b[i];
    return r;
}

TrackedVector scaled(const TrackedVector& a, const Fp& c) {
    TrackedVector r(a.size());
    for (std::size_t i = 0; i < a.size(); i++) r[i] = a[i].scaled(c);
    return r;
}

TrackedVector plus_const(const TrackedVector& a, const FieldVector& c) {
    if (a.size() != c.size()) throw ProtocolError("tracked vector size mismatch");
    TrackedVector r(a.size());
    for (std::size_t i = 0; i < a.size(); i++) r[i] = a[i].plus_const(c[i]);
    return r;
}

TripleGenerator::TripleGenerator(const PrimeField& f, const SharingParams& params,
                                 const EvaluationDomain& domain, Rng& rng)
    : f_(&f), params_(params), domain_(&domain), alpha_(rng.nonzero(f)) {}

std::vector<TrackedShare> TripleGenerator::share_tagged(const Fp& secret, Rng& rng) const {
    std::vector<Fp> raw = share_scalar_at_degree(secret, params_.degree(), *domain_, rng);
    std::vector<TrackedShare> out(raw.size());
    Fp zero(0, *f_);
    for (std::size_t i = 0; i < raw.size(); i++) {
        Fp beta = rng.field_element(*f_);
        out[i] = {raw[i], alpha_ * raw[i] + beta, beta, zero};
    }
    return out;
}

std::vector<TrackedVector> TripleGenerator::share_tagged_vector(const FieldVector& secret,
                                                                Rng& rng) const {
    std::vector<TrackedVector> out(static_cast<std::size_t>(params_.n),
                                   TrackedVector(secret.size()));
    for (std::size_t c = 0; c < secret.size(); c++) {
        auto per_party = share_tagged(secret[c], rng);
        for (std::size_t i = 0; i < per_party.size(); i++) out[i][c] = per_party[i];
    }
    return out;
}

ScalarTriple TripleGenerator::scalar_triple(Rng& rng) const {
    Fp g = rng.field_element(*f_);
    Fp w = rng.field_element(*f_);
    ScalarTriple t;
    t.gamma = share_tagged(g, rng);
    t.omega = share_tagged(w, rng);
    t.kappa = share_tagged(g * w, rng);
    return t;
}

DotProductTriple TripleGenerator::dot_triple(std::size_t dim, Rng& rng) const {
    FieldVector iota = rng.field_vector(*f_, dim);
    FieldVector phi = rng.field_vector(*f_, dim);
    DotProductTriple t;
    t.iota = share_tagged_vector(iota, rng);
    t.phi = share_tagged_vector(phi, rng);
    t.chi = share_tagged(dot(iota, phi), rng);
    return t;
}

ScalarVectorTriple TripleGenerator::scalar_vector_triple(std::size_t dim, Rng& rng) const {
    Fp zeta = rng.field_element(*f_);
    FieldVector xi = rng.field_vector(*f_, dim);
    ScalarVectorTriple t;
    t.zeta = share_tagged(zeta, rng);
    t.xi = share_tagged_vector(xi, rng);
    t.psi = share_tagged_vector(scale(zeta, xi), rng);
    return t;
}

Fp PlainChannel::open(const std::vector<TrackedShare>& shares) {
    int k = params_.degree() + 1;
    FieldVector xs, ys;
    for (int i = 0; i < k; i++) {
        xs.push_back(domain_.alphas[static_cast<std::size_t>(i)]);
        ys.push_back(shares[static_cast<std::size_t>(i)].v);
    }
    return lagrange_eval(xs, ys, domain_.betas[0]);
}

std::vector<TrackedShare> beaver_multiply(const std::vector<TrackedShare>& s,
                                          const std::vector<TrackedShare>& v, ScalarTriple& triple,
                                          BroadcastChannel& channel) {
    if (triple.consumed) throw ProtocolError("Beaver triple reuse");
    triple.consumed = true;
    std::size_t n = s.size();
    std::vector<TrackedShare> eps_sh(n), del_sh(n);
    for (std::size_t i = 0; i < n; i++) {
        eps_sh[i] = s[i] - triple.gamma[i];
        del_sh[i] = v[i] - triple.omega[i];
    }
    Fp eps = channel.open(eps_sh);
    Fp del = channel.open(del_sh);
    std::vector<TrackedShare> z(n);
    for (std::size_t i = 0; i < n; i++) {
        z[i] = triple.omega[i].scaled(eps) + triple.gamma[i].scaled(del) + triple.kappa[i];
        z[i] = z[i].plus_const(eps * del);
    }
    return z;
}

std::vector<TrackedShare> beaver_dot(const std::vector<TrackedVector>& x,
                                     const std::vector<TrackedVector>& y, DotProductTriple& triple,
                                     BroadcastChannel& channel) {
    if (triple.consumed) throw ProtocolError("Beaver triple reuse");
    triple.consumed = true;
    std::size_t n = x.size();
    std::size_t dim = x[0].size();
    FieldVector eps(dim), del(dim);
    for (std::size_t c = 0; c < dim; c++) {
        std::vector<TrackedShare> eps_sh(n), del_sh(n);
        for (std::size_t i = 0; i < n; i++) {
            eps_sh[i] = x[i][c] - triple.iota[i][c];
            del_sh[i] = y[i][c] - triple.phi[i][c];
        }
        eps[c] = channel.open(eps_sh);
        del[c] = channel.open(del_sh);
    }
    Fp eps_del = dot(eps, del);
    std::vector<TrackedShare> z(n);
    for (std::size_t i = 0; i < n; i++) {
        TrackedShare acc = triple.chi[i];
        for (std::size_t c = 0; c < dim; c++) {
            acc += triple.phi[i][c].scaled(eps[c]) + triple.iota[i][c].scaled(del[c]);
        }
        z[i] = acc.plus_const(eps_del);
    }
    return z;
}

std::vector<TrackedVector> beaver_scale_vector(const std::vector<TrackedShare>& c,
                                               const std::vector<TrackedVector>& x,
                                               ScalarVectorTriple& triple,
                                               BroadcastChannel& channel) {
    if (triple.consumed) throw ProtocolError("Beaver triple reuse");
    triple.consumed = true;
    std::size_t n = c.size();
    std::size_t dim = x[0].size();
    std::vector<TrackedShare> eps_sh(n);
    for (std::size_t i = 0; i < n; i++) eps_sh[i] = c[i] - triple.zeta[i];
    Fp eps = channel.open(eps_sh);  // c - zeta
    FieldVector del(dim);           // x - xi, coordinate-wise
    for (std::size_t cc = 0; cc < dim; cc++) {
        std::vector<TrackedShare> del_sh(n);
        for (std::size_t i = 0; i < n; i++) del_sh[i] = x[i][cc] - triple.xi[i][cc];
        del[cc] = channel.open(del_sh);
    }
    std::vector<TrackedVector> z(n, TrackedVector(dim));
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t cc = 0; cc < dim; cc++) {
            TrackedShare acc = triple.xi[i][cc].scaled(eps) + triple.zeta[i].scaled(del[cc]) +
                               triple.psi[i][cc];
            z[i][cc] = acc.plus_const(eps * del[cc]);
        }
    }
    return z;
}

}  // namespace itfl
