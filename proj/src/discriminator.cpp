#include "itfl/discriminator.hpp"

#include <cmath>

#include "itfl/errors.hpp"

namespace itfl {

namespace {

bigint big_from_i128(i128 v) {
    bool neg = v < 0;
    u128 mag = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
    bigint r = static_cast<std::uint64_t>(mag >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(mag);
    return neg ? -r : r;
}

bigint big_from_u128(u128 v) {
    bigint r = static_cast<std::uint64_t>(v >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(v);
    return r;
}

Fp fp_from_big_mod(const bigint& v, const PrimeField& f) {
    bigint p = big_from_u128(f.modulus());
    bigint r = v % p;
    if (r < 0) r += p;
    u128 out = static_cast<u128>(static_cast<std::uint64_t>(r >> 64));
    out <<= 64;
    out |= static_cast<std::uint64_t>(r & 0xffffffffffffffffULL);
    return Fp(out, f);
}

}  // namespace

const std::vector<double>& DiscriminatorPoly::default_coeffs() {
    static const std::vector<double> c = {0.01363545, 0.1860353, 0.56578977, 0.46897526};
    return c;
}

DiscriminatorPoly DiscriminatorPoly::make(const PrimeField& f, int q,
                                          const std::vector<double>& real_coeffs) {
    DiscriminatorPoly p;
    p.real_coeffs = real_coeffs;
    p.tau = static_cast<int>(real_coeffs.size()) - 1;
    p.q = q;
    for (int k = 0; k <= p.tau; k++) {
        // h_k * q^(2*(tau-k)), rounded to the nearest integer
        long double scale = std::pow(static_cast<long double>(q), 2.0L * (p.tau - k));
        long double scaled = static_cast<long double>(real_coeffs[static_cast<std::size_t>(k)]) *
                             scale;
        bigint ic = big_from_i128(static_cast<i128>(std::llroundl(scaled)));
        p.int_coeffs.push_back(ic);
        p.field_coeffs.push_back(fp_from_big_mod(ic, f));
    }
    return p;
}

double h_real(double x, const std::vector<double>& coeffs) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Fp h_field(const Fp& x, const DiscriminatorPoly& poly) {
    Fp acc = poly.field_coeffs.back();
    for (auto it = poly.field_coeffs.rbegin() + 1; it != poly.field_coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

AggregateResult plaintext_aggregate_real(const NormalizedUpdate& u0,
                                         const std::vector<NormalizedUpdate>& users,
                                         const std::vector<double>& coeffs) {
    AggregateResult r;
    Eigen::Index d = u0.values.size();
    r.sigma2 = Eigen::VectorXd::Zero(d);
    for (const auto& u : users) {
        double ts = h_real(u0.values.dot(u.values), coeffs);
        r.trust_scores.push_back(ts);
        r.sigma1 += ts;
        r.sigma2 += ts * u.values;
    }
    if (r.sigma1 == 0.0) throw DegenerateUpdate("aggregation degenerate: sigma1 == 0");
    r.nu = r.sigma2 / r.sigma1;
    Eigen::VectorXd u0_raw = u0.values * u0.original_norm;
    FinalUpdate fin = finalize_update(r.nu, u0_raw);
    r.final_update = fin.update;
    r.degenerate = fin.degenerate;
    return r;
}

ExactSigma plaintext_aggregate_exact(const QuantizedUpdate& u0,
                                     const std::vector<QuantizedUpdate>& users,
                                     const DiscriminatorPoly& poly) {
    ExactSigma out;
    out.sigma1 = 0;
    std::size_t d = u0.values.size();
    out.sigma2.assign(d, bigint(0));
    for (const auto& u : users) {
        bigint x = 0;
        for (std::size_t c = 0; c < d; c++)
            x += big_from_i128(u0.values[c].lift()) * big_from_i128(u.values[c].lift());
        bigint h = 0;
        for (auto it = poly.int_coeffs.rbegin(); it != poly.int_coeffs.rend(); ++it)
            h = h * x + *it;
        out.sigma1 += h;
        for (std::size_t c = 0; c < d; c++) out.sigma2[c] += h * big_from_i128(u.values[c].lift());
    }
    return out;
}

FinalUpdate finalize_update(const Eigen::VectorXd& nu, const Eigen::VectorXd& u0) {
    double nn = nu.norm();
    if (nn == 0.0) return {Eigen::VectorXd::Zero(nu.size()), true};
    Eigen::VectorXd dir = u0.norm() * nu / nn;
    if (nu.dot(u0) < 0.0) dir = -dir;
    return {dir, false};
}

}  // namespace itfl
