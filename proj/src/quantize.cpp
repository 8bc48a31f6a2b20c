#include "itfl/quantize.hpp"

#include <cmath>

#include "itfl/errors.hpp"

namespace itfl {

NormalizedUpdate normalize(const Eigen::VectorXd& u, double norm_floor) {
    double n = u.norm();
    if (!(n > norm_floor)) throw DegenerateUpdate("update norm below floor");
    return {u / n, n};
}

double stochastic_quantize(double x, int q, Rng& rng) {
    if (q < 1) throw std::invalid_argument("quantization levels must be >= 1");
    if (std::abs(x) > 1.0) throw std::range_error("stochastic_quantize: |x| > 1");
    double qx = static_cast<double>(q) * x;
    double fl = std::floor(qx);
    double frac = qx - fl;
    if (frac > 0.0 && rng.uniform01() < frac) fl += 1.0;
    return fl / static_cast<double>(q);
}

QuantizedUpdate embed(const NormalizedUpdate& nu, int q, const PrimeField& f, Rng& rng) {
    QuantizedUpdate out;
    out.q = q;
    out.values.reserve(static_cast<std::size_t>(nu.values.size()));
    for (Eigen::Index i = 0; i < nu.values.size(); i++) {
        double level = stochastic_quantize(nu.values[i], q, rng);
        i128 scaled = static_cast<i128>(std::llround(level * q));
        out.values.emplace_back(f.phi(scaled), f);
    }
    return out;
}

double dequantize_ratio(const Fp& num, const Fp& den, int q) {
    i128 d = den.lift();
    if (d == 0) throw DegenerateUpdate("dequantize_ratio: zero denominator");
    return static_cast<double>(num.lift()) / static_cast<double>(d) / static_cast<double>(q);
}

Eigen::VectorXd dequantize_ratio(const FieldVector& num, const Fp& den, int q) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(num.size()));
    for (std::size_t i = 0; i < num.size(); i++) {
        out[static_cast<Eigen::Index>(i)] = dequantize_ratio(num[i], den, q);
    }
    return out;
}

}  // namespace itfl
