#pragma once

#include <cstdint>
#include <random>

#include "itfl/field.hpp"

namespace itfl {

// Seeded random source. All protocol and quantization randomness flows
// through explicitly passed Rng instances so runs replay bit-exactly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    double uniform01() {
        // 53-bit mantissa in [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double normal() { return normal_(eng_); }

    // uniform in [0, bound) by rejection
    u128 below(u128 bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below(0)");
        if (bound <= 0xffffffffffffffffULL) {
            std::uint64_t b = static_cast<std::uint64_t>(bound);
            std::uint64_t lim = UINT64_MAX - UINT64_MAX % b;
            for (;;) {
                std::uint64_t v = eng_();
                if (v < lim) return v % b;
            }
        }
        for (;;) {
            u128 v = (static_cast<u128>(eng_()) << 64) | eng_();
            u128 lim = ~u128(0) - ~u128(0) % bound;
            if (v < lim) return v % bound;
        }
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

    Fp field_element(const PrimeField& f) { return Fp(below(f.modulus()), f); }

    Fp nonzero(const PrimeField& f) { return Fp(1 + below(f.modulus() - 1), f); }

    FieldVector field_vector(const PrimeField& f, std::size_t n) {
        FieldVector v(n);
        for (auto& e : v) e = field_element(f);
        return v;
    }

    // independent child stream
    Rng fork(std::uint64_t stream) {
        std::uint64_t z = eng_() + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

private:
    std::mt19937_64 eng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace itfl
