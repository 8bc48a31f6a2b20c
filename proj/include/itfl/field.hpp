#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "itfl/errors.hpp"

namespace itfl {

using u128 = unsigned __int128;
using i128 = __int128;

std::string to_string(u128 v);
std::string to_string(i128 v);
u128 parse_u128(const std::string& s);

// Deterministic trial division below 2^32, Miller-Rabin (64 rounds) above.
bool is_prime(u128 n);

// No-wraparound bound p >= 2 n d^tau q^(2 tau + 1) + 1, evaluated in
// unbounded-precision integers.
bool validate_parameters(u128 n, u128 d, unsigned tau, u128 q, u128 p);

class PrimeField {
public:
    explicit PrimeField(u128 p);

    u128 modulus() const { return p_; }

    u128 add(u128 a, u128 b) const;
    u128 sub(u128 a, u128 b) const;
    u128 neg(u128 a) const;
    u128 mul(u128 a, u128 b) const;
    u128 inv(u128 a) const;  // throws FieldError on zero
    u128 div(u128 a, u128 b) const;
    u128 pow(u128 base, u128 exp) const;

    // Phi(x) = x mod p for |x| <= (p-1)/2; throws EncodingOverflow otherwise.
    u128 phi(i128 x) const;
    // unique z with z == e (mod p) and -(p-1)/2 <= z <= (p-1)/2
    i128 centered_lift(u128 e) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
    u128 p_;
    bool fits64_;
};

// A field element bound to its field. Arithmetic across different moduli
// throws FieldError.
class Fp {
public:
    Fp() : v_(0), f_(nullptr) {}
    Fp(u128 v, const PrimeField& f) : v_(v % f.modulus()), f_(&f) {}

    u128 value() const { return v_; }
    const PrimeField& field() const;
    i128 lift() const { return field().centered_lift(v_); }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator-() const;
    Fp operator*(const Fp& o) const;
    Fp operator/(const Fp& o) const;
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inv() const;
    Fp pow(u128 e) const;

    bool operator==(const Fp& o) const;
    bool operator!=(const Fp& o) const { return !(*this == o); }

private:
    const PrimeField* same_field(const Fp& o) const;
    u128 v_;
    const PrimeField* f_;
};

using FieldVector = std::vector<Fp>;

FieldVector add(const FieldVector& a, const FieldVector& b);
FieldVector sub(const FieldVector& a, const FieldVector& b);
FieldVector scale(const Fp& c, const FieldVector& a);
Fp dot(const FieldVector& a, const FieldVector& b);
FieldVector zeros(const PrimeField& f, std::size_t n);

std::string to_string(const Fp& e);

}  // namespace itfl
