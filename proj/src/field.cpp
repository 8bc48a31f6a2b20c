#include "itfl/field.hpp"

#include <algorithm>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

namespace itfl {

namespace mp = boost::multiprecision;
using bigint = mp::cpp_int;

namespace {

bigint to_big(u128 v) {
    bigint r = static_cast<std::uint64_t>(v >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(v);
    return r;
}

u128 from_big(const bigint& v) {
    bigint hi = v >> 64;
    u128 r = static_cast<u128>(static_cast<std::uint64_t>(hi)) << 64;
    r |= static_cast<std::uint64_t>(v & 0xffffffffffffffffULL);
    return r;
}

u128 mulmod_wide(u128 a, u128 b, u128 p) {
    bigint r = to_big(a) * to_big(b) % to_big(p);
    return from_big(r);
}

u128 powmod(u128 base, u128 exp, u128 p, bool fits64) {
    u128 result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) {
            result = fits64 ? (result * base) % p : mulmod_wide(result, base, p);
        }
        base = fits64 ? (base * base) % p : mulmod_wide(base, base, p);
        exp >>= 1;
    }
    return result;
}

bool miller_rabin_round(u128 n, u128 a, u128 d, int r) {
    bool fits64 = n <= 0xffffffffffffffffULL;
    u128 x = powmod(a, d, n, fits64);
    if (x == 1 || x == n - 1) return true;
    for (int i = 0; i < r - 1; i++) {
        x = fits64 ? (x * x) % n : mulmod_wide(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string(i128 v) {
    if (v < 0) return "-" + to_string(static_cast<u128>(-v));
    return to_string(static_cast<u128>(v));
}

u128 parse_u128(const std::string& s) {
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("not a decimal integer: " + s);
        v = v * 10 + static_cast<u128>(c - '0');
    }
    return v;
}

bool is_prime(u128 n) {
    if (n < 2) return false;
    for (u128 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < (u128(1) << 32)) {
        for (u128 f = 41; f * f <= n; f += 2) {
            if (n % f == 0) return false;
        }
        return true;
    }
    u128 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        r++;
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (int round = 0; round < 64; round++) {
        u128 a = 2 + (static_cast<u128>(rng()) % (n - 3));
        if (!miller_rabin_round(n, a, d, r)) return false;
    }
    return true;
}

bool validate_parameters(u128 n, u128 d, unsigned tau, u128 q, u128 p) {
    bigint bound = 2 * to_big(n);
    bigint dd = to_big(d);
    for (unsigned i = 0; i < tau; i++) bound *= dd;
    bigint qq = to_big(q);
    for (unsigned i = 0; i < 2 * tau + 1; i++) bound *= qq;
    bound += 1;
    return to_big(p) >= bound;
}

PrimeField::PrimeField(u128 p) : p_(p), fits64_(p <= 0xffffffffffffffffULL) {
    if (p < 3) throw FieldError("modulus must be >= 3");
    if (!is_prime(p)) throw FieldError("modulus is not prime: " + to_string(p));
}

u128 PrimeField::add(u128 a, u128 b) const {
    u128 r = a + b;  // a, b < p <= 2^127, no overflow
    return r >= p_ ? r - p_ : r;
}

u128 PrimeField::sub(u128 a, u128 b) const { return a >= b ? a - b : a + p_ - b; }

u128 PrimeField::neg(u128 a) const { return a == 0 ? 0 : p_ - a; }

u128 PrimeField::mul(u128 a, u128 b) const {
    if (fits64_) return (a * b) % p_;
    return mulmod_wide(a, b, p_);
}

u128 PrimeField::inv(u128 a) const {
    if (a == 0) throw FieldError("inverse of zero");
    return pow(a, p_ - 2);
}

u128 PrimeField::div(u128 a, u128 b) const { return mul(a, inv(b)); }

u128 PrimeField::pow(u128 base, u128 exp) const { return powmod(base, exp, p_, fits64_); }

u128 PrimeField::phi(i128 x) const {
    u128 half = (p_ - 1) / 2;
    if (x >= 0) {
        if (static_cast<u128>(x) > half) throw EncodingOverflow("phi: magnitude exceeds (p-1)/2");
        return static_cast<u128>(x);
    }
    u128 mag = static_cast<u128>(-x);
    if (mag > half) throw EncodingOverflow("phi: magnitude exceeds (p-1)/2");
    return p_ - mag;
}

i128 PrimeField::centered_lift(u128 e) const {
    u128 half = (p_ - 1) / 2;
    if (e <= half) return static_cast<i128>(e);
    return -static_cast<i128>(p_ - e);
}

const PrimeField& Fp::field() const {
    if (!f_) throw FieldError("element has no field");
    return *f_;
}

const PrimeField* Fp::same_field(const Fp& o) const {
    if (!f_ || !o.f_) throw FieldError("element has no field");
    if (f_->modulus() != o.f_->modulus()) throw FieldError("mixed moduli");
    return f_;
}

Fp Fp::operator+(const Fp& o) const {
    const PrimeField* f = same_field(o);
    return Fp(f->add(v_, o.v_), *f);
}

Fp Fp::operator-(const Fp& o) const {
    const PrimeField* f = same_field(o);
    return Fp(f->sub(v_, o.v_), *f);
}

Fp Fp::operator-() const { return Fp(field().neg(v_), field()); }

Fp Fp::operator*(const Fp& o) const {
    const PrimeField* f = same_field(o);
    return Fp(f->mul(v_, o.v_), *f);
}

Fp Fp::operator/(const Fp& o) const {
    const PrimeField* f = same_field(o);
    return Fp(f->div(v_, o.v_), *f);
}

Fp Fp::inv() const { return Fp(field().inv(v_), field()); }

Fp Fp::pow(u128 e) const { return Fp(field().pow(v_, e), field()); }

bool Fp::operator==(const Fp& o) const {
    if (!f_ && !o.f_) return true;
    return same_field(o) && v_ == o.v_;
}

FieldVector add(const FieldVector& a, const FieldVector& b) {
    if (a.size() != b.size()) throw FieldError("vector length mismatch");
    FieldVector r(a.size());
    for (std::size_t i = 0; i < a.size(); i++) r[i] = a[i] + b[i];
    return r;
}

FieldVector sub(const FieldVector& a, const FieldVector& b) {
    if (a.size() != b.size()) throw FieldError("vector length mismatch");
    FieldVector r(a.size());
    for (std::size_t i = 0; i < a.size(); i++) r[i] = a[i] - b[i];
    return r;
}

FieldVector scale(const Fp& c, const FieldVector& a) {
    FieldVector r(a.size());
    for (std::size_t i = 0; i < a.size(); i++) r[i] = c * a[i];
    return r;
}

Fp dot(const FieldVector& a, const FieldVector& b) {
    if (a.size() != b.size()) throw FieldError("vector length mismatch");
    if (a.empty()) throw FieldError("dot of empty vectors");
    Fp acc = a[0] * b[0];
    for (std::size_t i = 1; i < a.size(); i++) acc += a[i] * b[i];
    return acc;
}

FieldVector zeros(const PrimeField& f, std::size_t n) { return FieldVector(n, Fp(0, f)); }

std::string to_string(const Fp& e) { return to_string(e.value()); }

}  // namespace itfl
