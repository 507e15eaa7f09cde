#pragma once

// Binary floating point with runtime-selected mantissa (MPFR), and complex
// numbers as pairs of such reals.

#include <cmath>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "exactcore.hpp"

namespace zetapoly {

using Real = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

inline constexpr int kDefaultPrecBits = 128;

inline unsigned bits_to_digits10(int bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 2;
}

/// Sets the MPFR default precision for the lifetime of the scope. The default
/// is process-wide, so numeric routines run at different precisions must not
/// overlap in time.
class PrecisionScope {
  public:
    explicit PrecisionScope(int bits) : saved_(Real::default_precision()) {
        Real::default_precision(bits_to_digits10(bits));
    }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

  private:
    unsigned saved_;
};

inline Real to_real(const Rational& x) { return Real(numer(x)) / Real(denom(x)); }
inline Real to_real(const BigInt& x) { return Real(x); }

inline Real pow2(long e) { return boost::multiprecision::ldexp(Real(1), static_cast<int>(e)); }

inline Real pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

inline std::string to_decimal(const Real& x, int digits = 30) { return x.str(digits, std::ios_base::scientific); }

struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
    Complex(int r) : re(r), im(0) {}                                            // NOLINT

    static Complex i() { return {Real(0), Real(1)}; }

    Complex conj() const { return {re, -im}; }
    Real norm2() const { return re * re + im * im; }
    Real abs() const { return sqrt(norm2()); }

    Complex operator-() const { return {-re, -im}; }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.norm2();
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
};

inline Complex cexp(const Complex& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

/// i^n for integer n.
inline Complex ipow(long n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {Real(1), Real(0)};
        case 1: return {Real(0), Real(1)};
        case 2: return {Real(-1), Real(0)};
        default: return {Real(0), Real(-1)};
    }
}

inline Complex cpow(const Complex& z, long n) {
    Complex r(1), b = z;
    bool inv = n < 0;
    unsigned long e = static_cast<unsigned long>(inv ? -n : n);
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return inv ? Complex(1) / r : r;
}

/// Polynomial with complex floating coefficients, constant term first.
using ComplexPoly = std::vector<Complex>;

inline Complex eval(const ComplexPoly& p, const Complex& z) {
    Complex acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
    return acc;
}

inline ComplexPoly to_complex(const RatPoly& p) {
    ComplexPoly out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.emplace_back(to_real(c));
    return out;
}

}  // namespace zetapoly
