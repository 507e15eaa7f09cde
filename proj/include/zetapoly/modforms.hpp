#pragma once

// Level-one modular forms as truncated q-expansions: Eisenstein generators,
// the discriminant, cusp-form bases, Hecke operators and normalized
// eigenforms, plus floating-point completed L-values, period polynomials and
// Eichler integrals used to cross-check the exact period pipeline.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exactcore.hpp"
#include "highprec.hpp"

namespace zetapoly {

inline constexpr int kDefaultQPrec = 64;

/// Truncated q-series a_0 + a_1 q + ... + a_prec q^prec of weight `weight`.
struct QExpansion {
    int weight = 0;
    std::vector<Rational> coeffs;

    int prec() const { return static_cast<int>(coeffs.size()) - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs.at(n); }

    friend bool operator==(const QExpansion&, const QExpansion&) = default;
};

struct LValue {
    int s = 0;
    Real value;
    int prec_bits = kDefaultPrecBits;
};

inline bool supported_eigen_weight(int k) {
    return k == 12 || k == 16 || k == 18 || k == 20 || k == 22 || k == 26;
}

inline int dim_cusp_forms(int k) {
    if (k < 12 || k % 2 != 0) return 0;
    return k / 12 - (k % 12 == 2 ? 1 : 0);
}

inline BigInt divisor_power_sum(long n, unsigned p) {
    BigInt s(0);
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s += bmp::pow(BigInt(d), p);
        if (d != n / d) s += bmp::pow(BigInt(n / d), p);
    }
    return s;
}

namespace detail {

inline void check_prec(int prec) {
    if (prec < 2) throw PreconditionError("q-expansion precision must be at least 2");
}

inline QExpansion truncate(QExpansion f, int prec) {
    if (f.prec() < prec) throw PrecisionError("cannot extend a truncated q-expansion");
    f.coeffs.resize(static_cast<std::size_t>(prec) + 1);
    return f;
}

}  // namespace detail

/// Product truncated at the smaller precision.
inline QExpansion operator*(const QExpansion& a, const QExpansion& b) {
    const int prec = std::min(a.prec(), b.prec());
    QExpansion r{a.weight + b.weight, std::vector<Rational>(static_cast<std::size_t>(prec) + 1, Rational(0))};
    for (int i = 0; i <= prec; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; i + j <= prec; ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return r;
}

inline QExpansion eisenstein_qexp(int k, int prec) {
    detail::check_prec(prec);
    Rational scale;
    unsigned p;
    if (k == 4) {
        scale = 240;
        p = 3;
    } else if (k == 6) {
        scale = -504;
        p = 5;
    } else {
        throw UnsupportedWeight("Eisenstein generator only for weight 4 or 6, got " + std::to_string(k));
    }
    QExpansion e{k, std::vector<Rational>(static_cast<std::size_t>(prec) + 1)};
    e.coeffs[0] = 1;
    for (int n = 1; n <= prec; ++n) e.coeffs[n] = scale * Rational(divisor_power_sum(n, p));
    return e;
}

/// (E4^3 - E6^2) / 1728.
inline QExpansion delta_qexp(int prec) {
    detail::check_prec(prec);
    QExpansion e4 = eisenstein_qexp(4, prec);
    QExpansion e6 = eisenstein_qexp(6, prec);
    QExpansion a = e4 * e4 * e4;
    QExpansion b = e6 * e6;
    QExpansion d{12, {}};
    d.coeffs.reserve(a.coeffs.size());
    for (std::size_t n = 0; n < a.coeffs.size(); ++n) d.coeffs.push_back((a.coeffs[n] - b.coeffs[n]) / 1728);
    return d;
}

/// Basis of S_k from Delta^c * E4^a * E6^b (b <= 1), reduced so element i is
/// q^{i+1} + O(q^{dim+1}).
inline std::vector<QExpansion> cuspform_basis(int k, int prec) {
    detail::check_prec(prec);
    if (k % 2 != 0) throw UnsupportedWeight("odd weight " + std::to_string(k) + " has no level-one forms");
    std::vector<QExpansion> basis;
    if (k < 12) return basis;
    const QExpansion delta = delta_qexp(prec);
    const QExpansion e4 = eisenstein_qexp(4, prec);
    const QExpansion e6 = eisenstein_qexp(6, prec);
    const QExpansion one{0, [&] {
                             std::vector<Rational> c(static_cast<std::size_t>(prec) + 1, Rational(0));
                             c[0] = 1;
                             return c;
                         }()};
    QExpansion delta_pow = delta;
    for (int c = 1; 12 * c <= k; ++c, delta_pow = delta_pow * delta) {
        int rest = k - 12 * c;
        if (rest == 2) continue;
        QExpansion f = delta_pow;
        if (rest % 4 != 0) {
            f = f * e6;
            rest -= 6;
        }
        for (; rest > 0; rest -= 4) f = f * e4;
        f.weight = k;
        basis.push_back(std::move(f));
    }
    if (static_cast<int>(basis.size()) > prec)
        throw PrecisionError("precision too small to separate the cusp-form basis");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Rational lead = basis[i].coeffs[i + 1];
        for (auto& v : basis[i].coeffs) v /= lead;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (j == i || basis[j].coeffs[i + 1] == 0) continue;
            Rational f = basis[j].coeffs[i + 1];
            for (std::size_t n = 0; n < basis[j].coeffs.size(); ++n) basis[j].coeffs[n] -= f * basis[i].coeffs[n];
        }
    }
    return basis;
}

/// (T_m f)_n = sum_{d | gcd(m,n)} d^{k-1} a_{mn/d^2}, known for n <= prec/m.
inline QExpansion hecke_Tm(const QExpansion& f, int m) {
    if (m < 1) throw PreconditionError("Hecke index must be positive");
    const int out_prec = f.prec() / m;
    if (out_prec < 2)
        throw PrecisionError("q-expansion of precision " + std::to_string(f.prec()) + " too short for T_" +
                             std::to_string(m));
    QExpansion r{f.weight, std::vector<Rational>(static_cast<std::size_t>(out_prec) + 1, Rational(0))};
    for (int n = 0; n <= out_prec; ++n) {
        const long g = std::gcd(m, n);
        for (long d = 1; d <= g; ++d) {
            if (g % d) continue;
            const long idx = static_cast<long>(m) * n / (d * d);
            r.coeffs[n] += Rational(bmp::pow(BigInt(d), static_cast<unsigned>(f.weight - 1))) * f.coeffs[idx];
        }
    }
    return r;
}

/// T_m f known to at least `out_prec` terms.
inline QExpansion hecke_Tm(const QExpansion& f, int m, int out_prec) {
    if (m >= 1 && f.prec() < static_cast<long>(m) * out_prec)
        throw PrecisionError("need input precision " + std::to_string(m * out_prec) + " for T_" + std::to_string(m) +
                             " to precision " + std::to_string(out_prec));
    return detail::truncate(hecke_Tm(f, m), out_prec);
}

/// True when T_m f == f_m * f on every coefficient T_m f determines.
inline bool is_hecke_eigen(const QExpansion& f, int m) {
    QExpansion t = hecke_Tm(f, m);
    for (int n = 0; n <= t.prec(); ++n)
        if (t.coeffs[n] != f.coeffs[m] * f.coeffs[n]) return false;
    return true;
}

inline QExpansion eigenform(int k, int prec = kDefaultQPrec) {
    if (!supported_eigen_weight(k))
        throw UnsupportedWeight("weight " + std::to_string(k) + " unsupported: eigenforms are only built where dim S_k = 1 " +
                                "(k in {12,16,18,20,22,26}); dim S_" + std::to_string(k) + " = " +
                                std::to_string(dim_cusp_forms(k)));
    detail::check_prec(prec);
    const int work = std::max(prec, 12);
    QExpansion f = cuspform_basis(k, work).front();
    if (f.coeffs[1] != 1 || !is_hecke_eigen(f, 2) || !is_hecke_eigen(f, 3))
        throw InternalCheckFailure("weight " + std::to_string(k) + " basis element is not a Hecke eigenform");
    return detail::truncate(std::move(f), prec);
}

namespace detail {

/// Gamma(s, x) / x^s for integer s >= 1, via the finite sum
/// e^{-x} (s-1)! sum_{j<s} x^j / j!.
inline Real upper_gamma_scaled(int s, const Real& x) {
    Real term(1), sum(0);
    for (int j = 0; j < s; ++j) {
        if (j > 0) term = term * x / j;
        sum += term;
    }
    Real fact(1);
    for (int j = 2; j < s; ++j) fact *= j;
    return exp(-x) * fact * sum / pow(x, s);
}

inline int guard_bits(int prec_bits) { return prec_bits + 32; }

}  // namespace detail

/// Completed L-value Lambda(f, s) = int_0^inf f(iy) y^{s-1} dy for integer s in
/// the critical strip, summed as
///   sum_n a_n [Gamma(s,2 pi n)/(2 pi n)^s + (-1)^{k/2} Gamma(k-s,2 pi n)/(2 pi n)^{k-s}].
/// Coefficients are bounded by Deligne's 2 n^{k/2} to decide truncation.
inline LValue lambda_numeric(const QExpansion& f, int s, int prec_bits = kDefaultPrecBits) {
    const int k = f.weight;
    if (s < 1 || s > k - 1)
        throw PreconditionError("s = " + std::to_string(s) + " outside the critical strip 1..k-1");
    if (f.coeffs.empty() || f.coeffs[0] != 0) throw PreconditionError("lambda_numeric needs a cusp form");
    PrecisionScope scope(detail::guard_bits(prec_bits));
    const Real two_pi = 2 * pi();
    const Real eps = pow2(-prec_bits - 4);
    const int sign = (k / 2) % 2 == 0 ? 1 : -1;
    auto kernel = [&](long n) {
        Real x = two_pi * n;
        return detail::upper_gamma_scaled(s, x) + Real(sign) * detail::upper_gamma_scaled(k - s, x);
    };
    auto tail_bound = [&](long n) {
        Real x = two_pi * n;
        // Geometric tail factor 2 covers ratio e^{-2 pi} between successive terms.
        return 4 * pow(Real(n), Real(k) / 2) * (detail::upper_gamma_scaled(s, x) + detail::upper_gamma_scaled(k - s, x));
    };
    Real sum(0);
    for (long n = 1;; ++n) {
        if (tail_bound(n) < eps) break;
        if (n > f.prec())
            throw PrecisionError("q-expansion of length " + std::to_string(f.prec()) + " too short for " +
                                 std::to_string(prec_bits) + "-bit L-value");
        if (f.coeffs[n] != 0) sum += to_real(f.coeffs[n]) * kernel(n);
    }
    return {s, sum, prec_bits};
}

/// r_f(z) = int_0^{i inf} f(t)(t - z)^w dt
///        = sum_{n=0}^{w} C(w,n) (-z)^{w-n} i^{n+1} Lambda(f, n+1).
inline ComplexPoly period_polynomial_numeric(const QExpansion& f, int prec_bits = kDefaultPrecBits) {
    const int w = f.weight - 2;
    if (w < 0) throw PreconditionError("weight too small for a period polynomial");
    PrecisionScope scope(detail::guard_bits(prec_bits));
    ComplexPoly r(static_cast<std::size_t>(w) + 1);
    for (int n = 0; n <= w; ++n) {
        Real lam = lambda_numeric(f, n + 1, prec_bits).value;
        Real c = Real(binomial(w, n)) * lam * ((w - n) % 2 ? -1 : 1);
        r[static_cast<std::size_t>(w - n)] = c * ipow(n + 1);
    }
    return r;
}

/// Odd (sign = -1) or even (sign = +1) part of a polynomial.
inline ComplexPoly parity_part(const ComplexPoly& p, int parity) {
    ComplexPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        if ((i % 2 == 1) == (parity < 0)) out[i] = p[i];
    return out;
}

/// Relative spread of the coefficientwise ratios numeric/exact over the
/// support of `exact`; also fails (returns +inf) if `numeric` has weight off
/// that support or the ratios do not share a common complex phase.
inline Real proportionality_spread(const ComplexPoly& numeric, const RatPoly& exact) {
    std::vector<Complex> ratios;
    Real off_support(0), scale(0);
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        scale = std::max(scale, numeric[i].abs());
        if (exact[i] == 0) off_support = std::max(off_support, numeric[i].abs());
        else ratios.push_back(numeric[i] / Complex(to_real(exact[i])));
    }
    if (ratios.empty()) return Real(std::numeric_limits<double>::infinity());
    Complex mean(0);
    for (const auto& r : ratios) mean += r;
    mean = mean / Complex(Real(static_cast<long>(ratios.size())));
    Real spread = off_support / scale;
    for (const auto& r : ratios) spread = std::max(spread, (r - mean).abs() / mean.abs());
    return spread;
}

/// E_f(z) = -(k-2)!/(2 pi i)^{k-1} sum_{n>=1} a_n n^{1-k} e^{2 pi i n z}.
inline Complex eichler_integral_numeric(const QExpansion& f, const Complex& z, int prec_bits = kDefaultPrecBits) {
    if (z.im <= 0) throw PreconditionError("Eichler integral needs Im z > 0");
    const int k = f.weight;
    PrecisionScope scope(detail::guard_bits(prec_bits));
    const Real two_pi = 2 * pi();
    const Real eps = pow2(-prec_bits - 4);
    const Real decay = exp(-two_pi * z.im);
    const Real tail_factor = 2 / (1 - decay);
    Complex sum(0);
    const Complex step = cexp(Complex(Real(0), two_pi) * z);
    Complex e = step;
    Real mag = decay;
    for (long n = 1;; ++n, e = e * step, mag *= decay) {
        if (tail_factor * pow(Real(n), Real(2 - k) / 2) * mag < eps) break;
        if (n > f.prec())
            throw PrecisionError("q-expansion of length " + std::to_string(f.prec()) + " too short for Eichler integral");
        if (f.coeffs[n] == 0) continue;
        Real c = to_real(f.coeffs[n]) / pow(Real(n), k - 1);
        sum += c * e;
    }
    Complex pref = Complex(-Real(factorial(k - 2))) / cpow(Complex(Real(0), two_pi), k - 1);
    return pref * sum;
}

}  // namespace zetapoly
