#pragma once

// Rodriguez-Villegas transform: U(z)/(1-z)^d = sum_n H(n) z^n with H a
// polynomial of degree d-1. For self-inversive U of degree e < d, H satisfies
// H(x) = (-1)^{d-1} H(-d+e-x), vanishes at -1..-(d-e-1), and its remaining
// zeros lie on the symmetry line Re x = -(d-e)/2.

#include <string>
#include <vector>

#include "errors.hpp"
#include "exactcore.hpp"
#include "highprec.hpp"
#include "periods.hpp"

namespace zetapoly {

/// First N+1 Taylor coefficients of U(z)/(1-z)^d:
/// c_n = sum_j u_j C(n-j+d-1, d-1).
inline std::vector<Rational> series_coefficients(const RatPoly& u, int d, int n_max) {
    if (d < 1) throw PreconditionError("series_coefficients needs d >= 1");
    if (n_max < 0) throw PreconditionError("series_coefficients needs N >= 0");
    std::vector<Rational> c(static_cast<std::size_t>(n_max) + 1, Rational(0));
    for (int n = 0; n <= n_max; ++n)
        for (int j = 0; j <= std::min(n, u.degree()); ++j)
            if (u[j] != 0) c[n] += u[j] * Rational(binomial(n - j + d - 1, d - 1));
    return c;
}

/// H(x) - (-1)^{d-1} H(-d+e-x).
inline RatPoly functional_equation_defect(const RatPoly& h, int d, int e) {
    const RatPoly reflect{Rational(e - d), Rational(-1)};
    RatPoly mirrored = compose(h, reflect);
    if ((d - 1) % 2 != 0) mirrored = -mirrored;
    return h - mirrored;
}

/// prod_{j=1}^{count} (x + j).
inline RatPoly trivial_zero_factor(int count) {
    RatPoly f(Rational(1));
    for (int j = 1; j <= count; ++j) f = f * RatPoly{Rational(j), Rational(1)};
    return f;
}

/// Centre of the functional-equation symmetry x <-> -d+e-x.
inline Rational critical_line(int d, int e) { return Rational(e - d, 2); }

struct ZetaPolyRecord {
    int weight = 0;  // 0 when built from a bare polynomial
    int e = 0;
    int d = 0;
    RatPoly H;
    RatPoly Q;
    Rational critical_line;

    int trivial_zero_count() const { return d - e - 1; }
};

/// Lagrange interpolation through (i, values[i]), i = 0..n-1.
inline RatPoly interpolate_integer_nodes(const std::vector<Rational>& values) {
    const int n = static_cast<int>(values.size());
    RatPoly h;
    for (int i = 0; i < n; ++i) {
        if (values[i] == 0) continue;
        RatPoly basis(Rational(1));
        Rational denom(1);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            basis = basis * RatPoly{Rational(-j), Rational(1)};
            denom *= i - j;
        }
        h += (values[i] / denom) * basis;
    }
    return h;
}

/// Builds H from U and d and verifies: H(n) equals the series coefficient for
/// n <= 2d, the functional equation holds exactly, the trivial zeros are
/// present, and H divides exactly by the trivial-zero factor.
inline ZetaPolyRecord rv_polynomial(const RatPoly& u, int d, int weight = 0) {
    if (u.is_zero()) throw PreconditionError("rv_polynomial needs a nonzero U");
    const int e = u.degree();
    if (d <= e)
        throw PreconditionError("d = " + std::to_string(d) + " must exceed deg U = " + std::to_string(e));
    if (!is_self_inversive(u, e))
        throw PreconditionError("U = " + to_string(u) + " is not self-inversive; the functional equation needs it");

    const std::vector<Rational> coeffs = series_coefficients(u, d, 2 * d);
    ZetaPolyRecord rec;
    rec.weight = weight;
    rec.e = e;
    rec.d = d;
    rec.H = interpolate_integer_nodes({coeffs.begin(), coeffs.begin() + d});
    rec.critical_line = critical_line(d, e);

    if (rec.H.degree() != d - 1)
        throw InternalCheckFailure("H has degree " + std::to_string(rec.H.degree()) + ", expected " + std::to_string(d - 1));
    for (int n = 0; n <= 2 * d; ++n)
        if (rec.H(Rational(n)) != coeffs[n])
            throw InternalCheckFailure("H(" + std::to_string(n) + ") disagrees with the series coefficient");
    if (!functional_equation_defect(rec.H, d, e).is_zero())
        throw InternalCheckFailure("functional equation fails for " + to_string(rec.H));
    for (int j = 1; j <= d - e - 1; ++j)
        if (rec.H(Rational(-j)) != 0) throw InternalCheckFailure("H(-" + std::to_string(j) + ") != 0");
    auto [q, rem] = divrem(rec.H, trivial_zero_factor(d - e - 1));
    if (!rem.is_zero()) throw InternalCheckFailure("trivial-zero factor does not divide H");
    rec.Q = std::move(q);
    return rec;
}

inline ZetaPolyRecord rv_polynomial(const CFIQuotient& cfi, int d) { return rv_polynomial(cfi.U, d, cfi.weight); }

inline int default_d(int e) { return e + 2; }

/// (2 pi)^{-log_scale} * poly, the scale kept symbolic.
struct ScaledPoly {
    RatPoly poly;
    int log_scale = 0;
};

/// s(s-1)...(s-k) with scale (2 pi)^{-(k+1)}.
inline ScaledPoly zeta_projective_space(int k) {
    if (k < 0) throw PreconditionError("projective space dimension must be >= 0");
    RatPoly p = RatPoly::x();
    for (int j = 1; j <= k; ++j) p = p * RatPoly{Rational(-j), Rational(1)};
    return {std::move(p), k + 1};
}

/// Gamma_C(s) = (2 pi)^{-s} Gamma(s).
inline Real gamma_c(const Real& s, int prec_bits = kDefaultPrecBits) {
    if (s <= 0) throw PreconditionError("gamma_c needs s > 0");
    PrecisionScope scope(prec_bits + 16);
    Real sv = s;
    return pow(2 * pi(), -sv) * tgamma(sv);
}

}  // namespace zetapoly
