#pragma once

// Exact period-polynomial spaces for PSL(2,Z): the weight-w slash action, the
// kernel of the two period relations, normalized odd period polynomials for
// one-dimensional weights, and the quotient by the known real-root factor.

#include <string>
#include <vector>

#include "errors.hpp"
#include "exactcore.hpp"
#include "modforms.hpp"

namespace zetapoly {

/// Integer matrix (a b; c d) with ad - bc = 1 acting by z -> (az+b)/(cz+d).
struct MoebiusGen {
    long a, b, c, d;

    MoebiusGen(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {
        if (a * d - b * c != 1) throw PreconditionError("Moebius generator must have determinant 1");
    }

    static MoebiusGen S() { return {0, -1, 1, 0}; }
    static MoebiusGen U() { return {1, -1, 1, 0}; }
    static MoebiusGen identity() { return {1, 0, 0, 1}; }

    friend MoebiusGen operator*(const MoebiusGen& x, const MoebiusGen& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
};

enum class Parity { all, even, odd };

inline std::string to_string(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        default: return "all";
    }
}

/// (r|_w g)(z) = (cz+d)^w r((az+b)/(cz+d)).
inline RatPoly slash_action(const RatPoly& r, const MoebiusGen& g, int w) {
    if (r.degree() > w) throw PreconditionError("slash action: degree " + std::to_string(r.degree()) + " exceeds w = " +
                                                std::to_string(w));
    const RatPoly num{Rational(g.b), Rational(g.a)};
    const RatPoly den{Rational(g.d), Rational(g.c)};
    // (cz+d)^i for i = 0..w.
    std::vector<RatPoly> den_pow(static_cast<std::size_t>(w) + 1);
    den_pow[0] = RatPoly(Rational(1));
    for (int i = 1; i <= w; ++i) den_pow[i] = den_pow[i - 1] * den;
    RatPoly out;
    RatPoly num_pow(Rational(1));
    for (int j = 0; j <= r.degree(); ++j, num_pow = num_pow * num) {
        if (r[j] == 0) continue;
        out += r[j] * (num_pow * den_pow[static_cast<std::size_t>(w - j)]);
    }
    return out;
}

/// r|(1+S) and r|(1+U+U^2).
inline RatPoly s_relation(const RatPoly& r, int w) { return r + slash_action(r, MoebiusGen::S(), w); }
inline RatPoly u_relation(const RatPoly& r, int w) {
    const MoebiusGen u = MoebiusGen::U();
    return r + slash_action(r, u, w) + slash_action(r, u * u, w);
}

struct PeriodSpace {
    int w = 0;
    Parity parity = Parity::all;
    std::vector<RatPoly> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Kernel of r -> (r|(1+S), r|(1+U+U^2)) on polynomials of degree <= w,
/// restricted to monomials of the requested parity.
inline PeriodSpace relations_kernel(int w, Parity parity) {
    if (w < 2 || w % 2 != 0) throw PreconditionError("relations_kernel needs even w >= 2");
    std::vector<int> exps;
    for (int j = 0; j <= w; ++j) {
        if (parity == Parity::even && j % 2 != 0) continue;
        if (parity == Parity::odd && j % 2 == 0) continue;
        exps.push_back(j);
    }
    const std::size_t rows = 2 * (static_cast<std::size_t>(w) + 1);
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(exps.size(), Rational(0)));
    for (std::size_t col = 0; col < exps.size(); ++col) {
        RatPoly mono = RatPoly::monomial(Rational(1), static_cast<std::size_t>(exps[col]));
        RatPoly s = s_relation(mono, w);
        RatPoly u = u_relation(mono, w);
        for (int i = 0; i <= w; ++i) {
            m[static_cast<std::size_t>(i)][col] = s[i];
            m[static_cast<std::size_t>(w + 1 + i)][col] = u[i];
        }
    }
    PeriodSpace space{w, parity, {}};
    for (const auto& v : nullspace(std::move(m), exps.size())) {
        RatPoly r;
        for (std::size_t col = 0; col < exps.size(); ++col)
            if (v[col] != 0) r += RatPoly::monomial(v[col], static_cast<std::size_t>(exps[col]));
        space.basis.push_back(std::move(r));
    }
    return space;
}

/// Generator of the odd period space for a weight with dim S_k = 1, scaled to
/// a primitive integer polynomial with positive leading coefficient.
inline RatPoly odd_period_polynomial(int k) {
    if (!supported_eigen_weight(k))
        throw UnsupportedWeight("odd period polynomial needs dim S_k = 1 (k in {12,16,18,20,22,26}), got k = " +
                                std::to_string(k));
    PeriodSpace space = relations_kernel(k - 2, Parity::odd);
    if (space.dim() != 1)
        throw InternalCheckFailure("odd period space for k = " + std::to_string(k) + " has dimension " +
                                   std::to_string(space.dim()));
    return to_rational(primitive_part(space.basis.front()));
}

/// z(z^2-4)(z^2-1/4)(z^2-1)^2, expanded.
inline const RatPoly& cfi_divisor() {
    static const RatPoly d = [] {
        const RatPoly z = RatPoly::x();
        const RatPoly zz = z * z;
        const RatPoly a = zz - RatPoly(Rational(4));
        const RatPoly b = zz - RatPoly(Rational(1, 4));
        const RatPoly c = zz - RatPoly(Rational(1));
        return z * a * b * c * c;
    }();
    return d;
}

/// U(1/z) z^e == U(z).
inline bool is_self_inversive(const RatPoly& u, int e) {
    if (u.is_zero() || u.degree() != e) return false;
    return reversed(u, e) == u;
}

struct CFIQuotient {
    int weight = 0;
    int e = 0;
    RatPoly U;
};

/// U_f = r^-_f / [z(z^2-4)(z^2-1/4)(z^2-1)^2], required to be exact.
inline CFIQuotient cfi_quotient(const RatPoly& rminus, int k) {
    const int w = k - 2;
    if (k < 12) throw PreconditionError("CFI quotient needs k >= 12");
    if (rminus.degree() > w) throw PreconditionError("period polynomial degree exceeds w");
    auto [quot, rem] = divrem(rminus, cfi_divisor());
    if (!rem.is_zero())
        throw DivisibilityError("period polynomial " + to_string(rminus) +
                                " is not divisible by z(z^2-4)(z^2-1/4)(z^2-1)^2; remainder " + to_string(rem));
    CFIQuotient q{k, w - 10, std::move(quot)};
    if (q.U.degree() != q.e)
        throw DivisibilityError("quotient has degree " + std::to_string(q.U.degree()) + ", expected w - 10 = " +
                                std::to_string(q.e));
    if (!is_self_inversive(q.U, q.e))
        throw PreconditionError("CFI quotient " + to_string(q.U) + " is not self-inversive");
    return q;
}

inline CFIQuotient cfi_quotient_for_weight(int k) { return cfi_quotient(odd_period_polynomial(k), k); }

}  // namespace zetapoly
