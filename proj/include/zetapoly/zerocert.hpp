#pragma once

// Exact zero-location certificates via Sturm sequences over Q, and a
// floating-point Aberth root finder used only for reports.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exactcore.hpp"
#include "habiro.hpp"
#include "highprec.hpp"

namespace zetapoly {

/// Sturm sequence of the squarefree part of a polynomial.
struct SturmChain {
    RatPoly squarefree_input;
    std::vector<RatPoly> polys;
};

inline SturmChain sturm_chain(const RatPoly& p) {
    if (p.is_zero()) throw PreconditionError("Sturm chain of the zero polynomial");
    SturmChain chain{squarefree(p), {}};
    chain.polys.push_back(chain.squarefree_input);
    RatPoly next = derivative(chain.squarefree_input);
    while (!next.is_zero()) {
        chain.polys.push_back(next);
        const std::size_t n = chain.polys.size();
        next = -(chain.polys[n - 2] % chain.polys[n - 1]);
    }
    return chain;
}

namespace detail {

inline int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

/// Sign variations at x, or at -inf / +inf when x is empty and `at_plus_inf`.
inline int variations_at(const SturmChain& chain, const std::optional<Rational>& x, bool at_plus_inf) {
    std::vector<int> signs;
    signs.reserve(chain.polys.size());
    for (const auto& p : chain.polys) {
        if (x) {
            signs.push_back(sign(p(*x)));
        } else {
            int s = sign(p.lead());
            if (!at_plus_inf && p.degree() % 2 != 0) s = -s;
            signs.push_back(s);
        }
    }
    return count_variations(signs);
}

}  // namespace detail

/// Distinct real roots in (a, b]; empty bounds mean -inf / +inf.
inline int sturm_count(const SturmChain& chain, const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (a && b && *a >= *b) return 0;
    return detail::variations_at(chain, a, false) - detail::variations_at(chain, b, true);
}

inline int sturm_count(const RatPoly& p, const std::optional<Rational>& a, const std::optional<Rational>& b) {
    return sturm_count(sturm_chain(p), a, b);
}

enum class CertKind { unit_circle, critical_line };

inline std::string to_string(CertKind k) { return k == CertKind::unit_circle ? "unit_circle" : "critical_line"; }

struct Certificate {
    CertKind kind = CertKind::unit_circle;
    bool passed = false;
    int counted_roots = 0;
    int expected_roots = 0;
    std::string witness;
    RatPoly transformed;  // V(t) or A(v)
};

/// The V with z^{-e/2} U(z) = V(z + 1/z), for self-inversive U of even degree.
inline RatPoly palindromic_reduction(const RatPoly& u) {
    const int e = u.degree();
    if (e < 0 || e % 2 != 0) throw PreconditionError("unit-circle reduction needs even degree, got " + std::to_string(e));
    if (reversed(u, e) != u) throw PreconditionError("polynomial " + to_string(u) + " is not self-inversive");
    const int h = e / 2;
    RatPoly v(u[static_cast<std::size_t>(h)]);
    for (int j = 1; j <= h; ++j) v += u[static_cast<std::size_t>(h + j)] * to_rational(chebyshev_T(j));
    // z^h V(z + 1/z) must give back U.
    const RatPoly z2p1{Rational(1), Rational(0), Rational(1)};
    RatPoly back;
    RatPoly pw(Rational(1));
    for (int i = 0; i <= v.degree(); ++i, pw = pw * z2p1)
        back += v[static_cast<std::size_t>(i)] * (pw * RatPoly::monomial(Rational(1), static_cast<std::size_t>(h - i)));
    if (back != u) throw InternalCheckFailure("Chebyshev-basis expansion left a remainder");
    return v;
}

/// All zeros of U on |z| = 1 and none real  <=>  all roots of V real and in
/// the open interval (-2, 2).
inline Certificate unit_circle_certify(const RatPoly& u) {
    Certificate cert;
    cert.kind = CertKind::unit_circle;
    cert.transformed = palindromic_reduction(u);
    const RatPoly& v = cert.transformed;
    cert.expected_roots = u.degree() / 2;
    if (v.degree() <= 0) {
        cert.passed = true;
        cert.witness = "V(t) constant, trivially certified";
        return cert;
    }
    const SturmChain chain = sturm_chain(v);
    const RatPoly& sqf = chain.squarefree_input;
    int inside = sturm_count(chain, Rational(-2), Rational(2));
    if (sqf(Rational(2)) == 0) --inside;
    cert.passed = inside == sqf.degree();
    const bool simple = sqf.degree() == v.degree();
    cert.counted_roots = cert.passed ? v.degree() : inside;
    cert.witness = "V(t), deg " + std::to_string(v.degree()) + (simple ? "" : ", repeated roots") + ", " +
                   std::to_string(inside) + " distinct in (-2,2)";
    return cert;
}

/// Q(2c - x) == sign * Q(x)  =>  Q(c+u) = A(u^2) or u A(u^2); all zeros on
/// Re x = c  <=>  every root of A real and <= 0.
inline Certificate critical_line_certify(const RatPoly& q, const Rational& c, int sym_sign) {
    if (sym_sign != 1 && sym_sign != -1) throw PreconditionError("symmetry sign must be +1 or -1");
    if (q.is_zero()) throw PreconditionError("critical-line certificate of the zero polynomial");
    const RatPoly mirrored = compose(q, RatPoly{2 * c, Rational(-1)});
    if (mirrored != Rational(sym_sign) * q)
        throw PreconditionError("Q(2c - x) != " + std::string(sym_sign > 0 ? "" : "-") + "Q(x) for c = " + to_string(c));
    const RatPoly shifted = compose(q, RatPoly{c, Rational(1)});
    const std::size_t parity = sym_sign > 0 ? 0 : 1;
    std::vector<Rational> a;
    for (std::size_t i = 0; i < shifted.size(); ++i) {
        if (i % 2 != parity) {
            if (shifted[i] != 0) throw PreconditionError("shifted polynomial has mixed parity");
            continue;
        }
        a.push_back(shifted[i]);
    }
    Certificate cert;
    cert.kind = CertKind::critical_line;
    cert.transformed = RatPoly(std::move(a));
    const RatPoly& av = cert.transformed;
    cert.expected_roots = q.degree();
    if (av.degree() <= 0) {
        cert.passed = true;
        cert.counted_roots = q.degree();
        cert.witness = "A(v) constant, trivially certified";
        return cert;
    }
    const SturmChain chain = sturm_chain(av);
    const int nonpos = sturm_count(chain, std::nullopt, Rational(0));
    cert.passed = nonpos == chain.squarefree_input.degree();
    cert.counted_roots = cert.passed ? q.degree() : 2 * nonpos + static_cast<int>(parity);
    cert.witness = "A(v), deg " + std::to_string(av.degree());
    return cert;
}

struct RootsResult {
    std::vector<Complex> roots;
    bool converged = false;
    int iterations = 0;
};

/// All complex roots by Aberth iteration from a jittered circle, then Newton
/// polish. `converged` reports |p(z)| < 2^{-prec_bits/2} * ||p||_1 for every
/// root; on failure the partial approximations are still returned.
inline RootsResult roots_numeric(ComplexPoly p, int prec_bits = kDefaultPrecBits) {
    while (!p.empty() && p.back().norm2() == 0) p.pop_back();
    if (p.empty()) throw PreconditionError("roots of the zero polynomial");
    const int n = static_cast<int>(p.size()) - 1;
    RootsResult res;
    if (n == 0) {
        res.converged = true;
        return res;
    }
    PrecisionScope scope(prec_bits + 32);
    ComplexPoly dp(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) dp[i - 1] = Real(i) * p[i];

    const Real lead = p.back().abs();
    const Real radius = (1 + pow(p.front().abs() / lead, Real(1) / n)) / 2;
    const Real two_pi = 2 * pi();
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Real theta = two_pi * k / n + Real(0.4) + Real(0.07) * k / n;
        z[k] = {radius * cos(theta), radius * sin(theta)};
    }

    const Real tol = pow2(-prec_bits + 4);
    constexpr int kIterationCap = 200;
    for (res.iterations = 1; res.iterations <= kIterationCap; ++res.iterations) {
        Real max_step(0);
        for (int k = 0; k < n; ++k) {
            Complex pv = eval(p, z[k]);
            if (pv.norm2() == 0) continue;
            Complex ratio = pv / eval(dp, z[k]);
            Complex repulse(0);
            for (int j = 0; j < n; ++j)
                if (j != k) repulse += Complex(1) / (z[k] - z[j]);
            Complex step = ratio / (Complex(1) - ratio * repulse);
            z[k] -= step;
            max_step = std::max(max_step, step.abs() / std::max(Real(1), z[k].abs()));
        }
        if (max_step < tol) break;
    }
    for (auto& zk : z) {
        for (int it = 0; it < 3; ++it) {
            Complex d = eval(dp, zk);
            if (d.norm2() == 0) break;
            zk -= eval(p, zk) / d;
        }
    }

    Real norm(0);
    for (const auto& c : p) norm += c.abs();
    const Real bound = pow2(-prec_bits / 2) * norm;
    res.converged = true;
    for (const auto& zk : z)
        if (eval(p, zk).abs() >= bound) res.converged = false;
    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
        return a.re != b.re ? a.re < b.re : a.im < b.im;
    });
    res.roots = std::move(z);
    return res;
}

inline RootsResult roots_numeric(const RatPoly& p, int prec_bits = kDefaultPrecBits) {
    PrecisionScope scope(prec_bits + 32);
    return roots_numeric(to_complex(p), prec_bits);
}

inline Real max_unit_circle_deviation(const std::vector<Complex>& roots) {
    Real m(0);
    for (const auto& r : roots) m = std::max(m, abs(r.abs() - 1));
    return m;
}

inline Real max_line_deviation(const std::vector<Complex>& roots, const Rational& c) {
    Real m(0);
    const Real cr = to_real(c);
    for (const auto& r : roots) m = std::max(m, abs(r.re - cr));
    return m;
}

}  // namespace zetapoly
