#pragma once

// Truncated Habiro ring Z[q]/((q)_N), (q)_N = (1-q)(1-q^2)...(1-q^N), its
// evaluations at roots of unity in Z[x]/Phi_m, and the toric (psi^k q = q^k)
// and Chebyshev (psi^k r = T_k(r)) Adams operations, related through
// r = q + q^{-1}.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exactcore.hpp"

namespace zetapoly {

/// (1-q)(1-q^2)...(1-q^n); leading coefficient (-1)^n.
inline IntPoly q_pochhammer(int n) {
    IntPoly p(BigInt(1));
    for (int j = 1; j <= n; ++j) p = p * (IntPoly(BigInt(1)) - IntPoly::monomial(BigInt(1), static_cast<std::size_t>(j)));
    return p;
}

/// Substitute q -> q^k.
inline IntPoly substitute_power(const IntPoly& p, int k) {
    if (p.is_zero()) return p;
    std::vector<BigInt> c(static_cast<std::size_t>(p.degree()) * static_cast<std::size_t>(k) + 1, BigInt(0));
    for (std::size_t i = 0; i < p.size(); ++i) c[i * static_cast<std::size_t>(k)] = p[i];
    return IntPoly(std::move(c));
}

/// Residue class modulo (q)_level.
class HabiroTrunc {
  public:
    HabiroTrunc(int level, const IntPoly& representative) : level_(level) {
        if (level < 1) throw PreconditionError("Habiro truncation level must be >= 1");
        residue_ = representative % modulus(level);
    }

    static HabiroTrunc constant(int level, long c) { return {level, IntPoly(BigInt(c))}; }
    static HabiroTrunc q(int level) { return {level, IntPoly::x()}; }

    static IntPoly modulus(int level) { return q_pochhammer(level); }

    int level() const { return level_; }
    const IntPoly& residue() const { return residue_; }
    int modulus_degree() const { return level_ * (level_ + 1) / 2; }

    /// Image under Z[q]/(q)_level -> Z[q]/(q)_m, m <= level.
    HabiroTrunc reduce(int m) const {
        if (m > level_) throw PreconditionError("cannot lift a level-" + std::to_string(level_) + " element to level " +
                                                std::to_string(m));
        return {m, residue_};
    }

    friend HabiroTrunc operator+(const HabiroTrunc& a, const HabiroTrunc& b) {
        check_same(a, b);
        return {a.level_, a.residue_ + b.residue_};
    }
    friend HabiroTrunc operator-(const HabiroTrunc& a, const HabiroTrunc& b) {
        check_same(a, b);
        return {a.level_, a.residue_ - b.residue_};
    }
    friend HabiroTrunc operator*(const HabiroTrunc& a, const HabiroTrunc& b) {
        check_same(a, b);
        return {a.level_, a.residue_ * b.residue_};
    }
    friend bool operator==(const HabiroTrunc& a, const HabiroTrunc& b) {
        return a.level_ == b.level_ && a.residue_ == b.residue_;
    }

    HabiroTrunc pow(unsigned e) const {
        HabiroTrunc r = constant(level_, 1), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b;
            b = b * b;
        }
        return r;
    }

  private:
    static void check_same(const HabiroTrunc& a, const HabiroTrunc& b) {
        if (a.level_ != b.level_) throw PreconditionError("Habiro elements at different levels");
    }

    int level_;
    IntPoly residue_;
};

namespace detail {

/// 1 + sum_{n=1}^{level-1} q^n (q)_n; higher terms vanish mod (q)_level.
inline IntPoly qinv_series(int level) {
    IntPoly s(BigInt(1));
    IntPoly poch(BigInt(1));
    for (int n = 1; n < level; ++n) {
        poch = poch * (IntPoly(BigInt(1)) - IntPoly::monomial(BigInt(1), static_cast<std::size_t>(n)));
        s += IntPoly::monomial(BigInt(1), static_cast<std::size_t>(n)) * poch;
    }
    return s;
}

}  // namespace detail

/// q^{-1} = 1 + sum_{n>=1} q^n (1-q)...(1-q^n), checked against q * q^{-1} = 1.
inline HabiroTrunc habiro_qinv(int level) {
    HabiroTrunc inv(level, detail::qinv_series(level));
    if (!(HabiroTrunc::q(level) * inv == HabiroTrunc::constant(level, 1)))
        throw InternalCheckFailure("q * q^{-1} != 1 at level " + std::to_string(level));
    return inv;
}

/// r = 1 + q + sum_{n>=1} q^n (1-q)...(1-q^n).
inline HabiroTrunc habiro_r(int level) {
    return {level, detail::qinv_series(level) + IntPoly::x()};
}

/// Phi_m by dividing x^m - 1 by Phi_d for the proper divisors d of m.
inline IntPoly cyclotomic_poly(int m) {
    if (m < 1) throw PreconditionError("cyclotomic index must be >= 1");
    IntPoly p = IntPoly::monomial(BigInt(1), static_cast<std::size_t>(m)) - IntPoly(BigInt(1));
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = exact_div(p, cyclotomic_poly(d));
    return p;
}

/// Element of Z[x]/Phi_m(x): the value at a primitive m-th root of unity.
class CycloInt {
  public:
    CycloInt(int conductor, const IntPoly& representative)
        : conductor_(conductor), phi_(cyclotomic_poly(conductor)), coords_(representative % phi_) {}

    static CycloInt zeta(int m) { return {m, IntPoly::x()}; }

    int conductor() const { return conductor_; }
    const IntPoly& coords() const { return coords_; }

    /// Ring map zeta -> zeta^{-1} = zeta^{m-1}.
    CycloInt involution() const {
        IntPoly inv = conductor_ == 1 ? IntPoly(BigInt(1)) : IntPoly::monomial(BigInt(1), static_cast<std::size_t>(conductor_ - 1));
        return {conductor_, compose(coords_, inv)};
    }

    friend CycloInt operator+(const CycloInt& a, const CycloInt& b) {
        check_same(a, b);
        return {a.conductor_, a.coords_ + b.coords_};
    }
    friend CycloInt operator*(const CycloInt& a, const CycloInt& b) {
        check_same(a, b);
        return {a.conductor_, a.coords_ * b.coords_};
    }
    friend bool operator==(const CycloInt& a, const CycloInt& b) {
        return a.conductor_ == b.conductor_ && a.coords_ == b.coords_;
    }

  private:
    static void check_same(const CycloInt& a, const CycloInt& b) {
        if (a.conductor_ != b.conductor_) throw PreconditionError("cyclotomic integers of different conductors");
    }

    int conductor_;
    IntPoly phi_;
    IntPoly coords_;
};

/// Value at a primitive m-th root of unity; needs Phi_m | (q)_level, i.e.
/// level >= m.
inline CycloInt eval_at_root(const HabiroTrunc& x, int m) {
    if (m < 1) throw PreconditionError("conductor must be >= 1");
    if (m > x.level())
        throw PreconditionError("level " + std::to_string(x.level()) + " too small for conductor " + std::to_string(m));
    return {m, x.residue()};
}

/// T_0 = 2, T_1 = r, T_{k+1} = r T_k - T_{k-1}; T_k(q + 1/q) = q^k + q^{-k}.
inline IntPoly chebyshev_T(int k) {
    if (k < 0) throw PreconditionError("Chebyshev index must be >= 0");
    IntPoly prev(BigInt(2)), cur = IntPoly::x();
    if (k == 0) return prev;
    for (int i = 1; i < k; ++i) {
        IntPoly next = IntPoly::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// psi^k(q) = q^k, at the same level.
inline HabiroTrunc psi_toric(const HabiroTrunc& x, int k) {
    if (k < 1) throw PreconditionError("Adams index must be >= 1");
    return {x.level(), substitute_power(x.residue(), k)};
}

/// psi^k(p(r)) = p(T_k(r)).
inline IntPoly psi_chebyshev(const IntPoly& p, int k) {
    if (k < 1) throw PreconditionError("Adams index must be >= 1");
    return compose(p, chebyshev_T(k));
}

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline bool all_divisible(const IntPoly& p, long m) {
    for (const auto& c : p.coeffs())
        if (c % m != 0) return false;
    return true;
}

/// psi^p(x) == x^p mod p Z[r].
inline bool frobenius_congruence_check(long p, const IntPoly& x) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    IntPoly power(BigInt(1));
    for (long i = 0; i < p; ++i) power = power * x;
    return all_divisible(psi_chebyshev(x, static_cast<int>(p)) - power, p);
}

/// psi^p(x) == x^p mod p Z[q]/((q)_N).
inline bool toric_frobenius_check(long p, const HabiroTrunc& x) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    HabiroTrunc diff = psi_toric(x, static_cast<int>(p)) - x.pow(static_cast<unsigned>(p));
    return all_divisible(diff.residue(), p);
}

/// p(r) with r = habiro_r(level).
inline HabiroTrunc embed_chebyshev(const IntPoly& p, int level) {
    const HabiroTrunc r = habiro_r(level);
    HabiroTrunc acc = HabiroTrunc::constant(level, 0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * r + HabiroTrunc(level, IntPoly(p[static_cast<std::size_t>(i)]));
    return acc;
}

/// q^k + q^{-k} == T_k(q + q^{-1}) mod (q)_N.
inline bool chebyshev_compatibility_check(int k, int level) {
    return psi_toric(habiro_r(level), k) == embed_chebyshev(chebyshev_T(k), level);
}

inline bool is_involution_invariant(const HabiroTrunc& x, int m) {
    CycloInt v = eval_at_root(x, m);
    return v == v.involution();
}

/// Evaluates p(r) at conductor m and tests invariance under zeta -> zeta^{-1}.
inline bool involution_invariance_check(const IntPoly& p, int m) {
    if (m < 1) throw PreconditionError("conductor must be >= 1");
    return is_involution_invariant(embed_chebyshev(p, m), m);
}

/// Largest e with Phi_d^e | p (p nonzero).
inline int cyclotomic_multiplicity(IntPoly p, int d) {
    if (p.is_zero()) throw PreconditionError("multiplicity in the zero polynomial");
    const IntPoly phi = cyclotomic_poly(d);
    int e = 0;
    for (;;) {
        auto [quot, rem] = divrem(p, phi);
        if (!rem.is_zero()) return e;
        p = std::move(quot);
        ++e;
    }
}

/// Phi_d^{floor(N/d)} | prod_{j<=N} (1 - q^{kj}) for all d <= N, so q -> q^k
/// preserves the ideal ((q)_N).
inline bool toric_substitution_preserves_ideal(int k, int level) {
    const IntPoly image = substitute_power(q_pochhammer(level), k);
    for (int d = 1; d <= level; ++d)
        if (cyclotomic_multiplicity(image, d) < level / d) return false;
    return true;
}

inline constexpr std::uint32_t kFixtureSeed = 20141201u;

/// Deterministic integer polynomials of degree <= max_degree with
/// coefficients in [-bound, bound]. Uses raw mt19937 output (portable).
inline std::vector<IntPoly> fixture_polynomials(int count, int max_degree = 5, int bound = 9,
                                                std::uint32_t seed = kFixtureSeed) {
    std::mt19937 gen(seed);
    std::vector<IntPoly> out;
    while (static_cast<int>(out.size()) < count) {
        const int deg = static_cast<int>(gen() % static_cast<std::uint32_t>(max_degree + 1));
        std::vector<BigInt> c;
        for (int i = 0; i <= deg; ++i)
            c.emplace_back(static_cast<long>(gen() % static_cast<std::uint32_t>(2 * bound + 1)) - bound);
        IntPoly p(std::move(c));
        if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
}

/// Named results of the lambda-structure checks at one truncation level.
inline std::vector<std::pair<std::string, bool>> habiro_battery(int level) {
    if (level < 1) throw PreconditionError("Habiro level must be >= 1");
    std::vector<std::pair<std::string, bool>> out;
    auto add = [&](std::string name, bool ok) { out.emplace_back(std::move(name), ok); };

    const HabiroTrunc q = HabiroTrunc::q(level);
    const HabiroTrunc r = habiro_r(level);
    const HabiroTrunc qinv = habiro_qinv(level);
    add("r_equals_q_plus_qinv", r == q + qinv);
    add("q_times_qinv_is_one", q * qinv == HabiroTrunc::constant(level, 1));

    bool coherent = true;
    for (int m = 1; m < level; ++m) coherent = coherent && habiro_r(level).reduce(m) == habiro_r(m);
    add("projective_limit_coherence", coherent);

    bool eval_ok = true;
    for (int m = 1; m <= level; ++m) {
        CycloInt z = CycloInt::zeta(m);
        eval_ok = eval_ok && eval_at_root(r, m) == z + z.involution();
    }
    add("r_at_roots_is_zeta_plus_inverse", eval_ok);

    bool compat = true;
    for (int k = 1; k <= 8; ++k) compat = compat && chebyshev_compatibility_check(k, level);
    add("toric_restricts_to_chebyshev", compat);

    bool ideal = true;
    for (int k = 1; k <= 8; ++k) ideal = ideal && toric_substitution_preserves_ideal(k, level);
    add("toric_substitution_preserves_ideal", ideal);

    bool toric_comp = true;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (const auto& x : {q, r})
                toric_comp = toric_comp && psi_toric(psi_toric(x, b), a) == psi_toric(x, a * b);
    add("toric_psi_multiplicative", toric_comp);

    bool toric_frob = true;
    for (long p : {2L, 3L, 5L})
        for (const auto& x : {q, r}) toric_frob = toric_frob && toric_frobenius_check(p, x);
    add("toric_frobenius_congruence", toric_frob);

    bool cheb_comp = true;
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= 8; ++b) cheb_comp = cheb_comp && compose(chebyshev_T(a), chebyshev_T(b)) == chebyshev_T(a * b);
    add("chebyshev_psi_multiplicative", cheb_comp);

    std::vector<IntPoly> elems = fixture_polynomials(20);
    elems.insert(elems.begin(), IntPoly::x());
    bool cheb_frob = true;
    for (long p : {2L, 3L, 5L, 7L, 11L})
        for (const auto& x : elems) cheb_frob = cheb_frob && frobenius_congruence_check(p, x);
    add("chebyshev_frobenius_congruence", cheb_frob);

    bool invariant = true;
    for (int m = 1; m <= level; ++m)
        for (const auto& x : elems) invariant = invariant && is_involution_invariant(embed_chebyshev(x, level), m);
    add("chebyshev_images_involution_invariant", invariant);

    if (level >= 3) {
        bool witness = true;
        for (int m : {3, 4})
            if (m <= level) witness = witness && !is_involution_invariant(q, m);
        add("q_not_involution_invariant", witness);
    }
    return out;
}

}  // namespace zetapoly
