#pragma once

// Exact arithmetic kernel: arbitrary-precision integers and rationals (GMP
// through Boost.Multiprecision) and dense univariate polynomials over them.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "errors.hpp"

namespace zetapoly {

namespace bmp = boost::multiprecision;

using BigInt = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;

template <class T>
inline constexpr bool is_field_v = std::is_same_v<T, Rational>;

inline BigInt numer(const Rational& x) { return bmp::numerator(x); }
inline BigInt denom(const Rational& x) { return bmp::denominator(x); }

/// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& x) {
    if (denom(x) == 1) return numer(x).str();
    return numer(x).str() + "/" + denom(x).str();
}

inline std::string to_string(const BigInt& x) { return x.str(); }

inline Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
        BigInt p(std::string(s.substr(0, slash)));
        BigInt q(std::string(s.substr(slash + 1)));
        if (q == 0) throw PreconditionError("zero denominator in rational literal");
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw PreconditionError("malformed rational literal: " + std::string(s));
    }
}

inline int sign(const Rational& x) { return x.sign(); }
inline int sign(const BigInt& x) { return x.sign(); }

inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    BigInt r(1);
    k = std::min(k, n - k);
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt factorial(long n) {
    BigInt r(1);
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Dense univariate polynomial; coefficient i multiplies x^i. The zero
/// polynomial has an empty coefficient list, otherwise the leading
/// coefficient is nonzero.
template <class T>
class Poly {
  public:
    using value_type = T;

    Poly() = default;
    Poly(std::initializer_list<T> c) : c_(c) { trim(); }
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
    // Implicit from scalars so constants mix freely with polynomials.
    Poly(const T& constant) {  // NOLINT(google-explicit-constructor)
        if (constant != 0) c_.push_back(constant);
    }
    Poly(int constant) : Poly(T(constant)) {}  // NOLINT(google-explicit-constructor)

    static Poly monomial(const T& c, std::size_t n) {
        if (c == 0) return {};
        std::vector<T> v(n + 1, T(0));
        v[n] = c;
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    const std::vector<T>& coeffs() const { return c_; }

    T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& lead() const {
        if (c_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
        return c_.back();
    }

    void set(std::size_t i, const T& v) {
        if (i >= c_.size()) c_.resize(i + 1, T(0));
        c_[i] = v;
        trim();
    }

    /// Horner evaluation in any ring that accepts T-scalars.
    template <class R>
    R eval(const R& at) const {
        R acc = R(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + R(*it);
        return acc;
    }
    T operator()(const T& at) const { return eval<T>(at); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const T& s, const Poly& p) {
        if (s == 0) return {};
        Poly r = p;
        for (auto& v : r.c_) v *= s;
        return r;
    }
    friend Poly operator*(const Poly& p, const T& s) { return s * p; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (int i = p.degree(); i >= 0; --i) {
            const T& v = p.c_[static_cast<std::size_t>(i)];
            if (v == 0) continue;
            if (!first) os << (v > 0 ? " + " : " - ");
            else if (v < 0) os << "-";
            T a = v < 0 ? T(-v) : v;
            if (a != 1 || i == 0) os << to_string(a);
            if (i > 0) os << (a != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
            first = false;
        }
        return os;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<T> c_;
};

using RatPoly = Poly<Rational>;
using IntPoly = Poly<BigInt>;

template <class T>
std::string to_string(const Poly<T>& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

template <class T>
std::vector<std::string> coeff_strings(const Poly<T>& p) {
    std::vector<std::string> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

/// Quotient and remainder with p = quot*q + rem, deg rem < deg q. Over the
/// integers the divisor must have leading coefficient +-1.
template <class T>
std::pair<Poly<T>, Poly<T>> divrem(const Poly<T>& p, const Poly<T>& q) {
    if (q.is_zero()) throw PreconditionError("polynomial division by zero");
    if constexpr (!is_field_v<T>) {
        if (q.lead() != 1 && q.lead() != -1)
            throw PreconditionError("integer polynomial division needs a unit leading coefficient");
    }
    if (p.degree() < q.degree()) return {Poly<T>{}, p};
    std::vector<T> rem = p.coeffs();
    const std::size_t dq = static_cast<std::size_t>(q.degree());
    std::vector<T> quot(rem.size() - dq, T(0));
    const T& lc = q.lead();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const T& top = rem[k + dq];
        if (top == 0) continue;
        T f;
        if constexpr (is_field_v<T>) f = top / lc;
        else f = top * lc;  // lc is its own inverse
        quot[k] = f;
        for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= f * q[j];
    }
    rem.resize(dq);
    return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

template <class T>
Poly<T> operator%(const Poly<T>& p, const Poly<T>& q) {
    return divrem(p, q).second;
}

/// Exact quotient; throws DivisibilityError when the remainder is nonzero.
template <class T>
Poly<T> exact_div(const Poly<T>& p, const Poly<T>& q) {
    auto [quot, rem] = divrem(p, q);
    if (!rem.is_zero()) throw DivisibilityError("nonzero remainder " + to_string(rem));
    return quot;
}

/// p(q(x)).
template <class T>
Poly<T> compose(const Poly<T>& p, const Poly<T>& q) {
    Poly<T> acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * q + Poly<T>(p[static_cast<std::size_t>(i)]);
    return acc;
}

template <class T>
Poly<T> derivative(const Poly<T>& p) {
    if (p.degree() < 1) return {};
    std::vector<T> d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * T(static_cast<long>(i));
    return Poly<T>(std::move(d));
}

/// Substitute x -> s*x.
template <class T>
Poly<T> scale_arg(const Poly<T>& p, const T& s) {
    std::vector<T> c = p.coeffs();
    T pw(1);
    for (auto& v : c) {
        v *= pw;
        pw *= s;
    }
    return Poly<T>(std::move(c));
}

/// x^deg * p(1/x) for the given nominal degree (>= actual degree).
template <class T>
Poly<T> reversed(const Poly<T>& p, int nominal_degree) {
    if (p.degree() > nominal_degree) throw PreconditionError("reversal degree below polynomial degree");
    std::vector<T> c(static_cast<std::size_t>(nominal_degree) + 1, T(0));
    for (std::size_t i = 0; i < p.size(); ++i) c[static_cast<std::size_t>(nominal_degree) - i] = p[i];
    return Poly<T>(std::move(c));
}

inline RatPoly make_monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    return (Rational(1) / p.lead()) * p;
}

/// Monic gcd over the rationals (Euclid with monic normalization).
inline RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divrem(a, b).second;
        a = std::move(b);
        b = make_monic(r);
    }
    return make_monic(a);
}

/// p / gcd(p, p'): same roots, all simple.
inline RatPoly squarefree(const RatPoly& p) {
    if (p.is_zero()) throw PreconditionError("squarefree part of the zero polynomial");
    if (p.degree() < 1) return p;
    return exact_div(p, gcd(p, derivative(p)));
}

/// Content-free integer polynomial proportional to p with positive leading
/// coefficient.
inline IntPoly primitive_part(const RatPoly& p) {
    if (p.is_zero()) return {};
    BigInt l(1);
    for (const auto& c : p.coeffs()) l = bmp::lcm(l, denom(c));
    std::vector<BigInt> z;
    z.reserve(p.size());
    BigInt g(0);
    for (const auto& c : p.coeffs()) {
        z.push_back(numer(c) * (l / denom(c)));
        g = bmp::gcd(g, z.back());
    }
    if (z.back() < 0) g = -g;
    for (auto& v : z) v /= g;
    return IntPoly(std::move(z));
}

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

/// Basis of {v : M v = 0} by exact reduced row echelon form. M is given
/// row-major with `cols` columns.
inline std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace zetapoly
