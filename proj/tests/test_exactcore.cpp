#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zetapoly/exactcore.hpp"

using namespace zetapoly;

namespace {

RatPoly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return RatPoly(std::move(v));
}

const RatPoly z = RatPoly::x();

}  // namespace

TEST(Rational, LowestTermsAndStrings) {
    Rational a(BigInt(6), BigInt(-4));
    EXPECT_EQ(to_string(a), "-3/2");
    EXPECT_EQ(to_string(Rational(4, 2)), "2");
    EXPECT_EQ(to_string(Rational(0, 7)), "0");
    EXPECT_EQ(denom(Rational(0, 7)), 1);
    EXPECT_EQ(parse_rational("-3/2"), a);
    EXPECT_EQ(parse_rational("17"), Rational(17));
    EXPECT_EQ(parse_rational("3/-2"), a);
    EXPECT_THROW(parse_rational("1/0"), PreconditionError);
    EXPECT_THROW(parse_rational("x"), PreconditionError);
}

TEST(Poly, ZeroHasEmptyCoefficients) {
    RatPoly p = P({1, 2}) - P({1, 2});
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.degree(), -1);
    EXPECT_TRUE(P({0, 0, 0}).is_zero());
}

TEST(Poly, Multiply) {
    EXPECT_EQ(P({1, 1}) * P({1, -1}), P({1, 0, -1}));
    const RatPoly p = P({3, 0, 5, -1});
    EXPECT_EQ(p * RatPoly(Rational(1)), p);
    const RatPoly a = z * z - RatPoly(Rational(4));
    const RatPoly b = z * z - RatPoly(Rational(1, 4));
    EXPECT_EQ(a * b, RatPoly({Rational(1), Rational(0), Rational(-17, 4), Rational(0), Rational(1)}));
}

TEST(Poly, DivRem) {
    auto [q1, r1] = divrem(P({-1, 0, 1}), P({-1, 1}));
    EXPECT_EQ(q1, P({1, 1}));
    EXPECT_TRUE(r1.is_zero());
    auto [q2, r2] = divrem(P({0, 0, 1}), P({-1, 1}));
    EXPECT_EQ(q2, P({1, 1}));
    EXPECT_EQ(r2, P({1}));

    const RatPoly zz = z * z;
    const RatPoly den = z * (zz - RatPoly(Rational(4))) * (zz - RatPoly(Rational(1, 4))) * (zz - RatPoly(Rational(1))) *
                        (zz - RatPoly(Rational(1)));
    auto [q3, r3] = divrem(P({0, 4, 0, -25, 0, 42, 0, -25, 0, 4}), den);
    EXPECT_EQ(q3, P({4}));
    EXPECT_TRUE(r3.is_zero());

    EXPECT_THROW(divrem(P({1}), RatPoly{}), PreconditionError);
    EXPECT_THROW(exact_div(P({0, 0, 1}), P({-1, 1})), DivisibilityError);
}

TEST(Poly, IntegerDivisionNeedsUnitLead) {
    IntPoly p({BigInt(-1), BigInt(0), BigInt(1)});
    EXPECT_EQ(divrem(p, IntPoly({BigInt(1), BigInt(-1)})).first, IntPoly({BigInt(-1), BigInt(-1)}));
    EXPECT_THROW(divrem(p, IntPoly({BigInt(1), BigInt(2)})), PreconditionError);
}

TEST(Poly, Compose) {
    EXPECT_EQ(compose(P({0, 0, 1}), P({1, 1})), P({1, 2, 1}));
    const RatPoly p = P({7, -1, 0, 2});
    EXPECT_EQ(compose(p, z), p);
    const RatPoly t3 = P({0, -3, 0, 1}), t2 = P({-2, 0, 1});
    // Both orders expanded by hand: x^6 - 6x^4 + 9x^2 - 2.
    EXPECT_EQ(compose(t3, t2), P({-2, 0, 9, 0, -6, 0, 1}));
    EXPECT_EQ(compose(t2, t3), compose(t3, t2));
}

TEST(Poly, Eval) {
    EXPECT_EQ(P({1, 0, 1})(Rational(0)), 1);
    EXPECT_EQ(P({1, 0, 1})(Rational(2)), 5);
    EXPECT_EQ(P({0, 4, 0, -25, 0, 42, 0, -25, 0, 4})(Rational(1)), 0);
    EXPECT_EQ(P({0, 4, 0, -25, 0, 42, 0, -25, 0, 4})(Rational(1, 2)), 0);
}

TEST(Poly, Squarefree) {
    EXPECT_EQ(make_monic(squarefree(P({1, -2, 1}))), P({-1, 1}));
    EXPECT_EQ(make_monic(squarefree(P({1, 0, 1}))), P({1, 0, 1}));
    const RatPoly a = P({-1, 0, 1}), b = P({-4, 0, 1});
    EXPECT_EQ(make_monic(squarefree(a * a * b)), a * b);
    EXPECT_THROW(squarefree(RatPoly{}), PreconditionError);
}

TEST(Poly, PrimitivePart) {
    RatPoly p({Rational(-1, 2), Rational(0), Rational(3, 4)});
    EXPECT_EQ(primitive_part(p), IntPoly({BigInt(-2), BigInt(0), BigInt(3)}));
    EXPECT_EQ(primitive_part(-p), IntPoly({BigInt(-2), BigInt(0), BigInt(3)}));
}

TEST(Nullspace, SmallSystem) {
    // x + y + z = 0, x - z = 0 -> span (1, -2, 1).
    std::vector<std::vector<Rational>> m{{1, 1, 1}, {1, 0, -1}};
    auto ns = nullspace(m, 3);
    ASSERT_EQ(ns.size(), 1u);
    EXPECT_EQ(ns[0], (std::vector<Rational>{1, -2, 1}));
}

TEST(PolyProperties, RingAxiomsAndDivisionReconstruction) {
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> deg(0, 12);
    for (int trial = 0; trial < 200; ++trial) {
        RatPoly p = oracle::random_ratpoly(gen, deg(gen));
        RatPoly q = oracle::random_ratpoly(gen, deg(gen));
        RatPoly r = oracle::random_ratpoly(gen, deg(gen) % 5);
        ASSERT_EQ((p + q) * r, p * r + q * r);
        ASSERT_EQ((p * q).degree(), p.degree() + q.degree());
        auto [quot, rem] = divrem(p, q);
        ASSERT_EQ(quot * q + rem, p);
        ASSERT_LT(rem.degree(), q.degree());
    }
}

TEST(PolyProperties, CompositionIsAssociative) {
    std::mt19937 gen(11);
    std::uniform_int_distribution<int> deg(0, 4);
    for (int trial = 0; trial < 40; ++trial) {
        RatPoly p = oracle::random_ratpoly(gen, deg(gen), 20);
        RatPoly q = oracle::random_ratpoly(gen, deg(gen), 20);
        RatPoly r = oracle::random_ratpoly(gen, deg(gen), 20);
        ASSERT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
    }
}

TEST(PolyProperties, SquarefreeIsCoprimeToDerivative) {
    std::mt19937 gen(13);
    std::uniform_int_distribution<int> deg(1, 3), mult(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
        RatPoly p(Rational(1));
        for (int f = 0; f < 3; ++f) {
            RatPoly factor = oracle::random_ratpoly(gen, deg(gen), 9);
            for (int m = mult(gen); m > 0; --m) p = p * factor;
        }
        RatPoly s = squarefree(p);
        ASSERT_EQ(gcd(s, derivative(s)), RatPoly(Rational(1)));
        ASSERT_TRUE(divrem(p, s).second.is_zero());
    }
}
