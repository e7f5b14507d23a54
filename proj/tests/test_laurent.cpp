#include <catch2/catch_amalgamated.hpp>

#include <nablahl/laurent.hpp>
#include <nablahl/ratfunc.hpp>

#include "test_util.hpp"

using namespace nablahl;

namespace {
const LaurentPoly Q = LaurentPoly::var_q();
const LaurentPoly T = LaurentPoly::var_t();
const LaurentPoly ONE = LaurentPoly::one();
}  // namespace

TEST_CASE("laurent polynomial arithmetic basics") {
    LaurentPoly p = (ONE - T) * (ONE - T * T);
    LaurentPoly expect = ONE - T - T * T + T.pow(3);
    REQUIRE(p == expect);

    REQUIRE((p - p).is_zero());
    REQUIRE((ONE * p) == p);
    REQUIRE(p.term_count() == 4);
    REQUIRE(p.max_deg_t() == 3);
    REQUIRE(p.min_deg_t() == 0);
}

TEST_CASE("laurent exponent maps and evaluation") {
    LaurentPoly f = Q * Q * T - LaurentPoly::monomial(Rational(3), -1, 2);
    REQUIRE(f.inverted_params() ==
            Q.pow(2).inverted_params() * T.inverted_params() -
                LaurentPoly::monomial(Rational(3), 1, -2));
    REQUIRE(f.swapped_params() == T * T * Q - LaurentPoly::monomial(Rational(3), 2, -1));
    // q |-> t^2 on q^2 t: t^5
    REQUIRE((Q * Q * T).subst_q_tpow(2) == T.pow(5));
    REQUIRE(f.eval(Rational(2), Rational(1)) == Rational(4) - Rational(3) / 2);
    REQUIRE_THROWS_AS(LaurentPoly::monomial(Rational(1), -1, 0).subst_q_rational(Rational(0)),
                      std::domain_error);
}

TEST_CASE("laurent natural membership") {
    REQUIRE((Q * T + ONE).is_natural());
    REQUIRE_FALSE((Q - T).is_natural());
    REQUIRE_FALSE(LaurentPoly::monomial(Rational(1), 0, -1).is_natural());
    REQUIRE_FALSE(LaurentPoly(Rational(1, 2)).is_natural());
}

TEST_CASE("exact division") {
    LaurentPoly f = Q * Q - T * T;
    LaurentPoly g = Q + T;
    LaurentPoly quot;
    REQUIRE(divide_exact(f, g, quot));
    REQUIRE(quot == Q - T);
    REQUIRE_FALSE(divide_exact(Q + T, Q - T, quot));
    // Laurent shifts divide out
    REQUIRE(divide_exact(f.shifted(-2, 1), g.shifted(0, -1), quot));
    REQUIRE(quot == (Q - T).shifted(-2, 2));
}

TEST_CASE("gcd of bivariate polynomials") {
    LaurentPoly a = (Q + T) * (Q - T);
    LaurentPoly b = (Q + T) * (ONE + T);
    REQUIRE(gcd(a, b) == Q + T);
    REQUIRE(gcd(a, LaurentPoly()) == a);  // a is already primitive, positive lead
    REQUIRE(gcd(ONE, b).is_one());
    // common monomial factors are part of the gcd
    REQUIRE(gcd(Q * T, Q * Q) == Q);
}

TEST_CASE("gcd against product oracle on random triples") {
    testutil::Rng rng(42);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly g = testutil::random_nonzero_laurent(rng, 3, 2);
        LaurentPoly a = g * testutil::random_nonzero_laurent(rng, 3, 2);
        LaurentPoly b = g * testutil::random_nonzero_laurent(rng, 3, 2);
        LaurentPoly d = gcd(a, b);
        LaurentPoly quot;
        REQUIRE(divide_exact(a, d, quot));
        REQUIRE(divide_exact(b, d, quot));
        REQUIRE(divide_exact(d, gcd(d, g), quot));  // g divides both, so gcd(d,g)=g up to units
        REQUIRE(gcd(d, g).term_count() == g.term_count());
    }
}

TEST_CASE("ratfunc canonical form") {
    RatFunc f(Q * Q - T * T, Q + T);
    REQUIRE(f.is_polynomial());
    REQUIRE(f.as_laurent() == Q - T);

    // denominator monomial content moves into the numerator
    RatFunc g(ONE, T.pow(3) - T.pow(5));
    REQUIRE(g.den() == T * T - ONE);
    REQUIRE(g.num() == -LaurentPoly::t_pow(-3));

    // leading (lex, q before t) coefficient of the denominator is 1
    RatFunc h(ONE, Q * 2 + T);
    REQUIRE(h.den().leading_term().second == 1);
    REQUIRE(h.den() == Q + T * Rational(1, 2));
}

TEST_CASE("ratfunc canonicalization is idempotent") {
    testutil::Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        RatFunc f = testutil::random_ratfunc(rng);
        RatFunc g(f.num(), f.den());
        REQUIRE(f == g);
    }
}

TEST_CASE("ratfunc field laws on random triples") {
    testutil::Rng rng(99);
    for (int i = 0; i < 30; ++i) {
        RatFunc f = testutil::random_ratfunc(rng);
        RatFunc g = testutil::random_ratfunc(rng);
        RatFunc h = testutil::random_ratfunc(rng);
        REQUIRE((f + g) * h == f * h + g * h);
        REQUIRE(f + g == g + f);
        REQUIRE((f * g) * h == f * (g * h));
        if (!g.is_zero()) REQUIRE((f / g) * g == f);
    }
}

TEST_CASE("ratfunc substitutions") {
    RatFunc f(Q, ONE - Q * T);
    REQUIRE(f.inverted_params() == RatFunc(Q.inverted_params(), ONE - (Q * T).inverted_params()));
    REQUIRE(f.swapped_params() == RatFunc(T, ONE - Q * T));
    REQUIRE(f.subst_q_tpow(2) == RatFunc(T * T, ONE - T.pow(3)));
    REQUIRE_THROWS_AS(RatFunc(ONE, Q - T).subst_qt_tpow(1, 1), std::domain_error);
    REQUIRE(f.subst_q_rational(Rational(0)).is_zero());
}
