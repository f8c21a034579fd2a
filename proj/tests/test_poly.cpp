#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chatelet/factor.hpp"
#include "chatelet/poly.hpp"
#include "chatelet/poly_io.hpp"

using namespace chatelet;

namespace {

Poly<Rat> q(const std::string& s) { return parse_poly_q(s); }

}  // namespace

TEST_CASE("poly arithmetic over Q") {
    auto f = q("x^2 - 1");
    auto g = q("x - 1") * q("x + 1");
    CHECK(f == g);
    CHECK(f.eval(Rat(3)) == Rat(8));
    CHECK(derivative(f) == q("2*x"));
    Poly<Rat> quo, rem;
    divmod(q("x^3 + 2*x + 1"), q("x^2 + 1"), quo, rem);
    CHECK(quo == q("x"));
    CHECK(rem == q("x + 1"));
    CHECK(poly_gcd(q("x^2 - 1"), q("x^2 - 2*x + 1")) == q("x - 1"));
}

TEST_CASE("separability") {
    CHECK(is_separable(q("x^2 - 1")));
    CHECK(!is_separable(q("x^2 - 2*x + 1")));
    CHECK(is_separable(q("(x^2 + 12)*(41*x^2 + 493)")));
    // char p: x^2 + 1 = (x+1)^2 over F_2 is inseparable, detected via P' = 0
    auto F2 = FqCtx::make(2);
    auto one = FFElem::from_int_in(F2, 1);
    Poly<FFElem> xsq(std::vector<FFElem>{one, one.zero(), one});
    CHECK(!is_separable(xsq));
}

TEST_CASE("discriminant") {
    CHECK(discriminant(q("x^2 + 12")) == Rat(-48));
    CHECK(discriminant(q("x^2 + 3*x + 5")) == Rat(-11));
    CHECK(discriminant(q("(x-1)*(x-2)*(x-3)")) == Rat(4));
    // separable iff nonzero discriminant (degree >= 2)
    for (auto s : {"x^2 - 1", "x^2 - 2*x + 1", "x^3 - x", "(x-2)^2 * (x+1)"}) {
        auto f = q(s);
        CHECK(is_separable(f) == !discriminant(f).is_zero());
    }
}

TEST_CASE("homogenize") {
    auto h = homogenize(q("x^2 + 1"), 2);
    CHECK(h.coeff[0] == Rat(1));  // w^2
    CHECK(h.coeff[1] == Rat(0));
    CHECK(h.coeff[2] == Rat(1));  // x^2
    auto h2 = homogenize(q("x"), 4);
    CHECK(h2.coeff[1] == Rat(1));  // x*w^3
    auto h3 = homogenize(q("(x^2 + 12)*(41*x^2 + 493)"), 4);
    CHECK(h3.coeff[4] == Rat(41));
    CHECK(h3.coeff[2] == Rat(985));
    CHECK(h3.coeff[0] == Rat(5916));
    CHECK(h3.coeff[1] == Rat(0));
    CHECK(h3.dehomogenize() == q("41*x^4 + 985*x^2 + 5916"));
    CHECK(h3.eval(Rat(1), Rat(2)) == q("(x^2 + 12)*(41*x^2 + 493)").eval(Rat(1, 2)) * Rat(16));
    CHECK_THROWS_AS(homogenize(q("x^3"), 2), DegreeTooLarge);
}

TEST_CASE("factor over Q") {
    SUBCASE("split quadratic") {
        auto fac = factor(q("x^2 - 1"));
        CHECK(fac.content == Rat(1));
        REQUIRE(fac.factors.size() == 2);
        // canonical order: degree, then coefficients from the top
        CHECK(fac.factors[0] == q("x - 1"));
        CHECK(fac.factors[1] == q("x + 1"));
    }
    SUBCASE("the flagship quartic") {
        auto fac = factor(q("(x^2 + 12)*(41*x^2 + 493)"));
        CHECK(fac.content == Rat(41));
        REQUIRE(fac.factors.size() == 2);
        CHECK(fac.factors[0] == q("x^2 + 12"));
        CHECK(fac.factors[1] == q("x^2 + 493/41"));
        CHECK(fac.expand() == q("(x^2 + 12)*(41*x^2 + 493)"));
    }
    SUBCASE("irreducible quartic") {
        auto fac = factor(q("x^4 + 1"));  // irreducible over Q, splits mod every prime
        CHECK(fac.factors.size() == 1);
    }
    SUBCASE("products with linear factors") {
        auto f = q("(x - 2)*(x + 3)*(x^2 + x + 1)*(2*x - 5)");
        auto fac = factor(f);
        CHECK(fac.expand() == f);
        CHECK(fac.factors.size() == 4);
        CHECK(fac.content == Rat(2));
    }
    SUBCASE("degree 8 round trip") {
        auto f = q("(x^4 + x + 1)*(x^4 - 2*x^3 + 7)");
        auto fac = factor(f);
        CHECK(fac.expand() == f);
        CHECK(fac.factors.size() == 2);
    }
    SUBCASE("degree cap") {
        CHECK_THROWS_AS(factor(q("x^9 + x + 1")), UnsupportedDegree);
    }
}

TEST_CASE("factor over F_q") {
    auto F2 = FqCtx::make(2);
    auto one2 = FFElem::from_int_in(F2, 1);
    auto t = Poly<FFElem>::x(one2);
    auto c1 = Poly<FFElem>::constant(one2);

    SUBCASE("t^4 + t^3 + 1 is irreducible over F_2") {
        auto f = t.pow(4) + t.pow(3) + c1;
        auto fac = factor(f);
        CHECK(fac.factors.size() == 1);
        CHECK(is_irreducible(f));
        // oracle: no roots and not divisible by t^2+t+1, the unique
        // irreducible quadratic over F_2
        CHECK(!f.eval(one2.zero()).is_zero());
        CHECK(!f.eval(one2).is_zero());
        auto quad = t * t + t + c1;
        CHECK((f % quad).degree() >= 0);
        CHECK(!(f % quad).is_zero());
    }
    SUBCASE("t^4 + t + 1 is also irreducible; t^4 + t^2 + 1 is not separable") {
        CHECK(is_irreducible(t.pow(4) + t + c1));
        CHECK(!is_separable(t.pow(4) + t.pow(2) + c1));  // = (t^2+t+1)^2
    }
    SUBCASE("exhaustive trial-division oracle over F_2 and F_3, deg <= 6") {
        for (unsigned p : {2u, 3u}) {
            auto F = FqCtx::make(p);
            auto one = FFElem::from_int_in(F, 1);
            unsigned long count = 1;
            for (int i = 0; i < 5; ++i) count *= p;
            for (unsigned long idx = 0; idx < count; idx += (p == 2 ? 1 : 7)) {
                auto f = monic_from_index(one, 5, idx);
                if (!is_separable(f)) continue;
                auto fac = factor(f);
                CHECK(fac.expand() == f);
                // every reported factor must be irreducible: no divisor of
                // degree <= deg/2 among all monic polynomials
                for (const auto& g : fac.factors) {
                    for (long d = 1; d <= g.degree() / 2; ++d) {
                        unsigned long dc = 1;
                        for (long i = 0; i < d; ++i) dc *= p;
                        for (unsigned long j = 0; j < dc; ++j) {
                            auto h = monic_from_index(one, d, j);
                            CHECK(!(g % h).is_zero());
                        }
                    }
                }
            }
        }
    }
    SUBCASE("factor over a residue field F_16 = F_2[t]/(t^4+t^3+1)") {
        auto C = QuotCtx::make(F2, t.pow(4) + t.pow(3) + c1);
        auto a = QuotElem::from_index(C, 2);
        auto x = Poly<QuotElem>::x(a.zero());
        auto f = (x + Poly<QuotElem>::constant(a)) * (x + Poly<QuotElem>::constant(a * a)) *
                 (x * x + x + Poly<QuotElem>::constant(a));
        if (is_separable(f)) {
            auto fac = factor(f);
            CHECK(fac.expand() == f);
            CHECK(fac.factors.size() >= 2);
        }
    }
}

TEST_CASE("squarefree decomposition over F_q") {
    auto F2 = FqCtx::make(2);
    auto one = FFElem::from_int_in(F2, 1);
    auto t = Poly<FFElem>::x(one);
    auto f = t.pow(2) * (t + Poly<FFElem>::constant(one)).pow(3);
    auto dec = squarefree_decomposition(f);
    Poly<FFElem> prod = Poly<FFElem>::constant(one);
    for (auto& [part, mult] : dec) {
        CHECK(is_separable(part));
        prod = prod * part.pow((unsigned)mult);
    }
    CHECK(prod == monic(f));
    auto supp = poly_support(f);
    CHECK(supp.size() == 2);
}

TEST_CASE("factor over F_q(t)") {
    auto F2 = FqCtx::make(2);
    RatFunc t = RatFunc::var_t(F2);
    RatFunc one = RatFunc::with_field(F2, 1);
    auto X = Poly<RatFunc>::x(one);

    SUBCASE("split product of linear factors") {
        auto f = (X + Poly<RatFunc>::constant(t)) * (X + Poly<RatFunc>::constant(t + one));
        auto fac = factor(f);
        CHECK(fac.factors.size() == 2);
        CHECK(fac.expand() == f);
    }
    SUBCASE("case-2 style product with denominators") {
        RatFunc a = t.pow(4) + t.pow(3) + one;  // irreducible
        RatFunc b = t;
        RatFunc lcf = a.pow(-4) * b;
        auto f = Poly<RatFunc>(std::vector<RatFunc>{a / b, one, lcf});
        auto g = f * lcf + Poly<RatFunc>::constant(one);
        auto P = f * g;
        REQUIRE(is_separable(P));
        auto fac = factor(P);
        CHECK(fac.expand() == P);
        REQUIRE(fac.factors.size() == 2);
        CHECK(fac.content == lcf * lcf * lcf);  // lc(f) * lc(g) = lcf * lcf^2
        CHECK(fac.factors[0] * fac.factors[1] * Poly<RatFunc>::constant(fac.content) == P);
        // and the two factors are exactly monic(f), monic(g)
        bool match = (fac.factors[0] == monic(f) && fac.factors[1] == monic(g)) ||
                     (fac.factors[0] == monic(g) && fac.factors[1] == monic(f));
        CHECK(match);
    }
    SUBCASE("irreducible quadratic stays whole") {
        // x^2 + x + t has no roots in F_2(t) (a root would be a polynomial
        // of degree matching t, impossible by degree parity)
        auto f = X * X + X + Poly<RatFunc>::constant(t);
        auto fac = factor(f);
        CHECK(fac.factors.size() == 1);
        CHECK(ratfunc_roots(f).empty());
    }
}

TEST_CASE("ratfunc roots") {
    auto F2 = FqCtx::make(2);
    RatFunc t = RatFunc::var_t(F2);
    RatFunc one = RatFunc::with_field(F2, 1);
    auto X = Poly<RatFunc>::x(one);

    auto f = (X + Poly<RatFunc>::constant(t)) * (X + Poly<RatFunc>::constant(one / (t + one)));
    auto roots = ratfunc_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(f.eval(roots[0]).is_zero());
    CHECK(f.eval(roots[1]).is_zero());

    // x^2 + x + 1 over F_2(t) has no roots, but acquires both over F_4(t)
    auto g2 = X * X + X + Poly<RatFunc>::constant(one);
    CHECK(ratfunc_roots(g2).empty());
    auto F4 = FqCtx::make(2, 2);
    RatFunc one4 = RatFunc::with_field(F4, 1);
    auto X4 = Poly<RatFunc>::x(one4);
    auto g4 = X4 * X4 + X4 + Poly<RatFunc>::constant(one4);
    CHECK(ratfunc_roots(g4).size() == 2);
}

TEST_CASE("polynomial text round trips") {
    SUBCASE("over Q") {
        for (auto s : {"41*x^4 + 985*x^2 + 5916", "x^2 + 493/41", "-x^3 + x - 12",
                       "x", "5", "x^2 - 1/2*x + 3/7"}) {
            auto f = parse_poly_q(s);
            CHECK(parse_poly_q(f.to_string()) == f);
        }
        CHECK(parse_poly_q("(x^2+12)*(41*x^2+493)") == q("41*x^4 + 985*x^2 + 5916"));
        CHECK_THROWS_AS(parse_poly_q("x + +"), ParseError);
        CHECK_THROWS_AS(parse_poly_q("y + 1"), ParseError);
    }
    SUBCASE("over F_q(t)") {
        auto F2 = FqCtx::make(2);
        for (auto s : {"(t^4+t^3+1)*x^2 + x + (t^4+t^3+1)/t", "x^2 + (t/(t+1))*x + 1", "t^3 + t"}) {
            auto f = parse_poly_kfq(s, F2);
            CHECK(parse_poly_kfq(f.to_string(), F2) == f);
        }
        auto F4 = FqCtx::make(2, 2);
        auto f = parse_poly_kfq("x^2 + u*x + (u+1)*t", F4);
        CHECK(parse_poly_kfq(f.to_string(), F4) == f);
        CHECK_THROWS_AS(parse_poly_kfq("u*x", F2), ParseError);
    }
}
