#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chatelet/finite_field.hpp"
#include "chatelet/laurent.hpp"
#include "chatelet/padic.hpp"
#include "chatelet/quotient_field.hpp"
#include "chatelet/rational.hpp"
#include "chatelet/symbols.hpp"

using namespace chatelet;

TEST_CASE("rational valuation") {
    CHECK(*valuation(Rat(1), BigInt(7)) == 0);
    CHECK(*valuation(Rat(12, 17), BigInt(17)) == -1);
    CHECK(*valuation(Rat(493), BigInt(17)) == 1);  // 493 = 17 * 29
    CHECK(!valuation(Rat(0), BigInt(5)).has_value());
    CHECK(*valuation(Rat(48), BigInt(2)) == 4);
}

TEST_CASE("legendre symbol") {
    CHECK(legendre(BigInt(1), BigInt(17)) == 1);
    CHECK(legendre(BigInt(17), BigInt(17)) == 0);
    CHECK(legendre(BigInt(41), BigInt(17)) == -1);
    // oracle: enumerate squares mod 17
    std::vector<int> sq;
    for (int i = 1; i < 17; ++i) sq.push_back(i * i % 17);
    auto is_sq = [&](int a) { return std::find(sq.begin(), sq.end(), a % 17) != sq.end(); };
    for (int a = 1; a < 17; ++a)
        CHECK(legendre(BigInt(a), BigInt(17)) == (is_sq(a) ? 1 : -1));
}

TEST_CASE("integer factorization") {
    auto f = factor_integer(BigInt(493));
    REQUIRE(f.size() == 2);
    CHECK(f[0].first == 17);
    CHECK(f[1].first == 29);
    CHECK(squarefree_part(BigInt(-48)) == -3);
    CHECK(squarefree_part(BigInt(697)) == 697);
}

TEST_CASE("hilbert symbol values") {
    // 1 is a square: split for any b, v
    for (long b : {-5, 3, 14})
        for (long v : {2, 3, 5, 17})
            CHECK(hilbert_symbol(Rat(1), Rat(b), BigInt(v)).is_zero());
    // (-1,-1) ramified at 2 and at the real place
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), BigInt(2)) == InvariantValue(1, 2));
    CHECK(hilbert_symbol_real(Rat(-1), Rat(-1)) == InvariantValue(1, 2));
    CHECK(hilbert_symbol_real(Rat(-1), Rat(2)).is_zero());
    CHECK_THROWS_AS(hilbert_symbol(Rat(0), Rat(1), BigInt(3)), std::invalid_argument);
}

TEST_CASE("hilbert symbol bilinearity and product formula, small grid") {
    std::vector<long> vals = {-10, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10};
    std::vector<BigInt> primes = {2, 3, 5, 7, 11, 13};
    for (long a : vals)
        for (long b1 : vals)
            for (long b2 : {-3l, 2l, 5l}) {
                for (const BigInt& v : primes) {
                    auto lhs = hilbert_symbol(Rat(a), Rat(b1 * b2), v);
                    auto rhs = hilbert_symbol(Rat(a), Rat(b1), v) + hilbert_symbol(Rat(a), Rat(b2), v);
                    CHECK(lhs == rhs);
                }
            }
    // product formula: sum over real place and all primes dividing 2ab
    for (long a : vals)
        for (long b : vals) {
            InvariantValue total = hilbert_symbol_real(Rat(a), Rat(b));
            BigInt prod = BigInt(2) * a * b;
            for (auto& [p, e] : factor_integer(prod))
                total = total + hilbert_symbol(Rat(a), Rat(b), p);
            CHECK(total.is_zero());
        }
}

TEST_CASE("finite fields") {
    auto F2 = FqCtx::make(2);
    auto F4 = FqCtx::make(2, 2);
    auto F9 = FqCtx::make(3, 2);

    SUBCASE("F4 arithmetic") {
        CHECK(F4->q == 4);
        auto u = FFElem::from_index(F4, 2);  // the generator u
        CHECK(u.to_string() == "u");
        auto u2 = u * u;
        CHECK(u2 == u + u.one());  // u^2 = u + 1 for the modulus u^2+u+1
        CHECK((u * u.inv()).is_one());
        CHECK(u.pow(BigInt(3)).is_one());
        CHECK(u.trace_to_prime() == 1);  // Tr(u) = u + u^2 = 1
        CHECK(u.pth_root().pow(BigInt(2)) == u);
    }
    SUBCASE("F9 arithmetic") {
        for (auto& x : all_elements(F9)) {
            if (x.is_zero()) continue;
            CHECK((x * x.inv()).is_one());
            CHECK(x.pow(F9->q - 1).is_one());
            CHECK(x.pth_root().pow(BigInt(3)) == x);
        }
    }
    SUBCASE("trace surjectivity") {
        bool seen_nonzero = false;
        for (auto& x : all_elements(F4)) seen_nonzero |= (x.trace_to_prime() != 0);
        CHECK(seen_nonzero);
    }
    (void)F2;
}

TEST_CASE("quotient residue fields") {
    auto F2 = FqCtx::make(2);
    auto one = FFElem::from_int_in(F2, 1);
    // F_2[t]/(t^4+t^3+1), a degree-4 residue field
    Poly<FFElem> pi(std::vector<FFElem>{one, one.zero(), one.zero(), one, one});
    auto C = QuotCtx::make(F2, pi);
    CHECK(C->q == 16);
    auto t = QuotElem(C, Poly<FFElem>::x(one));
    CHECK((t * t.inv()).is_one());
    CHECK(t.pow(BigInt(15)).is_one());
    CHECK(t.pth_root().pow(BigInt(2)) == t);
    unsigned nonzero_traces = 0;
    for (auto& x : all_elements(C))
        if (x.trace_to_prime()) ++nonzero_traces;
    CHECK(nonzero_traces == 8);  // half the elements of F_16 have trace 1
}

TEST_CASE("laurent series arithmetic") {
    auto F2 = FqCtx::make(2);
    auto one = FFElem::from_int_in(F2, 1);

    LaurentSeries<FFElem> t = LaurentSeries<FFElem>::uniformizer(one, 10);
    auto s = t + t * t;  // t + t^2
    CHECK(s.valuation() == 1);
    auto inv = s.inverse();  // 1/(t+t^2) = t^-1 * (1 + t + t^2 + ...)
    CHECK(inv.valuation() == -1);
    auto prod = s * inv;
    CHECK(prod.valuation() == 0);
    CHECK(prod.leading().is_one());
    for (long i = 1; i < prod.precision(); ++i) CHECK(prod.coeff(i).is_zero());

    auto d = s.derivative();  // 1 + 2t = 1 in char 2
    CHECK(d.valuation() == 0);
    CHECK(d.coeff(0).is_one());
    CHECK(d.coeff(1).is_zero());

    // residue of dt/t is 1
    CHECK((t.derivative() / t).residue().is_one());
    CHECK_THROWS_AS(s.coeff(99), InsufficientPrecision);
}

TEST_CASE("schmid symbol over F_2((t))") {
    auto F2 = FqCtx::make(2);
    auto one = FFElem::from_int_in(F2, 1);
    long prec = 12;
    auto t = LaurentSeries<FFElem>::uniformizer(one, prec);
    auto a1 = LaurentSeries<FFElem>::from_const(one, prec);

    CHECK(schmid_symbol(LaurentSeries<FFElem>(one, prec), t, 2).is_zero());  // a = 0 splits
    CHECK(schmid_symbol(a1, t, 2) == InvariantValue(1, 2));                  // res(dt/t) = 1
    CHECK(schmid_symbol(a1, t * t, 2).is_zero());                            // even valuation
    CHECK_THROWS_AS(schmid_symbol(a1, LaurentSeries<FFElem>(one, prec), 2), std::invalid_argument);

    // additivity in b
    auto b1 = t + t * t * t;
    auto b2 = a1 + t;
    auto lhs = schmid_symbol(a1, b1 * b2, 2);
    CHECK(lhs == schmid_symbol(a1, b1, 2) + schmid_symbol(a1, b2, 2));

    // ℘-invariance: a and a + (y^2 - y) give the same symbol
    for (int yi = 0; yi < 3; ++yi) {
        LaurentSeries<FFElem> y = (yi == 0)   ? t.inverse()
                                  : (yi == 1) ? t + a1
                                              : t.inverse() * t.inverse() + t;
        auto shifted = a1 + y * y - y;
        CHECK(schmid_symbol(shifted, b1, 2) == schmid_symbol(a1, b1, 2));
        CHECK(schmid_symbol(shifted, t, 2) == schmid_symbol(a1, t, 2));
    }
}

TEST_CASE("artin-schreier reduction yields pole order prime to p") {
    auto F3 = FqCtx::make(3);
    auto one = FFElem::from_int_in(F3, 1);
    long prec = 15;
    auto t = LaurentSeries<FFElem>::uniformizer(one, prec);
    auto a = t.inverse() * t.inverse() * t.inverse() +
             t.inverse() * t.inverse() * t.inverse() * t.inverse() * t.inverse() * t.inverse() +
             LaurentSeries<FFElem>::from_const(one, prec);
    auto r = artin_schreier_reduce(a, 3);
    if (!r.is_zero_to_precision() && r.valuation() < 0) CHECK(r.valuation() % 3 != 0);
}

TEST_CASE("padic approximations") {
    auto x = PadicApprox::from_rat(Rat(493, 41), BigInt(17), 6);
    CHECK(x.valuation() == 1);
    auto y = PadicApprox::from_rat(Rat(12), BigInt(17), 6);
    auto s = x + y;
    CHECK(s.valuation() == 0);
    CHECK(s.prime() == 17);
    auto z = PadicApprox::from_rat(Rat(0), BigInt(17), 6);
    CHECK(z.is_zero_to_precision());
}

TEST_CASE("hensel lifting") {
    SUBCASE("sqrt of 6 in Z_5") {
        Poly<Rat> f(std::vector<Rat>{Rat(-6), Rat(0), Rat(1)});
        PadicApprox x0(BigInt(5), 0, BigInt(1), 1);
        auto r = hensel_lift(f, x0, 4);
        BigInt rep = r.integer_rep();
        CHECK((rep * rep - 6) % pow_bigint(BigInt(5), 4) == 0);
        CHECK(rep % 5 == 1);
    }
    SUBCASE("exact root stays put") {
        Poly<Rat> f(std::vector<Rat>{Rat(-3), Rat(1)});
        PadicApprox x0(BigInt(5), 0, BigInt(3), 2);
        auto r = hensel_lift(f, x0, 6);
        CHECK(r.integer_rep() == 3);
    }
    SUBCASE("non-residue fails") {
        Poly<Rat> f(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)});
        PadicApprox x0(BigInt(5), 0, BigInt(1), 1);
        CHECK_THROWS_AS(hensel_lift(f, x0, 4), HenselFailure);
    }
    SUBCASE("padic sqrt") {
        auto r = padic_sqrt(Rat(697), BigInt(2), 10);  // 697 = 1 mod 8
        BigInt rep = r.integer_rep();
        CHECK((rep * rep - 697) % pow_bigint(BigInt(2), 10) == 0);
        CHECK_THROWS_AS(padic_sqrt(Rat(3), BigInt(2), 10), HenselFailure);
    }
}
