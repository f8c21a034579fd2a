#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chatelet/fold.hpp"

using namespace chatelet;

namespace {

// multiplication in K = k[theta]/(m) in the power basis, via Poly mod
template <class K>
std::vector<K> mul_in_ext(const std::vector<K>& u, const std::vector<K>& v,
                          const std::vector<K>& tail, unsigned p) {
    // m(theta) = theta^p - (tail as lower coefficients)
    std::vector<K> mc(tail);
    for (auto& c : mc) c = -c;
    mc.push_back(tail[0].one());
    Poly<K> m(std::move(mc));
    Poly<K> prod = (Poly<K>(std::vector<K>(u)) * Poly<K>(std::vector<K>(v))) % m;
    std::vector<K> out(p, tail[0].zero());
    for (long i = 0; i <= prod.degree(); ++i) out[(size_t)i] = prod.coeffs()[(size_t)i];
    return out;
}

unsigned long lcg(unsigned long& s) { return s = s * 6364136223846793005ull + 1442695040888963407ull; }

}  // namespace

TEST_CASE("norm forms match the textbook shapes") {
    SUBCASE("Kummer p = 2") {
        KummerExt e{2, Rat(697)};
        auto N = norm_form(e);
        // z1^2 - 697 z2^2
        std::vector<Rat> z{Rat(3), Rat(2)};
        CHECK(N.eval(z) == Rat(9 - 697 * 4));
    }
    SUBCASE("Artin-Schreier p = 2 over F_2") {
        auto F2 = FqCtx::make(2);
        ArtinSchreierExt e{2, RatFunc::var_t(F2)};  // gamma = t
        auto N = norm_form(e);
        RatFunc t = RatFunc::var_t(F2), one = RatFunc::with_field(F2, 1);
        CHECK(N.eval({one, one.zero()}) == one);            // N(1,0) = 1
        CHECK(N.eval({one.zero(), one}) == t);              // N(0,1) = -gamma = gamma
        CHECK(N.eval({one, one}) == one + one + t);         // z1^2 + z1 z2 + gamma z2^2 at (1,1)
    }
    SUBCASE("Kummer p = 3") {
        KummerExt e{3, Rat(5)};
        auto N = norm_form(e);
        // z1^3 + 5 z2^3 + 25 z3^3 - 15 z1 z2 z3
        auto val = [&](long a, long b, long c) {
            return N.eval({Rat(a), Rat(b), Rat(c)});
        };
        CHECK(val(1, 0, 0) == Rat(1));
        CHECK(val(0, 1, 0) == Rat(5));
        CHECK(val(0, 0, 1) == Rat(25));
        CHECK(val(1, 1, 1) == Rat(1 + 5 + 25 - 15));
        CHECK(val(2, 1, 3) == Rat(8 + 5 + 25 * 27 - 15 * 6));
    }
}

TEST_CASE("norm form equals the cofactor determinant oracle") {
    KummerExt e{3, Rat(7, 2)};
    auto N = norm_form(e);
    auto tail = kummer_tail(e);
    unsigned long seed = 42;
    for (int it = 0; it < 100; ++it) {
        std::vector<Rat> z;
        for (int i = 0; i < 3; ++i) z.emplace_back((long)(lcg(seed) % 19) - 9, (long)(lcg(seed) % 7) + 1);
        CHECK(N.eval(z) == field_det(norm_matrix_at(3, tail, z)));
    }
    auto F2 = FqCtx::make(2);
    ArtinSchreierExt ae{2, RatFunc::var_t(F2)};
    auto Na = norm_form(ae);
    auto atail = artin_schreier_tail(ae);
    RatFunc t = RatFunc::var_t(F2), one = RatFunc::with_field(F2, 1);
    for (int it = 0; it < 50; ++it) {
        std::vector<RatFunc> z;
        for (int i = 0; i < 2; ++i) {
            RatFunc v = one.zero();
            for (int j = 0; j < 3; ++j)
                if (lcg(seed) % 2) v = v + t.pow(j);
            z.push_back(v);
        }
        CHECK(Na.eval(z) == field_det(norm_matrix_at(2, atail, z)));
    }
}

TEST_CASE("norm multiplicativity") {
    SUBCASE("Kummer p = 3") {
        KummerExt e{3, Rat(5)};
        auto N = norm_form(e);
        auto tail = kummer_tail(e);
        unsigned long seed = 7;
        for (int it = 0; it < 100; ++it) {
            std::vector<Rat> u, v;
            for (int i = 0; i < 3; ++i) {
                u.emplace_back((long)(lcg(seed) % 11) - 5);
                v.emplace_back((long)(lcg(seed) % 11) - 5);
            }
            auto uv = mul_in_ext(u, v, tail, 3);
            CHECK(N.eval(uv) == N.eval(u) * N.eval(v));
        }
    }
    SUBCASE("Artin-Schreier p = 2") {
        auto F2 = FqCtx::make(2);
        ArtinSchreierExt e{2, RatFunc::var_t(F2)};
        auto N = norm_form(e);
        auto tail = artin_schreier_tail(e);
        RatFunc t = RatFunc::var_t(F2), one = RatFunc::with_field(F2, 1);
        unsigned long seed = 99;
        for (int it = 0; it < 100; ++it) {
            std::vector<RatFunc> u, v;
            for (int i = 0; i < 2; ++i) {
                RatFunc a = one.zero(), b = one.zero();
                for (int j = 0; j < 3; ++j) {
                    if (lcg(seed) % 2) a = a + t.pow(j);
                    if (lcg(seed) % 2) b = b + t.pow(j);
                }
                u.push_back(a);
                v.push_back(b);
            }
            auto uv = mul_in_ext(u, v, tail, 2);
            CHECK(N.eval(uv) == N.eval(u) * N.eval(v));
        }
    }
}

TEST_CASE("build_fold validation and data") {
    SUBCASE("the flagship Chatelet surface") {
        KummerExt ext{2, Rat(697)};
        auto P = parse_poly_q("(x^2 + 12)*(41*x^2 + 493)");
        auto f = build_fold<Rat>(ext, P);
        CHECK(f.is_chatelet);
        CHECK(picard_rank(f) == 6);
        CHECK(f.fac.content == Rat(41));
        auto locus = degenerate_fiber_locus(f);
        REQUIRE(locus.size() == 2);
        CHECK(locus[0].degree == 2);
        CHECK(locus[1].degree == 2);
        REQUIRE(locus[0].splitting_field_is_K.has_value());
        CHECK(!*locus[0].splitting_field_is_K);
        CHECK(!*locus[1].splitting_field_is_K);
    }
    SUBCASE("errors") {
        KummerExt ext{2, Rat(2)};
        CHECK_THROWS_AS(build_fold<Rat>(ext, parse_poly_q("x^2 - 2*x + 1")), NotSeparable);
        CHECK_THROWS_AS(build_fold<Rat>(ext, parse_poly_q("x^3 - 2")), BadDegree);
        KummerExt square{2, Rat(4)};
        CHECK_THROWS_AS(build_fold<Rat>(square, parse_poly_q("x^2 + 1")), DegenerateExtension);
        auto F2 = FqCtx::make(2);
        ArtinSchreierExt split{2, RatFunc::var_t(F2) * RatFunc::var_t(F2) + RatFunc::var_t(F2)};
        CHECK_THROWS_AS(build_fold<RatFunc>(split, parse_poly_kfq("x^2 + t", F2)),
                        DegenerateExtension);
    }
    SUBCASE("picard rank only sees the degree") {
        KummerExt ext{2, Rat(697)};
        auto P = parse_poly_q("(x^2 + 12)*(41*x^2 + 493)");
        auto f1 = build_fold<Rat>(ext, P);
        auto f2 = build_fold<Rat>(ext, P * Rat(5));
        CHECK(picard_rank(f1) == picard_rank(f2));
        CHECK(picard_rank_formula(2, 4) == 6);
        CHECK(picard_rank_formula(3, 6) == 14);
        CHECK(picard_rank_formula(2, 2) == 4);
        CHECK(picard_rank_formula(5, 15) == 62);
    }
}

TEST_CASE("splitting field comparisons") {
    KummerExt K697{2, Rat(697)};
    CHECK(!splitting_field_equals_K(parse_poly_q("x^2 + 12"), K697));
    CHECK(splitting_field_equals_K(parse_poly_q("x^2 - 697"), K697));
    CHECK(!splitting_field_equals_K(parse_poly_q("x + 3"), K697));
    // disc(x^2 - 3.697) = 4*3*697: class 3*697, not 697
    CHECK(!splitting_field_equals_K(parse_poly_q("x^2 - 2091"), K697));

    auto F2 = FqCtx::make(2);
    RatFunc one = RatFunc::with_field(F2, 1);
    ArtinSchreierExt Kconst{2, one};  // T^2 - T - 1 = T^2 + T + 1 over F_2
    CHECK(splitting_field_equals_K(parse_poly_kfq("x^2 + x + 1", F2), Kconst));
    CHECK(!splitting_field_equals_K(parse_poly_kfq("x^2 + x + t", F2), Kconst));
    ArtinSchreierExt Kt{2, RatFunc::var_t(F2)};
    CHECK_THROWS_AS(splitting_field_equals_K(parse_poly_kfq("x^2 + x + t", F2), Kt),
                    UnsupportedRegime);
}

TEST_CASE("chart equation and record round trip") {
    KummerExt ext{2, Rat(-1)};
    auto f = build_fold<Rat>(ext, parse_poly_q("x^2 + 1"));
    AffinePoint<Rat> pt;
    pt.coord = Rat(0);
    pt.z = {Rat(1), Rat(0)};
    pt.wprime = Rat(1);
    CHECK(point_satisfies_chart(f, pt));  // N(1,0) = 1 = P(0)
    pt.z = {Rat(1), Rat(1)};              // N(1,1) = 2 != 1
    CHECK(!point_satisfies_chart(f, pt));

    Fold fold = f;
    auto rec = to_record(fold);
    CHECK(rec.field == "Q");
    CHECK(rec.ext_kind == "kummer");
    auto fold2 = fold_from_record(rec);
    CHECK(std::get<QFold>(fold2).P == f.P);
    CHECK(std::get<QFold>(fold2).ext.alpha == Rat(-1));

    auto F2 = FqCtx::make(2);
    ArtinSchreierExt ext2{2, RatFunc::with_field(F2, 1)};
    auto g = build_fold<RatFunc>(ext2, parse_poly_kfq("x^2 + x + t", F2));
    auto rec2 = to_record(Fold(g));
    auto g2 = fold_from_record(rec2);
    CHECK(std::get<FFold>(g2).P == g.P);
}
