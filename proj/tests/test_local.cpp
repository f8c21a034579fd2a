#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chatelet/obstruction.hpp"

using namespace chatelet;

namespace {

QFold case1a_fold() {
    KummerExt ext{2, Rat(697)};
    return build_fold<Rat>(ext, parse_poly_q("(x^2 + 12)*(41*x^2 + 493)"));
}

FFold case2_fold() {
    auto F2 = FqCtx::make(2);
    RatFunc t = RatFunc::var_t(F2), one = RatFunc::with_field(F2, 1);
    RatFunc a = t.pow(4) + t.pow(3) + one;
    RatFunc b = t;
    RatFunc lcf = a.pow(-4) * b;
    auto f = Poly<RatFunc>(std::vector<RatFunc>{a / b, one, lcf});
    auto g = f * lcf + Poly<RatFunc>::constant(one);
    ArtinSchreierExt ext{2, -one};  // K = k[T]/(T^2 - T - 1) = k[T]/(T^2 + T + 1)
    return build_fold<RatFunc>(ext, f * g);
}

bool has_place(const std::vector<QPlace>& S, const std::string& name) {
    for (const auto& v : S)
        if (v.to_string() == name) return true;
    return false;
}

bool has_place(const std::vector<FPlace>& S, const std::string& name) {
    for (const auto& v : S)
        if (v.to_string() == name) return true;
    return false;
}

template <class K>
long witness_residual(const FoldData<K>& fold, const LocalWitness<K>& w,
                      const typename PlaceOf<K>::type& v) {
    Poly<K> model = w.chart == AffinePoint<K>::Chart::finite_x
                        ? fold.P
                        : reverse_poly(fold.P, (unsigned)fold.P.degree());
    K wp = w.wprime.one();
    for (unsigned i = 0; i < fold.p(); ++i) wp = wp * w.wprime;
    K resid = fold.norm.eval(w.z) - model.eval(w.coord) * wp;
    auto e = valuation(resid, v);
    return e ? *e : std::numeric_limits<long>::max() / 4;
}

}  // namespace

TEST_CASE("bad places") {
    auto f = case1a_fold();
    auto S = bad_places(f);
    CHECK(has_place(S, "2"));
    CHECK(has_place(S, "17"));
    CHECK(has_place(S, "41"));
    CHECK(has_place(S, "real"));
    CHECK(has_place(S, "3"));   // disc(x^2+12) = -48
    CHECK(has_place(S, "29"));  // 493 = 17*29

    auto g = case2_fold();
    auto T = bad_places(g);
    CHECK(has_place(T, "t"));
    CHECK(has_place(T, "t^4 + t^3 + 1"));
    CHECK(has_place(T, "infinity"));
}

TEST_CASE("real place analysis") {
    SUBCASE("negative definite product is insoluble when alpha < 0") {
        KummerExt ext{2, Rat(-1)};
        auto f = build_fold<Rat>(ext, parse_poly_q("-1*(x^2+1)*(x^2+2)"));
        auto ra = analyze_real_place(f);
        CHECK(!ra.soluble);
    }
    SUBCASE("positive alpha splits") {
        auto f = case1a_fold();
        auto ra = analyze_real_place(f);
        CHECK(ra.splits);
        CHECK(ra.soluble);
        auto bq = brauer_quotient(f);
        auto prof = real_profile(f, bq, plain_class(f, bq.generators[0]), ra);
        REQUIRE(prof.size() == 1);
        CHECK(prof[0].is_zero());
    }
    SUBCASE("sections at real roots") {
        KummerExt ext{2, Rat(-2)};
        auto f = build_fold<Rat>(ext, parse_poly_q("-1*(x^2 - 2)*(x^2 + 3)"));
        // P > 0 exactly between the roots of x^2 - 2
        auto ra = analyze_real_place(f);
        CHECK(ra.soluble);
        bool found_section = false;
        for (const auto& s : ra.spots) found_section |= s.is_section;
        CHECK(found_section);
    }
}

TEST_CASE("local solubility at finite places of Q") {
    auto f = case1a_fold();
    SUBCASE("2 splits (697 = 1 mod 8)") {
        auto [sol, a] = is_locally_soluble(f, QPlace::finite(BigInt(2)));
        CHECK(sol);
        CHECK(a.splits);
        REQUIRE(a.witness.has_value());
        CHECK(a.witness->kind == WitnessKind::Isotropic);
        CHECK(a.witness->residual_valuation >= 8);
    }
    SUBCASE("good prime") {
        auto [sol, a] = is_locally_soluble(f, QPlace::finite(BigInt(5)));
        CHECK(sol);
        REQUIRE(a.witness.has_value());
        CHECK(witness_residual(f, *a.witness, a.place) >= 6);
        CHECK(audit_disk_cover(a));
    }
    SUBCASE("the obstructing place is still soluble") {
        auto [sol, a] = is_locally_soluble(f, QPlace::finite(BigInt(17)));
        CHECK(sol);
        REQUIRE(a.witness.has_value());
        CHECK(witness_residual(f, *a.witness, a.place) >= 6);
        CHECK(audit_disk_cover(a));
    }
    SUBCASE("an insoluble example: Q(sqrt 5), P = 3(x^4+1) at v = 3") {
        KummerExt ext{2, Rat(5)};
        auto g = build_fold<Rat>(ext, parse_poly_q("3*x^4 + 3"));
        auto [sol, a] = is_locally_soluble(g, QPlace::finite(BigInt(3)));
        CHECK(!sol);
        CHECK(audit_disk_cover(a));
        for (const auto& leaf : a.leaves) CHECK(leaf.kind == DiskLeaf<Rat>::Kind::Refuted);
    }
}

TEST_CASE("invariant profiles for the flagship fold") {
    auto f = case1a_fold();
    auto bq = brauer_quotient(f);
    REQUIRE(bq.order == 2);
    auto gen = bq.generators[0];
    EngineLimits lim;
    lim.min_depth = 2;

    SUBCASE("profile at 17 is the constant 1/2") {
        auto a = analyze_place(f, QPlace::finite(BigInt(17)), lim, false);
        auto [values, constant] = profile_from_analysis(f, bq, gen, a);
        CHECK(constant);
        REQUIRE(values.size() == 1);
        CHECK(values[0] == InvariantValue(1, 2));
    }
    SUBCASE("profiles at the other bad places vanish") {
        for (long v : {2l, 3l, 29l, 41l}) {
            auto a = analyze_place(f, QPlace::finite(BigInt(v)), lim, false);
            CHECK(a.soluble);
            auto [values, constant] = profile_from_analysis(f, bq, gen, a);
            CHECK(constant);
            REQUIRE(values.size() == 1);
            CHECK(values[0].is_zero());
        }
    }
    SUBCASE("profiles at good places vanish") {
        EngineLimits l1;
        l1.min_depth = 1;
        for (long v : {5l, 7l, 11l}) {
            auto a = analyze_place(f, QPlace::finite(BigInt(v)), l1, false);
            auto [values, constant] = profile_from_analysis(f, bq, gen, a);
            CHECK(constant);
            REQUIRE(values.size() == 1);
            CHECK(values[0].is_zero());
        }
    }
    SUBCASE("invariant_at a certified point agrees with the profile") {
        auto a = analyze_place(f, QPlace::finite(BigInt(17)), lim, true);
        REQUIRE(a.witness.has_value());
        CHECK(invariant_at(f, bq, gen, a.place, *a.witness) == InvariantValue(1, 2));
    }
}

TEST_CASE("bm_obstruction: the flagship counterexample is obstructed") {
    auto f = case1a_fold();
    auto rep = bm_obstruction(f);
    CHECK(rep.verdict == "Obstructed");
    REQUIRE(rep.obstructing_class.has_value());
    const auto& cls = rep.classes[*rep.obstructing_class];
    CHECK(cls.sum == "1/2");
    // the sum is concentrated at v = 17
    for (const auto& pr : cls.profiles) {
        REQUIRE(pr.constant);
        if (pr.place == "17")
            CHECK(pr.values == std::vector<std::string>{"1/2"});
        else
            CHECK(pr.values == std::vector<std::string>{"0/2"});
    }
    for (const auto& pl : rep.places) {
        CHECK(pl.soluble);
        CHECK(pl.cover_audited);
    }
}

TEST_CASE("bm_obstruction: trivial Brauer group reports NotObstructed") {
    KummerExt ext{2, Rat(2)};
    auto f = build_fold<Rat>(ext, parse_poly_q("x^4 + x + 1"));  // irreducible quartic
    auto rep = bm_obstruction(f);
    CHECK(rep.verdict == "NotObstructed");
    CHECK(rep.brauer_order == 1);
}

TEST_CASE("bm_obstruction: insoluble fold reports NoLocalPoints") {
    KummerExt ext{2, Rat(-1)};
    auto f = build_fold<Rat>(ext, parse_poly_q("-1*(x^2+1)*(x^2+2)"));
    auto rep = bm_obstruction(f);
    CHECK(rep.verdict == "NoLocalPoints");
}

TEST_CASE("function field: case 2 machinery") {
    auto g = case2_fold();
    auto bq = brauer_quotient(g);
    REQUIRE(bq.order == 2);
    EngineLimits lim;
    lim.min_depth = 2;
    auto F2 = FqCtx::make(2);

    // the paper-normalized obstruction class (chi_K, f(x)): monic factor of
    // f twisted back by its leading coefficient a^(-4) b
    RatFunc t = RatFunc::var_t(F2), one = RatFunc::with_field(F2, 1);
    RatFunc a_poly = t.pow(4) + t.pow(3) + one;
    RatFunc lcf = a_poly.pow(-4) * t;
    auto fpoly = Poly<RatFunc>(std::vector<RatFunc>{a_poly / t, one, lcf});
    ClassSpec<RatFunc> cls_f;
    cls_f.twist = lcf;
    cls_f.label = "(chi_K, f(x))";
    {
        Poly<RatFunc> fm = monic(fpoly);
        cls_f.exponents.assign(g.fac.factors.size(), 0);
        bool found = false;
        for (size_t i = 0; i < g.fac.factors.size(); ++i)
            if (g.fac.factors[i] == fm) {
                cls_f.exponents[i] = 1;
                found = true;
            }
        REQUIRE(found);
    }

    SUBCASE("soluble at the place t with constant invariant 1/2") {
        FPlace vt = FPlace::finite(Poly<FFElem>::x(FFElem::from_int_in(F2, 1)));
        auto a = analyze_place(g, vt, lim, true);
        CHECK(a.soluble);
        REQUIRE(a.witness.has_value());
        CHECK(witness_residual(g, *a.witness, vt) >= 6);
        CHECK(audit_disk_cover(a));
        auto [values, constant] = profile_from_analysis(g, bq, cls_f, a);
        CHECK(constant);
        REQUIRE(values.size() == 1);
        CHECK(values[0] == InvariantValue(1, 2));
    }
    SUBCASE("soluble at infinity with vanishing invariant") {
        FPlace vi = FPlace::infinity(F2);
        auto a = analyze_place(g, vi, lim, true);
        CHECK(a.soluble);
        auto [values, constant] = profile_from_analysis(g, bq, cls_f, a);
        CHECK(constant);
        REQUIRE(values.size() == 1);
        CHECK(values[0].is_zero());
    }
    SUBCASE("full verdict: Obstructed, concentrated at t") {
        auto rep = bm_obstruction(g, {}, {cls_f});
        CHECK(rep.verdict == "Obstructed");
        REQUIRE(rep.obstructing_class.has_value());
        const auto& cls = rep.classes[*rep.obstructing_class];
        CHECK(cls.sum == "1/2");
        CHECK(cls.label == "(chi_K, f(x))");
        for (const auto& pr : cls.profiles) {
            REQUIRE(pr.constant);
            if (pr.place == "t")
                CHECK(pr.values == std::vector<std::string>{"1/2"});
            else
                CHECK(pr.values == std::vector<std::string>{"0/2"});
        }
    }
}
