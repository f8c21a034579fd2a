#include "chatelet/obstruction.hpp"

#include <future>

namespace chatelet {

// ---------------------------------------------------------------------------
// real place
// ---------------------------------------------------------------------------

RealAnalysis analyze_real_place(const QFold& fold) {
    RealAnalysis ra;
    if (fold.ext.alpha.sign() > 0) {
        // K ⊗ R splits: the norm form is isotropic over R, every fiber has
        // real points
        ra.splits = true;
        ra.soluble = true;
        ra.spots.push_back(RealSpot{Rat(0), false, 0, Rat(0), Rat(0)});
        ra.witness_sample = Rat(0);
        return ra;
    }
    // alpha < 0: N is positive definite in the Kummer regime (p = 2), the
    // fiber over x has real points iff P(x) >= 0
    auto intervals = isolate_real_roots(fold.P);
    std::vector<Rat> samples;
    Rat B = real_root_bound(fold.P);
    if (intervals.empty()) {
        samples.push_back(Rat(0));
    } else {
        samples.push_back(intervals.front().first - Rat(1));
        for (size_t i = 0; i + 1 < intervals.size(); ++i)
            samples.push_back((intervals[i].second + intervals[i + 1].first) * Rat(1, 2));
        samples.push_back(intervals.back().second + Rat(1));
    }
    (void)B;
    for (const Rat& s : samples) {
        if (fold.P.eval(s).sign() > 0) {
            ra.spots.push_back(RealSpot{s, false, 0, Rat(0), Rat(0)});
            ra.soluble = true;
            if (!ra.witness_sample) ra.witness_sample = s;
        }
    }
    for (const auto& [lo, hi] : intervals) {
        // locate the factor vanishing in this isolating interval
        size_t which = fold.fac.factors.size();
        for (size_t i = 0; i < fold.fac.factors.size(); ++i) {
            const auto& g = fold.fac.factors[i];
            if (g.eval(lo).sign() * g.eval(hi).sign() < 0 || g.eval(lo).is_zero() ||
                g.eval(hi).is_zero()) {
                which = i;
                break;
            }
        }
        if (which == fold.fac.factors.size()) continue;  // complex-root factor pair, no real root
        RealSpot spot;
        spot.sample = (lo + hi) * Rat(1, 2);
        spot.is_section = true;
        spot.factor = which;
        spot.lo = lo;
        spot.hi = hi;
        ra.spots.push_back(spot);
        ra.soluble = true;
        if (!ra.witness_sample) {
            ra.witness_sample = spot.sample;
            ra.witness_is_section = true;
            ra.witness_interval = {lo, hi};
        }
    }
    return ra;
}

std::vector<InvariantValue> real_profile(const QFold& fold, const BrauerQuotient& bq,
                                         const ClassSpec<Rat>& cls, const RealAnalysis& ra) {
    std::set<InvariantValue> vals;
    if (ra.splits) {
        vals.insert(InvariantValue(0, fold.p()));
    } else {
        for (const auto& spot : ra.spots) {
            std::vector<size_t> forbidden;
            if (spot.is_section) forbidden.push_back(spot.factor);
            auto avoid = representative_avoiding(bq, cls.exponents, forbidden);
            Rat q = cls.twist * fold.fac.content.pow(avoid.content_power);
            for (size_t i = 0; i < avoid.exponents.size(); ++i)
                for (unsigned e = 0; e < avoid.exponents[i]; ++e)
                    q = q * fold.fac.factors[i].eval(spot.sample);
            // (alpha, q)_real: nonzero iff both negative; alpha < 0 here
            vals.insert(hilbert_symbol_real(fold.ext.alpha, q));
        }
    }
    return std::vector<InvariantValue>(vals.begin(), vals.end());
}

// ---------------------------------------------------------------------------
// record builders
// ---------------------------------------------------------------------------

namespace {

template <class K>
WitnessRecord witness_record(const LocalWitness<K>& w) {
    WitnessRecord r;
    r.kind = witness_kind_name(w.kind);
    r.chart = w.chart == AffinePoint<K>::Chart::finite_x ? "finite_x" : "infinite_x";
    r.coord = w.coord.to_string();
    for (const auto& zi : w.z) r.z.push_back(zi.to_string());
    r.wprime = w.wprime.to_string();
    r.residual_valuation = w.residual_valuation;
    r.exact = w.exact;
    return r;
}

template <class K>
PlaceRecord place_record(const PlaceAnalysis<K>& a) {
    PlaceRecord r;
    r.place = a.place.to_string();
    r.splits = a.splits;
    r.soluble = a.soluble;
    if (a.witness) r.witness = witness_record(*a.witness);
    for (const auto& leaf : a.leaves) {
        DiskRecordOut d;
        d.chart = leaf.chart == AffinePoint<K>::Chart::finite_x ? "finite_x" : "infinite_x";
        d.center = leaf.center.to_string();
        d.depth = leaf.depth;
        switch (leaf.kind) {
            case DiskLeaf<K>::Kind::Refuted: d.kind = "refuted"; d.symbol = leaf.p_symbol.to_string(); break;
            case DiskLeaf<K>::Kind::Soluble: d.kind = "soluble"; d.symbol = leaf.p_symbol.to_string(); break;
            case DiskLeaf<K>::Kind::RootDisk: d.kind = "root"; d.symbol = ""; break;
        }
        r.disks.push_back(std::move(d));
    }
    r.cover_audited = audit_disk_cover(a);
    return r;
}

// good places for spot checks, smallest first, excluding S
std::vector<QPlace> good_places(const QFold& fold, const std::vector<QPlace>& S, unsigned count) {
    std::vector<QPlace> out;
    BigInt p = 1;
    while (out.size() < count) {
        p = next_prime(p);
        QPlace v = QPlace::finite(p);
        bool bad = false;
        for (const auto& s : S)
            if (s == v) bad = true;
        if (!bad) out.push_back(v);
    }
    (void)fold;
    return out;
}

std::vector<FPlace> good_places(const FFold& fold, const std::vector<FPlace>& S, unsigned count) {
    std::vector<FPlace> out;
    FFElem one = FFElem::from_int_in(fold.ext.gamma.field(), 1);
    IrreducibleStream<FFElem> stream(one);
    while (out.size() < count) {
        FPlace v = FPlace::finite(stream.next());
        bool bad = false;
        for (const auto& s : S)
            if (s == v) bad = true;
        if (!bad) out.push_back(v);
    }
    return out;
}

/// Runs the finite places (optionally in parallel) and fills the report's
/// place records; returns the analyses for the profile stage.
template <class K>
std::vector<PlaceAnalysis<K>> run_finite_places(
    const FoldData<K>& fold, const std::vector<typename PlaceOf<K>::type>& places,
    const ObstructionOptions& opt, ObstructionReport& rep) {
    EngineLimits lim;
    lim.min_depth = opt.depth;
    std::vector<PlaceAnalysis<K>> analyses(places.size(), PlaceAnalysis<K>{});
    auto work = [&](size_t i) { analyses[i] = analyze_place(fold, places[i], lim, true); };
    if (opt.jobs > 1) {
        std::vector<std::future<void>> futs;
        size_t next = 0;
        while (next < places.size()) {
            futs.clear();
            for (unsigned j = 0; j < opt.jobs && next < places.size(); ++j, ++next)
                futs.push_back(std::async(std::launch::async, work, next));
            for (auto& f : futs) f.get();
        }
    } else {
        for (size_t i = 0; i < places.size(); ++i) work(i);
    }
    for (const auto& a : analyses) rep.places.push_back(place_record(a));
    return analyses;
}

template <class K>
ObstructionReport bm_obstruction_impl(const FoldData<K>& fold, const ObstructionOptions& opt,
                                      bool has_real_place,
                                      const std::vector<ClassSpec<K>>& expected) {
    ObstructionReport rep;
    rep.fold = to_record(Fold(fold));

    auto S = bad_places(fold);
    std::vector<typename PlaceOf<K>::type> finite;
    for (const auto& v : S) {
        rep.bad_places.push_back(v.to_string());
        if constexpr (std::is_same_v<K, Rat>) {
            if (!v.is_real) finite.push_back(v);
        } else {
            finite.push_back(v);
        }
    }

    BrauerQuotient bq = brauer_quotient(fold);
    rep.brauer_order = bq.order;

    auto analyses = run_finite_places(fold, finite, opt, rep);

    RealAnalysis ra;
    if constexpr (std::is_same_v<K, Rat>) {
        if (has_real_place) {
            ra = analyze_real_place(fold);
            PlaceRecord r;
            r.place = "real";
            r.splits = ra.splits;
            r.soluble = ra.soluble;
            r.cover_audited = true;  // sign analysis is exact; nothing to tile
            if (ra.soluble && ra.witness_sample) {
                WitnessRecord w;
                w.kind = ra.witness_is_section ? "section" : "real_sign";
                w.coord = ra.witness_sample->to_string();
                w.exact = true;
                w.residual_valuation = 0;
                r.witness = w;
            }
            rep.places.push_back(r);
        }
    }

    bool all_soluble = true;
    for (const auto& a : analyses) all_soluble &= a.soluble;
    if constexpr (std::is_same_v<K, Rat>) {
        if (has_real_place) all_soluble &= ra.soluble;
    }
    if (!all_soluble) {
        rep.verdict = "NoLocalPoints";
        rep.notes.push_back("some place has an empty local point set; certificates attached");
        return rep;
    }

    if (bq.is_trivial()) {
        rep.verdict = "NotObstructed";
        rep.notes.push_back("Br X / Br k is trivial: constant algebras only, no obstruction");
        return rep;
    }

    // expected classes first (paper-normalized representatives), then any
    // generator classes not already present
    std::vector<ClassSpec<K>> classes = expected;
    for (const auto& gen : bq.generators) {
        bool covered = false;
        for (const auto& e : classes)
            covered |= (bq.canonicalize(e.exponents) == bq.canonicalize(gen) && e.twist.is_one());
        if (!covered) classes.push_back(plain_class(fold, gen));
    }

    bool all_constant = true;
    bool some_nonzero_sum = false;
    for (const auto& spec : classes) {
        ClassRecord cls;
        cls.exponents = spec.exponents;
        cls.twist = spec.twist.to_string();
        cls.label = spec.label;
        cls.representative =
            (Poly<K>::constant(spec.twist) * representative_poly(fold, spec.exponents)).to_string();
        InvariantValue sum(0, fold.p());
        bool cls_constant = true;
        for (size_t i = 0; i < analyses.size(); ++i) {
            auto [values, constant] = profile_from_analysis(fold, bq, spec, analyses[i]);
            ProfileRecord pr;
            pr.place = finite[i].to_string();
            for (const auto& val : values) pr.values.push_back(val.to_string());
            pr.constant = constant;
            cls.profiles.push_back(pr);
            if (!constant)
                cls_constant = false;
            else if (!values.empty())
                sum = sum + values[0];
        }
        if constexpr (std::is_same_v<K, Rat>) {
            if (has_real_place) {
                auto values = real_profile(fold, bq, spec, ra);
                ProfileRecord pr;
                pr.place = "real";
                for (const auto& val : values) pr.values.push_back(val.to_string());
                pr.constant = values.size() == 1;
                cls.profiles.push_back(pr);
                if (values.size() != 1)
                    cls_constant = false;
                else
                    sum = sum + values[0];
            }
        }
        cls.all_constant = cls_constant;
        cls.sum = cls_constant ? sum.to_string() : "undetermined";
        cls.sum_nonzero = cls_constant && !sum.is_zero();
        if (!cls_constant) all_constant = false;
        if (cls.sum_nonzero) some_nonzero_sum = true;
        rep.classes.push_back(std::move(cls));
    }

    // good places contribute 0 by the theory; spot-check the smallest ones
    unsigned checks = opt.spot_checks;
    if (opt.paranoid) checks = std::max<unsigned>(checks, (unsigned)opt.paranoid_bound);
    auto good = good_places(fold, S, opt.paranoid ? 64 : checks);
    EngineLimits goodlim;
    goodlim.min_depth = 1;
    unsigned checked = 0;
    for (const auto& v : good) {
        if (!opt.paranoid && checked >= opt.spot_checks) break;
        if (opt.paranoid) {
            if constexpr (std::is_same_v<K, Rat>) {
                if (v.prime > opt.paranoid_bound) break;
            } else {
                if (v.degree() > 2) break;
            }
        }
        auto a = analyze_place(fold, v, goodlim, false);
        if (!a.soluble) {
            rep.verdict = "Inconclusive";
            rep.notes.push_back("good place " + v.to_string() + " unexpectedly insoluble");
            return rep;
        }
        for (const auto& gen : bq.generators) {
            auto [values, constant] = profile_from_analysis(fold, bq, gen, a);
            if (!constant || values.empty() || !values[0].is_zero()) {
                rep.verdict = "Inconclusive";
                rep.notes.push_back("good place " + v.to_string() +
                                    " has a nontrivial invariant profile");
                return rep;
            }
        }
        ++checked;
    }
    rep.notes.push_back("good-place spot checks passed at " + std::to_string(checked) +
                        " places (invariants all 0)");

    if (!all_constant) {
        rep.verdict = "Inconclusive";
        rep.notes.push_back("some invariant profile is non-constant at the probed depth");
        return rep;
    }
    if (some_nonzero_sum) {
        rep.verdict = "Obstructed";
        for (size_t i = 0; i < rep.classes.size(); ++i)
            if (rep.classes[i].sum_nonzero && !rep.obstructing_class) rep.obstructing_class = i;
        rep.notes.push_back("a rational point would force every class sum to vanish");
    } else {
        rep.verdict = "NotObstructed";
    }
    return rep;
}

}  // namespace

WitnessRecord to_record(const LocalWitness<Rat>& w) { return witness_record(w); }
WitnessRecord to_record(const LocalWitness<RatFunc>& w) { return witness_record(w); }
PlaceRecord to_record(const PlaceAnalysis<Rat>& a) { return place_record(a); }
PlaceRecord to_record(const PlaceAnalysis<RatFunc>& a) { return place_record(a); }

ObstructionReport bm_obstruction(const QFold& fold, const ObstructionOptions& opt,
                                 const std::vector<ClassSpec<Rat>>& expected) {
    return bm_obstruction_impl(fold, opt, true, expected);
}

ObstructionReport bm_obstruction(const FFold& fold, const ObstructionOptions& opt,
                                 const std::vector<ClassSpec<RatFunc>>& expected) {
    return bm_obstruction_impl(fold, opt, false, expected);
}

}  // namespace chatelet
