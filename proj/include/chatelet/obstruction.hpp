#pragma once

#include "chatelet/local.hpp"

namespace chatelet {

// ---------------------------------------------------------------------------
// real place (Q only)
// ---------------------------------------------------------------------------

struct RealSpot {
    Rat sample;            // rational sample point of a soluble region
    bool is_section = false;
    size_t factor = 0;     // section only: which factor vanishes
    Rat lo, hi;            // section only: isolating interval
};

struct RealAnalysis {
    bool splits = false;  // alpha > 0: K ⊗ R = R x R
    bool soluble = false;
    std::vector<RealSpot> spots;  // soluble samples with sign data
    std::optional<Rat> witness_sample;
    bool witness_is_section = false;
    std::pair<Rat, Rat> witness_interval{Rat(0), Rat(0)};
};

RealAnalysis analyze_real_place(const QFold& fold);

// (ClassSpec is declared below; the real-place profile needs it)
template <class K>
struct ClassSpec;

/// Invariant values of the class over the soluble real locus.
std::vector<InvariantValue> real_profile(const QFold& fold, const BrauerQuotient& bq,
                                         const ClassSpec<Rat>& cls, const RealAnalysis& ra);

// ---------------------------------------------------------------------------
// profiles at finite places
// ---------------------------------------------------------------------------

/// A Brauer class with a concrete cyclic-algebra representative: exponents
/// against the monic factors plus a constant twist c' (the representative is
/// (chi_K, c' * prod P_i^(n_i))).  The twist is a constant algebra: it moves
/// invariants between places (summing to 0 over all of them) but never
/// changes the class in Br X / Br k or any verdict.
template <class K>
struct ClassSpec {
    std::vector<unsigned> exponents;
    K twist;
    std::string label;
};
// definition for the forward declaration above

template <class K>
ClassSpec<K> plain_class(const FoldData<K>& fold, const std::vector<unsigned>& exps) {
    return ClassSpec<K>{exps, fold.fac.content.one(), ""};
}

template <class K>
std::pair<std::vector<InvariantValue>, bool> profile_from_analysis(
    const FoldData<K>& fold, const BrauerQuotient& bq, const ClassSpec<K>& cls,
    const PlaceAnalysis<K>& A) {
    std::set<InvariantValue> vals;
    const unsigned p = fold.p();
    if (A.splits) {
        vals.insert(InvariantValue(0, p));
    } else {
        InvariantValue twist_sym = cls.twist.is_one()
                                       ? InvariantValue(0, p)
                                       : symbol_at(fold.ext, cls.twist, A.place);
        for (const auto& leaf : A.leaves) {
            if (leaf.kind == DiskLeaf<K>::Kind::Refuted) continue;
            InvariantValue acc = twist_sym;
            if (leaf.kind == DiskLeaf<K>::Kind::Soluble) {
                for (size_t i = 0; i < cls.exponents.size(); ++i)
                    if (cls.exponents[i])
                        acc = acc + leaf.factor_syms[i]->scaled((long)cls.exponents[i]);
            } else {
                auto avoid = representative_avoiding(bq, cls.exponents, {*leaf.root_factor});
                acc = acc + A.content_sym.scaled((long)avoid.content_power);
                for (size_t i = 0; i < avoid.exponents.size(); ++i)
                    if (avoid.exponents[i])
                        acc = acc + leaf.factor_syms[i]->scaled((long)avoid.exponents[i]);
            }
            vals.insert(acc);
        }
    }
    std::vector<InvariantValue> out(vals.begin(), vals.end());
    return {out, out.size() == 1};
}

template <class K>
std::pair<std::vector<InvariantValue>, bool> profile_from_analysis(
    const FoldData<K>& fold, const BrauerQuotient& bq, const std::vector<unsigned>& exps,
    const PlaceAnalysis<K>& A) {
    return profile_from_analysis(fold, bq, plain_class(fold, exps), A);
}

/// Invariant of a Brauer class at a single certified local point: the
/// representative is shifted off any factor vanishing at the point's
/// coordinate, then evaluated through the local symbol.
template <class K>
InvariantValue invariant_at(const FoldData<K>& fold, const BrauerQuotient& bq,
                            const std::vector<unsigned>& exps,
                            const typename PlaceOf<K>::type& v, const LocalWitness<K>& pt) {
    const unsigned p = fold.p();
    if (place_splits(fold.ext, v)) return InvariantValue(0, p);
    bool at_infinity_chart = pt.chart == AffinePoint<K>::Chart::infinite_x;
    std::vector<size_t> forbidden;
    std::vector<K> values;
    for (size_t i = 0; i < fold.fac.factors.size(); ++i) {
        Poly<K> g = fold.fac.factors[i];
        if (at_infinity_chart) g = reverse_poly(g, (unsigned)g.degree());
        K val = g.eval(pt.coord);
        values.push_back(val);
        if (val.is_zero()) forbidden.push_back(i);
    }
    auto avoid = representative_avoiding(bq, exps, forbidden);
    InvariantValue acc = symbol_at(fold.ext, fold.fac.content, v).scaled((long)avoid.content_power);
    for (size_t i = 0; i < avoid.exponents.size(); ++i)
        if (avoid.exponents[i])
            acc = acc + symbol_at(fold.ext, values[i], v).scaled((long)avoid.exponents[i]);
    return acc;
}

// ---------------------------------------------------------------------------
// report data (string-valued, serialization-friendly)
// ---------------------------------------------------------------------------

struct WitnessRecord {
    std::string kind;
    std::string chart;
    std::string coord;
    std::vector<std::string> z;
    std::string wprime;
    long residual_valuation = 0;
    bool exact = false;
};

struct DiskRecordOut {
    std::string chart;
    std::string center;
    long depth = 1;
    std::string kind;    // refuted | soluble | root
    std::string symbol;  // P-symbol for refuted/soluble
};

struct PlaceRecord {
    std::string place;
    bool splits = false;
    bool soluble = false;
    bool cover_audited = false;
    std::optional<WitnessRecord> witness;
    std::vector<DiskRecordOut> disks;
};

struct ProfileRecord {
    std::string place;
    std::vector<std::string> values;
    bool constant = true;
};

struct ClassRecord {
    std::vector<unsigned> exponents;
    std::string twist;  // constant multiplier of the representative ("1" = none)
    std::string label;
    std::string representative;
    std::vector<ProfileRecord> profiles;
    std::string sum;
    bool sum_nonzero = false;
    bool all_constant = true;
};

struct ObstructionReport {
    FoldRecord fold;
    std::string verdict;  // NoLocalPoints | Obstructed | NotObstructed | Inconclusive
    std::optional<size_t> obstructing_class;
    unsigned long brauer_order = 1;
    std::vector<std::string> bad_places;
    std::vector<PlaceRecord> places;
    std::vector<ClassRecord> classes;
    std::vector<std::string> notes;
};

struct ObstructionOptions {
    long depth = 2;           // uniform starting refinement at bad places
    unsigned spot_checks = 3; // good places sampled for triviality
    bool paranoid = false;    // check all good places up to paranoid_bound
    long paranoid_bound = 50;
    unsigned jobs = 1;
};

/// Expected classes (from the counterexample constructions) are reported
/// first, with their paper-normalized representatives; the generator classes
/// then fill in whatever is not already covered.
ObstructionReport bm_obstruction(const QFold& fold, const ObstructionOptions& opt = {},
                                 const std::vector<ClassSpec<Rat>>& expected = {});
ObstructionReport bm_obstruction(const FFold& fold, const ObstructionOptions& opt = {},
                                 const std::vector<ClassSpec<RatFunc>>& expected = {});
inline ObstructionReport bm_obstruction(const Fold& fold, const ObstructionOptions& opt = {}) {
    if (std::holds_alternative<QFold>(fold)) return bm_obstruction(std::get<QFold>(fold), opt);
    return bm_obstruction(std::get<FFold>(fold), opt);
}

/// Local solubility with witness-or-certificate, the user-facing entry.
template <class K>
std::pair<bool, PlaceAnalysis<K>> is_locally_soluble(const FoldData<K>& fold,
                                                     const typename PlaceOf<K>::type& v,
                                                     const EngineLimits& lim = {}) {
    auto A = analyze_place(fold, v, lim, true);
    return {A.soluble, A};
}

// record building helpers shared with the CLI/JSON layer
WitnessRecord to_record(const LocalWitness<Rat>& w);
WitnessRecord to_record(const LocalWitness<RatFunc>& w);
PlaceRecord to_record(const PlaceAnalysis<Rat>& a);
PlaceRecord to_record(const PlaceAnalysis<RatFunc>& a);

}  // namespace chatelet
