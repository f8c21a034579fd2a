#pragma once

#include <deque>
#include <functional>
#include <limits>
#include <set>

#include "chatelet/brauer.hpp"
#include "chatelet/padic.hpp"
#include "chatelet/place.hpp"
#include "chatelet/sturm.hpp"

namespace chatelet {

enum class WitnessKind { Section, NormSolution, Isotropic, RealSign };

inline const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::Section: return "section";
        case WitnessKind::NormSolution: return "norm_solution";
        case WitnessKind::Isotropic: return "isotropic";
        case WitnessKind::RealSign: return "real_sign";
    }
    return "?";
}

/// A certified local point: exact field elements approximating a k_v point,
/// with the valuation of the chart-equation residual recorded, plus the
/// final Hensel-criterion data (residual vs derivative valuation).
template <class K>
struct LocalWitness {
    WitnessKind kind = WitnessKind::NormSolution;
    typename AffinePoint<K>::Chart chart = AffinePoint<K>::Chart::finite_x;
    K coord;
    std::vector<K> z;
    K wprime;
    long residual_valuation = 0;  // certified lower bound; LONG_MAX-ish for exact
    bool exact = false;

    AffinePoint<K> as_point() const { return AffinePoint<K>{chart, coord, z, wprime}; }
};

/// Leaf disk of the refinement: a full classification of the fiber symbols
/// over {x = center + pi^depth * O_v} (or the reversed chart).
template <class K>
struct DiskLeaf {
    typename AffinePoint<K>::Chart chart = AffinePoint<K>::Chart::finite_x;
    K center;
    long depth = 1;
    enum class Kind { Refuted, Soluble, RootDisk } kind = Kind::Refuted;
    InvariantValue p_symbol;  // meaningful for Refuted/Soluble
    std::vector<std::optional<InvariantValue>> factor_syms;
    std::optional<size_t> root_factor;  // RootDisk only
};

template <class K>
struct PlaceAnalysis {
    using Place = typename PlaceOf<K>::type;
    Place place;
    bool splits = false;
    bool soluble = false;
    std::optional<LocalWitness<K>> witness;
    std::vector<DiskLeaf<K>> leaves;  // complete cover of P^1(k_v) when !splits
    InvariantValue content_sym;
    unsigned p = 2;
};

namespace detail {

/// Exact Newton iteration on one coordinate of the norm form; requires the
/// classical criterion val(f(w0)) > 2 val(f'(w0)) at the place.  Everything
/// stays in exact global arithmetic; only valuations at v are consulted.
template <class K, class Place>
std::optional<K> newton_refine(const Poly<K>& f, const K& w0, const Place& v, long target) {
    Poly<K> fp = derivative(f);
    K w = w0;
    auto val_of = [&](const K& x) -> long {
        auto e = valuation(x, v);
        return e ? *e : std::numeric_limits<long>::max() / 4;
    };
    long fv = val_of(f.eval(w));
    long dv = val_of(fp.eval(w));
    if (fv <= 2 * dv) return std::nullopt;
    int guard = 0;
    while (fv < target && guard++ < 64) {
        K step = f.eval(w) / fp.eval(w);
        w = w - step;
        long nfv = val_of(f.eval(w));
        if (nfv <= fv) return std::nullopt;  // no contraction: criterion was hollow
        fv = nfv;
        dv = val_of(fp.eval(w));
    }
    if (fv < target) return std::nullopt;
    return w;
}

template <class K>
K pow_k(const K& x, unsigned e) {
    K r = x.one();
    for (unsigned i = 0; i < e; ++i) r = r * x;
    return r;
}

/// theta * (vector in the power basis), reduced through theta^p = tail.
template <class K>
std::vector<K> theta_shift(const std::vector<K>& z, const std::vector<K>& tail) {
    size_t p = z.size();
    std::vector<K> r(p, z[0].zero());
    K top = z[p - 1];
    for (size_t i = p - 1; i >= 1; --i) r[i] = z[i - 1];
    r[0] = z[0].zero();
    for (size_t i = 0; i < p; ++i) r[i] = r[i] + top * tail[i];
    return r;
}

template <class K>
std::vector<K> get_tail(const FoldData<K>& fold);
template <>
inline std::vector<Rat> get_tail(const FoldData<Rat>& fold) { return kummer_tail(fold.ext); }
template <>
inline std::vector<RatFunc> get_tail(const FoldData<RatFunc>& fold) {
    return artin_schreier_tail(fold.ext);
}

/// Residue-enumeration precision for the norm-equation search: deep enough
/// that any true solution yields a candidate meeting the Newton criterion.
inline long enum_precision(const KummerExt& ext, const QPlace& v) {
    (void)ext;
    return v.prime == 2 ? 4 : 1;
}
inline long enum_precision(const ArtinSchreierExt& ext, const FPlace& v) {
    return symbol_slack(ext, v);
}

}  // namespace detail

/// Solve N(z) = V over k_v to the given residual valuation.  Handles
/// valuations not divisible by p via multiplication by theta (whose norm has
/// the generator's valuation), then searches residue representatives and
/// lifts one coordinate by exact Newton.  Returns std::nullopt only if the
/// enumeration finds no certified start (callers treat that as an error when
/// the symbol said "norm").
template <class K>
std::optional<std::vector<K>> solve_norm_value(const FoldData<K>& fold,
                                               const typename PlaceOf<K>::type& v, const K& V,
                                               long target) {
    const unsigned p = fold.p();
    auto tail = detail::get_tail(fold);
    const K one = V.one();
    K uni = uniformizer(v);

    long e = *valuation(V, v);
    K V_work = V;
    unsigned theta_mults = 0;
    if (e % (long)p != 0) {
        // N(theta) = (-1)^(p-1) * tail_0 (constant term of the minimal
        // polynomial up to sign); its valuation can repair e mod p
        K ntheta = tail[0];
        if (p % 2 == 0) ntheta = -ntheta;
        auto vn = valuation(ntheta, v);
        if (!vn || *vn % (long)p == 0) return std::nullopt;  // cannot fix the parity
        for (theta_mults = 1; theta_mults < p; ++theta_mults) {
            if ((e - (long)theta_mults * *vn) % (long)p == 0) break;
        }
        for (unsigned i = 0; i < theta_mults; ++i) V_work = V_work / ntheta;
        e = *valuation(V_work, v);
        if (e % (long)p != 0) return std::nullopt;
    }
    K scale = detail::pow_k(uni, (unsigned)std::abs(e / (long)p));
    if (e < 0) scale = scale.inv();
    K V_unit = V_work / detail::pow_k(scale, p);

    long c = detail::enum_precision(fold.ext, v);
    auto reps = residue_reps(v);
    // candidate coordinates: all residue tuples mod uni^c
    std::vector<K> coords;
    {
        std::vector<size_t> idx((size_t)c, 0);
        std::vector<K> uni_pows{one};
        for (long i = 1; i < c; ++i) uni_pows.push_back(uni_pows.back() * uni);
        while (true) {
            K x = one.zero();
            for (long i = 0; i < c; ++i) x = x + reps[idx[(size_t)i]] * uni_pows[(size_t)i];
            coords.push_back(x);
            size_t i = 0;
            for (; i < (size_t)c; ++i) {
                if (++idx[i] < reps.size()) break;
                idx[i] = 0;
            }
            if (i == (size_t)c) break;
        }
    }

    long lift_target = target + 2 * c + 2;
    std::vector<size_t> sel(p, 0);
    while (true) {
        std::vector<K> z;
        for (unsigned i = 0; i < p; ++i) z.push_back(coords[sel[i]]);
        K r = fold.norm.eval(z) - V_unit;
        auto rv = valuation(r, v);
        bool done = false;
        std::vector<K> sol;
        if (!rv) {  // exact solution at the residue level
            sol = z;
            done = true;
        } else {
            for (unsigned i = 0; i < p && !done; ++i) {
                Poly<K> f = fold.norm.to_univariate(i, z) - Poly<K>::constant(V_unit);
                auto w = detail::newton_refine(f, z[i], v, lift_target);
                if (w) {
                    sol = z;
                    sol[i] = *w;
                    done = true;
                }
            }
        }
        if (done) {
            for (auto& zi : sol) zi = zi * scale;
            for (unsigned i = 0; i < theta_mults; ++i) sol = detail::theta_shift(sol, tail);
            K resid = fold.norm.eval(sol) - V;
            auto fv = valuation(resid, v);
            if (!fv || *fv >= target) return sol;
            // fall through: try other candidates
        }
        size_t i = 0;
        for (; i < p; ++i) {
            if (++sel[i] < coords.size()) break;
            sel[i] = 0;
        }
        if (i == p) break;
    }
    return std::nullopt;
}

namespace detail {

/// Isotropic vector of the norm form over k_v at a split place.
template <class K>
std::optional<std::vector<K>> isotropic_vector(const FoldData<K>& fold,
                                               const typename PlaceOf<K>::type& v, long target);

template <>
inline std::optional<std::vector<Rat>> isotropic_vector(const FoldData<Rat>& fold,
                                                        const QPlace& v, long target) {
    // alpha is a square in Q_v: z = (sqrt(alpha), 1) kills z1^2 - alpha z2^2
    if (fold.p() != 2) return std::nullopt;
    if (v.is_real) return std::nullopt;
    PadicApprox s = padic_sqrt(fold.ext.alpha, v.prime, target + 2);
    return std::vector<Rat>{s.rat_rep(), Rat(1)};
}

template <>
inline std::optional<std::vector<RatFunc>> isotropic_vector(const FoldData<RatFunc>& fold,
                                                            const FPlace& v, long target) {
    // tau a root of T^p - T - gamma in k_v; z = (-tau, 1, 0, .., 0) kills N
    Poly<RatFunc> f = artin_schreier_poly(fold.ext);
    auto C = residue_field(v);
    RatFunc one = RatFunc::with_field(fold.ext.gamma.field(), 1);
    // start from a residue root (derivative is -1, always a unit)
    for (const auto& r : residue_reps(v)) {
        auto fr = valuation(f.eval(r), v);
        if (fr && *fr == 0) continue;
        auto w = detail::newton_refine(f, r, v, target + 2);
        if (w) {
            std::vector<RatFunc> z(fold.p(), one.zero());
            z[0] = -*w;
            z[1] = one;
            return z;
        }
    }
    return std::nullopt;
}

}  // namespace detail

struct EngineLimits {
    long min_depth = 2;
    long max_leaves = 2'000'000;
    unsigned long max_residue_enum = 1'000'000;
};

/// Full residue-disk analysis of X(k_v) at a finite place: a complete leaf
/// cover with per-disk symbols, solubility, and (on request) a witness.
template <class K>
PlaceAnalysis<K> analyze_place(const FoldData<K>& fold, const typename PlaceOf<K>::type& v,
                               const EngineLimits& lim = {}, bool want_witness = true) {
    using Chart = typename AffinePoint<K>::Chart;
    PlaceAnalysis<K> A;
    A.place = v;
    A.p = fold.p();

    if (place_splits(fold.ext, v)) {
        A.splits = true;
        A.soluble = true;
        if (want_witness) {
            long target = 8;
            auto z = detail::isotropic_vector(fold, v, target);
            if (z) {
                LocalWitness<K> w;
                w.kind = WitnessKind::Isotropic;
                w.chart = Chart::finite_x;
                w.coord = fold.P.coeffs()[0].zero();
                w.z = *z;
                w.wprime = fold.P.coeffs()[0].zero();
                K resid = fold.norm.eval(w.z);
                auto rv = valuation(resid, v);
                w.residual_valuation = rv ? *rv : std::numeric_limits<long>::max() / 4;
                w.exact = !rv;
                A.witness = w;
            }
        }
        return A;
    }

    const unsigned p = fold.p();
    const size_t m = fold.fac.factors.size();
    const K one = fold.P.lc().one();
    K uni = uniformizer(v);
    A.content_sym = symbol_at(fold.ext, fold.fac.content, v);
    InvariantValue uni_sym = symbol_at(fold.ext, uni, v);

    // chart polynomials: the factors and their reversals for the chart at
    // infinity, each scaled by a uniformizer power so the coefficients are
    // v-integral with unit content.  The scaling is a constant, so it shifts
    // every value symbol by a known multiple of the uniformizer symbol.
    auto normalize_at_v = [&](const Poly<K>& g, long& shift) {
        long mn = std::numeric_limits<long>::max();
        for (const auto& cc : g.coeffs()) {
            if (cc.is_zero()) continue;
            auto e = valuation(cc, v);
            mn = std::min(mn, *e);
        }
        shift = mn;
        K s = detail::pow_k(uni, (unsigned)std::abs(mn));
        if (mn > 0) s = s.inv();
        return g * s;  // multiply by uni^(-mn)
    };
    std::vector<Poly<K>> facA(m), facB(m);
    std::vector<long> shiftA(m), shiftB(m);
    for (size_t i = 0; i < m; ++i) {
        facA[i] = normalize_at_v(fold.fac.factors[i], shiftA[i]);
        Poly<K> rev = reverse_poly(fold.fac.factors[i], (unsigned)fold.fac.factors[i].degree());
        facB[i] = normalize_at_v(rev, shiftB[i]);
    }

    long slack = symbol_slack(fold.ext, v);
    // refinement bound: on a root-free disk the value valuations of the
    // normalized factors cannot exceed twice the resultant data, so beyond
    // this depth an unstable factor certifies a nearby root
    auto val_plus = [&](const K& x) {
        auto e = valuation(x, v);
        return e ? std::max(*e, 0l) : 0l;
    };
    long bound = lim.min_depth + slack + 4;
    for (const auto& fs : {facA, facB}) {
        for (size_t i = 0; i < m; ++i) {
            if (fs[i].degree() >= 1) bound += 2 * val_plus(resultant(fs[i], derivative(fs[i])));
            for (size_t j = i + 1; j < m; ++j)
                bound += 2 * val_plus(resultant(fs[i], fs[j]));
        }
    }

    struct Task {
        Chart chart;
        K center;
        long depth;
    };
    std::deque<Task> queue;
    auto reps = residue_reps(v);
    for (const auto& r : reps) queue.push_back({Chart::finite_x, r, 1});
    queue.push_back({Chart::infinite_x, one.zero(), 1});

    std::optional<LocalWitness<K>> best_witness;
    auto consider_section_witness = [&](Chart chart, const K& root, bool exact, long resid_val) {
        if (!want_witness) return;
        if (best_witness && (best_witness->exact || best_witness->kind == WitnessKind::Section))
            return;
        LocalWitness<K> w;
        w.kind = WitnessKind::Section;
        w.chart = chart;
        w.coord = root;
        w.z.assign(p, one.zero());
        w.wprime = one;
        w.exact = exact;
        w.residual_valuation = exact ? std::numeric_limits<long>::max() / 4 : resid_val;
        best_witness = w;
    };

    while (!queue.empty()) {
        Task task = queue.front();
        queue.pop_front();
        const auto& fac = task.chart == Chart::finite_x ? facA : facB;
        const auto& shift = task.chart == Chart::finite_x ? shiftA : shiftB;

        std::vector<std::optional<long>> vals(m);
        size_t unstable_count = 0;
        size_t unstable_idx = m;
        for (size_t i = 0; i < m; ++i) {
            vals[i] = valuation(fac[i].eval(task.center), v);
            bool st = vals[i].has_value() && task.depth >= *vals[i] + slack;
            if (!st) {
                ++unstable_count;
                unstable_idx = i;
            }
        }

        // true factor value = normalized value * uni^shift; symbols correct
        // by the constant uniformizer symbol
        auto true_factor_sym = [&](size_t i, const K& center) {
            InvariantValue s = symbol_at(fold.ext, fac[i].eval(center), v);
            return s + uni_sym.scaled(shift[i]);
        };
        auto true_value_product = [&](const K& center) {
            K V = fold.fac.content;
            long e = 0;
            for (size_t i = 0; i < m; ++i) {
                V = V * fac[i].eval(center);
                e += shift[i];
            }
            K s = detail::pow_k(uni, (unsigned)std::abs(e));
            if (e < 0) s = s.inv();
            return V * s;
        };

        bool force_refine = task.depth < lim.min_depth;
        if (unstable_count == 0 && !force_refine) {
            DiskLeaf<K> leaf;
            leaf.chart = task.chart;
            leaf.center = task.center;
            leaf.depth = task.depth;
            leaf.factor_syms.resize(m);
            InvariantValue total = A.content_sym;
            for (size_t i = 0; i < m; ++i) {
                InvariantValue s = true_factor_sym(i, task.center);
                leaf.factor_syms[i] = s;
                total = total + s;
            }
            leaf.p_symbol = total;
            if (total.is_zero()) {
                leaf.kind = DiskLeaf<K>::Kind::Soluble;
                A.soluble = true;
                if (want_witness && !best_witness) {
                    K V = true_value_product(task.center);
                    long target = std::max<long>(8, 2 * std::abs(*valuation(V, v)) + 6);
                    auto z = solve_norm_value(fold, v, V, target);
                    if (z) {
                        LocalWitness<K> w;
                        w.kind = WitnessKind::NormSolution;
                        w.chart = task.chart;
                        w.coord = task.center;
                        w.z = *z;
                        w.wprime = one;
                        K resid = fold.norm.eval(*z) - V;
                        auto rv = valuation(resid, v);
                        w.residual_valuation = rv ? *rv : std::numeric_limits<long>::max() / 4;
                        w.exact = !rv;
                        best_witness = w;
                    }
                }
            } else {
                leaf.kind = DiskLeaf<K>::Kind::Refuted;
            }
            A.leaves.push_back(std::move(leaf));
            continue;
        }

        if (task.depth < bound || force_refine) {
            if ((long)A.leaves.size() + (long)queue.size() > lim.max_leaves)
                throw PrecisionExhausted("analyze_place: disk budget exhausted");
            K step = detail::pow_k(uni, (unsigned)task.depth);
            for (const auto& r : reps)
                queue.push_back({task.chart, task.center + r * step, task.depth + 1});
            continue;
        }

        // at the bound: exactly one factor may be unstable, and it must
        // carry a certified root in this disk
        if (unstable_count != 1)
            throw PrecisionExhausted("analyze_place: several factors unstable at depth bound");
        size_t i = unstable_idx;
        DiskLeaf<K> leaf;
        leaf.chart = task.chart;
        leaf.center = task.center;
        leaf.depth = task.depth;
        leaf.kind = DiskLeaf<K>::Kind::RootDisk;
        leaf.root_factor = i;
        leaf.factor_syms.resize(m);
        for (size_t j = 0; j < m; ++j)
            if (j != i) leaf.factor_syms[j] = true_factor_sym(j, task.center);

        if (!vals[i].has_value()) {
            consider_section_witness(task.chart, task.center, true, 0);
        } else {
            long target = std::max<long>(task.depth + 4, 2 * (*vals[i]) + 2);
            auto root = detail::newton_refine(fac[i], task.center, v, target);
            if (!root)
                throw PrecisionExhausted(
                    "analyze_place: unstable factor at depth bound fails the Hensel criterion");
            // residual of the chart equation at the section point = P(root)
            K resid = true_value_product(*root);
            auto rv = valuation(resid, v);
            consider_section_witness(task.chart, *root, !rv.has_value(), rv ? *rv : 0);
        }
        A.soluble = true;
        A.leaves.push_back(std::move(leaf));
    }

    if (A.soluble && want_witness) A.witness = best_witness;
    return A;
}

/// Audit: the leaves exactly tile P^1(k_v) (each chart's disks form a
/// prefix-free complete cover).  Returns false on any gap or overlap.
template <class K>
bool audit_disk_cover(const PlaceAnalysis<K>& A) {
    if (A.splits) return true;
    using Chart = typename AffinePoint<K>::Chart;
    auto reps = residue_reps(A.place);
    K uni = uniformizer(A.place);
    size_t q = reps.size();

    // digit string of a center to the given depth
    auto digits = [&](K x, long depth) {
        std::vector<size_t> ds;
        K cur = x;
        for (long i = 0; i < depth; ++i) {
            size_t found = q;
            for (size_t r = 0; r < q; ++r) {
                auto e = valuation(cur - reps[r], A.place);
                if (!e || *e >= 1) {
                    found = r;
                    break;
                }
            }
            if (found == q) return std::vector<size_t>{};
            ds.push_back(found);
            cur = (cur - reps[found]) / uni;
        }
        return ds;
    };

    for (int chart = 0; chart < 2; ++chart) {
        // trie over digit strings; leaf depths: chart A strings of length
        // depth, chart B strings of length depth with first digit 0
        struct Node {
            std::map<size_t, Node> kids;
            bool leaf = false;
        };
        Node root;
        size_t count = 0;
        for (const auto& l : A.leaves) {
            if ((l.chart == Chart::finite_x) != (chart == 0)) continue;
            ++count;
            auto ds = digits(l.center, l.depth);
            if ((long)ds.size() != l.depth) return false;
            Node* n = &root;
            for (size_t d : ds) {
                if (n->leaf) return false;  // overlap
                n = &n->kids[d];
            }
            if (n->leaf || !n->kids.empty()) return false;
            n->leaf = true;
        }
        if (count == 0) return false;
        // completeness: every internal node has all q children (chart B's
        // root only needs digit 0)
        std::function<bool(const Node&, bool)> complete = [&](const Node& n, bool broot) -> bool {
            if (n.leaf) return n.kids.empty();
            if (broot) {
                if (n.kids.size() != 1 || !n.kids.count(0)) return false;
                return complete(n.kids.at(0), false);
            }
            if (n.kids.size() != q) return false;
            for (const auto& [d, kid] : n.kids)
                if (!complete(kid, false)) return false;
            return true;
        };
        if (!complete(root, chart == 1)) return false;
    }
    return true;
}

}  // namespace chatelet
