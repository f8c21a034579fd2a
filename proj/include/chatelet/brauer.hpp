#pragma once

#include "chatelet/fold.hpp"

namespace chatelet {

struct NoValidRepresentative : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Br X / Br k as exponent vectors: the kernel {n : sum n_i d_i = 0 mod p}
/// modulo the relation lattice spanned by (1,..,1) and e_i for every factor
/// whose splitting field equals K.  Coset representatives are the
/// lexicographically smallest members; all data deterministic.
struct BrauerQuotient {
    unsigned p = 2;
    unsigned m = 0;
    std::vector<long> degrees;
    std::vector<bool> flags;
    std::vector<std::vector<unsigned>> relation_generators;
    std::vector<std::vector<unsigned>> representatives;  // one per coset, lex-smallest
    std::vector<std::vector<unsigned>> generators;       // minimal generating set
    unsigned long order = 1;

    bool is_trivial() const { return order == 1; }
    /// Canonical representative of the coset of an arbitrary kernel vector.
    std::vector<unsigned> canonicalize(const std::vector<unsigned>& exps) const;
};

/// Data-level engine (degrees and flags as data, any prime p).
BrauerQuotient brauer_quotient(unsigned p, const std::vector<long>& degrees,
                               const std::vector<bool>& flags);

/// Engine keyed to a fold; throws UnsupportedRegime if some splitting-field
/// flag is not computable in this regime (callers may then supply flags).
template <class K>
BrauerQuotient brauer_quotient(const FoldData<K>& f) {
    std::vector<long> degrees;
    std::vector<bool> flags;
    for (size_t i = 0; i < f.fac.factors.size(); ++i) {
        degrees.push_back(f.fac.factors[i].degree());
        if (!f.flags[i])
            throw UnsupportedRegime("brauer_quotient: splitting-field flag not computable; supply flags");
        flags.push_back(*f.flags[i]);
    }
    return brauer_quotient(f.p(), degrees, flags);
}

template <class K>
BrauerQuotient brauer_quotient_with_flags(const FoldData<K>& f, const std::vector<bool>& flags) {
    std::vector<long> degrees;
    for (const auto& g : f.fac.factors) degrees.push_back(g.degree());
    return brauer_quotient(f.p(), degrees, flags);
}

inline bool is_trivial(const BrauerQuotient& q) { return q.is_trivial(); }

/// Exponents of a representative of the same class avoiding the forbidden
/// factor indices: shifts by multiples of (1,..,1); the returned
/// content_power e means the representative polynomial is c^e prod P_i^{n_i}.
struct AvoidingRep {
    std::vector<unsigned> exponents;
    unsigned content_power = 0;
};
AvoidingRep representative_avoiding(const BrauerQuotient& q, const std::vector<unsigned>& exps,
                                    const std::vector<size_t>& forbidden);

/// The representative polynomial c^e * prod P_i^{n_i} of a class on a fold.
template <class K>
Poly<K> representative_poly(const FoldData<K>& f, const std::vector<unsigned>& exps,
                            unsigned content_power = 0) {
    if (exps.size() != f.fac.factors.size())
        throw std::invalid_argument("representative_poly: exponent count mismatch");
    K c = f.fac.content.one();
    for (unsigned e = 0; e < content_power; ++e) c = c * f.fac.content;
    Poly<K> r = Poly<K>::constant(c);
    for (size_t i = 0; i < exps.size(); ++i)
        for (unsigned e = 0; e < exps[i]; ++e) r = r * f.fac.factors[i];
    return r;
}

}  // namespace chatelet
