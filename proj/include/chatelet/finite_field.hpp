#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "chatelet/rational.hpp"

namespace chatelet {

/// Field context for F_{p^s} = F_p[u]/(modulus).  Shared between elements.
struct FqCtx {
    unsigned p = 0;
    unsigned s = 0;
    std::vector<unsigned> modulus;  // monic of degree s over F_p, low coeff first
    BigInt q;                       // p^s

    /// F_{p^s} with the lexicographically first monic irreducible modulus.
    static std::shared_ptr<const FqCtx> make(unsigned p, unsigned s = 1);
    static std::shared_ptr<const FqCtx> make_with_modulus(unsigned p, std::vector<unsigned> modulus);

    bool same(const FqCtx& o) const { return p == o.p && modulus == o.modulus; }
};

using FqCtxPtr = std::shared_ptr<const FqCtx>;

/// Element of F_{p^s}, stored as s coefficients over F_p in the u-power basis.
class FFElem {
public:
    FFElem() = default;
    FFElem(FqCtxPtr F, std::vector<unsigned> coeffs);
    static FFElem from_int_in(const FqCtxPtr& F, long n);

    const FqCtxPtr& ctx() const { return F_; }
    const std::vector<unsigned>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    FFElem operator+(const FFElem& o) const;
    FFElem operator-(const FFElem& o) const;
    FFElem operator*(const FFElem& o) const;
    FFElem operator/(const FFElem& o) const { return *this * o.inv(); }
    FFElem operator-() const;
    bool operator==(const FFElem& o) const;
    bool operator!=(const FFElem& o) const { return !(*this == o); }

    FFElem inv() const;
    FFElem pow(const BigInt& e) const;
    FFElem frobenius() const { return pow(BigInt(F_->p)); }
    /// x^(1/p), the inverse of Frobenius (finite fields are perfect).
    FFElem pth_root() const;
    /// Absolute trace down to F_p, as an integer in [0, p).
    unsigned trace_to_prime() const;

    FFElem zero() const { return from_int_in(F_, 0); }
    FFElem one() const { return from_int_in(F_, 1); }
    FFElem from_int(long n) const { return from_int_in(F_, n); }
    FFElem scale_int(long n) const { return *this * from_int(n); }

    /// Enumeration index in [0, q): coefficients read as a base-p numeral.
    unsigned long index() const;
    static FFElem from_index(const FqCtxPtr& F, unsigned long idx);

    std::string to_string() const;  // "0", "2", "u", "u^2+2*u+1", ...

private:
    FqCtxPtr F_;
    std::vector<unsigned> c_;
    void check_same(const FFElem& o) const {
        if (!F_ || !o.F_ || !F_->same(*o.F_))
            throw std::invalid_argument("FFElem: mixed field contexts");
    }
};

/// All elements of the field, in index order.
std::vector<FFElem> all_elements(const FqCtxPtr& F);

// uniform hooks shared with other finite-field element types
inline bool elem_less(const FFElem& a, const FFElem& b) { return a.index() < b.index(); }
inline BigInt field_cardinality(const FFElem& like) { return like.ctx()->q; }
inline unsigned field_char(const FFElem& like) { return like.ctx()->p; }
inline FFElem element_from_index(const FFElem& like, unsigned long idx) {
    return FFElem::from_index(like.ctx(), idx);
}

}  // namespace chatelet
