#include "chatelet/finite_field.hpp"

#include <algorithm>

namespace chatelet {

namespace {

// dense F_p[x] helpers on coefficient vectors, low degree first
using PVec = std::vector<unsigned>;

void trim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec add_p(const PVec& a, const PVec& b, unsigned p) {
    PVec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        unsigned x = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = x % p;
    }
    trim(r);
    return r;
}

PVec sub_p(const PVec& a, const PVec& b, unsigned p) {
    PVec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        unsigned x = (i < a.size() ? a[i] : 0) + p - (i < b.size() ? b[i] % p : 0);
        r[i] = x % p;
    }
    trim(r);
    return r;
}

PVec mul_p(const PVec& a, const PVec& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

unsigned inv_mod_p(unsigned a, unsigned p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::domain_error("inv_mod_p: not invertible");
    return (unsigned)((t % (long)p + p) % p);
}

PVec rem_p(PVec a, const PVec& m, unsigned p) {
    unsigned lead_inv = inv_mod_p(m.back(), p);
    while (a.size() >= m.size() && !a.empty()) {
        unsigned c = (a.back() * lead_inv) % p;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[shift + i] = (a[shift + i] + p - (c * m[i]) % p) % p;
        trim(a);
    }
    return a;
}

// extended gcd in F_p[x]; returns g and u with u*a = g mod m
void ext_gcd_p(PVec a, PVec m, unsigned p, PVec& g, PVec& u) {
    PVec r0 = m, r1 = a, s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        PVec q;
        PVec rem = r0;
        unsigned lead_inv = inv_mod_p(r1.back(), p);
        q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            unsigned c = (rem.back() * lead_inv) % p;
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = (rem[shift + i] + p - (c * r1[i]) % p) % p;
            trim(rem);
        }
        trim(q);
        PVec s2 = sub_p(s0, mul_p(q, s1, p), p);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    g = r0;
    u = s0;
}

bool is_irreducible_p(const PVec& f, unsigned p, const std::vector<PVec>& smaller_irreds) {
    if (f.size() < 2) return false;
    for (const auto& g : smaller_irreds) {
        if (g.size() > (f.size() + 1) / 2) break;
        if (rem_p(f, g, p).empty()) return false;
    }
    return true;
}

}  // namespace

std::shared_ptr<const FqCtx> FqCtx::make_with_modulus(unsigned p, std::vector<unsigned> modulus) {
    if (p < 2) throw std::invalid_argument("FqCtx: p must be prime");
    trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1)
        throw std::invalid_argument("FqCtx: modulus must be monic of degree >= 1");
    auto ctx = std::make_shared<FqCtx>();
    ctx->p = p;
    ctx->s = (unsigned)modulus.size() - 1;
    ctx->modulus = std::move(modulus);
    ctx->q = pow_bigint(BigInt(p), ctx->s);
    return ctx;
}

std::shared_ptr<const FqCtx> FqCtx::make(unsigned p, unsigned s) {
    if (!is_prime(BigInt(p))) throw std::invalid_argument("FqCtx: p must be prime");
    if (s == 0) throw std::invalid_argument("FqCtx: s must be >= 1");
    if (s == 1) return make_with_modulus(p, {0, 1});
    // irreducibles of degree < s, by trial division, for the modulus search
    std::vector<PVec> irreds;
    for (unsigned d = 1; d < s; ++d) {
        unsigned long count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned long idx = 0; idx < count; ++idx) {
            PVec f(d + 1, 0);
            f[d] = 1;
            unsigned long t = idx;
            for (unsigned i = 0; i < d; ++i) {
                f[i] = (unsigned)(t % p);
                t /= p;
            }
            if (is_irreducible_p(f, p, irreds)) irreds.push_back(f);
        }
    }
    unsigned long count = 1;
    for (unsigned i = 0; i < s; ++i) count *= p;
    for (unsigned long idx = 0; idx < count; ++idx) {
        PVec f(s + 1, 0);
        f[s] = 1;
        unsigned long t = idx;
        for (unsigned i = 0; i < s; ++i) {
            f[i] = (unsigned)(t % p);
            t /= p;
        }
        if (is_irreducible_p(f, p, irreds)) return make_with_modulus(p, f);
    }
    throw std::logic_error("FqCtx: no irreducible modulus found");
}

FFElem::FFElem(FqCtxPtr F, std::vector<unsigned> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
    if (!F_) throw std::invalid_argument("FFElem: null context");
    c_.resize(F_->s, 0);
    for (auto& x : c_) x %= F_->p;
}

FFElem FFElem::from_int_in(const FqCtxPtr& F, long n) {
    long m = n % (long)F->p;
    if (m < 0) m += F->p;
    std::vector<unsigned> c(F->s, 0);
    c[0] = (unsigned)m;
    return FFElem(F, std::move(c));
}

bool FFElem::is_zero() const {
    for (auto x : c_)
        if (x) return false;
    return true;
}

bool FFElem::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

FFElem FFElem::operator+(const FFElem& o) const {
    check_same(o);
    auto r = add_p(c_, o.c_, F_->p);
    return FFElem(F_, std::move(r));
}

FFElem FFElem::operator-(const FFElem& o) const {
    check_same(o);
    auto r = sub_p(c_, o.c_, F_->p);
    return FFElem(F_, std::move(r));
}

FFElem FFElem::operator-() const {
    auto r = sub_p({}, c_, F_->p);
    return FFElem(F_, std::move(r));
}

FFElem FFElem::operator*(const FFElem& o) const {
    check_same(o);
    auto r = rem_p(mul_p(c_, o.c_, F_->p), F_->modulus, F_->p);
    return FFElem(F_, std::move(r));
}

bool FFElem::operator==(const FFElem& o) const {
    check_same(o);
    return c_ == o.c_;
}

FFElem FFElem::inv() const {
    if (is_zero()) throw std::domain_error("FFElem: inverse of zero");
    PVec a = c_;
    trim(a);
    PVec g, u;
    ext_gcd_p(a, F_->modulus, F_->p, g, u);
    if (g.size() != 1) throw std::logic_error("FFElem: modulus not irreducible");
    unsigned gi = inv_mod_p(g[0], F_->p);
    PVec one{gi};
    auto r = rem_p(mul_p(u, one, F_->p), F_->modulus, F_->p);
    return FFElem(F_, std::move(r));
}

FFElem FFElem::pow(const BigInt& e_in) const {
    BigInt e = e_in;
    if (e < 0) return inv().pow(-e);
    FFElem base = *this, r = one();
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FFElem FFElem::pth_root() const {
    // Frobenius has order s; its inverse is x -> x^(p^(s-1))
    return pow(pow_bigint(BigInt(F_->p), F_->s == 0 ? 0 : F_->s - 1));
}

unsigned FFElem::trace_to_prime() const {
    FFElem acc = *this, fr = *this;
    for (unsigned i = 1; i < F_->s; ++i) {
        fr = fr.frobenius();
        acc = acc + fr;
    }
    for (size_t i = 1; i < acc.c_.size(); ++i)
        if (acc.c_[i]) throw std::logic_error("trace_to_prime: trace not in prime field");
    return acc.c_.empty() ? 0 : acc.c_[0];
}

unsigned long FFElem::index() const {
    unsigned long idx = 0;
    for (size_t i = c_.size(); i-- > 0;) idx = idx * F_->p + c_[i];
    return idx;
}

FFElem FFElem::from_index(const FqCtxPtr& F, unsigned long idx) {
    std::vector<unsigned> c(F->s, 0);
    for (unsigned i = 0; i < F->s; ++i) {
        c[i] = (unsigned)(idx % F->p);
        idx /= F->p;
    }
    return FFElem(F, std::move(c));
}

std::string FFElem::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c_[i]);
        } else {
            if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
            out += (i == 1) ? "u" : "u^" + std::to_string(i);
        }
    }
    return out;
}

std::vector<FFElem> all_elements(const FqCtxPtr& F) {
    if (!F->q.fits_ulong_p()) throw std::domain_error("all_elements: field too large");
    unsigned long n = F->q.get_ui();
    std::vector<FFElem> out;
    out.reserve(n);
    for (unsigned long i = 0; i < n; ++i) out.push_back(FFElem::from_index(F, i));
    return out;
}

}  // namespace chatelet
