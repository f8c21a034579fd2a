#pragma once

#include <cctype>

#include "chatelet/poly.hpp"
#include "chatelet/ratfunc.hpp"
#include "chatelet/rational.hpp"

namespace chatelet {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Tiny recursive-descent evaluator over +, -, *, /, ^, parentheses.
/// Atoms (numbers and variables) are produced by the Atoms policy; division
/// is verified exact by multiplying back.
template <class T, class Atoms>
class ExprParser {
public:
    ExprParser(const std::string& s, Atoms atoms) : s_(s), atoms_(atoms) {}

    T parse() {
        T v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    Atoms atoms_;

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("parse error at position " + std::to_string(pos_) + ": " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    T expr() {
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else (void)eat('+');
        T acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip();
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    T term() {
        T acc = factor();
        while (true) {
            skip();
            if (eat('*')) {
                acc = acc * factor();
            } else if (eat('/')) {
                T d = factor();
                T q = acc / d;
                if (!(q * d == acc)) fail("inexact division");
                acc = q;
            } else {
                return acc;
            }
        }
    }

    T factor() {
        T base = atom();
        skip();
        if (eat('^')) {
            skip();
            unsigned e = 0;
            bool any = false;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
                e = e * 10 + (unsigned)(s_[pos_++] - '0');
                any = true;
            }
            if (!any) fail("exponent expected");
            base = atoms_.pow(base, e);
        }
        return base;
    }

    T atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            T v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit((unsigned char)c)) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) digits += s_[pos_++];
            return atoms_.number(digits);
        }
        if (std::isalpha((unsigned char)c)) {
            ++pos_;
            return atoms_.variable(c, [this](const std::string& m) { this->fail(m); });
        }
        fail("unexpected character");
    }
};

struct RatPolyAtoms {
    Poly<Rat> number(const std::string& digits) const { return Poly<Rat>::constant(Rat(BigInt(digits))); }
    template <class Fail>
    Poly<Rat> variable(char c, Fail fail) const {
        if (c != 'x') fail(std::string("unknown variable '") + c + "' over Q");
        return Poly<Rat>::x(Rat(1));
    }
    Poly<Rat> pow(const Poly<Rat>& b, unsigned e) const { return e == 0 ? Poly<Rat>::constant(Rat(1)) : b.pow(e); }
};

struct FqPolyAtoms {
    FqCtxPtr F;
    Poly<RatFunc> number(const std::string& digits) const {
        long n = std::stol(digits);
        return Poly<RatFunc>::constant(RatFunc::with_field(F, n));
    }
    template <class Fail>
    Poly<RatFunc> variable(char c, Fail fail) const {
        if (c == 'x') return Poly<RatFunc>::x(RatFunc::with_field(F, 1));
        if (c == 't') return Poly<RatFunc>::constant(RatFunc::var_t(F));
        if (c == 'u') {
            if (F->s < 2) fail("variable 'u' needs an extension field");
            std::vector<unsigned> gen(F->s, 0);
            gen[1] = 1;
            return Poly<RatFunc>::constant(RatFunc::from_const(FFElem(F, gen)));
        }
        fail(std::string("unknown variable '") + c + "' over F_q(t)");
        throw std::logic_error("unreachable");
    }
    Poly<RatFunc> pow(const Poly<RatFunc>& b, unsigned e) const {
        return e == 0 ? Poly<RatFunc>::constant(RatFunc::with_field(F, 1)) : b.pow(e);
    }
};

}  // namespace detail

/// Sparse text form over Q, e.g. "41*x^4 + 985*x^2 + 5916" or "x^2 + 493/41".
inline Poly<Rat> parse_poly_q(const std::string& s) {
    detail::ExprParser<Poly<Rat>, detail::RatPolyAtoms> p(s, {});
    return p.parse();
}

/// Text form over F_q(t), e.g. "(t^4+t^3+1)*x^2 + x + (t^2/(t+1))".
inline Poly<RatFunc> parse_poly_kfq(const std::string& s, const FqCtxPtr& F) {
    detail::ExprParser<Poly<RatFunc>, detail::FqPolyAtoms> p(s, {F});
    return p.parse();
}

/// Rational function of t alone (no x).
inline RatFunc parse_ratfunc(const std::string& s, const FqCtxPtr& F) {
    Poly<RatFunc> p = parse_poly_kfq(s, F);
    if (p.is_zero()) return RatFunc::with_field(F, 0);
    if (p.degree() != 0) throw ParseError("expected an element of F_q(t), found x");
    return p.coeffs()[0];
}

/// Polynomial in t over F_q (no x, no denominators).
inline Poly<FFElem> parse_poly_fq(const std::string& s, const FqCtxPtr& F) {
    RatFunc r = parse_ratfunc(s, F);
    if (r.is_zero()) return Poly<FFElem>();
    if (!r.is_polynomial()) throw ParseError("expected a polynomial in t");
    return r.num();
}

inline Rat parse_rat(const std::string& s) {
    Poly<Rat> p = parse_poly_q(s);
    if (p.is_zero()) return Rat(0);
    if (p.degree() != 0) throw ParseError("expected a rational number, found x");
    return p.coeffs()[0];
}

}  // namespace chatelet
