#pragma once

#include <map>
#include <vector>

#include "chatelet/poly.hpp"

namespace chatelet {

/// Sparse multivariate polynomial in a fixed number of variables z1..zn.
/// Exponent vectors are the map keys; used for norm forms (degree p in p
/// variables), so sizes stay tiny.
template <class K>
class MultiPoly {
public:
    using Expo = std::vector<unsigned>;

    explicit MultiPoly(unsigned nvars) : n_(nvars) {}
    static MultiPoly zero_like(unsigned nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(unsigned nvars, const K& c) {
        MultiPoly r(nvars);
        if (!c.is_zero()) r.t_[Expo(nvars, 0)] = c;
        return r;
    }
    static MultiPoly variable(unsigned nvars, unsigned i, const K& one) {
        MultiPoly r(nvars);
        Expo e(nvars, 0);
        e[i] = 1;
        r.t_[e] = one;
        return r;
    }

    unsigned nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Expo, K>& terms() const { return t_; }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [e, c] : o.t_) r.add_term(e, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [e, c] : o.t_) r.add_term(e, -c);
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r(n_);
        for (const auto& [e, c] : t_) r.t_[e] = -c;
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r(n_);
        for (const auto& [e1, c1] : t_)
            for (const auto& [e2, c2] : o.t_) {
                Expo e = e1;
                for (unsigned i = 0; i < n_; ++i) e[i] += e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    MultiPoly operator*(const K& s) const {
        MultiPoly r(n_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : t_) r.t_[e] = c * s;
        return r;
    }
    bool operator==(const MultiPoly& o) const { return t_ == o.t_; }

    K eval(const std::vector<K>& xs) const {
        if (xs.size() != n_) throw std::invalid_argument("MultiPoly: wrong argument count");
        if (t_.empty()) {
            for (const auto& x : xs) return x.zero();
            throw std::invalid_argument("MultiPoly: cannot evaluate with no context");
        }
        K acc = t_.begin()->second.zero();
        for (const auto& [e, c] : t_) {
            K term = c;
            for (unsigned i = 0; i < n_; ++i)
                for (unsigned j = 0; j < e[i]; ++j) term = term * xs[i];
            acc = acc + term;
        }
        return acc;
    }

    /// Substitute every variable except `keep`; returns a univariate
    /// polynomial in the kept variable.
    Poly<K> to_univariate(unsigned keep, const std::vector<K>& xs) const {
        if (xs.size() != n_) throw std::invalid_argument("MultiPoly: wrong argument count");
        std::vector<K> out;
        for (const auto& [e, c] : t_) {
            K term = c;
            for (unsigned i = 0; i < n_; ++i) {
                if (i == keep) continue;
                for (unsigned j = 0; j < e[i]; ++j) term = term * xs[i];
            }
            if ((size_t)e[keep] >= out.size()) out.resize(e[keep] + 1, c.zero());
            out[e[keep]] = out[e[keep]] + term;
        }
        return Poly<K>(std::move(out));
    }

    /// Formal partial derivative with respect to variable i.
    MultiPoly partial(unsigned i) const {
        MultiPoly r(n_);
        for (const auto& [e, c] : t_) {
            if (e[i] == 0) continue;
            Expo e2 = e;
            e2[i] -= 1;
            r.add_term(e2, c.scale_int((long)e[i]));
        }
        return r;
    }

    std::string to_string(const std::string& base = "z") const {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : t_) {
            if (!out.empty()) out += " + ";
            std::string cs = c.to_string();
            bool paren = cs.find_first_of("+-*/") != std::string::npos;
            std::string term = paren ? "(" + cs + ")" : cs;
            for (unsigned i = 0; i < n_; ++i) {
                if (e[i] == 0) continue;
                if (term == "1") term.clear();
                if (!term.empty()) term += "*";
                term += base + std::to_string(i + 1);
                if (e[i] > 1) term += "^" + std::to_string(e[i]);
            }
            out += term;
        }
        return out;
    }

private:
    unsigned n_;
    std::map<Expo, K> t_;
    void add_term(const Expo& e, const K& c) {
        if (c.is_zero()) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_[e] = c;
        } else {
            K s = it->second + c;
            if (s.is_zero())
                t_.erase(it);
            else
                it->second = s;
        }
    }
};

/// Determinant by cofactor expansion along the first row.
template <class K>
MultiPoly<K> multipoly_det(const std::vector<std::vector<MultiPoly<K>>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    MultiPoly<K> acc(m[0][0].nvars());
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<MultiPoly<K>>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<MultiPoly<K>> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        MultiPoly<K> term = m[0][j] * multipoly_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Numeric determinant over the field, same cofactor route (used as the
/// independent oracle against symbolic norm-form evaluation).
template <class K>
K field_det(const std::vector<std::vector<K>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    K acc = m[0][0].zero();
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<K>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<K> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        K term = m[0][j] * field_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace chatelet
