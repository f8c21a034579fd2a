#pragma once

#include "chatelet/poly.hpp"
#include "chatelet/rational.hpp"

namespace chatelet {

/// Sturm chain of a separable rational polynomial.
inline std::vector<Poly<Rat>> sturm_chain(const Poly<Rat>& f) {
    std::vector<Poly<Rat>> s{f, derivative(f)};
    while (!s.back().is_zero() && s.back().degree() > 0) {
        Poly<Rat> r = s[s.size() - 2] % s.back();
        if (r.is_zero()) break;
        s.push_back(-r);
    }
    return s;
}

inline int sign_variations_at(const std::vector<Poly<Rat>>& chain, const Rat& x) {
    int vars = 0, last = 0;
    for (const auto& g : chain) {
        int s = g.is_zero() ? 0 : g.eval(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++vars;
        last = s;
    }
    return vars;
}

/// Number of real roots in (a, b], exact.
inline int count_real_roots(const std::vector<Poly<Rat>>& chain, const Rat& a, const Rat& b) {
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

/// Cauchy bound: all real roots lie in (-B, B).
inline Rat real_root_bound(const Poly<Rat>& f) {
    Rat lc = f.lc();
    Rat m(0);
    for (const auto& c : f.coeffs()) {
        Rat a = c * lc.inv();
        if (a.sign() < 0) a = -a;
        if (a > m) m = a;
    }
    return m + Rat(1);
}

/// Disjoint open isolating intervals (a_i, b_i], one per real root,
/// in increasing order, with rational endpoints that are not roots.
inline std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Poly<Rat>& f) {
    if (!is_separable(f)) throw std::invalid_argument("isolate_real_roots: input not separable");
    auto chain = sturm_chain(f);
    Rat B = real_root_bound(f);
    std::vector<std::pair<Rat, Rat>> out;
    std::vector<std::pair<Rat, Rat>> stack{{-B, B}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        int n = count_real_roots(chain, a, b);
        if (n == 0) continue;
        if (n == 1) {
            out.emplace_back(a, b);
            continue;
        }
        Rat mid = (a + b) * Rat(1, 2);
        // nudge off a root: endpoints of subintervals must not be roots
        while (f.eval(mid).is_zero()) mid = mid + (b - mid) * Rat(1, 3);
        stack.emplace_back(mid, b);
        stack.emplace_back(a, mid);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& u, const auto& v) { return u.first < v.first; });
    return out;
}

}  // namespace chatelet
