#include "chatelet/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace chatelet {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((__uint128_t)a * b % m);
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % p == 0) return n == p;
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic Miller-Rabin bases for 64-bit range
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

uint64_t pollard_rho_u64(uint64_t n) {
    if (n % 2 == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        auto f = [&](uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
        uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) { d = n; break; }
            d = std::__gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_u64_into(uint64_t n, std::map<uint64_t, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) { out[n]++; return; }
    uint64_t d = pollard_rho_u64(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

}  // namespace

std::vector<std::pair<BigInt, int>> factor_integer(const BigInt& n_in) {
    BigInt n = abs(n_in);
    if (n == 0) throw std::domain_error("factor_integer: zero");
    std::vector<std::pair<BigInt, int>> out;
    // strip small primes so the u64 path almost always applies afterwards
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul, 43ul, 47ul}) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) { n /= p; ++e; }
        if (e) out.emplace_back(BigInt(p), e);
    }
    if (n == 1) return out;
    if (n.fits_ulong_p()) {
        std::map<uint64_t, int> m;
        factor_u64_into(n.get_ui(), m);
        for (auto& [p, e] : m) out.emplace_back(BigInt((unsigned long)p), e);
        return out;
    }
    // rare big case: recursive mpz rho
    struct Rec {
        static void go(BigInt n, std::map<std::string, std::pair<BigInt, int>>& acc) {
            if (n == 1) return;
            if (is_prime(n)) {
                auto& slot = acc[n.get_str()];
                slot.first = n;
                slot.second++;
                return;
            }
            BigInt c = 1;
            for (;; ++c) {
                BigInt x = 2, y = 2, d = 1;
                auto f = [&](const BigInt& t) { return (t * t + c) % n; };
                while (d == 1) {
                    x = f(x);
                    y = f(f(y));
                    BigInt diff = abs(x - y);
                    if (diff == 0) { d = n; break; }
                    mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
                }
                if (d != n) {
                    go(d, acc);
                    go(n / d, acc);
                    return;
                }
            }
        }
    };
    std::map<std::string, std::pair<BigInt, int>> acc;
    Rec::go(n, acc);
    for (auto& [_, pe] : acc) out.emplace_back(pe.first, pe.second);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

BigInt squarefree_part(const BigInt& n) {
    if (n == 0) throw std::domain_error("squarefree_part: zero");
    BigInt r = n < 0 ? BigInt(-1) : BigInt(1);
    for (auto& [p, e] : factor_integer(n))
        if (e % 2) r *= p;
    return r;
}

}  // namespace chatelet
