#pragma once

#include <stdexcept>
#include <string>

namespace chatelet {

/// Local invariant value in (1/p)Z/Z, stored as num/p with 0 <= num < p.
struct InvariantValue {
    unsigned num = 0;
    unsigned p = 2;

    InvariantValue() = default;
    InvariantValue(long n, unsigned p_) : p(p_) {
        if (p_ < 2) throw std::invalid_argument("InvariantValue: modulus must be >= 2");
        long m = n % (long)p_;
        if (m < 0) m += p_;
        num = (unsigned)m;
    }

    bool is_zero() const { return num == 0; }

    InvariantValue operator+(const InvariantValue& o) const {
        if (p != o.p) throw std::invalid_argument("InvariantValue: mixed moduli");
        return InvariantValue((long)num + o.num, p);
    }
    InvariantValue operator-() const { return InvariantValue(-(long)num, p); }
    InvariantValue scaled(long k) const { return InvariantValue((long)num * k, p); }
    bool operator==(const InvariantValue& o) const { return num == o.num && p == o.p; }
    bool operator!=(const InvariantValue& o) const { return !(*this == o); }
    bool operator<(const InvariantValue& o) const { return num < o.num; }

    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(p); }
};

}  // namespace chatelet
