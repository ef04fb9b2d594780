#pragma once

#include <compare>
#include <string>

#include "padichl/bigint.hpp"

namespace padichl::exactnum {

/* Exact rational, always reduced, denominator > 0. */
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}
    Rat(int v) : Rat(static_cast<long long>(v)) {}
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}
    Rat(BigInt n, BigInt d);
    Rat(long long n, long long d) : Rat(BigInt(n), BigInt(d)) {}

    /* Accepts "a" or "a/b". */
    static Rat from_string(const std::string& s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rat operator-() const;
    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat inverse() const;
    Rat pow(long long e) const;

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    std::strong_ordering operator<=>(const Rat& o) const;
    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str() const;
    double to_double() const { return num_.to_double() / den_.to_double(); }

private:
    BigInt num_, den_;
    void reduce();
};

}  // namespace padichl::exactnum
