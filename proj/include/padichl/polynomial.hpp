#pragma once

#include <map>
#include <string>

#include "padichl/rational.hpp"

namespace padichl::exactnum {

/* Sparse univariate polynomial over Z in the global parameter symbol.
 * Exponents are >= 0; zero coefficients are never stored. */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(const BigInt& c);
    IntPoly(long long c) : IntPoly(BigInt(c)) {}

    static IntPoly monomial(long long exp, BigInt coeff);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    /* -1 for the zero polynomial */
    long long degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    const BigInt& leading() const;
    BigInt coeff(long long exp) const;
    const std::map<long long, BigInt>& terms() const { return c_; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly scaled(const BigInt& k) const;
    /* Division by an integer that divides every coefficient. */
    IntPoly divided_exact(const BigInt& k) const;

    /* gcd of coefficients, sign chosen positive; content of 0 is 0. */
    BigInt content() const;
    IntPoly primitive_part() const;

    /* Exact polynomial division over Q; remainder==0 and quotient stored
     * whenever the division is exact over Q.  Returns false otherwise. */
    static bool try_divide(const IntPoly& f, const IntPoly& g, IntPoly& q_num,
                           BigInt& q_den);

    /* Primitive-PRS gcd over Z, result primitive with positive leading coeff. */
    static IntPoly gcd(IntPoly a, IntPoly b);

    IntPoly pow(uint64_t e) const;
    Rat eval(const Rat& x) const;

    IntPoly subst_neg() const;      // t -> -t
    IntPoly subst_square() const;   // t -> t^2
    IntPoly shifted_exp(long long d) const;  // multiply by t^d, d >= -min exp
    IntPoly reversed() const;       // t^deg * p(1/t)

    std::string str(const std::string& sym = "t") const;

private:
    std::map<long long, BigInt> c_;
    void put(long long exp, BigInt v);
};

struct IntegralityReport {
    bool ok = false;
    IntPoly value;      // valid when ok
    IntPoly remainder_num;  // nonzero evidence when !ok
    IntPoly remainder_den;
};

/* Field of fractions of IntPoly.  Canonical form: denominator nonzero with
 * positive leading coefficient, gcd(num, den) = 1 over Q, and the integer
 * contents of num and den are coprime. */
class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(long long c) : num_(c), den_(1) {}
    RatFun(const Rat& r);
    explicit RatFun(IntPoly p) : num_(std::move(p)), den_(1) {}
    RatFun(IntPoly num, IntPoly den);

    static RatFun t();                 // the parameter symbol
    static RatFun t_pow(long long k);  // t^k, any integer k

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFun inverse() const;
    RatFun pow(long long e) const;

    Rat eval(const Rat& t0) const;  // throws on pole

    RatFun subst_neg() const;     // t -> -t
    RatFun subst_square() const;  // t -> t^2
    RatFun subst_inv() const;     // t -> 1/t

    IntegralityReport to_int_poly() const;

    std::string str(const std::string& sym = "t") const;

private:
    IntPoly num_, den_;
    void canonicalize();
};

/* q-Pochhammer (a; t)_m = prod_{i=0}^{m-1} (1 - a t^i), symbolic in the
 * global parameter. */
RatFun pochhammer(const RatFun& a, const RatFun& t, long long m);

}  // namespace padichl::exactnum
