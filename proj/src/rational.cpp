#include "padichl/rational.hpp"

#include <stdexcept>

namespace padichl::exactnum {

Rat::Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
    reduce();
}

void Rat::reduce() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rat Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt::from_string(s));
    return Rat(BigInt::from_string(s.substr(0, slash)),
               BigInt::from_string(s.substr(slash + 1)));
}

Rat Rat::operator-() const {
    Rat out = *this;
    out.num_ = -out.num_;
    return out;
}

Rat Rat::inverse() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(den_, num_);
}

Rat Rat::pow(long long e) const {
    if (e == 0) return Rat(1);
    if (e < 0) return inverse().pow(-e);
    return Rat(BigInt::pow(num_, uint64_t(e)), BigInt::pow(den_, uint64_t(e)));
}

Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }
Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
    return (num_ * o.den_) <=> (o.num_ * den_);
}

std::string Rat::str() const {
    if (den_.is_one()) return num_.str();
    return num_.str() + "/" + den_.str();
}

}  // namespace padichl::exactnum
