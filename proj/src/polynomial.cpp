#include "padichl/polynomial.hpp"

#include <stdexcept>

namespace padichl::exactnum {

IntPoly::IntPoly(const BigInt& c) {
    if (!c.is_zero()) c_.emplace(0, c);
}

IntPoly IntPoly::monomial(long long exp, BigInt coeff) {
    if (exp < 0) throw std::invalid_argument("IntPoly: negative exponent");
    IntPoly p;
    if (!coeff.is_zero()) p.c_.emplace(exp, std::move(coeff));
    return p;
}

bool IntPoly::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one();
}

const BigInt& IntPoly::leading() const {
    static const BigInt zero(0);
    return c_.empty() ? zero : c_.rbegin()->second;
}

BigInt IntPoly::coeff(long long exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? BigInt(0) : it->second;
}

void IntPoly::put(long long exp, BigInt v) {
    if (v.is_zero())
        c_.erase(exp);
    else
        c_[exp] = std::move(v);
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly out = a;
    for (const auto& [e, v] : b.c_) out.put(e, out.coeff(e) + v);
    return out;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly out = a;
    for (const auto& [e, v] : b.c_) out.put(e, out.coeff(e) - v);
    return out;
}

IntPoly IntPoly::operator-() const {
    IntPoly out;
    for (const auto& [e, v] : c_) out.c_.emplace(e, -v);
    return out;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly out;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_) out.put(ea + eb, out.coeff(ea + eb) + va * vb);
    return out;
}

IntPoly IntPoly::scaled(const BigInt& k) const {
    IntPoly out;
    if (k.is_zero()) return out;
    for (const auto& [e, v] : c_) out.c_.emplace(e, v * k);
    return out;
}

IntPoly IntPoly::divided_exact(const BigInt& k) const {
    if (k.is_zero()) throw std::domain_error("IntPoly: division by zero integer");
    IntPoly out;
    for (const auto& [e, v] : c_) {
        BigInt q, r;
        BigInt::divmod(v, k, q, r);
        if (!r.is_zero()) throw std::domain_error("IntPoly: inexact integer division");
        if (!q.is_zero()) out.c_.emplace(e, std::move(q));
    }
    return out;
}

BigInt IntPoly::content() const {
    BigInt g(0);
    for (const auto& [e, v] : c_) g = BigInt::gcd(g, v);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return *this;
    BigInt g = content();
    if (leading().sign() < 0) g = -g;
    return divided_exact(g);
}

bool IntPoly::try_divide(const IntPoly& f, const IntPoly& g, IntPoly& q_num, BigInt& q_den) {
    if (g.is_zero()) throw std::domain_error("IntPoly: division by zero polynomial");
    // pseudo-division: lc(g)^k * f = q * g + r with k = deg f - deg g + 1
    if (f.is_zero()) {
        q_num = IntPoly();
        q_den = BigInt(1);
        return true;
    }
    if (f.degree() < g.degree()) return false;
    IntPoly rem = f, q;
    const BigInt lg = g.leading();
    BigInt scale(1);
    while (!rem.is_zero() && rem.degree() >= g.degree()) {
        long long de = rem.degree() - g.degree();
        BigInt c = rem.leading();
        // multiply accumulated quotient and remainder by lc(g)
        q = q.scaled(lg);
        rem = rem.scaled(lg);
        scale = scale * lg;
        q.put(de, q.coeff(de) + c * BigInt(1));
        IntPoly sub;
        for (const auto& [e, v] : g.c_) sub.put(e + de, v * c);
        rem = rem - sub;
    }
    if (!rem.is_zero()) return false;
    q_num = q;
    q_den = scale;
    return true;
}

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        IntPoly rem = a;
        const BigInt lb = b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            long long de = rem.degree() - b.degree();
            BigInt c = rem.leading();
            rem = rem.scaled(lb);
            IntPoly sub;
            for (const auto& [e, v] : b.c_) sub.put(e + de, v * c);
            rem = rem - sub;
        }
        a = std::move(b);
        b = rem.primitive_part();
    }
    return a.primitive_part();
}

IntPoly IntPoly::pow(uint64_t e) const {
    IntPoly out(1), base = *this;
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

Rat IntPoly::eval(const Rat& x) const {
    // Horner over the sparse exponent gaps
    Rat acc(0);
    long long prev = -1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (prev >= 0) acc = acc * x.pow(prev - it->first);
        acc = acc + Rat(it->second);
        prev = it->first;
    }
    if (prev > 0) acc = acc * x.pow(prev);
    return acc;
}

IntPoly IntPoly::subst_neg() const {
    IntPoly out;
    for (const auto& [e, v] : c_) out.c_.emplace(e, (e % 2) ? -v : v);
    return out;
}

IntPoly IntPoly::subst_square() const {
    IntPoly out;
    for (const auto& [e, v] : c_) out.c_.emplace(2 * e, v);
    return out;
}

IntPoly IntPoly::shifted_exp(long long d) const {
    IntPoly out;
    for (const auto& [e, v] : c_) {
        if (e + d < 0) throw std::invalid_argument("IntPoly: shift below degree 0");
        out.c_.emplace(e + d, v);
    }
    return out;
}

IntPoly IntPoly::reversed() const {
    IntPoly out;
    long long d = degree();
    for (const auto& [e, v] : c_) out.c_.emplace(d - e, v);
    return out;
}

std::string IntPoly::str(const std::string& sym) const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, v] = *it;
        std::string coeff = v.str();
        if (!out.empty()) {
            if (coeff[0] == '-') {
                out += " - ";
                coeff = coeff.substr(1);
            } else {
                out += " + ";
            }
        }
        if (e == 0) {
            out += coeff;
        } else {
            if (coeff == "1")
                ;
            else if (coeff == "-1")
                out += "-";
            else
                out += coeff + "*";
            out += sym;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

RatFun::RatFun(const Rat& r) : num_(r.num()), den_(r.den()) {}

RatFun::RatFun(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    canonicalize();
}

RatFun RatFun::t() { return RatFun(IntPoly::monomial(1, BigInt(1))); }

RatFun RatFun::t_pow(long long k) {
    if (k >= 0) return RatFun(IntPoly::monomial(k, BigInt(1)));
    return RatFun(IntPoly(1), IntPoly::monomial(-k, BigInt(1)));
}

void RatFun::canonicalize() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (!(g.degree() == 0)) {
        IntPoly qn, qd;
        BigInt sn, sd;
        if (!IntPoly::try_divide(num_, g, qn, sn) || !IntPoly::try_divide(den_, g, qd, sd))
            throw std::logic_error("RatFun: gcd does not divide");
        // qn/sn and qd/sd; clear the rational scalars
        num_ = qn.scaled(sd);
        den_ = qd.scaled(sn);
    }
    BigInt cn = num_.content(), cd = den_.content();
    BigInt g2 = BigInt::gcd(cn, cd);
    if (den_.leading().sign() < 0) g2 = -g2;
    num_ = num_.divided_exact(g2);
    den_ = den_.divided_exact(g2);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}
RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::operator-() const {
    RatFun out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFun out(1), base = *this;
    uint64_t k = uint64_t(e);
    while (k) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

Rat RatFun::eval(const Rat& t0) const {
    Rat d = den_.eval(t0);
    if (d.is_zero()) throw std::domain_error("RatFun: pole at evaluation point");
    return num_.eval(t0) / d;
}

RatFun RatFun::subst_neg() const { return RatFun(num_.subst_neg(), den_.subst_neg()); }
RatFun RatFun::subst_square() const {
    return RatFun(num_.subst_square(), den_.subst_square());
}

RatFun RatFun::subst_inv() const {
    if (is_zero()) return RatFun();
    long long dn = num_.degree(), dd = den_.degree();
    IntPoly n = num_.reversed(), d = den_.reversed();
    if (dd >= dn)
        n = n.shifted_exp(dd - dn);
    else
        d = d.shifted_exp(dn - dd);
    return RatFun(std::move(n), std::move(d));
}

IntegralityReport RatFun::to_int_poly() const {
    IntegralityReport rep;
    IntPoly q;
    BigInt scale;
    if (IntPoly::try_divide(num_, den_, q, scale)) {
        // quotient is q/scale; exact over Z iff scale divides every coefficient
        bool ok = true;
        IntPoly out;
        for (const auto& [e, v] : q.terms()) {
            BigInt qq, rr;
            BigInt::divmod(v, scale, qq, rr);
            if (!rr.is_zero()) {
                ok = false;
                break;
            }
            out = out + IntPoly::monomial(e, qq);
        }
        if (ok) {
            rep.ok = true;
            rep.value = out;
            return rep;
        }
    }
    rep.ok = false;
    rep.remainder_num = num_;
    rep.remainder_den = den_;
    return rep;
}

std::string RatFun::str(const std::string& sym) const {
    if (den_.is_one()) return num_.str(sym);
    return "(" + num_.str(sym) + ")/(" + den_.str(sym) + ")";
}

RatFun pochhammer(const RatFun& a, const RatFun& t, long long m) {
    if (m < 0) throw std::invalid_argument("pochhammer: negative length");
    RatFun out(1), p = a;
    for (long long i = 0; i < m; ++i) {
        out *= (RatFun(1) - p);
        p *= t;
    }
    return out;
}

}  // namespace padichl::exactnum
