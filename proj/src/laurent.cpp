#include "padichl/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace padichl::hlpoly {

LaurentSymPoly LaurentSymPoly::one(int nvars) {
    LaurentSymPoly p(nvars);
    p.terms_.emplace(std::vector<int>(nvars, 0), RatFun(1));
    return p;
}

LaurentSymPoly LaurentSymPoly::monomial(std::vector<int> expo, RatFun coeff) {
    LaurentSymPoly p(static_cast<int>(expo.size()));
    if (!coeff.is_zero()) p.terms_.emplace(std::move(expo), std::move(coeff));
    return p;
}

RatFun LaurentSymPoly::coeff(const std::vector<int>& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? RatFun() : it->second;
}

void LaurentSymPoly::add_term(const std::vector<int>& e, const RatFun& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("LaurentSymPoly: exponent arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentSymPoly operator+(const LaurentSymPoly& a, const LaurentSymPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("LaurentSymPoly: arity mismatch");
    LaurentSymPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

LaurentSymPoly operator-(const LaurentSymPoly& a, const LaurentSymPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("LaurentSymPoly: arity mismatch");
    LaurentSymPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

LaurentSymPoly operator*(const LaurentSymPoly& a, const LaurentSymPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("LaurentSymPoly: arity mismatch");
    LaurentSymPoly out(a.nvars_);
    std::vector<int> e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

LaurentSymPoly LaurentSymPoly::scaled(const RatFun& c) const {
    LaurentSymPoly out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

bool LaurentSymPoly::operator==(const LaurentSymPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

const std::vector<int>& LaurentSymPoly::leading_expo() const {
    if (terms_.empty()) throw std::logic_error("LaurentSymPoly: leading term of zero");
    return terms_.rbegin()->first;
}

LaurentSymPoly LaurentSymPoly::shifted_all(int d) const {
    LaurentSymPoly out(nvars_);
    for (const auto& [e, v] : terms_) {
        std::vector<int> e2 = e;
        for (auto& x : e2) x += d;
        out.terms_.emplace(std::move(e2), v);
    }
    return out;
}

LaurentSymPoly LaurentSymPoly::doubled_expos() const {
    LaurentSymPoly out(nvars_);
    for (const auto& [e, v] : terms_) {
        std::vector<int> e2 = e;
        for (auto& x : e2) x *= 2;
        out.terms_.emplace(std::move(e2), v);
    }
    return out;
}

LaurentSymPoly LaurentSymPoly::inverted_vars() const {
    LaurentSymPoly out(nvars_);
    for (const auto& [e, v] : terms_) {
        std::vector<int> e2 = e;
        for (auto& x : e2) x = -x;
        out.terms_.emplace(std::move(e2), v);
    }
    return out;
}

bool LaurentSymPoly::is_symmetric() const {
    // invariance under adjacent transpositions generates S_n
    for (int i = 0; i + 1 < nvars_; ++i) {
        for (const auto& [e, v] : terms_) {
            std::vector<int> e2 = e;
            std::swap(e2[i], e2[i + 1]);
            if (!(coeff(e2) == v)) return false;
        }
    }
    return true;
}

RatFun LaurentSymPoly::eval(const std::vector<RatFun>& xs) const {
    if (static_cast<int>(xs.size()) != nvars_)
        throw std::invalid_argument("LaurentSymPoly::eval: arity mismatch");
    RatFun acc;
    for (const auto& [e, v] : terms_) {
        RatFun term = v;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) term *= xs[i].pow(e[i]);
        acc += term;
    }
    return acc;
}

}  // namespace padichl::hlpoly
