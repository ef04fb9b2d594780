#include "padichl/signature.hpp"

#include <algorithm>
#include <stdexcept>

namespace padichl::sigcore {

Signature::Signature(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] < parts_[i])
            throw std::invalid_argument("Signature: parts must be weakly decreasing");
}

Signature Signature::constant(long long c, size_t n) {
    return Signature(std::vector<long long>(n, c));
}

long long Signature::sum() const {
    long long s = 0;
    for (long long p : parts_) s += p;
    return s;
}

long long Signature::weighted() const {
    long long s = 0;
    for (size_t i = 0; i < parts_.size(); ++i) s += static_cast<long long>(i) * parts_[i];
    return s;
}

std::map<long long, int> Signature::mults() const {
    std::map<long long, int> m;
    for (long long p : parts_) ++m[p];
    return m;
}

int Signature::positive_length() const {
    int n = 0;
    for (long long p : parts_)
        if (p > 0) ++n;
    return n;
}

long long Signature::mult_of(long long value) const {
    long long n = 0;
    for (long long p : parts_)
        if (p == value) ++n;
    return n;
}

Signature Signature::shifted(long long d) const {
    std::vector<long long> p = parts_;
    for (auto& x : p) x += d;
    return Signature(std::move(p));
}

Signature Signature::negated() const {
    std::vector<long long> p(parts_.rbegin(), parts_.rend());
    for (auto& x : p) x = -x;
    return Signature(std::move(p));
}

Signature Signature::concat(const Signature& tail) const {
    std::vector<long long> p = parts_;
    p.insert(p.end(), tail.parts_.begin(), tail.parts_.end());
    return Signature(std::move(p));  // constructor re-validates
}

Signature Signature::slice(size_t from, size_t len) const {
    if (from + len > parts_.size()) throw std::out_of_range("Signature::slice");
    return Signature(std::vector<long long>(parts_.begin() + from, parts_.begin() + from + len));
}

bool Signature::all_nonnegative() const {
    return parts_.empty() || parts_.back() >= 0;
}

bool Signature::contains(const Signature& inner) const {
    if (inner.size() != size()) return false;
    for (size_t i = 0; i < size(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Signature::str() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

SigStats stats(const Signature& s) {
    SigStats st;
    st.size = s.sum();
    st.weighted = s.weighted();
    st.mults = s.mults();
    st.length = s.positive_length();
    return st;
}

bool interlace(InterlaceKind kind, const Signature& inner, const Signature& outer) {
    if (kind == InterlaceKind::P) {
        if (outer.size() != inner.size() + 1)
            throw std::invalid_argument("interlace(P): len(outer) must be len(inner)+1");
        for (size_t i = 0; i < inner.size(); ++i)
            if (!(outer[i] >= inner[i] && inner[i] >= outer[i + 1])) return false;
        return true;
    }
    if (outer.size() != inner.size())
        throw std::invalid_argument("interlace(Q): lengths must match");
    for (size_t i = 0; i < inner.size(); ++i) {
        if (inner[i] > outer[i]) return false;
        if (i + 1 < outer.size() && inner[i] < outer[i + 1]) return false;
    }
    return true;
}

std::vector<Signature> enumerate_signatures(size_t n, long long low, long long high,
                                            std::optional<long long> size_filter,
                                            long long guard) {
    if (low > high) throw std::invalid_argument("enumerate_signatures: low > high");
    if (static_cast<long long>(n) * (high - low) > guard)
        throw std::invalid_argument("enumerate_signatures: guard exceeded");
    std::vector<Signature> out;
    std::vector<long long> cur(n, 0);
    // lexicographically decreasing: descend each coordinate from its cap
    auto rec = [&](auto&& self, size_t i, long long cap, long long sum) -> void {
        if (i == n) {
            if (!size_filter || sum == *size_filter) out.emplace_back(cur);
            return;
        }
        for (long long v = cap; v >= low; --v) {
            cur[i] = v;
            self(self, i + 1, v, sum + v);
        }
    };
    rec(rec, 0, high, 0);
    return out;
}

}  // namespace padichl::sigcore
