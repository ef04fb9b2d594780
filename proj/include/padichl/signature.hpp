#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace padichl::sigcore {

/* Weakly decreasing integer tuple.  Immutable value with structural
 * equality; the lexicographic order makes signatures usable as map keys
 * with deterministic iteration. */
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<long long> parts);
    static Signature constant(long long c, size_t n);  // c[n]

    size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long long operator[](size_t i) const { return parts_[i]; }
    const std::vector<long long>& parts() const { return parts_; }

    long long sum() const;                // |lambda|
    long long weighted() const;           // n(lambda) = sum (i-1) lambda_i
    std::map<long long, int> mults() const;  // m_k
    int positive_length() const;          // number of positive parts
    long long mult_of(long long value) const;

    Signature shifted(long long d) const;
    Signature negated() const;            // (-lambda_n, ..., -lambda_1)
    Signature concat(const Signature& tail) const;  // throws if not decreasing
    Signature slice(size_t from, size_t len) const;

    bool all_nonnegative() const;
    bool contains(const Signature& inner) const;  // inner_i <= outer_i, same length

    auto operator<=>(const Signature& o) const = default;

    std::string str() const;  // e.g. (3,1,0)

private:
    std::vector<long long> parts_;
};

struct SigStats {
    long long size = 0;
    long long weighted = 0;
    std::map<long long, int> mults;
    int length = 0;
};

SigStats stats(const Signature& s);

enum class InterlaceKind { P, Q };

/* P: len(outer) = len(inner)+1 and outer_i >= inner_i >= outer_{i+1}.
 * Q: equal lengths, inner contained in outer and inner_i >= outer_{i+1}. */
bool interlace(InterlaceKind kind, const Signature& inner, const Signature& outer);

/* Every signature of length n with parts in [low, high], optionally with
 * |lambda| = size_filter, in lexicographically decreasing order.  The
 * guard bounds n*(high-low); exceeding it is an error. */
std::vector<Signature> enumerate_signatures(size_t n, long long low, long long high,
                                            std::optional<long long> size_filter = {},
                                            long long guard = 64);

}  // namespace padichl::sigcore
