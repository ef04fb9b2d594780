#pragma once

#include <map>
#include <optional>
#include <vector>

#include "padichl/polynomial.hpp"
#include "padichl/signature.hpp"

namespace padichl::hlpoly {

using exactnum::Rat;
using exactnum::RatFun;
using sigcore::Signature;

/* Sparse symmetric Laurent polynomial: exponent vector -> coefficient.
 * Symmetry is not enforced on construction; is_symmetric() checks it. */
class LaurentSymPoly {
public:
    LaurentSymPoly() = default;
    explicit LaurentSymPoly(int nvars) : nvars_(nvars) {}

    static LaurentSymPoly one(int nvars);
    static LaurentSymPoly monomial(std::vector<int> expo, RatFun coeff);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, RatFun>& terms() const { return terms_; }

    RatFun coeff(const std::vector<int>& e) const;
    void add_term(const std::vector<int>& e, const RatFun& c);

    friend LaurentSymPoly operator+(const LaurentSymPoly& a, const LaurentSymPoly& b);
    friend LaurentSymPoly operator-(const LaurentSymPoly& a, const LaurentSymPoly& b);
    friend LaurentSymPoly operator*(const LaurentSymPoly& a, const LaurentSymPoly& b);
    LaurentSymPoly scaled(const RatFun& c) const;
    bool operator==(const LaurentSymPoly& o) const;

    /* lexicographically largest exponent vector; throws on zero */
    const std::vector<int>& leading_expo() const;

    LaurentSymPoly shifted_all(int d) const;     // * (x_1...x_n)^d
    LaurentSymPoly doubled_expos() const;        // x_i -> x_i^2
    LaurentSymPoly inverted_vars() const;        // x_i -> 1/x_i

    bool is_symmetric() const;

    RatFun eval(const std::vector<RatFun>& xs) const;

private:
    int nvars_ = 0;
    std::map<std::vector<int>, RatFun> terms_;
};

struct GeomTail {
    RatFun first;
    RatFun ratio;
};

/* Finite list of values with an optional geometric tail
 * (first, first*ratio, first*ratio^2, ...). */
struct Specialization {
    std::vector<RatFun> finite;
    std::optional<GeomTail> tail;

    static Specialization of(std::vector<RatFun> vals) { return {std::move(vals), {}}; }
    static Specialization geometric(RatFun first, RatFun ratio) {
        return {{}, GeomTail{std::move(first), std::move(ratio)}};
    }
    bool is_finite() const { return !tail.has_value(); }
};

}  // namespace padichl::hlpoly
