#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace lch {

using BigInt = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in t. Stored as (exponent, coefficient)
/// pairs sorted by exponent with no zero coefficients.
class Laurent {
public:
    using Monomial = std::pair<int, BigInt>;

    Laurent() = default;
    Laurent(long c);  // NOLINT: constants convert implicitly
    static Laurent monomial(BigInt c, int exponent);
    static Laurent t_power(int exponent) { return monomial(1, exponent); }

    const std::vector<Monomial>& monomials() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// True for +-t^k.
    bool is_unit() const;
    bool is_monomial() const { return terms_.size() == 1; }

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent&, const Laurent&) = default;

    /// Image under t -> sign * t^exponent_sign (exponent_sign = +-1).
    Laurent substitute_t(int sign, int exponent_sign) const;
    /// Value at t = 1 reduced mod 2.
    bool mod2_at_one() const;

    std::string str() const;

private:
    void normalize();
    std::vector<Monomial> terms_;
};

}  // namespace lch
