#pragma once

#include <map>
#include <string>

#include "braidconc/braid.hpp"  // BigInt, Rational

namespace bc {

// Integer-coefficient Laurent polynomial, exact arithmetic. Zero coefficients
// are never stored.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(BigInt constant);
    static LaurentPoly monomial(BigInt coeff, int exponent);
    static LaurentPoly one() { return LaurentPoly(BigInt(1)); }

    const std::map<int, BigInt>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int lowest_exponent() const;   // requires nonzero
    int highest_exponent() const;  // requires nonzero
    int span() const { return is_zero() ? 0 : highest_exponent() - lowest_exponent(); }
    BigInt coefficient(int exponent) const;
    BigInt evaluate_int(const BigInt& t) const;  // requires lowest exponent >= 0

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const = default;

    // Shift exponents by k (multiply by t^k).
    LaurentPoly shifted(int k) const;
    // t -> t^{-1}
    LaurentPoly reciprocal() const;
    // Multiply by +-t^k so the lowest exponent is 0 and the leading
    // coefficient positive. Zero stays zero.
    LaurentPoly normalized() const;

    // `exp:coeff` pairs sorted by exponent, space separated; "0" for zero.
    std::string serialize() const;
    static LaurentPoly deserialize(const std::string& text);
    std::string pretty(const std::string& var = "t") const;

  private:
    std::map<int, BigInt> coeffs_;
    void strip();
};

}  // namespace bc
