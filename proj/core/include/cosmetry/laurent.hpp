#pragma once

#include <cosmetry/integer.hpp>

#include <map>
#include <string>

namespace cosmetry {

/// Integer Laurent polynomial in one variable t. Coefficients are stored
/// sparsely by exponent; zero coefficients are never kept.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(long exp, const Int& coeff);
    /// t^n - 1 for n >= 1.
    static LaurentPoly power_minus_one(long n);

    bool is_zero() const { return terms_.empty(); }
    Int coeff(long exp) const;
    long min_exp() const;  // requires nonzero
    long max_exp() const;  // requires nonzero
    const std::map<long, Int>& terms() const { return terms_; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// Multiplies by t^k.
    LaurentPoly shifted(long k) const;
    /// Substitutes t -> t^k for nonzero k (k may be negative).
    LaurentPoly substituted_power(long k) const;
    /// Exact division; throws if the remainder is nonzero.
    LaurentPoly divided_exact(const LaurentPoly& divisor) const;

    /// f(1).
    Int eval_one() const;
    /// f''(1) = sum c_e * e * (e - 1), exact over all exponents.
    Int second_derivative_one() const;

    /// True when f(t) = f(1/t) coefficient-wise.
    bool is_symmetric() const;

    /// Serializes as sorted "exponent:coefficient" pairs, e.g. "-1:1,0:-1,1:1".
    /// The zero polynomial serializes as "0:0".
    std::string str() const;

private:
    void set(long exp, const Int& coeff);
    std::map<long, Int> terms_;
};

}  // namespace cosmetry
