#include <cosmetry/laurent.hpp>

#include <sstream>

namespace cosmetry {

void LaurentPoly::set(long exp, const Int& coeff) {
    if (coeff == 0) {
        terms_.erase(exp);
    } else {
        terms_[exp] = coeff;
    }
}

LaurentPoly LaurentPoly::monomial(long exp, const Int& coeff) {
    LaurentPoly p;
    p.set(exp, coeff);
    return p;
}

LaurentPoly LaurentPoly::power_minus_one(long n) {
    require(n >= 1, "laurent: power_minus_one needs n >= 1");
    LaurentPoly p;
    p.set(n, 1);
    p.set(0, -1);
    return p;
}

Int LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

long LaurentPoly::min_exp() const {
    require(!terms_.empty(), "laurent: zero polynomial has no exponents");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    require(!terms_.empty(), "laurent: zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) set(e, coeff(e) + c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) set(e, coeff(e) - c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            p.set(ea + eb, p.coeff(ea + eb) + ca * cb);
        }
    }
    return p;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
    return p;
}

LaurentPoly LaurentPoly::substituted_power(long k) const {
    require(k != 0, "laurent: substitution exponent must be nonzero");
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e * k, c);
    return p;
}

LaurentPoly LaurentPoly::divided_exact(const LaurentPoly& divisor) const {
    require(!divisor.is_zero(), "laurent: division by the zero polynomial");
    if (is_zero()) return zero();
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const long dtop = divisor.max_exp();
    const Int dlead = divisor.coeff(dtop);
    // An exact quotient cannot reach below this exponent.
    const long qmin = min_exp() - divisor.min_exp();
    while (!rem.is_zero() && rem.max_exp() - dtop >= qmin) {
        const long rtop = rem.max_exp();
        const Int rlead = rem.coeff(rtop);
        require(rlead % dlead == 0, "laurent: division is not exact");
        LaurentPoly term = monomial(rtop - dtop, rlead / dlead);
        quot += term;
        rem -= term * divisor;
    }
    require(rem.is_zero(), "laurent: division is not exact");
    return quot;
}

Int LaurentPoly::eval_one() const {
    Int v = 0;
    for (const auto& [e, c] : terms_) v += c;
    return v;
}

Int LaurentPoly::second_derivative_one() const {
    Int v = 0;
    for (const auto& [e, c] : terms_) v += c * e * (Int(e) - 1);
    return v;
}

bool LaurentPoly::is_symmetric() const {
    for (const auto& [e, c] : terms_) {
        if (coeff(-e) != c) return false;
    }
    return true;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0:0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << ",";
        os << e << ":" << c.get_str();
        first = false;
    }
    return os.str();
}

}  // namespace cosmetry
