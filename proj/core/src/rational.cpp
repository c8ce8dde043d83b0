#include <cosmetry/rational.hpp>

#include <ostream>

namespace cosmetry {

Rational::Rational(const Int& num, const Int& den) {
    require(den != 0, "rational: denominator must be nonzero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    require(o.v_ != 0, "rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace cosmetry
