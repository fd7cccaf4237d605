#include "qtree/rational_function.hpp"

#include <stdexcept>

namespace qtree {

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(1L);
        return;
    }
    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
        num = Poly::exact_div(num, g);
        den = Poly::exact_div(den, g);
    }
    // Scale both sides by the same constant so den is primitive integer with
    // positive leading coefficient; the value is unchanged.
    Rat c = den.content();
    if (sign_of(den.leading()) < 0) c = -c;
    num_ = num / c;
    den_ = den / c;
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::reciprocal() const {
    if (is_zero()) throw std::invalid_argument("reciprocal of zero rational function");
    return RatFunc(den_, num_);
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qtree
