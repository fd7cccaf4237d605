#pragma once

#include <string>

#include "qtree/polynomial.hpp"

namespace qtree {

// Reduced fraction of two polynomials. Stored with gcd(num, den) = 1 and the
// denominator scaled to primitive integer coefficients with positive leading
// coefficient, so equal values have identical representations. The numerator
// keeps whatever rational coefficients preserve the exact value.
class RatFunc {
public:
    // Zero.
    RatFunc() : num_(), den_(Poly(1L)) {}
    RatFunc(Poly num, Poly den);
    explicit RatFunc(Poly num) : RatFunc(std::move(num), Poly(1L)) {}

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // deg num < deg den
    bool is_proper() const { return num_.degree() < den_.degree(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc reciprocal() const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    double eval_double(double x) const { return num_.eval_double(x) / den_.eval_double(x); }

    std::string to_string() const;

private:
    Poly num_, den_;
};

// reduce() of the specification: the canonical constructor as a free function.
inline RatFunc reduce(Poly num, Poly den) { return RatFunc(std::move(num), std::move(den)); }

}  // namespace qtree
