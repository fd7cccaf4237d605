#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qtree/rational.hpp"

namespace qtree {

// Dense univariate polynomial over the rationals, coefficients ascending by
// power. The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& constant);
    explicit Poly(long constant);
    Poly(std::initializer_list<long> ascending_coeffs);

    static Poly from_coeffs(std::vector<Rat> ascending);
    static Poly monomial(const Rat& coeff, int power);
    // The variable z itself.
    static Poly var();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    // Coefficient of z^i (zero beyond the degree).
    Rat coeff(int i) const;
    const Rat& leading() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    Poly operator/(const Rat& s) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Quotient and remainder with deg rem < deg divisor; exact over Q.
    static std::pair<Poly, Poly> divrem(const Poly& num, const Poly& div);
    // Division that must leave no remainder; throws InconsistentInput otherwise.
    static Poly exact_div(const Poly& num, const Poly& div);
    // Canonicalized gcd (primitive integer coefficients, positive leading).
    static Poly gcd(const Poly& a, const Poly& b);

    Poly derivative() const;
    Poly pow(int e) const;
    // p(-z)
    Poly reflected() const;

    Rat eval(const Rat& x) const;
    double eval_double(double x) const;
    int sign_at(const Rat& x) const { return sign_of(eval(x)); }
    // Sign of p(x) as x -> +inf / -inf.
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    // The unique positive rational c such that (*this)/c has coprime integer
    // coefficients. Zero polynomial -> 1.
    Rat content() const;
    // Primitive integer coefficients with positive leading coefficient; the
    // canonical representative of the proportionality class. Zero stays zero.
    Poly canonical() const;
    bool is_canonical() const { return *this == canonical(); }
    // True if all coefficients are integers.
    bool is_integer() const;

    // p(z) == (-1)^deg p(-z) up to the stated parity (even/odd as function).
    bool has_parity() const;

    // Human form such as "-108z^6+258z^4-202z^2+52"; parseable by
    // poly_from_text.
    std::string to_string() const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

inline Poly operator*(const Rat& s, const Poly& p) { return p * s; }

}  // namespace qtree
