#include "qtree/polynomial.hpp"

#include <stdexcept>

#include "qtree/errors.hpp"

namespace qtree {

Poly::Poly(const Rat& constant) {
    if (sign_of(constant) != 0) coeffs_.push_back(constant);
}

Poly::Poly(long constant) {
    if (constant != 0) coeffs_.push_back(make_rat(constant));
}

Poly::Poly(std::initializer_list<long> ascending_coeffs) {
    coeffs_.reserve(ascending_coeffs.size());
    for (long c : ascending_coeffs) coeffs_.push_back(make_rat(c));
    trim();
}

Poly Poly::from_coeffs(std::vector<Rat> ascending) {
    Poly p;
    p.coeffs_ = std::move(ascending);
    p.trim();
    return p;
}

Poly Poly::monomial(const Rat& coeff, int power) {
    Poly p;
    if (sign_of(coeff) != 0) {
        p.coeffs_.assign(power + 1, Rat(0));
        p.coeffs_[power] = coeff;
    }
    return p;
}

Poly Poly::var() { return monomial(Rat(1), 1); }

void Poly::trim() {
    while (!coeffs_.empty() && sign_of(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[i];
}

const Rat& Poly::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return from_coeffs(std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return from_coeffs(std::move(out));
}

Poly Poly::operator*(const Rat& s) const {
    if (sign_of(s) == 0) return Poly();
    Poly r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

Poly Poly::operator/(const Rat& s) const {
    if (sign_of(s) == 0) throw std::invalid_argument("polynomial division by zero scalar");
    Poly r = *this;
    for (auto& c : r.coeffs_) c /= s;
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& num, const Poly& div) {
    if (div.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Poly rem = num;
    if (num.degree() < div.degree()) return {Poly(), rem};
    std::vector<Rat> q(num.degree() - div.degree() + 1, Rat(0));
    const Rat& lead = div.leading();
    while (!rem.is_zero() && rem.degree() >= div.degree()) {
        int shift = rem.degree() - div.degree();
        Rat factor = rem.leading() / lead;
        q[shift] = factor;
        rem = rem - Poly::monomial(factor, shift) * div;
    }
    return {from_coeffs(std::move(q)), rem};
}

Poly Poly::exact_div(const Poly& num, const Poly& div) {
    auto [q, r] = divrem(num, div);
    if (!r.is_zero())
        throw InconsistentInput("exact polynomial division left remainder " + r.to_string());
    return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = divrem(r0, r1).second;
        // Keep coefficient growth in check across the remainder chain.
        if (!r2.is_zero()) r2 = r2 / r2.content();
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.canonical();
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rat> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * make_rat(static_cast<long>(i));
    return from_coeffs(std::move(out));
}

Poly Poly::pow(int e) const {
    Poly r(1L);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

Poly Poly::reflected() const {
    Poly r = *this;
    for (size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

int Poly::sign_at_pos_inf() const { return is_zero() ? 0 : sign_of(leading()); }

int Poly::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    return degree() % 2 == 0 ? sign_of(leading()) : -sign_of(leading());
}

Rat Poly::content() const {
    if (is_zero()) return Rat(1);
    Int num_gcd(0), den_lcm(1);
    for (const auto& c : coeffs_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return make_rat(num_gcd, den_lcm);
}

Poly Poly::canonical() const {
    if (is_zero()) return Poly();
    Rat c = content();
    if (sign_of(leading()) < 0) c = -c;
    return *this / c;
}

bool Poly::is_integer() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

bool Poly::has_parity() const {
    if (is_zero()) return true;
    // All exponents share the parity of the degree.
    for (int i = degree() % 2 == 0 ? 1 : 0; i <= degree(); i += 2)
        if (sign_of(coeff(i)) != 0) return false;
    return true;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rat c = coeff(i);
        if (sign_of(c) == 0) continue;
        if (!out.empty() && sign_of(c) > 0) out += "+";
        Rat a = abs(c);
        std::string mag;
        if (a != 1 || i == 0) mag = rat_to_string(a);
        if (sign_of(c) < 0) mag = "-" + mag;
        out += mag;
        if (i >= 1) {
            out += "z";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace qtree
