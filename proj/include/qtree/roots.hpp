#pragma once

#include <optional>
#include <vector>

#include "qtree/polynomial.hpp"

namespace qtree {

// One isolated real root: an interval containing exactly one distinct root of
// the polynomial, with its multiplicity. Exact rational roots collapse to
// lo == hi.
struct IsolatedRoot {
    Rat lo, hi;
    int multiplicity = 1;
    bool exact = false;

    Rat midpoint() const { return exact ? lo : make_rat(1, 2) * (lo + hi); }
    double midpoint_double() const { return midpoint().get_d(); }
};

struct RootIsolation {
    std::vector<IsolatedRoot> roots;  // sorted ascending, pairwise disjoint
    int total_multiplicity() const;
};

// Squarefree decomposition p = prod f_k^k (Yun); returns {f_k, k} for the
// nonconstant factors.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);
Poly squarefree_part(const Poly& p);

// Sturm sequence of a squarefree polynomial; count of real roots in (a, b].
std::vector<Poly> sturm_sequence(const Poly& squarefree);
int sturm_count(const std::vector<Poly>& seq, const Rat& a, const Rat& b);
// Distinct real roots of an arbitrary nonzero polynomial in (a, b].
int count_distinct_roots(const Poly& p, const Rat& a, const Rat& b);

// All real roots of pol inside [lo, hi], isolated with multiplicities and the
// intervals refined to width <= precision. Disjointness holds across the whole
// output. pol must be nonzero.
RootIsolation isolate_real_roots(const Poly& pol, const Rat& lo, const Rat& hi,
                                 const Rat& precision = make_rat(1, 1000000000000L));
// Same over the whole real line (Cauchy bound).
RootIsolation isolate_real_roots(const Poly& pol,
                                 const Rat& precision = make_rat(1, 1000000000000L));

// Narrow an isolating interval of the given squarefree polynomial until its
// width is <= precision.
IsolatedRoot refine_root(const Poly& squarefree, IsolatedRoot root, const Rat& precision);

// Smallest-denominator rational within tol of x, with denominator <= max_den.
// Empty when no such rational exists.
std::optional<Rat> try_snap_to_rational(double x, const Int& max_den, double tol);
// Throwing variant: InconsistentInput("not rationalizable") on failure.
Rat snap_to_rational(double x, const Int& max_den, double tol = 1e-6);

// Exact rational interval arithmetic, used to reconstruct integer polynomial
// factors from isolated roots.
struct RatInterval {
    Rat lo, hi;

    static RatInterval point(const Rat& x) { return {x, x}; }
    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-() const { return {-hi, -lo}; }
    RatInterval operator*(const RatInterval& o) const;
    Rat width() const { return hi - lo; }
    // The unique integer in the interval, if there is exactly one.
    std::optional<Int> unique_integer() const;
};

// Coefficient intervals of lead * prod (z - r_i) for root intervals r_i
// (ascending powers).
std::vector<RatInterval> interval_poly_from_roots(const std::vector<RatInterval>& roots,
                                                  const Int& lead);

}  // namespace qtree
