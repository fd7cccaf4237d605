#include "qtree/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qtree/errors.hpp"

namespace qtree {

int RootIsolation::total_multiplicity() const {
    int t = 0;
    for (const auto& r : roots) t += r.multiplicity;
    return t;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() < 1) return out;
    // Yun's algorithm.
    Poly d = p.derivative();
    Poly a = Poly::gcd(p, d);
    Poly b = Poly::exact_div(p, a);
    Poly c = Poly::exact_div(d, a);
    Poly e = c - b.derivative();
    int k = 1;
    while (b.degree() > 0) {
        Poly f = Poly::gcd(b, e);
        if (f.degree() > 0) out.emplace_back(f.canonical(), k);
        b = Poly::exact_div(b, f);
        e = Poly::exact_div(e, f) - b.derivative();
        ++k;
    }
    return out;
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() < 1) return p.canonical();
    return Poly::exact_div(p, Poly::gcd(p, p.derivative())).canonical();
}

std::vector<Poly> sturm_sequence(const Poly& squarefree) {
    std::vector<Poly> seq;
    if (squarefree.is_zero()) return seq;
    seq.push_back(squarefree);
    if (squarefree.degree() == 0) return seq;
    seq.push_back(squarefree.derivative());
    while (seq.back().degree() > 0) {
        Poly r = Poly::divrem(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        r = -r;
        r = r / abs(r.content());  // positive scaling keeps the sign pattern
        seq.push_back(std::move(r));
    }
    return seq;
}

namespace {

int sign_variations(const std::vector<Poly>& seq, const Rat& x) {
    int prev = 0, var = 0;
    for (const auto& p : seq) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

int sturm_count(const std::vector<Poly>& seq, const Rat& a, const Rat& b) {
    if (seq.empty() || seq[0].degree() < 1) return 0;
    return sign_variations(seq, a) - sign_variations(seq, b);
}

int count_distinct_roots(const Poly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
    Poly sf = squarefree_part(p);
    return sturm_count(sturm_sequence(sf), a, b);
}

namespace {

Rat cauchy_bound(const Poly& p) {
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rat(abs(p.coeff(i))));
    return Rat(1) + m / abs(p.leading());
}

// Isolating intervals (open, endpoints non-roots) for a squarefree polynomial
// on (a, b), plus exact roots found en route. Requires f(a) != 0 != f(b).
void isolate_rec(const Poly& f, const std::vector<Poly>& seq, const Rat& a, const Rat& b,
                 std::vector<IsolatedRoot>& out) {
    int n = sturm_count(seq, a, b);
    if (n == 0) return;
    if (n == 1) {
        out.push_back({a, b, 1, false});
        return;
    }
    Rat mid = make_rat(1, 2) * (a + b);
    if (f.sign_at(mid) == 0) {
        out.push_back({mid, mid, 1, true});
        // Shrink symmetric padding around mid until it excludes other roots.
        Rat w = (b - a) / 4;
        while (sturm_count(seq, mid - w, mid + w) != 1 || f.sign_at(mid - w) == 0 ||
               f.sign_at(mid + w) == 0)
            w /= 2;
        isolate_rec(f, seq, a, mid - w, out);
        isolate_rec(f, seq, mid + w, b, out);
        return;
    }
    isolate_rec(f, seq, a, mid, out);
    isolate_rec(f, seq, mid, b, out);
}

}  // namespace

IsolatedRoot refine_root(const Poly& squarefree, IsolatedRoot root, const Rat& precision) {
    if (root.exact) return root;
    int slo = squarefree.sign_at(root.lo);
    while (root.hi - root.lo > precision) {
        Rat mid = make_rat(1, 2) * (root.lo + root.hi);
        int sm = squarefree.sign_at(mid);
        if (sm == 0) {
            root.lo = root.hi = mid;
            root.exact = true;
            return root;
        }
        if (sm == slo) {
            root.lo = mid;
        } else {
            root.hi = mid;
        }
    }
    return root;
}

RootIsolation isolate_real_roots(const Poly& pol, const Rat& lo, const Rat& hi,
                                 const Rat& precision) {
    if (pol.is_zero()) throw std::invalid_argument("cannot isolate roots of zero polynomial");
    RootIsolation out;
    if (pol.degree() < 1) return out;

    struct Tagged {
        IsolatedRoot r;
        Poly factor;  // squarefree factor owning the root
    };
    std::vector<Tagged> all;

    for (const auto& [factor, mult] : squarefree_decomposition(pol)) {
        if (factor.degree() < 1) continue;
        std::vector<IsolatedRoot> found;
        // Endpoints handled explicitly so the recursion can assume non-roots.
        Rat a = lo, b = hi;
        if (factor.sign_at(a) == 0) found.push_back({a, a, 1, true});
        if (b != a && factor.sign_at(b) == 0) found.push_back({b, b, 1, true});
        Rat step = (b - a) / 1024;
        if (step == 0) step = Rat(1);
        while (factor.sign_at(a) == 0) a += step / 2, step /= 2;
        while (factor.sign_at(b) == 0) b -= step / 2, step /= 2;
        if (a < b) {
            auto seq = sturm_sequence(factor);
            isolate_rec(factor, seq, a, b, found);
        }
        for (auto& r : found) {
            r = refine_root(factor, r, precision);
            r.multiplicity = mult;
            all.push_back({r, factor});
        }
    }

    // Roots of distinct squarefree factors are distinct; refine until the
    // intervals are pairwise disjoint so sorting by midpoint is sound.
    bool again = true;
    Rat prec = precision;
    while (again) {
        again = false;
        for (size_t i = 0; i < all.size() && !again; ++i)
            for (size_t j = i + 1; j < all.size() && !again; ++j) {
                const auto& x = all[i].r;
                const auto& y = all[j].r;
                if (x.hi < y.lo || y.hi < x.lo) continue;
                if (x.exact && y.exact) continue;  // distinct exact points
                again = true;
            }
        if (again) {
            prec /= 1024;
            for (auto& t : all) t.r = refine_root(t.factor, t.r, prec);
        }
    }

    std::sort(all.begin(), all.end(),
              [](const Tagged& x, const Tagged& y) { return x.r.midpoint() < y.r.midpoint(); });
    for (auto& t : all) out.roots.push_back(std::move(t.r));
    return out;
}

RootIsolation isolate_real_roots(const Poly& pol, const Rat& precision) {
    if (pol.is_zero()) throw std::invalid_argument("cannot isolate roots of zero polynomial");
    Rat b = cauchy_bound(pol);
    return isolate_real_roots(pol, -b, b, precision);
}

namespace {

// Simplest (minimal-denominator) rational in [a, b], 0 <= a <= b.
Rat simplest_in(const Rat& a, const Rat& b) {
    Int fa = rat_floor(a);
    if (Rat(fa) == a) return a;
    if (Rat(fa + 1) <= b) return Rat(fa + 1);
    // a and b share the same integer part; recurse on the fractional inverse.
    return Rat(fa) + Rat(1) / simplest_in(Rat(1) / (b - Rat(fa)), Rat(1) / (a - Rat(fa)));
}

}  // namespace

std::optional<Rat> try_snap_to_rational(double x, const Int& max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    Rat a(x - tol), b(x + tol);
    a.canonicalize();
    b.canonicalize();
    Rat result;
    if (sign_of(a) <= 0 && sign_of(b) >= 0) {
        result = Rat(0);
    } else if (sign_of(b) < 0) {
        result = -simplest_in(-b, -a);
    } else {
        result = simplest_in(a, b);
    }
    result.canonicalize();
    if (result.get_den() > max_den) return std::nullopt;
    return result;
}

Rat snap_to_rational(double x, const Int& max_den, double tol) {
    if (max_den < 1) throw std::invalid_argument("snap_to_rational: max_denominator < 1");
    auto r = try_snap_to_rational(x, max_den, tol);
    if (!r) throw InconsistentInput("not rationalizable");
    return *r;
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

std::optional<Int> RatInterval::unique_integer() const {
    Int a = rat_ceil(lo), b = rat_floor(hi);
    if (a != b || a > b) return std::nullopt;
    return a;
}

std::vector<RatInterval> interval_poly_from_roots(const std::vector<RatInterval>& roots,
                                                  const Int& lead) {
    std::vector<RatInterval> coeffs{RatInterval::point(Rat(lead))};
    for (const auto& r : roots) {
        std::vector<RatInterval> next(coeffs.size() + 1, RatInterval::point(Rat(0)));
        for (size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] = next[i + 1] + coeffs[i];
            next[i] = next[i] + coeffs[i] * (-r);
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

}  // namespace qtree
