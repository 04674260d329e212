#pragma once

#include "picdyn/poly.hpp"

#include <vector>

namespace picdyn {

// Isolating interval for a single real root. lo == hi marks an exact rational
// root; otherwise the open interval (lo, hi) contains exactly one root and the
// endpoints are not roots.
struct RootInterval {
    Rat lo, hi;
    bool is_exact() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }
};

std::vector<RatPoly> sturm_chain(const RatPoly& p);

// Sign variation count of the chain at x, at +infinity, at -infinity.
int sign_variations_at(const std::vector<RatPoly>& chain, const Rat& x);
int sign_variations_at_pos_inf(const std::vector<RatPoly>& chain);
int sign_variations_at_neg_inf(const std::vector<RatPoly>& chain);

// Number of distinct real roots in the open interval (a, b); endpoints must
// not be roots.
long count_real_roots_in(const IntPoly& p, const Rat& a, const Rat& b);
long count_real_roots(const IntPoly& p);
// Roots in (a, +infinity); a must not be a root.
long count_real_roots_above(const IntPoly& p, const Rat& a);

// Cauchy bound: all complex roots have modulus < the returned value.
Rat root_bound(const IntPoly& p);

// Isolating intervals for all real roots of a squarefree polynomial, in
// increasing order.
std::vector<RootInterval> isolate_real_roots(const IntPoly& squarefree);

// Shrink an isolating interval below the requested width by bisection.
RootInterval refine_root(const IntPoly& p, RootInterval iv, const Rat& width);

// Cauchy index of A/B over the whole real line, computed from the signed
// Euclidean remainder chain of (B, A).
long cauchy_index(const RatPoly& numerator_a, const RatPoly& denominator_b);

// Exact root location relative to the unit circle for a squarefree polynomial.
struct DiskCounts {
    long inside = 0;
    long on = 0;
    long outside = 0;
};
DiskCounts unit_disk_counts(const IntPoly& squarefree);

}  // namespace picdyn
