#pragma once

#include "picdyn/poly.hpp"
#include "picdyn/sturm.hpp"

#include <memory>
#include <string>
#include <vector>

namespace picdyn {

// A real algebraic number: irreducible minimal polynomial plus an interval
// isolating exactly one of its real roots. Refinement never changes the
// identified root.
class AlgebraicNumber {
public:
    AlgebraicNumber(IntPoly min_poly, RootInterval interval);

    const IntPoly& min_poly() const { return min_poly_; }
    const RootInterval& interval() const { return interval_; }

    // Shrink the isolating interval below the given width.
    void refine(const Rat& width);

    // Exact comparison against a rational.
    int compare(const Rat& q) const;
    bool operator>(const Rat& q) const { return compare(q) > 0; }
    bool operator<(const Rat& q) const { return compare(q) < 0; }

    // Exact comparison of two algebraic numbers. Roots of distinct irreducible
    // polynomials are never equal, so interval refinement always separates
    // them.
    static int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

    std::string decimal(unsigned digits = 12) const;

private:
    IntPoly min_poly_;
    mutable RootInterval interval_;
};

// Arithmetic in Q(lambda) = Q[t]/(m(t)) for a monic irreducible m with a
// distinguished real root. Elements are represented by polynomials of degree
// < deg m.
class NumberField {
public:
    NumberField(IntPoly modulus, RootInterval root);

    const IntPoly& modulus() const { return modulus_; }
    std::size_t degree() const { return static_cast<std::size_t>(modulus_.degree()); }

    struct Elem {
        RatPoly rep;
        bool operator==(const Elem& o) const { return rep == o.rep; }
    };

    Elem zero() const { return {RatPoly()}; }
    Elem one() const { return {RatPoly::one()}; }
    Elem from_rat(const Rat& q) const { return {RatPoly(q)}; }
    Elem generator() const;  // lambda itself
    Elem from_poly(const RatPoly& p) const { return {reduce(p)}; }

    Elem add(const Elem& a, const Elem& b) const { return {a.rep + b.rep}; }
    Elem sub(const Elem& a, const Elem& b) const { return {a.rep - b.rep}; }
    Elem neg(const Elem& a) const { return {-a.rep}; }
    Elem mul(const Elem& a, const Elem& b) const { return {reduce(a.rep * b.rep)}; }
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a.rep.is_zero(); }
    bool is_rational(const Elem& a) const { return a.rep.degree() <= 0; }

    // Exact sign of the real number a(lambda); refines the root interval as
    // needed. Nonzero elements cannot evaluate to zero at the root since the
    // modulus is irreducible.
    int sign_of(const Elem& a) const;

    // Rational enclosure of a(lambda) of width at most `width`.
    std::pair<Rat, Rat> enclosure(const Elem& a, const Rat& width) const;

    void refine_root(const Rat& width) const;
    const RootInterval& root() const { return root_; }

private:
    RatPoly reduce(const RatPoly& p) const;

    IntPoly modulus_;
    mutable RootInterval root_;
};

// Interval evaluation helper: the image of [lo, hi] under p, as an interval.
std::pair<Rat, Rat> interval_evaluate(const RatPoly& p, const Rat& lo, const Rat& hi);

}  // namespace picdyn
