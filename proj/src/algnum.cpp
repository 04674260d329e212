#include "picdyn/algnum.hpp"

#include "picdyn/factor.hpp"

#include <sstream>
#include <stdexcept>

namespace picdyn {

AlgebraicNumber::AlgebraicNumber(IntPoly min_poly, RootInterval interval)
    : min_poly_(std::move(min_poly)), interval_(interval) {
    if (min_poly_.degree() < 1) throw std::invalid_argument("algebraic number needs nonconstant polynomial");
    if (!interval_.is_exact()) {
        long roots = count_real_roots_in(min_poly_, interval_.lo, interval_.hi);
        if (roots != 1) throw std::invalid_argument("interval does not isolate exactly one root");
    }
}

void AlgebraicNumber::refine(const Rat& width) {
    interval_ = refine_root(min_poly_, interval_, width);
}

int AlgebraicNumber::compare(const Rat& q) const {
    if (interval_.is_exact()) return interval_.lo < q ? -1 : (interval_.lo == q ? 0 : 1);
    RatPoly p = to_rat(min_poly_);
    if (p.evaluate(q) == 0 && interval_.lo < q && q < interval_.hi) return 0;
    while (interval_.lo < q && q < interval_.hi) {
        interval_ = refine_root(min_poly_, interval_, interval_.width() / 2);
        if (interval_.is_exact()) return interval_.lo < q ? -1 : (interval_.lo == q ? 0 : 1);
    }
    return interval_.hi <= q ? -1 : 1;
}

int AlgebraicNumber::compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.min_poly() == b.min_poly()) {
        // Same polynomial: distinct roots have disjoint isolating intervals by
        // construction, identical intervals mean the same root.
        if (!a.interval_.is_exact() && !b.interval_.is_exact() && a.interval_.lo == b.interval_.lo &&
            a.interval_.hi == b.interval_.hi)
            return 0;
        if (a.interval_.is_exact() && b.interval_.is_exact())
            return a.interval_.lo < b.interval_.lo ? -1 : (a.interval_.lo == b.interval_.lo ? 0 : 1);
    }
    while (true) {
        const RootInterval &ia = a.interval_, &ib = b.interval_;
        if (ia.is_exact() && ib.is_exact()) return ia.lo < ib.lo ? -1 : (ia.lo == ib.lo ? 0 : 1);
        if (ia.is_exact()) {
            int c = b.compare(ia.lo);
            if (c != 0) return -c;
            return 0;
        }
        if (ib.is_exact()) return a.compare(ib.lo);
        if (ia.hi <= ib.lo) return -1;
        if (ib.hi <= ia.lo) return 1;
        a.interval_ = picdyn::refine_root(a.min_poly_, ia, ia.width() / 2);
        b.interval_ = picdyn::refine_root(b.min_poly_, ib, ib.width() / 2);
    }
}

std::string AlgebraicNumber::decimal(unsigned digits) const {
    Rat width(1);
    for (unsigned i = 0; i < digits + 1; ++i) width /= 10;
    RootInterval iv = interval_.is_exact() ? interval_ : picdyn::refine_root(min_poly_, interval_, width);
    Rat mid = iv.midpoint();
    // Fixed-point decimal expansion of mid.
    Int num = numerator(mid), den = denominator(mid);
    bool neg = num < 0;
    if (neg) num = -num;
    Int ip(num / den), rem(num % den);
    std::ostringstream os;
    if (neg) os << "-";
    os << ip.get_str() << ".";
    for (unsigned i = 0; i < digits; ++i) {
        rem *= 10;
        Int digit(rem / den);
        os << digit.get_str();
        rem %= den;
    }
    return os.str();
}

NumberField::NumberField(IntPoly modulus, RootInterval root)
    : modulus_(std::move(modulus)), root_(root) {
    if (modulus_.degree() < 1 || modulus_.leading() != 1)
        throw std::invalid_argument("number field modulus must be monic of positive degree");
    if (!root_.is_exact()) {
        long roots = count_real_roots_in(modulus_, root_.lo, root_.hi);
        if (roots != 1) throw std::invalid_argument("root interval does not isolate exactly one root");
    }
}

NumberField::Elem NumberField::generator() const {
    if (degree() == 1) return {reduce(RatPoly::monomial(1))};
    return {RatPoly::monomial(1)};
}

RatPoly NumberField::reduce(const RatPoly& p) const {
    if (p.degree() < modulus_.degree()) return p;
    return divmod(p, to_rat(modulus_)).second;
}

NumberField::Elem NumberField::inv(const Elem& a) const {
    if (a.rep.is_zero()) throw std::domain_error("number field division by zero");
    // Extended Euclid in Q[t] against the modulus.
    RatPoly r0 = to_rat(modulus_), r1 = a.rep;
    RatPoly t0, t1 = RatPoly::one();
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0)
        throw std::logic_error("number field modulus is not irreducible");
    return {reduce(t0 * (1 / r0.leading()))};
}

int NumberField::sign_of(const Elem& a) const {
    if (a.rep.is_zero()) return 0;
    if (a.rep.degree() == 0) return sign(a.rep.coeff(0));
    while (true) {
        if (root_.is_exact()) return sign(a.rep.evaluate(root_.lo));
        auto [lo, hi] = interval_evaluate(a.rep, root_.lo, root_.hi);
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        root_ = picdyn::refine_root(modulus_, root_, root_.width() / 2);
    }
}

std::pair<Rat, Rat> NumberField::enclosure(const Elem& a, const Rat& width) const {
    while (true) {
        Rat x = root_.is_exact() ? root_.lo : root_.midpoint();
        auto [lo, hi] = root_.is_exact()
                            ? std::pair<Rat, Rat>{a.rep.evaluate(x), a.rep.evaluate(x)}
                            : interval_evaluate(a.rep, root_.lo, root_.hi);
        if (hi - lo <= width) return {lo, hi};
        root_ = picdyn::refine_root(modulus_, root_, root_.width() / 2);
    }
}

void NumberField::refine_root(const Rat& width) const {
    if (!root_.is_exact()) root_ = picdyn::refine_root(modulus_, root_, width);
}

std::pair<Rat, Rat> interval_evaluate(const RatPoly& p, const Rat& lo, const Rat& hi) {
    // Interval Horner.
    Rat alo(0), ahi(0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        // [alo, ahi] * [lo, hi]
        Rat c1 = alo * lo, c2 = alo * hi, c3 = ahi * lo, c4 = ahi * hi;
        Rat mlo = std::min(std::min(c1, c2), std::min(c3, c4));
        Rat mhi = std::max(std::max(c1, c2), std::max(c3, c4));
        alo = mlo + p.coeffs()[i];
        ahi = mhi + p.coeffs()[i];
    }
    return {alo, ahi};
}

}  // namespace picdyn
