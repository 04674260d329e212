#pragma once

#include "picdyn/numbers.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace picdyn {

// Univariate polynomial, coefficients stored constant-term first.
template <typename T>
class Poly {
public:
    Poly() = default;
    explicit Poly(T c0) : c_{std::move(c0)} { normalize(); }
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(T(1)); }
    // t^k
    static Poly monomial(std::size_t k, T coeff = T(1)) {
        std::vector<T> c(k + 1, T(0));
        c[k] = std::move(coeff);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const T& leading() const { return c_.back(); }
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == T(0)) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return Poly(std::move(r));
    }

    Poly operator*(const T& s) const {
        Poly r = *this;
        for (auto& x : r.c_) x = x * s;
        r.normalize();
        return r;
    }

    template <typename S>
    S evaluate(const S& x) const {
        S acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + S(c_[i]);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(r));
    }

    // Reversal t^deg * p(1/t).
    Poly reversed() const {
        std::vector<T> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }

    // p(s * t) for scalar s.
    Poly scaled_arg(const T& s) const {
        std::vector<T> r = c_;
        T f(1);
        for (std::size_t i = 1; i < r.size(); ++i) {
            f = f * s;
            r[i] = r[i] * f;
        }
        return Poly(std::move(r));
    }

    Poly pow(unsigned e) const {
        Poly r = one();
        Poly b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            b = b * b;
            e >>= 1u;
        }
        return r;
    }

    std::string to_string(const std::string& var = "t") const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rat(const IntPoly& p) {
    std::vector<Rat> c(p.coeffs().begin(), p.coeffs().end());
    return RatPoly(std::move(c));
}

// Requires every coefficient to be integral.
IntPoly to_int_checked(const RatPoly& p);

// Quotient and remainder over a field.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// Exact quotient over Z; throws std::domain_error if b does not divide a.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

bool divides(const IntPoly& b, const IntPoly& a);

Int content(const IntPoly& p);

// Primitive part with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

// Monic gcd over Q, returned as the primitive integer polynomial.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

RatPoly gcd(const RatPoly& a, const RatPoly& b);

// p / gcd(p, p'), primitive.
IntPoly squarefree_part(const IntPoly& p);

// Squarefree decomposition: list of (factor, multiplicity) with factors
// pairwise coprime, primitive, product of factor^multiplicity = p up to sign
// and content.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

unsigned long euler_phi(unsigned long m);

// m-th cyclotomic polynomial.
IntPoly cyclotomic(unsigned long m);

// True if p equals the m-th cyclotomic polynomial for some m; returns the
// order if so.
std::optional<unsigned long> cyclotomic_order(const IntPoly& p);

bool is_palindromic(const IntPoly& p);
bool is_antipalindromic(const IntPoly& p);

// For palindromic p of even degree 2k, the unique q of degree k with
// p(t) = t^k q(t + 1/t).
IntPoly trace_polynomial(const IntPoly& p);

}  // namespace picdyn
