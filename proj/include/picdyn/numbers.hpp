#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace picdyn {

// Exact arbitrary-precision integers and rationals. All lattice and polynomial
// arithmetic in this library is exact; no floating point is used anywhere in
// the computational core.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    }
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Rat abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

// Exact quotient; throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("exact_div by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("exact_div: not divisible");
    return q;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline int sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sign(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int numerator(const Rat& a) { return Int(a.get_num()); }
inline Int denominator(const Rat& a) { return Int(a.get_den()); }

inline Int floor(const Rat& a) { return floor_div(numerator(a), denominator(a)); }
inline Int ceil(const Rat& a) { return ceil_div(numerator(a), denominator(a)); }

inline bool is_integer(const Rat& a) { return denominator(a) == 1; }

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(int_from_string(s));
    Rat r(int_from_string(s.substr(0, slash)), int_from_string(s.substr(slash + 1)));
    r.canonicalize();
    return r;
}

}  // namespace picdyn
