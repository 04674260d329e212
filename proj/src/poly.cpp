#include "picdyn/poly.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace picdyn {

template <typename T>
std::string Poly<T>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == T(0)) continue;
        T a = c_[i];
        if (first) {
            if (a < T(0)) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < T(0) ? " - " : " + ");
            if (a < T(0)) a = -a;
        }
        bool unit = (a == T(1));
        if (i == 0 || !unit) os << a;
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

template std::string Poly<Int>::to_string(const std::string&) const;
template std::string Poly<Rat>::to_string(const std::string&) const;

IntPoly to_int_checked(const RatPoly& p) {
    std::vector<Int> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!is_integer(p.coeffs()[i])) throw std::domain_error("polynomial has non-integer coefficient");
        c[i] = numerator(p.coeffs()[i]);
    }
    return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    RatPoly r = a;
    std::vector<Rat> q;
    if (a.degree() >= b.degree()) q.assign(a.degree() - b.degree() + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rat f = r.leading() / b.leading();
        std::size_t shift = r.degree() - b.degree();
        q[shift] = f;
        r = r - RatPoly::monomial(shift, f) * b;
    }
    return {RatPoly(std::move(q)), r};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divmod(to_rat(a), to_rat(b));
    if (!r.is_zero()) throw std::domain_error("polynomial exact_div: not divisible");
    return to_int_checked(q);
}

bool divides(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < b.degree()) return false;
    auto [q, r] = divmod(to_rat(a), to_rat(b));
    if (!r.is_zero()) return false;
    for (const auto& x : q.coeffs())
        if (!is_integer(x)) return false;
    return true;
}

Int content(const IntPoly& p) {
    Int c(0);
    for (const auto& x : p.coeffs()) c = gcd(c, x);
    return c;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int c = content(p);
    if (sign(p.leading()) < 0) c = -c;
    std::vector<Int> r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = exact_div(p.coeffs()[i], c);
    return IntPoly(std::move(r));
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x * (1 / x.leading());
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    RatPoly g = gcd(to_rat(a), to_rat(b));
    if (g.is_zero()) return IntPoly();
    // Clear denominators, then take the primitive part.
    Int scale(1);
    for (const auto& c : g.coeffs()) scale = lcm(scale, denominator(c));
    std::vector<Int> ci(g.coeffs().size());
    for (std::size_t i = 0; i < ci.size(); ++i) ci[i] = numerator(g.coeffs()[i] * Rat(scale));
    return primitive_part(IntPoly(std::move(ci)));
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero() || p.degree() == 0) return p;
    IntPoly g = gcd(p, p.derivative());
    return primitive_part(exact_div(primitive_part(p), g));
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    std::vector<std::pair<IntPoly, int>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    // Yun's algorithm.
    IntPoly f = primitive_part(p);
    IntPoly g = gcd(f, f.derivative());
    IntPoly w = exact_div(f, g);
    IntPoly y = exact_div(f.derivative(), g);
    IntPoly z = y - w.derivative();
    int k = 1;
    while (!(w.degree() == 0)) {
        IntPoly a = gcd(w, z);
        if (a.degree() > 0) out.emplace_back(a, k);
        w = exact_div(w, a);
        y = exact_div(z, a);
        z = y - w.derivative();
        ++k;
    }
    return out;
}

unsigned long euler_phi(unsigned long m) {
    unsigned long result = m;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

IntPoly cyclotomic(unsigned long m) {
    static std::map<unsigned long, IntPoly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // x^m - 1 divided by the cyclotomics of all proper divisors.
    std::vector<Int> xm(m + 1, Int(0));
    xm[0] = -1;
    xm[m] = 1;
    IntPoly phi(std::move(xm));
    for (unsigned long d = 1; d < m; ++d)
        if (m % d == 0) phi = exact_div(phi, cyclotomic(d));
    cache[m] = phi;
    return phi;
}

std::optional<unsigned long> cyclotomic_order(const IntPoly& p) {
    if (p.is_zero() || p.leading() != 1) return std::nullopt;
    unsigned long d = static_cast<unsigned long>(p.degree());
    if (d == 0) return std::nullopt;
    // phi(m) = d forces m <= some bound; phi(m) >= sqrt(m/2) gives m <= 2 d^2 + 1.
    for (unsigned long m = 1; m <= 2 * d * d + 1; ++m)
        if (euler_phi(m) == d && cyclotomic(m) == p) return m;
    return std::nullopt;
}

bool is_palindromic(const IntPoly& p) { return !p.is_zero() && p == p.reversed(); }

bool is_antipalindromic(const IntPoly& p) { return !p.is_zero() && p == -(p.reversed()); }

IntPoly trace_polynomial(const IntPoly& p) {
    if (!is_palindromic(p) || p.degree() % 2 != 0)
        throw std::invalid_argument("trace_polynomial needs a palindromic polynomial of even degree");
    const std::size_t k = static_cast<std::size_t>(p.degree()) / 2;
    // Power basis t^j + t^-j expressed in u = t + 1/t via the Chebyshev-style
    // recurrence b_{j+1} = u*b_j - b_{j-1}.
    std::vector<IntPoly> b(k + 1);
    b[0] = IntPoly(Int(2));
    if (k >= 1) b[1] = IntPoly::monomial(1);
    for (std::size_t j = 2; j <= k; ++j) b[j] = IntPoly::monomial(1) * b[j - 1] - b[j - 2];
    IntPoly q = IntPoly(p.coeff(k));
    for (std::size_t j = 1; j <= k; ++j) q = q + b[j] * p.coeff(k + j);
    return q;
}

}  // namespace picdyn
