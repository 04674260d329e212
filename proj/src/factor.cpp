#include "picdyn/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

// Zassenhaus factorization: factor modulo a small prime with Berlekamp's
// algorithm, Hensel-lift the modular factors past the Mignotte bound, then
// recombine subsets by trial division. Adequate for the desk-scale degrees
// this library works with.

namespace picdyn {

namespace {

using ModPoly = std::vector<Int>;  // constant first, coefficients reduced mod m

Int mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

Int symmetric_mod(const Int& a, const Int& m) {
    Int r = mod(a, m);
    if (2 * r > m) r -= m;
    return r;
}

void trim(ModPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly reduce(const IntPoly& p, const Int& m) {
    ModPoly r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(p.coeffs()[i], m);
    trim(r);
    return r;
}

IntPoly lift_symmetric(const ModPoly& p, const Int& m) {
    std::vector<Int> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = symmetric_mod(p[i], m);
    return IntPoly(std::move(c));
}

ModPoly mul(const ModPoly& a, const ModPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + a[i] * b[j], m);
    }
    trim(r);
    return r;
}

ModPoly add(const ModPoly& a, const ModPoly& b, const Int& m) {
    ModPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] + b[i], m);
    trim(r);
    return r;
}

ModPoly sub(const ModPoly& a, const ModPoly& b, const Int& m) {
    ModPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] - b[i], m);
    trim(r);
    return r;
}

Int inv_mod(const Int& a, const Int& m) {
    Int g, s;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), nullptr, a.get_mpz_t(), m.get_mpz_t());
    if (g != 1) throw std::domain_error("inv_mod: not invertible");
    return mod(s, m);
}

// Division with remainder; the divisor's leading coefficient must be a unit.
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b, const Int& m) {
    if (b.empty()) throw std::domain_error("mod poly division by zero");
    ModPoly r = a, q;
    Int binv = inv_mod(b.back(), m);
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Int(0));
    while (r.size() >= b.size()) {
        Int f = mod(r.back() * binv, m);
        std::size_t shift = r.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = mod(r[shift + i] - f * b[i], m);
        trim(r);
        if (!r.empty() && r.size() > shift + b.size() - 1) throw std::logic_error("divmod: no progress");
        if (r.size() == a.size() && !a.empty()) break;
        if (r.empty()) break;
        if (r.size() < b.size()) break;
    }
    return {q, r};
}

ModPoly monic(const ModPoly& a, const Int& m) {
    if (a.empty()) return a;
    Int inv = inv_mod(a.back(), m);
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] * inv, m);
    return r;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, const Int& p) {
    while (!b.empty()) {
        auto r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : monic(a, p);
}

// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
std::tuple<ModPoly, ModPoly, ModPoly> xgcd_mod(const ModPoly& a, const ModPoly& b, const Int& p) {
    ModPoly r0 = a, r1 = b;
    ModPoly s0{Int(1)}, s1{};
    ModPoly t0{}, t1{Int(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1, p);
        ModPoly s2 = sub(s0, mul(q, s1, p), p);
        ModPoly t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) throw std::domain_error("xgcd_mod of zero polynomials");
    Int inv = inv_mod(r0.back(), p);
    auto scale = [&](ModPoly v) {
        for (auto& c : v) c = mod(c * inv, p);
        trim(v);
        return v;
    };
    return {scale(r0), scale(s0), scale(t0)};
}

ModPoly powmod(const ModPoly& base, Int e, const ModPoly& f, const Int& p) {
    ModPoly result{Int(1)};
    ModPoly b = divmod(base, f, p).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = divmod(mul(result, b, p), f, p).second;
        b = divmod(mul(b, b, p), f, p).second;
        e /= 2;
    }
    return result;
}

ModPoly derivative_mod(const ModPoly& a, const Int& m) {
    if (a.size() <= 1) return {};
    ModPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mod(a[i] * Int(static_cast<long>(i)), m);
    trim(r);
    return r;
}

// Berlekamp factorization of a monic squarefree polynomial mod a small prime.
std::vector<ModPoly> berlekamp(const ModPoly& f, const Int& p) {
    const std::size_t n = f.size() - 1;
    if (n == 1) return {f};
    // Frobenius matrix: column i holds x^(i*p) mod f.
    std::vector<ModPoly> frob(n);
    ModPoly xp = powmod(ModPoly{Int(0), Int(1)}, p, f, p);
    frob[0] = ModPoly{Int(1)};
    for (std::size_t i = 1; i < n; ++i) frob[i] = divmod(mul(frob[i - 1], xp, p), f, p).second;

    // Null space of (Q - I) over F_p, rows indexed by power of x.
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < frob[c].size(); ++r) m[r][c] = frob[c][r];
        m[c][c] = mod(m[c][c] - 1, p);
    }
    std::vector<long> pivot_of_row(n, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < n; ++c) {
        std::size_t piv = rank;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[rank]);
        Int inv = inv_mod(m[rank][c], p);
        for (std::size_t j = 0; j < n; ++j) m[rank][j] = mod(m[rank][j] * inv, p);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            Int fmul = m[i][c];
            for (std::size_t j = 0; j < n; ++j) m[i][j] = mod(m[i][j] - fmul * m[rank][j], p);
        }
        pivot_of_row[rank] = static_cast<long>(c);
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < rank; ++r) is_pivot[static_cast<std::size_t>(pivot_of_row[r])] = true;
    std::vector<ModPoly> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        ModPoly v(n, Int(0));
        v[free] = 1;
        for (std::size_t r = 0; r < rank; ++r)
            v[static_cast<std::size_t>(pivot_of_row[r])] = mod(-m[r][free], p);
        trim(v);
        basis.push_back(std::move(v));
    }

    const std::size_t num_factors = basis.size();
    std::vector<ModPoly> factors{monic(f, p)};
    if (num_factors <= 1) return factors;
    for (const auto& v : basis) {
        if (factors.size() == num_factors) break;
        if (v.size() <= 1) continue;  // constant basis vector splits nothing
        for (Int c(0); c < p && factors.size() < num_factors; ++c) {
            ModPoly shifted = v;
            shifted[0] = mod(shifted[0] - c, p);
            trim(shifted);
            std::vector<ModPoly> next;
            for (const auto& g : factors) {
                if (g.size() - 1 <= 1) {
                    next.push_back(g);
                    continue;
                }
                ModPoly d = gcd_mod(g, shifted, p);
                if (d.size() <= 1 || d.size() == g.size()) {
                    next.push_back(g);
                } else {
                    next.push_back(d);
                    next.push_back(monic(divmod(g, d, p).first, p));
                }
            }
            factors = std::move(next);
        }
    }
    return factors;
}

// One quadratic Hensel step: from a factorization mod m to one mod m^2.
struct HenselPair {
    ModPoly g, h, s, t;  // f = g*h, s*g + t*h = 1
};

HenselPair hensel_step(const IntPoly& f, const HenselPair& in, const Int& m) {
    Int m2 = m * m;
    ModPoly fm = reduce(f, m2);
    ModPoly e = sub(fm, mul(in.g, in.h, m2), m2);
    auto [q, r] = divmod(mul(in.s, e, m2), in.h, m2);
    HenselPair out;
    out.g = add(in.g, add(mul(in.t, e, m2), mul(q, in.g, m2), m2), m2);
    out.h = add(in.h, r, m2);
    ModPoly b = sub(add(mul(in.s, out.g, m2), mul(in.t, out.h, m2), m2), ModPoly{Int(1)}, m2);
    auto [c, d] = divmod(mul(in.s, b, m2), out.h, m2);
    out.s = sub(in.s, d, m2);
    out.t = sub(sub(in.t, mul(in.t, b, m2), m2), mul(c, out.g, m2), m2);
    return out;
}

// Lift the modular factor list of monic f from mod p to mod target (a power
// of p), splitting recursively.
std::vector<ModPoly> hensel_lift_tree(const IntPoly& f, std::vector<ModPoly> factors, const Int& p,
                                      const Int& target) {
    if (factors.size() == 1) return {reduce(f, target)};
    std::size_t half = factors.size() / 2;
    ModPoly g{Int(1)}, h{Int(1)};
    for (std::size_t i = 0; i < half; ++i) g = mul(g, factors[i], p);
    for (std::size_t i = half; i < factors.size(); ++i) h = mul(h, factors[i], p);
    auto [one, s, t] = xgcd_mod(g, h, p);
    if (one.size() != 1) throw std::logic_error("hensel: modular factors not coprime");

    HenselPair pair{g, h, s, t};
    Int m = p;
    while (m < target) {
        pair = hensel_step(f, pair, m);
        m = m * m;
    }
    // Reduce to the exact target modulus before recursing.
    IntPoly gl = lift_symmetric(pair.g, m);
    IntPoly hl = lift_symmetric(pair.h, m);
    std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
    std::vector<ModPoly> right(factors.begin() + static_cast<long>(half), factors.end());
    auto lifted_left = hensel_lift_tree(gl, std::move(left), p, target);
    auto lifted_right = hensel_lift_tree(hl, std::move(right), p, target);
    for (auto& x : lifted_right) lifted_left.push_back(std::move(x));
    return lifted_left;
}

Int isqrt_ceil(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    if (r * r < a) r += 1;
    return r;
}

// Coefficient bound for any monic factor of monic f (Mignotte-style).
Int factor_coeff_bound(const IntPoly& f) {
    Int norm2(0);
    for (const auto& c : f.coeffs()) norm2 += c * c;
    Int b = isqrt_ceil(norm2) + 1;
    return (Int(1) << static_cast<unsigned long>(f.degree() + 1)) * b;
}

std::vector<IntPoly> factor_squarefree_monic(const IntPoly& f) {
    if (f.degree() <= 1) return {f};

    // Pick a prime keeping f squarefree mod p, preferring few modular factors.
    static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
    std::vector<ModPoly> best;
    Int best_p(0);
    int tried = 0;
    for (long pl : primes) {
        Int p(pl);
        ModPoly fp = reduce(f, p);
        if (fp.size() != f.coeffs().size()) continue;
        ModPoly d = derivative_mod(fp, p);
        if (gcd_mod(fp, d, p).size() != 1) continue;
        auto fac = berlekamp(fp, p);
        if (best.empty() || fac.size() < best.size()) {
            best = std::move(fac);
            best_p = p;
        }
        if (++tried >= 3 || best.size() == 1) break;
    }
    if (best.empty()) throw std::logic_error("factor: no usable prime found");
    if (best.size() == 1) return {f};

    Int bound = 2 * factor_coeff_bound(f);
    Int target(best_p);
    while (target <= bound) target *= best_p;
    auto lifted = hensel_lift_tree(f, best, best_p, target);

    // Subset recombination by trial division over Z.
    std::vector<IntPoly> out;
    IntPoly rest = f;
    std::vector<ModPoly> pool = std::move(lifted);
    std::size_t d = 1;
    while (2 * d <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(d);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            ModPoly prod{Int(1)};
            for (auto i : idx) prod = mul(prod, pool[i], target);
            IntPoly cand = lift_symmetric(prod, target);
            if (!cand.is_zero() && divides(cand, rest)) {
                out.push_back(primitive_part(cand));
                rest = exact_div(rest, cand);
                std::vector<ModPoly> next_pool;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        next_pool.push_back(pool[i]);
                pool = std::move(next_pool);
                found = true;
                break;
            }
            // next combination
            long pos = static_cast<long>(d) - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] ==
                                   pool.size() - d + static_cast<std::size_t>(pos))
                --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (std::size_t j = static_cast<std::size_t>(pos) + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++d;
    }
    if (rest.degree() > 0) out.push_back(rest);
    return out;
}

}  // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& f_in) {
    IntPoly f = primitive_part(f_in);
    if (f.is_zero()) throw std::invalid_argument("factor_squarefree of zero polynomial");
    if (f.degree() < 1) return {};
    std::vector<IntPoly> out;

    // Roots at the origin come off as monomial factors.
    std::size_t k = 0;
    while (k < f.coeffs().size() && f.coeffs()[k] == 0) ++k;
    if (k > 0) {
        if (k != 1) throw std::invalid_argument("factor_squarefree: input not squarefree");
        out.push_back(IntPoly::monomial(1));
        std::vector<Int> c(f.coeffs().begin() + 1, f.coeffs().end());
        f = IntPoly(std::move(c));
    }
    if (f.degree() >= 1) {
        if (f.leading() == 1) {
            auto fac = factor_squarefree_monic(f);
            out.insert(out.end(), fac.begin(), fac.end());
        } else {
            // Monicize by y = lc * x, factor, substitute back.
            const Int lc = f.leading();
            const auto n = static_cast<std::size_t>(f.degree());
            std::vector<Int> c(n + 1);
            // g(y) = lc^(n-1) f(y / lc): coefficient of y^i is a_i * lc^(n-1-i).
            for (std::size_t i = 0; i <= n; ++i)
                c[i] = f.coeff(i) * pow(lc, static_cast<unsigned long>(n - 1 - std::min(i, n - 1)));
            c[n] = 1;
            auto fac = factor_squarefree_monic(IntPoly(std::move(c)));
            for (const auto& g : fac) out.push_back(primitive_part(g.scaled_arg(lc)));
        }
    }
    std::sort(out.begin(), out.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return out;
}

std::vector<std::pair<IntPoly, int>> factor(const IntPoly& f) {
    std::vector<std::pair<IntPoly, int>> out;
    for (const auto& [part, mult] : squarefree_decomposition(f))
        for (const auto& irr : factor_squarefree(part)) out.emplace_back(irr, mult);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

bool is_irreducible(const IntPoly& f) {
    if (f.is_zero() || f.degree() < 1) return false;
    IntPoly p = primitive_part(f);
    if (squarefree_part(p) != p) return false;
    return factor_squarefree(p).size() == 1;
}

}  // namespace picdyn
