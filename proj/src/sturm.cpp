#include "picdyn/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace picdyn {

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    RatPoly d = p.derivative();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2) {
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain[chain.size() - 1];
        RatPoly r = divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
    int v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

std::vector<RatPoly> pair_chain(const RatPoly& f0, const RatPoly& f1) {
    std::vector<RatPoly> chain;
    chain.push_back(f0);
    if (!f1.is_zero()) chain.push_back(f1);
    while (chain.size() >= 2) {
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain[chain.size() - 1];
        RatPoly r = divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

}  // namespace

int sign_variations_at(const std::vector<RatPoly>& chain, const Rat& x) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& f : chain) s.push_back(sign(f.evaluate(x)));
    return variations(s);
}

int sign_variations_at_pos_inf(const std::vector<RatPoly>& chain) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& f : chain) s.push_back(f.is_zero() ? 0 : sign(f.leading()));
    return variations(s);
}

int sign_variations_at_neg_inf(const std::vector<RatPoly>& chain) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& f : chain) {
        if (f.is_zero()) {
            s.push_back(0);
            continue;
        }
        int lead = sign(f.leading());
        s.push_back(f.degree() % 2 == 0 ? lead : -lead);
    }
    return variations(s);
}

long count_real_roots_in(const IntPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
    IntPoly s = squarefree_part(p);
    RatPoly sq = to_rat(s);
    if (sq.evaluate(a) == 0 || sq.evaluate(b) == 0)
        throw std::invalid_argument("count_real_roots_in: endpoint is a root");
    auto chain = sturm_chain(sq);
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

long count_real_roots(const IntPoly& p) {
    IntPoly s = squarefree_part(p);
    auto chain = sturm_chain(to_rat(s));
    return sign_variations_at_neg_inf(chain) - sign_variations_at_pos_inf(chain);
}

long count_real_roots_above(const IntPoly& p, const Rat& a) {
    IntPoly s = squarefree_part(p);
    RatPoly sq = to_rat(s);
    if (sq.evaluate(a) == 0) throw std::invalid_argument("count_real_roots_above: endpoint is a root");
    auto chain = sturm_chain(sq);
    return sign_variations_at(chain, a) - sign_variations_at_pos_inf(chain);
}

Rat root_bound(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1) return Rat(1);
    Rat m(0);
    Int lead = abs(p.leading());
    for (long i = 0; i < p.degree(); ++i) {
        Rat c(abs(p.coeff(static_cast<std::size_t>(i))), lead);
        c.canonicalize();
        if (c > m) m = c;
    }
    return m + 1;
}

namespace {

void isolate_rec(const IntPoly& p, const std::vector<RatPoly>& chain, const Rat& lo, const Rat& hi,
                 int vlo, int vhi, std::vector<RootInterval>& out) {
    int count = vlo - vhi;
    if (count == 0) return;
    if (count == 1) {
        out.push_back(RootInterval{lo, hi});
        return;
    }
    Rat mid = (lo + hi) / 2;
    if (to_rat(p).evaluate(mid) == 0) {
        out.push_back(RootInterval{mid, mid});
        // Shrink a symmetric gap around mid until it contains no other root,
        // then recurse on the two outer pieces.
        Rat step = (hi - lo) / 4;
        RatPoly pq = to_rat(p);
        while (true) {
            Rat left = mid - step, right = mid + step;
            if (pq.evaluate(left) != 0 && pq.evaluate(right) != 0 &&
                sign_variations_at(chain, left) - sign_variations_at(chain, right) == 1) {
                isolate_rec(p, chain, lo, left, vlo, sign_variations_at(chain, left), out);
                isolate_rec(p, chain, right, hi, sign_variations_at(chain, right), vhi, out);
                return;
            }
            step /= 2;
        }
    }
    int vm = sign_variations_at(chain, mid);
    isolate_rec(p, chain, lo, mid, vlo, vm, out);
    isolate_rec(p, chain, mid, hi, vm, vhi, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const IntPoly& squarefree) {
    std::vector<RootInterval> out;
    if (squarefree.is_zero() || squarefree.degree() < 1) return out;
    auto chain = sturm_chain(to_rat(squarefree));
    Rat b = root_bound(squarefree);
    // The bound is strict, so +-b are never roots.
    isolate_rec(squarefree, chain, -b, b, sign_variations_at(chain, -b), sign_variations_at(chain, b),
                out);
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

RootInterval refine_root(const IntPoly& p, RootInterval iv, const Rat& width) {
    if (iv.is_exact()) return iv;
    RatPoly pq = to_rat(p);
    int slo = sign(pq.evaluate(iv.lo));
    int shi = sign(pq.evaluate(iv.hi));
    if (slo == 0 || shi == 0) throw std::invalid_argument("refine_root: endpoint is a root");
    if (slo == shi) throw std::invalid_argument("refine_root: no sign change over interval");
    while (iv.width() >= width) {
        Rat mid = iv.midpoint();
        int sm = sign(pq.evaluate(mid));
        if (sm == 0) return RootInterval{mid, mid};
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

long cauchy_index(const RatPoly& numerator_a, const RatPoly& denominator_b) {
    if (denominator_b.is_zero()) return 0;
    auto chain = pair_chain(denominator_b, numerator_a);
    return sign_variations_at_neg_inf(chain) - sign_variations_at_pos_inf(chain);
}

namespace {

// W(s) = (1 - i s)^n F((1+is)/(1-is)) as a pair of real polynomials (A, B).
std::pair<RatPoly, RatPoly> circle_parametrization(const IntPoly& f) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    // Gaussian polynomials as (real, imag) pairs over Q[s].
    RatPoly plus_re(Rat(1)), plus_im;   // 1 + i s
    RatPoly minus_re(Rat(1)), minus_im; // 1 - i s
    plus_im = RatPoly::monomial(1, Rat(1));
    minus_im = RatPoly::monomial(1, Rat(-1));

    // Powers of (1+is) and (1-is).
    std::vector<std::pair<RatPoly, RatPoly>> up(n + 1), down(n + 1);
    up[0] = {RatPoly::one(), RatPoly()};
    down[0] = {RatPoly::one(), RatPoly()};
    for (std::size_t k = 1; k <= n; ++k) {
        up[k] = {up[k - 1].first * plus_re - up[k - 1].second * plus_im,
                 up[k - 1].first * plus_im + up[k - 1].second * plus_re};
        down[k] = {down[k - 1].first * minus_re - down[k - 1].second * minus_im,
                   down[k - 1].first * minus_im + down[k - 1].second * minus_re};
    }
    RatPoly a, b;
    for (std::size_t k = 0; k <= n; ++k) {
        Rat c(f.coeff(k));
        if (c == 0) continue;
        // c * (1+is)^k (1-is)^(n-k)
        a = a + (up[k].first * down[n - k].first - up[k].second * down[n - k].second) * c;
        b = b + (up[k].first * down[n - k].second + up[k].second * down[n - k].first) * c;
    }
    return {a, b};
}

// Roots strictly inside the unit circle, for f squarefree with no roots on the
// circle and f(-1) != 0. Winding-number count via an exact Cauchy index:
//   2*pi*N = delta_arg(A + iB) + n*pi, and
//   delta_arg(A + iB) = [atan(B/A)] boundary terms - pi * Ind(B/A).
long roots_inside_no_circle(const IntPoly& f) {
    if (f.degree() <= 0) return 0;
    auto [a, b] = circle_parametrization(f);
    long n = f.degree();
    long boundary_half_turns = 0;  // in units of pi/2
    if (!b.is_zero() && b.degree() > a.degree()) {
        int at_pos = sign(b.leading()) * (a.is_zero() ? 1 : sign(a.leading()));
        if (a.is_zero()) throw std::logic_error("unit disk winding: vanishing real part");
        int at_neg = ((b.degree() - a.degree()) % 2 == 0) ? at_pos : -at_pos;
        boundary_half_turns = at_pos - at_neg;
    }
    long ind = b.is_zero() ? 0 : cauchy_index(b, a);  // Ind of B/A, poles at zeros of A
    long twice_delta_over_pi = boundary_half_turns - 2 * ind;
    if ((twice_delta_over_pi + 2 * n) % 4 != 0) throw std::logic_error("unit disk winding parity failure");
    return (twice_delta_over_pi / 2 + n) / 2;
}

}  // namespace

DiskCounts unit_disk_counts(const IntPoly& squarefree) {
    IntPoly s = squarefree;
    if (s.is_zero()) throw std::invalid_argument("unit_disk_counts of zero polynomial");
    DiskCounts out;
    // Roots at the origin.
    std::size_t k = 0;
    while (k < s.coeffs().size() && s.coeffs()[k] == 0) ++k;
    if (k > 0) {
        out.inside += static_cast<long>(k);
        std::vector<Int> rest(s.coeffs().begin() + static_cast<long>(k), s.coeffs().end());
        s = IntPoly(std::move(rest));
    }
    if (s.degree() == 0) return out;

    // Every root on the circle is shared with the reversed polynomial, as is
    // every reciprocal pair. Split those off first.
    IntPoly g = gcd(s, s.reversed());
    IntPoly h = exact_div(s, g);

    Int g1 = g.evaluate(Int(1)), gm1 = g.evaluate(Int(-1));
    if (g1 == 0) {
        out.on += 1;
        g = exact_div(g, IntPoly(std::vector<Int>{Int(-1), Int(1)}));
    }
    if (gm1 == 0) {
        out.on += 1;
        g = exact_div(g, IntPoly(std::vector<Int>{Int(1), Int(1)}));
    }
    if (g.degree() > 0) {
        // g is now self-inversive of even degree with roots in (z, 1/z) pairs;
        // pairs on the circle correspond to real trace values in (-2, 2).
        IntPoly gp = primitive_part(g);
        if (!is_palindromic(gp)) {
            // Sign-normalize: an antipalindromic self-inversive factor would
            // have 1 as a root, which was already removed.
            throw std::logic_error("self-inversive part is not palindromic");
        }
        IntPoly q = trace_polynomial(gp);
        long pairs_on = count_real_roots_in(q, Rat(-2), Rat(2));
        long pairs = gp.degree() / 2;
        out.on += 2 * pairs_on;
        out.inside += pairs - pairs_on;
        out.outside += pairs - pairs_on;
    }
    if (h.degree() > 0) {
        long in_h = roots_inside_no_circle(h);
        out.inside += in_h;
        out.outside += h.degree() - in_h;
    }
    return out;
}

}  // namespace picdyn
