#include "picdyn/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace picdyn {

Rref rref(RatMatrix m) {
    Rref out;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        Rat inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.mat = std::move(m);
    return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank(); }

std::size_t rank(const IntMatrix& m) { return rank(m.cast<Rat>()); }

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
    Rref r = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) v[r.pivot_cols[i]] = -r.mat(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& m, const std::vector<Rat>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Rref r = rref(std::move(aug));
    // Inconsistent iff the last column is a pivot.
    for (auto c : r.pivot_cols)
        if (c == m.cols()) return std::nullopt;
    std::vector<Rat> x(m.cols(), Rat(0));
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) x[r.pivot_cols[i]] = r.mat(i, m.cols());
    return x;
}

std::optional<RatMatrix> solve(const RatMatrix& m, const RatMatrix& b) {
    RatMatrix x(m.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto xi = solve(m, b.col(j));
        if (!xi) return std::nullopt;
        x.set_col(j, *xi);
    }
    return x;
}

Rat det(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: not square");
    RatMatrix a = m;
    const std::size_t n = a.rows();
    Rat d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            d = -d;
        }
        d *= a(c, c);
        Rat inv = 1 / a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

Int det(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: not square");
    IntMatrix a = m;
    const std::size_t n = a.rows();
    if (n == 0) return Int(1);
    Int prev(1);
    int sgn = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0) ++piv;
        if (piv == n) return Int(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            sgn = -sgn;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                a(i, j) = exact_div(a(c, c) * a(i, j) - a(i, c) * a(c, j), prev);
            a(i, c) = 0;
        }
        prev = a(c, c);
    }
    return sgn > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: not square");
    auto x = solve(m, RatMatrix::identity(m.rows()));
    if (!x) throw std::domain_error("inverse: singular matrix");
    return *x;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    Int d = det(m);
    if (d != 1 && d != -1) throw std::domain_error("unimodular_inverse: determinant is not a unit");
    RatMatrix inv = inverse(m.cast<Rat>());
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer(inv(i, j))) throw std::logic_error("unimodular inverse not integral");
            out(i, j) = numerator(inv(i, j));
        }
    return out;
}

Signature signature(const RatMatrix& sym) {
    if (!sym.is_square()) throw std::invalid_argument("signature: not square");
    const std::size_t n = sym.rows();
    RatMatrix a = sym;
    Signature sig;
    std::vector<bool> done(n, false);
    // Symmetric reduction: repeatedly pick a nonzero diagonal pivot and clear
    // its row/column. A nonzero off-diagonal entry with zero diagonal is
    // handled by the hyperbolic-pair rule (contributes one + and one -).
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < n; ++i) active.push_back(i);
    while (!active.empty()) {
        std::size_t piv = active.size();
        for (std::size_t k = 0; k < active.size(); ++k)
            if (a(active[k], active[k]) != 0) {
                piv = k;
                break;
            }
        if (piv == active.size()) {
            // All diagonal entries vanish; look for an off-diagonal pairing.
            std::size_t pi = active.size(), pj = active.size();
            for (std::size_t k = 0; k < active.size() && pi == active.size(); ++k)
                for (std::size_t l = k + 1; l < active.size(); ++l)
                    if (a(active[k], active[l]) != 0) {
                        pi = k;
                        pj = l;
                        break;
                    }
            if (pi == active.size()) {
                sig.zero += active.size();
                break;
            }
            // Replace e_i by e_i + e_j to create a nonzero diagonal entry.
            std::size_t i = active[pi], j = active[pj];
            for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
            for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
            continue;
        }
        std::size_t p = active[piv];
        Rat d = a(p, p);
        if (d > 0)
            ++sig.positive;
        else
            ++sig.negative;
        active.erase(active.begin() + piv);
        // Symmetric congruence: row operations first (pivot row stays intact),
        // then clear the pivot row and column.
        for (auto i : active) {
            if (a(i, p) == 0) continue;
            Rat f = a(i, p) / d;
            for (auto j : active) a(i, j) -= f * a(p, j);
        }
        for (auto i : active) {
            a(i, p) = 0;
            a(p, i) = 0;
        }
    }
    return sig;
}

Signature signature(const IntMatrix& sym) { return signature(sym.cast<Rat>()); }

IntMatrix integer_kernel(const RatMatrix& m) {
    auto basis = kernel_basis(m);
    const std::size_t n = m.cols();
    IntMatrix out(n, basis.size());
    // Each rref kernel vector has a single free coordinate equal to 1; clearing
    // denominators and dividing by content gives a primitive vector. The full
    // set is saturated because the free coordinates are distinct: any integral
    // kernel vector has integral free coordinates, hence integral coordinates
    // in this basis.
    for (std::size_t k = 0; k < basis.size(); ++k) {
        auto v = primitive_integer_vector(basis[k]);
        for (std::size_t i = 0; i < n; ++i) out(i, k) = v[i];
    }
    return out;
}

IntMatrix integer_kernel(const IntMatrix& m) { return integer_kernel(m.cast<Rat>()); }

std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v) {
    Int scale(1);
    for (const auto& x : v) scale = lcm(scale, denominator(x));
    std::vector<Int> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = numerator(v[i] * Rat(scale));
    Int c = content(w);
    if (c == 0) return w;
    for (auto& x : w) x = exact_div(x, c);
    return w;
}

Int content(const std::vector<Int>& v) {
    Int c(0);
    for (const auto& x : v) c = gcd(c, x);
    return c;
}

IntMatrix complete_to_unimodular(const std::vector<Int>& v) {
    const std::size_t n = v.size();
    if (content(v) != 1) throw std::invalid_argument("complete_to_unimodular: vector not primitive");
    // Column HNF-style construction: transform v to e_1 by unimodular row
    // operations U, then the first column of U^{-1} is v.
    std::vector<Int> w = v;
    IntMatrix u = IntMatrix::identity(n);  // tracks row operations: w = U v
    // Euclidean reduction of entries onto position 0.
    while (true) {
        std::size_t nz = n;
        for (std::size_t i = 1; i < n; ++i)
            if (w[i] != 0) {
                nz = i;
                break;
            }
        if (nz == n) break;
        if (w[0] == 0) {
            std::swap(w[0], w[nz]);
            for (std::size_t j = 0; j < n; ++j) std::swap(u(0, j), u(nz, j));
            continue;
        }
        // Reduce w[nz] modulo w[0] and swap roles.
        Int q = floor_div(w[nz], w[0]);
        w[nz] -= q * w[0];
        for (std::size_t j = 0; j < n; ++j) u(nz, j) -= q * u(0, j);
        if (w[nz] != 0) {
            std::swap(w[0], w[nz]);
            for (std::size_t j = 0; j < n; ++j) std::swap(u(0, j), u(nz, j));
        }
    }
    if (w[0] == -1) {
        w[0] = 1;
        for (std::size_t j = 0; j < n; ++j) u(0, j) = -u(0, j);
    }
    if (w[0] != 1) throw std::logic_error("complete_to_unimodular: reduction failed");
    return unimodular_inverse(u);
}

}  // namespace picdyn
