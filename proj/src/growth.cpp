#include "picdyn/growth.hpp"

#include "picdyn/factor.hpp"

#include <algorithm>
#include <numeric>

namespace picdyn {

std::string to_string(NumberType t) {
    switch (t) {
        case NumberType::ReciprocalQuadratic: return "ReciprocalQuadratic";
        case NumberType::Salem: return "Salem";
        case NumberType::Pisot: return "Pisot";
        case NumberType::RootOfUnity: return "RootOfUnity";
        case NumberType::Other: return "Other";
    }
    return "?";
}

std::string to_string(GrowthKind k) {
    switch (k) {
        case GrowthKind::Bounded: return "Bounded";
        case GrowthKind::Quadratic: return "Quadratic";
        case GrowthKind::Exponential: return "Exponential";
        case GrowthKind::NotRealizable: return "NotRealizable";
    }
    return "?";
}

CyclotomicSplit strip_cyclotomic_factors(const IntPoly& p) {
    CyclotomicSplit out;
    out.residual = primitive_part(p);
    if (out.residual.is_zero() || out.residual.degree() < 1) return out;
    const unsigned long n = static_cast<unsigned long>(out.residual.degree());
    // Any cyclotomic factor has degree phi(m) <= n, and phi(m) >= sqrt(m/2)
    // bounds the orders to test.
    for (unsigned long m = 1; m <= 2 * n * n + 1; ++m) {
        if (euler_phi(m) > n) continue;
        IntPoly phi = cyclotomic(m);
        int mult = 0;
        while (divides(phi, out.residual)) {
            out.residual = exact_div(out.residual, phi);
            ++mult;
        }
        if (mult > 0) out.orders.emplace_back(m, mult);
        if (out.residual.degree() < 1) break;
    }
    return out;
}

namespace {

// The irreducible factor of p owning the largest real root, together with its
// isolating interval. Empty if p has no real roots.
std::optional<AlgebraicNumber> largest_real_root(const IntPoly& p) {
    std::optional<AlgebraicNumber> best;
    for (const auto& [f, mult] : factor(p)) {
        (void)mult;
        auto roots = isolate_real_roots(f);
        if (roots.empty()) continue;
        AlgebraicNumber cand(f, roots.back());
        if (!best || AlgebraicNumber::compare(cand, *best) > 0) best = cand;
    }
    return best;
}

bool is_reciprocal_quadratic(const IntPoly& f) {
    return f.degree() == 2 && f.coeff(0) == 1 && f.coeff(2) == 1;
}

}  // namespace

NumberType classify_number(const IntPoly& monic) {
    if (monic.is_zero() || monic.leading() != 1)
        throw std::invalid_argument("classify_number expects a monic integer polynomial");
    if (monic.degree() < 1) throw std::invalid_argument("classify_number expects positive degree");

    auto top = largest_real_root(monic);
    if (!top) {
        // No real roots at all; the tag is RootOfUnity only when everything is
        // cyclotomic.
        auto split = strip_cyclotomic_factors(monic);
        return split.residual.degree() == 0 ? NumberType::RootOfUnity : NumberType::Other;
    }
    const IntPoly& f = top->min_poly();
    if (cyclotomic_order(f)) return NumberType::RootOfUnity;
    if (top->compare(Rat(1)) <= 0) return NumberType::Other;

    if (is_reciprocal_quadratic(f)) return NumberType::ReciprocalQuadratic;
    if (f.degree() == 1) return NumberType::Pisot;  // an integer >= 2

    auto counts = unit_disk_counts(f);
    if (is_palindromic(f) && counts.outside == 1 && counts.inside == 1 && counts.on >= 2)
        return NumberType::Salem;
    if (counts.outside == 1 && counts.on == 0) return NumberType::Pisot;
    return NumberType::Other;
}

NumberType classify_number(const AlgebraicNumber& a) { return classify_number(a.min_poly()); }

namespace {

std::size_t rank_of_power(const RatMatrix& m, unsigned k) {
    RatMatrix p = RatMatrix::identity(m.rows());
    for (unsigned i = 0; i < k; ++i) p = p * m;
    return rank(p);
}

IntMatrix evaluate_at_matrix(const IntPoly& p, const IntMatrix& m) {
    IntMatrix acc(m.rows(), m.cols());
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t d = 0; d < m.rows(); ++d) acc(d, d) += p.coeffs()[i];
    }
    return acc;
}

}  // namespace

GrowthReport classify(const IsometryCandidate& c, const CancelToken* token) {
    c.require_verified();
    GrowthReport report;
    const IntMatrix& m = c.matrix();
    const std::size_t n = m.rows();

    IntPoly p = char_poly(m);
    auto split = strip_cyclotomic_factors(p);
    for (const auto& [order, mult] : split.orders)
        report.char_poly_factors.emplace_back(cyclotomic(order), mult);
    if (split.residual.degree() > 0)
        for (const auto& [f, mult] : factor(split.residual)) report.char_poly_factors.emplace_back(f, mult);

    if (token) token->check();

    // Jordan data at eigenvalue 1.
    RatMatrix shifted = m.cast<Rat>() - RatMatrix::identity(n);
    std::array<std::size_t, 3> ranks{};
    for (unsigned k = 1; k <= 3; ++k) ranks[k - 1] = rank_of_power(shifted, k);
    report.jordan_summary = ranks;

    if (split.residual.degree() > 0) {
        // A non-cyclotomic factor carries the dynamical degree.
        auto lam = largest_real_root(split.residual);
        if (!lam || lam->compare(Rat(1)) <= 0) {
            report.kind = GrowthKind::NotRealizable;
            report.reason = "non-cyclotomic spectrum without a real eigenvalue above 1";
            return report;
        }
        report.kind = GrowthKind::Exponential;
        report.lambda = lam;
        switch (classify_number(lam->min_poly())) {
            case NumberType::ReciprocalQuadratic:
                report.lambda_type = GrowthReport::LambdaType::ReciprocalQuadratic;
                break;
            case NumberType::Salem:
                report.lambda_type = GrowthReport::LambdaType::Salem;
                break;
            default:
                report.lambda_type = GrowthReport::LambdaType::Inconsistent;
                break;
        }
        return report;
    }

    if (token) token->check();

    // Every eigenvalue is a root of unity: bounded or quadratic.
    IntPoly sqfree = squarefree_part(p);
    if (evaluate_at_matrix(sqfree, m).is_zero()) {
        unsigned long period = 1;
        for (const auto& [order, mult] : split.orders) {
            (void)mult;
            period = std::lcm(period, order);
        }
        report.kind = GrowthKind::Bounded;
        report.period = Int(static_cast<long>(period));
        if (matrix_power(m, period) != IntMatrix::identity(n))
            throw std::logic_error("bounded classification: period verification failed");
        return report;
    }

    // Not diagonalizable. The only realizable shape is a single size-3 block
    // at eigenvalue 1 with everything else semisimple.
    std::size_t r4 = rank_of_power(shifted, 4);
    bool one_block_of_size_3 = (ranks[0] - ranks[1] == 1) && (ranks[1] - ranks[2] == 1) &&
                               (ranks[2] == r4);
    RatMatrix rest = evaluate_at_matrix(sqfree, m).cast<Rat>() * (shifted * shifted);
    bool complement_semisimple = rest.is_zero();

    if (one_block_of_size_3 && complement_semisimple) {
        report.kind = GrowthKind::Quadratic;
        report.coefficient = quadratic_coefficient(c, c.lattice().anchor());
        return report;
    }

    report.kind = GrowthKind::NotRealizable;
    RatMatrix shifted_neg = m.cast<Rat>() + RatMatrix::identity(n);
    if (rank(shifted_neg) > rank(shifted_neg * shifted_neg))
        report.reason = "nilpotent structure at eigenvalue -1; degrees would alternate in sign";
    else
        report.reason = "Jordan structure incompatible with a plane mapping";
    return report;
}

std::vector<Int> degree_sequence(const IsometryCandidate& c, const ClassVector& h,
                                 const ClassVector& h_prime, std::size_t n_max) {
    c.require_verified();
    const PicLattice& L = c.lattice();
    std::vector<Int> out;
    out.reserve(n_max + 1);
    ClassVector v = h;
    for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(L.pair(v, h_prime));
        if (n < n_max) v = c.apply(v);
    }
    return out;
}

JordanChain rational_jordan_chain(const IsometryCandidate& c) {
    const IntMatrix& m = c.matrix();
    const std::size_t n = m.rows();
    RatMatrix shifted = m.cast<Rat>() - RatMatrix::identity(n);
    RatMatrix n2 = shifted * shifted;
    RatMatrix n3 = n2 * shifted;

    // v3 spans the size-3 block: inside Ker (Phi-I)^3 but outside Ker (Phi-I)^2.
    for (const auto& candidate : kernel_basis(n3)) {
        std::vector<Rat> v2 = shifted * candidate;
        std::vector<Rat> v1 = shifted * v2;
        bool nonzero = false;
        for (const auto& x : v1) nonzero = nonzero || x != 0;
        if (!nonzero) continue;
        return {v1, v2, candidate};
    }
    throw NotQuadraticError("no size-3 Jordan block at eigenvalue 1");
}

Rat quadratic_coefficient(const IsometryCandidate& c, const ClassVector& h) {
    c.require_verified();
    c.lattice().require_owned(h);
    JordanChain chain;
    try {
        chain = rational_jordan_chain(c);
    } catch (const NotQuadraticError&) {
        throw NotQuadraticError("quadratic_coefficient: candidate does not grow quadratically");
    }
    const PicLattice& L = c.lattice();
    std::vector<Rat> hq(h.coords.begin(), h.coords.end());
    Rat hv1 = L.pair(hq, chain.v1);
    Rat v3v1 = L.pair(chain.v3, chain.v1);
    if (v3v1 == 0) throw std::logic_error("degenerate Jordan chain pairing");
    return hv1 * hv1 / (2 * v3v1);
}

ExpCoefficient exp_leading_coefficient(const IsometryCandidate& c, const ClassVector& h,
                                       const Rat& enclosure_width) {
    c.require_verified();
    c.lattice().require_owned(h);
    IntPoly p = char_poly(c.matrix());
    auto split = strip_cyclotomic_factors(p);
    if (split.residual.degree() < 1)
        throw NotExponentialError("exp_leading_coefficient: candidate does not grow exponentially");
    auto lam = largest_real_root(split.residual);
    if (!lam || lam->compare(Rat(1)) <= 0)
        throw NotExponentialError("exp_leading_coefficient: no eigenvalue above 1");

    NumberField field(lam->min_poly(), lam->interval());
    using Elem = NumberField::Elem;
    const std::size_t n = c.matrix().rows();

    auto eigenvector = [&](const Elem& eigenvalue) {
        // Kernel of (Phi - eigenvalue I) over the field, by Gaussian
        // elimination.
        std::vector<std::vector<Elem>> a(n, std::vector<Elem>(n, field.zero()));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = field.from_rat(Rat(c.matrix()(i, j)));
                if (i == j) a[i][j] = field.sub(a[i][j], eigenvalue);
            }
        std::vector<long> pivot_col_of_row(n, -1);
        std::size_t row = 0;
        for (std::size_t col = 0; col < n && row < n; ++col) {
            std::size_t piv = row;
            while (piv < n && field.is_zero(a[piv][col])) ++piv;
            if (piv == n) continue;
            std::swap(a[piv], a[row]);
            Elem inv = field.inv(a[row][col]);
            for (std::size_t j = 0; j < n; ++j) a[row][j] = field.mul(a[row][j], inv);
            for (std::size_t i = 0; i < n; ++i) {
                if (i == row || field.is_zero(a[i][col])) continue;
                Elem f = a[i][col];
                for (std::size_t j = 0; j < n; ++j)
                    a[i][j] = field.sub(a[i][j], field.mul(f, a[row][j]));
            }
            pivot_col_of_row[row] = static_cast<long>(col);
            ++row;
        }
        std::vector<bool> is_pivot(n, false);
        for (std::size_t r = 0; r < row; ++r) is_pivot[static_cast<std::size_t>(pivot_col_of_row[r])] = true;
        std::size_t free_col = n;
        for (std::size_t jj = 0; jj < n; ++jj)
            if (!is_pivot[jj]) {
                free_col = jj;
                break;
            }
        if (free_col == n) throw std::logic_error("eigenvalue is not in the spectrum");
        std::vector<Elem> v(n, field.zero());
        v[free_col] = field.one();
        for (std::size_t r = 0; r < row; ++r)
            v[static_cast<std::size_t>(pivot_col_of_row[r])] = field.neg(a[r][free_col]);
        return v;
    };

    Elem lambda = field.generator();
    std::vector<Elem> v1 = eigenvector(lambda);
    std::vector<Elem> v2 = eigenvector(field.inv(lambda));

    auto pair_field = [&](const std::vector<Elem>& u, const std::vector<Elem>& w) {
        Elem acc = field.zero();
        const IntMatrix& g = c.lattice().gram();
        for (std::size_t i = 0; i < n; ++i) {
            if (field.is_zero(u[i])) continue;
            Elem rowsum = field.zero();
            for (std::size_t j = 0; j < n; ++j) {
                if (g(i, j) == 0) continue;
                rowsum = field.add(rowsum, field.mul(field.from_rat(Rat(g(i, j))), w[j]));
            }
            acc = field.add(acc, field.mul(u[i], rowsum));
        }
        return acc;
    };

    std::vector<Elem> hf(n, field.zero());
    for (std::size_t i = 0; i < n; ++i) hf[i] = field.from_rat(Rat(h.coords[i]));

    Elem numerator = field.mul(pair_field(hf, v1), pair_field(hf, v2));
    Elem denominator = pair_field(v1, v2);
    if (field.is_zero(denominator)) throw std::logic_error("isotropic eigenvector pairing vanished");
    Elem value = field.div(numerator, denominator);
    if (field.sign_of(value) <= 0) throw std::logic_error("leading coefficient must be positive");

    ExpCoefficient out;
    out.min_poly = lam->min_poly();
    out.value = value.rep;
    auto [lo, hi] = field.enclosure(value, enclosure_width);
    out.enclosure_lo = lo;
    out.enclosure_hi = hi;
    return out;
}

}  // namespace picdyn
