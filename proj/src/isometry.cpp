#include "picdyn/isometry.hpp"

#include <algorithm>

namespace picdyn {

IsometryCandidate::IsometryCandidate(PicLattice lattice, IntMatrix matrix)
    : lattice_(std::move(lattice)), matrix_(std::move(matrix)) {
    if (!matrix_.is_square() || matrix_.rows() != lattice_.rank())
        throw InvalidLatticeError("isometry matrix size does not match lattice rank");
}

void IsometryCandidate::require_verified() const {
    if (!is_verified()) throw NotVerifiedError("operation requires a verified isometry candidate");
}

void IsometryCandidate::set_curve_motion(std::vector<std::pair<ClassVector, ClassVector>> motion) {
    for (auto& [src, dst] : motion) {
        lattice_.require_owned(src);
        lattice_.require_owned(dst);
    }
    motion_ = std::move(motion);
    report_.reset();
}

VerificationReport IsometryCandidate::verify() {
    VerificationReport r;
    r.form_preserved = (matrix_.transposed() * lattice_.gram() * matrix_ == lattice_.gram());
    r.canonical_preserved = (matrix_ * lattice_.canonical().coords == lattice_.canonical().coords);
    Int d = det(matrix_);
    r.unimodular = (d == 1 || d == -1);

    if (!motion_.empty()) {
        bool all_match = true;
        for (const auto& [src, dst] : motion_)
            all_match = all_match && (matrix_ * src.coords == dst.coords);
        r.curve_permutation = all_match ? VerificationReport::CurveCheck::Pass
                                        : VerificationReport::CurveCheck::Fail;
    } else if (!lattice_.known_effective().empty()) {
        // The matrix must permute the listed classes.
        std::vector<std::vector<Int>> classes;
        for (const auto& c : lattice_.known_effective()) classes.push_back(c.cls.coords);
        bool permutes = true;
        for (const auto& c : classes) {
            auto image = matrix_ * c;
            permutes = permutes && std::find(classes.begin(), classes.end(), image) != classes.end();
        }
        r.curve_permutation =
            permutes ? VerificationReport::CurveCheck::Pass : VerificationReport::CurveCheck::Fail;
    }
    report_ = r;
    return r;
}

ClassVector IsometryCandidate::apply(const ClassVector& v) const {
    lattice_.require_owned(v);
    return lattice_.cls(matrix_ * v.coords);
}

IsometryCandidate make_verified(PicLattice lattice, IntMatrix matrix) {
    IsometryCandidate c(std::move(lattice), std::move(matrix));
    c.verify();
    return c;
}

IsometryCandidate inverse(const IsometryCandidate& c) {
    IsometryCandidate out(c.lattice(), unimodular_inverse(c.matrix()));
    if (!c.curve_motion().empty()) {
        std::vector<std::pair<ClassVector, ClassVector>> reversed;
        for (const auto& [src, dst] : c.curve_motion())
            reversed.emplace_back(out.lattice().cls(dst.coords), out.lattice().cls(src.coords));
        out.set_curve_motion(std::move(reversed));
    }
    out.verify();
    return out;
}

IntPoly char_poly(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: not square");
    const std::size_t n = m.rows();
    // Faddeev-LeVerrier; the divisions are exact over Z.
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    IntMatrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
            mk = m * mk;
        }
        Int tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
        c[n - k] = exact_div(-tr, Int(static_cast<long>(k)));
    }
    return IntPoly(std::move(c));
}

IntPoly char_poly(const IsometryCandidate& c) {
    c.require_verified();
    return char_poly(c.matrix());
}

IntMatrix matrix_power(const IntMatrix& m, unsigned long n) {
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (n) {
        if (n & 1ul) result = result * base;
        base = base * base;
        n >>= 1ul;
    }
    return result;
}

ClassVector power_apply(const IsometryCandidate& c, long n, const ClassVector& v) {
    c.require_verified();
    c.lattice().require_owned(v);
    IntMatrix base = n >= 0 ? c.matrix() : unimodular_inverse(c.matrix());
    unsigned long e = n >= 0 ? static_cast<unsigned long>(n) : static_cast<unsigned long>(-n);
    return c.lattice().cls(matrix_power(base, e) * v.coords);
}

}  // namespace picdyn
