#pragma once

#include "picdyn/lattice.hpp"
#include "picdyn/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace picdyn {

// Result of checking the lattice-verifiable Cremona isometry axioms. The
// effectiveness axiom cannot be decided from lattice data; it is reported only
// against user-supplied curve classes (or a declared motion list).
struct VerificationReport {
    bool form_preserved = false;
    bool canonical_preserved = false;
    bool unimodular = false;
    enum class CurveCheck { Pass, Fail, NotApplicable };
    CurveCheck curve_permutation = CurveCheck::NotApplicable;

    bool ok() const {
        return form_preserved && canonical_preserved && unimodular &&
               curve_permutation != CurveCheck::Fail;
    }
};

// An integer matrix acting on column class vectors of a fixed lattice.
class IsometryCandidate {
public:
    IsometryCandidate(PicLattice lattice, IntMatrix matrix);

    const PicLattice& lattice() const { return lattice_; }
    const IntMatrix& matrix() const { return matrix_; }
    const std::optional<VerificationReport>& verification() const { return report_; }

    bool is_verified() const { return report_ && report_->ok(); }
    void require_verified() const;

    // Declared images of specific curve classes, checked during verification
    // by exact matrix arithmetic.
    void set_curve_motion(std::vector<std::pair<ClassVector, ClassVector>> motion);
    const std::vector<std::pair<ClassVector, ClassVector>>& curve_motion() const { return motion_; }

    VerificationReport verify();

    ClassVector apply(const ClassVector& v) const;

private:
    PicLattice lattice_;
    IntMatrix matrix_;
    std::vector<std::pair<ClassVector, ClassVector>> motion_;
    std::optional<VerificationReport> report_;
};

// Convenience: construct and verify in one step.
IsometryCandidate make_verified(PicLattice lattice, IntMatrix matrix);

// The inverse candidate on the same lattice; a declared curve motion is
// reversed. Verified on construction.
IsometryCandidate inverse(const IsometryCandidate& c);

// Exact monic characteristic polynomial (Faddeev-LeVerrier).
IntPoly char_poly(const IntMatrix& m);
IntPoly char_poly(const IsometryCandidate& c);

// Phi^n v for any integer n; the inverse is integral by unimodularity.
ClassVector power_apply(const IsometryCandidate& c, long n, const ClassVector& v);

IntMatrix matrix_power(const IntMatrix& m, unsigned long n);

}  // namespace picdyn
