#pragma once

#include "picdyn/growth.hpp"

#include <optional>
#include <string>
#include <vector>

namespace picdyn {

struct EnumerationOptions {
    // Upper bound on nodes explored in the short-vector search tree.
    unsigned long node_cap = 10'000'000;
};

// Primitive integral generator of Ker(Phi - I) /\ Im(Phi - I)^2, sign fixed by
// a positive pairing with the anchor. Isotropic and orthogonal to K; both are
// asserted.
ClassVector dominant_vector_quadratic(const IsometryCandidate& c);

// Dominant eigenvector over Q(lambda), sign normalized so the pairing with the
// anchor is positive; isotropy in the field is asserted.
struct FieldVector {
    IntPoly min_poly;                // modulus of Q(lambda)
    RootInterval lambda_interval;
    std::vector<RatPoly> coords;     // polynomials in lambda
};
FieldVector dominant_vector_exponential(const IsometryCandidate& c);

// The exceptional-class sets that minimization contracts. Results are sorted
// lexicographically by coordinates.
std::vector<ClassVector> exceptional_set_quadratic(const IsometryCandidate& c,
                                                   const EnumerationOptions& opts = {});
std::vector<ClassVector> exceptional_set_exponential(const IsometryCandidate& c,
                                                     const EnumerationOptions& opts = {});
std::vector<ClassVector> exceptional_set(const IsometryCandidate& c,
                                         const EnumerationOptions& opts = {});

struct ContractionPlan {
    std::vector<ClassVector> exceptional_classes;
    PicLattice reduced_lattice;
    IsometryCandidate reduced_isometry;
    // Rows map ambient coordinates to reduced coordinates:
    // push(v) = pushforward * (v + sum (v.E_i) E_i).
    IntMatrix pushforward;
    // K = lift(K') + sum E_i, recorded in ambient coordinates.
    ClassVector lifted_canonical;
    bool canonical_identity_checked = false;

    ClassVector push(const ClassVector& v) const;
};

ContractionPlan contract(const IsometryCandidate& c, const std::vector<ClassVector>& exceptional,
                         const EnumerationOptions& opts = {});

enum class MinimalityVerdict { Minimal, NotMinimal, UnsupportedBounded };
MinimalityVerdict is_minimal(const IsometryCandidate& c, const EnumerationOptions& opts = {});

struct HalphenReport {
    bool rank_is_10 = false;
    bool k_squared_zero = false;
    std::optional<bool> anticanonical_equals_dominant;  // set when a quadratic candidate is attached
    enum class NefCheck { Pass, Fail, NoCurveData };
    NefCheck nef_versus_supplied_curves = NefCheck::NoCurveData;
    std::string dynkin = "undetermined";
};

HalphenReport halphen_check(const PicLattice& L, const IsometryCandidate* quadratic_candidate = nullptr);

// Affine Dynkin recognition from a component intersection matrix.
struct DynkinResult {
    std::string label = "undetermined";          // e.g. "A2(1)", "E8(1)", "A0(1)"
    std::vector<std::string> violations;          // failed preconditions
    std::string note;                             // e.g. the A1(1) multiplicity remark
    bool determined() const { return violations.empty() && label != "undetermined"; }
};
DynkinResult dynkin_type(const IntMatrix& components);

// All lattice vectors of square -1 meeting K in -1 inside the saturated
// sublattice spanned by the columns of `basis` (on which the form must be
// negative definite). Exposed for testing.
std::vector<std::vector<Int>> enumerate_minus_one_classes(const PicLattice& L, const IntMatrix& basis,
                                                          const EnumerationOptions& opts);

}  // namespace picdyn
