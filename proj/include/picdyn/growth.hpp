#pragma once

#include "picdyn/algnum.hpp"
#include "picdyn/isometry.hpp"

#include <array>
#include <atomic>
#include <optional>
#include <string>
#include <vector>

namespace picdyn {

// Cooperative cancellation for long-running classifications.
struct CancelToken {
    std::atomic<bool> cancelled{false};
    void cancel() { cancelled.store(true); }
    void check() const {
        if (cancelled.load()) throw CancelledError("operation cancelled");
    }
};

enum class NumberType { ReciprocalQuadratic, Salem, Pisot, RootOfUnity, Other };

std::string to_string(NumberType t);

// Exact tag for the largest real root of a monic integer polynomial, decided
// by Sturm isolation and unit-circle root counts on its irreducible factor.
NumberType classify_number(const IntPoly& monic);
NumberType classify_number(const AlgebraicNumber& a);

enum class GrowthKind { Bounded, Quadratic, Exponential, NotRealizable };

std::string to_string(GrowthKind k);

struct GrowthReport {
    GrowthKind kind = GrowthKind::NotRealizable;

    // Bounded: least exponent with Phi^period = identity.
    Int period;

    // Quadratic: deg phi^n / n^2 -> coefficient, measured against the anchor.
    Rat coefficient;

    // Exponential.
    std::optional<AlgebraicNumber> lambda;
    enum class LambdaType { ReciprocalQuadratic, Salem, Inconsistent };
    LambdaType lambda_type = LambdaType::Inconsistent;

    std::string reason;  // NotRealizable diagnostics

    // (factor, multiplicity) list with cyclotomic factors split off.
    std::vector<std::pair<IntPoly, int>> char_poly_factors;

    // ranks of (Phi - I)^k for k = 1, 2, 3
    std::array<std::size_t, 3> jordan_summary{0, 0, 0};
};

GrowthReport classify(const IsometryCandidate& c, const CancelToken* token = nullptr);

// Exact [(Phi^n h) . h' for n = 0..N].
std::vector<Int> degree_sequence(const IsometryCandidate& c, const ClassVector& h,
                                 const ClassVector& h_prime, std::size_t n_max);

// Exact rational c with deg phi^n ~ c n^2, from a rational Jordan chain at
// eigenvalue 1: c = (h, v1)^2 / (2 (v3, v1)).
Rat quadratic_coefficient(const IsometryCandidate& c, const ClassVector& h);

// Jordan chain (v1, v2, v3) at eigenvalue 1 over Q: Phi v1 = v1,
// Phi v2 = v2 + v1, Phi v3 = v3 + v2.
struct JordanChain {
    std::vector<Rat> v1, v2, v3;
};
JordanChain rational_jordan_chain(const IsometryCandidate& c);

// Exact value (h, v1)(h, v2) / (v1, v2) in Q(lambda) plus an interval
// enclosure; v1, v2 are the eigenvectors for lambda and 1/lambda.
struct ExpCoefficient {
    IntPoly min_poly;         // modulus of the field
    RatPoly value;            // the coefficient as a polynomial in lambda
    Rat enclosure_lo, enclosure_hi;
};
ExpCoefficient exp_leading_coefficient(const IsometryCandidate& c, const ClassVector& h,
                                       const Rat& enclosure_width = Rat(1, 1000000));

// Cyclotomic content of a characteristic polynomial: every factor
// cyclotomic(m) with phi(m) <= deg is divided out exactly.
struct CyclotomicSplit {
    std::vector<std::pair<unsigned long, int>> orders;  // (m, multiplicity)
    IntPoly residual;                                   // non-cyclotomic part
};
CyclotomicSplit strip_cyclotomic_factors(const IntPoly& p);

}  // namespace picdyn
