#pragma once

#include "picdyn/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace picdyn {

// Exact linear algebra over the rationals and the integers. Everything here is
// deterministic; pivoting is by first nonzero entry.

struct Rref {
    RatMatrix mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

Rref rref(RatMatrix m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

// Basis of the right kernel {x : m x = 0}, as columns.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

// One solution of m x = b, if any.
std::optional<std::vector<Rat>> solve(const RatMatrix& m, const std::vector<Rat>& b);

// Solve m X = B columnwise; nullopt if any column is unsolvable.
std::optional<RatMatrix> solve(const RatMatrix& m, const RatMatrix& b);

Rat det(const RatMatrix& m);

// Fraction-free determinant (Bareiss).
Int det(const IntMatrix& m);

RatMatrix inverse(const RatMatrix& m);

// Inverse of a matrix with determinant +-1; entries stay integral.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Sylvester signature (n_plus, n_minus, n_zero) of a symmetric matrix,
// computed by exact symmetric Gaussian reduction.
struct Signature {
    std::size_t positive = 0, negative = 0, zero = 0;
};
Signature signature(const RatMatrix& sym);
Signature signature(const IntMatrix& sym);

// Saturated basis of {x in Z^n : m x = 0}, as columns of an n x k matrix.
// The columns generate the full kernel lattice, not a finite-index sublattice.
IntMatrix integer_kernel(const IntMatrix& m);

// Same for a rational constraint matrix.
IntMatrix integer_kernel(const RatMatrix& m);

// Clear denominators of a primitive direction: returns the unique integral
// vector with coprime entries and the same orientation.
std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v);

// Content of an integer vector (gcd of entries, nonnegative).
Int content(const std::vector<Int>& v);

// Extend the primitive column v to a unimodular n x n matrix whose first
// column is v.
IntMatrix complete_to_unimodular(const std::vector<Int>& v);

}  // namespace picdyn
