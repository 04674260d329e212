#pragma once

#include "picdyn/poly.hpp"

#include <utility>
#include <vector>

namespace picdyn {

// Irreducible factors of a squarefree primitive polynomial over Z, each
// primitive with positive leading coefficient. Order is deterministic
// (sorted by degree, then lexicographically by coefficients).
std::vector<IntPoly> factor_squarefree(const IntPoly& f);

// Full factorization: content is dropped, result is a list of
// (irreducible primitive factor, multiplicity).
std::vector<std::pair<IntPoly, int>> factor(const IntPoly& f);

bool is_irreducible(const IntPoly& f);

}  // namespace picdyn
