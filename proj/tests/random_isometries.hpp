#pragma once

// Random verified isometries on geometric lattices, built from the standard
// generators: permutations of the exceptional basis directions (fixing e0)
// and the degree-2 reflection e0 -> 2e0 - e1 - e2 - e3.

#include "picdyn/isometry.hpp"

#include <numeric>
#include <random>

namespace picdyn::testing {

inline IntMatrix basis_permutation_matrix(const PicLattice& L, std::mt19937_64& rng) {
    const std::size_t n = L.rank();
    std::vector<std::size_t> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix m(n, n);
    m(0, 0) = 1;
    for (std::size_t j = 1; j < n; ++j) m(perm[j - 1], j) = 1;
    return m;
}

inline IntMatrix quadratic_reflection_matrix(const PicLattice& L, std::mt19937_64& rng) {
    const std::size_t n = L.rank();
    // Reflection in e0 - ei - ej - ek for a random triple of distinct indices.
    std::vector<std::size_t> idx(n - 1);
    std::iota(idx.begin(), idx.end(), 1);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<Int> alpha(n, Int(0));
    alpha[0] = 1;
    alpha[idx[0]] = -1;
    alpha[idx[1]] = -1;
    alpha[idx[2]] = -1;
    ClassVector a = L.cls(alpha);
    IntMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        ClassVector img = L.basis_vector(j) + a * L.pair(L.basis_vector(j), a);
        for (std::size_t i = 0; i < n; ++i) m(i, j) = img.coords[i];
    }
    return m;
}

inline IsometryCandidate random_isometry(const PicLattice& L, std::mt19937_64& rng,
                                         int min_factors = 2, int max_factors = 12) {
    if (L.rank() < 4) throw std::invalid_argument("need rank >= 4 for the quadratic reflection");
    std::uniform_int_distribution<int> len(min_factors, max_factors);
    std::uniform_int_distribution<int> which(0, 2);
    IntMatrix m = IntMatrix::identity(L.rank());
    int k = len(rng);
    for (int i = 0; i < k; ++i)
        m = m * (which(rng) == 0 ? basis_permutation_matrix(L, rng)
                                 : quadratic_reflection_matrix(L, rng));
    return make_verified(L, m);
}

}  // namespace picdyn::testing
