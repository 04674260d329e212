#pragma once

#include "picdyn/isometry.hpp"

#include <string>
#include <vector>

namespace picdyn {

// Bundled worked examples. Each fixture provides whatever subset of
// lattice/isometry/mapping data applies to it.
namespace fixtures {

// b=9 blow-up lattice of P1xP1 in the basis (D1, D2, C1..C6, Ct1..Ct3),
// together with the induced 11x11 lattice action of the three-point mapping
// with singular values at +-3a, and its curve motion list.
IsometryCandidate paper_ex1();

// The same lattice in the (Hx, Hy, ...) basis plus the basis change between
// the two presentations.
PicLattice paper_ex1_h_basis();
IntMatrix paper_ex1_basis_change();  // columns: D-basis vectors in H-coordinates

// Rank-11 Coxeter-style product of the simple reflections on the geometric
// r=10 lattice; exponential growth with the smallest known Salem number.
IsometryCandidate coxeter_e10();

// coxeter_e10 padded by one extra exceptional direction fixed by the action.
IsometryCandidate coxeter_e10_padded();

// Affine A2 component matrix (3-cycle of -2 curves).
IntMatrix halphen_a2_matrix();

// E8^(1) Cartan-style component matrix (9 nodes).
IntMatrix e8_affine_matrix();

struct MappingSpec {
    std::vector<std::string> variables;
    std::vector<std::string> parameters;
    std::vector<std::string> components;
    std::vector<std::pair<std::string, std::string>> step_rule;
    std::string form;  // "three_point" or "first_order"
};

// (x, y) -> (y, ((y+3a)x - 2ay) / (y - 3a))
MappingSpec qp13point_mapping();

// Nonautonomous version with a_{n+1} = a_n + alpha.
MappingSpec qp13point_nonautonomous_mapping();

// Hietarinta-Viallet: (x, y) -> (y, -x + y + a/y^2)
MappingSpec hietarinta_viallet_mapping();

std::vector<std::string> names();

}  // namespace fixtures
}  // namespace picdyn
