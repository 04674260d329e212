#pragma once

#include "picdyn/errors.hpp"
#include "picdyn/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace picdyn {

class PicLattice;

// A divisor class in a fixed basis of its lattice. Coordinates are exact
// integers; the id ties the vector to the lattice it was created from.
struct ClassVector {
    std::vector<Int> coords;
    std::uint64_t lattice_id = 0;

    std::size_t size() const { return coords.size(); }

    ClassVector operator+(const ClassVector& o) const;
    ClassVector operator-(const ClassVector& o) const;
    ClassVector operator-() const;
    ClassVector operator*(const Int& s) const;
    bool operator==(const ClassVector& o) const { return coords == o.coords; }
    bool operator<(const ClassVector& o) const { return coords < o.coords; }

    bool is_zero() const;
    std::string to_string(const std::vector<std::string>& labels) const;
};

struct KnownCurve {
    std::string label;
    ClassVector cls;
    Int self_intersection;
};

// Z^(1,r) with an exact unimodular intersection form of signature
// (1, rank-1), a canonical class and a nef degree-measuring anchor class.
// Immutable after construction.
class PicLattice {
public:
    // diag(1, -1, ..., -1) of rank r+1 with K = -3e0 + e1 + ... + er.
    static PicLattice geometric(std::size_t r);

    // Basis (Hx, Hy, E1..Eb); K = -2Hx - 2Hy + sum Ei; anchor Hx + Hy.
    static PicLattice p1p1(std::size_t b);

    static PicLattice custom(IntMatrix gram, std::vector<Int> canonical, std::vector<Int> anchor,
                             std::vector<std::string> labels = {});

    std::size_t rank() const { return rank_; }
    const IntMatrix& gram() const { return gram_; }
    const ClassVector& canonical() const { return canonical_; }
    const ClassVector& anchor() const { return anchor_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::uint64_t id() const { return id_; }

    const std::vector<KnownCurve>& known_effective() const { return curves_; }

    // Declared self-intersections are validated against the gram matrix.
    void attach_curves(std::vector<KnownCurve> curves);

    ClassVector cls(std::vector<Int> coords) const;
    ClassVector cls(const std::vector<long>& coords) const;
    ClassVector cls(std::initializer_list<long> coords) const {
        return cls(std::vector<long>(coords));
    }
    ClassVector basis_vector(std::size_t i) const;
    ClassVector zero() const;

    Int pair(const ClassVector& u, const ClassVector& v) const;
    Rat pair(const std::vector<Rat>& u, const std::vector<Rat>& v) const;

    bool owns(const ClassVector& v) const { return v.lattice_id == id_ && v.size() == rank_; }
    void require_owned(const ClassVector& v) const;

    std::string describe(const ClassVector& v) const { return v.to_string(labels_); }

    enum class Preset { Geometric, P1P1, Custom };
    Preset preset() const { return preset_; }

private:
    PicLattice() = default;
    void validate() const;

    std::size_t rank_ = 0;
    IntMatrix gram_;
    ClassVector canonical_;
    ClassVector anchor_;
    std::vector<std::string> labels_;
    std::vector<KnownCurve> curves_;
    Preset preset_ = Preset::Custom;
    std::uint64_t id_ = 0;
};

// v / gcd(coords); direction and sign preserved.
ClassVector primitivize(const ClassVector& v);

// New lattice whose basis vectors are the columns of M expressed in the old
// basis; gram' = M^T gram M, canonical and anchor re-expressed. M must be
// unimodular.
PicLattice change_basis(const PicLattice& L, const IntMatrix& m);

// Coordinates of an old-basis vector in the changed basis.
ClassVector change_basis_vector(const PicLattice& old_lattice, const PicLattice& new_lattice,
                                const IntMatrix& m, const ClassVector& v);

}  // namespace picdyn
