#include "picdyn/lattice.hpp"

#include <atomic>
#include <sstream>

namespace picdyn {

namespace {
std::uint64_t next_lattice_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}
}  // namespace

ClassVector ClassVector::operator+(const ClassVector& o) const {
    if (lattice_id != o.lattice_id) throw LatticeMismatchError("class vectors from different lattices");
    ClassVector r{coords + o.coords, lattice_id};
    return r;
}

ClassVector ClassVector::operator-(const ClassVector& o) const {
    if (lattice_id != o.lattice_id) throw LatticeMismatchError("class vectors from different lattices");
    return {coords - o.coords, lattice_id};
}

ClassVector ClassVector::operator-() const {
    std::vector<Int> c(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) c[i] = -coords[i];
    return {std::move(c), lattice_id};
}

ClassVector ClassVector::operator*(const Int& s) const {
    std::vector<Int> c(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) c[i] = s * coords[i];
    return {std::move(c), lattice_id};
}

bool ClassVector::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

std::string ClassVector::to_string(const std::vector<std::string>& labels) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        Int a = coords[i];
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Int mag = abs(a);
        if (mag != 1) os << mag.get_str() << "*";
        os << (i < labels.size() ? labels[i] : "b" + std::to_string(i));
    }
    if (first) os << "0";
    return os.str();
}

PicLattice PicLattice::geometric(std::size_t r) {
    PicLattice L;
    L.rank_ = r + 1;
    L.gram_ = IntMatrix(L.rank_, L.rank_);
    L.gram_(0, 0) = 1;
    for (std::size_t i = 1; i < L.rank_; ++i) L.gram_(i, i) = -1;
    L.id_ = next_lattice_id();
    std::vector<Int> k(L.rank_, Int(1));
    k[0] = -3;
    L.canonical_ = {std::move(k), L.id_};
    std::vector<Int> a(L.rank_, Int(0));
    a[0] = 1;
    L.anchor_ = {std::move(a), L.id_};
    L.labels_.push_back("e0");
    for (std::size_t i = 1; i < L.rank_; ++i) L.labels_.push_back("e" + std::to_string(i));
    L.preset_ = Preset::Geometric;
    L.validate();
    return L;
}

PicLattice PicLattice::p1p1(std::size_t b) {
    PicLattice L;
    L.rank_ = b + 2;
    L.gram_ = IntMatrix(L.rank_, L.rank_);
    L.gram_(0, 1) = 1;
    L.gram_(1, 0) = 1;
    for (std::size_t i = 2; i < L.rank_; ++i) L.gram_(i, i) = -1;
    L.id_ = next_lattice_id();
    std::vector<Int> k(L.rank_, Int(1));
    k[0] = -2;
    k[1] = -2;
    L.canonical_ = {std::move(k), L.id_};
    std::vector<Int> a(L.rank_, Int(0));
    a[0] = 1;
    a[1] = 1;
    L.anchor_ = {std::move(a), L.id_};
    L.labels_ = {"Hx", "Hy"};
    for (std::size_t i = 1; i <= b; ++i) L.labels_.push_back("E" + std::to_string(i));
    L.preset_ = Preset::P1P1;
    L.validate();
    return L;
}

PicLattice PicLattice::custom(IntMatrix gram, std::vector<Int> canonical, std::vector<Int> anchor,
                              std::vector<std::string> labels) {
    PicLattice L;
    L.rank_ = gram.rows();
    L.gram_ = std::move(gram);
    L.id_ = next_lattice_id();
    L.canonical_ = {std::move(canonical), L.id_};
    L.anchor_ = {std::move(anchor), L.id_};
    if (labels.empty())
        for (std::size_t i = 0; i < L.rank_; ++i) labels.push_back("b" + std::to_string(i));
    L.labels_ = std::move(labels);
    L.preset_ = Preset::Custom;
    L.validate();
    return L;
}

void PicLattice::validate() const {
    if (rank_ == 0) throw InvalidLatticeError("lattice rank must be positive");
    if (!gram_.is_square() || gram_.rows() != rank_) throw InvalidLatticeError("gram matrix shape mismatch");
    if (gram_ != gram_.transposed()) throw InvalidLatticeError("gram matrix is not symmetric");
    Int d = det(gram_);
    if (d != 1 && d != -1) throw InvalidLatticeError("gram matrix is not unimodular");
    Signature sig = signature(gram_);
    if (sig.positive != 1 || sig.negative != rank_ - 1)
        throw InvalidLatticeError("intersection form must have signature (1, rank-1)");
    if (canonical_.size() != rank_ || anchor_.size() != rank_)
        throw InvalidLatticeError("canonical/anchor dimension mismatch");
    if (labels_.size() != rank_) throw InvalidLatticeError("label count mismatch");
    if (pair(anchor_, anchor_) <= 0) throw InvalidLatticeError("anchor class must have positive square");
    if (pair(anchor_, canonical_) >= 0)
        throw InvalidLatticeError("anchor must pair negatively with the canonical class");
}

void PicLattice::attach_curves(std::vector<KnownCurve> curves) {
    for (auto& c : curves) {
        require_owned(c.cls);
        if (pair(c.cls, c.cls) != c.self_intersection)
            throw InvalidLatticeError("declared self-intersection of curve '" + c.label +
                                      "' disagrees with the intersection form");
    }
    curves_ = std::move(curves);
}

ClassVector PicLattice::cls(std::vector<Int> coords) const {
    if (coords.size() != rank_) throw LatticeMismatchError("class vector length mismatch");
    return {std::move(coords), id_};
}

ClassVector PicLattice::cls(const std::vector<long>& coords) const {
    std::vector<Int> c(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) c[i] = Int(coords[i]);
    return cls(std::move(c));
}

ClassVector PicLattice::basis_vector(std::size_t i) const {
    std::vector<Int> c(rank_, Int(0));
    c.at(i) = 1;
    return {std::move(c), id_};
}

ClassVector PicLattice::zero() const { return {std::vector<Int>(rank_, Int(0)), id_}; }

Int PicLattice::pair(const ClassVector& u, const ClassVector& v) const {
    require_owned(u);
    require_owned(v);
    Int acc(0);
    for (std::size_t i = 0; i < rank_; ++i) {
        if (u.coords[i] == 0) continue;
        Int row(0);
        for (std::size_t j = 0; j < rank_; ++j) row += gram_(i, j) * v.coords[j];
        acc += u.coords[i] * row;
    }
    return acc;
}

Rat PicLattice::pair(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
    if (u.size() != rank_ || v.size() != rank_) throw LatticeMismatchError("rational vector length mismatch");
    Rat acc(0);
    for (std::size_t i = 0; i < rank_; ++i) {
        if (u[i] == 0) continue;
        Rat row(0);
        for (std::size_t j = 0; j < rank_; ++j) row += Rat(gram_(i, j)) * v[j];
        acc += u[i] * row;
    }
    return acc;
}

void PicLattice::require_owned(const ClassVector& v) const {
    if (!owns(v)) throw LatticeMismatchError("class vector does not belong to this lattice");
}

ClassVector primitivize(const ClassVector& v) {
    if (v.is_zero()) throw Error("primitivize: zero vector");
    Int c = content(v.coords);
    std::vector<Int> out(v.coords.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = exact_div(v.coords[i], c);
    return {std::move(out), v.lattice_id};
}

PicLattice change_basis(const PicLattice& L, const IntMatrix& m) {
    if (!m.is_square() || m.rows() != L.rank()) throw InvalidLatticeError("basis change shape mismatch");
    Int d = det(m);
    if (d != 1 && d != -1) throw InvalidLatticeError("basis change matrix must be unimodular");
    IntMatrix gram2 = m.transposed() * L.gram() * m;
    IntMatrix minv = unimodular_inverse(m);
    return PicLattice::custom(gram2, minv * L.canonical().coords, minv * L.anchor().coords);
}

ClassVector change_basis_vector(const PicLattice& old_lattice, const PicLattice& new_lattice,
                                const IntMatrix& m, const ClassVector& v) {
    old_lattice.require_owned(v);
    IntMatrix minv = unimodular_inverse(m);
    return new_lattice.cls(minv * v.coords);
}

}  // namespace picdyn
