#include "picdyn/fixtures.hpp"

namespace picdyn {
namespace fixtures {

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Int(rows[i][j]);
    return m;
}

}  // namespace

IntMatrix paper_ex1_basis_change() {
    // Columns express (D1, D2, C1..C6, Ct1..Ct3) in the (Hx, Hy, E1..E9)
    // basis: D1 = Hx - C2 - C4 - C6, D2 = Hy - C1 - C3 - C5.
    IntMatrix m(11, 11);
    m(0, 0) = 1;                                // Hx in D1
    m(3, 0) = -1;
    m(5, 0) = -1;
    m(7, 0) = -1;
    m(1, 1) = 1;                                // Hy in D2
    m(2, 1) = -1;
    m(4, 1) = -1;
    m(6, 1) = -1;
    for (std::size_t j = 2; j < 11; ++j) m(j, j) = 1;  // C, Ct columns are basis vectors
    return m;
}

PicLattice paper_ex1_h_basis() { return PicLattice::p1p1(9); }

IsometryCandidate paper_ex1() {
    PicLattice h_basis = paper_ex1_h_basis();
    PicLattice L = change_basis(h_basis, paper_ex1_basis_change());

    // Lattice action of the mapping in the basis (D1, D2, C1..C6, Ct1..Ct3).
    IntMatrix phi = from_rows({
        {0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1},
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
        {0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1},
        {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1},
        {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1},
        {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    });

    auto d = [&](std::initializer_list<long> v) { return L.cls(std::vector<long>(v)); };
    ClassVector d1 = d({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    ClassVector d2 = d({0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    std::vector<ClassVector> c, ct;
    for (std::size_t i = 0; i < 6; ++i) c.push_back(L.basis_vector(2 + i));
    for (std::size_t i = 0; i < 3; ++i) ct.push_back(L.basis_vector(8 + i));
    ClassVector hx = d({1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0});
    ClassVector hy = d({0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0});

    // Curve motion: D1 <-> D2, the entry curve {y=3a} feeds the C-chain which
    // exits through {x=-3a}, and {y=-3a} feeds the Ct-chain exiting through
    // {x=3a}.
    std::vector<std::pair<ClassVector, ClassVector>> motion;
    motion.emplace_back(d1, d2);
    motion.emplace_back(d2, d1);
    motion.emplace_back(hy - ct[2], c[0]);
    for (std::size_t i = 0; i + 1 < 6; ++i) motion.emplace_back(c[i], c[i + 1]);
    motion.emplace_back(c[5], hx - ct[0]);
    motion.emplace_back(hy - c[5], ct[0]);
    for (std::size_t i = 0; i + 1 < 3; ++i) motion.emplace_back(ct[i], ct[i + 1]);
    motion.emplace_back(ct[2], hx - c[0]);

    std::vector<KnownCurve> curves;
    curves.push_back({"D1", d1, Int(-3)});
    curves.push_back({"D2", d2, Int(-3)});
    for (std::size_t i = 0; i < 6; ++i) curves.push_back({"C" + std::to_string(i + 1), c[i], Int(-1)});
    for (std::size_t i = 0; i < 3; ++i) curves.push_back({"Ct" + std::to_string(i + 1), ct[i], Int(-1)});
    curves.push_back({"y=3a", hy - ct[2], Int(-1)});
    curves.push_back({"y=-3a", hy - c[5], Int(-1)});
    curves.push_back({"x=-3a", hx - ct[0], Int(-1)});
    curves.push_back({"x=3a", hx - c[0], Int(-1)});
    L.attach_curves(curves);

    IsometryCandidate cand(L, phi);
    // Rebind the motion classes to the lattice copy held by the candidate.
    std::vector<std::pair<ClassVector, ClassVector>> rebound;
    for (auto& [s, t] : motion)
        rebound.emplace_back(cand.lattice().cls(s.coords), cand.lattice().cls(t.coords));
    cand.set_curve_motion(std::move(rebound));
    cand.verify();
    return cand;
}

IsometryCandidate coxeter_e10() {
    PicLattice L = PicLattice::geometric(10);
    const std::size_t n = 11;
    // Simple roots of the rank-10 reflection lattice inside Z^(1,10).
    std::vector<std::vector<long>> roots;
    roots.push_back({1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0});
    for (std::size_t i = 1; i < 10; ++i) {
        std::vector<long> r(n, 0);
        r[i] = 1;
        r[i + 1] = -1;
        roots.push_back(r);
    }
    IntMatrix prod = IntMatrix::identity(n);
    for (const auto& root_coords : roots) {
        ClassVector alpha = L.cls(root_coords);
        IntMatrix refl(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            ClassVector ej = L.basis_vector(j);
            ClassVector img = ej + alpha * L.pair(ej, alpha);
            for (std::size_t i = 0; i < n; ++i) refl(i, j) = img.coords[i];
        }
        prod = prod * refl;
    }
    return make_verified(L, prod);
}

IsometryCandidate coxeter_e10_padded() {
    IsometryCandidate base = coxeter_e10();
    const std::size_t n = 12;
    PicLattice L = PicLattice::geometric(11);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < 11; ++i)
        for (std::size_t j = 0; j < 11; ++j) m(i, j) = base.matrix()(i, j);
    m(11, 11) = 1;
    return make_verified(L, m);
}

IntMatrix halphen_a2_matrix() {
    return from_rows({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}});
}

IntMatrix e8_affine_matrix() {
    // Nodes 0-7 form the E8 chain with the branch at node 4 (counting the leg
    // lengths 5, 2, 1 from the trivalent node), node 8 is the affine node.
    //
    //   0-1-2-3-4-5-6-8   with 7 attached to 2      (labels permuted freely;
    // the recognizer works up to simultaneous permutation)
    IntMatrix m(9, 9);
    auto edge = [&](std::size_t a, std::size_t b) {
        m(a, b) = 1;
        m(b, a) = 1;
    };
    for (std::size_t i = 0; i < 9; ++i) m(i, i) = -2;
    edge(0, 1);
    edge(1, 2);
    edge(2, 3);
    edge(3, 4);
    edge(4, 5);
    edge(5, 6);
    edge(6, 8);
    edge(2, 7);
    return m;
}

MappingSpec qp13point_mapping() {
    MappingSpec s;
    s.variables = {"x", "y"};
    s.parameters = {"a"};
    s.components = {"y", "((y + 3*a)*x - 2*a*y) / (y - 3*a)"};
    s.form = "three_point";
    return s;
}

MappingSpec qp13point_nonautonomous_mapping() {
    MappingSpec s;
    s.variables = {"x", "y"};
    s.parameters = {"a", "alpha"};
    s.components = {"y",
                    "((y + 3*a - 2*alpha)*x - 2*a*y - 14*alpha*a) / (y - 3*a - 2*alpha)"};
    s.step_rule = {{"a", "a + alpha"}};
    s.form = "three_point";
    return s;
}

MappingSpec hietarinta_viallet_mapping() {
    MappingSpec s;
    s.variables = {"x", "y"};
    s.parameters = {"a"};
    s.components = {"y", "-x + y + a/y^2"};
    s.form = "three_point";
    return s;
}

std::vector<std::string> names() {
    return {"paper-ex1", "paper-ex2.1", "hietarinta-viallet", "coxeter-e10", "halphen-a2"};
}

}  // namespace fixtures
}  // namespace picdyn
