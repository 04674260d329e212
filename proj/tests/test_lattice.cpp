#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picdyn/fixtures.hpp"
#include "picdyn/lattice.hpp"

#include <random>

using namespace picdyn;

TEST_CASE("geometric lattice presets") {
    auto check_kk = [](std::size_t r, long expect) {
        PicLattice L = PicLattice::geometric(r);
        CHECK(L.rank() == r + 1);
        CHECK(L.pair(L.canonical(), L.canonical()) == expect);
    };
    check_kk(0, 9);
    check_kk(9, 0);
    check_kk(10, -1);
    PicLattice L = PicLattice::geometric(10);
    CHECK(L.rank() == 11);
    CHECK(L.pair(L.anchor(), L.anchor()) == 1);
    CHECK(L.pair(L.anchor(), L.canonical()) == -3);
}

TEST_CASE("p1p1 lattice presets") {
    PicLattice L8 = PicLattice::p1p1(8);
    CHECK(L8.pair(L8.canonical(), L8.canonical()) == 0);
    PicLattice L = PicLattice::p1p1(9);
    CHECK(L.rank() == 11);
    CHECK(L.pair(L.canonical(), L.canonical()) == -1);
    CHECK(L.pair(L.anchor(), L.anchor()) == 2);

    // v1 = 3Hx + 3Hy - C1 - ... - C6 - 2Ct1 - 2Ct2 - 2Ct3 is isotropic.
    ClassVector v1 = L.cls({3, 3, -1, -1, -1, -1, -1, -1, -2, -2, -2});
    CHECK(L.pair(v1, v1) == 0);
    CHECK(L.pair(v1, L.canonical()) == 0);
}

TEST_CASE("pair values on the geometric basis") {
    PicLattice L = PicLattice::geometric(2);
    CHECK(L.pair(L.basis_vector(0), L.basis_vector(0)) == 1);
    CHECK(L.pair(L.basis_vector(1), L.basis_vector(1)) == -1);
    CHECK(L.pair(L.basis_vector(1), L.basis_vector(2)) == 0);
}

TEST_CASE("pair is bilinear and symmetric") {
    PicLattice L = PicLattice::geometric(5);
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<long> a(6), b(6), c(6);
        for (auto& x : a) x = d(rng);
        for (auto& x : b) x = d(rng);
        for (auto& x : c) x = d(rng);
        ClassVector u = L.cls(a), v = L.cls(b), w = L.cls(c);
        CHECK(L.pair(u, v) == L.pair(v, u));
        CHECK(L.pair(u + v, w) == L.pair(u, w) + L.pair(v, w));
        Int s(d(rng));
        CHECK(L.pair(u * s, w) == s * L.pair(u, w));
    }
}

TEST_CASE("primitivize") {
    PicLattice L = PicLattice::geometric(2);
    CHECK(primitivize(L.cls({2, -4, 6})) == L.cls({1, -2, 3}));
    CHECK(primitivize(L.cls({1, 0, 0})) == L.cls({1, 0, 0}));
    PicLattice M = PicLattice::geometric(1);
    CHECK(primitivize(M.cls({-3, -3})) == M.cls({-1, -1}));
    CHECK_THROWS_AS(primitivize(L.zero()), Error);
}

TEST_CASE("lattice validation rejects bad custom data") {
    // Non-unimodular
    IntMatrix g{{Int(2), Int(0)}, {Int(0), Int(-1)}};
    CHECK_THROWS_AS(PicLattice::custom(g, {Int(-3), Int(1)}, {Int(1), Int(0)}), InvalidLatticeError);
    // Wrong signature
    IntMatrix g2{{Int(1), Int(0)}, {Int(0), Int(1)}};
    CHECK_THROWS_AS(PicLattice::custom(g2, {Int(-3), Int(1)}, {Int(1), Int(0)}), InvalidLatticeError);
    // Asymmetric
    IntMatrix g3{{Int(1), Int(1)}, {Int(0), Int(-1)}};
    CHECK_THROWS_AS(PicLattice::custom(g3, {Int(-3), Int(1)}, {Int(1), Int(0)}), InvalidLatticeError);

    // Declared self-intersection is validated.
    PicLattice L = PicLattice::geometric(2);
    CHECK_THROWS_AS(L.attach_curves({{"bad", L.cls({0, 1, 0}), Int(-2)}}), InvalidLatticeError);
}

TEST_CASE("change of basis to the D-presentation") {
    PicLattice H = fixtures::paper_ex1_h_basis();
    IntMatrix m = fixtures::paper_ex1_basis_change();
    PicLattice D = change_basis(H, m);

    CHECK(D.pair(D.basis_vector(0), D.basis_vector(0)) == -3);  // D1^2
    CHECK(D.pair(D.basis_vector(0), D.basis_vector(1)) == 1);   // D1.D2
    CHECK(D.canonical() ==
          D.cls({-2, -2, -1, -1, -1, -1, -1, -1, 1, 1, 1}));
    CHECK(D.anchor() == D.cls({1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0}));

    // Identity change keeps everything.
    PicLattice same = change_basis(H, IntMatrix::identity(11));
    CHECK(same.gram() == H.gram());
    CHECK(same.canonical().coords == H.canonical().coords);

    // Round trip restores the gram matrix.
    PicLattice back = change_basis(D, unimodular_inverse(m));
    CHECK(back.gram() == H.gram());

    // Pairings of corresponding vectors are unchanged.
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-5, 5);
    IntMatrix minv = unimodular_inverse(m);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<long> a(11), b(11);
        for (auto& x : a) x = d(rng);
        for (auto& x : b) x = d(rng);
        ClassVector u = H.cls(a), v = H.cls(b);
        ClassVector u2 = change_basis_vector(H, D, m, u), v2 = change_basis_vector(H, D, m, v);
        CHECK(H.pair(u, v) == D.pair(u2, v2));
        (void)minv;
    }
}

TEST_CASE("isotropic restriction is negative semidefinite with kernel spanned by v") {
    // For isotropic v != 0 the form on v-perp has signature (0, rank-2, 1).
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 3 + trial % 8;
        PicLattice L = PicLattice::geometric(r);
        // Random isotropic vector: sample until pair(v, v) = 0, v != 0.
        std::vector<long> c(r + 1);
        for (int attempt = 0; attempt < 2000; ++attempt) {
            for (auto& x : c) x = d(rng);
            ClassVector v = L.cls(c);
            if (v.is_zero() || L.pair(v, v) != 0) continue;
            IntMatrix perp = integer_kernel(IntMatrix(1, r + 1));
            // basis of v-perp: kernel of the single row (G v)^T
            IntMatrix row(1, r + 1);
            auto gv = L.gram() * v.coords;
            for (std::size_t i = 0; i <= r; ++i) row(0, i) = gv[i];
            IntMatrix b = integer_kernel(row);
            IntMatrix q(b.cols(), b.cols());
            for (std::size_t i = 0; i < b.cols(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    q(i, j) = L.pair(L.cls(b.col(i)), L.cls(b.col(j)));
            Signature s = signature(q);
            CHECK(s.positive == 0);
            CHECK(s.zero == 1);
            CHECK(s.negative == b.cols() - 1);
            (void)perp;
            break;
        }
    }
}
