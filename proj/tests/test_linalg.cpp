#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picdyn/linalg.hpp"

#include <random>

using namespace picdyn;

TEST_CASE("rational elimination") {
    RatMatrix m{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(rank(m) == 1);
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] * 1 + k[0][1] * 2 == 0);

    RatMatrix a{{Rat(2), Rat(1)}, {Rat(1), Rat(3)}};
    auto x = solve(a, std::vector<Rat>{Rat(5), Rat(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(1));
    CHECK((*x)[1] == Rat(3));
    CHECK(det(a) == Rat(5));
    RatMatrix ainv = inverse(a);
    CHECK(ainv * a == RatMatrix::identity(2));
}

TEST_CASE("bareiss determinant matches rational determinant") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + trial % 6;
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Int(d(rng));
        CHECK(Rat(det(m)) == det(m.cast<Rat>()));
    }
}

TEST_CASE("unimodular inverse") {
    IntMatrix m{{Int(1), Int(2)}, {Int(0), Int(1)}};
    IntMatrix inv = unimodular_inverse(m);
    CHECK(m * inv == IntMatrix::identity(2));
}

TEST_CASE("signature of diagonal and hyperbolic forms") {
    IntMatrix g{{Int(1), Int(0), Int(0)}, {Int(0), Int(-1), Int(0)}, {Int(0), Int(0), Int(-1)}};
    auto s = signature(g);
    CHECK(s.positive == 1);
    CHECK(s.negative == 2);
    CHECK(s.zero == 0);

    // hyperbolic plane
    IntMatrix h{{Int(0), Int(1)}, {Int(1), Int(0)}};
    s = signature(h);
    CHECK(s.positive == 1);
    CHECK(s.negative == 1);

    IntMatrix z(2, 2);
    s = signature(z);
    CHECK(s.zero == 2);
}

TEST_CASE("integer kernel is saturated") {
    // kernel of (2 4 6) over Z: rank 2; containing e.g. (3,0,-1) and (2,-1,0)
    IntMatrix m(1, 3);
    m(0, 0) = 2;
    m(0, 1) = 4;
    m(0, 2) = 6;
    IntMatrix k = integer_kernel(m);
    REQUIRE(k.cols() == 2);
    // (1,1,-1) lies in the kernel and must be an integer combination of columns.
    RatMatrix kr = k.cast<Rat>();
    auto sol = solve(kr, std::vector<Rat>{Rat(1), Rat(1), Rat(-1)});
    REQUIRE(sol.has_value());
    for (const auto& c : *sol) CHECK(is_integer(c));
}

TEST_CASE("complete_to_unimodular") {
    std::vector<Int> v{Int(6), Int(10), Int(15)};
    CHECK(content(v) == 1);
    IntMatrix u = complete_to_unimodular(v);
    Int d = det(u);
    CHECK((d == 1 || d == -1));
    for (std::size_t i = 0; i < 3; ++i) CHECK(u(i, 0) == v[i]);
}
