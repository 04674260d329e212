#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picdyn/fixtures.hpp"
#include "picdyn/growth.hpp"
#include "random_isometries.hpp"

using namespace picdyn;

namespace {

IntPoly ip(std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long x : coeffs) c.emplace_back(x);
    return IntPoly(std::move(c));
}

const IntPoly lehmer = ip({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});

}  // namespace

TEST_CASE("classify_number worked examples") {
    CHECK(classify_number(ip({1, -3, 1})) == NumberType::ReciprocalQuadratic);
    CHECK(classify_number(lehmer) == NumberType::Salem);
    CHECK(classify_number(ip({-2, 1})) == NumberType::Pisot);
    CHECK(classify_number(ip({-1, -1, 1})) == NumberType::Pisot);      // golden ratio
    CHECK(classify_number(ip({-1, -1, 0, 1})) == NumberType::Pisot);   // plastic number
    CHECK(classify_number(ip({-1, 1})) == NumberType::RootOfUnity);
    CHECK(classify_number(ip({1, 0, -1, 0, 1})) == NumberType::RootOfUnity);  // Phi_12
    CHECK(classify_number(ip({-2, 0, 1})) == NumberType::Other);       // sqrt(2)
    CHECK(classify_number(ip({-1, 1}) * ip({1, -3, 1})) == NumberType::ReciprocalQuadratic);
    CHECK_THROWS(classify_number(ip({1, 2})));  // not monic
}

TEST_CASE("identity is bounded with period 1") {
    PicLattice L = PicLattice::geometric(10);
    auto c = make_verified(L, IntMatrix::identity(11));
    auto r = classify(c);
    CHECK(r.kind == GrowthKind::Bounded);
    CHECK(r.period == 1);
}

TEST_CASE("basis permutations are bounded with the permutation order") {
    PicLattice L = PicLattice::geometric(4);
    // cycle e1 -> e2 -> e3 -> e1, fix e4
    IntMatrix m(5, 5);
    m(0, 0) = 1;
    m(2, 1) = 1;
    m(3, 2) = 1;
    m(1, 3) = 1;
    m(4, 4) = 1;
    auto c = make_verified(L, m);
    auto r = classify(c);
    CHECK(r.kind == GrowthKind::Bounded);
    CHECK(r.period == 3);
}

TEST_CASE("paper example classifies quadratic with zero entropy") {
    auto c = fixtures::paper_ex1();
    auto r = classify(c);
    CHECK(r.kind == GrowthKind::Quadratic);
    CHECK(r.coefficient > 0);
    // zero entropy: no non-cyclotomic factor
    for (const auto& [f, mult] : r.char_poly_factors) {
        (void)mult;
        CHECK(cyclotomic_order(f).has_value());
    }
    // eigenvalue 1 carries J3 + J1: kernel dims 2, 3, 4 under powers
    CHECK(r.jordan_summary[0] == 9);
    CHECK(r.jordan_summary[1] == 8);
    CHECK(r.jordan_summary[2] == 7);
}

TEST_CASE("coxeter element is exponential with Lehmer's Salem number") {
    auto c = fixtures::coxeter_e10();
    auto r = classify(c);
    REQUIRE(r.kind == GrowthKind::Exponential);
    REQUIRE(r.lambda.has_value());
    CHECK(r.lambda->min_poly() == lehmer);
    CHECK(r.lambda_type == GrowthReport::LambdaType::Salem);
    // lambda isolated within (1.17, 1.18)
    AlgebraicNumber lam = *r.lambda;
    lam.refine(Rat(1, 1000));
    CHECK(lam > Rat(117, 100));
    CHECK(lam < Rat(118, 100));
}

TEST_CASE("degree sequences") {
    PicLattice L = PicLattice::geometric(3);
    auto id = make_verified(L, IntMatrix::identity(4));
    auto seq = degree_sequence(id, L.anchor(), L.anchor(), 5);
    CHECK(seq == std::vector<Int>{Int(1), Int(1), Int(1), Int(1), Int(1), Int(1)});

    auto c = fixtures::paper_ex1();
    const auto& D = c.lattice();
    ClassVector h = D.anchor();
    auto dseq = degree_sequence(c, h, h, 3);
    CHECK(dseq[0] == D.pair(h, h));
}

TEST_CASE("quadratic coefficient against the degree sequence") {
    auto c = fixtures::paper_ex1();
    const auto& L = c.lattice();
    ClassVector h = L.anchor();  // Hx + Hy in the D-basis
    Rat coeff = quadratic_coefficient(c, h);
    CHECK(coeff > 0);

    auto seq = degree_sequence(c, h, h, 12);
    // |deg_n - c n^2| stays linearly bounded.
    Rat bound_c(0);
    for (std::size_t n = 1; n <= 12; ++n) {
        Rat err = abs(Rat(seq[n]) - coeff * Rat(static_cast<long>(n * n)));
        Rat ratio = err / Rat(static_cast<long>(n));
        if (ratio > bound_c) bound_c = ratio;
    }
    CHECK(bound_c <= 8);  // computed headroom; the actual max ratio is small

    // doubling h multiplies the coefficient by 4
    CHECK(quadratic_coefficient(c, h * Int(2)) == coeff * 4);

    // identity input is rejected
    PicLattice G = PicLattice::geometric(10);
    auto id = make_verified(G, IntMatrix::identity(11));
    CHECK_THROWS_AS(quadratic_coefficient(id, G.anchor()), NotQuadraticError);
}

TEST_CASE("quadratic coefficient is chain independent") {
    auto c = fixtures::paper_ex1();
    const auto& L = c.lattice();
    auto chain = rational_jordan_chain(c);
    // Shift v3 by kernel elements: v3' = v3 + t*v1 gives the same coefficient.
    std::vector<Rat> v3b = chain.v3;
    for (std::size_t i = 0; i < v3b.size(); ++i) v3b[i] += Rat(3) * chain.v1[i];
    std::vector<Rat> hq(L.rank());
    for (std::size_t i = 0; i < L.rank(); ++i) hq[i] = Rat(L.anchor().coords[i]);
    Rat c1 = L.pair(hq, chain.v1) * L.pair(hq, chain.v1) / (2 * L.pair(chain.v3, chain.v1));
    Rat c2 = L.pair(hq, chain.v1) * L.pair(hq, chain.v1) / (2 * L.pair(v3b, chain.v1));
    CHECK(c1 == c2);
    CHECK(c1 == quadratic_coefficient(c, L.anchor()));
}

TEST_CASE("exponential leading coefficient matches degree ratios") {
    auto c = fixtures::coxeter_e10();
    const auto& L = c.lattice();
    auto co = exp_leading_coefficient(c, L.anchor(), Rat(1, Int(1000000000)));
    CHECK(co.enclosure_lo > 0);

    // The unit-circle part of the spectrum contributes a bounded term, so
    // |deg_n - c lambda^n| stays below a fixed constant; 12 has headroom over
    // the observed maximum (~9.3) on this fixture.
    auto seq = degree_sequence(c, L.anchor(), L.anchor(), 20);
    AlgebraicNumber lam(co.min_poly, RootInterval{Rat(117, 100), Rat(118, 100)});
    lam.refine(Rat(1, Int("1000000000000")));
    Rat llo = lam.interval().lo, lhi = lam.interval().hi;
    Rat plo(1), phi(1);
    for (std::size_t n = 0; n <= 20; ++n) {
        CHECK(Rat(seq[n]) - co.enclosure_hi * phi >= -12);
        CHECK(Rat(seq[n]) - co.enclosure_lo * plo <= 12);
        plo *= llo;
        phi *= lhi;
    }

    auto quad = fixtures::paper_ex1();
    CHECK_THROWS_AS(exp_leading_coefficient(quad, quad.lattice().anchor(), Rat(1, 100)),
                    NotExponentialError);
}

TEST_CASE("inversion invariance of classification") {
    for (auto c : {fixtures::paper_ex1(), fixtures::coxeter_e10()}) {
        auto r = classify(c);
        auto rinv = classify(inverse(c));
        CHECK(r.kind == rinv.kind);
        if (r.kind == GrowthKind::Bounded) CHECK(r.period == rinv.period);
        if (r.kind == GrowthKind::Exponential) {
            REQUIRE(rinv.lambda.has_value());
            CHECK(r.lambda->min_poly() == rinv.lambda->min_poly());
        }
    }
}

TEST_CASE("rank bounds on growth kinds") {
    std::mt19937_64 rng(314159);
    int quadratic_seen = 0, exponential_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t rank = 8 + trial % 7;  // 8..14
        PicLattice L = PicLattice::geometric(rank - 1);
        auto c = testing::random_isometry(L, rng);
        auto r = classify(c);
        // trichotomy totality: some verdict is always produced
        CHECK((r.kind == GrowthKind::Bounded || r.kind == GrowthKind::Quadratic ||
               r.kind == GrowthKind::Exponential || r.kind == GrowthKind::NotRealizable));
        if (rank < 10)
            CHECK((r.kind == GrowthKind::Bounded || r.kind == GrowthKind::NotRealizable));
        if (rank == 10)
            CHECK(r.kind != GrowthKind::Exponential);
        if (r.kind == GrowthKind::Quadratic) ++quadratic_seen;
        if (r.kind == GrowthKind::Exponential) ++exponential_seen;
        // inversion invariance on the cheap cases
        if (trial % 10 == 0) {
            auto rinv = classify(make_verified(L, unimodular_inverse(c.matrix())));
            CHECK(rinv.kind == r.kind);
        }
    }
    // the generator reaches the interesting kinds
    CHECK(quadratic_seen > 0);
    CHECK(exponential_seen > 0);
}

TEST_CASE("bounded periods are minimal") {
    std::mt19937_64 rng(2718);
    PicLattice L = PicLattice::geometric(7);
    int bounded = 0;
    for (int trial = 0; trial < 40 && bounded < 12; ++trial) {
        auto c = testing::random_isometry(L, rng, 1, 6);
        auto r = classify(c);
        if (r.kind != GrowthKind::Bounded) continue;
        ++bounded;
        unsigned long period = r.period.get_ui();
        CHECK(matrix_power(c.matrix(), period) == IntMatrix::identity(L.rank()));
        for (unsigned long d = 1; d < period; ++d)
            if (period % d == 0)
                CHECK(matrix_power(c.matrix(), d) != IntMatrix::identity(L.rank()));
    }
    CHECK(bounded > 0);
}
