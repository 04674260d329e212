#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picdyn/fixtures.hpp"
#include "picdyn/growth.hpp"
#include "picdyn/isometry.hpp"

#include <random>

using namespace picdyn;

namespace {

IntPoly ip(std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long x : coeffs) c.emplace_back(x);
    return IntPoly(std::move(c));
}

const IntPoly lehmer = ip({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});

}  // namespace

TEST_CASE("identity passes verification on presets") {
    for (auto L : {PicLattice::geometric(5), PicLattice::p1p1(4)}) {
        IsometryCandidate c(L, IntMatrix::identity(L.rank()));
        auto r = c.verify();
        CHECK(r.form_preserved);
        CHECK(r.canonical_preserved);
        CHECK(r.unimodular);
        CHECK(r.curve_permutation == VerificationReport::CurveCheck::NotApplicable);
        CHECK(c.is_verified());
    }
}

TEST_CASE("paper example matrix verifies with its curve motion") {
    IsometryCandidate c = fixtures::paper_ex1();
    REQUIRE(c.verification().has_value());
    CHECK(c.verification()->form_preserved);
    CHECK(c.verification()->canonical_preserved);
    CHECK(c.verification()->unimodular);
    CHECK(c.verification()->curve_permutation == VerificationReport::CurveCheck::Pass);
    CHECK(c.is_verified());
}

TEST_CASE("a single sign flip breaks form preservation") {
    IsometryCandidate good = fixtures::paper_ex1();
    IntMatrix bad = good.matrix();
    bad(2, 10) = -bad(2, 10);
    IsometryCandidate c(good.lattice(), bad);
    auto r = c.verify();
    CHECK(!r.form_preserved);
    CHECK(!c.is_verified());
    CHECK_THROWS_AS(char_poly(c), NotVerifiedError);
}

TEST_CASE("char poly of identity and of the paper matrix") {
    PicLattice L = PicLattice::geometric(2);
    IsometryCandidate id(L, IntMatrix::identity(3));
    id.verify();
    CHECK(char_poly(id) == ip({-1, 3, -3, 1}));  // (t-1)^3

    IsometryCandidate c = fixtures::paper_ex1();
    IntPoly p = char_poly(c);
    CHECK(p.degree() == 11);
    CHECK(p.leading() == 1);
    // constant term +-1
    CHECK((p.coeff(0) == 1 || p.coeff(0) == -1));
    // divisible by (t-1)^3 with an all-cyclotomic complement
    IntPoly t1 = ip({-1, 1});
    IntPoly q = exact_div(exact_div(exact_div(p, t1), t1), t1);
    auto split = strip_cyclotomic_factors(q);
    CHECK(split.residual.degree() == 0);
    // all roots on the unit circle
    auto counts = unit_disk_counts(squarefree_part(p));
    CHECK(counts.inside == 0);
    CHECK(counts.outside == 0);
}

TEST_CASE("coxeter element carries the Lehmer factor") {
    IsometryCandidate c = fixtures::coxeter_e10();
    CHECK(c.is_verified());
    IntPoly p = char_poly(c);
    CHECK(p.degree() == 11);
    CHECK(divides(lehmer, p));
    CHECK(exact_div(p, lehmer) == ip({-1, 1}));
}

TEST_CASE("power_apply basics") {
    IsometryCandidate c = fixtures::paper_ex1();
    const PicLattice& L = c.lattice();
    ClassVector v = L.cls({1, 2, 0, -1, 0, 0, 3, 0, 0, 1, 0});
    CHECK(power_apply(c, 0, v) == v);

    // {y = 3a} = Hy - Ct3 maps to C1.
    ClassVector y3a = L.cls({0, 1, 1, 0, 1, 0, 1, 0, 0, 0, -1});
    CHECK(power_apply(c, 1, y3a) == L.basis_vector(2));

    // Phi^n then Phi^-n is the identity.
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> d(-7, 7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<long> a(11);
        for (auto& x : a) x = d(rng);
        ClassVector u = L.cls(a);
        long n = 1 + trial % 9;
        CHECK(power_apply(c, -n, power_apply(c, n, u)) == u);
    }
}

TEST_CASE("verified candidates preserve pairings") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<long> d(-6, 6);
    for (auto c : {fixtures::paper_ex1(), fixtures::coxeter_e10()}) {
        const auto& L = c.lattice();
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<long> a(L.rank()), b(L.rank());
            for (auto& x : a) x = d(rng);
            for (auto& x : b) x = d(rng);
            ClassVector u = L.cls(a), v = L.cls(b);
            CHECK(L.pair(c.apply(u), c.apply(v)) == L.pair(u, v));
        }
        // Phi K = K implies Phi^-1 K = K.
        CHECK(power_apply(c, -1, L.canonical()) == L.canonical());
    }
}

TEST_CASE("char poly root multiset is closed under inversion") {
    for (auto c : {fixtures::paper_ex1(), fixtures::coxeter_e10()}) {
        IntPoly p = char_poly(c);
        // Split off (t-1)- and (t+1)-powers; the rest must be palindromic.
        IntPoly rest = p;
        for (auto lin : {ip({-1, 1}), ip({1, 1})})
            while (divides(lin, rest)) rest = exact_div(rest, lin);
        CHECK((is_palindromic(rest) || is_antipalindromic(rest)));

        // char_poly(Phi^{-1}) is the reversal up to sign.
        IntMatrix inv = unimodular_inverse(c.matrix());
        IntPoly pinv = char_poly(inv);
        IntPoly rev = p.reversed();
        if (rev.leading() != 1) rev = -rev;
        CHECK(pinv == rev);
    }
}
