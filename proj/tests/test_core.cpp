#include "doctest.h"
#include "fixtures.hpp"
#include "trilie/core.hpp"

#include <stdexcept>

using namespace trilie;

TEST_SUITE("core") {

TEST_CASE("pair and triple enumeration round-trips") {
    for (std::size_t n : {2u, 3u, 4u, 6u, 7u}) {
        for (std::size_t r = 0; r < pair_count(n); ++r) {
            auto [i, j] = pair_unrank(n, r);
            CHECK(i < j);
            CHECK(pair_rank(n, i, j) == r);
        }
        for (std::size_t r = 0; r < triple_count(n); ++r) {
            auto [i, j, k] = triple_unrank(n, r);
            CHECK(i < j);
            CHECK(j < k);
            CHECK(triple_rank(n, i, j, k) == r);
        }
    }
}

TEST_CASE("bracket3 resolves permutation signs and repeats") {
    auto A = fixtures::simple4();
    auto e = [&](std::size_t i) { return basis_vec("g", 4, i); };

    auto v = bracket3(A, e(0), e(1), e(2));
    CHECK(v.a[3] == 1);
    // odd permutation flips the sign: [x2,x1,x3] = -x4
    v = bracket3(A, e(1), e(0), e(2));
    CHECK(v.a[3] == -1);
    // repeated argument vanishes
    v = bracket3(A, e(0), e(0), e(2));
    CHECK(is_zero(v.a));
    // even (cyclic) permutation keeps the sign
    v = bracket3(A, e(2), e(0), e(1));
    CHECK(v.a[3] == 1);
}

TEST_CASE("bracket3 is multilinear") {
    auto A = fixtures::simple4();
    Vec x{"g", {Scalar(2), Scalar(-1), Scalar(0), Scalar(3)}};
    Vec y{"g", {Scalar(1), Scalar(1), Scalar(-2), Scalar(0)}};
    Vec z{"g", {Scalar(0), Scalar(5), Scalar(1), Scalar(-1)}};
    Vec xs = x;
    for (auto& c : xs.a) c *= Scalar(7, 3);
    auto lhs = bracket3(A, xs, y, z);
    auto rhs = bracket3(A, x, y, z);
    for (auto& c : rhs.a) c *= Scalar(7, 3);
    CHECK(lhs.a == rhs.a);
}

TEST_CASE("bracket3 rejects vectors from another space") {
    auto A = fixtures::simple4();
    Vec wrong{"h", {Scalar(1), Scalar(0), Scalar(0), Scalar(0)}};
    CHECK_THROWS_AS(bracket3(A, wrong, basis_vec("g", 4, 1), basis_vec("g", 4, 2)),
                    std::invalid_argument);
}

TEST_CASE("simple 4-dim algebra satisfies the fundamental identity") {
    auto A = fixtures::simple4();
    auto e = [&](std::size_t i) { return basis_vec("g", 4, i); };
    CHECK(is_zero(fi_defect(A, e(0), e(1), e(2), e(3), e(0)).a));
    CHECK(is_three_lie(A).pass);
}

TEST_CASE("abelian and degenerate dimensions are 3-Lie") {
    CHECK(is_three_lie(make_three_lie("a", {})).pass);
    CHECK(is_three_lie(make_three_lie("a", {"e1"})).pass);
    CHECK(is_three_lie(make_three_lie("a", {"e1", "e2", "e3", "e4", "e5"})).pass);
}

TEST_CASE("scaling one diagonal structure constant keeps the identity") {
    // the whole diagonal family on 4 generators is 3-Lie; this guards the
    // scan against a false positive
    auto A = fixtures::simple4();
    A.c[triple_rank(4, 0, 1, 2)][3] = 2;
    CHECK(is_three_lie(A).pass);
}

TEST_CASE("a genuinely failing bracket is caught with its first witness") {
    // [x1,x2,x3] = x4 and [x1,x2,x4] = x1 violate the identity
    auto A = make_three_lie("g", {"x1", "x2", "x3", "x4"});
    A.c[triple_rank(4, 0, 1, 2)][3] = 1;
    A.c[triple_rank(4, 0, 1, 3)][0] = 1;
    auto v = is_three_lie(A);
    REQUIRE_FALSE(v.pass);
    CHECK(v.witness == std::array<std::size_t, 5>{0, 1, 1, 2, 3});
    std::vector<Scalar> want(4, Scalar(0));
    want[3] = -1;
    CHECK(v.defect == want);
}

TEST_CASE("leibniz defect and scan") {
    auto L = make_leibniz("s", {"e1", "e2"});
    L.b[0 * 2 + 1][0] = 1;  // [e1,e2] = e1
    L.b[1 * 2 + 0][0] = 1;  // [e2,e1] = e1
    auto v = is_leibniz(L);
    REQUIRE_FALSE(v.pass);
    CHECK(v.witness == std::array<std::size_t, 3>{0, 1, 1});
    std::vector<Scalar> want(2, Scalar(0));
    want[0] = -2;
    CHECK(v.defect == want);

    CHECK(is_leibniz(make_leibniz("s", {"e1", "e2", "e3"})).pass);
}

TEST_CASE("fundamental algebra of the simple algebra") {
    auto A = fixtures::simple4();
    auto F = fundamental_leibniz(A);
    CHECK(F.dim == 6);
    CHECK(F.names[0] == "x1^x2");
    CHECK(is_leibniz(F).pass);

    // [x1^x2, x3^x4] = x4^x4 + x3^x3 = 0
    CHECK(is_zero(basis_bracket2(F, pair_rank(4, 0, 1), pair_rank(4, 2, 3))));
    // [x1^x2, x1^x3] = x1^x4
    const auto& row = basis_bracket2(F, pair_rank(4, 0, 1), pair_rank(4, 0, 2));
    std::vector<Scalar> want(6, Scalar(0));
    want[pair_rank(4, 0, 3)] = 1;
    CHECK(row == want);

    CHECK(is_leibniz(fundamental_leibniz(make_three_lie("a", {"e1", "e2", "e3"}))).pass);
}

TEST_CASE("fundamental algebras of random 3-dim brackets stay Leibniz") {
    fixtures::SplitMix64 rng(0x3117);
    for (int t = 0; t < 25; ++t) {
        auto A = fixtures::random_dim3(rng, "g", "e", -3, 3);
        CHECK(is_three_lie(A).pass);
        CHECK(is_leibniz(fundamental_leibniz(A)).pass);
    }
}

TEST_CASE("adjoint left and right multiplications are derivations") {
    auto F = fundamental_leibniz(fixtures::simple4());
    for (std::size_t i = 0; i < F.dim; ++i) {
        LinearMap adl = zero_map(F.space, F.dim, F.space, F.dim);
        LinearMap adr = zero_map(F.space, F.dim, F.space, F.dim);
        for (std::size_t j = 0; j < F.dim; ++j) {
            adl.cols[j] = basis_bracket2(F, i, j);
            adr.cols[j] = basis_bracket2(F, j, i);
        }
        CHECK(is_left_derivation(F, adl).pass);
        CHECK(is_right_derivation(F, adr).pass);
    }
}

TEST_CASE("identity map fails both derivation laws on a nonzero bracket") {
    auto F = fundamental_leibniz(fixtures::simple4());
    auto I = identity_map(F.space, F.dim);
    auto vl = is_left_derivation(F, I);
    REQUIRE_FALSE(vl.pass);
    // first basis pair with nonzero bracket: (x1^x2, x1^x3), defect -x1^x4
    CHECK(vl.witness == std::array<std::size_t, 2>{0, 1});
    std::vector<Scalar> want(6, Scalar(0));
    want[pair_rank(4, 0, 3)] = -1;
    CHECK(vl.defect == want);
    CHECK_FALSE(is_right_derivation(F, I).pass);

    CHECK(is_left_derivation(F, zero_map(F.space, F.dim, F.space, F.dim)).pass);
    CHECK(is_right_derivation(F, zero_map(F.space, F.dim, F.space, F.dim)).pass);
}

TEST_CASE("morphism check") {
    auto A = fixtures::simple4();
    CHECK(is_morphism3(identity_map("g", 4), A, A).pass);
    CHECK(is_morphism3(zero_map("g", 4, "g", 4), A, A).pass);

    // x4 -> 2 x4 breaks [x1,x2,x3] = x4
    auto f = identity_map("g", 4);
    f.cols[3][3] = 2;
    auto v = is_morphism3(f, A, A);
    REQUIRE_FALSE(v.pass);
    CHECK(v.witness == std::array<std::size_t, 3>{0, 1, 2});
    std::vector<Scalar> want(4, Scalar(0));
    want[3] = 1;  // f[x1,x2,x3] = 2x4, [fx1,fx2,fx3] = x4
    CHECK(v.defect == want);
}

}  // TEST_SUITE
