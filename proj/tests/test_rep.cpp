#include "doctest.h"
#include "fixtures.hpp"
#include "trilie/rep.hpp"

using namespace trilie;

namespace {

// rho(x1,x2) = identity on a 1-dim module, everything else zero; this is not
// a representation of the simple algebra and both axioms can see it
Representation broken_rep() {
    auto R = make_representation(fixtures::simple4(), "V", {"u1"});
    R.rho[pair_rank(4, 0, 1)][0][0] = 1;
    return R;
}

}  // namespace

TEST_SUITE("rep") {

TEST_CASE("adjoint action of the simple algebra satisfies both axioms") {
    auto R = adjoint_rep(fixtures::simple4());
    CHECK(R.mdim == 4);
    CHECK(R.module_names == R.alg.names);
    auto v = rep_defects(R);
    CHECK(v.pass);

    // and the semidirect bracket it induces is again a valid ternary algebra
    auto S = semidirect_product(R);
    CHECK(S.dim == 8);
    CHECK(is_three_lie(S).pass);
}

TEST_CASE("rho_basis resolves pair signs, rho_apply is multilinear") {
    auto R = adjoint_rep(fixtures::simple4());
    auto v = basis_vec("g", 4, 2).a;
    auto fwd = rho_basis(R, 0, 1, v);
    auto bwd = rho_basis(R, 1, 0, v);
    for (std::size_t t = 0; t < 4; ++t) CHECK(fwd[t] == -bwd[t]);
    CHECK(is_zero(rho_basis(R, 2, 2, v)));

    // for the adjoint, rho(x,y)v is just the bracket
    std::vector<Scalar> x{Scalar(1), Scalar(-2), Scalar(0), Scalar(3)};
    std::vector<Scalar> y{Scalar(0), Scalar(1), Scalar(5), Scalar(-1)};
    std::vector<Scalar> z{Scalar(2), Scalar(0), Scalar(1), Scalar(1)};
    auto lhs = rho_apply(R, x, y, z);
    auto rhs = bracket3(R.alg, Vec{"g", x}, Vec{"g", y}, Vec{"g", z});
    CHECK(lhs == rhs.a);
}

TEST_CASE("a non-representation is caught with the first failing tuple") {
    auto R = broken_rep();
    auto v = rep_defects(R);
    CHECK_FALSE(v.pass);
    CHECK(v.rule == "product-rule");
    CHECK(v.witness == std::array<std::size_t, 4>{0, 2, 0, 3});
    CHECK(v.column == 0);
    CHECK(v.defect == std::vector<Scalar>{Scalar(-1)});

    // the equivalent route through the semidirect bracket agrees
    CHECK_FALSE(is_three_lie(semidirect_product(R)).pass);
}

TEST_CASE("coboundary of a degree-0 map") {
    auto R = adjoint_rep(fixtures::simple4());
    auto a = zero_cochain(R, 0);
    a.table[0][0] = 1;  // a(x1) = x1, all other basis vectors to zero

    auto d = coboundary(R, a);
    CHECK(d.degree == 1);
    auto row = [&](std::size_t p, std::size_t z) {
        return d.table[cochain_index(4, 1, {p}, z)];
    };
    CHECK(row(pair_rank(4, 0, 1), 2) == std::vector<Scalar>{0, 0, 0, 1});
    CHECK(row(pair_rank(4, 0, 2), 3) == std::vector<Scalar>{0, 1, 0, 0});

    // applying the differential twice kills it
    CHECK(cochain_is_zero(coboundary(R, d)));
}

TEST_CASE("the structure bracket is closed") {
    auto A = fixtures::simple4();
    auto R = adjoint_rep(A);
    CHECK(cochain_is_zero(coboundary(R, structure_cochain(A))));
}

TEST_CASE("coboundary of a degree-1 map, table spot checks") {
    auto R = adjoint_rep(fixtures::simple4());
    auto a1 = zero_cochain(R, 1);
    a1.table[cochain_index(4, 1, {pair_rank(4, 0, 1)}, 0)][0] = 1;  // a1(x1^x2, x1) = x1

    auto d = coboundary(R, a1);
    CHECK(d.degree == 2);
    std::size_t nonzero = 0;
    for (const auto& r : d.table)
        if (!is_zero(r)) ++nonzero;
    CHECK(nonzero == 22);

    auto row = [&](std::size_t p, std::size_t q, std::size_t z) {
        return d.table[cochain_index(4, 2, {p, q}, z)];
    };
    CHECK(row(0, 0, 2) == std::vector<Scalar>{0, 0, 0, -1});
    CHECK(row(0, 0, 3) == std::vector<Scalar>{0, 0, -1, 0});
    CHECK(row(0, 1, 1) == std::vector<Scalar>{0, 0, 0, 1});
    CHECK(row(0, 1, 3) == std::vector<Scalar>{0, -1, 0, 0});
    CHECK(row(0, 2, 1) == std::vector<Scalar>{0, 0, 1, 0});
    CHECK(row(0, 2, 2) == std::vector<Scalar>{0, 1, 0, 0});
    CHECK(row(0, 5, 0) == std::vector<Scalar>{0, -1, 0, 0});
    CHECK(is_zero(row(0, 1, 0)));
    CHECK(is_zero(row(1, 0, 0)));

    CHECK(cochain_is_zero(coboundary(R, d)));
}

TEST_CASE("coboundary of a degree-2 map, table spot checks") {
    auto R = adjoint_rep(fixtures::simple4());
    auto b2 = zero_cochain(R, 2);
    b2.table[cochain_index(4, 2, {0, 1}, 0)][1] = 1;  // b2(x1^x2, x1^x3, x1) = x2

    auto d = coboundary(R, b2);
    CHECK(d.degree == 3);
    std::size_t nonzero = 0;
    for (const auto& r : d.table)
        if (!is_zero(r)) ++nonzero;
    CHECK(nonzero == 28);

    auto row = [&](std::size_t p, std::size_t q, std::size_t r, std::size_t z) {
        return d.table[cochain_index(4, 3, {p, q, r}, z)];
    };
    CHECK(row(0, 1, 1, 0) == std::vector<Scalar>{0, 0, 0, 1});
    CHECK(row(0, 1, 1, 3) == std::vector<Scalar>{1, 0, 0, 0});
    CHECK(row(0, 1, 2, 2) == std::vector<Scalar>{-1, 0, 0, 0});
    CHECK(row(0, 1, 3, 3) == std::vector<Scalar>{0, -1, 0, 0});
    CHECK(row(0, 1, 4, 2) == std::vector<Scalar>{0, 1, 0, 0});
    CHECK(row(0, 1, 5, 0) == std::vector<Scalar>{1, 0, 0, 0});
}

}  // TEST_SUITE
