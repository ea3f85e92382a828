#pragma once

#include "trilie/core.hpp"

namespace trilie {

// Action of skew pairs of algebra elements on a module V: rho[r] is the
// endomorphism of V attached to the r-th canonical basis pair, stored as
// columns (rho[r][j] = image of module basis vector j). The two defining
// identities are checked by rep_defects, not enforced on construction.
struct Representation {
    ThreeLieAlgebra alg;
    std::string module;
    std::size_t mdim = 0;
    std::vector<std::string> module_names;
    std::vector<std::vector<std::vector<Scalar>>> rho;
};

Representation make_representation(ThreeLieAlgebra alg, std::string module,
                                   std::vector<std::string> module_names);

// rho(e_i, e_j) v with pair-sign resolution; zero when i == j
std::vector<Scalar> rho_basis(const Representation& R, std::size_t i, std::size_t j,
                              const std::vector<Scalar>& v);
// bilinear extension to arbitrary algebra vectors x, y
std::vector<Scalar> rho_apply(const Representation& R, const std::vector<Scalar>& x,
                              const std::vector<Scalar>& y, const std::vector<Scalar>& v);

// V = the algebra itself, rho(x,y) = [x,y,-]
Representation adjoint_rep(const ThreeLieAlgebra& A);

struct RepVerdict {
    bool pass = true;
    std::string rule;                      // "product-rule" or "bracket-rule"
    std::array<std::size_t, 4> witness{};  // algebra basis indices
    std::size_t column = 0;                // module basis vector the defect acted on
    std::vector<Scalar> defect;
};
// product rule:  [rho(x1,x2), rho(x3,x4)] = rho([x1,x2,x3],x4) + rho(x3,[x1,x2,x4]),
//   scanned over pairs i1<i2, i3<i4 and every module column;
// bracket rule:  rho(x1,[x2,x3,x4]) = rho(x3,x4)rho(x1,x2) - rho(x2,x4)rho(x1,x3)
//   + rho(x2,x3)rho(x1,x4), scanned over i1 and triples i2<i3<i4.
RepVerdict rep_defects(const Representation& R);

// 3-Lie bracket on alg + V: [x1+v1,x2+v2,x3+v3] =
//   [x1,x2,x3] + rho(x1,x2)v3 + rho(x2,x3)v1 + rho(x3,x1)v2.
// Passes is_three_lie exactly when rep_defects passes.
ThreeLieAlgebra semidirect_product(const Representation& R);

// Multilinear map on `degree` wedge-pair slots of the algebra plus one vector
// slot, valued in the module. Dense table in mixed radix: the pair ranks are
// the high digits (base pair_count(alg_dim)), the final basis index the low
// digit. Degree 0 is a plain linear map.
struct Cochain {
    std::string alg_space;
    std::size_t alg_dim = 0;
    std::string module;
    std::size_t mdim = 0;
    std::size_t degree = 0;
    std::vector<std::vector<Scalar>> table;
};

Cochain zero_cochain(const Representation& R, std::size_t degree);
std::size_t cochain_index(std::size_t alg_dim, std::size_t degree,
                          const std::vector<std::size_t>& pair_ranks, std::size_t z);
bool cochain_is_zero(const Cochain& c);
bool cochain_equal(const Cochain& a, const Cochain& b);
// acc += s * b
void cochain_add_scaled(Cochain& acc, const Cochain& b, const Scalar& s);

// the structure bracket of A as a degree-1 cochain with values in A
Cochain structure_cochain(const ThreeLieAlgebra& A);

// Degree-raising differential. With n = degree+1 output pair slots
// X_1..X_n = x_1^y_1..x_n^y_n and final argument z, the value is the sum of
//   A: sum_{j<k} (-1)^j a(..X_j^..,X_{k-1},[X_j,X_k]_F,X_{k+1}..,z)
//   B: sum_j  (-1)^j a(..X_j^.., [x_j,y_j,z])
//   C: sum_j  (-1)^{j+1} rho(x_j,y_j) a(..X_j^.., z)
//   D: (-1)^{n+1} ( rho(y_n,z) a(X_1..X_{n-1},x_n) + rho(z,x_n) a(X_1..X_{n-1},y_n) )
// where ^ marks omission and [.,.]_F is the fundamental wedge bracket.
Cochain coboundary(const Representation& R, const Cochain& a);

}  // namespace trilie
