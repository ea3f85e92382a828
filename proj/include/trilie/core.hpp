#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace trilie {

using Scalar = mpq_class;

// A vector tagged with the name of the space it lives in. All operations check
// space names and throw std::invalid_argument on mismatch.
struct Vec {
    std::string space;
    std::vector<Scalar> a;
};

Vec zero_vec(const std::string& space, std::size_t dim);
Vec basis_vec(const std::string& space, std::size_t dim, std::size_t i);
bool is_zero(const std::vector<Scalar>& v);
void axpy(std::vector<Scalar>& acc, const std::vector<Scalar>& v, const Scalar& s);

// Canonical enumeration of strictly increasing index pairs and triples,
// lexicographic. pair_rank(4,·): (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
std::size_t pair_count(std::size_t n);
std::size_t pair_rank(std::size_t n, std::size_t i, std::size_t j);
std::array<std::size_t, 2> pair_unrank(std::size_t n, std::size_t r);
std::size_t triple_count(std::size_t n);
std::size_t triple_rank(std::size_t n, std::size_t i, std::size_t j, std::size_t k);
std::array<std::size_t, 3> triple_unrank(std::size_t n, std::size_t r);

// Ternary bracket given by structure constants on canonical triples i<j<k.
// Skew-symmetry is a representation invariant: only canonical triples are
// stored, every other argument order is resolved by permutation sign.
struct ThreeLieAlgebra {
    std::string space;
    std::size_t dim = 0;
    std::vector<std::string> names;         // basis names, size dim
    std::vector<std::vector<Scalar>> c;     // per canonical triple, size triple_count(dim)
};

ThreeLieAlgebra make_three_lie(std::string space, std::vector<std::string> names);

// acc += w * [e_i, e_j, e_k]; repeated indices contribute nothing.
void add_basis_bracket3(const ThreeLieAlgebra& A, std::size_t i, std::size_t j, std::size_t k,
                        const Scalar& w, std::vector<Scalar>& acc);
std::vector<Scalar> basis_bracket3(const ThreeLieAlgebra& A, std::size_t i, std::size_t j,
                                   std::size_t k);

Vec bracket3(const ThreeLieAlgebra& A, const Vec& x, const Vec& y, const Vec& z);

// F = [x1,x2,[x3,x4,x5]] - [[x1,x2,x3],x4,x5] - [x3,[x1,x2,x4],x5] - [x3,x4,[x1,x2,x5]]
Vec fi_defect(const ThreeLieAlgebra& A, const Vec& x1, const Vec& x2, const Vec& x3,
              const Vec& x4, const Vec& x5);
std::vector<Scalar> fi_defect_basis(const ThreeLieAlgebra& A, std::size_t i1, std::size_t i2,
                                    std::size_t i3, std::size_t i4, std::size_t i5);

struct FiVerdict {
    bool pass = true;
    std::array<std::size_t, 5> witness{};   // first failing basis tuple, lexicographic
    std::vector<Scalar> defect;
};
FiVerdict is_three_lie(const ThreeLieAlgebra& A);

// Left Leibniz bracket as a dense table; no symmetry is assumed.
struct LeibnizAlgebra {
    std::string space;
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<std::vector<Scalar>> b;     // b[i*dim+j] = [e_i, e_j]
};

LeibnizAlgebra make_leibniz(std::string space, std::vector<std::string> names);
const std::vector<Scalar>& basis_bracket2(const LeibnizAlgebra& L, std::size_t i, std::size_t j);
Vec bracket2(const LeibnizAlgebra& L, const Vec& x, const Vec& y);

// [x,[y,z]] - [[x,y],z] - [y,[x,z]]
Vec leibniz_defect(const LeibnizAlgebra& L, const Vec& x, const Vec& y, const Vec& z);
std::vector<Scalar> leibniz_defect_basis(const LeibnizAlgebra& L, std::size_t i, std::size_t j,
                                         std::size_t k);

struct LeibnizVerdict {
    bool pass = true;
    std::array<std::size_t, 3> witness{};
    std::vector<Scalar> defect;
};
LeibnizVerdict is_leibniz(const LeibnizAlgebra& L);

// The Leibniz algebra on wedge^2 A with [X,Y] = [x1,x2,y1]^y2 + y1^[x1,x2,y2].
// Basis: canonical pairs e_i^e_j (i<j) in lexicographic order.
LeibnizAlgebra fundamental_leibniz(const ThreeLieAlgebra& A);

struct LinearMap {
    std::string dom, cod;
    std::size_t dom_dim = 0, cod_dim = 0;
    std::vector<std::vector<Scalar>> cols;  // cols[j] = image of basis vector j
};

LinearMap zero_map(std::string dom, std::size_t dom_dim, std::string cod, std::size_t cod_dim);
LinearMap identity_map(std::string space, std::size_t dim);
Vec apply(const LinearMap& f, const Vec& v);

struct PairVerdict {
    bool pass = true;
    std::array<std::size_t, 2> witness{};
    std::vector<Scalar> defect;
};
// D[x,y] = [Dx,y] + [x,Dy]
PairVerdict is_left_derivation(const LeibnizAlgebra& L, const LinearMap& D);
// D[x,y] = [x,Dy] - [y,Dx]
PairVerdict is_right_derivation(const LeibnizAlgebra& L, const LinearMap& D);

struct TripleVerdict {
    bool pass = true;
    std::array<std::size_t, 3> witness{};
    std::vector<Scalar> defect;
};
// f[x,y,z]_A = [fx,fy,fz]_B on all canonical basis triples
TripleVerdict is_morphism3(const LinearMap& f, const ThreeLieAlgebra& A,
                           const ThreeLieAlgebra& B);

}  // namespace trilie
