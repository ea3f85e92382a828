#include "trilie/core.hpp"

#include <stdexcept>
#include <utility>

namespace trilie {

Vec zero_vec(const std::string& space, std::size_t dim) {
    return Vec{space, std::vector<Scalar>(dim, Scalar(0))};
}

Vec basis_vec(const std::string& space, std::size_t dim, std::size_t i) {
    Vec v = zero_vec(space, dim);
    v.a.at(i) = 1;
    return v;
}

bool is_zero(const std::vector<Scalar>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

void axpy(std::vector<Scalar>& acc, const std::vector<Scalar>& v, const Scalar& s) {
    if (s == 0) return;
    for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += v[t] * s;
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

std::size_t pair_rank(std::size_t n, std::size_t i, std::size_t j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::array<std::size_t, 2> pair_unrank(std::size_t n, std::size_t r) {
    for (std::size_t i = 0;; ++i) {
        std::size_t row = n - i - 1;
        if (r < row) return {i, i + 1 + r};
        r -= row;
    }
}

std::size_t triple_count(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

std::size_t triple_rank(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
    return triple_count(n) - triple_count(n - i) + pair_rank(n - i - 1, j - i - 1, k - i - 1);
}

std::array<std::size_t, 3> triple_unrank(std::size_t n, std::size_t r) {
    for (std::size_t i = 0;; ++i) {
        std::size_t block = pair_count(n - i - 1);
        if (r < block) {
            auto [a, b] = pair_unrank(n - i - 1, r);
            return {i, i + 1 + a, i + 1 + b};
        }
        r -= block;
    }
}

ThreeLieAlgebra make_three_lie(std::string space, std::vector<std::string> names) {
    ThreeLieAlgebra A;
    A.space = std::move(space);
    A.dim = names.size();
    A.names = std::move(names);
    A.c.assign(triple_count(A.dim), std::vector<Scalar>(A.dim, Scalar(0)));
    return A;
}

namespace {

void check_space(const std::string& want, const Vec& v, std::size_t dim) {
    if (v.space != want || v.a.size() != dim)
        throw std::invalid_argument("vector does not live in space '" + want + "'");
}

// sorts three indices, returns permutation sign; 0 when an index repeats
int sort3(std::size_t& i, std::size_t& j, std::size_t& k) {
    int s = 1;
    if (i > j) { std::swap(i, j); s = -s; }
    if (j > k) { std::swap(j, k); s = -s; }
    if (i > j) { std::swap(i, j); s = -s; }
    if (i == j || j == k) return 0;
    return s;
}

}  // namespace

void add_basis_bracket3(const ThreeLieAlgebra& A, std::size_t i, std::size_t j, std::size_t k,
                        const Scalar& w, std::vector<Scalar>& acc) {
    if (w == 0) return;
    int s = sort3(i, j, k);
    if (s == 0) return;
    const auto& row = A.c[triple_rank(A.dim, i, j, k)];
    if (s > 0)
        axpy(acc, row, w);
    else
        for (std::size_t t = 0; t < acc.size(); ++t) acc[t] -= row[t] * w;
}

std::vector<Scalar> basis_bracket3(const ThreeLieAlgebra& A, std::size_t i, std::size_t j,
                                   std::size_t k) {
    std::vector<Scalar> out(A.dim, Scalar(0));
    add_basis_bracket3(A, i, j, k, Scalar(1), out);
    return out;
}

Vec bracket3(const ThreeLieAlgebra& A, const Vec& x, const Vec& y, const Vec& z) {
    check_space(A.space, x, A.dim);
    check_space(A.space, y, A.dim);
    check_space(A.space, z, A.dim);
    Vec out = zero_vec(A.space, A.dim);
    // expand over canonical triples via the 3x3 minor of the argument matrix
    for (std::size_t r = 0; r < A.c.size(); ++r) {
        const auto& row = A.c[r];
        if (is_zero(row)) continue;
        auto [i, j, k] = triple_unrank(A.dim, r);
        Scalar det = x.a[i] * (y.a[j] * z.a[k] - y.a[k] * z.a[j]) -
                     x.a[j] * (y.a[i] * z.a[k] - y.a[k] * z.a[i]) +
                     x.a[k] * (y.a[i] * z.a[j] - y.a[j] * z.a[i]);
        axpy(out.a, row, det);
    }
    return out;
}

std::vector<Scalar> fi_defect_basis(const ThreeLieAlgebra& A, std::size_t i1, std::size_t i2,
                                    std::size_t i3, std::size_t i4, std::size_t i5) {
    std::vector<Scalar> out(A.dim, Scalar(0));
    std::vector<Scalar> w = basis_bracket3(A, i3, i4, i5);
    for (std::size_t t = 0; t < A.dim; ++t) add_basis_bracket3(A, i1, i2, t, w[t], out);
    w = basis_bracket3(A, i1, i2, i3);
    for (std::size_t t = 0; t < A.dim; ++t) add_basis_bracket3(A, t, i4, i5, -w[t], out);
    w = basis_bracket3(A, i1, i2, i4);
    for (std::size_t t = 0; t < A.dim; ++t) add_basis_bracket3(A, i3, t, i5, -w[t], out);
    w = basis_bracket3(A, i1, i2, i5);
    for (std::size_t t = 0; t < A.dim; ++t) add_basis_bracket3(A, i3, i4, t, -w[t], out);
    return out;
}

Vec fi_defect(const ThreeLieAlgebra& A, const Vec& x1, const Vec& x2, const Vec& x3,
              const Vec& x4, const Vec& x5) {
    Vec out = bracket3(A, x1, x2, bracket3(A, x3, x4, x5));
    Vec t = bracket3(A, bracket3(A, x1, x2, x3), x4, x5);
    for (std::size_t i = 0; i < A.dim; ++i) out.a[i] -= t.a[i];
    t = bracket3(A, x3, bracket3(A, x1, x2, x4), x5);
    for (std::size_t i = 0; i < A.dim; ++i) out.a[i] -= t.a[i];
    t = bracket3(A, x3, x4, bracket3(A, x1, x2, x5));
    for (std::size_t i = 0; i < A.dim; ++i) out.a[i] -= t.a[i];
    return out;
}

FiVerdict is_three_lie(const ThreeLieAlgebra& A) {
    FiVerdict v;
    std::size_t n = A.dim;
    if (n <= 6) {
        // full scan; the witness is the lexicographically first failing tuple
        for (std::size_t i1 = 0; i1 < n; ++i1)
            for (std::size_t i2 = 0; i2 < n; ++i2)
                for (std::size_t i3 = 0; i3 < n; ++i3)
                    for (std::size_t i4 = 0; i4 < n; ++i4)
                        for (std::size_t i5 = 0; i5 < n; ++i5) {
                            auto d = fi_defect_basis(A, i1, i2, i3, i4, i5);
                            if (!is_zero(d)) {
                                v.pass = false;
                                v.witness = {i1, i2, i3, i4, i5};
                                v.defect = std::move(d);
                                return v;
                            }
                        }
        return v;
    }
    // the defect is skew in (x1,x2) and in (x3,x4,x5), so increasing tuples
    // in each block cover every sign class and repeats vanish identically
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = i1 + 1; i2 < n; ++i2)
            for (std::size_t i3 = 0; i3 < n; ++i3)
                for (std::size_t i4 = i3 + 1; i4 < n; ++i4)
                    for (std::size_t i5 = i4 + 1; i5 < n; ++i5) {
                        auto d = fi_defect_basis(A, i1, i2, i3, i4, i5);
                        if (!is_zero(d)) {
                            v.pass = false;
                            v.witness = {i1, i2, i3, i4, i5};
                            v.defect = std::move(d);
                            return v;
                        }
                    }
    return v;
}

LeibnizAlgebra make_leibniz(std::string space, std::vector<std::string> names) {
    LeibnizAlgebra L;
    L.space = std::move(space);
    L.dim = names.size();
    L.names = std::move(names);
    L.b.assign(L.dim * L.dim, std::vector<Scalar>(L.dim, Scalar(0)));
    return L;
}

const std::vector<Scalar>& basis_bracket2(const LeibnizAlgebra& L, std::size_t i, std::size_t j) {
    return L.b[i * L.dim + j];
}

Vec bracket2(const LeibnizAlgebra& L, const Vec& x, const Vec& y) {
    check_space(L.space, x, L.dim);
    check_space(L.space, y, L.dim);
    Vec out = zero_vec(L.space, L.dim);
    for (std::size_t i = 0; i < L.dim; ++i) {
        if (x.a[i] == 0) continue;
        for (std::size_t j = 0; j < L.dim; ++j)
            if (y.a[j] != 0) axpy(out.a, L.b[i * L.dim + j], x.a[i] * y.a[j]);
    }
    return out;
}

std::vector<Scalar> leibniz_defect_basis(const LeibnizAlgebra& L, std::size_t i, std::size_t j,
                                         std::size_t k) {
    std::vector<Scalar> out(L.dim, Scalar(0));
    const auto& jk = L.b[j * L.dim + k];
    for (std::size_t t = 0; t < L.dim; ++t) axpy(out, L.b[i * L.dim + t], jk[t]);
    const auto& ij = L.b[i * L.dim + j];
    for (std::size_t t = 0; t < L.dim; ++t) axpy(out, L.b[t * L.dim + k], -ij[t]);
    const auto& ik = L.b[i * L.dim + k];
    for (std::size_t t = 0; t < L.dim; ++t) axpy(out, L.b[j * L.dim + t], -ik[t]);
    return out;
}

Vec leibniz_defect(const LeibnizAlgebra& L, const Vec& x, const Vec& y, const Vec& z) {
    Vec out = bracket2(L, x, bracket2(L, y, z));
    Vec t = bracket2(L, bracket2(L, x, y), z);
    for (std::size_t i = 0; i < L.dim; ++i) out.a[i] -= t.a[i];
    t = bracket2(L, y, bracket2(L, x, z));
    for (std::size_t i = 0; i < L.dim; ++i) out.a[i] -= t.a[i];
    return out;
}

LeibnizVerdict is_leibniz(const LeibnizAlgebra& L) {
    LeibnizVerdict v;
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j)
            for (std::size_t k = 0; k < L.dim; ++k) {
                auto d = leibniz_defect_basis(L, i, j, k);
                if (!is_zero(d)) {
                    v.pass = false;
                    v.witness = {i, j, k};
                    v.defect = std::move(d);
                    return v;
                }
            }
    return v;
}

LeibnizAlgebra fundamental_leibniz(const ThreeLieAlgebra& A) {
    std::size_t P = pair_count(A.dim);
    std::vector<std::string> names(P);
    for (std::size_t r = 0; r < P; ++r) {
        auto [i, j] = pair_unrank(A.dim, r);
        names[r] = A.names[i] + "^" + A.names[j];
    }
    LeibnizAlgebra L = make_leibniz(A.space + "^2", std::move(names));
    for (std::size_t m = 0; m < P; ++m) {
        auto [i, j] = pair_unrank(A.dim, m);
        for (std::size_t mm = 0; mm < P; ++mm) {
            auto [k, l] = pair_unrank(A.dim, mm);
            auto& out = L.b[m * P + mm];
            std::vector<Scalar> w = basis_bracket3(A, i, j, k);
            for (std::size_t t = 0; t < A.dim; ++t) {
                if (w[t] == 0 || t == l) continue;
                if (t < l)
                    out[pair_rank(A.dim, t, l)] += w[t];
                else
                    out[pair_rank(A.dim, l, t)] -= w[t];
            }
            w = basis_bracket3(A, i, j, l);
            for (std::size_t t = 0; t < A.dim; ++t) {
                if (w[t] == 0 || t == k) continue;
                if (k < t)
                    out[pair_rank(A.dim, k, t)] += w[t];
                else
                    out[pair_rank(A.dim, t, k)] -= w[t];
            }
        }
    }
    return L;
}

LinearMap zero_map(std::string dom, std::size_t dom_dim, std::string cod, std::size_t cod_dim) {
    LinearMap f;
    f.dom = std::move(dom);
    f.cod = std::move(cod);
    f.dom_dim = dom_dim;
    f.cod_dim = cod_dim;
    f.cols.assign(dom_dim, std::vector<Scalar>(cod_dim, Scalar(0)));
    return f;
}

LinearMap identity_map(std::string space, std::size_t dim) {
    LinearMap f = zero_map(space, dim, space, dim);
    for (std::size_t i = 0; i < dim; ++i) f.cols[i][i] = 1;
    return f;
}

Vec apply(const LinearMap& f, const Vec& v) {
    check_space(f.dom, v, f.dom_dim);
    Vec out = zero_vec(f.cod, f.cod_dim);
    for (std::size_t j = 0; j < f.dom_dim; ++j) axpy(out.a, f.cols[j], v.a[j]);
    return out;
}

namespace {

void check_endo(const LeibnizAlgebra& L, const LinearMap& D) {
    if (D.dom != L.space || D.cod != L.space || D.dom_dim != L.dim || D.cod_dim != L.dim)
        throw std::invalid_argument("map is not an endomorphism of '" + L.space + "'");
}

}  // namespace

PairVerdict is_left_derivation(const LeibnizAlgebra& L, const LinearMap& D) {
    check_endo(L, D);
    PairVerdict v;
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j) {
            std::vector<Scalar> d(L.dim, Scalar(0));
            const auto& ij = L.b[i * L.dim + j];
            for (std::size_t t = 0; t < L.dim; ++t) axpy(d, D.cols[t], ij[t]);
            for (std::size_t t = 0; t < L.dim; ++t) axpy(d, L.b[t * L.dim + j], -D.cols[i][t]);
            for (std::size_t t = 0; t < L.dim; ++t) axpy(d, L.b[i * L.dim + t], -D.cols[j][t]);
            if (!is_zero(d)) {
                v.pass = false;
                v.witness = {i, j};
                v.defect = std::move(d);
                return v;
            }
        }
    return v;
}

PairVerdict is_right_derivation(const LeibnizAlgebra& L, const LinearMap& D) {
    check_endo(L, D);
    PairVerdict v;
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j) {
            std::vector<Scalar> d(L.dim, Scalar(0));
            const auto& ij = L.b[i * L.dim + j];
            for (std::size_t t = 0; t < L.dim; ++t) axpy(d, D.cols[t], ij[t]);
            for (std::size_t t = 0; t < L.dim; ++t) axpy(d, L.b[i * L.dim + t], -D.cols[j][t]);
            for (std::size_t t = 0; t < L.dim; ++t) axpy(d, L.b[j * L.dim + t], D.cols[i][t]);
            if (!is_zero(d)) {
                v.pass = false;
                v.witness = {i, j};
                v.defect = std::move(d);
                return v;
            }
        }
    return v;
}

TripleVerdict is_morphism3(const LinearMap& f, const ThreeLieAlgebra& A,
                           const ThreeLieAlgebra& B) {
    if (f.dom != A.space || f.dom_dim != A.dim || f.cod != B.space || f.cod_dim != B.dim)
        throw std::invalid_argument("map shape does not match the two algebras");
    TripleVerdict v;
    for (std::size_t r = 0; r < triple_count(A.dim); ++r) {
        auto [i, j, k] = triple_unrank(A.dim, r);
        Vec lhs = zero_vec(B.space, B.dim);
        std::vector<Scalar> w = basis_bracket3(A, i, j, k);
        for (std::size_t t = 0; t < A.dim; ++t) axpy(lhs.a, f.cols[t], w[t]);
        Vec rhs = bracket3(B, Vec{B.space, f.cols[i]}, Vec{B.space, f.cols[j]},
                           Vec{B.space, f.cols[k]});
        for (std::size_t t = 0; t < B.dim; ++t) lhs.a[t] -= rhs.a[t];
        if (!is_zero(lhs.a)) {
            v.pass = false;
            v.witness = {i, j, k};
            v.defect = std::move(lhs.a);
            return v;
        }
    }
    return v;
}

}  // namespace trilie
