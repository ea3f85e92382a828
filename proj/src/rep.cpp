#include "trilie/rep.hpp"

#include <stdexcept>
#include <utility>

#include "table_eval.hpp"

namespace trilie {

Representation make_representation(ThreeLieAlgebra alg, std::string module,
                                   std::vector<std::string> module_names) {
    Representation R;
    R.alg = std::move(alg);
    R.module = std::move(module);
    R.mdim = module_names.size();
    R.module_names = std::move(module_names);
    R.rho.assign(pair_count(R.alg.dim),
                 std::vector<std::vector<Scalar>>(R.mdim, std::vector<Scalar>(R.mdim, Scalar(0))));
    return R;
}

std::vector<Scalar> rho_basis(const Representation& R, std::size_t i, std::size_t j,
                              const std::vector<Scalar>& v) {
    std::vector<Scalar> out(R.mdim, Scalar(0));
    if (i == j) return out;
    int s = 1;
    if (i > j) {
        std::swap(i, j);
        s = -1;
    }
    const auto& m = R.rho[pair_rank(R.alg.dim, i, j)];
    for (std::size_t c = 0; c < R.mdim; ++c)
        if (v[c] != 0) axpy(out, m[c], s > 0 ? v[c] : -v[c]);
    return out;
}

std::vector<Scalar> rho_apply(const Representation& R, const std::vector<Scalar>& x,
                              const std::vector<Scalar>& y, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(R.mdim, Scalar(0));
    for (std::size_t i = 0; i < R.alg.dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < R.alg.dim; ++j) {
            if (y[j] == 0 || i == j) continue;
            axpy(out, rho_basis(R, i, j, v), x[i] * y[j]);
        }
    }
    return out;
}

Representation adjoint_rep(const ThreeLieAlgebra& A) {
    Representation R = make_representation(A, A.space, A.names);
    for (std::size_t r = 0; r < pair_count(A.dim); ++r) {
        auto [i, j] = pair_unrank(A.dim, r);
        for (std::size_t c = 0; c < A.dim; ++c) R.rho[r][c] = basis_bracket3(A, i, j, c);
    }
    return R;
}

RepVerdict rep_defects(const Representation& R) {
    RepVerdict v;
    std::size_t n = R.alg.dim;
    auto rho_bb = [&](std::size_t i, std::size_t j, std::size_t col) {
        return rho_basis(R, i, j, basis_vec(R.module, R.mdim, col).a);
    };
    // product rule
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = i1 + 1; i2 < n; ++i2)
            for (std::size_t i3 = 0; i3 < n; ++i3)
                for (std::size_t i4 = i3 + 1; i4 < n; ++i4)
                    for (std::size_t a = 0; a < R.mdim; ++a) {
                        std::vector<Scalar> d = rho_basis(R, i1, i2, rho_bb(i3, i4, a));
                        std::vector<Scalar> w = basis_bracket3(R.alg, i1, i2, i3);
                        for (std::size_t t = 0; t < n; ++t)
                            if (w[t] != 0 && t != i4) axpy(d, rho_bb(t, i4, a), -w[t]);
                        w = basis_bracket3(R.alg, i1, i2, i4);
                        for (std::size_t t = 0; t < n; ++t)
                            if (w[t] != 0 && t != i3) axpy(d, rho_bb(i3, t, a), -w[t]);
                        axpy(d, rho_basis(R, i3, i4, rho_bb(i1, i2, a)), Scalar(-1));
                        if (!is_zero(d)) {
                            v.pass = false;
                            v.rule = "product-rule";
                            v.witness = {i1, i2, i3, i4};
                            v.column = a;
                            v.defect = std::move(d);
                            return v;
                        }
                    }
    // bracket rule
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = 0; i2 < n; ++i2)
            for (std::size_t i3 = i2 + 1; i3 < n; ++i3)
                for (std::size_t i4 = i3 + 1; i4 < n; ++i4)
                    for (std::size_t a = 0; a < R.mdim; ++a) {
                        std::vector<Scalar> d(R.mdim, Scalar(0));
                        std::vector<Scalar> w = basis_bracket3(R.alg, i2, i3, i4);
                        for (std::size_t t = 0; t < n; ++t)
                            if (w[t] != 0 && t != i1) axpy(d, rho_bb(i1, t, a), w[t]);
                        axpy(d, rho_basis(R, i3, i4, rho_bb(i1, i2, a)), Scalar(-1));
                        axpy(d, rho_basis(R, i2, i4, rho_bb(i1, i3, a)), Scalar(1));
                        axpy(d, rho_basis(R, i2, i3, rho_bb(i1, i4, a)), Scalar(-1));
                        if (!is_zero(d)) {
                            v.pass = false;
                            v.rule = "bracket-rule";
                            v.witness = {i1, i2, i3, i4};
                            v.column = a;
                            v.defect = std::move(d);
                            return v;
                        }
                    }
    return v;
}

ThreeLieAlgebra semidirect_product(const Representation& R) {
    std::size_t gd = R.alg.dim, md = R.mdim;
    std::vector<std::string> names = R.alg.names;
    names.insert(names.end(), R.module_names.begin(), R.module_names.end());
    ThreeLieAlgebra S = make_three_lie(R.alg.space + "+" + R.module, std::move(names));
    for (std::size_t r = 0; r < triple_count(S.dim); ++r) {
        auto [i, j, k] = triple_unrank(S.dim, r);
        auto& row = S.c[r];
        if (k < gd) {
            const auto w = basis_bracket3(R.alg, i, j, k);
            for (std::size_t t = 0; t < gd; ++t) row[t] = w[t];
        } else if (j < gd) {
            const auto& w = R.rho[pair_rank(gd, i, j)][k - gd];
            for (std::size_t t = 0; t < md; ++t) row[gd + t] = w[t];
        }
        // one or zero algebra arguments: every term of the sum bracket vanishes
    }
    return S;
}

Cochain zero_cochain(const Representation& R, std::size_t degree) {
    Cochain c;
    c.alg_space = R.alg.space;
    c.alg_dim = R.alg.dim;
    c.module = R.module;
    c.mdim = R.mdim;
    c.degree = degree;
    std::size_t entries = R.alg.dim;
    std::size_t pc = pair_count(R.alg.dim);
    for (std::size_t t = 0; t < degree; ++t) entries *= pc;
    c.table.assign(entries, std::vector<Scalar>(R.mdim, Scalar(0)));
    return c;
}

std::size_t cochain_index(std::size_t alg_dim, std::size_t degree,
                          const std::vector<std::size_t>& pair_ranks, std::size_t z) {
    if (pair_ranks.size() != degree)
        throw std::invalid_argument("pair-rank count does not match the cochain degree");
    return detail::mixed_index(pair_count(alg_dim), alg_dim, pair_ranks, z);
}

bool cochain_is_zero(const Cochain& c) {
    for (const auto& v : c.table)
        if (!is_zero(v)) return false;
    return true;
}

bool cochain_equal(const Cochain& a, const Cochain& b) {
    return a.alg_dim == b.alg_dim && a.mdim == b.mdim && a.degree == b.degree &&
           a.table == b.table;
}

void cochain_add_scaled(Cochain& acc, const Cochain& b, const Scalar& s) {
    if (acc.alg_dim != b.alg_dim || acc.mdim != b.mdim || acc.degree != b.degree)
        throw std::invalid_argument("cochain shapes differ");
    for (std::size_t t = 0; t < acc.table.size(); ++t) axpy(acc.table[t], b.table[t], s);
}

Cochain structure_cochain(const ThreeLieAlgebra& A) {
    Representation R = adjoint_rep(A);
    Cochain c = zero_cochain(R, 1);
    std::size_t pc = pair_count(A.dim);
    for (std::size_t r = 0; r < pc; ++r) {
        auto [i, j] = pair_unrank(A.dim, r);
        for (std::size_t z = 0; z < A.dim; ++z)
            c.table[r * A.dim + z] = basis_bracket3(A, i, j, z);
    }
    return c;
}

Cochain coboundary(const Representation& R, const Cochain& a) {
    if (a.alg_space != R.alg.space || a.alg_dim != R.alg.dim || a.module != R.module ||
        a.mdim != R.mdim)
        throw std::invalid_argument("cochain does not match the representation's spaces");
    std::size_t dim = R.alg.dim, pc = pair_count(dim);
    std::size_t n = a.degree + 1;
    Cochain out = zero_cochain(R, n);
    LeibnizAlgebra F = fundamental_leibniz(R.alg);

    std::vector<std::size_t> key(n), rest(a.degree);
    auto fill_rest = [&](std::size_t skip) {
        std::size_t t = 0;
        for (std::size_t m = 0; m < n; ++m)
            if (m != skip) rest[t++] = key[m];
    };

    for (std::size_t flat = 0; flat < out.table.size() / dim; ++flat) {
        std::size_t rem = flat;
        for (std::size_t t = n; t-- > 0;) {
            key[t] = rem % pc;
            rem /= pc;
        }
        for (std::size_t z = 0; z < dim; ++z) {
            auto& acc = out.table[flat * dim + z];
            // A: wedge-bracket insertions
            for (std::size_t jj = 0; jj < n; ++jj) {
                Scalar sj = (jj % 2 == 0) ? Scalar(-1) : Scalar(1);
                for (std::size_t kk = jj + 1; kk < n; ++kk) {
                    fill_rest(jj);
                    std::size_t pos = (kk > jj) ? kk - 1 : kk;
                    const auto& row = basis_bracket2(F, key[jj], key[kk]);
                    detail::eval_one_wedge_slot(a.table, pc, dim, rest, pos, row, z, sj, acc);
                }
                // B: bracket absorbed into the vector slot
                fill_rest(jj);
                auto [xj, yj] = pair_unrank(dim, key[jj]);
                const auto w = basis_bracket3(R.alg, xj, yj, z);
                for (std::size_t t = 0; t < dim; ++t)
                    if (w[t] != 0)
                        axpy(acc, a.table[detail::mixed_index(pc, dim, rest, t)], sj * w[t]);
                // C: action on the omitted-slot value
                axpy(acc, rho_basis(R, xj, yj, a.table[detail::mixed_index(pc, dim, rest, z)]),
                     -sj);
            }
            // D: trailing pair split against the vector slot
            {
                Scalar sd = (n % 2 == 0) ? Scalar(-1) : Scalar(1);
                auto [xn, yn] = pair_unrank(dim, key[n - 1]);
                fill_rest(n - 1);
                axpy(acc,
                     rho_basis(R, yn, z, a.table[detail::mixed_index(pc, dim, rest, xn)]), sd);
                axpy(acc,
                     rho_basis(R, z, xn, a.table[detail::mixed_index(pc, dim, rest, yn)]), sd);
            }
        }
    }
    return out;
}

}  // namespace trilie
