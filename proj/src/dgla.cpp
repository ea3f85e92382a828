#include "trilie/dgla.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "table_eval.hpp"

namespace trilie {

namespace {

void require_same_ambient(const GradedCochain& a, const GradedCochain& b, const char* who) {
    if (a.ambient.space != b.ambient.space || a.ambient.dim != b.ambient.dim ||
        a.split != b.split)
        throw std::invalid_argument(std::string(who) + ": cochains live over different ambients");
}

}  // namespace

GradedCochain zero_graded(const ThreeLieAlgebra& ambient, std::size_t split, std::size_t degree) {
    if (split > ambient.dim)
        throw std::invalid_argument("zero_graded: split exceeds the ambient dimension");
    if (degree > 4)
        throw std::domain_error("zero_graded: degree " + std::to_string(degree) +
                                " exceeds the supported range");
    GradedCochain c;
    c.ambient = ambient;
    c.split = split;
    c.degree = degree;
    std::size_t rows = ambient.dim;
    const std::size_t pc = pair_count(ambient.dim);
    for (std::size_t s = 0; s < degree; ++s) rows *= pc;
    c.table.assign(rows, std::vector<Scalar>(ambient.dim, 0));
    return c;
}

std::size_t graded_index(const GradedCochain& c, const std::vector<std::size_t>& pair_ranks,
                         std::size_t z) {
    if (pair_ranks.size() != c.degree)
        throw std::invalid_argument("graded_index: wrong number of pair slots");
    return detail::mixed_index(pair_count(c.ambient.dim), c.ambient.dim, pair_ranks, z);
}

bool graded_is_zero(const GradedCochain& c) {
    for (const auto& row : c.table)
        if (!is_zero(row)) return false;
    return true;
}

bool graded_equal(const GradedCochain& a, const GradedCochain& b) {
    return a.degree == b.degree && a.split == b.split && a.ambient.dim == b.ambient.dim &&
           a.table == b.table;
}

void graded_add_scaled(GradedCochain& acc, const GradedCochain& b, const Scalar& s) {
    if (acc.degree != b.degree || acc.ambient.dim != b.ambient.dim)
        throw std::invalid_argument("graded_add_scaled: shape mismatch");
    for (std::size_t r = 0; r < acc.table.size(); ++r) axpy(acc.table[r], b.table[r], s);
}

GradedCochain structure_graded(const ThreeLieAlgebra& ambient, std::size_t split) {
    GradedCochain mu = zero_graded(ambient, split, 1);
    const std::size_t dim = ambient.dim;
    for (std::size_t pr = 0; pr < pair_count(dim); ++pr) {
        const auto ij = pair_unrank(dim, pr);
        for (std::size_t z = 0; z < dim; ++z)
            mu.table[pr * dim + z] = basis_bracket3(ambient, ij[0], ij[1], z);
    }
    return mu;
}

ThreeLieAlgebra direct_sum(const ThreeLieAlgebra& g, const ThreeLieAlgebra& h) {
    std::vector<std::string> names = g.names;
    names.insert(names.end(), h.names.begin(), h.names.end());
    ThreeLieAlgebra sum = make_three_lie(g.space + "+" + h.space, std::move(names));
    const std::size_t gd = g.dim;
    for (std::size_t r = 0; r < triple_count(sum.dim); ++r) {
        const auto t = triple_unrank(sum.dim, r);
        if (t[2] < gd) {
            const auto& row = g.c[triple_rank(gd, t[0], t[1], t[2])];
            for (std::size_t s = 0; s < gd; ++s) sum.c[r][s] = row[s];
        } else if (t[0] >= gd) {
            const auto& row = h.c[triple_rank(h.dim, t[0] - gd, t[1] - gd, t[2] - gd)];
            for (std::size_t s = 0; s < h.dim; ++s) sum.c[r][gd + s] = row[s];
        }
    }
    return sum;
}

GradedCochain nr_compose(const GradedCochain& a, const GradedCochain& b) {
    require_same_ambient(a, b, "nr_compose");
    const std::size_t p = a.degree, q = b.degree;
    if (p + q > 4)
        throw std::domain_error("nr_compose: composite degree " + std::to_string(p + q) +
                                " exceeds the supported range");
    const std::size_t dim = a.ambient.dim;
    const std::size_t pc = pair_count(dim);
    const std::size_t nslots = p + q;
    GradedCochain out = zero_graded(a.ambient, a.split, nslots);

    std::vector<std::size_t> K(nslots, 0), akey(p, 0), bkey(q, 0);
    std::vector<Scalar> wedge(pc, 0);
    const int sign_pq = (p * q % 2 == 0) ? 1 : -1;

    for (std::size_t row = 0; row < out.table.size(); ++row) {
        std::size_t rem = row;
        const std::size_t z = rem % dim;
        rem /= dim;
        for (std::size_t s = nslots; s-- > 0;) {
            K[s] = rem % pc;
            rem /= pc;
        }
        auto& acc = out.table[row];

        // b lands inside pair slot k of a; the first k+q output slots are
        // distributed by a (k,q)-unshuffle and the pair at position k+q is
        // split leg by leg
        for (std::size_t k = 0; k < p; ++k) {
            const std::size_t m = k + q;
            const int sign_kq = (k * q % 2 == 0) ? 1 : -1;
            const auto xy = pair_unrank(dim, K[m]);
            for (std::size_t t = m + 1; t < nslots; ++t) akey[k + 1 + t - m - 1] = K[t];
            detail::for_each_subset(m, k, [&](const std::vector<std::size_t>& S,
                                              const std::vector<std::size_t>& C) {
                const int sgn = detail::unshuffle_sign(S) * sign_kq;
                for (std::size_t t = 0; t < q; ++t) bkey[t] = K[C[t]];
                const auto& u = b.table[detail::mixed_index(pc, dim, bkey, xy[0])];
                const auto& v = b.table[detail::mixed_index(pc, dim, bkey, xy[1])];
                std::fill(wedge.begin(), wedge.end(), 0);
                detail::add_wedge_with_basis(dim, u, xy[1], 1, wedge);
                detail::add_wedge_with_basis(dim, v, xy[0], -1, wedge);
                for (std::size_t t = 0; t < k; ++t) akey[t] = K[S[t]];
                detail::eval_one_wedge_slot(a.table, pc, dim, akey, k, wedge, z, Scalar(sgn),
                                            acc);
            });
        }

        // closing term: b absorbs the vector slot, a takes the other block
        detail::for_each_subset(nslots, p, [&](const std::vector<std::size_t>& S,
                                               const std::vector<std::size_t>& C) {
            const int sgn = detail::unshuffle_sign(S) * sign_pq;
            for (std::size_t t = 0; t < q; ++t) bkey[t] = K[C[t]];
            const auto& w = b.table[detail::mixed_index(pc, dim, bkey, z)];
            for (std::size_t t = 0; t < p; ++t) akey[t] = K[S[t]];
            for (std::size_t t = 0; t < dim; ++t) {
                if (w[t] == 0) continue;
                axpy(acc, a.table[detail::mixed_index(pc, dim, akey, t)], w[t] * sgn);
            }
        });
    }
    return out;
}

GradedCochain nr_bracket(const GradedCochain& a, const GradedCochain& b) {
    GradedCochain out = nr_compose(a, b);
    const GradedCochain ba = nr_compose(b, a);
    const int flip = (a.degree * b.degree % 2 == 0) ? -1 : 1;
    graded_add_scaled(out, ba, Scalar(flip));
    return out;
}

GradedCochain dgla_differential(const GradedCochain& c) {
    return nr_bracket(structure_graded(c.ambient, c.split), c);
}

bool is_restricted(const GradedCochain& c) {
    const std::size_t dim = c.ambient.dim;
    const std::size_t pc = pair_count(dim);
    std::vector<std::size_t> K(c.degree, 0);
    for (std::size_t row = 0; row < c.table.size(); ++row) {
        std::size_t rem = row;
        const std::size_t z = rem % dim;
        rem /= dim;
        for (std::size_t s = c.degree; s-- > 0;) {
            K[s] = rem % pc;
            rem /= pc;
        }
        const auto& val = c.table[row];
        for (std::size_t t = 0; t < c.split; ++t)
            if (val[t] != 0) return false;
        bool pure_fiber = z >= c.split;
        for (std::size_t s = 0; pure_fiber && s < c.degree; ++s)
            pure_fiber = pair_unrank(dim, K[s])[0] >= c.split;
        if (pure_fiber && !is_zero(val)) return false;
    }
    return true;
}

GradedCochain datum_to_cochain(const ExtensionDatum& D) {
    const std::size_t gd = D.g.dim, hd = D.h.dim;
    const std::size_t dim = gd + hd;
    GradedCochain c = zero_graded(direct_sum(D.g, D.h), gd, 1);

    auto he = [&](std::size_t a) {
        std::vector<Scalar> e(hd, 0);
        e[a] = 1;
        return e;
    };
    auto ge = [&](std::size_t i) {
        std::vector<Scalar> e(gd, 0);
        e[i] = 1;
        return e;
    };
    auto put = [&](std::size_t row, const std::vector<Scalar>& hv, int sgn) {
        for (std::size_t t = 0; t < hd; ++t) c.table[row][gd + t] += hv[t] * sgn;
    };

    for (std::size_t pr = 0; pr < pair_count(dim); ++pr) {
        const auto ij = pair_unrank(dim, pr);
        const std::size_t i = ij[0], j = ij[1];
        for (std::size_t z = 0; z < dim; ++z) {
            const std::size_t row = pr * dim + z;
            if (j < gd) {
                if (z < gd)
                    put(row, ext_omega(D, ge(i), ge(j), ge(z)), 1);
                else
                    put(row, ext_rho(D, i, j, he(z - gd)), 1);
            } else if (i < gd) {
                if (z < gd)
                    put(row, ext_rho(D, i, z, he(j - gd)), -1);
                else
                    put(row, ext_nu(D, i, he(j - gd), he(z - gd)), 1);
            } else {
                if (z < gd) put(row, ext_nu(D, z, he(i - gd), he(j - gd)), 1);
            }
        }
    }
    return c;
}

ExtensionDatum cochain_to_datum(const GradedCochain& c) {
    if (c.degree != 1) throw std::invalid_argument("cochain_to_datum: degree-1 cochain required");
    const std::size_t dim = c.ambient.dim, gd = c.split, hd = dim - gd;

    std::string gspace, hspace;
    const auto plus = c.ambient.space.find('+');
    if (plus == std::string::npos) {
        gspace = c.ambient.space + ".base";
        hspace = c.ambient.space + ".fiber";
    } else {
        gspace = c.ambient.space.substr(0, plus);
        hspace = c.ambient.space.substr(plus + 1);
    }
    ThreeLieAlgebra g = make_three_lie(
        gspace, std::vector<std::string>(c.ambient.names.begin(), c.ambient.names.begin() + gd));
    ThreeLieAlgebra h = make_three_lie(
        hspace, std::vector<std::string>(c.ambient.names.begin() + gd, c.ambient.names.end()));
    for (std::size_t r = 0; r < triple_count(dim); ++r) {
        const auto t = triple_unrank(dim, r);
        if (t[2] < gd)
            for (std::size_t s = 0; s < gd; ++s)
                g.c[triple_rank(gd, t[0], t[1], t[2])][s] = c.ambient.c[r][s];
        else if (t[0] >= gd)
            for (std::size_t s = 0; s < hd; ++s)
                h.c[triple_rank(hd, t[0] - gd, t[1] - gd, t[2] - gd)][s] = c.ambient.c[r][gd + s];
    }
    if (direct_sum(g, h).c != c.ambient.c)
        throw std::domain_error("cochain_to_datum: ambient is not a direct sum across the split");

    ExtensionDatum D = make_extension_datum(std::move(g), std::move(h));
    auto hpart = [&](const std::vector<Scalar>& v) {
        return std::vector<Scalar>(v.begin() + static_cast<std::ptrdiff_t>(gd), v.end());
    };
    for (std::size_t i = 0; i < gd; ++i)
        for (std::size_t j = i + 1; j < gd; ++j)
            for (std::size_t b = 0; b < hd; ++b)
                D.rho[pair_rank(gd, i, j)][b] =
                    hpart(c.table[pair_rank(dim, i, j) * dim + gd + b]);
    for (std::size_t i = 0; i < gd; ++i)
        for (std::size_t a = 0; a < hd; ++a)
            for (std::size_t b = a + 1; b < hd; ++b)
                D.nu[i][pair_rank(hd, a, b)] =
                    hpart(c.table[pair_rank(dim, gd + a, gd + b) * dim + i]);
    for (std::size_t i = 0; i < gd; ++i)
        for (std::size_t j = i + 1; j < gd; ++j)
            for (std::size_t k = j + 1; k < gd; ++k)
                D.omega[triple_rank(gd, i, j, k)] = hpart(c.table[pair_rank(dim, i, j) * dim + k]);

    if (datum_to_cochain(D).table != c.table)
        throw std::domain_error("cochain_to_datum: cochain is not generated by extension data");
    return D;
}

GradedCochain mc_defect(const GradedCochain& c) {
    if (c.degree != 1) throw std::invalid_argument("mc_defect: degree-1 cochain required");
    GradedCochain out = dgla_differential(c);
    graded_add_scaled(out, nr_bracket(c, c), Scalar(1, 2));
    return out;
}

GradedCochain gauge_transform(const GradedCochain& xi, const GradedCochain& c) {
    if (xi.degree != 0 || c.degree != 1)
        throw std::invalid_argument("gauge_transform: expected degree-0 xi and degree-1 c");
    require_same_ambient(xi, c, "gauge_transform");
    if (!is_restricted(xi) || !is_restricted(c))
        throw std::invalid_argument("gauge_transform: restricted cochains required");

    const GradedCochain ad1 = nr_bracket(xi, c);
    const GradedCochain ad2 = nr_bracket(xi, ad1);
    const GradedCochain dxi = dgla_differential(xi);
    const GradedCochain e1 = nr_bracket(xi, dxi);
    const GradedCochain e2 = nr_bracket(xi, e1);

    GradedCochain out = c;
    graded_add_scaled(out, ad1, Scalar(1));
    graded_add_scaled(out, ad2, Scalar(1, 2));
    graded_add_scaled(out, dxi, Scalar(-1));
    graded_add_scaled(out, e1, Scalar(-1, 2));
    graded_add_scaled(out, e2, Scalar(-1, 6));
    return out;
}

}  // namespace trilie
