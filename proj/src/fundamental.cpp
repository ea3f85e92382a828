#include "trilie/fundamental.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "table_eval.hpp"

namespace trilie {

namespace {

void require_certified(const ExtensionDatum& D, const char* who) {
    if (!extension_defects(D).pass)
        throw std::invalid_argument(std::string(who) +
                                    ": extension data fail their compatibility equations");
}

std::vector<Scalar> unit(std::size_t dim, std::size_t i) {
    std::vector<Scalar> e(dim, 0);
    e[i] = 1;
    return e;
}

// out += s * (column-stored endomorphism applied to v)
void apply_cols(const std::vector<std::vector<Scalar>>& cols, const std::vector<Scalar>& v,
                const Scalar& s, std::vector<Scalar>& out) {
    for (std::size_t c = 0; c < cols.size(); ++c)
        if (v[c] != 0) axpy(out, cols[c], v[c] * s);
}

}  // namespace

WSpace make_wspace(const ThreeLieAlgebra& g, const ThreeLieAlgebra& h) {
    WSpace W;
    W.space = "W(" + g.space + "," + h.space + ")";
    W.gdim = g.dim;
    W.hdim = h.dim;
    W.wedge_count = pair_count(h.dim);
    W.dim = W.wedge_count + g.dim * h.dim;
    W.names.reserve(W.dim);
    for (std::size_t r = 0; r < W.wedge_count; ++r) {
        const auto ab = pair_unrank(h.dim, r);
        W.names.push_back(h.names[ab[0]] + "^" + h.names[ab[1]]);
    }
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t a = 0; a < h.dim; ++a) W.names.push_back(g.names[i] + "@" + h.names[a]);
    return W;
}

std::size_t w_wedge_index(const WSpace& W, std::size_t a, std::size_t b) {
    return pair_rank(W.hdim, a, b);
}

std::size_t w_tensor_index(const WSpace& W, std::size_t i, std::size_t a) {
    return W.wedge_count + i * W.hdim + a;
}

LeibnizAlgebra w_bracket(const ExtensionDatum& D) {
    require_certified(D, "w_bracket");
    const std::size_t hd = D.h.dim;
    const WSpace W = make_wspace(D.g, D.h);
    LeibnizAlgebra L = make_leibniz(W.space, W.names);
    auto he = [&](std::size_t a) { return unit(hd, a); };

    for (std::size_t p = 0; p < W.dim; ++p) {
        const bool p_wedge = p < W.wedge_count;
        for (std::size_t q = 0; q < W.dim; ++q) {
            auto& row = L.b[p * W.dim + q];
            const bool q_wedge = q < W.wedge_count;
            if (p_wedge && q_wedge) {
                const auto ab = pair_unrank(hd, p);
                const auto cd = pair_unrank(hd, q);
                detail::add_wedge_with_basis(hd, basis_bracket3(D.h, ab[0], ab[1], cd[0]), cd[1],
                                             1, row);
                detail::add_wedge_with_basis(hd, basis_bracket3(D.h, ab[0], ab[1], cd[1]), cd[0],
                                             -1, row);
            } else if (p_wedge) {
                const auto ab = pair_unrank(hd, p);
                const std::size_t i = (q - W.wedge_count) / hd, c = (q - W.wedge_count) % hd;
                detail::add_wedge_with_basis(hd, ext_nu(D, i, he(ab[0]), he(ab[1])), c, 1, row);
                const auto hb = basis_bracket3(D.h, ab[0], ab[1], c);
                for (std::size_t t = 0; t < hd; ++t) row[w_tensor_index(W, i, t)] += hb[t];
            } else if (q_wedge) {
                const std::size_t i = (p - W.wedge_count) / hd, c = (p - W.wedge_count) % hd;
                const auto ab = pair_unrank(hd, q);
                detail::add_wedge_with_basis(hd, ext_nu(D, i, he(c), he(ab[0])), ab[1], 1, row);
                detail::add_wedge_with_basis(hd, ext_nu(D, i, he(c), he(ab[1])), ab[0], -1, row);
            } else {
                const std::size_t i = (p - W.wedge_count) / hd, c = (p - W.wedge_count) % hd;
                const std::size_t j = (q - W.wedge_count) / hd, d = (q - W.wedge_count) % hd;
                detail::add_wedge_with_basis(hd, ext_rho(D, i, j, he(c)), d, -1, row);
                const auto nv = ext_nu(D, i, he(c), he(d));
                for (std::size_t t = 0; t < hd; ++t) row[w_tensor_index(W, j, t)] += nv[t];
            }
        }
    }
    return L;
}

LeibnizExtensionDatum build_l_r_varpi(const ExtensionDatum& D) {
    require_certified(D, "build_l_r_varpi");
    const std::size_t gd = D.g.dim, hd = D.h.dim;
    LeibnizExtensionDatum E;
    E.base = fundamental_leibniz(D.g);
    E.fiber = w_bracket(D);
    E.w = make_wspace(D.g, D.h);
    const std::size_t bc = E.base.dim, wd = E.w.dim;
    E.l.assign(bc, std::vector<std::vector<Scalar>>(wd, std::vector<Scalar>(wd, Scalar(0))));
    E.r = E.l;
    E.varpi.assign(bc, std::vector<std::vector<Scalar>>(bc, std::vector<Scalar>(wd, Scalar(0))));

    auto he = [&](std::size_t a) { return unit(hd, a); };
    auto ge = [&](std::size_t i) { return unit(gd, i); };

    for (std::size_t p = 0; p < bc; ++p) {
        const auto xy = pair_unrank(gd, p);
        const std::size_t x = xy[0], y = xy[1];
        for (std::size_t col = 0; col < wd; ++col) {
            auto& lv = E.l[p][col];
            auto& rv = E.r[p][col];
            if (col < E.w.wedge_count) {
                const auto ab = pair_unrank(hd, col);
                detail::add_wedge_with_basis(hd, ext_rho(D, x, y, he(ab[0])), ab[1], 1, lv);
                detail::add_wedge_with_basis(hd, ext_rho(D, x, y, he(ab[1])), ab[0], -1, lv);
                const auto nx = ext_nu(D, x, he(ab[0]), he(ab[1]));
                const auto ny = ext_nu(D, y, he(ab[0]), he(ab[1]));
                for (std::size_t t = 0; t < hd; ++t) {
                    rv[w_tensor_index(E.w, y, t)] -= nx[t];
                    rv[w_tensor_index(E.w, x, t)] += ny[t];
                }
            } else {
                const std::size_t z = (col - E.w.wedge_count) / hd;
                const std::size_t w = (col - E.w.wedge_count) % hd;
                const auto grow = basis_bracket3(D.g, x, y, z);
                for (std::size_t t = 0; t < gd; ++t)
                    if (grow[t] != 0) lv[w_tensor_index(E.w, t, w)] += grow[t];
                detail::add_wedge_with_basis(hd, ext_omega(D, ge(x), ge(y), ge(z)), w, 1, lv);
                const auto rw = ext_rho(D, x, y, he(w));
                for (std::size_t t = 0; t < hd; ++t) lv[w_tensor_index(E.w, z, t)] += rw[t];
                const auto rzx = ext_rho(D, z, x, he(w));
                const auto rzy = ext_rho(D, z, y, he(w));
                for (std::size_t t = 0; t < hd; ++t) {
                    rv[w_tensor_index(E.w, y, t)] += rzx[t];
                    rv[w_tensor_index(E.w, x, t)] -= rzy[t];
                }
            }
        }
        for (std::size_t q = 0; q < bc; ++q) {
            const auto zt = pair_unrank(gd, q);
            auto& vp = E.varpi[p][q];
            const auto o1 = ext_omega(D, ge(x), ge(y), ge(zt[0]));
            const auto o2 = ext_omega(D, ge(x), ge(y), ge(zt[1]));
            for (std::size_t t = 0; t < hd; ++t) {
                vp[w_tensor_index(E.w, zt[1], t)] -= o1[t];
                vp[w_tensor_index(E.w, zt[0], t)] += o2[t];
            }
        }
    }
    return E;
}

LeibnizExtensionVerdict leibniz_extension_defects(const LeibnizExtensionDatum& E) {
    const std::size_t bc = E.base.dim, wd = E.fiber.dim;
    LeibnizExtensionVerdict out;
    out.conditions.assign(7, ConditionVerdict{});
    const char* names[7] = {"l-derivation", "r-derivation", "left-center-1", "rep-product",
                            "rep-mixed",    "left-center-2", "cocycle"};
    for (std::size_t i = 0; i < 7; ++i) out.conditions[i].name = names[i];

    auto fb_left = [&](const std::vector<Scalar>& v, std::size_t q, const Scalar& s,
                       std::vector<Scalar>& acc) {
        for (std::size_t t = 0; t < wd; ++t)
            if (v[t] != 0) axpy(acc, E.fiber.b[t * wd + q], v[t] * s);
    };
    auto fb_right = [&](std::size_t p, const std::vector<Scalar>& v, const Scalar& s,
                        std::vector<Scalar>& acc) {
        for (std::size_t t = 0; t < wd; ++t)
            if (v[t] != 0) axpy(acc, E.fiber.b[p * wd + t], v[t] * s);
    };
    auto record = [&](std::size_t cond, std::size_t a, std::size_t b, std::size_t c,
                      std::vector<Scalar> d) {
        auto& v = out.conditions[cond];
        if (!v.pass) return;
        v.pass = false;
        v.witness = {a, b, c};
        v.defect = std::move(d);
        out.pass = false;
    };

    // conditions on one base element and two fiber elements
    for (std::size_t x = 0; x < bc; ++x) {
        for (std::size_t al = 0; al < wd; ++al) {
            for (std::size_t be = 0; be < wd; ++be) {
                const auto& fab = E.fiber.b[al * wd + be];
                std::vector<Scalar> d(wd, 0);
                apply_cols(E.l[x], fab, Scalar(1), d);
                fb_left(E.l[x][al], be, Scalar(-1), d);
                fb_right(al, E.l[x][be], Scalar(-1), d);
                if (!is_zero(d)) record(0, x, al, be, std::move(d));

                d.assign(wd, 0);
                apply_cols(E.r[x], fab, Scalar(1), d);
                fb_right(al, E.r[x][be], Scalar(-1), d);
                fb_right(be, E.r[x][al], Scalar(1), d);
                if (!is_zero(d)) record(1, x, al, be, std::move(d));

                d.assign(wd, 0);
                std::vector<Scalar> lr(wd, 0);
                axpy(lr, E.l[x][al], Scalar(1));
                axpy(lr, E.r[x][al], Scalar(1));
                fb_left(lr, be, Scalar(1), d);
                if (!is_zero(d)) record(2, x, al, be, std::move(d));
            }
        }
    }

    // conditions on two base elements and one fiber element
    for (std::size_t x = 0; x < bc; ++x) {
        for (std::size_t y = 0; y < bc; ++y) {
            const auto& kxy = E.base.b[x * bc + y];
            for (std::size_t al = 0; al < wd; ++al) {
                std::vector<Scalar> d(wd, 0);
                apply_cols(E.l[x], E.l[y][al], Scalar(1), d);
                apply_cols(E.l[y], E.l[x][al], Scalar(-1), d);
                for (std::size_t p = 0; p < bc; ++p)
                    if (kxy[p] != 0) axpy(d, E.l[p][al], -kxy[p]);
                fb_left(E.varpi[x][y], al, Scalar(-1), d);
                if (!is_zero(d)) record(3, x, y, al, std::move(d));

                d.assign(wd, 0);
                apply_cols(E.l[x], E.r[y][al], Scalar(1), d);
                apply_cols(E.r[y], E.l[x][al], Scalar(-1), d);
                for (std::size_t p = 0; p < bc; ++p)
                    if (kxy[p] != 0) axpy(d, E.r[p][al], -kxy[p]);
                fb_right(al, E.varpi[x][y], Scalar(-1), d);
                if (!is_zero(d)) record(4, x, y, al, std::move(d));

                d.assign(wd, 0);
                std::vector<Scalar> lr(wd, 0);
                axpy(lr, E.r[x][al], Scalar(1));
                axpy(lr, E.l[x][al], Scalar(1));
                apply_cols(E.r[y], lr, Scalar(1), d);
                if (!is_zero(d)) record(5, x, y, al, std::move(d));
            }
        }
    }

    // cocycle condition on three base elements
    for (std::size_t x = 0; x < bc; ++x) {
        for (std::size_t y = 0; y < bc; ++y) {
            const auto& kxy = E.base.b[x * bc + y];
            for (std::size_t z = 0; z < bc; ++z) {
                std::vector<Scalar> d(wd, 0);
                apply_cols(E.l[x], E.varpi[y][z], Scalar(1), d);
                apply_cols(E.l[y], E.varpi[x][z], Scalar(-1), d);
                apply_cols(E.r[z], E.varpi[x][y], Scalar(-1), d);
                for (std::size_t p = 0; p < bc; ++p)
                    if (kxy[p] != 0) axpy(d, E.varpi[p][z], -kxy[p]);
                const auto& kyz = E.base.b[y * bc + z];
                for (std::size_t q = 0; q < bc; ++q)
                    if (kyz[q] != 0) axpy(d, E.varpi[x][q], kyz[q]);
                const auto& kxz = E.base.b[x * bc + z];
                for (std::size_t q = 0; q < bc; ++q)
                    if (kxz[q] != 0) axpy(d, E.varpi[y][q], -kxz[q]);
                if (!is_zero(d)) record(6, x, y, z, std::move(d));
            }
        }
    }
    return out;
}

LeibnizAlgebra assemble_leibniz_extension(const LeibnizExtensionDatum& E) {
    const std::size_t bc = E.base.dim, wd = E.fiber.dim;
    const std::size_t n = wd + bc;
    std::vector<std::string> names = E.fiber.names;
    names.insert(names.end(), E.base.names.begin(), E.base.names.end());
    LeibnizAlgebra A = make_leibniz(E.fiber.space + "+" + E.base.space, std::move(names));
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            auto& row = A.b[p * n + q];
            if (p >= wd && q >= wd) {
                const auto& brow = E.base.b[(p - wd) * bc + (q - wd)];
                for (std::size_t t = 0; t < bc; ++t) row[wd + t] = brow[t];
                const auto& vp = E.varpi[p - wd][q - wd];
                for (std::size_t t = 0; t < wd; ++t) row[t] += vp[t];
            } else if (p >= wd) {
                const auto& lv = E.l[p - wd][q];
                for (std::size_t t = 0; t < wd; ++t) row[t] = lv[t];
            } else if (q >= wd) {
                const auto& rv = E.r[q - wd][p];
                for (std::size_t t = 0; t < wd; ++t) row[t] = rv[t];
            } else {
                const auto& fv = E.fiber.b[p * wd + q];
                for (std::size_t t = 0; t < wd; ++t) row[t] = fv[t];
            }
        }
    }
    return A;
}

TransportVerdict fundamental_oracle_check(const ExtensionDatum& D) {
    require_certified(D, "fundamental_oracle_check");
    const LeibnizExtensionDatum E = build_l_r_varpi(D);
    const LeibnizAlgebra A = assemble_leibniz_extension(E);
    const LeibnizAlgebra F = fundamental_leibniz(extension_bracket(D));

    const std::size_t gd = D.g.dim, hd = D.h.dim;
    std::vector<std::size_t> tr(F.dim);
    for (std::size_t m = 0; m < F.dim; ++m) {
        const auto ij = pair_unrank(gd + hd, m);
        if (ij[1] < gd)
            tr[m] = E.w.dim + pair_rank(gd, ij[0], ij[1]);
        else if (ij[0] < gd)
            tr[m] = w_tensor_index(E.w, ij[0], ij[1] - gd);
        else
            tr[m] = w_wedge_index(E.w, ij[0] - gd, ij[1] - gd);
    }

    TransportVerdict v;
    for (std::size_t p = 0; p < F.dim; ++p) {
        for (std::size_t q = 0; q < F.dim; ++q) {
            const auto& frow = F.b[p * F.dim + q];
            std::vector<Scalar> want(F.dim, 0);
            for (std::size_t m = 0; m < F.dim; ++m) want[tr[m]] = frow[m];
            const auto& got = A.b[tr[p] * A.dim + tr[q]];
            if (got != want) {
                v.pass = false;
                v.witness = {p, q};
                v.got = got;
                v.want = std::move(want);
                return v;
            }
        }
    }
    return v;
}

}  // namespace trilie
