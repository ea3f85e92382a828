#pragma once

#include "trilie/core.hpp"
#include "trilie/extension.hpp"

namespace trilie {

// Basis bookkeeping for W = wedge^2 h (+) g (x) h. All wedge pairs v_a^v_b
// (a < b, lexicographic) come first, then the tensors x_i (x) v_a in i-major
// order. Wedge names join with '^', tensor names with '@'.
struct WSpace {
    std::string space;
    std::size_t gdim = 0, hdim = 0;
    std::size_t wedge_count = 0;
    std::size_t dim = 0;
    std::vector<std::string> names;
};

WSpace make_wspace(const ThreeLieAlgebra& g, const ThreeLieAlgebra& h);
std::size_t w_wedge_index(const WSpace& W, std::size_t a, std::size_t b);  // a < b
std::size_t w_tensor_index(const WSpace& W, std::size_t i, std::size_t a);

// Leibniz bracket on W attached to certified extension data:
//   {u^v, c^d}       = [u,v,c]_h^d + c^[u,v,d]_h
//   {u^v, x(x)w}     = nu(x)(u,v)^w + x(x)[u,v,w]_h
//   {x(x)w, u^v}     = nu(x)(w,u)^v + u^nu(x)(w,v)
//   {x(x)w1, y(x)w2} = -(rho(x,y)w1)^w2 + y(x)nu(x)(w1,w2)
// Data failing extension_defects are refused with invalid_argument.
LeibnizAlgebra w_bracket(const ExtensionDatum& D);

// Split Leibniz-extension data: the base algebra acts on the fiber through l
// and r (one fiber endomorphism per base basis element, stored column-wise)
// with a bilinear twist varpi.
struct LeibnizExtensionDatum {
    LeibnizAlgebra base, fiber;
    WSpace w;                                             // fiber layout
    std::vector<std::vector<std::vector<Scalar>>> l, r;   // [base][fiber col] -> fiber
    std::vector<std::vector<std::vector<Scalar>>> varpi;  // [base][base] -> fiber
};

// base = fundamental algebra of g, fiber = w_bracket(D), and
//   l(x^y):  u^v    -> (rho(x,y)u)^v + u^(rho(x,y)v)
//            z(x)w  -> sum_t [x,y,z]_g^t x_t(x)w + omega(x,y,z)^w + z(x)rho(x,y)w
//   r(x^y):  u^v    -> -y(x)nu(x)(u,v) + x(x)nu(y)(u,v)
//            z(x)w  -> y(x)rho(z,x)w - x(x)rho(z,y)w
//   varpi(x^y, z^t) = -t(x)omega(x,y,z) + z(x)omega(x,y,t)
// Data failing extension_defects are refused with invalid_argument.
LeibnizExtensionDatum build_l_r_varpi(const ExtensionDatum& D);

// The seven compatibility conditions an (l, r, varpi) datum must satisfy for
// the assembled bracket to be Leibniz, each scanned over all basis tuples.
// Condition names, in fixed order: "l-derivation", "r-derivation",
// "left-center-1", "rep-product", "rep-mixed", "left-center-2", "cocycle".
struct ConditionVerdict {
    std::string name;
    bool pass = true;
    std::array<std::size_t, 3> witness{};
    std::vector<Scalar> defect;  // in the fiber
};
struct LeibnizExtensionVerdict {
    bool pass = true;
    std::vector<ConditionVerdict> conditions;
};
LeibnizExtensionVerdict leibniz_extension_defects(const LeibnizExtensionDatum& E);

// Leibniz bracket on fiber (+) base (fiber block first):
//   [x+al, y+be] = [x,y]_base + varpi(x,y) + l_x(be) + r_y(al) + [al,be]_fiber
// Total: no certification is assumed; the result is a Leibniz algebra exactly
// when leibniz_extension_defects passes.
LeibnizAlgebra assemble_leibniz_extension(const LeibnizExtensionDatum& E);

// Master cross-check: the fundamental algebra of the extended 3-Lie algebra,
// transported along the basis identification
//   wedge^2(g+h) = (wedge^2 h (+) g(x)h) (+) wedge^2 g
// (mixed wedges x^u map to x(x)u with sign +1), must equal the assembled
// algebra table by table. got/want hold the first differing rows.
struct TransportVerdict {
    bool pass = true;
    std::array<std::size_t, 2> witness{};  // basis pair in wedge^2(g+h)
    std::vector<Scalar> got, want;
};
TransportVerdict fundamental_oracle_check(const ExtensionDatum& D);

}  // namespace trilie
