#pragma once

#include "trilie/core.hpp"

namespace trilie {

// Split extension data on g + h: rho acts on h per canonical g-pair, nu[i] is
// a skew bilinear map on h per g-basis index (canonical h-pairs stored), and
// omega assigns an h-vector to each canonical g-triple. The compatibility
// equations are checked by extension_defects, never assumed.
struct ExtensionDatum {
    ThreeLieAlgebra g, h;
    std::vector<std::vector<std::vector<Scalar>>> rho;  // [g-pair][h-column] -> h-vector
    std::vector<std::vector<std::vector<Scalar>>> nu;   // [g-index][h-pair]  -> h-vector
    std::vector<std::vector<Scalar>> omega;             // [g-triple]         -> h-vector
};

ExtensionDatum make_extension_datum(ThreeLieAlgebra g, ThreeLieAlgebra h);
bool datum_equal(const ExtensionDatum& a, const ExtensionDatum& b);

// accessors with sign resolution; *_vec variants extend multilinearly
std::vector<Scalar> ext_rho(const ExtensionDatum& D, std::size_t i, std::size_t j,
                            const std::vector<Scalar>& v);
std::vector<Scalar> ext_rho_vec(const ExtensionDatum& D, const std::vector<Scalar>& x,
                                const std::vector<Scalar>& y, const std::vector<Scalar>& v);
std::vector<Scalar> ext_nu(const ExtensionDatum& D, std::size_t i, const std::vector<Scalar>& u,
                           const std::vector<Scalar>& v);
std::vector<Scalar> ext_nu_vec(const ExtensionDatum& D, const std::vector<Scalar>& x,
                               const std::vector<Scalar>& u, const std::vector<Scalar>& v);
std::vector<Scalar> ext_omega(const ExtensionDatum& D, const std::vector<Scalar>& x,
                              const std::vector<Scalar>& y, const std::vector<Scalar>& z);

// 3-Lie structure on g + h (g block first):
//   [x1+v1,x2+v2,x3+v3] = [x1,x2,x3]_g + omega(x1,x2,x3)
//     + rho(x1,x2)v3 + rho(x2,x3)v1 + rho(x3,x1)v2
//     + nu(x1)(v2,v3) + nu(x2)(v3,v1) + nu(x3)(v1,v2) + [v1,v2,v3]_h
ThreeLieAlgebra extension_bracket(const ExtensionDatum& D);

// One compatibility equation per argument sector. The name records the
// g/h pattern of the five arguments the equation governs; the witness holds
// basis indices into g or h according to that pattern.
struct SectorVerdict {
    std::string name;
    bool pass = true;
    std::array<std::size_t, 5> witness{};
    std::vector<Scalar> defect;  // in h
};
struct ExtensionVerdict {
    bool pass = true;
    std::vector<SectorVerdict> sectors;  // the eleven equations, fixed order
};
ExtensionVerdict extension_defects(const ExtensionDatum& D);

// The three difference equations a connecting map xi: g -> h must satisfy for
// the data D1, D2 to present isomorphic extensions (D2 carries the transformed
// structure). Witness indices follow each condition's argument pattern.
struct IsoVerdict {
    bool pass = true;
    std::string condition;  // "nu-diff", "rho-diff" or "omega-diff"
    std::array<std::size_t, 3> witness{};
    std::vector<Scalar> defect;  // in h
};
IsoVerdict is_extension_isomorphism(const LinearMap& xi, const ExtensionDatum& D1,
                                    const ExtensionDatum& D2);

// Builds theta(x+u) = x - xi(x) + u and checks it is a morphism of the
// assembled algebras, extension_bracket(D2) -> extension_bracket(D1).
TripleVerdict theta_morphism_check(const LinearMap& xi, const ExtensionDatum& D1,
                                   const ExtensionDatum& D2);

}  // namespace trilie
