#pragma once

#include "trilie/core.hpp"
#include "trilie/extension.hpp"

namespace trilie {

// Multilinear map with `degree` wedge-pair slots over an ambient algebra plus
// one vector slot, valued in the ambient space itself. `split` marks the end
// of the base block when the ambient is a two-block direct sum (g first, h
// second); it equals the dimension when no splitting is meaningful. Dense
// mixed-radix table, pair ranks high, final basis index low.
struct GradedCochain {
    ThreeLieAlgebra ambient;
    std::size_t split = 0;
    std::size_t degree = 0;
    std::vector<std::vector<Scalar>> table;
};

GradedCochain zero_graded(const ThreeLieAlgebra& ambient, std::size_t split, std::size_t degree);
std::size_t graded_index(const GradedCochain& c, const std::vector<std::size_t>& pair_ranks,
                         std::size_t z);
bool graded_is_zero(const GradedCochain& c);
bool graded_equal(const GradedCochain& a, const GradedCochain& b);
void graded_add_scaled(GradedCochain& acc, const GradedCochain& b, const Scalar& s);

// the ambient bracket as the degree-1 structure element
GradedCochain structure_graded(const ThreeLieAlgebra& ambient, std::size_t split);

// block-diagonal sum algebra: pure-g and pure-h triples keep their brackets,
// mixed triples vanish; basis of g comes first
ThreeLieAlgebra direct_sum(const ThreeLieAlgebra& g, const ThreeLieAlgebra& h);

// Graded composition. For degrees p, q it inserts b into each wedge slot of a
// through (k,q)-unshuffles with sign (-1)^{kq}, splitting the displaced pair
// x^y into b(...,x)^y + x^b(...,y), and closes with the (p,q)-unshuffle term
// (-1)^{pq} a(..., b(..., x)) where b absorbs the vector slot. Degrees with
// p+q > 4 are rejected (dense tables beyond that are not supported).
GradedCochain nr_compose(const GradedCochain& a, const GradedCochain& b);
// graded commutator [[a,b]] = a.b - (-1)^{pq} b.a
GradedCochain nr_bracket(const GradedCochain& a, const GradedCochain& b);

// differential generated by the ambient structure: [[mu, c]]
GradedCochain dgla_differential(const GradedCochain& c);

// true iff all values lie in the second block and the map vanishes whenever
// every argument lies in the second block
bool is_restricted(const GradedCochain& c);

// Degree-1 packaging of extension data over the direct sum of D's g and h:
// the cochain is the difference between the extension bracket and the plain
// direct-sum bracket. cochain_to_datum inverts it and rejects (domain_error)
// any degree-1 cochain that is not exactly of that form.
GradedCochain datum_to_cochain(const ExtensionDatum& D);
ExtensionDatum cochain_to_datum(const GradedCochain& c);

// [[mu,c]] + (1/2)[[c,c]] for degree-1 c; zero exactly on extension data whose
// compatibility equations hold
GradedCochain mc_defect(const GradedCochain& c);

// Orbit move attached to a restricted degree-0 xi, truncated exactly by
// nilpotency:
//   c' = (c + [[xi,c]] + (1/2)[[xi,[[xi,c]]]])
//      - (d xi + (1/2)[[xi, d xi]] + (1/6)[[xi,[[xi, d xi]]]])
GradedCochain gauge_transform(const GradedCochain& xi, const GradedCochain& c);

}  // namespace trilie
