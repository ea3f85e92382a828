#pragma once

#include <cstdint>
#include <vector>

#include "trilie/core.hpp"

namespace fixtures {

using trilie::Scalar;
using trilie::ThreeLieAlgebra;

// 4-dim simple algebra: [x1,x2,x3]=x4, [x1,x2,x4]=x3, [x1,x3,x4]=x2, [x2,x3,x4]=x1
inline ThreeLieAlgebra simple4() {
    auto A = trilie::make_three_lie("g", {"x1", "x2", "x3", "x4"});
    A.c[trilie::triple_rank(4, 0, 1, 2)][3] = 1;
    A.c[trilie::triple_rank(4, 0, 1, 3)][2] = 1;
    A.c[trilie::triple_rank(4, 0, 2, 3)][1] = 1;
    A.c[trilie::triple_rank(4, 1, 2, 3)][0] = 1;
    return A;
}

// 3-dim algebra [e1,e2,e3] = e1, used as both base and fiber in the ten families
inline ThreeLieAlgebra dim3(const std::string& space, const std::string& prefix) {
    auto A = trilie::make_three_lie(space,
                                    {prefix + "1", prefix + "2", prefix + "3"});
    A.c[0][0] = 1;
    return A;
}

// deterministic 64-bit stream for randomized properties
struct SplitMix64 {
    std::uint64_t s;
    explicit SplitMix64(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform integer in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// random 3-dim ternary bracket; every skew trilinear bracket in dim 3 satisfies
// the fundamental identity, so these are certified by construction
inline ThreeLieAlgebra random_dim3(SplitMix64& rng, const std::string& space,
                                   const std::string& prefix, long lo = -2, long hi = 2) {
    auto A = dim3(space, prefix);
    for (int t = 0; t < 3; ++t) A.c[0][t] = rng.range(lo, hi);
    return A;
}

}  // namespace fixtures
