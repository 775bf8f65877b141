#pragma once

#include <vector>

#include "pcoh/ratvec.hpp"

namespace pcoh {

// Linear program in the one shape everything here reduces to:
//
//     maximize <objective, x>  subject to  x >= 0 and <rows[j], x> <= 1.
//
// The origin is always feasible, so a single-phase primal simplex suffices.
// Row and objective entries may be negative (used by signed certificates).
struct LpInput {
    int dim = 0;
    std::vector<RatVec> rows;
    RatVec objective;
};

struct LpOutcome {
    bool bounded = true;
    Rat value;      // meaningful only when bounded
    RatVec argmax;  // a maximizer, exact
};

// Exact primal simplex with Bland's rule (no cycling, no tolerances).
LpOutcome lp_max(const LpInput& in);

// Rank of an exact rational matrix (Gaussian elimination).
int rat_rank(std::vector<std::vector<Rat>> m);

}  // namespace pcoh
