#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pcoh/polytope.hpp"

namespace pcoh {

// A probabilistic coherence space realized at finite scale: a web together
// with a unit ball that is convex, downward closed, bounded, and touches
// every coordinate (so the ball is its own biorthogonal closure).
//
// Infinite webs are always handled through a declared finite truncation,
// recorded on the object when one was applied.
class Pcs {
public:
    Pcs() = default;

    // Validates the ball (no degenerate coordinate). The ball may carry one
    // or both representations; operations use what is present.
    static Pcs from_ball(Polytope ball);

    const WebPtr& web() const { return ball_.web(); }
    int dim() const { return ball_.dim(); }
    const Polytope& ball() const { return ball_; }

    bool member(const RatVec& u) const { return ball_.member(u); }

    // sup{<x,u'> : u' in polar(ball)}: the facet maximum when facets are
    // known, otherwise an LP over the generators.
    Rat norm(const RatVec& x) const;

    Pcs polar() const { return from_ball(ball_.polar()); }

    std::optional<int> truncation() const { return truncation_; }
    Pcs with_truncation(int n) const;

private:
    Polytope ball_;
    std::optional<int> truncation_;
};

// Least PCS ball containing the generators: the downward-closed convex hull,
// computed with both representations canonical.
Pcs biorth_closure(WebPtr web, std::vector<RatVec> generators);

// Same set, but keeps only the (possibly redundant) generator representation.
// Used for webs too large for vertex enumeration; all queries stay exact.
Pcs pcs_from_generators_light(WebPtr web, std::vector<RatVec> generators);

Pcs pcs_from_facets(WebPtr web, std::vector<RatVec> facets);

// Built-in spaces.
Pcs pcs_one();                      // single point "*", ball [0,1]
Pcs pcs_top();                      // empty web, ball {0}
Pcs pcs_simplex(WebPtr web);        // sum of coordinates at most 1
Pcs pcs_hypercube(WebPtr web);      // every coordinate at most 1
Pcs pcs_snat(int n);                // simplex truncated to n points of the web
Pcs pcs_orth_snat(int n);           // its dual hypercube, same truncation

// Verifies the three closure properties on probes built from the sample:
// convex combinations, coordinatewise-smaller vectors, and least upper
// bounds of monotone chains. `property` names what failed.
struct ClosureCheck {
    bool ok = true;
    std::string property;  // "sample" | "convex" | "down" | "chain"
    RatVec witness;
};

ClosureCheck closure_characterization_check(const Web& web,
                                            const std::vector<RatVec>& sample,
                                            const Pcs& space);

// Predicate-based variant (used to exhibit failures on corrupted membership
// rules; a genuine Pcs ball always passes).
ClosureCheck closure_characterization_check(
    const Web& web, const std::vector<RatVec>& sample,
    const std::function<bool(const RatVec&)>& member);

}  // namespace pcoh
