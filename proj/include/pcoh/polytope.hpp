#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcoh/lp.hpp"
#include "pcoh/ratvec.hpp"
#include "pcoh/web.hpp"

namespace pcoh {

// A downward-closed convex subset of the nonnegative orthant indexed by a web,
// in the role of a unit ball. Carries an H-representation (facet rows f with
// ball = {x >= 0 : <f,x> <= 1 for all f}), a V-representation (generators g
// with ball = down-closed convex hull of the g), or both. Nonnegativity of
// coordinates is implicit and never stored as a row.
//
// Decision operations work from whichever representation is present, so webs
// too large for vertex enumeration still support membership, support values,
// norms and separation exactly via LP.
class Polytope {
public:
    Polytope() = default;

    static Polytope from_hrep(WebPtr web, std::vector<RatVec> facets);
    static Polytope from_vrep(WebPtr web, std::vector<RatVec> gens);
    static Polytope from_both(WebPtr web, std::vector<RatVec> facets,
                              std::vector<RatVec> gens, bool canonical = false);

    const WebPtr& web() const { return web_; }
    int dim() const { return web_ ? web_->size() : 0; }

    bool has_hrep() const { return hrep_.has_value(); }
    bool has_vrep() const { return vrep_.has_value(); }
    bool is_canonical() const { return canonical_; }
    const std::vector<RatVec>& hrep() const;
    const std::vector<RatVec>& vrep() const;

    // Exact membership of u in the ball (false for vectors outside the cone).
    bool member(const RatVec& u) const;

    // sup{ <w,x> : x in ball } for w >= 0. Throws DegenerateCoordinateError
    // when the set is unbounded in direction w (invalid as a ball).
    Rat support(const RatVec& w) const;

    // nullopt when v is a member; otherwise a certificate y in the polar with
    // <v,y> > 1, both properties re-checked exactly before returning.
    std::optional<RatVec> separate(const RatVec& v) const;

    // Polar dual. Pure representation swap: facets become generators and
    // vice versa; canonicality is preserved (facet irredundancy and generator
    // non-domination are dual properties).
    Polytope polar() const;

    // Both representations present and canonical (deterministic order).
    Polytope converted(int dd_dim_cap = kDefaultDimCap) const;

    // Canonicalize whatever representations are present (no conversion).
    Polytope canonicalized() const;

    // Set equality (independent of representation).
    bool same_set(const Polytope& other) const;

    // Ball validity for PCS use: bounded, and every coordinate reaches a
    // strictly positive value. Returns a violating web index, or nullopt.
    std::optional<int> ball_defect() const;

    static constexpr int kDefaultDimCap = 16;

private:
    WebPtr web_;
    std::optional<std::vector<RatVec>> hrep_;
    std::optional<std::vector<RatVec>> vrep_;
    bool canonical_ = false;
};

// Vertex enumeration for {x >= 0 : <f,x> <= 1, f in facets} by incremental
// double description with exact rank-based adjacency. Throws
// DegenerateCoordinateError if the set is unbounded, SizeCapError over the cap.
std::vector<RatVec> enumerate_ball_generators(const std::vector<RatVec>& facets,
                                              int dim, int dim_cap = Polytope::kDefaultDimCap);

// Irredundant sorted generator list with the same down-closed convex hull.
std::vector<RatVec> prune_generators(std::vector<RatVec> gens);

// Irredundant sorted facet list cutting out the same set of the cone.
std::vector<RatVec> prune_facets(std::vector<RatVec> facets);

// Membership of u in the down-closed convex hull of gens (LP route).
bool in_down_hull(const RatVec& u, const std::vector<RatVec>& gens);

}  // namespace pcoh
