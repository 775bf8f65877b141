#pragma once

#include <vector>

#include "pcoh/cone.hpp"
#include "pcoh/pcs.hpp"

namespace pcoh {

// A morphism of probabilistic coherence spaces: a matrix with nonnegative
// rational entries indexed by |dom| x |cod|, mapping the unit ball of the
// domain into the unit ball of the codomain under (t.u)_b = sum_a t_{a,b} u_a.
// Stored row-major: row a is the image of the basis direction a.
class MorphMatrix {
public:
    // Generators: verify the ball-to-ball invariant on every generator of the
    //   domain ball (exact, complete by convexity and downward closure).
    // Skip: trust the construction (used for morphisms that are valid by
    //   how they are built, e.g. permutation reindexings and composites of
    //   valid morphisms).
    enum class Check { Generators, Skip };

    static MorphMatrix make(Pcs dom, Pcs cod, std::vector<RatVec> rows,
                            Check check = Check::Generators);
    static MorphMatrix identity(const Pcs& x);
    static MorphMatrix zero(Pcs dom, Pcs cod);

    const Pcs& dom() const { return dom_; }
    const Pcs& cod() const { return cod_; }
    const std::vector<RatVec>& rows() const { return rows_; }
    const RatVec& row(int a) const { return rows_[a]; }
    Rat entry(int a, int b) const { return rows_[a].at(b); }

    RatVec apply_vec(const RatVec& x) const;

    // Vector over the pair web |dom| x |cod| (row-major), i.e. the element of
    // limpl(dom, cod) this matrix denotes.
    RatVec flatten() const;
    static MorphMatrix unflatten(Pcs dom, Pcs cod, const RatVec& flat,
                                 Check check = Check::Generators);

    // max over domain ball generators of the codomain norm of the image.
    Rat norm() const;

    bool operator==(const MorphMatrix& other) const;
    bool operator!=(const MorphMatrix& other) const { return !(*this == other); }

private:
    Pcs dom_, cod_;
    std::vector<RatVec> rows_;
};

// Application as a cone-element map (ball to ball).
ConeElem apply(const MorphMatrix& t, const ConeElem& x);

// compose(s: X->Y, t: Y->Z): the morphism t after s, entries
// (t.s)_{a,c} = sum_b s_{a,b} t_{b,c}. Valid by construction.
MorphMatrix compose(const MorphMatrix& s, const MorphMatrix& t);

// Scalar multiple q*t for 0 <= q <= 1 (stays inside the ball of limpl).
MorphMatrix scale(const Rat& q, const MorphMatrix& t);

// The function space X -o Y: ball facets are the functionals
// t -> <t.u, w> over generators u of X and facets w of Y, canonicalized.
Pcs limpl(const Pcs& x, const Pcs& y);

// Cartesian product &: tagged-union web, componentwise ball.
Pcs with_product(const std::vector<Pcs>& xs);
MorphMatrix with_proj(const std::vector<Pcs>& xs, int i);
// Pairing into the product; all morphisms share a domain.
MorphMatrix with_tuple(const std::vector<MorphMatrix>& fs);

// Whether the ball is the full hypercube (every coordinate bound 1, and the
// all-ones vector is a member).
bool is_clinfty(const Pcs& x);

}  // namespace pcoh
