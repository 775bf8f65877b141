#pragma once

#include <optional>
#include <vector>

#include "pcoh/morphism.hpp"

namespace pcoh {

// Tensor product of spaces, fully realized: the ball is computed both as the
// polar of the function-space ball into the dual and as the biorthogonal
// closure of pure tensors of generators; the two canonical results are
// asserted identical. Suitable for small webs (vertex enumeration inside).
Pcs tensor(const Pcs& x, const Pcs& y);

// Tensor object in generator presentation only: the ball carries the pure
// tensors of the factor generators as a (possibly redundant) V-rep and no
// H-rep. All queries stand on LP, so large webs stay usable.
Pcs tensor_object(const Pcs& x, const Pcs& y);

// (x (x) y)_{(a,b)} = x_a * y_b over the row-major pair web.
RatVec pure_tensor_vec(const RatVec& x, const RatVec& y, int y_dim);
ConeElem pure_tensor(const ConeElem& x, const ConeElem& y);

// A bilinear map out of two spaces: coefficients indexed by ((a,b),c),
// validated on generator pairs (ball x ball lands in the codomain ball).
struct BilinMap {
    Pcs dom1, dom2, cod;
    // row-major over the pair web: row pair_index(a,b) is the image vector.
    std::vector<RatVec> rows;
};

BilinMap make_bilin(Pcs dom1, Pcs dom2, Pcs cod, std::vector<RatVec> rows);
RatVec bilin_apply(const BilinMap& f, const RatVec& x, const RatVec& y);

// The unique linear factorization of a bilinear map through the tensor:
// entries h_{(a,b),c} = coeffs((a,b),c), domain tensor_object(dom1, dom2).
MorphMatrix linofbilin(const BilinMap& f);

// Currying along the web bijection ((a,b),c) <-> (a,(b,c)); t : (X@Y) -> Z.
MorphMatrix curry(const MorphMatrix& t, const Pcs& x, const Pcs& y);
// s : X -> (Y -o Z); recovers the map out of the tensor.
MorphMatrix uncurry(const MorphMatrix& s, const Pcs& x, const Pcs& y, const Pcs& z);

// Evaluation ((X -o Y) @ X) -> Y with entry 1 at (((a,b),a),b).
MorphMatrix eval_morphism(const Pcs& x, const Pcs& y);

// Functorial action f @ g on morphisms.
MorphMatrix tensor_mm(const MorphMatrix& f, const MorphMatrix& g);

// Structural isomorphisms as 0/1 permutation matrices over structured webs.
MorphMatrix associator(const Pcs& x, const Pcs& y, const Pcs& z);      // ((X@Y)@Z)->(X@(Y@Z))
MorphMatrix associator_inv(const Pcs& x, const Pcs& y, const Pcs& z);
MorphMatrix symmetry(const Pcs& x, const Pcs& y);                      // (X@Y)->(Y@X)
MorphMatrix lunitor(const Pcs& x);                                     // (1@X)->X
MorphMatrix lunitor_inv(const Pcs& x);
MorphMatrix runitor(const Pcs& x);                                     // (X@1)->X
MorphMatrix runitor_inv(const Pcs& x);

// Separation of a point from the convex hull of *pure tensors* (not its
// downward closure) over 2x2 webs: searches a signed affine functional,
// bounded coefficients, certified exactly against all vertex pure tensors.
// Returns nullopt when the point is in the hull (LP optimum at most 1).
struct HullSeparation {
    std::vector<Rat> functional;  // dense signed coefficients over the pair web
    Rat value;                    // pairing with the query point, > 1
};
std::optional<HullSeparation> pure_tensor_hull_certificate(const Pcs& x, const Pcs& y,
                                                           const RatVec& v,
                                                           long box_bound = 8);

}  // namespace pcoh
