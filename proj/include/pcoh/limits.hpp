#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pcoh/cone.hpp"
#include "pcoh/morphism.hpp"

namespace pcoh {

// Cartesian product of realized cones over the tagged-union web. The norm is
// the maximum of the factor norms; order and algebra are componentwise.
class ProductCone final : public Cone {
public:
    explicit ProductCone(std::vector<ConePtr> factors);

    const WebPtr& web() const override { return web_; }
    std::string describe() const override;
    Rat norm(const RatVec& x) const override;
    bool carrier_ok(const RatVec& x) const override;
    RatVec coordinate_witness(int coord) const override;

    int arity() const { return static_cast<int>(factors_.size()); }
    const ConePtr& factor(int i) const { return factors_[static_cast<std::size_t>(i)]; }

    // Slice of x over factor i, reindexed to the factor's own web.
    RatVec project_vec(const RatVec& x, int i) const;
    // Tuple of per-factor vectors, laid out block by block.
    RatVec inject_vec(const std::vector<RatVec>& parts) const;

private:
    std::vector<ConePtr> factors_;
    std::vector<int> offsets_;  // block starts, plus total size at the end
    WebPtr web_;
};

ConePtr make_product_cone(std::vector<ConePtr> factors);

// Validated tupling and projection; tuple_elem requires each part to live on
// the matching factor web, and is the unique element projecting to the parts.
ConeElem tuple_elem(const ConePtr& product, const std::vector<ConeElem>& parts);
ConeElem project_elem(const ConeElem& x, int i);

// Equalizer of a parallel pair of linear maps inside an ambient cone over the
// maps' domain web: the carrier keeps exactly the vectors on which the two
// maps agree. Addition, scaling, subtraction-when-defined, norms and lubs are
// all inherited from the ambient cone, since the constraint is linear.
class EqualizerCone final : public Cone {
public:
    EqualizerCone(ConePtr ambient, MorphMatrix f, MorphMatrix g);

    const WebPtr& web() const override { return ambient_->web(); }
    std::string describe() const override;
    Rat norm(const RatVec& x) const override { return ambient_->norm(x); }
    bool carrier_ok(const RatVec& x) const override;
    RatVec coordinate_witness(int coord) const override;

    const ConePtr& ambient() const { return ambient_; }
    const MorphMatrix& left() const { return f_; }
    const MorphMatrix& right() const { return g_; }

private:
    ConePtr ambient_;
    MorphMatrix f_;
    MorphMatrix g_;
};

struct Equalizer {
    std::shared_ptr<const EqualizerCone> cone;
    // The inclusion into the ambient space is the identity matrix read as a
    // map out of the carrier subcone.
    MorphMatrix inclusion;
};

// Throws WebMismatchError unless f and g are parallel.
Equalizer equalizer(const MorphMatrix& f, const MorphMatrix& g);

// The unique factorization of h through the inclusion. Requires h to
// equalize the pair (f.h = g.h as matrices, else PartialityError); the
// returned matrix is h itself, with every generator image of its domain ball
// checked against the equalizer carrier.
MorphMatrix factor_through(const Equalizer& e, const MorphMatrix& h);

// Depth-truncated stream space over an n-letter alphabet. The web holds all
// sequences of length at most `depth`, ordered by length then lexicographic,
// labelled "eps", "0", "1", ..., "0.0", "0.1", ... The unit ball consists of
// the nonnegative vectors whose sum over every maximal antichain of the
// prefix order is at most one; maximal antichains are exactly the cuts of
// the tree (every root-to-leaf path crosses the set once), enumerated
// recursively. Their count satisfies A(0) = 1, A(k) = 1 + A(k-1)^n and the
// constructor refuses to enumerate past `antichain_cap`.
class StreamPcs {
public:
    StreamPcs(int alphabet, int depth, long long antichain_cap = 100000);

    const Pcs& space() const { return space_; }
    const WebPtr& web() const { return space_.web(); }
    int size() const { return space_.dim(); }
    int alphabet() const { return alphabet_; }
    int depth() const { return depth_; }

    int leaf_count() const { return leaf_count_; }
    int index_of(const std::vector<int>& seq) const;  // -1 if absent
    std::vector<int> sequence(int index) const;

    // The facet indicators, one per maximal antichain.
    const std::vector<RatVec>& antichains() const { return antichains_; }

    // Restriction to the depth-d block, reindexed to 0..n^d-1 (lex order).
    RatVec leaf_restriction(const RatVec& u) const;
    // The unique consistent extension of a leaf vector: interior values are
    // the sums of their children's values.
    RatVec cylinder_extension(const RatVec& leaves) const;

private:
    int alphabet_;
    int depth_;
    int leaf_count_;
    std::vector<int> offsets_;  // offsets_[l] = first index of length-l block
    std::vector<RatVec> antichains_;
    Pcs space_;
};

// The successor-sum map s on the stream space: (s.u)_b = sum_k u_{b.k} for
// sequences b below full depth, and (s.u)_a = u_a on the depth-d block, so
// that the fixed points of s are exactly the consistent cylinder vectors.
// At depth 0 the map is the identity.
MorphMatrix stream_shift(const StreamPcs& sp);

struct StreamReport {
    int alphabet = 0;
    int depth = 0;
    int web_size = 0;
    int leaves = 0;
    int equalizer_dim = 0;  // dimension of the fixed space of s, by rank
    bool dims_match = false;  // equalizer_dim == leaves
    bool iso_ok = false;      // leaf restriction/extension round-trips on samples
    bool norm_ok = false;     // norm(u) = u_eps = total leaf mass on samples
    bool ok() const { return dims_match && iso_ok && norm_ok; }
};

// Computes the equalizer of the shift map and the identity and verifies the
// linear isomorphism with measures on the n^d leaves on `samples` random
// leaf vectors. Throws SizeCapError when n^d exceeds `leaf_cap`.
StreamReport stream_equalizer_demo(int alphabet, int depth, std::uint64_t seed = 1,
                                   int samples = 8, long long leaf_cap = 4096);

}  // namespace pcoh
