#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pcoh/morphism.hpp"

namespace pcoh {

// The degree-truncated exponential space over a base: the web is all
// multisets of base points of size at most `degree`, ordered by size then
// lexicographically, with labels like "[a,a,b]". The attached object is a
// light inner approximation of the true ball: generator promotions plus the
// promotion of the generator barycenter (the latter gives every mixed
// multiset coordinate a strictly positive reach). Membership through the
// object is therefore one-sided; see bang_dual_refute for the dual side.
class BangSpace {
public:
    explicit BangSpace(Pcs base, int degree, int web_cap = 5000);

    const Pcs& base() const { return base_; }
    int degree() const { return degree_; }
    const Pcs& object() const { return object_; }
    const WebPtr& web() const { return object_.web(); }
    int size() const { return static_cast<int>(multisets_.size()); }

    // Sorted base-web indices with multiplicity.
    const std::vector<int>& multiset(int index) const { return multisets_[index]; }
    // Index of a sorted multiset, -1 when it exceeds the degree bound.
    int index_of(const std::vector<int>& sorted_elems) const;
    // x^m: the product of x_a over the multiset, with multiplicity.
    Rat monomial(const RatVec& x, int index) const;

private:
    Pcs base_;
    int degree_;
    std::vector<std::vector<int>> multisets_;
    std::map<std::vector<int>, int> lookup_;
    Pcs object_;
};

// Promotion x^! with (x^!)_m = x^m and no combinatorial factor.
// Requires norm(x) <= 1 in the base.
RatVec promote_vec(const BangSpace& bs, const RatVec& x);
ConeElem promote(const ConeElem& x, int degree);

// Counit: picks out the singleton-multiset coordinates; der . x^! = x.
MorphMatrix dereliction(const Pcs& base, int degree);

// Comultiplication into an outer bang of an inner bang: entry 1 at
// (flatten(M), M); digg . x^! = (x^!)^!. Requires degree >= outer * inner.
MorphMatrix digging(const Pcs& base, int degree, int outer, int inner);

// Partial identity dropping multisets above the target degree.
MorphMatrix truncation_morphism(const Pcs& base, int from_degree, int to_degree);

// Functorial action: (!f)_{m,p} is the coefficient of x^m in the expansion
// of prod_b (sum_a f_{a,b} x_a)^{p(b)}, so that (!f) . x^! = (f.x)^!.
MorphMatrix bang_functor(const MorphMatrix& f, int degree);

// Seely isomorphisms. The unit part identifies 1 with the bang of the empty
// space; the binary part maps x^! (x) y^! to (x,y)^! over the product web,
// zeroing pairs whose merged size exceeds the truncation degree.
MorphMatrix seely_zero(int degree);
MorphMatrix seely_zero_inv(int degree);
MorphMatrix seely_two(const Pcs& p, const Pcs& q, int degree);
MorphMatrix seely_two_inv(const Pcs& p, const Pcs& q, int degree);

// A stable (power-series) function: a matrix over multisets of the domain
// times the codomain web, evaluated by f^(x)_b = sum_m f_{m,b} x^m. The
// matrix is validated on generator promotions of the domain unless skipped.
class StableFn {
public:
    static StableFn make(BangSpace dom, Pcs cod, std::vector<RatVec> rows,
                         MorphMatrix::Check check = MorphMatrix::Check::Generators);

    const BangSpace& dom_space() const { return dom_; }
    const Pcs& cod() const { return mat_.cod(); }
    const MorphMatrix& matrix() const { return mat_; }

    RatVec eval_vec(const RatVec& x) const;

    bool operator==(const StableFn& other) const;
    bool operator!=(const StableFn& other) const { return !(*this == other); }

private:
    StableFn(BangSpace dom, MorphMatrix mat) : dom_(std::move(dom)), mat_(std::move(mat)) {}
    BangSpace dom_;
    MorphMatrix mat_;
};

ConeElem eval_stable(const StableFn& f, const ConeElem& x);

// The identity as a stable function (the dereliction matrix).
StableFn dereliction_stable(const Pcs& base, int degree);

// Matrix of g^ after f^ by exact sparse polynomial composition. Monomials
// beyond out_degree raise TruncationError; the default out_degree
// deg(f) * deg(g) always suffices.
StableFn kleisli_compose(const StableFn& f, const StableFn& g, int out_degree = -1);

// The space of stable functions from the bang domain into r (a function
// space out of the bang object).
Pcs stable_fn_space(const BangSpace& q, const Pcs& r);

// Index exchange between linear-in-P stable-in-Q maps and stable-in-Q
// linear-in-P maps: g_{m,(p,c)} = f_{p,(m,c)}. Mutually inverse.
StableFn stab_lin_exchange(const MorphMatrix& f, const BangSpace& q, const Pcs& r);
MorphMatrix stab_lin_exchange_inv(const StableFn& g, const Pcs& p, const Pcs& r);

// Total monotonicity (stability) check of a black-box function on tuples:
// for each tuple (x_1..x_n) the n-th difference must be nonnegative, i.e.
// the sum of f over subsets whose size has the same parity as n dominates
// the sum over the other subsets, coordinatewise. Each tuple must sum into
// the domain ball.
using VecFn = std::function<RatVec(const RatVec&)>;
struct StabilityReport {
    bool ok = true;
    int tuple_index = -1;            // first violating tuple, -1 when ok
    std::vector<RatVec> tuple;
    RatVec odd_sum, even_sum;        // subset sums by subset-size parity
};
StabilityReport total_monotonicity_check(const VecFn& f, const Pcs& dom,
                                         const std::vector<std::vector<RatVec>>& tuples);

// One-sided refutation of w being in the polar of the true bang ball:
// searches ball points u of the base on the rational grid with the given
// denominator for <w, u^!> > 1. A hit is a certificate; a miss only reports
// "not refuted at this grid".
struct DualRefutation {
    bool refuted = false;
    RatVec witness;   // the base ball point u with <w, u^!> > 1
    Rat value;        // <w, u^!> at the witness, or the grid maximum seen
};
DualRefutation bang_dual_refute(const BangSpace& bs, const RatVec& w, int grid_denominator);

}  // namespace pcoh
