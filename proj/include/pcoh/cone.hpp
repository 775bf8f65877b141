#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcoh/pcs.hpp"

namespace pcoh {

// A realized positive cone: PCS cones, finite products, equalizers, and
// measure cones all implement this interface. Elements are nonnegative
// vectors over the cone's web, possibly constrained further (carrier_ok).
class Cone {
public:
    virtual ~Cone() = default;

    virtual const WebPtr& web() const = 0;
    virtual std::string describe() const = 0;

    // Norm of a nonnegative vector (finite for valid cones).
    virtual Rat norm(const RatVec& x) const = 0;

    // Whether a nonnegative vector satisfies the cone's carrier constraint
    // (always true for PCS, product and measure cones; the equalizer cone
    // requires both maps to agree on it).
    virtual bool carrier_ok(const RatVec& x) const = 0;

    // An element of the dual unit ball pairing strictly positively with the
    // given coordinate; used to build separation witnesses.
    virtual RatVec coordinate_witness(int coord) const = 0;
};

using ConePtr = std::shared_ptr<const Cone>;

struct ConeElem {
    ConePtr cone;
    RatVec vec;
};

class PcsCone final : public Cone {
public:
    explicit PcsCone(Pcs space) : space_(std::move(space)) {}

    const WebPtr& web() const override { return space_.web(); }
    std::string describe() const override { return "pcs cone"; }
    Rat norm(const RatVec& x) const override { return space_.norm(x); }
    bool carrier_ok(const RatVec& x) const override { return x.is_nonnegative(); }
    RatVec coordinate_witness(int coord) const override;

    const Pcs& space() const { return space_; }

private:
    Pcs space_;
};

ConePtr make_pcs_cone(Pcs space);

// Validating element constructor: nonnegative, inside the carrier, finite norm.
ConeElem elem(ConePtr cone, RatVec vec);

bool cone_leq(const ConeElem& x, const ConeElem& y);
ConeElem cone_add(const ConeElem& x, const ConeElem& y);
ConeElem cone_scale(const Rat& q, const ConeElem& x);

// y - x; defined only when leq(x, y) (partial operation).
ConeElem cone_sub(const ConeElem& y, const ConeElem& x);

// Sum of the family; every partial sum must stay within the norm bound.
ConeElem sum_family(const std::vector<ConeElem>& xs, const Rat& bound = Rat(1));

// Least upper bound of a finite monotone chain (its coordinatewise max).
ConeElem lub_chain(const std::vector<ConeElem>& chain);

// For x != y, an element of the dual unit ball telling them apart exactly.
std::optional<RatVec> separated_witness(const ConeElem& x, const ConeElem& y);

}  // namespace pcoh
