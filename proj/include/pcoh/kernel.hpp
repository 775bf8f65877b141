#pragma once

#include <string>
#include <vector>

#include "pcoh/cone.hpp"
#include "pcoh/morphism.hpp"

namespace pcoh {

// A finite measurable space carrying the full power-set sigma-algebra, so
// every function out of it is measurable and only bounds remain to check.
class DiscreteSpace {
public:
    explicit DiscreteSpace(WebPtr points);
    explicit DiscreteSpace(std::vector<std::string> labels);

    const WebPtr& points() const { return points_; }
    int size() const { return points_->size(); }

    bool operator==(const DiscreteSpace& other) const { return *points_ == *other.points_; }
    bool operator!=(const DiscreteSpace& other) const { return !(*this == other); }

private:
    WebPtr points_;
};

// Measures on a discrete space: all nonnegative vectors over the points,
// normed by total mass.
class MeasureCone final : public Cone {
public:
    explicit MeasureCone(DiscreteSpace space) : space_(std::move(space)) {}

    const WebPtr& web() const override { return space_.points(); }
    std::string describe() const override;
    Rat norm(const RatVec& x) const override;
    bool carrier_ok(const RatVec& x) const override { return x.is_nonnegative(); }
    RatVec coordinate_witness(int coord) const override { return RatVec::unit(coord); }

    const DiscreteSpace& space() const { return space_; }

private:
    DiscreteSpace space_;
};

ConePtr make_measure_cone(DiscreteSpace space);

// The PCS whose unit ball is the subprobability simplex over the points;
// linear maps of measure cones are exactly matrices between these spaces.
Pcs measure_pcs(const DiscreteSpace& s);

// A substochastic kernel: one subprobability measure on the codomain per
// domain point. Row masses above one are rejected at construction.
class Kernel {
public:
    static Kernel make(DiscreteSpace dom, DiscreteSpace cod, std::vector<RatVec> rows);

    const DiscreteSpace& dom() const { return dom_; }
    const DiscreteSpace& cod() const { return cod_; }
    const std::vector<RatVec>& rows() const { return rows_; }
    const RatVec& row(int r) const { return rows_[static_cast<std::size_t>(r)]; }

    // K(r, V): the measure row r assigns to a set of codomain points.
    Rat mass(int r, const std::vector<int>& subset) const;

    bool operator==(const Kernel& other) const;
    bool operator!=(const Kernel& other) const { return !(*this == other); }

private:
    Kernel(DiscreteSpace dom, DiscreteSpace cod, std::vector<RatVec> rows)
        : dom_(std::move(dom)), cod_(std::move(cod)), rows_(std::move(rows)) {}
    DiscreteSpace dom_;
    DiscreteSpace cod_;
    std::vector<RatVec> rows_;
};

Kernel identity_kernel(DiscreteSpace s);

// (k ; l)(r, V) = sum_y k(r, {y}) * l(y, V), diagrammatic order.
Kernel kernel_compose(const Kernel& k, const Kernel& l);

// The linear map of measure cones induced by a kernel, and its inverse
// reading: a matrix acts on Dirac measures to reveal its kernel rows.
MorphMatrix lin_of_kern(const Kernel& k);
Kernel kern_of_lin(const MorphMatrix& t);

// A measurability test: evaluate a measure on a subset of the points.
struct MeasTest {
    DiscreteSpace space;
    std::vector<int> subset;  // sorted, duplicate-free point indices
};

MeasTest meas_test(DiscreteSpace space, std::vector<int> subset);
Rat test_eval(const MeasTest& l, const ConeElem& mu);

// A measurable path at discrete scale: a family of candidate measures, one
// per domain point. The path is valid when every row is a subprobability
// measure; every test then evaluates to a bounded rational automatically,
// which the check confirms subset-by-subset on small codomains. This takes
// raw rows because a constructed Kernel already enforces the bound.
bool path_check(const DiscreteSpace& dom, const DiscreteSpace& cod,
                const std::vector<RatVec>& rows);

}  // namespace pcoh
