#include "pcoh/kernel.hpp"

#include <algorithm>
#include <utility>

#include "pcoh/errors.hpp"

namespace pcoh {

namespace {

Rat total_mass(const RatVec& row) {
    Rat sum(0);
    for (const auto& [idx, v] : row.entries()) sum += v;
    return sum;
}

}  // namespace

DiscreteSpace::DiscreteSpace(WebPtr points) : points_(std::move(points)) {
    if (!points_ || points_->size() == 0)
        throw PartialityError("a discrete space needs at least one point");
}

DiscreteSpace::DiscreteSpace(std::vector<std::string> labels)
    : DiscreteSpace(make_web(std::move(labels))) {}

std::string MeasureCone::describe() const {
    return "measure cone on " + std::to_string(space_.size()) + " points";
}

Rat MeasureCone::norm(const RatVec& x) const {
    if (!x.is_nonnegative())
        throw PartialityError("measures are nonnegative");
    if (x.max_index() >= space_.size())
        throw WebMismatchError("measure lives outside the space");
    return total_mass(x);
}

ConePtr make_measure_cone(DiscreteSpace space) {
    return std::make_shared<MeasureCone>(std::move(space));
}

Pcs measure_pcs(const DiscreteSpace& s) { return pcs_simplex(s.points()); }

Kernel Kernel::make(DiscreteSpace dom, DiscreteSpace cod, std::vector<RatVec> rows) {
    if (static_cast<int>(rows.size()) != dom.size())
        throw WebMismatchError("kernel needs one row per domain point");
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_nonnegative())
            throw PartialityError("kernel row '" + dom.points()->label(static_cast<int>(r)) +
                                  "' has a negative mass");
        if (rows[r].max_index() >= cod.size())
            throw WebMismatchError("kernel row '" + dom.points()->label(static_cast<int>(r)) +
                                   "' lives outside the codomain");
        Rat mass = total_mass(rows[r]);
        if (mass > 1)
            throw BoundError("kernel row '" + dom.points()->label(static_cast<int>(r)) +
                             "' has mass " + rat_str(mass) + " > 1");
    }
    return Kernel(std::move(dom), std::move(cod), std::move(rows));
}

Rat Kernel::mass(int r, const std::vector<int>& subset) const {
    if (r < 0 || r >= dom_.size()) throw WebMismatchError("kernel row index out of range");
    Rat sum(0);
    for (int y : subset) {
        if (y < 0 || y >= cod_.size())
            throw WebMismatchError("test subset leaves the codomain");
        sum += rows_[static_cast<std::size_t>(r)].at(y);
    }
    return sum;
}

bool Kernel::operator==(const Kernel& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && rows_ == other.rows_;
}

Kernel identity_kernel(DiscreteSpace s) {
    std::vector<RatVec> rows;
    for (int r = 0; r < s.size(); ++r) rows.push_back(RatVec::unit(r));
    DiscreteSpace cod = s;
    return Kernel::make(std::move(s), std::move(cod), std::move(rows));
}

Kernel kernel_compose(const Kernel& k, const Kernel& l) {
    if (k.cod() != l.dom())
        throw WebMismatchError("kernel composition needs matching middle spaces");
    std::vector<RatVec> rows;
    for (int r = 0; r < k.dom().size(); ++r) {
        RatVec out;
        for (const auto& [y, p] : k.row(r).entries()) out = out + l.row(y).scaled(p);
        rows.push_back(std::move(out));
    }
    return Kernel::make(k.dom(), l.cod(), std::move(rows));
}

MorphMatrix lin_of_kern(const Kernel& k) {
    return MorphMatrix::make(measure_pcs(k.dom()), measure_pcs(k.cod()), k.rows());
}

Kernel kern_of_lin(const MorphMatrix& t) {
    // Rows are the images of the Dirac measures; Kernel::make rejects any
    // row of mass above one, which is exactly the norm condition.
    return Kernel::make(DiscreteSpace(t.dom().web()), DiscreteSpace(t.cod().web()),
                        t.rows());
}

MeasTest meas_test(DiscreteSpace space, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (int i : subset)
        if (i < 0 || i >= space.size())
            throw WebMismatchError("test subset leaves the space");
    return MeasTest{std::move(space), std::move(subset)};
}

Rat test_eval(const MeasTest& l, const ConeElem& mu) {
    if (*mu.cone->web() != *l.space.points())
        throw WebMismatchError("measure and test live on different spaces");
    Rat sum(0);
    for (int i : l.subset) sum += mu.vec.at(i);
    return sum;
}

bool path_check(const DiscreteSpace& dom, const DiscreteSpace& cod,
                const std::vector<RatVec>& rows) {
    if (static_cast<int>(rows.size()) != dom.size()) return false;
    for (const RatVec& row : rows) {
        if (!row.is_nonnegative()) return false;
        if (row.max_index() >= cod.size()) return false;
        if (total_mass(row) > 1) return false;
    }
    if (cod.size() <= 12) {
        // exhaustive test evaluation: every subset mass must stay within the
        // row's total, hence within one
        for (const RatVec& row : rows)
            for (unsigned mask = 0; mask < (1u << cod.size()); ++mask) {
                Rat sum(0);
                for (int y = 0; y < cod.size(); ++y)
                    if (mask & (1u << y)) sum += row.at(y);
                if (sum > 1) return false;
            }
    }
    return true;
}

}  // namespace pcoh
