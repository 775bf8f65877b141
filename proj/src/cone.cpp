#include "pcoh/cone.hpp"

#include "pcoh/errors.hpp"

namespace pcoh {

namespace {

void require_same_cone(const ConeElem& x, const ConeElem& y) {
    if (x.cone == y.cone) return;
    if (!x.cone || !y.cone || *x.cone->web() != *y.cone->web())
        throw WebMismatchError("cone elements belong to different cones");
}

}  // namespace

RatVec PcsCone::coordinate_witness(int coord) const {
    // The axis direction scaled into the polar: sup of the coordinate over
    // the ball is positive and finite for a valid PCS.
    Rat sup = space_.ball().support(RatVec::unit(coord));
    return RatVec::unit(coord).scaled(Rat(1) / sup);
}

ConePtr make_pcs_cone(Pcs space) { return std::make_shared<PcsCone>(std::move(space)); }

ConeElem elem(ConePtr cone, RatVec vec) {
    if (!cone) throw PcohError("element needs a cone");
    if (vec.max_index() >= cone->web()->size())
        throw WebMismatchError("element vector lives outside the cone's web");
    if (!vec.is_nonnegative())
        throw PartialityError("cone elements are nonnegative");
    if (!cone->carrier_ok(vec))
        throw PartialityError("vector violates the cone's carrier constraint");
    cone->norm(vec);  // throws if not finite
    return ConeElem{std::move(cone), std::move(vec)};
}

bool cone_leq(const ConeElem& x, const ConeElem& y) {
    require_same_cone(x, y);
    if (!x.vec.leq(y.vec)) return false;
    // The difference must itself be an element of the cone: automatic for
    // PCS/product/measure carriers, a real constraint for equalizers.
    return x.cone->carrier_ok(y.vec - x.vec);
}

ConeElem cone_add(const ConeElem& x, const ConeElem& y) {
    require_same_cone(x, y);
    return elem(x.cone, x.vec + y.vec);
}

ConeElem cone_scale(const Rat& q, const ConeElem& x) {
    if (q < 0) throw PartialityError("cone scaling needs a nonnegative scalar");
    return elem(x.cone, x.vec.scaled(q));
}

ConeElem cone_sub(const ConeElem& y, const ConeElem& x) {
    require_same_cone(x, y);
    if (!cone_leq(x, y))
        throw PartialityError("subtraction defined only when the subtrahend is below");
    return ConeElem{y.cone, y.vec - x.vec};
}

ConeElem sum_family(const std::vector<ConeElem>& xs, const Rat& bound) {
    if (xs.empty()) throw PcohError("sum of an empty family needs a cone handle");
    RatVec acc;
    for (const auto& x : xs) {
        require_same_cone(xs.front(), x);
        acc = acc + x.vec;
        Rat n = xs.front().cone->norm(acc);
        if (n > bound)
            throw BoundError("partial sum norm " + rat_str(n) + " exceeds bound " +
                             rat_str(bound));
    }
    return elem(xs.front().cone, acc);
}

ConeElem lub_chain(const std::vector<ConeElem>& chain) {
    if (chain.empty()) throw PcohError("lub of an empty chain needs a cone handle");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!cone_leq(chain[i], chain[i + 1]))
            throw PartialityError("chain is not monotone at position " + std::to_string(i));
    RatVec lub;
    for (const auto& x : chain) lub = lub.max_with(x.vec);
    // For a monotone chain the coordinatewise max is the last element.
    if (lub != chain.back().vec)
        throw InvariantError("chain lub differs from the last element");
    return elem(chain.front().cone, lub);
}

std::optional<RatVec> separated_witness(const ConeElem& x, const ConeElem& y) {
    require_same_cone(x, y);
    if (x.vec == y.vec) return std::nullopt;
    // Find a coordinate where they differ; a scaled axis functional from the
    // dual unit ball tells them apart.
    int coord = -1;
    {
        auto a = x.vec.entries().begin();
        auto b = y.vec.entries().begin();
        while (coord < 0) {
            if (a == x.vec.entries().end() && b == y.vec.entries().end()) break;
            if (b == y.vec.entries().end() ||
                (a != x.vec.entries().end() && a->first < b->first))
                coord = a->first;
            else if (a == x.vec.entries().end() || b->first < a->first)
                coord = b->first;
            else if (a->second != b->second)
                coord = a->first;
            else
                ++a, ++b;
        }
    }
    if (coord < 0) return std::nullopt;  // unreachable: vectors differ
    RatVec w = x.cone->coordinate_witness(coord);
    if (x.vec.dot(w) == y.vec.dot(w))
        throw InvariantError("separation witness failed its own check");
    return w;
}

}  // namespace pcoh
