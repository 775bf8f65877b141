#include "pcoh/pcs.hpp"

#include <algorithm>

#include "pcoh/errors.hpp"

namespace pcoh {

Pcs Pcs::from_ball(Polytope ball) {
    if (!ball.web()) throw PcohError("ball has no web");
    if (auto bad = ball.ball_defect())
        throw DegenerateCoordinateError("coordinate '" + ball.web()->label(*bad) +
                                        "' has sup 0 or is unbounded in the ball");
    Pcs p;
    p.ball_ = std::move(ball);
    return p;
}

Rat Pcs::norm(const RatVec& x) const {
    if (!x.is_nonnegative())
        throw PartialityError("norm is defined on the nonnegative cone");
    if (x.max_index() >= dim())
        throw WebMismatchError("vector lives outside the web");
    if (ball_.has_hrep()) {
        Rat best(0);
        for (const auto& f : ball_.hrep()) best = std::max(best, x.dot(f));
        return best;
    }
    LpOutcome r = lp_max({dim(), ball_.vrep(), x});
    if (!r.bounded)
        throw DegenerateCoordinateError("norm unbounded: vector leaves the cone's support");
    return r.value;
}

Pcs Pcs::with_truncation(int n) const {
    Pcs p = *this;
    p.truncation_ = n;
    return p;
}

Pcs biorth_closure(WebPtr web, std::vector<RatVec> generators) {
    return Pcs::from_ball(Polytope::from_vrep(std::move(web), std::move(generators)).converted());
}

Pcs pcs_from_generators_light(WebPtr web, std::vector<RatVec> generators) {
    return Pcs::from_ball(Polytope::from_vrep(std::move(web), std::move(generators)));
}

Pcs pcs_from_facets(WebPtr web, std::vector<RatVec> facets) {
    return Pcs::from_ball(Polytope::from_hrep(std::move(web), std::move(facets)));
}

Pcs pcs_one() { return pcs_hypercube(make_web({"*"})); }

Pcs pcs_top() {
    return Pcs::from_ball(Polytope::from_both(make_web({}), {}, {}, true));
}

Pcs pcs_simplex(WebPtr web) {
    RatVec ones;
    std::vector<RatVec> gens;
    for (int i = 0; i < web->size(); ++i) {
        ones.set(i, rat(1));
        gens.push_back(RatVec::unit(i));
    }
    std::sort(gens.begin(), gens.end(), RatVec::lex_less);
    return Pcs::from_ball(Polytope::from_both(std::move(web), {ones}, std::move(gens), true));
}

Pcs pcs_hypercube(WebPtr web) {
    RatVec ones;
    std::vector<RatVec> facets;
    for (int i = 0; i < web->size(); ++i) {
        ones.set(i, rat(1));
        facets.push_back(RatVec::unit(i));
    }
    return Pcs::from_ball(Polytope::from_both(std::move(web), std::move(facets), {ones}, true));
}

Pcs pcs_snat(int n) { return pcs_simplex(numbered_web(n)).with_truncation(n); }

Pcs pcs_orth_snat(int n) { return pcs_hypercube(numbered_web(n)).with_truncation(n); }

ClosureCheck closure_characterization_check(
    const Web& web, const std::vector<RatVec>& sample,
    const std::function<bool(const RatVec&)>& member) {
    auto fail = [](const char* property, const RatVec& witness) {
        ClosureCheck c;
        c.ok = false;
        c.property = property;
        c.witness = witness;
        return c;
    };

    for (const auto& s : sample) {
        if (s.max_index() >= web.size())
            throw WebMismatchError("sample vector lives outside the web");
        if (!member(s)) return fail("sample", s);
    }

    // Convex combinations of sample pairs (midpoint and a 1/3:2/3 mix).
    std::vector<RatVec> verified = sample;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        for (std::size_t j = i + 1; j < sample.size(); ++j) {
            for (const auto& t : {rat(1, 2), rat(1, 3)}) {
                RatVec c = sample[i].scaled(t) + sample[j].scaled(Rat(1) - t);
                if (!member(c)) return fail("convex", c);
                verified.push_back(c);
            }
        }
    }

    // Coordinatewise-smaller vectors: global scalings and single-coordinate cuts.
    for (const auto& v : verified) {
        for (const auto& t : {rat(1, 2), rat(3, 4)}) {
            RatVec d = v.scaled(t);
            if (!member(d)) return fail("down", d);
        }
        for (const auto& [i, value] : v.entries()) {
            RatVec d = v;
            d.set(i, value / 2);
            if (!member(d)) return fail("down", d);
            d.set(i, rat(0));
            if (!member(d)) return fail("down", d);
        }
    }

    // Monotone chains (1 - 2^-k)v rising to v: every link and the lub.
    for (const auto& v : verified) {
        for (int k = 1; k <= 4; ++k) {
            Rat t = Rat(1) - rat(1, 1 << k);
            RatVec link = v.scaled(t);
            if (!member(link)) return fail("chain", link);
        }
        if (!member(v)) return fail("chain", v);
    }
    return ClosureCheck{};
}

ClosureCheck closure_characterization_check(const Web& web,
                                            const std::vector<RatVec>& sample,
                                            const Pcs& space) {
    if (web != *space.web()) throw WebMismatchError("sample web differs from space web");
    return closure_characterization_check(
        web, sample, [&space](const RatVec& u) { return space.member(u); });
}

}  // namespace pcoh
