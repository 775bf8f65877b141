#include "pcoh/morphism.hpp"

#include <algorithm>

#include "pcoh/errors.hpp"

namespace pcoh {

MorphMatrix MorphMatrix::make(Pcs dom, Pcs cod, std::vector<RatVec> rows, Check check) {
    if (static_cast<int>(rows.size()) != dom.dim())
        throw WebMismatchError("matrix row count differs from the domain web");
    for (const auto& r : rows) {
        if (!r.is_nonnegative())
            throw InvariantError("matrix entries must be nonnegative");
        if (r.max_index() >= cod.dim())
            throw WebMismatchError("matrix entry outside the codomain web");
    }
    MorphMatrix t;
    t.dom_ = std::move(dom);
    t.cod_ = std::move(cod);
    t.rows_ = std::move(rows);
    if (check == Check::Generators) {
        if (!t.dom_.ball().has_vrep())
            throw PcohError(
                "cannot check ball-to-ball on a domain without generators; "
                "construct them or pass Check::Skip for morphisms valid by construction");
        for (const auto& g : t.dom_.ball().vrep())
            if (!t.cod_.member(t.apply_vec(g)))
                throw InvariantError("matrix does not map the domain ball into the codomain ball");
    }
    return t;
}

MorphMatrix MorphMatrix::identity(const Pcs& x) {
    std::vector<RatVec> rows;
    rows.reserve(x.dim());
    for (int a = 0; a < x.dim(); ++a) rows.push_back(RatVec::unit(a));
    return make(x, x, std::move(rows), Check::Skip);
}

MorphMatrix MorphMatrix::zero(Pcs dom, Pcs cod) {
    std::vector<RatVec> rows(dom.dim());
    return make(std::move(dom), std::move(cod), std::move(rows), Check::Skip);
}

RatVec MorphMatrix::apply_vec(const RatVec& x) const {
    if (x.max_index() >= dom_.dim())
        throw WebMismatchError("vector lives outside the matrix domain");
    RatVec out;
    for (const auto& [a, v] : x.entries()) out = out + rows_[a].scaled(v);
    return out;
}

RatVec MorphMatrix::flatten() const {
    RatVec flat;
    const int n = cod_.dim();
    for (int a = 0; a < dom_.dim(); ++a)
        for (const auto& [b, v] : rows_[a].entries()) flat.set(pair_index(a, b, n), v);
    return flat;
}

MorphMatrix MorphMatrix::unflatten(Pcs dom, Pcs cod, const RatVec& flat, Check check) {
    const int n = cod.dim();
    std::vector<RatVec> rows(dom.dim());
    for (const auto& [i, v] : flat.entries()) {
        if (i >= dom.dim() * n)
            throw WebMismatchError("flattened entry outside the pair web");
        rows[i / n].set(i % n, v);
    }
    return make(std::move(dom), std::move(cod), std::move(rows), check);
}

Rat MorphMatrix::norm() const {
    if (!dom_.ball().has_vrep())
        throw PcohError("morphism norm needs domain ball generators");
    Rat best(0);
    for (const auto& g : dom_.ball().vrep())
        best = std::max(best, cod_.norm(apply_vec(g)));
    return best;
}

bool MorphMatrix::operator==(const MorphMatrix& other) const {
    return *dom_.web() == *other.dom_.web() && *cod_.web() == *other.cod_.web() &&
           rows_ == other.rows_;
}

ConeElem apply(const MorphMatrix& t, const ConeElem& x) {
    if (*x.cone->web() != *t.dom().web())
        throw WebMismatchError("element web differs from the matrix domain");
    return elem(make_pcs_cone(t.cod()), t.apply_vec(x.vec));
}

MorphMatrix compose(const MorphMatrix& s, const MorphMatrix& t) {
    if (*s.cod().web() != *t.dom().web())
        throw WebMismatchError("composition needs cod(s) = dom(t)");
    std::vector<RatVec> rows;
    rows.reserve(s.dom().dim());
    for (int a = 0; a < s.dom().dim(); ++a) rows.push_back(t.apply_vec(s.row(a)));
    // Composites of ball-preserving maps preserve the ball.
    return MorphMatrix::make(s.dom(), t.cod(), std::move(rows), MorphMatrix::Check::Skip);
}

MorphMatrix scale(const Rat& q, const MorphMatrix& t) {
    if (q < 0 || q > 1)
        throw PartialityError("morphism scaling needs a scalar in [0,1]");
    std::vector<RatVec> rows;
    rows.reserve(t.dom().dim());
    for (const auto& r : t.rows()) rows.push_back(r.scaled(q));
    return MorphMatrix::make(t.dom(), t.cod(), std::move(rows), MorphMatrix::Check::Skip);
}

Pcs limpl(const Pcs& x, const Pcs& y) {
    if (!x.ball().has_vrep())
        throw PcohError("limpl needs generators of the left ball");
    Polytope yb = y.ball().has_hrep() ? y.ball() : y.ball().converted();
    WebPtr web = pair_web(*x.web(), *y.web());
    const int n = y.dim();
    std::vector<RatVec> rows;
    for (const auto& u : x.ball().vrep()) {
        for (const auto& w : yb.hrep()) {
            RatVec row;
            for (const auto& [a, ua] : u.entries())
                for (const auto& [b, wb] : w.entries()) row.set(pair_index(a, b, n), ua * wb);
            rows.push_back(std::move(row));
        }
    }
    return pcs_from_facets(std::move(web), prune_facets(std::move(rows)));
}

Pcs with_product(const std::vector<Pcs>& xs) {
    std::vector<WebPtr> webs;
    webs.reserve(xs.size());
    for (const auto& x : xs) webs.push_back(x.web());
    WebPtr web = tagged_union_web(webs);

    std::vector<int> offset(xs.size() + 1, 0);
    for (std::size_t k = 0; k < xs.size(); ++k)
        offset[k + 1] = offset[k] + xs[k].dim();

    // Facets: every factor facet injected into its slice.
    std::vector<RatVec> facets;
    std::vector<std::vector<RatVec>> factor_gens;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        Polytope b = xs[k].ball().has_hrep() ? xs[k].ball() : xs[k].ball().converted();
        for (const auto& f : b.hrep()) {
            RatVec row;
            for (const auto& [a, v] : f.entries()) row.set(offset[k] + a, v);
            facets.push_back(std::move(row));
        }
        factor_gens.push_back(b.has_vrep() ? b.vrep() : b.converted().vrep());
    }

    // Generators: all tuples of factor generators (the ball is the product).
    std::vector<RatVec> gens{RatVec()};
    for (std::size_t k = 0; k < xs.size(); ++k) {
        std::vector<RatVec> next;
        for (const auto& base : gens) {
            for (const auto& g : factor_gens[k]) {
                RatVec v = base;
                for (const auto& [a, val] : g.entries()) v.set(offset[k] + a, val);
                next.push_back(std::move(v));
            }
        }
        gens = std::move(next);
    }

    return Pcs::from_ball(
        Polytope::from_both(std::move(web), std::move(facets), std::move(gens)).canonicalized());
}

MorphMatrix with_proj(const std::vector<Pcs>& xs, int i) {
    Pcs prod = with_product(xs);
    int off = 0;
    for (int k = 0; k < i; ++k) off += xs[k].dim();
    std::vector<RatVec> rows(prod.dim());
    for (int a = 0; a < xs[i].dim(); ++a) rows[off + a] = RatVec::unit(a);
    return MorphMatrix::make(prod, xs[i], std::move(rows), MorphMatrix::Check::Skip);
}

MorphMatrix with_tuple(const std::vector<MorphMatrix>& fs) {
    if (fs.empty()) throw PcohError("tuple of no morphisms needs a domain");
    std::vector<Pcs> cods;
    cods.reserve(fs.size());
    for (const auto& f : fs) {
        if (*f.dom().web() != *fs.front().dom().web())
            throw WebMismatchError("tupled morphisms must share their domain");
        cods.push_back(f.cod());
    }
    Pcs prod = with_product(cods);
    std::vector<int> offset(fs.size() + 1, 0);
    for (std::size_t k = 0; k < fs.size(); ++k) offset[k + 1] = offset[k] + cods[k].dim();
    std::vector<RatVec> rows;
    rows.reserve(fs.front().dom().dim());
    for (int a = 0; a < fs.front().dom().dim(); ++a) {
        RatVec row;
        for (std::size_t k = 0; k < fs.size(); ++k)
            for (const auto& [b, v] : fs[k].row(a).entries()) row.set(offset[k] + b, v);
        rows.push_back(std::move(row));
    }
    // Componentwise membership in the product ball follows from the factors.
    return MorphMatrix::make(fs.front().dom(), std::move(prod), std::move(rows),
                             MorphMatrix::Check::Skip);
}

bool is_clinfty(const Pcs& x) {
    RatVec ones;
    for (int a = 0; a < x.dim(); ++a) ones.set(a, rat(1));
    if (!x.member(ones)) return false;
    for (int a = 0; a < x.dim(); ++a)
        if (x.ball().support(RatVec::unit(a)) > 1) return false;
    return true;
}

}  // namespace pcoh
