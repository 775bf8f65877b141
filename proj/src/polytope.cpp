#include "pcoh/polytope.hpp"

#include <algorithm>
#include <set>

#include "pcoh/errors.hpp"

namespace pcoh {

namespace {

void validate_rows(const std::vector<RatVec>& rows, int dim, const char* what) {
    for (const auto& r : rows) {
        if (!r.is_nonnegative())
            throw InvariantError(std::string(what) + " must have nonnegative entries");
        if (r.max_index() >= dim)
            throw WebMismatchError(std::string(what) + " has an entry outside the web");
    }
}

}  // namespace

Polytope Polytope::from_hrep(WebPtr web, std::vector<RatVec> facets) {
    validate_rows(facets, web->size(), "facet row");
    Polytope p;
    p.web_ = std::move(web);
    p.hrep_ = std::move(facets);
    return p;
}

Polytope Polytope::from_vrep(WebPtr web, std::vector<RatVec> gens) {
    validate_rows(gens, web->size(), "generator");
    Polytope p;
    p.web_ = std::move(web);
    p.vrep_ = std::move(gens);
    return p;
}

Polytope Polytope::from_both(WebPtr web, std::vector<RatVec> facets,
                             std::vector<RatVec> gens, bool canonical) {
    validate_rows(facets, web->size(), "facet row");
    validate_rows(gens, web->size(), "generator");
    Polytope p;
    p.web_ = std::move(web);
    p.hrep_ = std::move(facets);
    p.vrep_ = std::move(gens);
    p.canonical_ = canonical;
    return p;
}

const std::vector<RatVec>& Polytope::hrep() const {
    if (!hrep_) throw PcohError("polytope has no facet representation");
    return *hrep_;
}

const std::vector<RatVec>& Polytope::vrep() const {
    if (!vrep_) throw PcohError("polytope has no generator representation");
    return *vrep_;
}

bool Polytope::member(const RatVec& u) const {
    if (u.max_index() >= dim())
        throw WebMismatchError("membership query vector lives outside the web");
    if (!u.is_nonnegative()) return false;
    if (hrep_) {
        for (const auto& f : *hrep_)
            if (u.dot(f) > 1) return false;
        return true;
    }
    return in_down_hull(u, *vrep_);
}

Rat Polytope::support(const RatVec& w) const {
    if (!w.is_nonnegative())
        throw PartialityError("support direction must be nonnegative");
    if (w.max_index() >= dim())
        throw WebMismatchError("support direction lives outside the web");
    if (vrep_) {
        Rat best(0);
        for (const auto& g : *vrep_) best = std::max(best, g.dot(w));
        return best;
    }
    LpOutcome r = lp_max({dim(), *hrep_, w});
    if (!r.bounded)
        throw DegenerateCoordinateError("support is unbounded in the given direction");
    return r.value;
}

std::optional<RatVec> Polytope::separate(const RatVec& v) const {
    if (!v.is_nonnegative())
        throw PartialityError("separation requires a vector in the nonnegative cone");
    if (member(v)) return std::nullopt;
    RatVec cert;
    if (hrep_) {
        for (const auto& f : *hrep_)
            if (v.dot(f) > 1) {
                cert = f;
                break;
            }
    } else {
        LpOutcome r = lp_max({dim(), *vrep_, v});
        if (!r.bounded) {
            // v has mass on a coordinate no generator touches; an axis
            // direction scaled past 1/v_i certifies.
            for (const auto& [i, vi] : v.entries()) {
                if (vi <= 0) continue;
                bool touched = false;
                for (const auto& g : *vrep_)
                    if (g.at(i) > 0) {
                        touched = true;
                        break;
                    }
                if (!touched) {
                    cert = RatVec::unit(i).scaled(rat(2) / vi);
                    break;
                }
            }
        } else {
            cert = r.argmax;
        }
    }
    // Re-check the certificate exactly before handing it out.
    if (cert.is_zero() || !cert.is_nonnegative() || v.dot(cert) <= 1)
        throw InvariantError("separation certificate failed its own check");
    if (vrep_)
        for (const auto& g : *vrep_)
            if (g.dot(cert) > 1)
                throw InvariantError("separation certificate is not in the polar");
    return cert;
}

Polytope Polytope::polar() const {
    Polytope q;
    q.web_ = web_;
    q.hrep_ = vrep_;
    q.vrep_ = hrep_;
    q.canonical_ = canonical_;
    return q;
}

Polytope Polytope::canonicalized() const {
    Polytope q = *this;
    if (q.hrep_) q.hrep_ = prune_facets(std::move(*q.hrep_));
    if (q.vrep_) q.vrep_ = prune_generators(std::move(*q.vrep_));
    q.canonical_ = true;
    return q;
}

Polytope Polytope::converted(int dd_dim_cap) const {
    if (canonical_ && hrep_ && vrep_) return *this;
    Polytope q = canonicalized();
    // Facets of the ball are exactly the canonical generators of its polar,
    // so one vertex enumerator serves both directions.
    if (!q.vrep_)
        q.vrep_ = prune_generators(enumerate_ball_generators(*q.hrep_, dim(), dd_dim_cap));
    else if (!q.hrep_)
        q.hrep_ = prune_generators(enumerate_ball_generators(*q.vrep_, dim(), dd_dim_cap));
    return q;
}

bool Polytope::same_set(const Polytope& other) const {
    if (!web_ || !other.web_ || *web_ != *other.web_)
        throw WebMismatchError("polytope comparison across different webs");
    const Polytope* a = this;
    const Polytope* b = &other;
    Polytope ca, cb;
    if (!a->vrep_) {
        ca = a->converted();
        a = &ca;
    }
    if (!b->vrep_) {
        cb = b->converted();
        b = &cb;
    }
    for (const auto& g : *a->vrep_)
        if (!b->member(g)) return false;
    for (const auto& g : *b->vrep_)
        if (!a->member(g)) return false;
    return true;
}

std::optional<int> Polytope::ball_defect() const {
    for (int i = 0; i < dim(); ++i) {
        if (vrep_) {
            bool positive = false;
            for (const auto& g : *vrep_)
                if (g.at(i) > 0) {
                    positive = true;
                    break;
                }
            if (!positive) return i;  // coordinate pinned to zero
        } else {
            bool bounded = false;
            for (const auto& f : *hrep_)
                if (f.at(i) > 0) {
                    bounded = true;
                    break;
                }
            if (!bounded) return i;  // coordinate unbounded
        }
    }
    return std::nullopt;
}

namespace {

struct DdVertex {
    std::vector<Rat> x;
    std::vector<int> tight;  // sorted constraint ids
};

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::vector<RatVec> enumerate_ball_generators(const std::vector<RatVec>& facets,
                                              int dim, int dim_cap) {
    if (dim == 0) return {};
    if (dim > dim_cap)
        throw SizeCapError("vertex enumeration above dimension cap (" + std::to_string(dim) +
                           " > " + std::to_string(dim_cap) + ")");
    const int m = static_cast<int>(facets.size());

    // Per-coordinate bound: x_i <= 1/max_j f_{j,i}. A coordinate no facet
    // touches makes the set unbounded, hence invalid as a ball.
    std::vector<Rat> bound(dim);
    for (int i = 0; i < dim; ++i) {
        Rat maxc(0);
        for (const auto& f : facets) maxc = std::max(maxc, f.at(i));
        if (maxc <= 0)
            throw DegenerateCoordinateError("coordinate " + std::to_string(i) +
                                            " is unbounded (no facet touches it)");
        bound[i] = Rat(1) / maxc;
    }

    // Constraint ids: [0,dim) lower bounds x_i >= 0; [dim,dim+m) the facets;
    // dim+m an enclosing simplex sum_i x_i/(dim*bound_i) <= 1 that never cuts
    // the ball but makes the start polytope have dim+1 vertices.
    std::vector<RatVec> normals(dim + m + 1);
    for (int i = 0; i < dim; ++i) normals[i] = RatVec::unit(i);
    for (int j = 0; j < m; ++j) normals[dim + j] = facets[j];
    RatVec apex_row;
    for (int i = 0; i < dim; ++i) apex_row.set(i, Rat(1) / (Rat(dim) * bound[i]));
    normals[dim + m] = apex_row;

    std::vector<DdVertex> verts;
    {
        DdVertex origin;
        origin.x.assign(dim, Rat(0));
        for (int i = 0; i < dim; ++i) origin.tight.push_back(i);
        verts.push_back(std::move(origin));
        for (int i = 0; i < dim; ++i) {
            DdVertex apex;
            apex.x.assign(dim, Rat(0));
            apex.x[i] = Rat(dim) * bound[i];
            for (int k = 0; k < dim; ++k)
                if (k != i) apex.tight.push_back(k);
            apex.tight.push_back(dim + m);
            verts.push_back(std::move(apex));
        }
    }

    auto adjacency_rank_ok = [&](const std::vector<int>& common) {
        if (static_cast<int>(common.size()) < dim - 1) return false;
        if (dim == 1) return true;
        std::vector<std::vector<Rat>> mat;
        mat.reserve(common.size());
        for (int id : common) mat.push_back(normals[id].to_dense(dim));
        return rat_rank(std::move(mat)) == dim - 1;
    };

    for (int j = 0; j < m; ++j) {
        const int cid = dim + j;
        const auto& f = facets[j];
        std::vector<Rat> slack(verts.size());
        for (std::size_t k = 0; k < verts.size(); ++k) {
            Rat dot(0);
            for (const auto& [i, v] : f.entries()) dot += v * verts[k].x[i];
            slack[k] = Rat(1) - dot;
        }
        bool any_out = false;
        for (const auto& s : slack)
            if (s < 0) {
                any_out = true;
                break;
            }
        if (!any_out) {
            for (std::size_t k = 0; k < verts.size(); ++k)
                if (slack[k] == 0) {
                    auto& t = verts[k].tight;
                    t.insert(std::lower_bound(t.begin(), t.end(), cid), cid);
                }
            continue;
        }

        std::vector<DdVertex> next;
        std::vector<std::size_t> ins, outs;
        for (std::size_t k = 0; k < verts.size(); ++k) {
            if (slack[k] > 0)
                ins.push_back(k);
            else if (slack[k] < 0)
                outs.push_back(k);
            else {
                DdVertex kept = verts[k];
                auto& t = kept.tight;
                t.insert(std::lower_bound(t.begin(), t.end(), cid), cid);
                next.push_back(std::move(kept));
            }
        }
        for (std::size_t k : ins) next.push_back(verts[k]);

        std::vector<DdVertex> fresh;
        for (std::size_t a : ins) {
            for (std::size_t b : outs) {
                auto common = intersect_sorted(verts[a].tight, verts[b].tight);
                if (!adjacency_rank_ok(common)) continue;
                Rat t = slack[a] / (slack[a] - slack[b]);
                DdVertex w;
                w.x.resize(dim);
                for (int i = 0; i < dim; ++i)
                    w.x[i] = verts[a].x[i] + t * (verts[b].x[i] - verts[a].x[i]);
                common.insert(std::lower_bound(common.begin(), common.end(), cid), cid);
                w.tight = std::move(common);
                fresh.push_back(std::move(w));
            }
        }
        // Degenerate cuts can reach one point along several edges; merge them.
        for (auto& w : fresh) {
            bool merged = false;
            for (auto& existing : next) {
                if (existing.x == w.x) {
                    std::vector<int> u;
                    std::set_union(existing.tight.begin(), existing.tight.end(),
                                   w.tight.begin(), w.tight.end(), std::back_inserter(u));
                    existing.tight = std::move(u);
                    merged = true;
                    break;
                }
            }
            if (!merged) next.push_back(std::move(w));
        }
        verts = std::move(next);
    }

    std::vector<RatVec> out;
    out.reserve(verts.size());
    for (const auto& v : verts) out.push_back(RatVec(v.x));
    return out;
}

bool in_down_hull(const RatVec& u, const std::vector<RatVec>& gens) {
    int d = u.max_index() + 1;
    for (const auto& g : gens) d = std::max(d, g.max_index() + 1);
    LpOutcome r = lp_max({d, gens, u});
    return r.bounded && r.value <= 1;
}

std::vector<RatVec> prune_generators(std::vector<RatVec> gens) {
    // Zero vectors add nothing: the hull is down-closed anyway.
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const RatVec& g) { return g.is_zero(); }),
               gens.end());
    std::sort(gens.begin(), gens.end(), RatVec::lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // Cheap pass: coordinatewise domination.
    std::vector<RatVec> kept;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j && gens[i].leq(gens[j]) && !(gens[j].leq(gens[i]) && j > i)) {
                // On exact ties keep the earlier one.
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(gens[i]);
    }

    // Exact pass: drop generators inside the hull of the others.
    for (std::size_t i = 0; i < kept.size();) {
        std::vector<RatVec> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        if (in_down_hull(kept[i], others))
            kept.erase(kept.begin() + static_cast<long>(i));
        else
            ++i;
    }
    return kept;
}

std::vector<RatVec> prune_facets(std::vector<RatVec> facets) {
    // Over the nonnegative cone with unit right-hand sides, a facet row is
    // implied by the others exactly when it lies in their down-closed convex
    // hull (LP duality), so facet pruning is generator pruning on the rows.
    return prune_generators(std::move(facets));
}

}  // namespace pcoh
