#include "pcoh/tensor.hpp"

#include <algorithm>
#include <string>

#include "pcoh/errors.hpp"
#include "pcoh/lp.hpp"

namespace pcoh {
namespace {

// Factor ball with a guaranteed V-rep (converts when only facets are known).
Polytope with_vrep(const Pcs& p) {
    if (p.ball().has_vrep()) return p.ball();
    return p.ball().converted();
}

std::vector<RatVec> pair_generators(const Polytope& xb, const Polytope& yb, int y_dim) {
    std::vector<RatVec> gens;
    gens.reserve(xb.vrep().size() * yb.vrep().size());
    for (const auto& g : xb.vrep())
        for (const auto& h : yb.vrep()) gens.push_back(pure_tensor_vec(g, h, y_dim));
    return gens;
}

}  // namespace

RatVec pure_tensor_vec(const RatVec& x, const RatVec& y, int y_dim) {
    RatVec out;
    for (const auto& [a, xa] : x.entries())
        for (const auto& [b, yb] : y.entries()) out.set(pair_index(a, b, y_dim), xa * yb);
    return out;
}

ConeElem pure_tensor(const ConeElem& x, const ConeElem& y) {
    const auto* cx = dynamic_cast<const PcsCone*>(x.cone.get());
    const auto* cy = dynamic_cast<const PcsCone*>(y.cone.get());
    if (cx == nullptr || cy == nullptr)
        throw PartialityError("pure_tensor: both factors must live in space-backed cones");
    Pcs obj = tensor_object(cx->space(), cy->space());
    int y_dim = cy->space().web()->size();
    return elem(make_pcs_cone(obj), pure_tensor_vec(x.vec, y.vec, y_dim));
}

Pcs tensor_object(const Pcs& x, const Pcs& y) {
    WebPtr w = pair_web(*x.web(), *y.web());
    Polytope xb = with_vrep(x);
    Polytope yb = with_vrep(y);
    auto gens = pair_generators(xb, yb, y.web()->size());
    return Pcs::from_ball(Polytope::from_vrep(w, std::move(gens)));
}

Pcs tensor(const Pcs& x, const Pcs& y) {
    WebPtr w = pair_web(*x.web(), *y.web());
    Pcs xv = Pcs::from_ball(with_vrep(x));
    Pcs yv = Pcs::from_ball(with_vrep(y));

    // Route one: the ball is the polar of the function-space ball into the
    // dual of the second factor.
    Polytope route_one = limpl(xv, yv.polar()).ball().polar().converted();

    // Route two: biorthogonal closure of pure tensors of generators.
    auto gens = pair_generators(xv.ball(), yv.ball(), y.web()->size());
    Polytope route_two =
        Polytope::from_vrep(w, std::move(gens)).converted();

    if (!(route_one.hrep() == route_two.hrep() && route_one.vrep() == route_two.vrep()))
        throw InvariantError("tensor: function-space polar and pure-tensor closure disagree");
    return Pcs::from_ball(route_two);
}

BilinMap make_bilin(Pcs dom1, Pcs dom2, Pcs cod, std::vector<RatVec> rows) {
    std::size_t want = static_cast<std::size_t>(dom1.web()->size()) * dom2.web()->size();
    if (rows.size() != want)
        throw WebMismatchError("make_bilin: expected " + std::to_string(want) + " rows, got " +
                               std::to_string(rows.size()));
    int cod_dim = cod.web()->size();
    for (const auto& r : rows) {
        if (!r.is_nonnegative()) throw PartialityError("make_bilin: negative coefficient");
        if (r.max_index() >= cod_dim) throw WebMismatchError("make_bilin: row exits codomain web");
    }
    BilinMap f{std::move(dom1), std::move(dom2), std::move(cod), std::move(rows)};
    Polytope xb = with_vrep(f.dom1);
    Polytope yb = with_vrep(f.dom2);
    for (const auto& g : xb.vrep())
        for (const auto& h : yb.vrep())
            if (!f.cod.member(bilin_apply(f, g, h)))
                throw BoundError("make_bilin: image of a generator pair leaves the codomain ball");
    return f;
}

RatVec bilin_apply(const BilinMap& f, const RatVec& x, const RatVec& y) {
    int y_dim = f.dom2.web()->size();
    RatVec out;
    for (const auto& [a, xa] : x.entries())
        for (const auto& [b, yb] : y.entries()) {
            const RatVec& row = f.rows[static_cast<std::size_t>(pair_index(a, b, y_dim))];
            out = out + row.scaled(xa * yb);
        }
    return out;
}

MorphMatrix linofbilin(const BilinMap& f) {
    // Same coefficients, reread as a matrix out of the tensor object; the
    // generator-pair validation in make_bilin is exactly validity here.
    return MorphMatrix::make(tensor_object(f.dom1, f.dom2), f.cod, f.rows,
                             MorphMatrix::Check::Skip);
}

MorphMatrix curry(const MorphMatrix& t, const Pcs& x, const Pcs& y) {
    WebPtr expect = pair_web(*x.web(), *y.web());
    if (!(*t.dom().web() == *expect))
        throw WebMismatchError("curry: domain web is not the pair web of the given factors");
    const Pcs& z = t.cod();
    int ny = y.web()->size();
    int nz = z.web()->size();
    std::vector<RatVec> rows(static_cast<std::size_t>(x.web()->size()));
    for (int a = 0; a < x.web()->size(); ++a) {
        RatVec row;
        for (int b = 0; b < ny; ++b) {
            const RatVec& src = t.row(pair_index(a, b, ny));
            for (const auto& [c, v] : src.entries()) row.set(pair_index(b, c, nz), v);
        }
        rows[static_cast<std::size_t>(a)] = std::move(row);
    }
    return MorphMatrix::make(x, limpl(y, z), std::move(rows), MorphMatrix::Check::Skip);
}

MorphMatrix uncurry(const MorphMatrix& s, const Pcs& x, const Pcs& y, const Pcs& z) {
    if (!(*s.dom().web() == *x.web()))
        throw WebMismatchError("uncurry: domain web mismatch");
    WebPtr expect = pair_web(*y.web(), *z.web());
    if (!(*s.cod().web() == *expect))
        throw WebMismatchError("uncurry: codomain web is not the pair web of the given factors");
    int ny = y.web()->size();
    int nz = z.web()->size();
    std::vector<RatVec> rows(static_cast<std::size_t>(x.web()->size() * ny));
    for (int a = 0; a < x.web()->size(); ++a) {
        const RatVec& src = s.row(a);
        for (int b = 0; b < ny; ++b) {
            RatVec row;
            for (int c = 0; c < nz; ++c) {
                Rat v = src.at(pair_index(b, c, nz));
                if (v != 0) row.set(c, v);
            }
            rows[static_cast<std::size_t>(pair_index(a, b, ny))] = std::move(row);
        }
    }
    return MorphMatrix::make(tensor_object(x, y), z, std::move(rows), MorphMatrix::Check::Skip);
}

MorphMatrix eval_morphism(const Pcs& x, const Pcs& y) {
    Pcs fun = limpl(x, y);
    Pcs dom = tensor_object(Pcs::from_ball(with_vrep(fun)), x);
    int nx = x.web()->size();
    int ny = y.web()->size();
    std::vector<RatVec> rows(static_cast<std::size_t>(dom.web()->size()));
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b) {
            int fun_idx = pair_index(a, b, ny);
            rows[static_cast<std::size_t>(pair_index(fun_idx, a, nx))] = RatVec::unit(b);
        }
    return MorphMatrix::make(dom, y, std::move(rows), MorphMatrix::Check::Skip);
}

MorphMatrix tensor_mm(const MorphMatrix& f, const MorphMatrix& g) {
    Pcs dom = tensor_object(f.dom(), g.dom());
    Pcs cod = tensor_object(f.cod(), g.cod());
    int gd = g.dom().web()->size();
    int gc = g.cod().web()->size();
    std::vector<RatVec> rows(static_cast<std::size_t>(dom.web()->size()));
    for (int a = 0; a < f.dom().web()->size(); ++a)
        for (int b = 0; b < gd; ++b)
            rows[static_cast<std::size_t>(pair_index(a, b, gd))] =
                pure_tensor_vec(f.row(a), g.row(b), gc);
    return MorphMatrix::make(std::move(dom), std::move(cod), std::move(rows),
                             MorphMatrix::Check::Skip);
}

MorphMatrix associator(const Pcs& x, const Pcs& y, const Pcs& z) {
    Pcs xy = tensor_object(x, y);
    Pcs yz = tensor_object(y, z);
    Pcs dom = tensor_object(xy, z);
    Pcs cod = tensor_object(x, yz);
    int ny = y.web()->size();
    int nz = z.web()->size();
    int nyz = yz.web()->size();
    std::vector<RatVec> rows(static_cast<std::size_t>(dom.web()->size()));
    for (int a = 0; a < x.web()->size(); ++a)
        for (int b = 0; b < ny; ++b)
            for (int c = 0; c < nz; ++c)
                rows[static_cast<std::size_t>(pair_index(pair_index(a, b, ny), c, nz))] =
                    RatVec::unit(pair_index(a, pair_index(b, c, nz), nyz));
    return MorphMatrix::make(std::move(dom), std::move(cod), std::move(rows),
                             MorphMatrix::Check::Skip);
}

MorphMatrix associator_inv(const Pcs& x, const Pcs& y, const Pcs& z) {
    Pcs xy = tensor_object(x, y);
    Pcs yz = tensor_object(y, z);
    Pcs dom = tensor_object(x, yz);
    Pcs cod = tensor_object(xy, z);
    int ny = y.web()->size();
    int nz = z.web()->size();
    std::vector<RatVec> rows(static_cast<std::size_t>(dom.web()->size()));
    for (int a = 0; a < x.web()->size(); ++a)
        for (int b = 0; b < ny; ++b)
            for (int c = 0; c < nz; ++c)
                rows[static_cast<std::size_t>(
                    pair_index(a, pair_index(b, c, nz), ny * nz))] =
                    RatVec::unit(pair_index(pair_index(a, b, ny), c, nz));
    return MorphMatrix::make(std::move(dom), std::move(cod), std::move(rows),
                             MorphMatrix::Check::Skip);
}

MorphMatrix symmetry(const Pcs& x, const Pcs& y) {
    Pcs dom = tensor_object(x, y);
    Pcs cod = tensor_object(y, x);
    int nx = x.web()->size();
    int ny = y.web()->size();
    std::vector<RatVec> rows(static_cast<std::size_t>(dom.web()->size()));
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b)
            rows[static_cast<std::size_t>(pair_index(a, b, ny))] =
                RatVec::unit(pair_index(b, a, nx));
    return MorphMatrix::make(std::move(dom), std::move(cod), std::move(rows),
                             MorphMatrix::Check::Skip);
}

MorphMatrix lunitor(const Pcs& x) {
    Pcs dom = tensor_object(pcs_one(), x);
    std::vector<RatVec> rows(static_cast<std::size_t>(x.web()->size()));
    for (int a = 0; a < x.web()->size(); ++a)
        rows[static_cast<std::size_t>(a)] = RatVec::unit(a);
    return MorphMatrix::make(std::move(dom), x, std::move(rows), MorphMatrix::Check::Skip);
}

MorphMatrix lunitor_inv(const Pcs& x) {
    Pcs cod = tensor_object(pcs_one(), x);
    std::vector<RatVec> rows(static_cast<std::size_t>(x.web()->size()));
    for (int a = 0; a < x.web()->size(); ++a)
        rows[static_cast<std::size_t>(a)] = RatVec::unit(a);
    return MorphMatrix::make(x, std::move(cod), std::move(rows), MorphMatrix::Check::Skip);
}

MorphMatrix runitor(const Pcs& x) {
    Pcs dom = tensor_object(x, pcs_one());
    std::vector<RatVec> rows(static_cast<std::size_t>(x.web()->size()));
    for (int a = 0; a < x.web()->size(); ++a)
        rows[static_cast<std::size_t>(a)] = RatVec::unit(a);
    return MorphMatrix::make(std::move(dom), x, std::move(rows), MorphMatrix::Check::Skip);
}

MorphMatrix runitor_inv(const Pcs& x) {
    Pcs cod = tensor_object(x, pcs_one());
    std::vector<RatVec> rows(static_cast<std::size_t>(x.web()->size()));
    for (int a = 0; a < x.web()->size(); ++a)
        rows[static_cast<std::size_t>(a)] = RatVec::unit(a);
    return MorphMatrix::make(x, std::move(cod), std::move(rows), MorphMatrix::Check::Skip);
}

std::optional<HullSeparation> pure_tensor_hull_certificate(const Pcs& x, const Pcs& y,
                                                           const RatVec& v, long box_bound) {
    int nx = x.web()->size();
    int ny = y.web()->size();
    if (nx != 2 || ny != 2)
        throw SizeCapError("pure_tensor_hull_certificate: only 2x2 webs are supported");
    if (box_bound <= 0) throw PartialityError("pure_tensor_hull_certificate: bad box bound");

    // Every vertex of the factor ball (including lower faces); by bilinearity
    // the hull of all pure tensors equals the hull of vertex-pair tensors.
    Polytope xb = with_vrep(x).converted();
    Polytope yb = with_vrep(y).converted();
    std::vector<RatVec> x_vertices = enumerate_ball_generators(xb.hrep(), nx);
    std::vector<RatVec> y_vertices = enumerate_ball_generators(yb.hrep(), ny);
    x_vertices.push_back(RatVec{});  // the origin is always in the ball
    y_vertices.push_back(RatVec{});

    int dim = nx * ny;  // = 4
    // Signed functional phi = p - q with p, q >= 0; constraints
    // <s, phi> <= 1 for every vertex pure tensor s and |phi_i| <= box_bound.
    LpInput lp;
    lp.dim = 2 * dim;
    auto signed_row = [&](const RatVec& s) {
        RatVec row;
        for (const auto& [i, si] : s.entries()) {
            row.set(i, si);
            row.set(dim + i, -si);
        }
        return row;
    };
    for (const auto& g : x_vertices)
        for (const auto& h : y_vertices) lp.rows.push_back(signed_row(pure_tensor_vec(g, h, ny)));
    Rat inv_box = rat(1, box_bound);
    for (int i = 0; i < dim; ++i) {
        RatVec lo, hi;
        hi.set(i, inv_box);
        hi.set(dim + i, -inv_box);
        lo.set(i, -inv_box);
        lo.set(dim + i, inv_box);
        lp.rows.push_back(hi);
        lp.rows.push_back(lo);
    }
    lp.objective = signed_row(v);

    LpOutcome out = lp_max(lp);
    if (!out.bounded) throw InvariantError("pure_tensor_hull_certificate: boxed program unbounded");
    if (out.value <= 1) return std::nullopt;

    HullSeparation cert;
    cert.functional.assign(static_cast<std::size_t>(dim), rat(0));
    for (int i = 0; i < dim; ++i)
        cert.functional[static_cast<std::size_t>(i)] = out.argmax.at(i) - out.argmax.at(dim + i);
    auto pair_with = [&](const RatVec& s) {
        Rat acc = rat(0);
        for (const auto& [i, si] : s.entries()) acc += si * cert.functional[static_cast<std::size_t>(i)];
        return acc;
    };
    cert.value = pair_with(v);
    if (cert.value <= 1)
        throw InvariantError("pure_tensor_hull_certificate: certificate lost value");
    for (const auto& g : x_vertices)
        for (const auto& h : y_vertices)
            if (pair_with(pure_tensor_vec(g, h, ny)) > 1)
                throw InvariantError("pure_tensor_hull_certificate: functional exceeds 1 on a pure tensor");
    return cert;
}

}  // namespace pcoh
