#include <doctest.h>

#include <vector>

#include "pcoh/errors.hpp"
#include "pcoh/lp.hpp"
#include "pcoh/tensor.hpp"
#include "test_util.hpp"

using namespace pcoh;
using namespace pcoh_test;

namespace {

Pcs simplex2() { return pcs_simplex(numbered_web(2)); }

// Random element of the ball of a space with known facets: a random
// nonnegative vector scaled into the ball by its norm when needed.
RatVec random_ball_elem(Rng& rng, const Pcs& p) {
    RatVec v;
    for (int i = 0; i < p.dim(); ++i) {
        Rat x = rng.rational(4, 8);
        if (x != 0) v.set(i, x);
    }
    Rat n = p.norm(v);
    if (n > 1) v = v.scaled(rat(1, 2) / n);
    return v;
}

}  // namespace

TEST_CASE("tensor of two squares is the full cube over the pair web") {
    std::vector<Pcs> pair = {pcs_one(), pcs_one()};
    Pcs sq = with_product(pair);  // ball [0,1]^2
    Pcs t = tensor(sq, sq);       // both construction routes asserted inside

    CHECK(t.dim() == 4);
    CHECK(t.web()->label(0) == "((1,*),(1,*))");
    CHECK(t.web()->label(3) == "((2,*),(2,*))");
    CHECK(t.ball().hrep() == std::vector<RatVec>{vec({0, 0, 0, 1}), vec({0, 0, 1, 0}),
                                                 vec({0, 1, 0, 0}), vec({1, 0, 0, 0})});
    CHECK(t.ball().vrep() == std::vector<RatVec>{vec({1, 1, 1, 1})});
    CHECK(is_clinfty(t));

    // the light object describes the same set
    CHECK(tensor_object(sq, sq).ball().same_set(t.ball()));
}

TEST_CASE("mixed tensor examples against independent constructions") {
    Pcs sx = simplex2();
    Pcs sq = square();

    // simplex (x) simplex is the simplex over the pair web
    Pcs ss = tensor(sx, sx);
    CHECK(ss.ball().same_set(pcs_simplex(ss.web()).ball()));
    CHECK_FALSE(is_clinfty(ss));

    // simplex (x) square: the row maxima carry total mass at most 1, which
    // expands to one facet per choice of a column in each row
    Pcs sc = tensor(sx, sq);
    CHECK(sc.member(vec({1, 1, 0, 0})));
    CHECK(sc.member(qvec({{1, 2}, {1, 2}, {1, 2}, {1, 2}})));
    CHECK_FALSE(sc.member(vec({1, 0, 0, 1})));  // both row maxima are 1
    CHECK_FALSE(sc.member(qvec({{1, 1}, {1, 1}, {0, 1}, {1, 2}})));
    CHECK(sc.ball().hrep() ==
          std::vector<RatVec>{vec({0, 1, 0, 1}), vec({0, 1, 1, 0}), vec({1, 0, 0, 1}),
                              vec({1, 0, 1, 0})});

    // tensoring with the unit does not change coordinates (1 x n indexing)
    Pcs lu = tensor(pcs_one(), sx);
    CHECK(lu.ball().hrep() == sx.ball().converted().hrep());
    CHECK(lu.ball().vrep() == sx.ball().converted().vrep());
    CHECK(lu.web()->label(0) == "(*,0)");
}

TEST_CASE("tensor ball of simplices matches the grid closure oracle") {
    Pcs sx = simplex2();
    Pcs ss = tensor(sx, sx);

    std::vector<RatVec> pure;
    Polytope xb = sx.ball().converted();
    for (const auto& g : xb.vrep())
        for (const auto& h : xb.vrep()) pure.push_back(pure_tensor_vec(g, h, 2));

    const int den = 3;
    auto grid = full_grid(4, den);
    auto closed = grid_closure_fixpoint(pure, grid);
    int member_count = 0;
    for (const auto& p : grid) {
        bool in_ball = ss.member(p);
        bool in_closure =
            std::find(closed.begin(), closed.end(), p) != closed.end();
        CHECK(in_ball == in_closure);
        member_count += in_ball ? 1 : 0;
    }
    CHECK(member_count == static_cast<int>(closed.size()));
    CHECK(member_count > 0);
}

TEST_CASE("pure tensors: pinned values, bilinearity, ball closure") {
    CHECK(pure_tensor_vec(vec({1, 0}), vec({1, 0}), 2) == RatVec::unit(0));
    CHECK(pure_tensor_vec(vec({1, 1}), vec({1, 1}), 2) == vec({1, 1, 1, 1}));
    CHECK(pure_tensor_vec(RatVec(), vec({1, 1}), 2).is_zero());
    CHECK(pure_tensor_vec(qvec({{1, 2}, {1, 3}}), qvec({{1, 5}, {0, 1}}), 2) ==
          qvec({{1, 10}, {0, 1}, {1, 15}, {0, 1}}));

    Pcs sq = square();
    Pcs t = tensor(sq, sq);
    Rng rng(411);
    for (int it = 0; it < 40; ++it) {
        RatVec x = random_ball_elem(rng, sq);
        RatVec x2 = random_ball_elem(rng, sq);
        RatVec y = random_ball_elem(rng, sq);
        // additivity in the left slot at fixed right factor
        CHECK(pure_tensor_vec(x + x2, y, 2) ==
              pure_tensor_vec(x, y, 2) + pure_tensor_vec(x2, y, 2));
        // scaling moves through either slot
        Rat q = rng.rational(3, 4);
        CHECK(pure_tensor_vec(x.scaled(q), y, 2) == pure_tensor_vec(x, y.scaled(q), 2));
        // ball x ball lands in the tensor ball
        CHECK(t.member(pure_tensor_vec(x, y, 2)));
    }

    // the cone-level wrapper tracks the tensor object of the factor spaces
    ConeElem cx = elem(make_pcs_cone(sq), qvec({{1, 2}, {1, 1}}));
    ConeElem cy = elem(make_pcs_cone(simplex2()), qvec({{1, 3}, {1, 3}}));
    ConeElem prod = pure_tensor(cx, cy);
    CHECK(prod.vec == qvec({{1, 6}, {1, 6}, {1, 3}, {1, 3}}));
    CHECK(prod.cone->web()->label(1) == "(0,1)");
}

TEST_CASE("bilinear maps validate on generator pairs and factor linearly") {
    Pcs sx = simplex2();
    Pcs sq = square();

    // f(x, y) = sum_a x_a y_a, a scalar in [0,1] on simplex x square
    std::vector<RatVec> rows = {RatVec::unit(0), RatVec(), RatVec(), RatVec::unit(0)};
    BilinMap f = make_bilin(sx, sq, pcs_one(), rows);
    CHECK(bilin_apply(f, qvec({{1, 2}, {1, 2}}), vec({1, 1})) == RatVec::unit(0));
    CHECK(bilin_apply(f, qvec({{1, 3}, {0, 1}}), qvec({{1, 2}, {1, 1}})) ==
          RatVec({rat(1, 6)}));

    // the same coefficients on square x square overflow the unit interval
    CHECK_THROWS_AS(make_bilin(sq, sq, pcs_one(), rows), BoundError);
    // row count must match the pair web
    CHECK_THROWS_AS(make_bilin(sx, sq, pcs_one(), {RatVec()}), WebMismatchError);

    // linear factorization agrees with the bilinear map on random pairs
    MorphMatrix h = linofbilin(f);
    CHECK(*h.dom().web() == *pair_web(*sx.web(), *sq.web()));
    Rng rng(671);
    for (int it = 0; it < 40; ++it) {
        RatVec x = random_ball_elem(rng, sx);
        RatVec y = random_ball_elem(rng, sq);
        CHECK(h.apply_vec(pure_tensor_vec(x, y, 2)) == bilin_apply(f, x, y));
    }

    // uniqueness: pure tensors of scaled axis vectors span the pair space, so
    // two linear maps agreeing on pure tensors of ball elements coincide
    std::vector<std::vector<Rat>> span_sample;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            RatVec xa = RatVec::unit(a).scaled(rat(1) / sx.ball().support(RatVec::unit(a)));
            RatVec yb = RatVec::unit(b).scaled(rat(1) / sq.ball().support(RatVec::unit(b)));
            CHECK(sx.member(xa));
            CHECK(sq.member(yb));
            span_sample.push_back(pure_tensor_vec(xa, yb, 2).to_dense(4));
        }
    CHECK(rat_rank(span_sample) == 4);
}

TEST_CASE("curry and uncurry are inverse web reindexings") {
    Pcs sx = simplex2();
    Pcs sq = square();
    Pcs sn = pcs_snat(2);
    Pcs dom = tensor_object(sx, sq);

    Rng rng(902);
    for (int it = 0; it < 12; ++it) {
        MorphMatrix t = random_morphism(rng, dom, sn);
        MorphMatrix c = curry(t, sx, sq);
        // curried rows live in the function-space ball (checked on facets)
        for (int a = 0; a < sx.dim(); ++a) CHECK(c.cod().member(c.row(a)));
        MorphMatrix back = uncurry(c, sx, sq, sn);
        CHECK(back == t);

        // norms agree across the bijection
        CHECK(c.norm() == t.norm());
    }

    // mismatched webs are rejected
    MorphMatrix idq = MorphMatrix::identity(sq);
    CHECK_THROWS_AS(curry(idq, sx, sq), WebMismatchError);
}

TEST_CASE("evaluation morphism and the beta law") {
    Pcs sx = simplex2();
    Pcs sq = square();
    Pcs sn = pcs_snat(2);

    // eval applied to (flatten(f) (x) x) is exactly f applied to x
    MorphMatrix ev = eval_morphism(sq, sn);
    Rng rng(337);
    for (int it = 0; it < 25; ++it) {
        MorphMatrix f = random_morphism(rng, sq, sn);
        RatVec x = random_ball_elem(rng, sq);
        RatVec packed = pure_tensor_vec(f.flatten(), x, sq.dim());
        CHECK(ev.apply_vec(packed) == f.apply_vec(x));
    }

    // beta: eval after (curry(t) (x) id) recovers t
    Pcs dom = tensor_object(sx, sq);
    for (int it = 0; it < 12; ++it) {
        MorphMatrix t = random_morphism(rng, dom, sn);
        MorphMatrix left = tensor_mm(curry(t, sx, sq), MorphMatrix::identity(sq));
        MorphMatrix beta = compose(left, eval_morphism(sq, sn));
        CHECK(beta == t);
    }

    // the evaluation morphism has norm exactly 1 on small spaces
    CHECK(eval_morphism(sq, sn).norm() == 1);
    CHECK(eval_morphism(pcs_one(), pcs_one()).norm() == 1);
}

TEST_CASE("structural morphisms are permutations satisfying the axioms") {
    Pcs sq = square();
    Pcs sx = simplex2();
    Pcs sn = pcs_snat(2);
    Pcs one = pcs_one();

    SUBCASE("associator pentagon at four binary webs") {
        Pcs w = sq, x = sx, y = sn, z = square();
        Pcs wx = tensor_object(w, x);
        Pcs xy = tensor_object(x, y);
        Pcs yz = tensor_object(y, z);

        MorphMatrix path_one =
            compose(associator(wx, y, z), associator(w, x, yz));
        MorphMatrix path_two = compose(
            compose(tensor_mm(associator(w, x, y), MorphMatrix::identity(z)),
                    associator(w, xy, z)),
            tensor_mm(MorphMatrix::identity(w), associator(x, y, z)));
        CHECK(path_one == path_two);
    }

    SUBCASE("associator inverse and symmetry involution") {
        MorphMatrix a = associator(sq, sx, sn);
        MorphMatrix ai = associator_inv(sq, sx, sn);
        CHECK(compose(a, ai) == MorphMatrix::identity(tensor_object(tensor_object(sq, sx), sn)));
        CHECK(compose(ai, a) == MorphMatrix::identity(tensor_object(sq, tensor_object(sx, sn))));

        MorphMatrix s = symmetry(sq, sx);
        CHECK(compose(s, symmetry(sx, sq)) == MorphMatrix::identity(tensor_object(sq, sx)));
        // symmetry genuinely moves indices on a non-square-free pair
        CHECK(s.row(1) == RatVec::unit(2));
    }

    SUBCASE("unitors and the triangle identity") {
        CHECK(compose(lunitor(sx), lunitor_inv(sx)) ==
              MorphMatrix::identity(tensor_object(pcs_one(), sx)));
        CHECK(compose(lunitor_inv(sx), lunitor(sx)) == MorphMatrix::identity(sx));
        CHECK(compose(runitor(sx), runitor_inv(sx)) ==
              MorphMatrix::identity(tensor_object(sx, pcs_one())));

        MorphMatrix lhs = tensor_mm(runitor(sq), MorphMatrix::identity(sn));
        MorphMatrix rhs = compose(associator(sq, one, sn),
                                  tensor_mm(MorphMatrix::identity(sq), lunitor(sn)));
        CHECK(lhs == rhs);
    }

    SUBCASE("hexagon identity") {
        Pcs x = sq, y = sx, z = sn;
        MorphMatrix lhs = compose(compose(associator(x, y, z),
                                          symmetry(x, tensor_object(y, z))),
                                  associator(y, z, x));
        MorphMatrix rhs = compose(
            compose(tensor_mm(symmetry(x, y), MorphMatrix::identity(z)),
                    associator(y, x, z)),
            tensor_mm(MorphMatrix::identity(y), symmetry(x, z)));
        CHECK(lhs == rhs);
    }

    SUBCASE("functoriality and naturality of symmetry") {
        Rng rng(58);
        for (int it = 0; it < 10; ++it) {
            MorphMatrix f1 = random_substochastic(rng, sx, sx);
            MorphMatrix f2 = random_substochastic(rng, sx, sn);
            MorphMatrix g1 = random_substochastic(rng, sn, sx);
            MorphMatrix g2 = random_substochastic(rng, sx, sx);
            CHECK(tensor_mm(compose(f1, f2), compose(g1, g2)) ==
                  compose(tensor_mm(f1, g1), tensor_mm(f2, g2)));

            CHECK(compose(tensor_mm(f1, g1), symmetry(sx, sx)) ==
                  compose(symmetry(sx, sn), tensor_mm(g1, f1)));
        }
        CHECK(tensor_mm(MorphMatrix::identity(sx), MorphMatrix::identity(sn)) ==
              MorphMatrix::identity(tensor_object(sx, sn)));
    }
}

TEST_CASE("the cube point outside the hull of pure tensors") {
    Pcs sq = square();
    Pcs t = tensor(sq, sq);
    RatVec u = RatVec::unit(1) + RatVec::unit(2);  // (0,1,1,0)

    // in the tensor ball, and reachable by iterated differences of members
    CHECK(t.member(u));
    ConePtr cone = make_pcs_cone(t);
    ConeElem acc = elem(cone, vec({1, 1, 1, 1}));
    acc = cone_sub(acc, elem(cone, pure_tensor_vec(vec({1, 0}), vec({1, 0}), 2)));
    acc = cone_sub(acc, elem(cone, pure_tensor_vec(vec({0, 1}), vec({0, 1}), 2)));
    CHECK(acc.vec == u);

    // but separated from the convex hull of pure tensors by a signed functional
    auto cert = pure_tensor_hull_certificate(sq, sq, u);
    REQUIRE(cert.has_value());
    CHECK(cert->value > 1);
    CHECK(cert->functional.size() == 4);
    // re-verify the certificate against every vertex pure tensor
    std::vector<RatVec> corners = {RatVec(), vec({1, 0}), vec({0, 1}), vec({1, 1})};
    for (const auto& g : corners)
        for (const auto& h : corners) {
            RatVec s = pure_tensor_vec(g, h, 2);
            Rat val = 0;
            for (const auto& [i, si] : s.entries()) val += si * cert->functional[i];
            CHECK(val <= 1);
        }

    // pure tensors themselves and the all-ones corner are inside the hull
    CHECK_FALSE(pure_tensor_hull_certificate(sq, sq, vec({1, 0, 0, 0})).has_value());
    CHECK_FALSE(pure_tensor_hull_certificate(sq, sq, vec({1, 1, 1, 1})).has_value());
    CHECK_FALSE(pure_tensor_hull_certificate(sq, sq, qvec({{0, 1}, {1, 2}, {1, 2}, {0, 1}}))
                    .has_value());

    // the off-diagonal point scaled by 1/2 is a midpoint of pure tensors
    CHECK_FALSE(pure_tensor_hull_certificate(sq, sq, qvec({{0, 1}, {1, 2}, {1, 2}, {1, 2}}))
                    .has_value());

    // only binary webs are in scope for the hull certificate
    CHECK_THROWS_AS(pure_tensor_hull_certificate(simplex2(), pcs_snat(3), u), SizeCapError);
}

TEST_CASE("tensor preserves the full-cube property") {
    Pcs sq = square();
    Pcs cube3 = pcs_hypercube(numbered_web(3));
    CHECK(is_clinfty(sq));
    CHECK(is_clinfty(cube3));
    CHECK(is_clinfty(tensor(sq, sq)));
    CHECK(is_clinfty(tensor_object(sq, cube3)));   // light route, LP only
    CHECK_FALSE(is_clinfty(tensor(sq, simplex2())));
}
