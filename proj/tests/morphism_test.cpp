#include <doctest.h>

#include <vector>

#include "pcoh/errors.hpp"
#include "pcoh/morphism.hpp"
#include "pcoh/rng.hpp"
#include "test_util.hpp"

using namespace pcoh;
using namespace pcoh_test;

TEST_CASE("application of matrices to ball elements") {
    Pcs sx = pcs_snat(2);
    MorphMatrix id = MorphMatrix::identity(sx);
    ConeElem x = elem(make_pcs_cone(sx), qvec({{1, 3}, {1, 3}}));
    CHECK(apply(id, x).vec == x.vec);

    // first projection of 1&1
    std::vector<Pcs> ones = {pcs_one(), pcs_one()};
    MorphMatrix p1 = with_proj(ones, 0);
    ConeElem y = elem(make_pcs_cone(p1.dom()), qvec({{1, 3}, {2, 3}}));
    CHECK(apply(p1, y).vec == RatVec({rat(1, 3)}));

    // row extraction: applying to a basis direction reads off that row
    MorphMatrix t = MorphMatrix::make(
        sx, sx, {qvec({{1, 2}, {1, 2}}), qvec({{0, 1}, {1, 2}})});
    CHECK(t.apply_vec(vec({1, 0})) == qvec({{1, 2}, {1, 2}}));
    Rng rng(88001);
    for (int trial = 0; trial < 20; ++trial) {
        MorphMatrix r = random_substochastic(rng, sx, sx);
        for (int a = 0; a < 2; ++a) CHECK(r.apply_vec(RatVec::unit(a)) == r.row(a));
    }
}

TEST_CASE("composition agrees with the matrix-product oracle") {
    Pcs sx = pcs_snat(2);
    Rng rng(88002);
    for (int trial = 0; trial < 25; ++trial) {
        MorphMatrix s = random_substochastic(rng, sx, sx);
        MorphMatrix t = random_substochastic(rng, sx, sx);
        MorphMatrix ts = compose(s, t);
        // independent triple-loop product
        for (int a = 0; a < 2; ++a)
            for (int c = 0; c < 2; ++c) {
                Rat acc(0);
                for (int b = 0; b < 2; ++b) acc += s.entry(a, b) * t.entry(b, c);
                CHECK(ts.entry(a, c) == acc);
            }
        // application factors through composition
        RatVec u = qvec({{rng.range(0, 1), 2}, {rng.range(0, 1), 2}});
        CHECK(ts.apply_vec(u) == t.apply_vec(s.apply_vec(u)));
    }
}

TEST_CASE("category laws hold exactly") {
    Pcs sx = pcs_snat(3);
    Rng rng(88003);
    MorphMatrix id = MorphMatrix::identity(sx);
    for (int trial = 0; trial < 20; ++trial) {
        MorphMatrix s = random_substochastic(rng, sx, sx);
        MorphMatrix t = random_substochastic(rng, sx, sx);
        MorphMatrix r = random_substochastic(rng, sx, sx);
        CHECK(compose(id, s) == s);
        CHECK(compose(s, id) == s);
        CHECK(compose(compose(s, t), r) == compose(s, compose(t, r)));
    }
}

TEST_CASE("function space balls") {
    // limpl(1,1): scalars bounded by 1
    Pcs li = limpl(pcs_one(), pcs_one());
    CHECK(li.dim() == 1);
    CHECK(li.member(RatVec({rat(1)})));
    CHECK_FALSE(li.member(RatVec({rat(5, 4)})));

    // limpl(1&1, 1): generator (1,1) of the square forces t1+t2 <= 1
    Pcs li2 = limpl(square(), pcs_one());
    CHECK(li2.ball().hrep() == std::vector<RatVec>{vec({1, 1})});

    // identity has norm 1 in limpl(X,X)
    Pcs sq = square();
    Pcs lsq = limpl(sq, sq);
    CHECK(lsq.norm(MorphMatrix::identity(sq).flatten()) == 1);
}

TEST_CASE("matrix invariant matches membership in the function space") {
    Pcs sx = pcs_snat(2);
    Pcs sq = square();
    Pcs li = limpl(sx, sq);
    Rng rng(88004);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<RatVec> rows;
        for (int a = 0; a < 2; ++a) {
            RatVec row;
            for (int b = 0; b < 2; ++b)
                if (rng.coin()) row.set(b, rng.rational(5, 4));
            rows.push_back(row);
        }
        bool ok_matrix = true;
        try {
            MorphMatrix::make(sx, sq, rows);
        } catch (const InvariantError&) {
            ok_matrix = false;
        }
        MorphMatrix raw = MorphMatrix::make(sx, sq, rows, MorphMatrix::Check::Skip);
        CHECK(ok_matrix == li.member(raw.flatten()));
        // round-trip through the pair web
        MorphMatrix back =
            MorphMatrix::unflatten(sx, sq, raw.flatten(), MorphMatrix::Check::Skip);
        CHECK(back == raw);
    }
}

TEST_CASE("cartesian product and its universal property") {
    std::vector<Pcs> ones = {pcs_one(), pcs_one()};
    Pcs prod = with_product(ones);
    CHECK(prod.dim() == 2);
    CHECK(prod.member(vec({1, 1})));
    CHECK(is_clinfty(prod));
    CHECK(prod.web()->label(0) == "(1,*)");

    // ball of with(simplex dim1, simplex dim2) is the product polytope
    std::vector<Pcs> mixed = {pcs_snat(1), pcs_snat(2)};
    Pcs prod2 = with_product(mixed);
    Polytope expected = Polytope::from_hrep(
        prod2.web(), {vec({1, 0, 0}), vec({0, 1, 1})});
    CHECK(prod2.ball().same_set(expected));
    CHECK(prod2.ball().is_canonical());
    CHECK(prod2.ball().hrep().size() == 2);

    // tuple/proj equations on random morphisms
    Pcs sx = pcs_snat(2);
    Rng rng(88005);
    for (int trial = 0; trial < 15; ++trial) {
        MorphMatrix f = random_substochastic(rng, sx, pcs_snat(1));
        MorphMatrix g = random_substochastic(rng, sx, pcs_snat(2));
        MorphMatrix pair = with_tuple({f, g});
        CHECK(compose(pair, with_proj({pcs_snat(1), pcs_snat(2)}, 0)) == f);
        CHECK(compose(pair, with_proj({pcs_snat(1), pcs_snat(2)}, 1)) == g);
    }
}

TEST_CASE("hypercube recognition") {
    CHECK(is_clinfty(pcs_one()));
    CHECK(is_clinfty(pcs_orth_snat(3)));
    CHECK_FALSE(is_clinfty(pcs_snat(2)));
    // a light generator presentation of a cube is still recognized
    CHECK(is_clinfty(pcs_from_generators_light(numbered_web(3), {vec({1, 1, 1})})));
}

TEST_CASE("morphism norms") {
    Pcs sq = square();
    MorphMatrix id = MorphMatrix::identity(sq);
    CHECK(id.norm() == 1);
    CHECK(scale(rat(1, 2), id).norm() == rat(1, 2));

    // random substochastic 3x3: generator route equals an LP oracle that
    // maximizes each codomain facet over the domain ball
    Pcs sx = pcs_snat(3);
    Rng rng(88006);
    for (int trial = 0; trial < 20; ++trial) {
        MorphMatrix t = random_substochastic(rng, sx, sx);
        Rat via_gens = t.norm();
        Rat via_lp(0);
        for (const auto& w : sx.ball().hrep()) {
            // objective x -> <t.x, w> as a linear functional on the domain
            RatVec obj;
            for (int a = 0; a < 3; ++a) {
                Rat c = t.row(a).dot(w);
                if (c != 0) obj.set(a, c);
            }
            LpOutcome r = lp_max({3, sx.ball().hrep(), obj});
            REQUIRE(r.bounded);
            via_lp = std::max(via_lp, r.value);
        }
        CHECK(via_gens == via_lp);
    }
}

TEST_CASE("application is linear and monotone") {
    Pcs sx = pcs_snat(3);
    Rng rng(88007);
    for (int trial = 0; trial < 20; ++trial) {
        MorphMatrix t = random_substochastic(rng, sx, sx);
        RatVec x, y;
        for (int i = 0; i < 3; ++i) {
            if (rng.coin()) x.set(i, rng.rational(3, 12));
            if (rng.coin()) y.set(i, rng.rational(3, 12));
        }
        Rat q = rng.rational(4, 3);
        CHECK(t.apply_vec(x + y.scaled(q)) ==
              t.apply_vec(x) + t.apply_vec(y).scaled(q));
        CHECK(t.apply_vec(x).leq(t.apply_vec(x + y)));
    }
}
