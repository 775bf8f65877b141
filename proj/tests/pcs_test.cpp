#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "pcoh/cone.hpp"
#include "pcoh/errors.hpp"
#include "pcoh/pcs.hpp"
#include "pcoh/rng.hpp"
#include "test_util.hpp"

using namespace pcoh;
using namespace pcoh_test;

TEST_CASE("biorthogonal closure of generator sets") {
    // single generator: its down-set, the unit square
    Pcs sq = biorth_closure(numbered_web(2), {vec({1, 1})});
    CHECK(sq.ball().hrep() == std::vector<RatVec>{vec({0, 1}), vec({1, 0})});
    CHECK(sq.ball().vrep() == std::vector<RatVec>{vec({1, 1})});

    // the two basis vectors close to the simplex
    Pcs sx = biorth_closure(numbered_web(2), {vec({1, 0}), vec({0, 1})});
    CHECK(sx.ball().hrep() == std::vector<RatVec>{vec({1, 1})});

    // pure tensors of two squares fill the 4-cube
    Pcs cube4 = biorth_closure(numbered_web(4), {vec({1, 1, 1, 1})});
    CHECK(cube4.ball().hrep().size() == 4);
    for (const auto& f : cube4.ball().hrep()) CHECK(f.sum() == 1);
    CHECK(cube4.member(vec({0, 1, 1, 0})));

    // every constructed ball is a biorthogonal fixed point, exactly
    for (const Pcs& p : {sq, sx, cube4}) {
        Polytope twice = p.ball().polar().polar();
        CHECK(twice.hrep() == p.ball().hrep());
        CHECK(twice.vrep() == p.ball().vrep());
    }
}

TEST_CASE("degenerate generator sets are rejected") {
    CHECK_THROWS_AS(biorth_closure(numbered_web(2), {vec({1, 0})}),
                    DegenerateCoordinateError);
}

TEST_CASE("closure characterization holds for genuine balls") {
    Pcs sx = biorth_closure(numbered_web(2), {vec({1, 0}), vec({0, 1})});
    auto r = closure_characterization_check(*sx.web(), sx.ball().vrep(), sx);
    CHECK(r.ok);

    Pcs cube4 = biorth_closure(numbered_web(4), {vec({1, 1, 1, 1})});
    std::vector<RatVec> sample = {vec({0, 1, 1, 0}), vec({1, 1, 1, 1}),
                                  vec({1, 0, 0, 0})};
    CHECK(closure_characterization_check(*cube4.web(), sample, cube4).ok);
}

TEST_CASE("closure characterization exposes corrupted membership rules") {
    // Down-sets of the generators without their convex hull: misses midpoints.
    std::vector<RatVec> gens = {vec({1, 0}), vec({0, 1})};
    auto boxes_only = [&gens](const RatVec& u) {
        for (const auto& g : gens)
            if (u.leq(g)) return true;
        return false;
    };
    auto r = closure_characterization_check(*numbered_web(2), gens, boxes_only);
    CHECK_FALSE(r.ok);
    CHECK(r.property == "convex");
    CHECK(r.witness == qvec({{1, 2}, {1, 2}}));

    // A ball with an extra facet cutting a sample vertex off.
    Pcs cut = pcs_from_facets(numbered_web(2), {vec({1, 1}), vec({0, 2})});
    auto r2 = closure_characterization_check(*numbered_web(2), gens, cut);
    CHECK_FALSE(r2.ok);
    CHECK(r2.property == "sample");
    CHECK(r2.witness == vec({0, 1}));
}

TEST_CASE("grid membership agrees with the literal closure fixpoint oracle") {
    struct Instance {
        int dim;
        std::vector<RatVec> gens;
    };
    std::vector<Instance> instances = {
        {2, {vec({1, 0}), vec({0, 1})}},
        {2, {vec({1, 1})}},
        {2, {qvec({{1, 1}, {1, 4}}), qvec({{1, 4}, {1, 1}})}},
        {2, {qvec({{1, 2}, {3, 4}}), qvec({{3, 4}, {1, 4}}), qvec({{1, 4}, {1, 2}})}},
        {3, {vec({1, 0, 0}), qvec({{0, 1}, {1, 2}, {1, 2}}), vec({0, 0, 1})}},
    };
    const int den = 4;
    for (const auto& inst : instances) {
        Pcs p = biorth_closure(numbered_web(inst.dim), inst.gens);
        auto grid = full_grid(inst.dim, den);
        auto oracle = grid_closure_fixpoint(inst.gens, grid);
        for (const auto& g : grid) {
            bool in_oracle =
                std::find(oracle.begin(), oracle.end(), g) != oracle.end();
            CHECK(p.member(g) == in_oracle);
        }
    }
}

TEST_CASE("norms of cone elements") {
    ConePtr square = make_pcs_cone(biorth_closure(numbered_web(2), {vec({1, 1})}));
    CHECK(square->norm(qvec({{1, 2}, {1, 2}})) == rat(1, 2));
    CHECK(square->norm(RatVec()) == 0);

    ConePtr cube4 = make_pcs_cone(biorth_closure(numbered_web(4), {vec({1, 1, 1, 1})}));
    CHECK(cube4->norm(vec({0, 1, 1, 0})) == 1);

    // monotone and positively homogeneous, exactly
    Rng rng(77001);
    for (int trial = 0; trial < 40; ++trial) {
        RatVec x, extra;
        for (int i = 0; i < 4; ++i) {
            if (rng.coin()) x.set(i, rng.rational(4, rng.range(1, 4)));
            if (rng.coin()) extra.set(i, rng.rational(4, rng.range(1, 4)));
        }
        RatVec y = x + extra;  // x <= y coordinatewise
        CHECK(cube4->norm(x) <= cube4->norm(y));
        Rat q = rng.rational(6, rng.range(1, 3));
        CHECK(cube4->norm(x.scaled(q)) == q * cube4->norm(x));
    }
}

TEST_CASE("order, subtraction and the tensor-difference element") {
    ConePtr cube4 = make_pcs_cone(biorth_closure(numbered_web(4), {vec({1, 1, 1, 1})}));
    // (e1+e2) tensor (e1+e2) is the all-ones vector over the pair web;
    // subtracting the two diagonal pure tensors leaves the antidiagonal.
    ConeElem t1 = elem(cube4, vec({1, 1, 1, 1}));
    ConeElem d1 = elem(cube4, vec({1, 0, 0, 0}));
    ConeElem d2 = elem(cube4, vec({0, 0, 0, 1}));
    REQUIRE(cone_leq(d1, t1));
    ConeElem t2 = cone_sub(t1, d1);
    REQUIRE(cone_leq(d2, t2));
    ConeElem t3 = cone_sub(t2, d2);
    CHECK(t3.vec == vec({0, 1, 1, 0}));
    CHECK(cube4->norm(t3.vec) == 1);

    ConeElem x = elem(cube4, qvec({{1, 2}, {0, 1}, {1, 3}, {1, 1}}));
    CHECK(cone_sub(x, x).vec.is_zero());

    ConePtr square = make_pcs_cone(biorth_closure(numbered_web(2), {vec({1, 1})}));
    ConeElem e1 = elem(square, vec({1, 0}));
    ConeElem e2 = elem(square, vec({0, 1}));
    CHECK_THROWS_AS(cone_sub(e1, e2), PartialityError);

    // sub then add round-trips
    Rng rng(77002);
    for (int trial = 0; trial < 25; ++trial) {
        RatVec a, b;
        for (int i = 0; i < 4; ++i) {
            if (rng.coin()) a.set(i, rng.rational(2, 4));
            if (rng.coin()) b.set(i, rng.rational(2, 4));
        }
        ConeElem xa = elem(cube4, a), xab = elem(cube4, a + b);
        REQUIRE(cone_leq(xa, xab));
        CHECK(cone_add(xa, cone_sub(xab, xa)).vec == xab.vec);
    }
}

TEST_CASE("bounded sums, Fubini exchange, chains") {
    ConePtr square = make_pcs_cone(biorth_closure(numbered_web(2), {vec({1, 1})}));
    ConeElem half = elem(square, qvec({{1, 2}, {0, 1}}));
    CHECK(sum_family({half, half}).vec == vec({1, 0}));

    // exceeding the declared bound is an error
    ConeElem e1 = elem(square, vec({1, 0}));
    CHECK_THROWS_AS(sum_family({e1, e1}), BoundError);
    CHECK(sum_family({e1, e1}, rat(2)).vec == vec({2, 0}));

    // permutation invariance
    ConeElem a = elem(square, qvec({{1, 4}, {1, 8}}));
    ConeElem b = elem(square, qvec({{1, 8}, {1, 4}}));
    ConeElem c = elem(square, qvec({{1, 4}, {1, 4}}));
    CHECK(sum_family({a, b, c}).vec == sum_family({c, a, b}).vec);

    // doubly-indexed family summed row-first vs column-first (Fubini)
    std::vector<std::vector<ConeElem>> grid;
    for (int i = 1; i <= 4; ++i) {
        std::vector<ConeElem> row;
        for (int j = 1; j <= 4; ++j)
            row.push_back(elem(square, RatVec({rat(1, 1l << (i + j))})));
        grid.push_back(std::move(row));
    }
    std::vector<ConeElem> row_sums, col_sums;
    for (int i = 0; i < 4; ++i) row_sums.push_back(sum_family(grid[i]));
    for (int j = 0; j < 4; ++j) {
        std::vector<ConeElem> col;
        for (int i = 0; i < 4; ++i) col.push_back(grid[i][j]);
        col_sums.push_back(sum_family(col));
    }
    CHECK(sum_family(row_sums).vec == sum_family(col_sums).vec);

    // chains: rising truncations and their lub
    std::vector<ConeElem> chain;
    for (int k = 1; k <= 5; ++k)
        chain.push_back(elem(square, RatVec({Rat(1) - rat(1, 1l << k)})));
    CHECK(lub_chain(chain).vec == RatVec({rat(31, 32)}));
    chain.push_back(e1);  // include the limit point itself
    CHECK(lub_chain(chain).vec == vec({1, 0}));

    std::vector<ConeElem> not_chain = {e1, half};
    CHECK_THROWS_AS(lub_chain(not_chain), PartialityError);
}

TEST_CASE("separation witnesses in realized cones") {
    ConePtr square = make_pcs_cone(biorth_closure(numbered_web(2), {vec({1, 1})}));
    ConeElem x = elem(square, vec({1, 0}));
    ConeElem y = elem(square, vec({0, 1}));
    auto w = separated_witness(x, y);
    REQUIRE(w.has_value());
    CHECK(*w == vec({1, 0}));
    CHECK_FALSE(separated_witness(x, x).has_value());

    ConePtr cube4 = make_pcs_cone(biorth_closure(numbered_web(4), {vec({1, 1, 1, 1})}));
    Pcs cube_space = biorth_closure(numbered_web(4), {vec({1, 1, 1, 1})});
    Rng rng(77003);
    for (int trial = 0; trial < 30; ++trial) {
        RatVec a, b;
        for (int i = 0; i < 4; ++i) {
            if (rng.coin()) a.set(i, rng.rational(4, 4));
            if (rng.coin()) b.set(i, rng.rational(4, 4));
        }
        ConeElem xa = elem(cube4, a), xb = elem(cube4, b);
        auto wit = separated_witness(xa, xb);
        if (a == b) {
            CHECK_FALSE(wit.has_value());
        } else {
            REQUIRE(wit.has_value());
            CHECK(a.dot(*wit) != b.dot(*wit));
            // the witness lives in the dual unit ball
            CHECK(cube_space.polar().member(*wit));
        }
    }
}
