#include "doctest.h"
#include "qgr/groupoid.hpp"

using namespace qgr;

TEST_SUITE("groupoid") {

TEST_CASE("lambda values") {
    QContext ctx{2, 4};
    CHECK(lambda_I(ctx, {1, 2}).is_one());
    CHECK(lambda_I(ctx, {2, 4}) == LaurentScalar::monomial(1, -4));
    CHECK(lambda_I(ctx, {1, 2}).is_one());  // i_m = m < n
    for (const auto& I : all_msubsets(2, 4)) {
        LaurentScalar v = lambda_I(ctx, I);
        CHECK((v.is_one() || v == ctx.scalars().q_pow(-2)));
    }
}

TEST_CASE("Lambda products") {
    QContext ctx{2, 4};
    CHECK(Lambda(ctx, {1, 3}, 0).is_one());
    CHECK(Lambda(ctx, {1, 3}, 2) == ctx.scalars().q_pow(-2));
    for (QContext c : {QContext{1, 3}, QContext{2, 4}, QContext{2, 5}, QContext{3, 6}})
        for (const auto& I : all_msubsets(c.m, c.n))
            CHECK(Lambda(c, I, c.n) == c.scalars().q_pow(-2 * c.m));
}

TEST_CASE("theta images") {
    QContext ctx{2, 4};
    CHECK(theta_image(ctx, 1, {1, 3}) == GeneratorImage{LaurentScalar(1), {2, 4}, 1});
    CHECK(theta_image(ctx, 1, {2, 4}) == GeneratorImage{ctx.scalars().q_pow(-2), {1, 3}, 1});
    CHECK(theta_image(ctx, 0, {1, 4}) == GeneratorImage{ctx.scalars().q_pow(-2), {1, 2}, 0});
}

TEST_CASE("theta compositions") {
    QContext ctx{2, 4};
    for (const auto& I : all_msubsets(2, 4)) {
        GeneratorImage full = compose_theta(ctx, 1, 4, I);
        CHECK(full.scalar == ctx.scalars().q_pow(-4));
        CHECK(full.target_set == I);
        CHECK(compose_theta(ctx, 1, 1, I) == theta_image(ctx, 1, I));
    }
    GeneratorImage two = compose_theta(ctx, 1, 2, {3, 4});
    CHECK(two.scalar == ctx.scalars().q_pow(-4));
    CHECK(two.target_set == IndexSet{1, 2});
}

TEST_CASE("omega images") {
    QContext ctx{2, 4};
    for (const auto& I : all_msubsets(2, 4))
        CHECK(omega_image(ctx, 0, I) == GeneratorImage{LaurentScalar(1), w0_set(I, 4), 0});
    CHECK(omega_image(ctx, 1, {3, 4}) == GeneratorImage{ctx.scalars().q_pow(-4), {1, 2}, 1});
    CHECK(omega_image(ctx, 1, {1, 2}) == GeneratorImage{LaurentScalar(1), {3, 4}, 1});
    // scalars are powers of q^{-2}
    for (int ell = 0; ell <= 4; ++ell)
        for (const auto& I : all_msubsets(2, 4)) {
            auto r = monomial_ratio(LaurentScalar(1), omega_image(ctx, ell, I).scalar, ctx.m);
            REQUIRE(r.has_value());
            CHECK(*r % 2 == 0);
            CHECK(*r <= 0);
        }
}

TEST_CASE("relation transport at (2,4) and (2,5)") {
    for (QContext ctx : {QContext{2, 4}, QContext{2, 5}}) {
        auto rels = quadratic_relations(ctx);
        TransportReport theta = verify_transport(ctx, {MapSpec::Kind::theta, 1}, rels);
        CHECK(theta.all_zero());
        CHECK(theta.relation_count() == rels.size());
        TransportReport omega = verify_transport(ctx, {MapSpec::Kind::omega, 0}, rels);
        CHECK(omega.all_zero());

        MapSpec corrupt{MapSpec::Kind::theta, 1};
        corrupt.corrupt_lambda = true;
        TransportReport bad = verify_transport(ctx, corrupt, rels);
        CHECK(bad.failing.size() >= 1);
    }
}

TEST_CASE("transport at (3,6)") {
    QContext ctx{3, 6};
    auto rels = quadratic_relations(ctx);
    CHECK(rels.size() == 225);
    CHECK(verify_transport(ctx, {MapSpec::Kind::theta, 1}, rels).all_zero());
    CHECK(verify_transport(ctx, {MapSpec::Kind::omega, 0}, rels).all_zero());
}

TEST_CASE("transport along higher arrows") {
    QContext ctx{2, 4};
    auto rels = quadratic_relations(ctx);
    for (int ell : {-2, -1, 0, 1, 2, 3}) {
        TransportReport rep = verify_transport(ctx, {MapSpec::Kind::theta, ell}, rels);
        CHECK(rep.all_zero());
    }
    for (int ell : {1, 2}) {
        TransportReport rep = verify_transport(ctx, {MapSpec::Kind::omega, ell}, rels);
        CHECK(rep.all_zero());
    }
    CHECK_THROWS_AS(verify_transport(ctx, {MapSpec::Kind::theta, 20}, rels), std::invalid_argument);
}

TEST_CASE("dihedral structure of generator images") {
    QContext ctx{2, 4};
    for (int ell = 0; ell <= 4; ++ell)
        for (const auto& I : all_msubsets(2, 4)) CHECK(dihedral_scalar_check(ctx, ell, I));

    for (const auto& I : all_msubsets(2, 4)) {
        // omega twice is the identity permutation on sets
        CHECK(w0_set(w0_set(I, 4), 4) == I);
        // w0 c w0 = c^{-1}
        CHECK(w0_set(shift_set(w0_set(I, 4), 1, 4), 4) == shift_set(I, -1, 4));
    }
}

TEST_CASE("classical limits") {
    for (QContext ctx : {QContext{2, 4}, QContext{2, 5}}) {
        for (const auto& I : all_msubsets(ctx.m, ctx.n)) {
            for (int r = -ctx.n; r <= ctx.n; ++r) {
                GeneratorImage img = compose_theta(ctx, r, ctx.n, I);
                CHECK(img.scalar.eval_one() == 1);
                CHECK(img.target_set == I);
            }
            for (int ell = 0; ell <= ctx.n; ++ell) {
                GeneratorImage img = omega_image(ctx, ell, I);
                CHECK(img.scalar.eval_one() == 1);
                CHECK(img.target_set == w0_set(I, ctx.n));
            }
        }
    }
}

}  // TEST_SUITE
