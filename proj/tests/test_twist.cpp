#include <random>

#include "doctest.h"
#include "qgr/grassmann.hpp"
#include "qgr/twist.hpp"

using namespace qgr;

TEST_SUITE("twist") {

TEST_CASE("cocycle values") {
    // p = u^2 throughout
    CHECK(eval_cocycle(CocycleKind::Gamma, content_vec({2, 4}, 4), content_vec({1, 2}, 4)) ==
          LaurentScalar::monomial(1, 4));
    CHECK(eval_cocycle(CocycleKind::Gamma, content_vec({1, 2}, 4), content_vec({2, 4}, 4)).is_one());
    CHECK(eval_cocycle(CocycleKind::gamma, content_vec({1, 3}, 4), content_vec({2, 3}, 4)) ==
          LaurentScalar::monomial(1, -4));
    CHECK_THROWS_AS(eval_cocycle(CocycleKind::Gamma, {1, 0}, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("cocycle condition") {
    std::vector<int> zero(4, 0);
    CHECK(cocycle_condition_check(CocycleKind::Gamma, zero, zero, zero));
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int n = 3; n <= 6; ++n) {
        for (int t = 0; t < 200; ++t) {
            std::vector<int> s(n), u(n), v(n);
            for (int& x : s) x = entry(rng);
            for (int& x : u) x = entry(rng);
            for (int& x : v) x = entry(rng);
            CHECK(cocycle_condition_check(CocycleKind::Gamma, s, u, v));
            CHECK(cocycle_condition_check(CocycleKind::gamma, s, u, v));
        }
    }
}

TEST_CASE("level contents") {
    CHECK(level_content(1, {1, 2}, 4) == std::vector<int>{1, 0, 0, 1});
    CHECK(level_content(-2, {1, 2}, 4) == content_vec({3, 4}, 4));
    CHECK(level_content(0, {1, 2}, 4) == content_vec({1, 2}, 4));
}

TEST_CASE("twisted products") {
    QContext ctx{2, 4};
    const LaurentScalar p2 = LaurentScalar::monomial(1, 4);

    // level 0 is the plain product
    TwistedElement a0 = twisted_from_minor(0, ctx, {2, 4});
    TwistedElement b0 = twisted_from_minor(0, ctx, {1, 2});
    NCPoly plain = nc_mul(quantum_minor(ctx, {2, 4}), quantum_minor(ctx, {1, 2}));
    CHECK(twisted_equal(twisted_product(a0, b0), twisted_from_poly(0, plain)));

    // T-level: Gamma value p^2
    TwistedElement aT = twisted_from_minor(-1, ctx, {2, 4});
    TwistedElement bT = twisted_from_minor(-1, ctx, {1, 2});
    CHECK(twisted_equal(twisted_product(aT, bT), twisted_scale(twisted_from_poly(-1, plain), p2)));

    // tau-level: gamma value p^{-2}
    TwistedElement at = twisted_from_minor(1, ctx, {1, 3});
    TwistedElement bt = twisted_from_minor(1, ctx, {2, 3});
    NCPoly plain2 = nc_mul(quantum_minor(ctx, {1, 3}), quantum_minor(ctx, {2, 3}));
    CHECK(twisted_equal(twisted_product(at, bt),
                        twisted_scale(twisted_from_poly(1, plain2), p2.unit_inverse())));

    CHECK_THROWS_AS(twisted_product(a0, aT), std::invalid_argument);
}

TEST_CASE("twisted product is associative at every level") {
    QContext ctx{2, 4};
    std::mt19937_64 rng(7);
    auto subsets = all_msubsets(2, 4);
    std::uniform_int_distribution<size_t> pick(0, subsets.size() - 1);
    for (int level = -3; level <= 3; ++level) {
        for (int t = 0; t < 12; ++t) {
            TwistedElement a = twisted_from_minor(level, ctx, subsets[pick(rng)]);
            TwistedElement b = twisted_from_minor(level, ctx, subsets[pick(rng)]);
            TwistedElement c = twisted_from_minor(level, ctx, subsets[pick(rng)]);
            CHECK(twisted_equal(twisted_product(twisted_product(a, b), c),
                                twisted_product(a, twisted_product(b, c))));
            CHECK_FALSE(twisted_product(a, b).is_zero());
        }
    }
}

TEST_CASE("gamma.Gamma cancellation") {
    CHECK(gamma_Gamma_identity({2, 4}, {1, 2}, 4));
    // away from n both factors are already 1
    for (const auto& J : all_msubsets(2, 4)) {
        CHECK(eval_cocycle(CocycleKind::Gamma, content_vec({1, 3}, 4), content_vec(J, 4)).is_one());
        CHECK(eval_cocycle(CocycleKind::gamma, content_vec(shift_set({1, 3}, 1, 4), 4),
                           content_vec(shift_set(J, 1, 4), 4))
                  .is_one());
    }
    for (const auto& I : all_msubsets(2, 4))
        for (const auto& J : all_msubsets(2, 4)) CHECK(gamma_Gamma_identity(I, J, 4));
}

TEST_CASE("double twist has trivial structure constants") {
    // tau after T: the stage scalars Gamma(cI, cJ) and gamma(c(I+1), c(J+1))
    // multiply to 1, so tau(T(.)) carries the base structure constants.
    for (int n : {4, 5}) {
        for (const auto& I : all_msubsets(2, n)) {
            for (const auto& J : all_msubsets(2, n)) {
                LaurentScalar twice =
                    eval_cocycle(CocycleKind::Gamma, content_vec(I, n), content_vec(J, n)) *
                    eval_cocycle(CocycleKind::gamma, content_vec(shift_set(I, 1, n), n),
                                 content_vec(shift_set(J, 1, n), n));
                CHECK(twice.is_one());
            }
        }
    }
}

}  // TEST_SUITE
