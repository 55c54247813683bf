#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "qgr/grassmann.hpp"
#include "qgr/laurent.hpp"
#include "qgr/linalg.hpp"

using namespace qgr;

namespace {

LaurentScalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), exp(-6, 6), coeff(-9, 9);
    LaurentScalar s;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) s += LaurentScalar::monomial(coeff(rng), exp(rng));
    return s;
}

}  // namespace

TEST_SUITE("scalars") {

TEST_CASE("monomial arithmetic") {
    CHECK((LaurentScalar::monomial(1, 2) * LaurentScalar::monomial(1, -2)).is_one());
    ScalarContext ctx{2, 4};
    CHECK(ctx.q() * ctx.q() == LaurentScalar::monomial(1, 4));
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        LaurentScalar x = random_scalar(rng);
        CHECK((x + (-x)).is_zero());
    }
}

TEST_CASE("ring laws hold exactly") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        LaurentScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("p^m = q^2 in every context") {
    for (int m = 1; m <= 5; ++m) {
        ScalarContext ctx{m, m + 2};
        CHECK(ctx.p().pow(m) == ctx.q().pow(2));
        CHECK_FALSE(ctx.p().is_one());
    }
}

TEST_CASE("monomial_ratio") {
    CHECK(monomial_ratio(LaurentScalar::monomial(1, 2), LaurentScalar::monomial(1, 6), 2) == 2);
    CHECK_FALSE(monomial_ratio(LaurentScalar(1), LaurentScalar::monomial(1, 1), 2).has_value());
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        LaurentScalar x = random_scalar(rng);
        if (x.is_zero()) continue;
        CHECK(monomial_ratio(x, x, 3) == 0);
    }
    CHECK_THROWS_AS(monomial_ratio(LaurentScalar(), LaurentScalar(1), 2), std::invalid_argument);
    // non-monomial quotient
    LaurentScalar a = LaurentScalar(1) + LaurentScalar::monomial(1, 1);
    CHECK_FALSE(monomial_ratio(LaurentScalar(1), a, 1).has_value());
}

TEST_CASE("text format") {
    LaurentScalar s = LaurentScalar::monomial(-1, -2) + LaurentScalar(3) + LaurentScalar::monomial(2, 4);
    CHECK(s.to_string() == "-1*u^-2 + 3 + 2*u^4");
    CHECK(LaurentScalar().to_string() == "0");
}

TEST_CASE("div_exact") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; ++t) {
        LaurentScalar a = random_scalar(rng), b = random_scalar(rng);
        if (b.is_zero()) continue;
        CHECK(LaurentScalar::div_exact(a * b, b) == a);
    }
    LaurentScalar u = LaurentScalar::monomial(1, 1);
    CHECK_THROWS_AS(LaurentScalar::div_exact(u + LaurentScalar(1), u + LaurentScalar(2)),
                    std::logic_error);
}

TEST_CASE("ff_kernel basics") {
    LMatrix id2{{LaurentScalar(1), LaurentScalar()}, {LaurentScalar(), LaurentScalar(1)}};
    CHECK(ff_kernel(id2).dimension() == 0);

    LMatrix row{{LaurentScalar(1), LaurentScalar::monomial(1, 1)}};
    KernelBasis kb = ff_kernel(row);
    REQUIRE(kb.dimension() == 1);
    LVector expected{LaurentScalar::monomial(-1, 1), LaurentScalar(1)};
    normalize_vector(expected);
    CHECK(kb.vectors[0] == expected);
}

TEST_CASE("kernel of the degree-2 evaluation matrix at (2,4)") {
    QContext ctx{2, 4};
    std::vector<std::pair<IndexSet, IndexSet>> pairs;
    LMatrix mat = product_evaluation_matrix(ctx, pairs);
    REQUIRE(pairs.size() == 36);

    // Independent oracle: rank over Q at several specializations of u.
    int r2 = testing::specialized_rank(mat, mpq_class(2));
    int r3 = testing::specialized_rank(mat, mpq_class(3));
    int r5 = testing::specialized_rank(mat, mpq_class(5));
    REQUIRE(r2 == r3);
    REQUIRE(r3 == r5);
    const int k24 = 36 - r2;
    CHECK(k24 == 16);

    KernelBasis kb = ff_kernel(mat);
    CHECK(static_cast<int>(kb.dimension()) == k24);
}

TEST_CASE("row permutation leaves the kernel span unchanged") {
    QContext ctx{2, 4};
    std::vector<std::pair<IndexSet, IndexSet>> pairs;
    LMatrix mat = product_evaluation_matrix(ctx, pairs);
    KernelBasis a = ff_kernel(mat);

    std::mt19937_64 rng(77);
    LMatrix perm = mat;
    std::shuffle(perm.begin(), perm.end(), rng);
    KernelBasis b = ff_kernel(perm);
    REQUIRE(a.dimension() == b.dimension());

    // cross-membership: each vector of one basis lies in the span of the other
    auto columns = [](const KernelBasis& kb) {
        LMatrix m(kb.vectors[0].size(), LVector(kb.vectors.size()));
        for (size_t c = 0; c < kb.vectors.size(); ++c)
            for (size_t r = 0; r < kb.vectors[c].size(); ++r) m[r][c] = kb.vectors[c][r];
        return m;
    };
    LMatrix colsA = columns(a), colsB = columns(b);
    const int rankA = laurent_rank(colsA);
    REQUIRE(rankA == static_cast<int>(a.dimension()));
    for (const auto& v : a.vectors) {
        LMatrix aug = colsB;
        for (size_t r = 0; r < v.size(); ++r) aug[r].push_back(v[r]);
        CHECK(laurent_rank(aug) == rankA);
    }
    for (const auto& v : b.vectors) {
        LMatrix aug = colsA;
        for (size_t r = 0; r < v.size(); ++r) aug[r].push_back(v[r]);
        CHECK(laurent_rank(aug) == rankA);
    }
}

TEST_CASE("kernel vectors are normalized") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int t = 0; t < 20; ++t) {
        int rows = dim(rng), cols = dim(rng) + 1;
        LMatrix mat(rows, LVector(cols));
        for (auto& r : mat)
            for (auto& e : r) e = random_scalar(rng);
        KernelBasis kb = ff_kernel(mat);
        for (const auto& v : kb.vectors) {
            LVector copy = v;
            normalize_vector(copy);
            CHECK(copy == v);
            // exact annihilation
            for (int r = 0; r < rows; ++r) {
                LaurentScalar s;
                for (int c = 0; c < cols; ++c) s += mat[r][c] * v[c];
                CHECK(s.is_zero());
            }
        }
        CHECK(static_cast<int>(kb.dimension()) == cols - laurent_rank(mat));
    }
}

}  // TEST_SUITE
