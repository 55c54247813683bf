// Test-only oracles, kept independent of the library's computation paths:
// a rightmost-first rewriter with no memoization, rank of a specialized
// matrix over the rationals, a cofactor-expansion determinant, and the
// commutative specialization at u = 1.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qgr/linalg.hpp"
#include "qgr/qmatrix.hpp"
#include "qgr/tnn.hpp"

namespace qgr::testing {

// Normal form computed by repeatedly rewriting the rightmost descending
// adjacent pair, straight from the six 2x2 relations.
inline NCPoly oracle_normal_form(const QContext& ctx, const Word& input,
                                 const LaurentScalar& coeff = LaurentScalar(1)) {
    const LaurentScalar q = LaurentScalar::monomial(1, ctx.m);
    const LaurentScalar qinv = LaurentScalar::monomial(1, -ctx.m);
    std::map<Word, LaurentScalar> work, done;
    work[input] = coeff;
    while (!work.empty()) {
        auto it = work.begin();
        Word w = it->first;
        LaurentScalar c = it->second;
        work.erase(it);
        int pos = -1;
        for (int k = static_cast<int>(w.size()) - 2; k >= 0; --k) {
            if (static_cast<unsigned char>(w[k]) > static_cast<unsigned char>(w[k + 1])) {
                pos = k;
                break;
            }
        }
        if (pos < 0) {
            auto dit = done.find(w);
            if (dit == done.end())
                done.emplace(std::move(w), c);
            else {
                dit->second += c;
                if (dit->second.is_zero()) done.erase(dit);
            }
            continue;
        }
        GeneratorIndex x = gen_decode(ctx, static_cast<unsigned char>(w[pos]));
        GeneratorIndex y = gen_decode(ctx, static_cast<unsigned char>(w[pos + 1]));
        auto emit = [&](int a_row, int a_col, int b_row, int b_col, const LaurentScalar& factor) {
            Word nw = w;
            nw[pos] = static_cast<char>(gen_code(ctx, a_row, a_col));
            nw[pos + 1] = static_cast<char>(gen_code(ctx, b_row, b_col));
            LaurentScalar nc = c * factor;
            auto wit = work.find(nw);
            if (wit == work.end())
                work.emplace(std::move(nw), nc);
            else {
                wit->second += nc;
                if (wit->second.is_zero()) work.erase(wit);
            }
        };
        if (x.row == y.row || x.col == y.col) {
            emit(y.row, y.col, x.row, x.col, qinv);
        } else if (x.col < y.col) {
            emit(y.row, y.col, x.row, x.col, LaurentScalar(1));
        } else {
            emit(y.row, y.col, x.row, x.col, LaurentScalar(1));
            emit(y.row, x.col, x.row, y.col, -(q - qinv));
        }
    }
    NCPoly out(ctx);
    for (const auto& [w, c] : done) out.add_term(w, c);
    return out;
}

// Rank over Q of the matrix specialized at u = point.
inline int specialized_rank(const LMatrix& mat, const mpq_class& point) {
    if (mat.empty()) return 0;
    std::vector<std::vector<mpq_class>> a(mat.size(), std::vector<mpq_class>(mat[0].size()));
    for (size_t r = 0; r < mat.size(); ++r)
        for (size_t c = 0; c < mat[r].size(); ++c)
            if (!mat[r][c].is_zero()) a[r][c] = mat[r][c].eval_at(point);
    const size_t rows = a.size(), cols = a[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[rank][c];
            for (size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

// Determinant by cofactor expansion along the first row.
inline mpq_class laplace_det(const std::vector<std::vector<mpq_class>>& a) {
    const size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    mpq_class det = 0;
    for (size_t c = 0; c < n; ++c) {
        if (a[0][c] == 0) continue;
        std::vector<std::vector<mpq_class>> sub(n - 1, std::vector<mpq_class>(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t k = 0; k < n; ++k) {
                if (k == c) continue;
                sub[r - 1][cc++] = a[r][k];
            }
        }
        mpq_class term = a[0][c] * laplace_det(sub);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

inline mpq_class laplace_minor(const RationalMatrix& A, const IndexSet& I) {
    std::vector<std::vector<mpq_class>> sub(A.m, std::vector<mpq_class>(A.m));
    for (int r = 0; r < A.m; ++r)
        for (int c = 0; c < A.m; ++c) sub[r][c] = A.a[r][I[c] - 1];
    return laplace_det(sub);
}

// Commutative image at u = 1: words become multisets, coefficients integers.
inline std::map<Word, mpz_class> classical_image(const NCPoly& p) {
    std::map<Word, mpz_class> out;
    for (const auto& [w, c] : p.terms()) {
        Word sorted = w;
        std::sort(sorted.begin(), sorted.end());
        out[sorted] += c.eval_one();
        if (out[sorted] == 0) out.erase(sorted);
    }
    return out;
}

}  // namespace qgr::testing
