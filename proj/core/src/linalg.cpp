#include "qgr/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qgr {

namespace {

// Strip row content and shift the minimal exponent to zero; neither changes
// the kernel.
void reduce_row(LVector& row) {
    mpz_class g = 0;
    int minexp = 0;
    bool any = false;
    for (const auto& e : row) {
        if (e.is_zero()) continue;
        mpz_class c = e.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        minexp = any ? std::min(minexp, e.min_exp()) : e.min_exp();
        any = true;
    }
    if (!any) return;
    LaurentScalar d = LaurentScalar::monomial(g, minexp);
    for (auto& e : row) {
        if (!e.is_zero()) e = LaurentScalar::div_exact(e, d);
    }
}

// (terms, degree span) complexity measure for pivot choice.
std::pair<size_t, int> complexity(const LaurentScalar& s) {
    return {s.terms().size(), s.max_exp() - s.min_exp()};
}

struct Echelon {
    LMatrix mat;
    std::vector<std::pair<int, int>> pivots;  // (row, col)
};

Echelon forward_bareiss(LMatrix mat) {
    const int rows = static_cast<int>(mat.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(mat[0].size());
    for (auto& r : mat) reduce_row(r);
    Echelon e;
    LaurentScalar prev(1);
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int best = -1;
        for (int r = pr; r < rows; ++r) {
            if (mat[r][c].is_zero()) continue;
            if (best < 0 || complexity(mat[r][c]) < complexity(mat[best][c])) best = r;
        }
        if (best < 0) continue;
        std::swap(mat[pr], mat[best]);
        for (int r = pr + 1; r < rows; ++r) {
            if (mat[r][c].is_zero()) {
                // Still rescale per Bareiss so later divisions stay exact.
                for (int j = c + 1; j < cols; ++j)
                    mat[r][j] = LaurentScalar::div_exact(mat[pr][c] * mat[r][j], prev);
                continue;
            }
            for (int j = c + 1; j < cols; ++j)
                mat[r][j] =
                    LaurentScalar::div_exact(mat[pr][c] * mat[r][j] - mat[r][c] * mat[pr][j], prev);
            mat[r][c] = LaurentScalar();
        }
        prev = mat[pr][c];
        e.pivots.emplace_back(pr, c);
        ++pr;
    }
    e.mat = std::move(mat);
    return e;
}

}  // namespace

void normalize_vector(LVector& v) {
    mpz_class g = 0;
    int minexp = 0;
    bool any = false;
    for (const auto& e : v) {
        if (e.is_zero()) continue;
        mpz_class c = e.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        minexp = any ? std::min(minexp, e.min_exp()) : e.min_exp();
        any = true;
    }
    if (!any) return;
    LaurentScalar d = LaurentScalar::monomial(g, minexp);
    for (auto& e : v)
        if (!e.is_zero()) e = LaurentScalar::div_exact(e, d);
    for (const auto& e : v) {
        if (e.is_zero()) continue;
        if (e.terms().begin()->second < 0)
            for (auto& x : v) x = -x;
        break;
    }
}

KernelBasis ff_kernel(const LMatrix& input) {
    const int rows = static_cast<int>(input.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(input[0].size());
    for (const auto& r : input)
        if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("ff_kernel: ragged matrix");

    KernelBasis basis;
    if (cols == 0) return basis;

    Echelon e = forward_bareiss(input);
    std::vector<bool> is_pivot_col(cols, false);
    for (auto [r, c] : e.pivots) is_pivot_col[c] = true;

    for (int f = 0; f < cols; ++f) {
        if (is_pivot_col[f]) continue;
        LVector v(cols);
        v[f] = LaurentScalar(1);
        for (int t = static_cast<int>(e.pivots.size()) - 1; t >= 0; --t) {
            auto [r, c] = e.pivots[t];
            if (c > f) continue;  // echelon entries right of f in rows below f's support are zero
            LaurentScalar s;
            for (int j = c + 1; j < cols; ++j) {
                if (v[j].is_zero() || e.mat[r][j].is_zero()) continue;
                s += e.mat[r][j] * v[j];
            }
            if (s.is_zero()) continue;
            for (auto& x : v)
                if (!x.is_zero()) x = x * e.mat[r][c];
            v[c] = -s;
        }
        normalize_vector(v);
        basis.vectors.push_back(std::move(v));
    }

    // Exactness guard: every vector must annihilate the original matrix.
    for (const auto& v : basis.vectors) {
        for (int r = 0; r < rows; ++r) {
            LaurentScalar s;
            for (int j = 0; j < cols; ++j) {
                if (v[j].is_zero() || input[r][j].is_zero()) continue;
                s += input[r][j] * v[j];
            }
            if (!s.is_zero()) throw std::logic_error("ff_kernel: vector fails annihilation check");
        }
    }
    return basis;
}

int laurent_rank(LMatrix mat) {
    return static_cast<int>(forward_bareiss(std::move(mat)).pivots.size());
}

}  // namespace qgr
