#include "qgr/tnn.hpp"

#include <stdexcept>

namespace qgr {

mpq_class minor_value(const RationalMatrix& A, const IndexSet& I) {
    if (static_cast<int>(I.size()) != A.m) throw std::invalid_argument("minor_value: |I| != m");
    const int m = A.m;
    std::vector<std::vector<mpq_class>> sub(m, std::vector<mpq_class>(m));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) sub[r][c] = A.a[r][I[c] - 1];

    mpq_class det = 1;
    for (int c = 0; c < m; ++c) {
        int pivot = -1;
        for (int r = c; r < m; ++r)
            if (sub[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != c) {
            std::swap(sub[pivot], sub[c]);
            det = -det;
        }
        det *= sub[c][c];
        for (int r = c + 1; r < m; ++r) {
            if (sub[r][c] == 0) continue;
            mpq_class f = sub[r][c] / sub[c][c];
            for (int k = c; k < m; ++k) sub[r][k] -= f * sub[c][k];
        }
    }
    return det;
}

RationalMatrix cyc_act(const RationalMatrix& A) {
    RationalMatrix B(A.m, A.n);
    const int sign = (A.m - 1) % 2 == 0 ? 1 : -1;
    for (int r = 0; r < A.m; ++r) {
        B.a[r][0] = sign * A.a[r][A.n - 1];
        for (int c = 1; c < A.n; ++c) B.a[r][c] = A.a[r][c - 1];
    }
    return B;
}

RationalMatrix cyc_act_inv(const RationalMatrix& A) {
    RationalMatrix B(A.m, A.n);
    const int sign = (A.m - 1) % 2 == 0 ? 1 : -1;
    for (int r = 0; r < A.m; ++r) {
        for (int c = 0; c + 1 < A.n; ++c) B.a[r][c] = A.a[r][c + 1];
        B.a[r][A.n - 1] = sign * A.a[r][0];
    }
    return B;
}

RationalMatrix w0_act(const RationalMatrix& A) {
    RationalMatrix B(A.m, A.n);
    const int sign = (A.m / 2) % 2 == 0 ? 1 : -1;
    for (int r = 0; r < A.m; ++r)
        for (int c = 0; c < A.n; ++c) B.a[r][c] = A.a[r][A.n - 1 - c];
    for (int c = 0; c < A.n; ++c) B.a[0][c] *= sign;
    return B;
}

bool dihedral_relation_check(const RationalMatrix& A) {
    return w0_act(cyc_act(w0_act(A))) == cyc_act_inv(A);
}

bool is_tnn(const RationalMatrix& A) {
    for (const auto& I : all_msubsets(A.m, A.n))
        if (minor_value(A, I) < 0) return false;
    return true;
}

bool is_tp(const RationalMatrix& A) {
    for (const auto& I : all_msubsets(A.m, A.n))
        if (minor_value(A, I) <= 0) return false;
    return true;
}

namespace {

long grid_minor(int m, int n, const std::vector<long>& e, const IndexSet& I) {
    auto at = [&](int r, int c) { return e[static_cast<size_t>(r) * n + c]; };
    if (m == 1) return at(0, I[0] - 1);
    if (m == 2) {
        const int c0 = I[0] - 1, c1 = I[1] - 1;
        return at(0, c0) * at(1, c1) - at(0, c1) * at(1, c0);
    }
    if (m == 3) {
        const int c0 = I[0] - 1, c1 = I[1] - 1, c2 = I[2] - 1;
        return at(0, c0) * (at(1, c1) * at(2, c2) - at(1, c2) * at(2, c1)) -
               at(0, c1) * (at(1, c0) * at(2, c2) - at(1, c2) * at(2, c0)) +
               at(0, c2) * (at(1, c0) * at(2, c1) - at(1, c1) * at(2, c0));
    }
    throw std::invalid_argument("grid_minor: m > 3 unsupported");
}

}  // namespace

bool is_tnn_grid(int m, int n, const std::vector<long>& entries) {
    for (const auto& I : all_msubsets(m, n))
        if (grid_minor(m, n, entries, I) < 0) return false;
    return true;
}

bool grid_vanishing_mask(int m, int n, const std::vector<long>& entries,
                         const std::vector<IndexSet>& subsets, unsigned long& mask_out) {
    unsigned long mask = 0;
    bool any_nonzero = false;
    for (size_t k = 0; k < subsets.size(); ++k) {
        long v = grid_minor(m, n, entries, subsets[k]);
        if (v < 0) return false;
        if (v == 0)
            mask |= 1ul << k;
        else
            any_nonzero = true;
    }
    if (!any_nonzero) return false;  // rank < m
    mask_out = mask;
    return true;
}

RationalMatrix random_rational_matrix(std::mt19937_64& rng, int m, int n) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 5);
    RationalMatrix A(m, n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) {
            A.a[r][c] = mpq_class(num(rng), den(rng));
            A.a[r][c].canonicalize();
        }
    return A;
}

RationalMatrix random_tnn_witness(std::mt19937_64& rng, int m, int n) {
    RationalMatrix A(m, n);
    for (int r = 0; r < m; ++r) A.a[r][r] = 1;  // (I_m | 0)
    std::uniform_int_distribution<int> tnum(0, 3);
    std::uniform_int_distribution<int> tden(1, 3);
    std::uniform_int_distribution<int> which(0, 2);
    std::uniform_int_distribution<int> cols(0, n - 2);
    std::uniform_int_distribution<int> rows(0, m > 1 ? m - 2 : 0);
    const int ops = 4 * (m + n);
    for (int step = 0; step < ops; ++step) {
        mpq_class t(tnum(rng), tden(rng));
        t.canonicalize();
        switch (which(rng)) {
            case 0: {  // column k -> column k+1
                int k = cols(rng);
                for (int r = 0; r < m; ++r) A.a[r][k + 1] += t * A.a[r][k];
                break;
            }
            case 1: {  // column k+1 -> column k
                int k = cols(rng);
                for (int r = 0; r < m; ++r) A.a[r][k] += t * A.a[r][k + 1];
                break;
            }
            default: {  // row i -> row i+1 (unit-determinant, totally nonnegative)
                if (m == 1) break;
                int i = rows(rng);
                for (int c = 0; c < n; ++c) A.a[i + 1][c] += t * A.a[i][c];
                break;
            }
        }
    }
    return A;
}

RationalMatrix tp_witness(int m, int n) {
    RationalMatrix A(m, n);
    for (int c = 0; c < n; ++c) {
        mpq_class v = 1;
        for (int r = 0; r < m; ++r) {
            A.a[r][c] = v;
            v *= (c + 1);
        }
    }
    return A;
}

}  // namespace qgr
