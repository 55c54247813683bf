#pragma once

#include <gmpxx.h>

#include <random>
#include <vector>

#include "qgr/grassmann.hpp"

namespace qgr {

/// Exact rational m x n matrix; the real Grassmannian statements are
/// polynomial identities in the entries, so rational verification is sound.
struct RationalMatrix {
    int m = 0, n = 0;
    std::vector<std::vector<mpq_class>> a;

    RationalMatrix() = default;
    RationalMatrix(int m_, int n_) : m(m_), n(n_), a(m_, std::vector<mpq_class>(n_)) {}

    bool operator==(const RationalMatrix&) const = default;
};

/// Exact maximal minor on column set I (|I| = m), by Gaussian elimination.
mpq_class minor_value(const RationalMatrix& A, const IndexSet& I);

/// c . A: columns rotated right, incoming first column scaled by (-1)^{m-1}.
RationalMatrix cyc_act(const RationalMatrix& A);

/// c^{-1} . A: columns rotated left, incoming last column scaled by (-1)^{m-1}.
RationalMatrix cyc_act_inv(const RationalMatrix& A);

/// w0 . A: columns reversed, then first row scaled by (-1)^{[m/2]}.
RationalMatrix w0_act(const RationalMatrix& A);

/// (w0 c w0) . A == c^{-1} . A, checked entrywise.
bool dihedral_relation_check(const RationalMatrix& A);

/// All C(n,m) maximal minors nonnegative.
bool is_tnn(const RationalMatrix& A);

/// All maximal minors strictly positive.
bool is_tp(const RationalMatrix& A);

/// Fast integer variant of the nonnegativity predicate (m <= 3), used by the
/// grid realizability oracle. Entries are row-major.
bool is_tnn_grid(int m, int n, const std::vector<long>& entries);

/// Maximal-minor vanishing mask over the lexicographic m-subset list for an
/// integer matrix; returns false when the matrix has rank < m.
bool grid_vanishing_mask(int m, int n, const std::vector<long>& entries,
                         const std::vector<IndexSet>& subsets, unsigned long& mask_out);

/// Entries uniform over {-5..5}/{1..5}.
RationalMatrix random_rational_matrix(std::mt19937_64& rng, int m, int n);

/// Product of nonnegative elementary column and row operations applied to
/// (I_m | 0); totally nonnegative by construction.
RationalMatrix random_tnn_witness(std::mt19937_64& rng, int m, int n);

/// Vandermonde-type totally positive witness on nodes 1..n.
RationalMatrix tp_witness(int m, int n);

}  // namespace qgr
