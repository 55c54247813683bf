#pragma once

#include <string>
#include <vector>

#include "qgr/linalg.hpp"
#include "qgr/qmatrix.hpp"

namespace qgr {

/// Sorted set of distinct column indices in 1..n.
using IndexSet = std::vector<int>;

/// Representative in 1..n of x modulo n.
int tilde(int x, int n);

/// All m-subsets of {1..n} in lexicographic order.
std::vector<IndexSet> all_msubsets(int m, int n);

/// { tilde(i + a) : i in I }, re-sorted. shift_set(I, n) = I.
IndexSet shift_set(const IndexSet& I, int a, int n);

/// { n - i + 1 : i in I }, sorted; involutive.
IndexSet w0_set(const IndexSet& I, int n);

/// 0/1 vector of length n with ones exactly on I.
std::vector<int> content_vec(const IndexSet& I, int n);

std::string index_set_to_string(const IndexSet& I);
IndexSet parse_index_set(const std::string& text);

/// Quantum minor with row set K and column set L (|K| = |L|), expanded over
/// permutations with coefficients (-q)^{l(sigma)}; already in normal form.
NCPoly quantum_minor_rc(const QContext& ctx, const IndexSet& K, const IndexSet& L);

/// Maximal quantum minor [I] on rows {1..m}; |I| must equal ctx.m.
NCPoly quantum_minor(const QContext& ctx, const IndexSet& I);

/// Exact linear dependence among ordered degree-2 products of minors:
/// sum coeff * [left][right] = 0 in the stated context.
struct QuadTerm {
    LaurentScalar coeff;
    IndexSet left;
    IndexSet right;
};

struct QuadRelation {
    QContext ctx;
    std::vector<QuadTerm> terms;
};

/// sum coeff * NF([left] [right]) — zero for a valid relation.
NCPoly eval_relation(const QuadRelation& rel);

/// Muir extension: replace each index set by its disjoint union with the
/// complement of P. Coefficients are q-power combinations and are rewritten
/// into the q of the larger minor size. The output is re-verified to vanish
/// in the larger context; failure throws std::logic_error.
QuadRelation muir_extend(const QuadRelation& rel, const IndexSet& P);

/// Normalized basis of all linear dependences among the C(n,m)^2 ordered
/// products [I][J], computed per column-content class by a fraction-free
/// kernel of the evaluation matrix. Deterministic ordering: classes by
/// content, columns lexicographic by (left, right).
std::vector<QuadRelation> quadratic_relations(const QContext& ctx);

/// Full evaluation matrix of all ordered products (rows = normal words in
/// the union of supports, columns = ordered pairs lex); exposed for direct
/// kernel experiments.
LMatrix product_evaluation_matrix(const QContext& ctx, std::vector<std::pair<IndexSet, IndexSet>>& pairs_out);

/// Consecutive-minor data at parameter alpha: the cyclic interval M_alpha,
/// the row labels w[i] in M_alpha and the column labels z[j] outside it.
struct ConsecutiveData {
    int alpha = 1;
    IndexSet M;
    std::vector<int> w;  // w[i-1] = tilde(alpha + m - i), i = 1..m
    std::vector<int> z;  // z[j-1] = tilde(j + alpha + m - 1), j = 1..n-m
};

ConsecutiveData consecutive_data(const QContext& ctx, int alpha);

}  // namespace qgr
