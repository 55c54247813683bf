#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qgr/grassmann.hpp"
#include "qgr/qmatrix.hpp"

namespace qgr {

/// The skew-Laurent algebra A_alpha = K[x_{ij}][y^{+-1}; sigma_alpha] built
/// on the localisation of the Grassmannian algebra at the consecutive minor
/// [M_alpha]. The x-generators form a quantum matrix of format (m, n-m).
QContext dehom_matrix_context(const QContext& ctx);

/// Exponent e in sigma_alpha(x_{ij}) = q^e x_{ij}, from the closed-form case
/// split on the residue of alpha.
int sigma_exponent(const QContext& ctx, int alpha, int i, int j);

/// The same exponent computed from the defining equality
/// sigma_alpha(x_{ij}) [M_alpha] = [M_alpha] x_{ij}, i.e. from the
/// quasi-commutation of [M_alpha U {z_j} \ {w_i}] with [M_alpha] in the
/// ambient quantum matrix algebra. Throws std::logic_error if the two
/// minors fail to quasi-commute.
int sigma_exponent_from_first_principles(const QContext& ctx, int alpha, int i, int j);

/// Z^n content of the dehomogenised generators.
std::vector<int> x_content(const QContext& ctx, int alpha, int i, int j);
std::vector<int> y_content(const QContext& ctx, int alpha);

/// Commutation data of a skew algebra presented on {x_{ij}, y}: the y-x
/// exponent table plus a flag recording that the x-x relations are the
/// generic quantum matrix relations.
struct SkewTables {
    std::vector<std::vector<int>> yx;  // [i-1][j-1]
    bool xx_generic = true;

    bool operator==(const SkewTables&) const = default;
};

SkewTables base_skew_tables(const QContext& ctx, int alpha);

/// Tables of the twist T(A_alpha): each relation picks up the ratio of the
/// two Gamma values at the generator contents; the result must again be a
/// pure power of q (anything else marks the tables as non-generic).
SkewTables twisted_skew_tables(const QContext& ctx, int alpha);

/// True when the twisted tables of A_alpha equal the untwisted tables of
/// A_{alpha+1} entrywise (the generator-relabeling isomorphism).
bool theta_alpha_check(const QContext& ctx, int alpha);

/// Element of A_alpha in normal form: finite sum of
/// coeff * (normal word in the x-generators) * y^k.
class SkewElement {
public:
    SkewElement() = default;
    SkewElement(QContext full, int alpha) : full_(full), alpha_(alpha) {}

    static SkewElement unit(QContext full, int alpha);

    QContext full_context() const { return full_; }
    int alpha() const { return alpha_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Word, int>, LaurentScalar>& terms() const { return terms_; }

    void add_term(const Word& w, int ypow, const LaurentScalar& c);
    SkewElement& operator+=(const SkewElement& rhs);
    SkewElement& operator*=(const LaurentScalar& c);
    bool operator==(const SkewElement&) const = default;

private:
    QContext full_;
    int alpha_ = 1;
    std::map<std::pair<Word, int>, LaurentScalar> terms_;
};

/// Free factors for building skew elements; normalisation moves y-powers to
/// the right with the sigma exponents and sorts the matrix part.
struct SkewAtom {
    enum class Kind { x, y, y_inv };
    Kind kind = Kind::y;
    int i = 0, j = 0;

    static SkewAtom X(int i, int j) { return {Kind::x, i, j}; }
    static SkewAtom Y() { return {Kind::y, 0, 0}; }
    static SkewAtom Yinv() { return {Kind::y_inv, 0, 0}; }
};

SkewElement skew_normal_form(const QContext& ctx, int alpha, const std::vector<SkewAtom>& atoms,
                             const LaurentScalar& coeff = LaurentScalar(1));

SkewElement skew_mul(const SkewElement& a, const SkewElement& b);

/// Row/column sets of the dehomogenised minor attached to [I]:
/// K = { i : w_{alpha,i} not in I }, L = { j : z_{alpha,j} in I }.
std::pair<IndexSet, IndexSet> dehom_minor_sets(const QContext& ctx, int alpha, const IndexSet& I);

/// phi_alpha([I]) = [K|L]_alpha * y_alpha, expanded into the x-generators.
SkewElement phi_alpha(const QContext& ctx, int alpha, const IndexSet& I);

/// Element of the localised Grassmannian in right-denominator form
/// numerator * [M_alpha]^{-denom_power}.
struct LocalizedElement {
    NCPoly numerator;
    int denom_power = 0;
    int alpha = 1;
};

/// Index set of rho_alpha([K|L]_alpha): (M_alpha \ w(K)) U z(L).
IndexSet rho_set(const QContext& ctx, int alpha, const IndexSet& K, const IndexSet& L);

/// rho_alpha([K|L]_alpha y^t) with the y-power folded into the [M_alpha]
/// power of the localised element.
LocalizedElement rho_alpha(const QContext& ctx, int alpha, const IndexSet& K, const IndexSet& L,
                           int ypow);

/// Cross-multiplied equality of localised elements.
bool localized_equal(const QContext& ctx, const LocalizedElement& a, const LocalizedElement& b);

/// Executes rho_{alpha+1} . theta_alpha . T . phi_alpha on [I] and divides
/// by [I+1]; throws std::logic_error when the composite is not proportional
/// to [I+1] or the table check fails.
LaurentScalar composite_cycle_scalar(const QContext& ctx, int alpha, const IndexSet& I);

/// Case value the composite must reproduce: q^{-2} when the residue of
/// alpha is small and n in I, q^2/p when it is large and n not in I, else 1.
LaurentScalar lambda_alpha_case(const QContext& ctx, int alpha, const IndexSet& I);

}  // namespace qgr
