#pragma once

#include <vector>

#include "qgr/grassmann.hpp"
#include "qgr/qmatrix.hpp"

namespace qgr {

enum class CocycleKind { Gamma, gamma };

/// Gamma(s, t) = p^{s_n * sum_{j != n} t_j},
/// gamma(s, t) = p^{-s_1 * sum_{j != 1} t_j}, with p = u^2.
/// Defined for arbitrary integer vectors of equal length.
LaurentScalar eval_cocycle(CocycleKind kind, const std::vector<int>& s, const std::vector<int>& t);

/// chi(s, t+v) chi(t, v) == chi(s, t) chi(s+t, v), checked exactly.
bool cocycle_condition_check(CocycleKind kind, const std::vector<int>& s, const std::vector<int>& t,
                             const std::vector<int>& v);

/// Tower level: l >= 1 is the gamma-tower tau^l, l <= -1 the Gamma-tower
/// T^{|l|}, 0 the base algebra.
using TwistLevel = int;

/// Cyclic rotation of a content vector: coordinate j moves to j + a (mod n).
std::vector<int> rotate_content(const std::vector<int>& v, int a);

/// Content carried by the level-l copy of the base generator [I]:
/// content(shift_set(I, -l)) on the tau tower, content(shift_set(I, +|l|))
/// on the T tower, content(I) at level 0.
std::vector<int> level_content(TwistLevel level, const IndexSet& I, int n);

/// Cumulative cocycle scalar of the |l|-stage tower at base contents s, t:
/// the product of the stage cocycle evaluated at stage-shifted contents.
LaurentScalar tower_scalar(TwistLevel level, const std::vector<int>& s, const std::vector<int>& t);

/// Column-homogeneous component of an element viewed at a tower level; the
/// stored value and content live in the base algebra.
struct TwistedPart {
    std::vector<int> content;
    NCPoly value;
};

struct TwistedElement {
    TwistLevel level = 0;
    std::vector<TwistedPart> parts;

    bool is_zero() const { return parts.empty(); }
};

/// View a base element at a tower level, split into homogeneous parts by
/// column content. Throws if a term is not column-homogeneous (cannot
/// happen for polynomials built from minors).
TwistedElement twisted_from_poly(TwistLevel level, const NCPoly& p);

TwistedElement twisted_from_minor(TwistLevel level, const QContext& ctx, const IndexSet& I);

/// Equality of twisted elements (same level, same homogeneous parts).
bool twisted_equal(const TwistedElement& a, const TwistedElement& b);

TwistedElement twisted_scale(const TwistedElement& a, const LaurentScalar& c);

/// Product in the level-l twisted algebra: on homogeneous parts, the tower
/// cocycle scalar times the base product. Throws on level mismatch.
TwistedElement twisted_product(const TwistedElement& a, const TwistedElement& b);

/// gamma([I+1], [J+1]) * Gamma([I], [J]) == 1.
bool gamma_Gamma_identity(const IndexSet& I, const IndexSet& J, int n);

}  // namespace qgr
