#pragma once

#include <string>
#include <vector>

#include "qgr/grassmann.hpp"
#include "qgr/twist.hpp"

namespace qgr {

/// lambda_I = 1 when max(I) < n, q^{-2} when n lies in I.
LaurentScalar lambda_I(const QContext& ctx, const IndexSet& I);

/// Lambda_I(r) = prod_{s=1..r} lambda_{I + (s-1)}; Lambda_I(0) = 1.
LaurentScalar Lambda(const QContext& ctx, const IndexSet& I, int r);

/// Image of one generator under a groupoid arrow: scalar multiple of the
/// minor on target_set, living at target_level.
struct GeneratorImage {
    LaurentScalar scalar;
    IndexSet target_set;
    TwistLevel target_level = 0;

    bool operator==(const GeneratorImage&) const = default;
};

/// Theta_l maps level l-1 to level l and sends the level-(l-1) copy of [I]
/// to lambda_I times the level-l copy of [I+1].
GeneratorImage theta_image(const QContext& ctx, int ell, const IndexSet& I);

/// Composite Theta_{l0+count-1} ... Theta_{l0}: scalar Lambda_I(count),
/// set I+count, target level l0+count-1.
GeneratorImage compose_theta(const QContext& ctx, int ell_start, int count, const IndexSet& I);

/// Omega_l (l >= 0) maps the T-tower level -l to the tau-tower level l,
/// reversing products, with scalar Lambda_I(l) * Lambda_{w0(I+l)}(l) and
/// target set w0(I).
GeneratorImage omega_image(const QContext& ctx, int ell, const IndexSet& I);

/// Arrow selector for transport verification.
struct MapSpec {
    enum class Kind { theta, omega };
    Kind kind = Kind::theta;
    int ell = 1;
    /// Negative control: drop the lambda correction from the left factor of
    /// each transported product. (Dropping it from both factors rescales
    /// every content class uniformly and is invisible to degree-2
    /// relations, so the control corrupts one side.)
    bool corrupt_lambda = false;

    TwistLevel source_level() const { return kind == Kind::theta ? ell - 1 : -ell; }
    TwistLevel target_level() const { return ell; }
    bool anti() const { return kind == Kind::omega; }
    std::string name() const;
};

GeneratorImage map_image(const QContext& ctx, const MapSpec& spec, const IndexSet& I);

/// Exact residuals of transporting degree-2 relations along an arrow. Each
/// base relation sum c_s [I_s][J_s] = 0 is read at the source level (with
/// the tower cocycle correction), pushed through the generator images, and
/// evaluated at the target level; order is reversed for anti arrows.
struct TransportReport {
    std::string map_name;
    QContext ctx;
    int level_bound = 0;
    std::vector<NCPoly> residuals;
    std::vector<size_t> failing;
    std::string caveat;

    size_t relation_count() const { return residuals.size(); }
    size_t zero_count() const { return residuals.size() - failing.size(); }
    bool all_zero() const { return failing.empty(); }
};

constexpr int default_level_bound(const QContext& ctx) { return 2 * ctx.n; }

TransportReport verify_transport(const QContext& ctx, const MapSpec& spec,
                                 const std::vector<QuadRelation>& rels, int level_bound = -1);

/// Composes (Theta_l ... Theta_1) Omega_0 (Theta_0 ... Theta_{-l+1}) on
/// generator images and compares with omega_image(l, I) exactly.
bool dihedral_scalar_check(const QContext& ctx, int ell, const IndexSet& I);

}  // namespace qgr
