#include "qgr/groupoid.hpp"

#include <stdexcept>

namespace qgr {

LaurentScalar lambda_I(const QContext& ctx, const IndexSet& I) {
    if (static_cast<int>(I.size()) != ctx.m) throw std::invalid_argument("lambda_I: |I| != m");
    return I.back() == ctx.n ? ctx.scalars().q_pow(-2) : LaurentScalar(1);
}

LaurentScalar Lambda(const QContext& ctx, const IndexSet& I, int r) {
    LaurentScalar acc(1);
    IndexSet cur = I;
    for (int s = 0; s < r; ++s) {
        acc *= lambda_I(ctx, cur);
        cur = shift_set(cur, 1, ctx.n);
    }
    return acc;
}

GeneratorImage theta_image(const QContext& ctx, int ell, const IndexSet& I) {
    return {lambda_I(ctx, I), shift_set(I, 1, ctx.n), ell};
}

GeneratorImage compose_theta(const QContext& ctx, int ell_start, int count, const IndexSet& I) {
    if (count < 0) throw std::invalid_argument("compose_theta: negative count");
    return {Lambda(ctx, I, count), shift_set(I, count, ctx.n), ell_start + count - 1};
}

GeneratorImage omega_image(const QContext& ctx, int ell, const IndexSet& I) {
    if (ell < 0) throw std::invalid_argument("omega_image: negative level");
    IndexSet reflected = w0_set(shift_set(I, ell, ctx.n), ctx.n);
    LaurentScalar scalar = Lambda(ctx, I, ell) * Lambda(ctx, reflected, ell);
    return {scalar, w0_set(I, ctx.n), ell};
}

std::string MapSpec::name() const {
    return (kind == Kind::theta ? "theta" : "omega") + std::to_string(ell) +
           (corrupt_lambda ? "(corrupted)" : "");
}

GeneratorImage map_image(const QContext& ctx, const MapSpec& spec, const IndexSet& I) {
    return spec.kind == MapSpec::Kind::theta ? theta_image(ctx, spec.ell, I)
                                             : omega_image(ctx, spec.ell, I);
}

TransportReport verify_transport(const QContext& ctx, const MapSpec& spec,
                                 const std::vector<QuadRelation>& rels, int level_bound) {
    if (level_bound < 0) level_bound = default_level_bound(ctx);
    if (std::abs(spec.source_level()) > level_bound || std::abs(spec.target_level()) > level_bound)
        throw std::invalid_argument("verify_transport: map level exceeds the materialized bound");

    TransportReport report;
    report.map_name = spec.name();
    report.ctx = ctx;
    report.level_bound = level_bound;
    report.caveat = "verified on the degree-2 relation basis only";

    for (size_t idx = 0; idx < rels.size(); ++idx) {
        const QuadRelation& rel = rels[idx];
        NCPoly residual(ctx);
        for (const auto& term : rel.terms) {
            GeneratorImage li = map_image(ctx, spec, term.left);
            const GeneratorImage ri = map_image(ctx, spec, term.right);
            if (spec.corrupt_lambda) li.scalar = LaurentScalar(1);
            // The base relation holds at the source level once the source
            // tower cocycle is divided out of each ordered product.
            LaurentScalar source = tower_scalar(spec.source_level(), content_vec(term.left, ctx.n),
                                                content_vec(term.right, ctx.n));
            const IndexSet& first = spec.anti() ? ri.target_set : li.target_set;
            const IndexSet& second = spec.anti() ? li.target_set : ri.target_set;
            LaurentScalar target = tower_scalar(spec.target_level(), content_vec(first, ctx.n),
                                                content_vec(second, ctx.n));
            LaurentScalar coeff =
                term.coeff * source.unit_inverse() * li.scalar * ri.scalar * target;
            residual += nc_mul(quantum_minor(ctx, first), quantum_minor(ctx, second)) * coeff;
        }
        if (!residual.is_zero()) report.failing.push_back(idx);
        report.residuals.push_back(std::move(residual));
    }
    return report;
}

bool dihedral_scalar_check(const QContext& ctx, int ell, const IndexSet& I) {
    // (Theta_0 ... Theta_{-l+1}) : T^l -> base
    GeneratorImage down = compose_theta(ctx, -ell + 1, ell, I);
    if (down.target_level != 0) return false;
    // Omega_0 : base -> base, anti; scalars pass through untouched.
    IndexSet reflected = w0_set(down.target_set, ctx.n);
    // (Theta_l ... Theta_1) : base -> tau^l
    GeneratorImage up = compose_theta(ctx, 1, ell, reflected);
    GeneratorImage composite{down.scalar * up.scalar, up.target_set, up.target_level};
    return composite == omega_image(ctx, ell, I);
}

}  // namespace qgr
