#pragma once

#include <vector>

#include "qgr/laurent.hpp"

namespace qgr {

using LMatrix = std::vector<std::vector<LaurentScalar>>;
using LVector = std::vector<LaurentScalar>;

/// Basis of the right kernel of a matrix over Z[u^{+-1}], taken over the
/// fraction field and cleared back to Laurent-polynomial entries. Every
/// vector is normalized: integer content divided out, lowest u-exponent
/// shifted to 0, and the first nonzero coordinate's lowest coefficient made
/// positive.
struct KernelBasis {
    std::vector<LVector> vectors;

    size_t dimension() const { return vectors.size(); }
};

/// Canonical in-place normalization used for KernelBasis vectors.
void normalize_vector(LVector& v);

/// Right kernel via fraction-free Bareiss elimination followed by
/// division-free back substitution. Each returned vector is checked to
/// annihilate the input exactly (failure throws std::logic_error).
KernelBasis ff_kernel(const LMatrix& mat);

/// Rank over the fraction field (forward Bareiss pivot count).
int laurent_rank(LMatrix mat);

}  // namespace qgr
