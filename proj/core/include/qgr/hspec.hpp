#pragma once

#include <string>
#include <vector>

#include "qgr/grassmann.hpp"

namespace qgr {

/// Set of vanishing maximal minors, stored as a sorted list of m-subsets.
/// The augmentation pattern (every minor vanishes) is the one pattern not
/// realized by a rank-m matrix.
struct VanishingPattern {
    std::vector<IndexSet> sets;

    bool operator==(const VanishingPattern&) const = default;
    auto operator<=>(const VanishingPattern&) const = default;
};

VanishingPattern augmentation_pattern(const QContext& ctx);

/// Elementwise action of the cycle ('c') or the longest element ('w') on the
/// indexing sets of a pattern; bijective on closed pattern families.
VanishingPattern act_on_pattern(char g, const VanishingPattern& P, const QContext& ctx);

/// Vanishing patterns of rank-m totally nonnegative integer matrices with
/// entries in {-grid_bound..grid_bound}, plus a fixed list of extra
/// witnesses, deduplicated and sorted. Completeness is certified only by
/// agreement with count_le_diagrams, never assumed.
std::vector<VanishingPattern> enumerate_tnn_vanishing_patterns(const QContext& ctx, int grid_bound = 4);

/// 0/1 filling of a Young shape inside the m x (n-m) box. The Le condition
/// forbids a 0 with a 1 above it in its column and a 1 to its left in its
/// row.
struct LeDiagram {
    std::vector<int> shape;               // weakly decreasing row lengths, m rows
    std::vector<std::vector<int>> fill;   // fill[r] has shape[r] entries in {0,1}

    bool operator==(const LeDiagram&) const = default;
};

bool le_condition_holds(const LeDiagram& d);

/// Every valid diagram over all shapes in the m x (n-m) box.
std::vector<LeDiagram> all_le_diagrams(int m, int n);

/// Number of valid diagrams; equals all_le_diagrams(m, n).size().
long count_le_diagrams(int m, int n);

struct OrbitPartition {
    std::vector<std::vector<size_t>> orbits;  // indices into the input pattern list
    std::vector<std::string> generators;
};

/// Orbit partition of a pattern family under a subset of {c, w0}; the family
/// must be closed under the chosen generators (violation throws).
OrbitPartition dihedral_orbits(const std::vector<VanishingPattern>& patterns,
                               const std::string& generators, const QContext& ctx);

/// Cyclic non-interleaving of I \ J and J \ I.
bool weakly_separated(const IndexSet& I, const IndexSet& J, int n);

}  // namespace qgr
