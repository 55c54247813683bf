#include "qgr/hspec.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "qgr/parallel.hpp"
#include "qgr/tnn.hpp"

namespace qgr {

VanishingPattern augmentation_pattern(const QContext& ctx) {
    return {all_msubsets(ctx.m, ctx.n)};
}

VanishingPattern act_on_pattern(char g, const VanishingPattern& P, const QContext& ctx) {
    VanishingPattern out;
    out.sets.reserve(P.sets.size());
    for (const auto& I : P.sets)
        out.sets.push_back(g == 'c' ? shift_set(I, 1, ctx.n) : w0_set(I, ctx.n));
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

namespace {

// Fixed witnesses appended to the grid scan. Total nonnegativity constrains
// the minors, not the entries, so witnesses with negative entries are
// perfectly valid points.
std::vector<std::vector<long>> extra_witnesses(const QContext& ctx) {
    std::vector<std::vector<long>> out;
    if (ctx.m == 2 && ctx.n == 4) {
        out.push_back({1, 1, 1, 1, 1, 2, 3, 4});
        out.push_back({1, 1, 0, -1, 0, 1, 1, 1});
        out.push_back({1, 0, -1, -1, 1, 1, 1, 0});
    }
    return out;
}

}  // namespace

std::vector<VanishingPattern> enumerate_tnn_vanishing_patterns(const QContext& ctx, int grid_bound) {
    const int m = ctx.m, n = ctx.n;
    const auto subsets = all_msubsets(m, n);
    if (subsets.size() > 8 * sizeof(unsigned long))
        throw std::invalid_argument("enumerate_tnn_vanishing_patterns: too many minors");
    const int cells = m * n;
    // Entries range over {-grid_bound..grid_bound}: nonnegativity is asked of
    // the minors, and several cells are only reachable with negative entries.
    const long base = 2L * grid_bound + 1;
    long total = 1;
    for (int i = 0; i < cells; ++i) {
        if (total > (1L << 40) / base)
            throw std::invalid_argument("enumerate_tnn_vanishing_patterns: grid too large");
        total *= base;
    }

    const unsigned workers = worker_count();
    std::vector<std::set<unsigned long>> found(workers);
    auto scan = [&](unsigned slot, long begin, long end) {
        std::vector<long> entries(cells);
        for (long code = begin; code < end; ++code) {
            long rest = code;
            for (int i = 0; i < cells; ++i) {
                entries[i] = rest % base - grid_bound;
                rest /= base;
            }
            unsigned long mask;
            if (grid_vanishing_mask(m, n, entries, subsets, mask)) found[slot].insert(mask);
        }
    };
    std::vector<std::thread> threads;
    const long chunk = (total + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        long begin = static_cast<long>(t) * chunk;
        long end = std::min(total, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back(scan, t, begin, end);
    }
    for (auto& th : threads) th.join();

    std::set<unsigned long> masks;
    for (const auto& s : found) masks.insert(s.begin(), s.end());
    for (const auto& wit : extra_witnesses(ctx)) {
        unsigned long mask;
        if (grid_vanishing_mask(m, n, wit, subsets, mask)) masks.insert(mask);
    }

    std::vector<VanishingPattern> out;
    out.reserve(masks.size());
    for (unsigned long mask : masks) {
        VanishingPattern p;
        for (size_t k = 0; k < subsets.size(); ++k)
            if (mask & (1ul << k)) p.sets.push_back(subsets[k]);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool le_condition_holds(const LeDiagram& d) {
    const int m = static_cast<int>(d.shape.size());
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < d.shape[r]; ++c) {
            if (d.fill[r][c] != 0) continue;
            bool above = false, left = false;
            for (int rr = 0; rr < r; ++rr)
                if (c < d.shape[rr] && d.fill[rr][c] == 1) above = true;
            for (int cc = 0; cc < c; ++cc)
                if (d.fill[r][cc] == 1) left = true;
            if (above && left) return false;
        }
    }
    return true;
}

std::vector<LeDiagram> all_le_diagrams(int m, int n) {
    const int width = n - m;
    std::vector<LeDiagram> out;
    std::vector<int> shape(m, 0);  // weakly decreasing row lengths
    auto emit_fillings = [&]() {
        int cells = 0;
        for (int r = 0; r < m; ++r) cells += shape[r];
        for (long code = 0; code < (1L << cells); ++code) {
            LeDiagram d;
            d.shape = shape;
            d.fill.resize(m);
            int bit = 0;
            for (int r = 0; r < m; ++r) {
                d.fill[r].resize(shape[r]);
                for (int c = 0; c < shape[r]; ++c) d.fill[r][c] = (code >> bit++) & 1;
            }
            if (le_condition_holds(d)) out.push_back(std::move(d));
        }
    };
    auto rec = [&](auto&& self, int row, int maxlen) -> void {
        if (row == m) {
            emit_fillings();
            return;
        }
        for (int len = 0; len <= maxlen; ++len) {
            shape[row] = len;
            self(self, row + 1, len);
        }
        shape[row] = 0;
    };
    rec(rec, 0, width);
    return out;
}

long count_le_diagrams(int m, int n) {
    return static_cast<long>(all_le_diagrams(m, n).size());
}

OrbitPartition dihedral_orbits(const std::vector<VanishingPattern>& patterns,
                               const std::string& generators, const QContext& ctx) {
    std::map<VanishingPattern, size_t> index;
    for (size_t i = 0; i < patterns.size(); ++i) index.emplace(patterns[i], i);
    if (index.size() != patterns.size())
        throw std::invalid_argument("dihedral_orbits: duplicate patterns");

    auto neighbor = [&](size_t i, char g) {
        auto it = index.find(act_on_pattern(g, patterns[i], ctx));
        if (it == index.end())
            throw std::invalid_argument("dihedral_orbits: pattern family not closed under generators");
        return it->second;
    };

    OrbitPartition part;
    for (char g : generators) part.generators.push_back(g == 'c' ? "c" : "w0");
    std::vector<bool> seen(patterns.size(), false);
    for (size_t start = 0; start < patterns.size(); ++start) {
        if (seen[start]) continue;
        std::vector<size_t> orbit;
        std::vector<size_t> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            size_t cur = stack.back();
            stack.pop_back();
            orbit.push_back(cur);
            for (char g : generators) {
                size_t next = neighbor(cur, g);
                if (!seen[next]) {
                    seen[next] = true;
                    stack.push_back(next);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        part.orbits.push_back(std::move(orbit));
    }
    return part;
}

bool weakly_separated(const IndexSet& I, const IndexSet& J, int n) {
    std::set<int> iset(I.begin(), I.end()), jset(J.begin(), J.end());
    std::vector<char> seq;
    for (int v = 1; v <= n; ++v) {
        bool in_i = iset.count(v), in_j = jset.count(v);
        if (in_i && !in_j) seq.push_back('A');
        if (in_j && !in_i) seq.push_back('B');
    }
    if (seq.empty()) return true;
    // count cyclic blocks of equal letters; separated iff at most two
    int blocks = 0;
    const size_t len = seq.size();
    for (size_t k = 0; k < len; ++k)
        if (seq[k] != seq[(k + 1) % len]) ++blocks;
    if (blocks == 0) blocks = 1;  // single letter throughout
    return blocks <= 2;
}

}  // namespace qgr
