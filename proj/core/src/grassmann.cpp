#include "qgr/grassmann.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qgr {

int tilde(int x, int n) {
    int r = x % n;
    if (r <= 0) r += n;
    return r;
}

std::vector<IndexSet> all_msubsets(int m, int n) {
    std::vector<IndexSet> out;
    IndexSet cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n - (m - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

IndexSet shift_set(const IndexSet& I, int a, int n) {
    IndexSet out;
    out.reserve(I.size());
    for (int i : I) out.push_back(tilde(i + a, n));
    std::sort(out.begin(), out.end());
    return out;
}

IndexSet w0_set(const IndexSet& I, int n) {
    IndexSet out;
    out.reserve(I.size());
    for (int i : I) out.push_back(n - i + 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> content_vec(const IndexSet& I, int n) {
    std::vector<int> c(n, 0);
    for (int i : I) {
        if (i < 1 || i > n) throw std::invalid_argument("content_vec: index out of range");
        c[i - 1] = 1;
    }
    return c;
}

std::string index_set_to_string(const IndexSet& I) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < I.size(); ++i) {
        if (i) os << ",";
        os << I[i];
    }
    os << "]";
    return os.str();
}

IndexSet parse_index_set(const std::string& text) {
    IndexSet out;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])))) ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '[') throw std::invalid_argument("parse_index_set: expected '['");
    ++i;
    while (true) {
        skip();
        if (i < text.size() && text[i] == ']') break;
        size_t next = text.find_first_of(",]", i);
        if (next == std::string::npos) throw std::invalid_argument("parse_index_set: unterminated set");
        out.push_back(std::stoi(text.substr(i, next - i)));
        i = next;
        if (text[i] == ',') ++i;
    }
    std::sort(out.begin(), out.end());
    return out;
}

NCPoly quantum_minor_rc(const QContext& ctx, const IndexSet& K, const IndexSet& L) {
    if (K.size() != L.size()) throw std::invalid_argument("quantum_minor_rc: |K| != |L|");
    const int t = static_cast<int>(K.size());
    NCPoly out(ctx);
    if (t == 0) return NCPoly::unit(ctx);
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int a = 0; a < t; ++a)
            for (int b = a + 1; b < t; ++b)
                if (perm[a] > perm[b]) ++inversions;
        Word w;
        for (int a = 0; a < t; ++a)
            w.push_back(static_cast<char>(gen_code(ctx, K[a], L[perm[a]])));
        // rows strictly increase, so the word is already normal
        mpz_class sign = (inversions % 2 == 0) ? 1 : -1;
        out.add_term(w, LaurentScalar::monomial(sign, inversions * ctx.m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

NCPoly quantum_minor(const QContext& ctx, const IndexSet& I) {
    if (static_cast<int>(I.size()) != ctx.m)
        throw std::invalid_argument("quantum_minor: |I| != m");
    IndexSet rows(ctx.m);
    std::iota(rows.begin(), rows.end(), 1);
    return quantum_minor_rc(ctx, rows, I);
}

NCPoly eval_relation(const QuadRelation& rel) {
    NCPoly acc(rel.ctx);
    for (const auto& term : rel.terms) {
        NCPoly prod = nc_mul(quantum_minor(rel.ctx, term.left), quantum_minor(rel.ctx, term.right));
        prod *= term.coeff;
        acc += prod;
    }
    return acc;
}

namespace {

// Relation coefficients live in Z[q^{+-1}]. The scalar model ties q to the
// minor size (q = u^m), so transporting a relation into minors of size m'
// rewrites u^{mk} as u^{m'k}.
LaurentScalar requantize(const LaurentScalar& c, int m_old, int m_new) {
    if (m_old == m_new) return c;
    LaurentScalar out;
    for (const auto& [e, z] : c.terms()) {
        if (e % m_old != 0)
            throw std::invalid_argument("muir_extend: coefficient is not a q-power combination");
        out += LaurentScalar::monomial(z, (e / m_old) * m_new);
    }
    return out;
}

}  // namespace

QuadRelation muir_extend(const QuadRelation& rel, const IndexSet& P) {
    const int n = rel.ctx.n;
    std::set<int> pset(P.begin(), P.end());
    IndexSet pbar;
    for (int v = 1; v <= n; ++v)
        if (!pset.count(v)) pbar.push_back(v);

    QuadRelation out;
    out.ctx = {rel.ctx.m + static_cast<int>(pbar.size()), n};
    for (const auto& term : rel.terms) {
        for (int v : term.left)
            if (!pset.count(v)) throw std::invalid_argument("muir_extend: index set not contained in P");
        for (int v : term.right)
            if (!pset.count(v)) throw std::invalid_argument("muir_extend: index set not contained in P");
        QuadTerm ext;
        ext.coeff = requantize(term.coeff, rel.ctx.m, out.ctx.m);
        ext.left = term.left;
        ext.left.insert(ext.left.end(), pbar.begin(), pbar.end());
        std::sort(ext.left.begin(), ext.left.end());
        ext.right = term.right;
        ext.right.insert(ext.right.end(), pbar.begin(), pbar.end());
        std::sort(ext.right.begin(), ext.right.end());
        out.terms.push_back(std::move(ext));
    }
    if (!eval_relation(out).is_zero())
        throw std::logic_error("muir_extend: extended relation fails to vanish");
    return out;
}

namespace {

std::vector<int> add_contents(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace

std::vector<QuadRelation> quadratic_relations(const QContext& ctx) {
    const auto subsets = all_msubsets(ctx.m, ctx.n);
    if (subsets.size() > 30)
        throw std::invalid_argument("quadratic_relations: context beyond desk scale");
    std::map<IndexSet, NCPoly> minors;
    for (const auto& I : subsets) minors.emplace(I, quantum_minor(ctx, I));

    // Products with distinct total column content have disjoint word support,
    // so the kernel splits by content class.
    struct ClassData {
        std::vector<std::pair<IndexSet, IndexSet>> pairs;
        std::vector<NCPoly> products;
    };
    std::map<std::vector<int>, ClassData> classes;
    for (const auto& I : subsets) {
        for (const auto& J : subsets) {
            auto content = add_contents(content_vec(I, ctx.n), content_vec(J, ctx.n));
            auto& cls = classes[content];
            cls.pairs.emplace_back(I, J);
            cls.products.push_back(nc_mul(minors.at(I), minors.at(J)));
        }
    }

    std::vector<QuadRelation> basis;
    for (const auto& [content, cls] : classes) {
        std::set<Word> support;
        for (const auto& p : cls.products)
            for (const auto& [w, c] : p.terms()) support.insert(w);
        std::vector<Word> words(support.begin(), support.end());
        LMatrix mat(words.size(), LVector(cls.pairs.size()));
        for (size_t col = 0; col < cls.products.size(); ++col) {
            size_t row = 0;
            for (const auto& w : words) {
                auto it = cls.products[col].terms().find(w);
                if (it != cls.products[col].terms().end()) mat[row][col] = it->second;
                ++row;
            }
        }
        KernelBasis kb = ff_kernel(mat);
        for (const auto& v : kb.vectors) {
            QuadRelation rel;
            rel.ctx = ctx;
            for (size_t col = 0; col < v.size(); ++col) {
                if (v[col].is_zero()) continue;
                rel.terms.push_back({v[col], cls.pairs[col].first, cls.pairs[col].second});
            }
            basis.push_back(std::move(rel));
        }
    }
    return basis;
}

LMatrix product_evaluation_matrix(const QContext& ctx,
                                  std::vector<std::pair<IndexSet, IndexSet>>& pairs_out) {
    const auto subsets = all_msubsets(ctx.m, ctx.n);
    pairs_out.clear();
    std::vector<NCPoly> products;
    for (const auto& I : subsets) {
        NCPoly mi = quantum_minor(ctx, I);
        for (const auto& J : subsets) {
            pairs_out.emplace_back(I, J);
            products.push_back(nc_mul(mi, quantum_minor(ctx, J)));
        }
    }
    std::set<Word> support;
    for (const auto& p : products)
        for (const auto& [w, c] : p.terms()) support.insert(w);
    LMatrix mat(support.size(), LVector(products.size()));
    size_t row = 0;
    for (const auto& w : support) {
        for (size_t col = 0; col < products.size(); ++col) {
            auto it = products[col].terms().find(w);
            if (it != products[col].terms().end()) mat[row][col] = it->second;
        }
        ++row;
    }
    return mat;
}

ConsecutiveData consecutive_data(const QContext& ctx, int alpha) {
    ConsecutiveData d;
    d.alpha = alpha;
    for (int t = 0; t < ctx.m; ++t) d.M.push_back(tilde(alpha + t, ctx.n));
    std::sort(d.M.begin(), d.M.end());
    for (int i = 1; i <= ctx.m; ++i) d.w.push_back(tilde(alpha + ctx.m - i, ctx.n));
    for (int j = 1; j <= ctx.n - ctx.m; ++j) d.z.push_back(tilde(j + alpha + ctx.m - 1, ctx.n));
    return d;
}

}  // namespace qgr
