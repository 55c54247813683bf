#include "qgr/dehom.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qgr/twist.hpp"

namespace qgr {

QContext dehom_matrix_context(const QContext& ctx) {
    return {ctx.m, ctx.n - ctx.m};
}

int sigma_exponent(const QContext& ctx, int alpha, int i, int j) {
    if (i < 1 || i > ctx.m || j < 1 || j > ctx.n - ctx.m)
        throw std::invalid_argument("sigma_exponent: index out of bounds");
    const int at = tilde(alpha, ctx.n);
    if (at <= ctx.n - ctx.m) return j <= ctx.n - ctx.m - at + 1 ? 1 : -1;
    return i >= at - (ctx.n - ctx.m) ? -1 : 1;
}

int sigma_exponent_from_first_principles(const QContext& ctx, int alpha, int i, int j) {
    if (i < 1 || i > ctx.m || j < 1 || j > ctx.n - ctx.m)
        throw std::invalid_argument("sigma exponent: index out of bounds");
    const ConsecutiveData d = consecutive_data(ctx, alpha);
    IndexSet B = d.M;
    B.erase(std::find(B.begin(), B.end(), d.w[i - 1]));
    B.push_back(d.z[j - 1]);
    std::sort(B.begin(), B.end());
    auto r = quasi_commutation_exponent(quantum_minor(ctx, B), quantum_minor(ctx, d.M));
    if (!r) throw std::logic_error("sigma exponent: consecutive minor fails to quasi-commute");
    return static_cast<int>(*r);
}

std::vector<int> x_content(const QContext& ctx, int alpha, int i, int j) {
    const ConsecutiveData d = consecutive_data(ctx, alpha);
    std::vector<int> c(ctx.n, 0);
    c[d.z[j - 1] - 1] += 1;
    c[d.w[i - 1] - 1] -= 1;
    return c;
}

std::vector<int> y_content(const QContext& ctx, int alpha) {
    const ConsecutiveData d = consecutive_data(ctx, alpha);
    std::vector<int> c(ctx.n, 0);
    for (int v : d.M) c[v - 1] = 1;
    return c;
}

SkewTables base_skew_tables(const QContext& ctx, int alpha) {
    SkewTables t;
    t.yx.assign(ctx.m, std::vector<int>(ctx.n - ctx.m));
    for (int i = 1; i <= ctx.m; ++i)
        for (int j = 1; j <= ctx.n - ctx.m; ++j) t.yx[i - 1][j - 1] = sigma_exponent(ctx, alpha, i, j);
    t.xx_generic = true;
    return t;
}

namespace {

// q-power exponent of a unit Laurent monomial, if it is one.
std::optional<long> as_q_power(const LaurentScalar& s, int m) {
    return monomial_ratio(LaurentScalar(1), s, m);
}

}  // namespace

SkewTables twisted_skew_tables(const QContext& ctx, int alpha) {
    const int m = ctx.m, w = ctx.n - ctx.m;
    SkewTables t;
    t.yx.assign(m, std::vector<int>(w));
    const auto ycont = y_content(ctx, alpha);
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= w; ++j) {
            const auto xc = x_content(ctx, alpha, i, j);
            LaurentScalar ratio = eval_cocycle(CocycleKind::Gamma, ycont, xc) *
                                  eval_cocycle(CocycleKind::Gamma, xc, ycont).unit_inverse();
            LaurentScalar rel = ctx.scalars().q_pow(sigma_exponent(ctx, alpha, i, j)) * ratio;
            auto e = as_q_power(rel, ctx.m);
            if (!e) throw std::logic_error("twisted_skew_tables: y-x relation is not a q power");
            t.yx[i - 1][j - 1] = static_cast<int>(*e);
        }
    }

    // x-x relations: quasi-commuting pairs keep their exponent iff the two
    // Gamma values cancel; diagonal pairs transport verbatim iff all three
    // Gamma values agree.
    t.xx_generic = true;
    for (int i1 = 1; i1 <= m && t.xx_generic; ++i1)
        for (int j1 = 1; j1 <= w && t.xx_generic; ++j1)
            for (int i2 = 1; i2 <= m && t.xx_generic; ++i2)
                for (int j2 = 1; j2 <= w && t.xx_generic; ++j2) {
                    if (i1 == i2 && j1 == j2) continue;
                    const auto va = x_content(ctx, alpha, i1, j1);
                    const auto vb = x_content(ctx, alpha, i2, j2);
                    LaurentScalar ab = eval_cocycle(CocycleKind::Gamma, va, vb);
                    LaurentScalar ba = eval_cocycle(CocycleKind::Gamma, vb, va);
                    if (!(ab == ba)) {
                        t.xx_generic = false;
                        break;
                    }
                    if (i1 < i2 && j1 < j2) {
                        const auto vc = x_content(ctx, alpha, i1, j2);
                        const auto vd = x_content(ctx, alpha, i2, j1);
                        if (!(eval_cocycle(CocycleKind::Gamma, vc, vd) == ab)) t.xx_generic = false;
                    }
                }
    return t;
}

bool theta_alpha_check(const QContext& ctx, int alpha) {
    return twisted_skew_tables(ctx, alpha) == base_skew_tables(ctx, alpha + 1);
}

SkewElement SkewElement::unit(QContext full, int alpha) {
    SkewElement e(full, alpha);
    e.add_term(Word{}, 0, LaurentScalar(1));
    return e;
}

void SkewElement::add_term(const Word& w, int ypow, const LaurentScalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(w, ypow);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SkewElement& SkewElement::operator+=(const SkewElement& rhs) {
    if (terms_.empty()) {
        full_ = rhs.full_;
        alpha_ = rhs.alpha_;
    } else if (!rhs.terms_.empty() && (!(full_ == rhs.full_) || alpha_ != rhs.alpha_)) {
        throw std::invalid_argument("SkewElement: context mismatch");
    }
    for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
    return *this;
}

SkewElement& SkewElement::operator*=(const LaurentScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

namespace {

long word_sigma_sum(const QContext& full, int alpha, const Word& w) {
    const QContext small = dehom_matrix_context(full);
    long s = 0;
    for (unsigned char c : w) {
        GeneratorIndex g = gen_decode(small, c);
        s += sigma_exponent(full, alpha, g.row, g.col);
    }
    return s;
}

}  // namespace

SkewElement skew_normal_form(const QContext& ctx, int alpha, const std::vector<SkewAtom>& atoms,
                             const LaurentScalar& coeff) {
    const QContext small = dehom_matrix_context(ctx);
    SkewElement acc = SkewElement::unit(ctx, alpha);
    acc *= coeff;
    for (const SkewAtom& atom : atoms) {
        SkewElement next(ctx, alpha);
        for (const auto& [key, c] : acc.terms()) {
            const auto& [w, k] = key;
            switch (atom.kind) {
                case SkewAtom::Kind::y:
                    next.add_term(w, k + 1, c);
                    break;
                case SkewAtom::Kind::y_inv:
                    next.add_term(w, k - 1, c);
                    break;
                case SkewAtom::Kind::x: {
                    // (w y^k) x = q^{k sigma(x)} (w x) y^k
                    const int e = sigma_exponent(ctx, alpha, atom.i, atom.j);
                    LaurentScalar scale = ctx.scalars().q_pow(static_cast<long>(k) * e) * c;
                    NCPoly wx = normal_form(
                        small, w + static_cast<char>(gen_code(small, atom.i, atom.j)), scale);
                    for (const auto& [nw, nc] : wx.terms()) next.add_term(nw, k, nc);
                    break;
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

SkewElement skew_mul(const SkewElement& a, const SkewElement& b) {
    if (!(a.full_context() == b.full_context()) || a.alpha() != b.alpha())
        throw std::invalid_argument("skew_mul: context mismatch");
    const QContext ctx = a.full_context();
    const QContext small = dehom_matrix_context(ctx);
    SkewElement out(ctx, a.alpha());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            // (w1 y^{k1})(w2 y^{k2}) = q^{k1 sigma(w2)} (w1 w2) y^{k1+k2}
            LaurentScalar scale =
                ctx.scalars().q_pow(static_cast<long>(ka.second) * word_sigma_sum(ctx, a.alpha(), kb.first)) *
                ca * cb;
            NCPoly prodA(small);
            prodA.add_term(ka.first, scale);
            NCPoly prodB(small);
            prodB.add_term(kb.first, LaurentScalar(1));
            NCPoly prod = nc_mul(prodA, prodB);
            for (const auto& [w, c] : prod.terms()) out.add_term(w, ka.second + kb.second, c);
        }
    }
    return out;
}

std::pair<IndexSet, IndexSet> dehom_minor_sets(const QContext& ctx, int alpha, const IndexSet& I) {
    if (static_cast<int>(I.size()) != ctx.m)
        throw std::invalid_argument("dehom_minor_sets: |I| != m");
    const ConsecutiveData d = consecutive_data(ctx, alpha);
    std::set<int> iset(I.begin(), I.end());
    IndexSet K, L;
    for (int i = 1; i <= ctx.m; ++i)
        if (!iset.count(d.w[i - 1])) K.push_back(i);
    for (int j = 1; j <= ctx.n - ctx.m; ++j)
        if (iset.count(d.z[j - 1])) L.push_back(j);
    return {K, L};
}

SkewElement phi_alpha(const QContext& ctx, int alpha, const IndexSet& I) {
    auto [K, L] = dehom_minor_sets(ctx, alpha, I);
    const QContext small = dehom_matrix_context(ctx);
    NCPoly minor = quantum_minor_rc(small, K, L);
    SkewElement out(ctx, alpha);
    for (const auto& [w, c] : minor.terms()) out.add_term(w, 1, c);
    return out;
}

IndexSet rho_set(const QContext& ctx, int alpha, const IndexSet& K, const IndexSet& L) {
    const ConsecutiveData d = consecutive_data(ctx, alpha);
    std::set<int> out(d.M.begin(), d.M.end());
    for (int i : K) out.erase(d.w[i - 1]);
    for (int j : L) out.insert(d.z[j - 1]);
    return IndexSet(out.begin(), out.end());
}

LocalizedElement rho_alpha(const QContext& ctx, int alpha, const IndexSet& K, const IndexSet& L,
                           int ypow) {
    if (K.size() != L.size()) throw std::invalid_argument("rho_alpha: |K| != |L|");
    LocalizedElement out;
    out.alpha = alpha;
    NCPoly num = quantum_minor(ctx, rho_set(ctx, alpha, K, L));
    const int mpow = ypow - 1;
    if (mpow >= 0) {
        const ConsecutiveData d = consecutive_data(ctx, alpha);
        NCPoly mm = quantum_minor(ctx, d.M);
        for (int t = 0; t < mpow; ++t) num = nc_mul(num, mm);
        out.numerator = num;
        out.denom_power = 0;
    } else {
        out.numerator = num;
        out.denom_power = -mpow;
    }
    return out;
}

bool localized_equal(const QContext& ctx, const LocalizedElement& a, const LocalizedElement& b) {
    if (a.alpha != b.alpha) return false;
    NCPoly mm = quantum_minor(ctx, consecutive_data(ctx, a.alpha).M);
    NCPoly lhs = a.numerator;
    for (int t = 0; t < b.denom_power; ++t) lhs = nc_mul(lhs, mm);
    NCPoly rhs = b.numerator;
    for (int t = 0; t < a.denom_power; ++t) rhs = nc_mul(rhs, mm);
    return lhs == rhs;
}

LaurentScalar composite_cycle_scalar(const QContext& ctx, int alpha, const IndexSet& I) {
    auto [K, L] = dehom_minor_sets(ctx, alpha, I);

    // Z^n content of [K|L]_alpha, summed from the generator contents.
    std::vector<int> minor_content(ctx.n, 0);
    const ConsecutiveData d = consecutive_data(ctx, alpha);
    for (size_t t = 0; t < K.size(); ++t) {
        minor_content[d.z[L[t] - 1] - 1] += 1;
        minor_content[d.w[K[t] - 1] - 1] -= 1;
    }
    const LaurentScalar mu = eval_cocycle(CocycleKind::Gamma, minor_content, y_content(ctx, alpha));

    if (!theta_alpha_check(ctx, alpha))
        throw std::logic_error("composite_cycle_scalar: twisted tables do not match A_{alpha+1}");

    // After relabeling into A_{alpha+1}, the same (K, L) describes the minor
    // attached to I+1; rho_{alpha+1} then lands on a single maximal minor.
    LocalizedElement res = rho_alpha(ctx, alpha + 1, K, L, 1);
    res.numerator *= mu.unit_inverse();

    const NCPoly expected = quantum_minor(ctx, shift_set(I, 1, ctx.n));
    if (res.denom_power != 0 || res.numerator.terms().size() != expected.terms().size())
        throw std::logic_error("composite_cycle_scalar: composite not proportional to [I+1]");
    std::optional<LaurentScalar> ratio;
    auto ita = res.numerator.terms().begin();
    auto itb = expected.terms().begin();
    for (; ita != res.numerator.terms().end(); ++ita, ++itb) {
        if (ita->first != itb->first)
            throw std::logic_error("composite_cycle_scalar: composite not proportional to [I+1]");
        LaurentScalar r = LaurentScalar::div_exact(ita->second, itb->second);
        if (!ratio)
            ratio = r;
        else if (!(*ratio == r))
            throw std::logic_error("composite_cycle_scalar: composite not proportional to [I+1]");
    }
    return *ratio;
}

LaurentScalar lambda_alpha_case(const QContext& ctx, int alpha, const IndexSet& I) {
    const int at = tilde(alpha, ctx.n);
    const bool has_n = !I.empty() && I.back() == ctx.n;
    if (at <= ctx.n - ctx.m && has_n) return ctx.scalars().q_pow(-2);
    if (at > ctx.n - ctx.m && !has_n)
        return LaurentScalar::monomial(1, 2 * ctx.m - 2);  // q^2 / p
    return LaurentScalar(1);
}

}  // namespace qgr
