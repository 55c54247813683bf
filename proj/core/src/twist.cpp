#include "qgr/twist.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qgr {

LaurentScalar eval_cocycle(CocycleKind kind, const std::vector<int>& s, const std::vector<int>& t) {
    if (s.size() != t.size() || s.empty()) throw std::invalid_argument("eval_cocycle: length mismatch");
    const size_t n = s.size();
    long e = 0;
    if (kind == CocycleKind::Gamma) {
        long sum = 0;
        for (size_t j = 0; j + 1 < n; ++j) sum += t[j];
        e = static_cast<long>(s[n - 1]) * sum;
    } else {
        long sum = 0;
        for (size_t j = 1; j < n; ++j) sum += t[j];
        e = -static_cast<long>(s[0]) * sum;
    }
    return LaurentScalar::monomial(1, static_cast<int>(2 * e));  // p^e
}

bool cocycle_condition_check(CocycleKind kind, const std::vector<int>& s, const std::vector<int>& t,
                             const std::vector<int>& v) {
    if (s.size() != t.size() || t.size() != v.size()) return false;
    auto add = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out(a.size());
        for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
        return out;
    };
    LaurentScalar lhs = eval_cocycle(kind, s, add(t, v)) * eval_cocycle(kind, t, v);
    LaurentScalar rhs = eval_cocycle(kind, s, t) * eval_cocycle(kind, add(s, t), v);
    return lhs == rhs;
}

std::vector<int> rotate_content(const std::vector<int>& v, int a) {
    const int n = static_cast<int>(v.size());
    std::vector<int> out(n);
    for (int j = 0; j < n; ++j) out[((j + a) % n + n) % n] = v[j];
    return out;
}

std::vector<int> level_content(TwistLevel level, const IndexSet& I, int n) {
    // tau tower shifts the set back by the level, the T tower shifts it
    // forward by |level|; both are shift_set(I, -level).
    return content_vec(shift_set(I, -level, n), n);
}

LaurentScalar tower_scalar(TwistLevel level, const std::vector<int>& s, const std::vector<int>& t) {
    LaurentScalar acc(1);
    if (level == 0) return acc;
    if (level < 0) {
        for (int k = 0; k < -level; ++k)
            acc *= eval_cocycle(CocycleKind::Gamma, rotate_content(s, k), rotate_content(t, k));
    } else {
        for (int k = 0; k < level; ++k)
            acc *= eval_cocycle(CocycleKind::gamma, rotate_content(s, -k), rotate_content(t, -k));
    }
    return acc;
}

TwistedElement twisted_from_poly(TwistLevel level, const NCPoly& p) {
    TwistedElement e;
    e.level = level;
    std::map<std::vector<int>, NCPoly> split;
    for (const auto& [w, c] : p.terms()) {
        auto content = column_content(p.context(), w);
        auto it = split.find(content);
        if (it == split.end()) it = split.emplace(content, NCPoly(p.context())).first;
        it->second.add_term(w, c);
    }
    for (auto& [content, value] : split) e.parts.push_back({content, std::move(value)});
    return e;
}

TwistedElement twisted_from_minor(TwistLevel level, const QContext& ctx, const IndexSet& I) {
    return twisted_from_poly(level, quantum_minor(ctx, I));
}

bool twisted_equal(const TwistedElement& a, const TwistedElement& b) {
    if (a.level != b.level || a.parts.size() != b.parts.size()) return false;
    for (size_t i = 0; i < a.parts.size(); ++i) {
        if (a.parts[i].content != b.parts[i].content) return false;
        if (!(a.parts[i].value == b.parts[i].value)) return false;
    }
    return true;
}

TwistedElement twisted_scale(const TwistedElement& a, const LaurentScalar& c) {
    TwistedElement out;
    out.level = a.level;
    if (c.is_zero()) return out;
    for (const auto& part : a.parts) out.parts.push_back({part.content, part.value * c});
    return out;
}

TwistedElement twisted_product(const TwistedElement& a, const TwistedElement& b) {
    if (a.level != b.level) throw std::invalid_argument("twisted_product: level mismatch");
    std::map<std::vector<int>, NCPoly> acc;
    for (const auto& pa : a.parts) {
        for (const auto& pb : b.parts) {
            LaurentScalar scalar = tower_scalar(a.level, pa.content, pb.content);
            NCPoly val = nc_mul(pa.value, pb.value) * scalar;
            if (val.is_zero()) continue;
            std::vector<int> content(pa.content.size());
            for (size_t i = 0; i < content.size(); ++i) content[i] = pa.content[i] + pb.content[i];
            auto it = acc.find(content);
            if (it == acc.end())
                acc.emplace(content, std::move(val));
            else
                it->second += val;
        }
    }
    TwistedElement out;
    out.level = a.level;
    for (auto& [content, value] : acc)
        if (!value.is_zero()) out.parts.push_back({content, std::move(value)});
    return out;
}

bool gamma_Gamma_identity(const IndexSet& I, const IndexSet& J, int n) {
    LaurentScalar g = eval_cocycle(CocycleKind::gamma, content_vec(shift_set(I, 1, n), n),
                                   content_vec(shift_set(J, 1, n), n));
    LaurentScalar G = eval_cocycle(CocycleKind::Gamma, content_vec(I, n), content_vec(J, n));
    return (g * G).is_one();
}

}  // namespace qgr
