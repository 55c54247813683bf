#include "qgr/qmatrix.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qgr {

int gen_code(const QContext& ctx, int i, int j) {
    if (i < 1 || i > ctx.m || j < 1 || j > ctx.n)
        throw std::invalid_argument("generator index out of bounds");
    return (i - 1) * ctx.n + (j - 1);
}

GeneratorIndex gen_decode(const QContext& ctx, unsigned char code) {
    if (code >= ctx.generator_count()) throw std::invalid_argument("generator code out of bounds");
    return {code / ctx.n + 1, code % ctx.n + 1};
}

Word make_word(const QContext& ctx, std::initializer_list<GeneratorIndex> gens) {
    Word w;
    for (const auto& g : gens) w.push_back(static_cast<char>(gen_code(ctx, g.row, g.col)));
    return w;
}

void NCPoly::add_term(const Word& w, const LaurentScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly out(ctx_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& rhs) {
    if (!(ctx_ == rhs.ctx_) && !terms_.empty() && !rhs.terms_.empty())
        throw std::invalid_argument("NCPoly context mismatch");
    if (terms_.empty()) ctx_ = rhs.ctx_;
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs) {
    return *this += -rhs;
}

NCPoly& NCPoly::operator*=(const LaurentScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

NCPoly operator+(NCPoly lhs, const NCPoly& rhs) {
    lhs += rhs;
    return lhs;
}

NCPoly operator-(NCPoly lhs, const NCPoly& rhs) {
    lhs -= rhs;
    return lhs;
}

NCPoly operator*(NCPoly lhs, const LaurentScalar& c) {
    lhs *= c;
    return lhs;
}

NCPoly operator*(const LaurentScalar& c, NCPoly rhs) {
    rhs *= c;
    return rhs;
}

namespace {

// Rewriting of a descending adjacent pair a*g (a > g in row-major order):
//   same row / same column:  a g -> q^{-1} g a
//   antidiagonal:            a g -> g a
//   diagonal:                a g -> g a - (q - q^{-1}) b c   (b < c, normal)
struct PairRewrite {
    LaurentScalar swap_coeff;
    bool has_extra = false;
    unsigned char extra_b = 0, extra_c = 0;
};

PairRewrite rewrite_pair(const QContext& ctx, unsigned char a, unsigned char g) {
    const GeneratorIndex A = gen_decode(ctx, a);  // (k, l)
    const GeneratorIndex G = gen_decode(ctx, g);  // (i, j)
    PairRewrite pr;
    if (A.row == G.row || A.col == G.col) {
        pr.swap_coeff = LaurentScalar::monomial(1, -ctx.m);  // q^{-1}
        return pr;
    }
    pr.swap_coeff = LaurentScalar(1);
    if (A.col < G.col) return pr;  // antidiagonal pair commutes
    // diagonal: rows i < k, columns j < l
    pr.has_extra = true;
    pr.extra_b = static_cast<unsigned char>(gen_code(ctx, G.row, A.col));
    pr.extra_c = static_cast<unsigned char>(gen_code(ctx, A.row, G.col));
    return pr;
}

struct Engine {
    QContext ctx;
    std::unordered_map<Word, NCPoly>* cache;

    NCPoly mul_word_gen(const Word& w, unsigned char g);

    NCPoly mul_poly_gen(const NCPoly& p, unsigned char g) {
        NCPoly out(ctx);
        for (const auto& [w, c] : p.terms()) {
            NCPoly t = mul_word_gen(w, g);
            t *= c;
            out += t;
        }
        return out;
    }
};

NCPoly Engine::mul_word_gen(const Word& w, unsigned char g) {
    if (w.empty() || static_cast<unsigned char>(w.back()) <= g) {
        NCPoly out(ctx);
        Word nw = w;
        nw.push_back(static_cast<char>(g));
        out.add_term(nw, LaurentScalar(1));
        return out;
    }
    Word key = w;
    key.push_back(static_cast<char>(g));
    if (auto it = cache->find(key); it != cache->end()) return it->second;

    const unsigned char a = static_cast<unsigned char>(w.back());
    const Word prefix = w.substr(0, w.size() - 1);
    const PairRewrite pr = rewrite_pair(ctx, a, g);

    NCPoly res = mul_poly_gen(mul_word_gen(prefix, g), a);
    res *= pr.swap_coeff;
    if (pr.has_extra) {
        // -(q - q^{-1}) * prefix b c
        NCPoly extra = mul_poly_gen(mul_word_gen(prefix, pr.extra_b), pr.extra_c);
        extra *= LaurentScalar::monomial(-1, ctx.m) + LaurentScalar::monomial(1, -ctx.m);
        res += extra;
    }
    cache->emplace(std::move(key), res);
    return res;
}

std::unordered_map<Word, NCPoly>& cache_for(const QContext& ctx) {
    // Task-local memo of (normal word, generator) reductions, one per context.
    thread_local std::map<std::pair<int, int>, std::unordered_map<Word, NCPoly>> caches;
    return caches[{ctx.m, ctx.n}];
}

}  // namespace

NCPoly normal_form(const QContext& ctx, const Word& w, const LaurentScalar& coeff) {
    for (unsigned char c : w)
        if (c >= ctx.generator_count()) throw std::invalid_argument("normal_form: code out of bounds");
    Engine eng{ctx, &cache_for(ctx)};
    NCPoly p = NCPoly::unit(ctx);
    for (unsigned char g : w) p = eng.mul_poly_gen(p, g);
    p *= coeff;
    return p;
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b) {
    if (!(a.context() == b.context())) throw std::invalid_argument("nc_mul: context mismatch");
    const QContext ctx = a.context();
    Engine eng{ctx, &cache_for(ctx)};
    NCPoly out(ctx);
    for (const auto& [wb, cb] : b.terms()) {
        NCPoly partial(ctx);
        for (const auto& [wa, ca] : a.terms()) partial.add_term(wa, ca);
        for (unsigned char g : wb) partial = eng.mul_poly_gen(partial, g);
        partial *= cb;
        out += partial;
    }
    return out;
}

std::optional<long> quasi_commutation_exponent(const NCPoly& a, const NCPoly& b) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("quasi_commutation_exponent: zero input");
    const NCPoly ab = nc_mul(a, b);
    const NCPoly ba = nc_mul(b, a);
    if (ab.terms().size() != ba.terms().size()) return std::nullopt;
    const int m = a.context().m;
    std::optional<long> r;
    for (auto ita = ab.terms().begin(), itb = ba.terms().begin(); ita != ab.terms().end();
         ++ita, ++itb) {
        if (ita->first != itb->first) return std::nullopt;
        auto ratio = monomial_ratio(ita->second, itb->second, m);
        if (!ratio) return std::nullopt;
        if (!r)
            r = ratio;
        else if (*r != *ratio)
            return std::nullopt;
    }
    return r;
}

std::vector<int> column_content(const QContext& ctx, const Word& w) {
    std::vector<int> content(ctx.n, 0);
    for (unsigned char c : w) ++content[gen_decode(ctx, c).col - 1];
    return content;
}

bool homogeneous_content(const NCPoly& p, std::vector<int>& content) {
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        std::vector<int> cc = column_content(p.context(), w);
        if (first) {
            content = cc;
            first = false;
        } else if (cc != content) {
            return false;
        }
    }
    return !first;
}

std::string word_to_string(const QContext& ctx, const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (unsigned char c : w) {
        GeneratorIndex g = gen_decode(ctx, c);
        os << "X[" << g.row << "," << g.col << "]";
    }
    return os.str();
}

Word parse_word(const QContext& ctx, const std::string& text) {
    Word w;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i < text.size() && text[i] == '1' && i + 1 == text.size()) return w;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != 'X') throw std::invalid_argument("parse_word: expected 'X'");
        ++i;
        skip_ws();
        if (i >= text.size() || text[i] != '[') throw std::invalid_argument("parse_word: expected '['");
        ++i;
        size_t comma = text.find(',', i);
        size_t close = text.find(']', i);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw std::invalid_argument("parse_word: malformed index pair");
        int row = std::stoi(text.substr(i, comma - i));
        int col = std::stoi(text.substr(comma + 1, close - comma - 1));
        w.push_back(static_cast<char>(gen_code(ctx, row, col)));
        i = close + 1;
        skip_ws();
    }
    return w;
}

std::string to_string(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        if (c.terms().size() > 1)
            os << "(" << c.to_string() << ")";
        else
            os << c.to_string();
        os << " * " << word_to_string(p.context(), w);
    }
    return os.str();
}

}  // namespace qgr
