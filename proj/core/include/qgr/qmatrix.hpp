#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgr/laurent.hpp"

namespace qgr {

/// Ambient quantum matrix algebra with generators X_{ij},
/// 1 <= i <= m, 1 <= j <= n.
struct QContext {
    int m = 2;
    int n = 4;

    bool operator==(const QContext&) const = default;
    ScalarContext scalars() const { return {m, n}; }
    int generator_count() const { return m * n; }
};

/// A free word in the generators, stored as one byte per generator in
/// row-major code (i-1)*n + (j-1). Byte order is the PBW order.
using Word = std::string;

struct GeneratorIndex {
    int row = 1;
    int col = 1;
};

int gen_code(const QContext& ctx, int i, int j);
GeneratorIndex gen_decode(const QContext& ctx, unsigned char code);
Word make_word(const QContext& ctx, std::initializer_list<GeneratorIndex> gens);

/// Element of O_q(M_{m,n}) in PBW normal form: every stored word is
/// nondecreasing in the row-major generator order and no coefficient is zero.
class NCPoly {
public:
    NCPoly() = default;
    explicit NCPoly(QContext ctx) : ctx_(ctx) {}

    static NCPoly unit(QContext ctx) {
        NCPoly p(ctx);
        p.add_term(Word{}, LaurentScalar(1));
        return p;
    }

    QContext context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, LaurentScalar>& terms() const { return terms_; }

    void add_term(const Word& w, const LaurentScalar& c);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& rhs);
    NCPoly& operator-=(const NCPoly& rhs);
    NCPoly& operator*=(const LaurentScalar& c);

    bool operator==(const NCPoly&) const = default;

private:
    QContext ctx_;
    std::map<Word, LaurentScalar> terms_;
};

NCPoly operator+(NCPoly lhs, const NCPoly& rhs);
NCPoly operator-(NCPoly lhs, const NCPoly& rhs);
NCPoly operator*(NCPoly lhs, const LaurentScalar& c);
NCPoly operator*(const LaurentScalar& c, NCPoly rhs);

/// PBW normal form of coeff * w. Idempotent on already-normal input.
/// Throws std::invalid_argument on out-of-bounds generator codes.
NCPoly normal_form(const QContext& ctx, const Word& w, const LaurentScalar& coeff = LaurentScalar(1));

/// Product in normal form; throws on context mismatch.
NCPoly nc_mul(const NCPoly& a, const NCPoly& b);

/// r such that nc_mul(b, a) = q^r * nc_mul(a, b), if it exists.
/// Throws std::invalid_argument on zero input.
std::optional<long> quasi_commutation_exponent(const NCPoly& a, const NCPoly& b);

/// Column content of a word: entry j counts occurrences of column j+1.
std::vector<int> column_content(const QContext& ctx, const Word& w);

/// True when every monomial is column-homogeneous of the same content;
/// outputs that content.
bool homogeneous_content(const NCPoly& p, std::vector<int>& content);

// Text grammar: words as "X[1,2]X[2,1]"; polynomials as "coeff * word" terms
// sorted by word, multi-term coefficients parenthesized.
std::string word_to_string(const QContext& ctx, const Word& w);
Word parse_word(const QContext& ctx, const std::string& text);
std::string to_string(const NCPoly& p);

}  // namespace qgr
