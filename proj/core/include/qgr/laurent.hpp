#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace qgr {

/// Exact Laurent polynomial in a single variable u, with arbitrary-precision
/// integer coefficients. All scalars of the toolkit live in this ring: a
/// context with m rows names q := u^m and p := u^2, so that p^m = q^2 holds
/// identically.
///
/// Invariant: no stored coefficient is zero; the zero value has an empty map.
class LaurentScalar {
public:
    LaurentScalar() = default;
    LaurentScalar(long value) { assign(mpz_class(value), 0); }
    LaurentScalar(const mpz_class& value) { assign(value, 0); }

    static LaurentScalar monomial(const mpz_class& coeff, int exp) {
        LaurentScalar s;
        s.assign(coeff, exp);
        return s;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return coeffs_.size() == 1; }

    /// Smallest/largest exponent with nonzero coefficient. Throws on zero.
    int min_exp() const;
    int max_exp() const;

    const std::map<int, mpz_class>& terms() const { return coeffs_; }

    LaurentScalar operator-() const;
    LaurentScalar& operator+=(const LaurentScalar& rhs);
    LaurentScalar& operator-=(const LaurentScalar& rhs);
    LaurentScalar& operator*=(const LaurentScalar& rhs);

    /// Multiply by u^d.
    LaurentScalar shifted(int d) const;

    /// k-th power; negative k is only defined for unit monomials.
    LaurentScalar pow(int k) const;

    /// Inverse of a unit monomial (coefficient +-1). Throws otherwise.
    LaurentScalar unit_inverse() const;

    /// gcd of the integer coefficients (0 for the zero value).
    mpz_class content() const;

    /// Specialization u := 1 (sum of coefficients).
    mpz_class eval_one() const;

    /// Full specialization at a nonzero rational point.
    mpq_class eval_at(const mpq_class& x) const;

    /// Exact quotient a/b in Z[u^{+-1}]; throws std::logic_error if the
    /// division is not exact.
    static LaurentScalar div_exact(const LaurentScalar& a, const LaurentScalar& b);

    /// Terms in ascending exponent order, "u" omitted at exponent 0,
    /// e.g. "-1*u^-2 + 3 + 2*u^4".
    std::string to_string() const;

    bool operator==(const LaurentScalar&) const = default;

private:
    std::map<int, mpz_class> coeffs_;

    void assign(const mpz_class& c, int e) {
        coeffs_.clear();
        if (c != 0) coeffs_[e] = c;
    }
};

LaurentScalar operator+(LaurentScalar lhs, const LaurentScalar& rhs);
LaurentScalar operator-(LaurentScalar lhs, const LaurentScalar& rhs);
LaurentScalar operator*(const LaurentScalar& lhs, const LaurentScalar& rhs);

/// Row/column extent of the ambient algebra; fixes the named monomials
/// q = u^m and p = u^2.
struct ScalarContext {
    int m = 2;
    int n = 4;

    LaurentScalar q() const { return LaurentScalar::monomial(1, m); }
    LaurentScalar p() const { return LaurentScalar::monomial(1, 2); }
    LaurentScalar q_pow(long r) const { return LaurentScalar::monomial(1, static_cast<int>(r) * m); }
    LaurentScalar p_pow(long r) const { return LaurentScalar::monomial(1, static_cast<int>(r) * 2); }

    bool valid() const { return 1 <= m && m < n; }
};

/// r such that b = q^r * a with q = u^m, if such an integer exists.
/// Throws std::invalid_argument when a = 0.
std::optional<long> monomial_ratio(const LaurentScalar& a, const LaurentScalar& b, int m);

}  // namespace qgr
