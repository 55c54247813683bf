#include "qgr/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qgr {

bool LaurentScalar::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

int LaurentScalar::min_exp() const {
    if (is_zero()) throw std::invalid_argument("min_exp of zero");
    return coeffs_.begin()->first;
}

int LaurentScalar::max_exp() const {
    if (is_zero()) throw std::invalid_argument("max_exp of zero");
    return coeffs_.rbegin()->first;
}

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
    return out;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& rhs) {
    return *this += -rhs;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentScalar LaurentScalar::shifted(int d) const {
    LaurentScalar out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + d, c);
    return out;
}

LaurentScalar LaurentScalar::pow(int k) const {
    if (k == 0) return LaurentScalar(1);
    if (k < 0) return unit_inverse().pow(-k);
    if (is_monomial()) {
        mpz_class c;
        mpz_pow_ui(c.get_mpz_t(), coeffs_.begin()->second.get_mpz_t(), static_cast<unsigned long>(k));
        return monomial(c, coeffs_.begin()->first * k);
    }
    LaurentScalar out(1);
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
}

LaurentScalar LaurentScalar::unit_inverse() const {
    if (!is_monomial()) throw std::logic_error("unit_inverse: not a monomial");
    const auto& [e, c] = *coeffs_.begin();
    if (c != 1 && c != -1) throw std::logic_error("unit_inverse: coefficient not a unit");
    return monomial(c, -e);
}

mpz_class LaurentScalar::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

mpz_class LaurentScalar::eval_one() const {
    mpz_class s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

mpq_class LaurentScalar::eval_at(const mpq_class& x) const {
    if (x == 0) throw std::invalid_argument("eval_at: zero point");
    mpq_class s = 0;
    for (const auto& [e, c] : coeffs_) {
        mpq_class t(c);
        mpz_class num = x.get_num(), den = x.get_den();
        unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_class pn, pd;
        mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), a);
        mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), a);
        mpq_class xp(pn, pd);
        xp.canonicalize();
        if (e < 0) xp = 1 / xp;
        s += t * xp;
    }
    return s;
}

LaurentScalar LaurentScalar::div_exact(const LaurentScalar& a, const LaurentScalar& b) {
    if (b.is_zero()) throw std::invalid_argument("div_exact: zero divisor");
    if (a.is_zero()) return {};
    const int shift = a.min_exp() - b.min_exp();
    // Long division from the top degree; exactness guarantees each step's
    // leading coefficient is divisible.
    LaurentScalar rem = a.shifted(-a.min_exp());
    LaurentScalar bb = b.shifted(-b.min_exp());
    LaurentScalar quot;
    const int bdeg = bb.max_exp();
    const mpz_class& blead = bb.terms().rbegin()->second;
    while (!rem.is_zero()) {
        int rdeg = rem.max_exp();
        if (rdeg < bdeg) throw std::logic_error("div_exact: inexact division");
        const mpz_class& rlead = rem.terms().rbegin()->second;
        if (!mpz_divisible_p(rlead.get_mpz_t(), blead.get_mpz_t()))
            throw std::logic_error("div_exact: inexact division");
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), rlead.get_mpz_t(), blead.get_mpz_t());
        LaurentScalar term = monomial(c, rdeg - bdeg);
        quot += term;
        rem -= term * bb;
    }
    return quot.shifted(shift);
}

std::string LaurentScalar::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << c.get_str();
        } else {
            os << c.get_str() << "*u^" << e;
        }
    }
    return os.str();
}

LaurentScalar operator+(LaurentScalar lhs, const LaurentScalar& rhs) {
    lhs += rhs;
    return lhs;
}

LaurentScalar operator-(LaurentScalar lhs, const LaurentScalar& rhs) {
    lhs -= rhs;
    return lhs;
}

LaurentScalar operator*(const LaurentScalar& lhs, const LaurentScalar& rhs) {
    LaurentScalar out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    for (const auto& [ea, ca] : lhs.terms())
        for (const auto& [eb, cb] : rhs.terms())
            out += LaurentScalar::monomial(ca * cb, ea + eb);
    return out;
}

std::optional<long> monomial_ratio(const LaurentScalar& a, const LaurentScalar& b, int m) {
    if (a.is_zero()) throw std::invalid_argument("monomial_ratio: zero base");
    if (b.is_zero()) return std::nullopt;
    const int d = b.min_exp() - a.min_exp();
    if (d % m != 0) return std::nullopt;
    if (!(b == a.shifted(d))) return std::nullopt;
    return d / m;
}

}  // namespace qgr
