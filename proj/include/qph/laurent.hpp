#pragma once

#include <map>
#include <string>

#include "qph/rational.hpp"

namespace qph {

/// Laurent polynomial in q with rational coefficients, canonical form:
/// no zero coefficient is ever stored, equality is coefficientwise.
class LaurentPoly {
   public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& constant) {  // NOLINT: implicit by design
        if (!qph::is_zero(constant)) c_[0] = constant;
    }
    LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT

    /// c * q^k
    static LaurentPoly term(const Rational& c, int k) {
        LaurentPoly p;
        if (!qph::is_zero(c)) p.c_[k] = c;
        return p;
    }
    static LaurentPoly q_power(int k) { return term(Rational(1), k); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }
    /// True iff the polynomial is a single term c*q^k.
    bool is_monomial() const { return c_.size() == 1; }

    const std::map<int, Rational>& coefficients() const { return c_; }
    Rational coefficient(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rational(0) : it->second;
    }
    int min_exponent() const;  // throws on zero polynomial
    int max_exponent() const;

    /// Value at q = 1, i.e. the coefficient sum.
    Rational value_at_one() const;
    /// sum_m m * c_m  (the derivative at 1 of sum c_m q^m up to lower-order terms).
    Rational weighted_exponent_sum() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p);
    bool operator==(const LaurentPoly&) const = default;

    /// Inverse of a single-term Laurent polynomial (c*q^k)^{-1} = c^{-1} q^{-k}.
    /// Throws std::domain_error when the polynomial is not a nonzero monomial.
    LaurentPoly monomial_inverse() const;

    /// Multiplies by q^k.
    LaurentPoly shifted(int k) const;

    std::string str() const;

   private:
    std::map<int, Rational> c_;
};

/// Exact quotient a / b; throws std::domain_error when b is zero or the
/// division is not exact in Q[q, q^-1].
LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b);

/// True iff P vanishes for generic q, i.e. P is the zero polynomial.
inline bool is_generically_zero(const LaurentPoly& p) { return p.is_zero(); }

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

/// lim_{q->1} P / (1 - q), defined when P(1) = 0; equals -P'(1).
/// Throws std::domain_error when P(1) != 0.
Rational semiclassical_limit(const LaurentPoly& p);

inline std::string to_string(const LaurentPoly& p) { return p.str(); }

}  // namespace qph
