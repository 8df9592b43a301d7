#pragma once

#include <string>

#include "qph/laurent.hpp"

namespace qph {

/// Exact fraction of Laurent polynomials: the field of fractions of
/// Q[q, q^-1], the scalar domain in which "q generic" computations happen
/// (homotopy coefficients, kernels of q-matrices).
///
/// Canonical form: zero is 0/1; otherwise the denominator is an ordinary
/// polynomial in q with nonzero constant term and leading coefficient 1,
/// coprime to the numerator's polynomial part. Equality is componentwise.
class QFrac {
   public:
    QFrac() : num_(), den_(LaurentPoly(1)) {}
    QFrac(const LaurentPoly& p) : num_(p), den_(LaurentPoly(1)) {}  // NOLINT
    QFrac(long c) : QFrac(LaurentPoly(c)) {}                        // NOLINT
    QFrac(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    QFrac inverse() const;  // throws std::domain_error on zero
    QFrac operator-() const;
    friend QFrac operator+(const QFrac& a, const QFrac& b);
    friend QFrac operator-(const QFrac& a, const QFrac& b);
    friend QFrac operator*(const QFrac& a, const QFrac& b);
    friend QFrac operator/(const QFrac& a, const QFrac& b);
    QFrac& operator+=(const QFrac& o) { return *this = *this + o; }
    QFrac& operator-=(const QFrac& o) { return *this = *this - o; }
    QFrac& operator*=(const QFrac& o) { return *this = *this * o; }
    bool operator==(const QFrac&) const = default;

    std::string str() const;

   private:
    LaurentPoly num_, den_;
};

inline bool is_zero(const QFrac& f) { return f.is_zero(); }
inline std::string to_string(const QFrac& f) { return f.str(); }

/// gcd of the ordinary-polynomial parts, monic; used by QFrac normalization
/// and exposed for tests.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qph
