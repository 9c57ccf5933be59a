#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace colorlie {

using Rational = mpq_class;

/// Element of the cyclotomic field Q(zeta_n), stored as the unique residue
/// of a polynomial in z modulo the n-th cyclotomic polynomial Phi_n.
/// coeffs().size() == phi(n) (Euler totient); order 1 degenerates to Q.
class CycScalar {
  public:
    CycScalar() : order_(1), coeffs_(1) {}
    static CycScalar zero(unsigned order);
    static CycScalar one(unsigned order);
    static CycScalar from_rational(const Rational& r, unsigned order);
    static CycScalar from_int(long v, unsigned order);
    /// The primitive root zeta_n itself (z reduced mod Phi_n).
    static CycScalar root(unsigned order);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the residue is a constant polynomial.
    bool is_rational() const;
    Rational rational_part() const { return coeffs_[0]; }

    CycScalar operator-() const;
    CycScalar operator+(const CycScalar& o) const;
    CycScalar operator-(const CycScalar& o) const;
    CycScalar operator*(const CycScalar& o) const;
    CycScalar operator/(const CycScalar& o) const;
    CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
    CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
    CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

    bool operator==(const CycScalar& o) const;
    bool operator!=(const CycScalar& o) const { return !(*this == o); }

    CycScalar inverse() const;
    CycScalar pow(long long e) const;

    /// Smallest m >= 1 with a^m = 1; search bounded by 2*n^2.
    std::optional<unsigned long> root_of_unity_order() const;

    /// Same-order constant, convenience for mixed expressions.
    CycScalar scalar(long v) const { return from_int(v, order_); }
    CycScalar scalar(const Rational& r) const { return from_rational(r, order_); }

    std::string to_string() const;

  private:
    explicit CycScalar(unsigned order);
    void reduce(std::vector<Rational> raw);

    unsigned order_;
    std::vector<Rational> coeffs_;
};

/// Parses the scalar literal grammar
///   term ::= rational | rational "*" "z" ["^" int] | "z" ["^" int]
/// with terms joined by + / - and rationals written as `int` or `int "/" posint`.
/// Throws std::invalid_argument on malformed input or on z-terms at order 1.
CycScalar parse_scalar(const std::string& text, unsigned order);

/// Euler totient.
unsigned euler_phi(unsigned n);

/// Coefficients of the n-th cyclotomic polynomial, constant term first (monic).
const std::vector<Rational>& cyclotomic_polynomial(unsigned n);

}  // namespace colorlie
