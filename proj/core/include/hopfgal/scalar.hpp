#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfgal {

using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Monomial in the phase parameters, exponents may be negative. Zero exponents
// are never stored.
using PhaseMono = std::map<std::string, int>;

PhaseMono mono_mul(const PhaseMono& a, const PhaseMono& b);
PhaseMono mono_inv(const PhaseMono& a);

// Fixed total order on monomials: total degree, then lexicographic on the
// (name, exponent) sequence. Used for leading-term conventions everywhere.
bool mono_less(const PhaseMono& a, const PhaseMono& b);

struct MonoLess {
    bool operator()(const PhaseMono& a, const PhaseMono& b) const { return mono_less(a, b); }
};

// Laurent polynomial over Q in the phase parameters.
class LaurentPoly {
  public:
    std::map<PhaseMono, Rational, MonoLess> terms;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c);
    static LaurentPoly mono(const PhaseMono& m, const Rational& c = 1);

    bool is_zero() const { return terms.empty(); }
    void add_term(const PhaseMono& m, const Rational& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return terms == o.terms; }

    // Substitute every parameter exponent q -> q^-1.
    LaurentPoly star() const;

    std::string to_string() const;
};

// Exact coefficient field element: reduced fraction of Laurent polynomials.
// Canonical form: both parts share no polynomial gcd, the denominator is an
// ordinary polynomial (no negative exponents, not divisible by any parameter)
// with leading coefficient 1. Equality is representation equality.
class Scalar {
  public:
    Scalar() : num_(), den_(LaurentPoly(Rational(1))) {}
    Scalar(long n) : Scalar(Rational(n)) {}
    Scalar(int n) : Scalar(Rational(n)) {}
    explicit Scalar(const Rational& c) : num_(LaurentPoly(c)), den_(LaurentPoly(Rational(1))) {}
    explicit Scalar(const LaurentPoly& p) : num_(p), den_(LaurentPoly(Rational(1))) {}
    Scalar(const LaurentPoly& n, const LaurentPoly& d);

    static Scalar param(const std::string& name, int exp = 1);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;   // throws Error on zero
    Scalar star() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Cross-multiplication equality, independent of the reduction path.
    bool equals_cross(const Scalar& o) const;

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    std::string to_string() const;

  private:
    LaurentPoly num_, den_;
    void canonicalize();
};

inline Scalar operator*(const Rational& c, const Scalar& s) { return Scalar(c) * s; }

// gcd of ordinary (non-negative exponent) polynomials, monic. Exposed for the
// property tests.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace hopfgal
