#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace cliff {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// An element of the cyclotomic field Q(zeta_m), stored as a rational
// polynomial in zeta_m reduced modulo the m-th cyclotomic polynomial.
// Values are canonical: always reduced mod Phi_m and stored at the smallest
// conductor dividing the working conductor that contains the value, so
// equality is plain member comparison. No floating point anywhere.
class Cyclotomic {
public:
    Cyclotomic() : cond_(1), coef_{Rational(0)} {}
    Cyclotomic(const Rational& q) : cond_(1), coef_{q} {}  // NOLINT: implicit by design
    Cyclotomic(long v) : cond_(1), coef_{Rational(v)} {}   // NOLINT

    // zeta_m^k, canonically reduced.
    static Cyclotomic root_of_unity(unsigned m, long k);

    // Builds from a raw polynomial sum_i poly[i] * zeta_m^i of any length.
    static Cyclotomic from_poly(unsigned m, std::vector<Rational> poly);

    unsigned conductor() const { return cond_; }
    const std::vector<Rational>& coefficients() const { return coef_; }

    bool is_zero() const { return cond_ == 1 && coef_[0] == 0; }
    std::optional<Rational> as_rational() const;
    // The integer value if this is a rational integer, otherwise empty.
    std::optional<Int> as_rational_integer() const;
    // True when every coefficient has denominator 1 (algebraic integer in
    // the power basis; sufficient for character values).
    bool has_integral_coefficients() const;

    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
    Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
    Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

    Cyclotomic scaled(const Rational& r) const;

    // Galois image under zeta_m -> zeta_m^k, gcd(k, m) = 1.
    Cyclotomic galois(long k) const;
    // Complex conjugation, zeta_m -> zeta_m^(m-1).
    Cyclotomic conjugate() const;
    // Multiplicative inverse; throws on zero.
    Cyclotomic inverse() const;

    bool operator==(const Cyclotomic& rhs) const = default;

    // Deterministic rendering, e.g. "1/2*z(8)^1 + -1/2*z(8)^3", terms by
    // ascending exponent.
    std::string to_string() const;

private:
    Cyclotomic(unsigned cond, std::vector<Rational> coef)
        : cond_(cond), coef_(std::move(coef)) {}
    void normalize();

    unsigned cond_;
    std::vector<Rational> coef_;  // size phi(cond_)
};

// The m-th cyclotomic polynomial as integer coefficients, ascending degree.
const std::vector<Int>& cyclotomic_polynomial(unsigned m);

unsigned euler_phi(unsigned m);

std::string rational_to_string(const Rational& q);

}  // namespace cliff
