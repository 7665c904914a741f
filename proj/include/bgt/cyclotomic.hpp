#pragma once

// Exact arithmetic in the cyclotomic field Q(q), q a primitive n-th root of
// unity. Elements are stored in the power basis {1, q, ..., q^(phi(n)-1)}
// reduced modulo the n-th cyclotomic polynomial.

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace bgt {

using Rational = mpq_class;

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int n);

/// Euler's totient, i.e. the degree of the n-th cyclotomic polynomial.
int euler_phi(int n);

struct ScalarParseError : std::runtime_error {
    ScalarParseError(std::size_t offset, const std::string& what)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

/// An element of Q(q).
///
/// A scalar carries the order n of its root of unity. Pure rationals are
/// created with order 0 and adopt the order of whatever they are combined
/// with; combining two scalars of different nonzero order throws
/// std::invalid_argument.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    Scalar(int v) : Scalar(Rational(v)) {}   // NOLINT(google-explicit-constructor)
    Scalar(const Rational& r);               // NOLINT(google-explicit-constructor)

    /// The generator q of Q(q), q a primitive n-th root of unity.
    static Scalar q(int n);
    /// q^k for any integer k (negative powers allowed).
    static Scalar q_power(int n, long k);
    /// Builds c0 + c1 q + c2 q^2 + ... and reduces it. Any length is accepted.
    static Scalar from_coefficients(int n, std::vector<Rational> coeffs);

    /// 0 for a modulus-agnostic rational.
    int order() const noexcept { return order_; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const;
    bool is_rational() const noexcept { return c_.size() <= 1; }

    /// Coordinate k in the reduced power basis (zero past the stored length).
    Rational coefficient(std::size_t k) const;
    /// All phi(n) coordinates; for order 0 the single rational coordinate.
    std::vector<Rational> coefficients() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Throws std::domain_error on zero.
    Scalar inverse() const;
    Scalar pow(long k) const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text: increasing powers of q, "0" for zero.
    std::string str() const;

private:
    int adopt(const Scalar& other);
    void reduce();
    void trim();

    int order_ = 0;
    std::vector<Rational> c_;  // trailing zeros trimmed; empty means zero
};

/// Parses the scalar literal grammar
///   scalar := term (('+'|'-') term)*
///   term   := rat | rat? 'q' ('^' uint)?
///   rat    := '-'? uint ('/' uint)?
/// Whitespace is ignored. Literals that mention q take order n.
Scalar parse_scalar(std::string_view text, int n);

std::string format_scalar(const Scalar& x);
std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace bgt
