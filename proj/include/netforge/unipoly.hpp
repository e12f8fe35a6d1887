// Dense univariate polynomials over Q, gcd and root machinery, and
// arithmetic in Q[x]/(m(x)) for realization certificates.
#pragma once

#include <string>
#include <vector>

#include "netforge/rational.hpp"

namespace netforge::algebra {

class UniPoly {
public:
    UniPoly() = default;  // zero polynomial
    // ascending coefficients; trailing zeros are stripped
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly variable();  // x

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& leading() const;
    Rational coeff(int i) const;  // 0 beyond the stored range
    const std::vector<Rational>& coeffs() const { return c_; }

    UniPoly operator+(const UniPoly&) const;
    UniPoly operator-(const UniPoly&) const;
    UniPoly operator*(const UniPoly&) const;
    UniPoly operator-() const;
    UniPoly scaled(const Rational&) const;
    bool operator==(const UniPoly&) const = default;

    // polynomial division; the divisor must be nonzero
    struct DivMod;
    DivMod divmod(const UniPoly& divisor) const;

    UniPoly monic() const;
    Rational evaluate(const Rational& x) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void strip();
    std::vector<Rational> c_;  // ascending, c_.back() != 0
};

struct UniPoly::DivMod {
    UniPoly quotient, remainder;
};

// Monic gcd over Q; gcd = 1 certifies no common root in any extension.
// Throws if both inputs are zero.
UniPoly uni_gcd(const UniPoly& p, const UniPoly& q);

// Bezout witnesses: g = s*p + t*q with g the monic gcd.
struct BezoutTriple {
    UniPoly g, s, t;
};
BezoutTriple extended_gcd(const UniPoly& p, const UniPoly& q);

// All rational roots, ascending, each listed once.
std::vector<Rational> rational_roots(const UniPoly& p);

// Removes every rational linear factor; returns the remaining cofactor
// (monic) and the roots removed, with multiplicity collapsed.
struct RationalRootSplit {
    std::vector<Rational> roots;
    UniPoly cofactor;
};
RationalRootSplit split_rational_roots(const UniPoly& p);

// Irreducibility over Q, decided for degree <= 3 only (rational-root
// test); larger degrees are rejected.
bool is_irreducible(const UniPoly& m);

// Element of Q[x]/(m(x)) with m monic irreducible. A degree-1 modulus
// models Q itself.
class AlgebraicElement {
public:
    AlgebraicElement(UniPoly value, UniPoly modulus);
    static AlgebraicElement from_rational(const Rational& r, const UniPoly& modulus);
    static AlgebraicElement generator(const UniPoly& modulus);  // the class of x

    const UniPoly& value() const { return value_; }
    const UniPoly& modulus() const { return modulus_; }
    bool is_zero() const { return value_.is_zero(); }
    bool is_rational(Rational* out = nullptr) const;

    AlgebraicElement operator+(const AlgebraicElement&) const;
    AlgebraicElement operator-(const AlgebraicElement&) const;
    AlgebraicElement operator*(const AlgebraicElement&) const;
    AlgebraicElement operator-() const;
    AlgebraicElement inverse() const;  // throws on zero
    AlgebraicElement operator/(const AlgebraicElement&) const;
    bool operator==(const AlgebraicElement&) const = default;

    std::string to_string(const std::string& symbol = "w") const;

private:
    UniPoly value_;    // degree < deg(modulus)
    UniPoly modulus_;  // monic irreducible
};

inline bool is_zero(const AlgebraicElement& a) { return a.is_zero(); }

}  // namespace netforge::algebra
