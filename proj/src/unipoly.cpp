#include "netforge/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace netforge::algebra {

std::string rational_to_string(const Rational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

Rational rational_from_string(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

void UniPoly::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::variable() { return UniPoly({Rational(0), Rational(1)}); }

const Rational& UniPoly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    std::vector<Rational> r = c_;
    for (auto& v : r) v = -v;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& v : r) v *= s;
    return UniPoly(std::move(r));
}

UniPoly::DivMod UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UniPoly rem = *this;
    std::vector<Rational> q;
    int dd = divisor.degree();
    if (rem.degree() >= dd) q.assign(rem.degree() - dd + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rational factor = rem.leading() / divisor.leading();
        q[shift] = factor;
        std::vector<Rational> sub(shift, Rational(0));
        sub.insert(sub.end(), divisor.c_.begin(), divisor.c_.end());
        UniPoly scaled_div = UniPoly(std::move(sub)).scaled(factor);
        rem = rem - scaled_div;
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading());
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational c = coeff(i);
        if (c.is_zero()) continue;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = abs == 1 && i > 0;
        if (!unit) out << rational_to_string(abs);
        if (i > 0) {
            if (!unit) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

UniPoly uni_gcd(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd(0, 0) undefined");
    UniPoly a = p, b = q;
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).remainder;
        a = b;
        b = r;
    }
    return a.monic();
}

BezoutTriple extended_gcd(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd(0, 0) undefined");
    UniPoly r0 = p, r1 = q;
    UniPoly s0 = UniPoly::constant(1), s1;
    UniPoly t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto dm = r0.divmod(r1);
        UniPoly r2 = dm.remainder;
        UniPoly s2 = s0 - dm.quotient * s1;
        UniPoly t2 = t0 - dm.quotient * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    Rational lead = r0.leading();
    return {r0.scaled(Rational(1) / lead), s0.scaled(Rational(1) / lead),
            t0.scaled(Rational(1) / lead)};
}

namespace {

std::vector<Int> positive_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> divs;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            divs.push_back(i);
            if (i * i != n) divs.push_back(n / i);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    UniPoly q = p;
    // factor out x^m
    while (q.coeff(0).is_zero() && q.degree() > 0) {
        if (roots.empty()) roots.push_back(Rational(0));
        q = q.divmod(UniPoly::variable()).quotient;
    }
    if (q.degree() < 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    // clear denominators to integer coefficients
    Int den_lcm = 1;
    for (const Rational& c : q.coeffs()) {
        Int d = denominator(c);
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    std::vector<Int> ic;
    for (const Rational& c : q.coeffs()) ic.push_back(numerator(Rational(c * den_lcm)));
    for (const Int& num_div : positive_divisors(ic.front()))
        for (const Int& den_div : positive_divisors(ic.back())) {
            Rational cand(num_div, den_div);
            for (const Rational& r : {cand, Rational(-cand)})
                if (q.evaluate(r).is_zero() &&
                    std::find(roots.begin(), roots.end(), r) == roots.end())
                    roots.push_back(r);
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

RationalRootSplit split_rational_roots(const UniPoly& p) {
    RationalRootSplit out;
    out.roots = rational_roots(p);
    out.cofactor = p;
    for (const Rational& r : out.roots) {
        UniPoly lin({-r, Rational(1)});
        while (true) {
            auto dm = out.cofactor.divmod(lin);
            if (!dm.remainder.is_zero()) break;
            out.cofactor = dm.quotient;
        }
    }
    out.cofactor = out.cofactor.monic();
    return out;
}

bool is_irreducible(const UniPoly& m) {
    int d = m.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    if (d > 3) throw std::invalid_argument("irreducibility check limited to degree <= 3");
    return rational_roots(m).empty();
}

AlgebraicElement::AlgebraicElement(UniPoly value, UniPoly modulus)
    : value_(std::move(value)), modulus_(std::move(modulus)) {
    if (modulus_.degree() < 1) throw std::invalid_argument("modulus must be nonconstant");
    if (modulus_.leading() != 1) modulus_ = modulus_.monic();
    value_ = value_.divmod(modulus_).remainder;
}

AlgebraicElement AlgebraicElement::from_rational(const Rational& r, const UniPoly& modulus) {
    return AlgebraicElement(UniPoly::constant(r), modulus);
}

AlgebraicElement AlgebraicElement::generator(const UniPoly& modulus) {
    return AlgebraicElement(UniPoly::variable(), modulus);
}

bool AlgebraicElement::is_rational(Rational* out) const {
    if (value_.degree() > 0) return false;
    if (out) *out = value_.coeff(0);
    return true;
}

AlgebraicElement AlgebraicElement::operator+(const AlgebraicElement& o) const {
    if (modulus_ != o.modulus_) throw std::invalid_argument("modulus mismatch");
    return AlgebraicElement(value_ + o.value_, modulus_);
}

AlgebraicElement AlgebraicElement::operator-(const AlgebraicElement& o) const {
    if (modulus_ != o.modulus_) throw std::invalid_argument("modulus mismatch");
    return AlgebraicElement(value_ - o.value_, modulus_);
}

AlgebraicElement AlgebraicElement::operator*(const AlgebraicElement& o) const {
    if (modulus_ != o.modulus_) throw std::invalid_argument("modulus mismatch");
    return AlgebraicElement(value_ * o.value_, modulus_);
}

AlgebraicElement AlgebraicElement::operator-() const {
    return AlgebraicElement(-value_, modulus_);
}

AlgebraicElement AlgebraicElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // s*value + t*modulus = 1 in Q[x]; s is the inverse mod m
    auto bez = extended_gcd(value_, modulus_);
    if (bez.g.degree() != 0)
        throw std::logic_error("modulus not irreducible: nontrivial gcd with value");
    return AlgebraicElement(bez.s, modulus_);
}

AlgebraicElement AlgebraicElement::operator/(const AlgebraicElement& o) const {
    return *this * o.inverse();
}

std::string AlgebraicElement::to_string(const std::string& symbol) const {
    return value_.to_string(symbol);
}

}  // namespace netforge::algebra
