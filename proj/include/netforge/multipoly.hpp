// Sparse multivariate polynomials with lex term order, templated over the
// coefficient type (Rational for symbolic work, AlgebraicElement once a
// branch lives in a number field).
//
// Variable precedence for lex: the LAST name in the ring's list is the
// largest, so variables introduced later are eliminated first and a
// Groebner elimination leaves univariates in the earliest variable.
#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "netforge/rational.hpp"
#include "netforge/unipoly.hpp"

namespace netforge::algebra {

using VarNames = std::vector<std::string>;
using Ring = std::shared_ptr<const VarNames>;

inline Ring make_ring(VarNames names) {
    return std::make_shared<const VarNames>(std::move(names));
}

using Monomial = std::vector<unsigned char>;  // exponent per ring variable

// lex: compare at the highest-precedence (last) differing variable
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

template <typename C>
class PolyT {
public:
    using Terms = std::map<Monomial, C, MonomialLess>;

    explicit PolyT(Ring ring) : ring_(std::move(ring)) {}

    static PolyT constant(Ring ring, C value) {
        PolyT p(std::move(ring));
        if (!algebra::is_zero(value)) p.terms_.emplace(Monomial(p.n_vars(), 0), std::move(value));
        return p;
    }

    static PolyT variable(Ring ring, size_t index, C one) {
        PolyT p(std::move(ring));
        if (index >= p.n_vars()) throw std::out_of_range("variable index");
        Monomial m(p.n_vars(), 0);
        m[index] = 1;
        p.terms_.emplace(std::move(m), std::move(one));
        return p;
    }

    const Ring& ring() const { return ring_; }
    size_t n_vars() const { return ring_->size(); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant(C* out = nullptr) const {
        if (terms_.empty()) return true;  // zero; *out untouched
        if (terms_.size() != 1) return false;
        const auto& [m, c] = *terms_.begin();
        for (auto e : m)
            if (e) return false;
        if (out) *out = c;
        return true;
    }

    void check_ring(const PolyT& o) const {
        if (ring_ != o.ring_ && *ring_ != *o.ring_)
            throw std::invalid_argument("polynomial ring mismatch");
    }

    PolyT operator+(const PolyT& o) const {
        check_ring(o);
        PolyT r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    PolyT operator-() const {
        PolyT r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    PolyT operator-(const PolyT& o) const { return *this + (-o); }

    PolyT operator*(const PolyT& o) const {
        check_ring(o);
        PolyT r(ring_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m(ma.size());
                for (size_t i = 0; i < m.size(); ++i) {
                    int e = ma[i] + mb[i];
                    if (e > 255) throw std::overflow_error("exponent overflow");
                    m[i] = static_cast<unsigned char>(e);
                }
                r.add_term(m, ca * cb);
            }
        return r;
    }

    PolyT scaled(const C& s) const {
        PolyT r(ring_);
        if (algebra::is_zero(s)) return r;
        r.terms_ = terms_;
        for (auto& [m, c] : r.terms_) c = c * s;
        return r;
    }

    bool operator==(const PolyT& o) const { return terms_ == o.terms_; }
    // ordering for use as a set/map key (term maps compared lexicographically)
    bool operator<(const PolyT& o) const { return terms_ < o.terms_; }

    // leading term under lex
    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero");
        return terms_.rbegin()->first;
    }
    const C& leading_coeff() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero");
        return terms_.rbegin()->second;
    }

    void add_term(const Monomial& m, const C& c) {
        if (algebra::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (algebra::is_zero(it->second)) terms_.erase(it);
        }
    }

    int degree_in(size_t var) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max<int>(d, m[var]);
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (auto e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    std::vector<size_t> used_variables() const {
        std::vector<bool> used(n_vars(), false);
        for (const auto& [m, c] : terms_)
            for (size_t i = 0; i < m.size(); ++i)
                if (m[i]) used[i] = true;
        std::vector<size_t> out;
        for (size_t i = 0; i < used.size(); ++i)
            if (used[i]) out.push_back(i);
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        // print highest terms first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string cs = coeff_to_string(it->second);
            bool negative = !cs.empty() && cs[0] == '-';
            if (negative) cs = cs.substr(1);
            out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
            first = false;
            std::string vars;
            for (size_t i = 0; i < it->first.size(); ++i) {
                if (!it->first[i]) continue;
                if (!vars.empty()) vars += "*";
                vars += (*ring_)[i];
                if (it->first[i] > 1) vars += "^" + std::to_string(int(it->first[i]));
            }
            if (vars.empty()) {
                out << cs;
            } else if (cs == "1") {
                out << vars;
            } else {
                out << cs << "*" << vars;
            }
        }
        return out.str();
    }

private:
    static std::string coeff_to_string(const Rational& c) { return rational_to_string(c); }
    static std::string coeff_to_string(const AlgebraicElement& c) {
        std::string s = c.to_string();
        if (s.find_first_of("+-", 1) != std::string::npos || s.find('w') != std::string::npos)
            return "(" + s + ")";
        return s;
    }

    Ring ring_;
    Terms terms_;
};

using MultiPoly = PolyT<Rational>;
using FieldPoly = PolyT<AlgebraicElement>;

// ---- MultiPoly-specific helpers ----

inline MultiPoly make_constant(const Ring& ring, const Rational& c) {
    return MultiPoly::constant(ring, c);
}
inline MultiPoly make_variable(const Ring& ring, size_t index) {
    return MultiPoly::variable(ring, index, Rational(1));
}

std::optional<size_t> ring_index(const Ring& ring, const std::string& name);

// Substitution var -> polynomial (ring homomorphism on that variable).
MultiPoly substitute(const MultiPoly& p, size_t var, const MultiPoly& replacement);

// Full evaluation; every used variable must be assigned. Values share one
// modulus (degree-1 modulus models plain rationals).
AlgebraicElement evaluate(const MultiPoly& p,
                          const std::vector<AlgebraicElement>& assignment);

// Partial evaluation into a field-coefficient polynomial: assigned[i]
// non-null fixes variable i.
FieldPoly evaluate_partial(const MultiPoly& p,
                           const std::vector<const AlgebraicElement*>& assigned,
                           const UniPoly& modulus);

// If p uses exactly one variable, extract it as a UniPoly.
std::optional<std::pair<size_t, UniPoly>> as_univariate(const MultiPoly& p);

// Content-normalized copy: integer coprime coefficients, positive leading
// coefficient.
MultiPoly normalize_content(const MultiPoly& p);

// Parses a sum of terms like "3/2*t^2*r - 1" over the ring's variables.
MultiPoly parse_poly(const Ring& ring, const std::string& text);

// 3x3 determinant by cofactor expansion.
template <typename C>
PolyT<C> det3(const std::array<std::array<PolyT<C>, 3>, 3>& m) {
    auto two = [&](int r1, int r2, int c1, int c2) {
        return m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
    };
    return m[0][0] * two(1, 2, 1, 2) - m[0][1] * two(1, 2, 0, 2) + m[0][2] * two(1, 2, 0, 1);
}

}  // namespace netforge::algebra
