#include "netforge/multipoly.hpp"

#include <algorithm>
#include <cctype>

namespace netforge::algebra {

std::optional<size_t> ring_index(const Ring& ring, const std::string& name) {
    auto it = std::find(ring->begin(), ring->end(), name);
    if (it == ring->end()) return std::nullopt;
    return static_cast<size_t>(it - ring->begin());
}

MultiPoly substitute(const MultiPoly& p, size_t var, const MultiPoly& replacement) {
    p.check_ring(replacement);
    MultiPoly out(p.ring());
    for (const auto& [m, c] : p.terms()) {
        Monomial base = m;
        int e = base[var];
        base[var] = 0;
        MultiPoly term(p.ring());
        term.add_term(base, c);
        for (int i = 0; i < e; ++i) term = term * replacement;
        out = out + term;
    }
    return out;
}

AlgebraicElement evaluate(const MultiPoly& p,
                          const std::vector<AlgebraicElement>& assignment) {
    if (assignment.size() != p.n_vars())
        throw std::invalid_argument("assignment size mismatch");
    const UniPoly& modulus =
        assignment.empty() ? UniPoly::variable() : assignment.front().modulus();
    AlgebraicElement acc = AlgebraicElement::from_rational(0, modulus);
    for (const auto& [m, c] : p.terms()) {
        AlgebraicElement t = AlgebraicElement::from_rational(c, modulus);
        for (size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) t = t * assignment[i];
        acc = acc + t;
    }
    return acc;
}

FieldPoly evaluate_partial(const MultiPoly& p,
                           const std::vector<const AlgebraicElement*>& assigned,
                           const UniPoly& modulus) {
    if (assigned.size() != p.n_vars())
        throw std::invalid_argument("assignment size mismatch");
    FieldPoly out(p.ring());
    for (const auto& [m, c] : p.terms()) {
        AlgebraicElement coeff = AlgebraicElement::from_rational(c, modulus);
        Monomial residual(m.size(), 0);
        for (size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (assigned[i]) {
                for (int e = 0; e < m[i]; ++e) coeff = coeff * *assigned[i];
            } else {
                residual[i] = m[i];
            }
        }
        out.add_term(residual, coeff);
    }
    return out;
}

std::optional<std::pair<size_t, UniPoly>> as_univariate(const MultiPoly& p) {
    auto used = p.used_variables();
    if (used.size() != 1) return std::nullopt;
    size_t var = used.front();
    std::vector<Rational> coeffs(static_cast<size_t>(p.degree_in(var)) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) coeffs[m[var]] = c;
    return std::make_pair(var, UniPoly(std::move(coeffs)));
}

MultiPoly normalize_content(const MultiPoly& p) {
    if (p.is_zero()) return p;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        num_gcd = gcd(num_gcd, numerator(c));
        Int d = denominator(c);
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    Rational scale(den_lcm, num_gcd < 0 ? Int(-num_gcd) : num_gcd);
    if (p.leading_coeff() < 0) scale = -scale;
    return p.scaled(scale);
}

namespace {

struct Parser {
    const Ring& ring;
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Rational parse_number() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        if (start == pos) throw std::invalid_argument("expected number in polynomial");
        return rational_from_string(text.substr(start, pos - start));
    }

    std::string parse_name() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    // term := [number] {'*'} {name['^'exp]}
    MultiPoly parse_term() {
        skip_ws();
        Rational coeff(1);
        Monomial mono(ring->size(), 0);
        bool saw_any = false;
        while (pos < text.size()) {
            skip_ws();
            if (pos >= text.size() || text[pos] == '+' || text[pos] == '-') break;
            if (text[pos] == '*') {
                ++pos;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
                coeff *= parse_number();
                saw_any = true;
                continue;
            }
            std::string name = parse_name();
            if (name.empty()) throw std::invalid_argument("unexpected character in polynomial");
            auto idx = ring_index(ring, name);
            if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
            int exp = 1;
            if (eat('^')) exp = static_cast<int>(numerator(parse_number()));
            mono[*idx] = static_cast<unsigned char>(mono[*idx] + exp);
            saw_any = true;
        }
        if (!saw_any) throw std::invalid_argument("empty term in polynomial");
        MultiPoly p(ring);
        p.add_term(mono, coeff);
        return p;
    }

    MultiPoly parse_sum() {
        MultiPoly acc(ring);
        bool negative = false;
        if (eat('-')) negative = true;
        else eat('+');
        while (true) {
            MultiPoly t = parse_term();
            acc = negative ? acc - t : acc + t;
            skip_ws();
            if (eat('-')) negative = true;
            else if (eat('+')) negative = false;
            else break;
        }
        skip_ws();
        if (pos != text.size()) throw std::invalid_argument("trailing characters in polynomial");
        return acc;
    }
};

}  // namespace

MultiPoly parse_poly(const Ring& ring, const std::string& text) {
    if (text == "0") return MultiPoly(ring);
    Parser parser{ring, text};
    return parser.parse_sum();
}

}  // namespace netforge::algebra
