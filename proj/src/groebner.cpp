#include "netforge/groebner.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace netforge::algebra {

Ideal::Ideal(Ring r, std::vector<MultiPoly> gens) : ring(std::move(r)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.ring() != ring && *g.ring() != *ring)
            throw std::invalid_argument("generator ring mismatch");
        generators.push_back(normalize_content(g));
    }
}

MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
    MultiPoly rem(p.ring());
    MultiPoly work = p;
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        bool reduced = false;
        for (const MultiPoly& b : basis) {
            if (b.is_zero() || !monomial_divides(b.leading_monomial(), lm)) continue;
            Monomial q(lm.size());
            for (size_t i = 0; i < q.size(); ++i)
                q[i] = static_cast<unsigned char>(lm[i] - b.leading_monomial()[i]);
            MultiPoly factor(p.ring());
            factor.add_term(q, work.leading_coeff() / b.leading_coeff());
            work = work - factor * b;
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the leading term to the remainder
            rem.add_term(lm, work.leading_coeff());
            MultiPoly lt(p.ring());
            lt.add_term(lm, work.leading_coeff());
            work = work - lt;
        }
    }
    return rem;
}

namespace {

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    Monomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
    auto cofactor = [&](const MultiPoly& p) {
        Monomial q(l.size());
        for (size_t i = 0; i < l.size(); ++i)
            q[i] = static_cast<unsigned char>(l[i] - p.leading_monomial()[i]);
        MultiPoly m(p.ring());
        m.add_term(q, Rational(1) / p.leading_coeff());
        return m * p;
    };
    return cofactor(f) - cofactor(g);
}

bool coprime_leads(const MultiPoly& f, const MultiPoly& g) {
    const Monomial& a = f.leading_monomial();
    const Monomial& b = g.leading_monomial();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

void check_guards(const std::vector<MultiPoly>& gens) {
    if (gens.size() > 40)
        throw std::invalid_argument("system too large; use propagation first");
    std::set<size_t> used;
    for (const MultiPoly& g : gens)
        for (size_t v : g.used_variables()) used.insert(v);
    if (used.size() > 8)
        throw std::invalid_argument("system too large; use propagation first");
}

}  // namespace

std::vector<MultiPoly> groebner_basis(const Ideal& ideal) {
    check_guards(ideal.generators);
    std::vector<MultiPoly> basis = ideal.generators;
    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    // chain criterion: a pair (i, j) is redundant when some k with both
    // (i, k) and (j, k) already handled has a leading monomial dividing
    // lcm(lm_i, lm_j)
    std::set<std::pair<size_t, size_t>> done;
    auto chain_redundant = [&](size_t i, size_t j) {
        Monomial l = monomial_lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
        for (size_t k = 0; k < basis.size(); ++k) {
            if (k == i || k == j) continue;
            if (!monomial_divides(basis[k].leading_monomial(), l)) continue;
            auto key = [](size_t a, size_t b) { return std::minmax(a, b); };
            if (done.count(key(i, k)) && done.count(key(j, k))) return true;
        }
        return false;
    };

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        done.insert(std::minmax(i, j));
        if (coprime_leads(basis[i], basis[j])) continue;  // Buchberger 1st criterion
        if (chain_redundant(i, j)) continue;
        MultiPoly s = reduce(s_polynomial(basis[i], basis[j]), basis);
        if (s.is_zero()) continue;
        s = normalize_content(s);
        Rational c;
        if (s.is_constant(&c)) return {MultiPoly::constant(ideal.ring, Rational(1))};
        size_t idx = basis.size();
        basis.push_back(s);
        if (basis.size() > 256)
            throw std::runtime_error("Groebner basis computation blew up; reduce the system");
        for (size_t k = 0; k < idx; ++k) pairs.emplace_back(k, idx);
    }

    // inter-reduce: drop generators whose lead is divisible by another's,
    // then fully reduce each by the rest
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (monomial_divides(basis[j].leading_monomial(), basis[i].leading_monomial())) {
                // keep the later duplicate when leads tie exactly
                redundant = !(basis[i].leading_monomial() == basis[j].leading_monomial() && i < j);
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<MultiPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = reduce(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r.scaled(Rational(1) / r.leading_coeff()));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const MultiPoly& a, const MultiPoly& b) {
                  return MonomialLess{}(a.leading_monomial(), b.leading_monomial());
              });
    if (reduced.empty()) reduced.emplace_back(ideal.ring);  // zero ideal
    return reduced;
}

bool ideal_is_trivial(const Ideal& ideal) {
    auto basis = groebner_basis(ideal);
    if (basis.size() != 1) return false;
    Rational c;
    return basis.front().is_constant(&c) && c == 1;
}

}  // namespace netforge::algebra
