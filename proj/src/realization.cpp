#include "netforge/realization.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace netforge::realization {

using algebra::AlgebraicElement;
using algebra::Ideal;
using algebra::make_constant;
using algebra::make_variable;
using algebra::MultiPoly;
using algebra::Rational;
using algebra::Ring;
using algebra::UniPoly;

namespace {

std::string row_name(int k, int row) {
    return "class " + std::to_string(row / k + 1) + " line " + std::to_string(row % k + 1);
}

// chi point -> flattened 0-based row indices of its four lines
std::array<int, 4> point_rows(int k, const net::ChiPoint& p) {
    return {p.lines[0] - 1, k + p.lines[1] - 1, 2 * k + p.lines[2] - 1,
            3 * k + p.lines[3] - 1};
}

SymVec sym_cross(const SymVec& a, const SymVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

bool sym_is_zero(const SymVec& v) {
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

SymVec fixed_row(const Ring& ring, int a, int b, int c) {
    return {make_constant(ring, a), make_constant(ring, b), make_constant(ring, c)};
}

// the four 3x3 minors of a 4-row block, content-normalized, nonzero only
void append_minors(const std::array<SymVec, 4>& rows, std::vector<MultiPoly>& out,
                   std::set<MultiPoly>* seen) {
    for (int skip = 0; skip < 4; ++skip) {
        std::array<std::array<MultiPoly, 3>, 3> m{{
            {rows[skip == 0 ? 1 : 0][0], rows[skip == 0 ? 1 : 0][1], rows[skip == 0 ? 1 : 0][2]},
            {rows[skip <= 1 ? 2 : 1][0], rows[skip <= 1 ? 2 : 1][1], rows[skip <= 1 ? 2 : 1][2]},
            {rows[skip <= 2 ? 3 : 2][0], rows[skip <= 2 ? 3 : 2][1], rows[skip <= 2 ? 3 : 2][2]},
        }};
        MultiPoly d = algebra::normalize_content(algebra::det3(m));
        if (d.is_zero()) continue;
        if (seen && !seen->insert(d).second) continue;
        out.push_back(d);
    }
}

}  // namespace

MinorSystem build_minor_system(const net::NetIncidence& n) {
    const int k = n.k;
    const int nrows = 4 * k;
    algebra::VarNames names;
    for (int r = 0; r < nrows; ++r)
        for (char v : {'a', 'b', 'c'}) names.push_back(std::string(1, v) + std::to_string(r + 1));
    Ring ring = algebra::make_ring(std::move(names));

    MinorSystem sys;
    sys.matrix.k = k;
    sys.matrix.ring = ring;
    for (int r = 0; r < nrows; ++r) {
        if (r == 0) sys.matrix.rows.push_back(fixed_row(ring, 1, 0, 0));
        else if (r == 1) sys.matrix.rows.push_back(fixed_row(ring, 0, 1, 0));
        else if (r == 2) sys.matrix.rows.push_back(fixed_row(ring, 0, 0, 1));
        else if (r == k) sys.matrix.rows.push_back(fixed_row(ring, 1, 1, 1));
        else
            sys.matrix.rows.push_back(SymVec{make_variable(ring, 3 * r),
                                             make_variable(ring, 3 * r + 1),
                                             make_variable(ring, 3 * r + 2)});
    }
    std::set<MultiPoly> seen;
    for (const net::ChiPoint& p : n.points) {
        auto rows = point_rows(k, p);
        append_minors({sys.matrix.rows[rows[0]], sys.matrix.rows[rows[1]],
                       sys.matrix.rows[rows[2]], sys.matrix.rows[rows[3]]},
                      sys.minors, &seen);
    }
    return sys;
}

// ---------------------------------------------------------------------------
// propagation

namespace {

struct PropState {
    const net::NetIncidence* chi = nullptr;
    Ring ring;
    std::vector<std::optional<SymVec>> lines;   // by flattened row
    std::vector<std::optional<SymVec>> points;  // by chi point index
    std::vector<std::string> trace;
    std::string label;  // decision digits
};

// parameter variable indices for row r: y = 3r, z = 3r+1, t = 3r+2
Ring make_param_ring(int nrows) {
    algebra::VarNames names;
    for (int r = 0; r < nrows; ++r)
        for (char v : {'y', 'z', 't'}) names.push_back(std::string(1, v) + std::to_string(r + 1));
    return algebra::make_ring(std::move(names));
}

std::string point_str(const net::ChiPoint& p) {
    std::ostringstream out;
    out << "(" << p.lines[0] << "," << p.lines[1] << "," << p.lines[2] << "," << p.lines[3]
        << ")";
    return out.str();
}

// Runs cross-product propagation to a fixpoint. Returns false when the
// branch degenerates (symbolically coincident lines or points).
bool propagate_fixpoint(PropState& st, std::string* reason) {
    const int k = st.chi->k;
    bool progress = true;
    while (progress) {
        progress = false;
        // points from pairs of known, distinct lines
        for (size_t pi = 0; pi < st.chi->points.size(); ++pi) {
            if (st.points[pi]) continue;
            auto rows = point_rows(k, st.chi->points[pi]);
            int known = 0;
            bool found = false;
            for (int a = 0; a < 4 && !found; ++a) {
                if (!st.lines[rows[a]]) continue;
                ++known;
                for (int b = a + 1; b < 4 && !found; ++b) {
                    if (!st.lines[rows[b]]) continue;
                    SymVec c = sym_cross(*st.lines[rows[a]], *st.lines[rows[b]]);
                    if (sym_is_zero(c)) continue;
                    st.points[pi] = c;
                    found = true;
                    progress = true;
                }
            }
            // recount for the degeneration check (loop above may stop early)
            if (!found) {
                known = 0;
                for (int a = 0; a < 4; ++a)
                    if (st.lines[rows[a]]) ++known;
                if (known >= 2) {
                    *reason = "point " + point_str(st.chi->points[pi]) +
                              " degenerates: its known lines coincide";
                    return false;
                }
            }
        }
        // lines from pairs of known, distinct points
        for (int r = 0; r < 4 * k; ++r) {
            if (st.lines[r]) continue;
            std::vector<size_t> on;
            for (size_t pi = 0; pi < st.chi->points.size(); ++pi) {
                if (!st.points[pi]) continue;
                auto rows = point_rows(k, st.chi->points[pi]);
                if (std::find(rows.begin(), rows.end(), r) != rows.end()) on.push_back(pi);
            }
            if (on.size() < 2) continue;
            bool set = false;
            for (size_t a = 0; a < on.size() && !set; ++a)
                for (size_t b = a + 1; b < on.size() && !set; ++b) {
                    SymVec c = sym_cross(*st.points[on[a]], *st.points[on[b]]);
                    if (sym_is_zero(c)) continue;
                    st.lines[r] = c;
                    st.trace.push_back(row_name(k, r) + " = cross(" +
                                       point_str(st.chi->points[on[a]]) + ", " +
                                       point_str(st.chi->points[on[b]]) + ")");
                    set = true;
                    progress = true;
                }
            if (!set) {
                *reason = row_name(k, r) + " degenerates: all its known points coincide";
                return false;
            }
        }
    }
    return true;
}

void explore(PropState st, PropagationResult& out);

void branch_options(const PropState& st, int r, PropagationResult& out) {
    const int k = st.chi->k;
    // known points already on row r (at most one; two would have set it)
    std::optional<SymVec> through;
    std::string through_str;
    int through_idx = -1;
    for (size_t pi = 0; pi < st.chi->points.size(); ++pi) {
        if (!st.points[pi]) continue;
        auto rows = point_rows(k, st.chi->points[pi]);
        if (std::find(rows.begin(), rows.end(), r) != rows.end()) {
            through = st.points[pi];
            through_str = point_str(st.chi->points[pi]);
            through_idx = static_cast<int>(pi);
            break;
        }
    }
    size_t vy = 3 * r, vz = 3 * r + 1, vt = 3 * r + 2;
    std::vector<std::pair<SymVec, std::string>> options;
    if (!through) {
        options.push_back({{make_constant(st.ring, 1), make_variable(st.ring, vy),
                            make_variable(st.ring, vz)},
                           "free, scale-fixed (1, y, z)"});
        options.push_back({{make_constant(st.ring, 0), make_constant(st.ring, 1),
                            make_variable(st.ring, vz)},
                           "free with vanishing first coordinate (0, 1, z)"});
        options.push_back({fixed_row(st.ring, 0, 0, 1), "the line (0, 0, 1)"});
    } else {
        // Pencil basis: the two known lines through the point. Coincidence
        // with either of them lands at t = 0 or t = infinity, matching the
        // chart boundaries rather than interior parameter values.
        const SymVec* A = nullptr;
        const SymVec* B = nullptr;
        for (int row : point_rows(k, st.chi->points[through_idx])) {
            if (!st.lines[row]) continue;
            if (!A) {
                A = &*st.lines[row];
            } else if (!B && !sym_is_zero(sym_cross(*A, *st.lines[row]))) {
                B = &*st.lines[row];
                break;
            }
        }
        if (!A || !B) throw std::logic_error("pencil point without two distinct known lines");
        MultiPoly t = make_variable(st.ring, vt);
        options.push_back({{(*A)[0] - t * (*B)[0], (*A)[1] - t * (*B)[1],
                            (*A)[2] - t * (*B)[2]},
                           "pencil through " + through_str +
                               " spanned by its two known lines, parameter t"});
        options.push_back({*B, "pencil through " + through_str + " at t = infinity"});
    }
    for (size_t o = 0; o < options.size(); ++o) {
        PropState next = st;
        next.label += std::to_string(o);
        next.lines[r] = options[o].first;
        next.trace.push_back("parametrize " + row_name(k, r) + ": " + options[o].second);
        explore(std::move(next), out);
    }
}

void explore(PropState st, PropagationResult& out) {
    std::string reason;
    if (!propagate_fixpoint(st, &reason)) {
        PropagationBranch br;
        br.label = st.label.empty() ? "-" : st.label;
        br.trace = std::move(st.trace);
        br.trace.push_back("branch closed: " + reason);
        br.closed = true;
        br.closed_reason = reason;
        out.branches.push_back(std::move(br));
        return;
    }
    const int k = st.chi->k;
    // follow chi in lexicographic point order: parametrize the first
    // undetermined line of the first unresolved point, so that lines are
    // usually pinned down to a one-parameter pencil through a known point
    for (const net::ChiPoint& p : st.chi->points) {
        for (int r : point_rows(k, p)) {
            if (!st.lines[r]) {
                branch_options(st, r, out);
                return;
            }
        }
    }
    // all lines determined: residual = every nonvanishing chi minor
    PropagationBranch br;
    br.label = st.label.empty() ? "-" : st.label;
    br.trace = std::move(st.trace);
    br.lines.k = k;
    br.lines.ring = st.ring;
    for (auto& l : st.lines) br.lines.rows.push_back(std::move(*l));
    std::set<MultiPoly> seen;
    for (const net::ChiPoint& p : st.chi->points) {
        auto rows = point_rows(k, p);
        append_minors({br.lines.rows[rows[0]], br.lines.rows[rows[1]],
                       br.lines.rows[rows[2]], br.lines.rows[rows[3]]},
                      br.residual, &seen);
    }
    br.trace.push_back("residual system: " + std::to_string(br.residual.size()) +
                       " equations in the surviving parameters");
    out.branches.push_back(std::move(br));
}

}  // namespace

PropagationResult propagate_lines(const net::NetIncidence& n) {
    auto report = net::validate_net_axioms(n);
    if (!report.pass) throw std::invalid_argument("invalid net incidence");
    const int k = n.k;
    PropagationResult out;
    out.ring = make_param_ring(4 * k);

    PropState st;
    st.chi = &n;
    st.ring = out.ring;
    st.lines.assign(4 * k, std::nullopt);
    st.points.assign(n.points.size(), std::nullopt);
    st.lines[0] = fixed_row(st.ring, 1, 0, 0);
    st.lines[1] = fixed_row(st.ring, 0, 1, 0);
    st.lines[2] = fixed_row(st.ring, 0, 0, 1);
    st.lines[k] = fixed_row(st.ring, 1, 1, 1);
    st.trace.push_back("rows of B fixed: class 1 lines 1-3 and class 2 line 1");
    explore(std::move(st), out);
    return out;
}

// ---------------------------------------------------------------------------
// certificate verification

namespace {

FieldVec field_cross(const FieldVec& a, const FieldVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

bool field_is_zero(const FieldVec& v) {
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

AlgebraicElement field_dot(const FieldVec& a, const FieldVec& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

AlgebraicElement field_det3(const FieldVec& a, const FieldVec& b, const FieldVec& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool fail(std::string* witness, const std::string& msg) {
    if (witness) *witness = msg;
    return false;
}

}  // namespace

bool verify_certificate(const CertificateMatrix& m, const net::NetIncidence& n,
                        std::string* witness) {
    if (!algebra::is_irreducible(m.modulus))
        throw std::invalid_argument("certificate modulus is not irreducible");
    const int k = n.k;
    if (m.k != k || static_cast<int>(m.rows.size()) != 4 * k)
        return fail(witness, "matrix shape does not match the incidence");

    for (int r = 0; r < 4 * k; ++r)
        if (field_is_zero(m.rows[r]))
            return fail(witness, row_name(k, r) + " is the zero vector");

    // every chi minor vanishes
    for (const net::ChiPoint& p : n.points) {
        auto rows = point_rows(k, p);
        for (int skip = 0; skip < 4; ++skip) {
            std::array<int, 3> pick;
            for (int i = 0, j = 0; i < 4; ++i)
                if (i != skip) pick[j++] = rows[i];
            if (!field_det3(m.rows[pick[0]], m.rows[pick[1]], m.rows[pick[2]]).is_zero())
                return fail(witness, "nonvanishing minor at point " + point_str(p));
        }
    }

    // chi point containing a given cross-class row pair
    std::map<std::pair<int, int>, std::array<int, 4>> pair_to_point;
    for (const net::ChiPoint& p : n.points) {
        auto rows = point_rows(k, p);
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) pair_to_point[{rows[a], rows[b]}] = rows;
    }

    for (int i = 0; i < 4 * k; ++i)
        for (int j = i + 1; j < 4 * k; ++j) {
            FieldVec p = field_cross(m.rows[i], m.rows[j]);
            if (field_is_zero(p))
                return fail(witness, "coincident lines: " + row_name(k, i) + " and " +
                                         row_name(k, j));
            const std::array<int, 4>* allowed = nullptr;
            if (auto it = pair_to_point.find({i, j}); it != pair_to_point.end())
                allowed = &it->second;
            // realized incidence must equal chi exactly: no line outside the
            // designated chi point may pass through this intersection
            for (int h = 0; h < 4 * k; ++h) {
                if (h == i || h == j) continue;
                bool in_point =
                    allowed && std::find(allowed->begin(), allowed->end(), h) != allowed->end();
                if (in_point) continue;
                if (field_dot(m.rows[h], p).is_zero())
                    return fail(witness, "unexpected concurrence of " + row_name(k, i) + ", " +
                                             row_name(k, j) + " and " + row_name(k, h));
            }
        }
    return true;
}

// ---------------------------------------------------------------------------
// residual solving

namespace {

MultiPoly uni_to_multi(const Ring& ring, size_t var, const UniPoly& p) {
    MultiPoly out(ring);
    for (int i = 0; i <= p.degree(); ++i) {
        algebra::Monomial m(ring->size(), 0);
        m[var] = static_cast<unsigned char>(i);
        out.add_term(m, p.coeff(i));
    }
    return out;
}

// coefficient of w^d in g, viewed as a polynomial in w
MultiPoly coeff_in(const MultiPoly& g, size_t w, int d) {
    MultiPoly out(g.ring());
    for (const auto& [mono, coef] : g.terms()) {
        if (mono[w] != d) continue;
        algebra::Monomial rest = mono;
        rest[w] = 0;
        out.add_term(rest, coef);
    }
    return out;
}

// Eliminates w from (f, g) by a pseudo-remainder sequence. Every element
// of the sequence lies in the ideal <f, g>, so a nonzero result free of w
// is a valid consequence of the system.
MultiPoly prs_eliminate(MultiPoly f, MultiPoly g, size_t w) {
    const Ring ring = f.ring();
    auto degw = [&](const MultiPoly& p) { return p.degree_in(w); };
    if (degw(f) < degw(g)) std::swap(f, g);
    while (!g.is_zero() && degw(g) > 0) {
        MultiPoly r = f;
        while (!r.is_zero() && degw(r) >= degw(g)) {
            algebra::Monomial shift(ring->size(), 0);
            shift[w] = static_cast<unsigned char>(degw(r) - degw(g));
            MultiPoly mono(ring);
            mono.add_term(shift, Rational(1));
            r = coeff_in(g, w, degw(g)) * r - coeff_in(r, w, degw(r)) * mono * g;
            r = algebra::normalize_content(r);
        }
        f = g;
        g = r;
    }
    if (!g.is_zero()) return g;                      // free of w
    if (degw(f) == 0) return f;                      // already free of w
    return MultiPoly(ring);  // common factor involving w; no consequence
}

struct Solver {
    const SymLineMatrix* lines = nullptr;
    const net::NetIncidence* chi = nullptr;
    std::string prefix;
    std::vector<std::string>* trace = nullptr;
    std::optional<CertificateMatrix> found;
    bool unknown = false;
    std::string unknown_reason;

    void note(const std::string& msg) { trace->push_back(prefix + msg); }
    std::string var_name(size_t v) const { return (*lines->ring)[v]; }

    void mark_unknown(const std::string& why) {
        unknown = true;
        if (unknown_reason.empty()) unknown_reason = why;
        note("solver gave up: " + why);
    }

    // Evaluates the branch's lines at a full concrete assignment and runs
    // the degeneracy filter. Eliminated variables are back-substituted in
    // reverse order.
    bool try_solution(const UniPoly& modulus,
                      const std::map<size_t, AlgebraicElement>& assigned,
                      const std::vector<std::pair<size_t, MultiPoly>>& eliminated,
                      const std::string& context) {
        std::set<size_t> used;
        for (const SymVec& row : lines->rows)
            for (const MultiPoly& c : row)
                for (size_t v : c.used_variables()) used.insert(v);
        std::set<size_t> resolved;
        for (const auto& [v, e] : assigned) resolved.insert(v);
        for (const auto& [v, e] : eliminated) resolved.insert(v);
        std::vector<size_t> free_vars;
        for (size_t v : used)
            if (!resolved.count(v)) free_vars.push_back(v);

        const std::vector<Rational> samples{Rational(2), Rational(3), Rational(5),
                                            Rational(-1), Rational(7)};
        size_t combos = 1;
        for (size_t i = 0; i < free_vars.size() && i < 3; ++i) combos *= samples.size();

        std::string last_witness;
        for (size_t attempt = 0; attempt < combos; ++attempt) {
            std::vector<AlgebraicElement> vals(
                lines->ring->size(), AlgebraicElement::from_rational(0, modulus));
            for (const auto& [v, e] : assigned) vals[v] = e;
            size_t a = attempt;
            for (size_t v : free_vars) {
                vals[v] = AlgebraicElement::from_rational(samples[a % samples.size()], modulus);
                a /= samples.size();
            }
            for (auto it = eliminated.rbegin(); it != eliminated.rend(); ++it)
                vals[it->first] = algebra::evaluate(it->second, vals);

            CertificateMatrix cert;
            cert.k = lines->k;
            cert.modulus = modulus;
            for (const SymVec& row : lines->rows)
                cert.rows.push_back({algebra::evaluate(row[0], vals),
                                     algebra::evaluate(row[1], vals),
                                     algebra::evaluate(row[2], vals)});
            std::string witness;
            if (verify_certificate(cert, *chi, &witness)) {
                if (!free_vars.empty()) note(context + ": free parameters sampled");
                note(context + ": certificate verified");
                found = std::move(cert);
                return true;
            }
            last_witness = witness;
            if (free_vars.empty()) break;
        }
        note(context + " rejected: " + last_witness);
        return false;
    }

    // Once a proper field extension exists, the remaining generators must
    // resolve by linear elimination over the field.
    void solve_over_field(const std::vector<MultiPoly>& gens, const UniPoly& modulus,
                          std::map<size_t, AlgebraicElement> assigned,
                          const std::vector<std::pair<size_t, MultiPoly>>& eliminated,
                          const std::string& context) {
        std::vector<const AlgebraicElement*> ptr(lines->ring->size(), nullptr);
        auto refresh = [&] {
            for (auto& p : ptr) p = nullptr;
            for (const auto& [v, e] : assigned) ptr[v] = &e;
        };
        refresh();
        std::vector<algebra::FieldPoly> work;
        for (const MultiPoly& g : gens)
            work.push_back(algebra::evaluate_partial(g, ptr, modulus));

        bool progress = true;
        while (progress) {
            progress = false;
            for (auto it = work.begin(); it != work.end();) {
                if (it->is_zero()) {
                    it = work.erase(it);
                    continue;
                }
                AlgebraicElement c = AlgebraicElement::from_rational(0, modulus);
                if (it->is_constant(&c)) {
                    note(context + ": inconsistent over the extension, branch closed");
                    return;
                }
                auto uses = it->used_variables();
                if (uses.size() == 1 && it->degree_in(uses[0]) == 1) {
                    size_t v = uses[0];
                    AlgebraicElement a = AlgebraicElement::from_rational(0, modulus);
                    AlgebraicElement b = AlgebraicElement::from_rational(0, modulus);
                    for (const auto& [mono, coef] : it->terms())
                        (mono[v] ? a : b) = coef;
                    AlgebraicElement value = -b / a;
                    note(context + ": " + var_name(v) + " = " + value.to_string() +
                         " over the extension");
                    assigned.emplace(v, value);
                    refresh();
                    work.clear();
                    for (const MultiPoly& g : gens)
                        work.push_back(algebra::evaluate_partial(g, ptr, modulus));
                    progress = true;
                    break;
                }
                ++it;
            }
        }
        if (!work.empty()) {
            mark_unknown("nonlinear residual over a field extension");
            return;
        }
        try_solution(modulus, assigned, eliminated, context);
    }

    void solve(std::vector<MultiPoly> gens, std::map<size_t, Rational> roots,
               std::vector<std::pair<size_t, MultiPoly>> eliminated) {
        if (found) return;
        const Ring& ring = lines->ring;
        while (true) {
            if (found || unknown) return;
            // normalize; constants close the branch
            std::vector<MultiPoly> clean;
            std::set<MultiPoly> dedup;
            for (MultiPoly& g : gens) {
                MultiPoly n = algebra::normalize_content(g);
                if (n.is_zero()) continue;
                Rational c;
                if (n.is_constant(&c)) {
                    note("generator reduces to a nonzero constant: branch closed");
                    return;
                }
                if (dedup.insert(n).second) clean.push_back(std::move(n));
            }
            gens = std::move(clean);

            if (gens.empty()) {
                std::map<size_t, AlgebraicElement> assigned;
                UniPoly modulus = UniPoly::variable();
                for (const auto& [v, r] : roots)
                    assigned.emplace(v, AlgebraicElement::from_rational(r, modulus));
                try_solution(modulus, assigned, eliminated, "rational point");
                return;
            }

            // univariate gcd scan per variable
            std::map<size_t, std::vector<size_t>> by_var;
            for (size_t i = 0; i < gens.size(); ++i)
                if (auto u = algebra::as_univariate(gens[i])) by_var[u->first].push_back(i);
            bool merged = false;
            for (auto& [v, idx] : by_var) {
                if (idx.size() < 2) continue;
                UniPoly g = algebra::as_univariate(gens[idx[0]])->second;
                std::string desc = "gcd(" + g.to_string(var_name(v));
                for (size_t i = 1; i < idx.size(); ++i) {
                    UniPoly h = algebra::as_univariate(gens[idx[i]])->second;
                    desc += ", " + h.to_string(var_name(v));
                    g = algebra::uni_gcd(g, h);
                }
                desc += ") = " + g.to_string(var_name(v));
                note(desc);
                if (g.degree() == 0) {
                    note("no common root in any extension: branch closed");
                    return;
                }
                std::vector<MultiPoly> next;
                for (size_t i = 0; i < gens.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        next.push_back(gens[i]);
                next.push_back(uni_to_multi(ring, v, g));
                gens = std::move(next);
                merged = true;
                break;
            }
            if (merged) continue;

            // branch over the roots of a univariate generator
            std::optional<size_t> best;
            for (size_t i = 0; i < gens.size(); ++i) {
                if (!algebra::as_univariate(gens[i])) continue;
                if (!best || gens[i].total_degree() < gens[*best].total_degree()) best = i;
            }
            if (best) {
                auto [v, u] = *algebra::as_univariate(gens[*best]);
                std::vector<MultiPoly> rest;
                for (size_t i = 0; i < gens.size(); ++i)
                    if (i != *best) rest.push_back(gens[i]);
                auto split = algebra::split_rational_roots(u);
                for (const Rational& r : split.roots) {
                    note(var_name(v) + " = " + algebra::rational_to_string(r));
                    std::vector<MultiPoly> sub;
                    for (const MultiPoly& g : rest)
                        sub.push_back(algebra::substitute(g, v, make_constant(ring, r)));
                    auto roots2 = roots;
                    roots2[v] = r;
                    solve(std::move(sub), std::move(roots2), eliminated);
                    if (found) return;
                }
                if (split.cofactor.degree() >= 1) {
                    if (split.cofactor.degree() > 3) {
                        mark_unknown("irrational factor of degree > 3 in " +
                                     split.cofactor.to_string(var_name(v)));
                        return;
                    }
                    if (!algebra::is_irreducible(split.cofactor)) {
                        mark_unknown("reducible cofactor without rational roots: " +
                                     split.cofactor.to_string(var_name(v)));
                        return;
                    }
                    note("adjoin " + var_name(v) + " with minimal polynomial " +
                         split.cofactor.to_string(var_name(v)));
                    std::map<size_t, AlgebraicElement> assigned;
                    for (const auto& [rv, r] : roots)
                        assigned.emplace(rv,
                                         AlgebraicElement::from_rational(r, split.cofactor));
                    assigned.emplace(v, AlgebraicElement::generator(split.cofactor));
                    solve_over_field(rest, split.cofactor, std::move(assigned), eliminated,
                                     "extension point");
                }
                return;
            }

            // linear elimination with a constant leading coefficient
            bool eliminated_one = false;
            for (size_t i = 0; i < gens.size() && !eliminated_one; ++i) {
                for (size_t v : gens[i].used_variables()) {
                    if (gens[i].degree_in(v) != 1) continue;
                    MultiPoly a(ring), b(ring);
                    for (const auto& [mono, coef] : gens[i].terms()) {
                        if (mono[v]) {
                            algebra::Monomial rest_mono = mono;
                            rest_mono[v] = 0;
                            a.add_term(rest_mono, coef);
                        } else {
                            b.add_term(mono, coef);
                        }
                    }
                    Rational ac;
                    if (!a.is_constant(&ac) || ac.is_zero()) continue;
                    MultiPoly expr = b.scaled(Rational(-1) / ac);
                    note("eliminate " + var_name(v) + " = " + expr.to_string());
                    std::vector<MultiPoly> next;
                    for (size_t j = 0; j < gens.size(); ++j)
                        if (j != i) next.push_back(algebra::substitute(gens[j], v, expr));
                    eliminated.emplace_back(v, std::move(expr));
                    gens = std::move(next);
                    eliminated_one = true;
                    break;
                }
            }
            if (eliminated_one) continue;

            // for a two-parameter residual, eliminate the later variable
            // from generator pairs to derive univariate conditions
            std::set<size_t> used_all;
            for (const MultiPoly& g : gens)
                for (size_t v : g.used_variables()) used_all.insert(v);
            if (used_all.size() == 2) {
                size_t u = *used_all.begin(), w = *used_all.rbegin();
                std::set<MultiPoly> derived;
                bool closed = false;
                for (size_t i = 0; i < gens.size() && derived.size() < 4 && !closed; ++i)
                    for (size_t j = i + 1; j < gens.size() && derived.size() < 4; ++j) {
                        if (gens[i].degree_in(w) == 0 || gens[j].degree_in(w) == 0) continue;
                        MultiPoly r =
                            algebra::normalize_content(prs_eliminate(gens[i], gens[j], w));
                        if (r.is_zero()) continue;
                        Rational c;
                        if (r.is_constant(&c)) {
                            note("eliminating " + var_name(w) +
                                 " yields a nonzero constant: branch closed");
                            closed = true;
                            break;
                        }
                        if (r.degree_in(w) != 0 || !derived.insert(r).second) continue;
                        if (auto uni = algebra::as_univariate(r))
                            note("eliminating " + var_name(w) + " from a generator pair yields " +
                                 uni->second.to_string(var_name(u)));
                    }
                if (closed) return;
                if (!derived.empty()) {
                    for (const MultiPoly& r : derived) gens.push_back(r);
                    continue;
                }
            }

            // fall back to a lex Groebner basis
            try {
                Ideal ideal(ring, gens);
                auto basis = algebra::groebner_basis(ideal);
                Rational c;
                if (basis.size() == 1 && basis.front().is_constant(&c) && c == 1) {
                    note("Groebner basis = {1}: branch closed");
                    return;
                }
                std::set<MultiPoly> before(gens.begin(), gens.end());
                std::set<MultiPoly> after;
                for (const MultiPoly& b : basis) after.insert(algebra::normalize_content(b));
                if (after == before) {
                    mark_unknown("residual system beyond the solver's methods");
                    return;
                }
                note("replaced the residual with its Groebner basis (" +
                     std::to_string(basis.size()) + " generators)");
                gens = std::move(basis);
            } catch (const std::exception& e) {
                mark_unknown(e.what());
                return;
            }
        }
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// verdicts

RealizationVerdict decide_realizability(const combinat::OlsPair& p) {
    const int k = p.first.order();
    if (k > 5)
        throw std::invalid_argument("realizability decision supported for k <= 5");
    net::NetIncidence chi = net::ols_to_incidence(p);
    PropagationResult prop = propagate_lines(chi);

    RealizationVerdict verdict;
    bool any_unknown = false;
    std::string unknown_reason;
    for (const PropagationBranch& br : prop.branches) {
        std::string prefix = "[branch " + br.label + "] ";
        for (const std::string& line : br.trace) verdict.trace.push_back(prefix + line);
        if (br.closed) continue;
        Solver solver;
        solver.lines = &br.lines;
        solver.chi = &chi;
        solver.prefix = prefix;
        solver.trace = &verdict.trace;
        solver.solve(br.residual, {}, {});
        if (solver.found) {
            verdict.outcome = Outcome::Realizable;
            verdict.certificate = std::move(solver.found);
            return verdict;
        }
        if (solver.unknown) {
            any_unknown = true;
            if (unknown_reason.empty()) unknown_reason = solver.unknown_reason;
        }
    }
    if (any_unknown) {
        verdict.outcome = Outcome::Unknown;
        verdict.reason = unknown_reason;
    } else {
        verdict.outcome = Outcome::Empty;
    }
    return verdict;
}

RealizationVerdict decide_realizability_empty_order(int k) {
    std::uint64_t swept = 0;
    combinat::enumerate_latin(k, /*reduced=*/true, [&](const combinat::LatinSquare& L) {
        ++swept;
        if (combinat::has_orthogonal_mate(L))
            throw std::logic_error("order " + std::to_string(k) +
                                   " square with an orthogonal mate found");
    });
    RealizationVerdict verdict;
    verdict.outcome = Outcome::Empty;
    verdict.trace.push_back("OLS_" + std::to_string(k) + " = empty: swept " +
                            std::to_string(swept) + " reduced order-" + std::to_string(k) +
                            " squares, none has an orthogonal mate");
    return verdict;
}

// ---------------------------------------------------------------------------
// Hessian certificate

namespace {

bool hessian_assign(const net::NetIncidence& chi, const std::vector<FieldVec>& candidates,
                    std::vector<bool>& used, CertificateMatrix& cert, size_t slot) {
    const std::array<int, 8> slots{4, 5, 6, 7, 8, 9, 10, 11};
    if (slot == slots.size()) {
        std::string witness;
        return verify_certificate(cert, chi, &witness);
    }
    for (size_t c = 0; c < candidates.size(); ++c) {
        if (used[c]) continue;
        used[c] = true;
        cert.rows[slots[slot]] = candidates[c];
        bool ok = true;
        // prune: fully assigned chi points must have vanishing minors
        for (const net::ChiPoint& p : chi.points) {
            auto rows = point_rows(chi.k, p);
            bool all = true;
            for (int r : rows)
                if (r > slots[slot]) all = false;
            if (!all) continue;
            if (!field_det3(cert.rows[rows[0]], cert.rows[rows[1]], cert.rows[rows[2]])
                     .is_zero() ||
                !field_det3(cert.rows[rows[0]], cert.rows[rows[1]], cert.rows[rows[3]])
                     .is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok && hessian_assign(chi, candidates, used, cert, slot + 1))
            return true;
        used[c] = false;
    }
    return false;
}

}  // namespace

CertificateMatrix hessian_certificate() {
    using combinat::cyclic_square;
    using combinat::Permutation;
    combinat::OlsPair pair(cyclic_square(Permutation::from_cycles("(123)", 3)),
                           cyclic_square(Permutation::from_cycles("(132)", 3)));
    net::NetIncidence chi = net::ols_to_incidence(pair);

    UniPoly m({Rational(1), Rational(1), Rational(1)});  // x^2 + x + 1
    AlgebraicElement one = AlgebraicElement::from_rational(1, m);
    AlgebraicElement zero = AlgebraicElement::from_rational(0, m);
    AlgebraicElement w = AlgebraicElement::generator(m);
    std::array<AlgebraicElement, 3> pw{one, w, w * w};

    CertificateMatrix cert;
    cert.k = 3;
    cert.modulus = m;
    cert.rows.assign(12, FieldVec{zero, zero, zero});
    cert.rows[0] = {one, zero, zero};
    cert.rows[1] = {zero, one, zero};
    cert.rows[2] = {zero, zero, one};
    cert.rows[3] = {one, one, one};

    std::vector<FieldVec> candidates;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i || j) candidates.push_back({one, pw[i], pw[j]});

    std::vector<bool> used(candidates.size(), false);
    if (!hessian_assign(chi, candidates, used, cert, 0))
        throw std::logic_error("no Hessian line assignment passes verification");
    return cert;
}

}  // namespace netforge::realization
