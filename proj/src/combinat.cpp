#include "netforge/combinat.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "netforge/exact_cover.hpp"

namespace netforge::combinat {

Permutation::Permutation(int k) {
    if (k < 1) throw std::invalid_argument("permutation order must be >= 1");
    map_.resize(k);
    std::iota(map_.begin(), map_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int k = static_cast<int>(images.size());
    Permutation p(k);
    std::vector<bool> seen(k, false);
    for (int i = 0; i < k; ++i) {
        int v = images[i];
        if (v < 1 || v > k || seen[v - 1])
            throw std::invalid_argument("images do not form a bijection of {1..k}");
        seen[v - 1] = true;
        p.map_[i] = v - 1;
    }
    return p;
}

Permutation Permutation::from_cycles(const std::string& text, int k) {
    Permutation p(k);
    std::vector<bool> moved(k, false);
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    if (pos == text.size() || text == "()" || text == "id") return p;
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        ++pos;
        std::vector<int> cycle;
        bool spaced = text.find_first_of(", ", pos) != std::string::npos &&
                      text.find_first_of(", ", pos) < text.find(')', pos);
        while (true) {
            skip_ws();
            if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
            if (text[pos] == ')') { ++pos; break; }
            if (text[pos] == ',') { ++pos; continue; }
            int v = 0;
            if (spaced) {
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    v = v * 10 + (text[pos++] - '0');
            } else {
                // compact form "(123)": one digit per point
                v = text[pos++] - '0';
            }
            if (v < 1 || v > k) throw std::invalid_argument("cycle entry out of range");
            cycle.push_back(v);
        }
        for (size_t i = 0; i < cycle.size(); ++i) {
            int a = cycle[i] - 1, b = cycle[(i + 1) % cycle.size()] - 1;
            if (moved[a]) throw std::invalid_argument("repeated point in cycles");
            moved[a] = true;
            p.map_[a] = b;
        }
        skip_ws();
    }
    return p;
}

Permutation Permutation::compose(const Permutation& inner) const {
    if (order() != inner.order()) throw std::invalid_argument("order mismatch");
    Permutation r(order());
    for (int i = 0; i < order(); ++i) r.map_[i] = map_[inner.map_[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r(order());
    for (int i = 0; i < order(); ++i) r.map_[map_[i]] = i;
    return r;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < order(); ++i)
        if (map_[i] != i) return false;
    return true;
}

bool Permutation::is_fixed_point_free() const {
    for (int i = 0; i < order(); ++i)
        if (map_[i] == i) return false;
    return true;
}

bool Permutation::is_k_cycle() const {
    CycleType t = cycle_type(*this);
    return t.parts.size() == 1 && t.parts[0] == order();
}

bool Permutation::is_even() const {
    int transpositions = 0;
    for (int part : cycle_type(*this).parts) transpositions += part - 1;
    return transpositions % 2 == 0;
}

std::string Permutation::cycle_string() const {
    const int k = order();
    std::vector<bool> seen(k, false);
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i < k; ++i) {
        if (seen[i] || map_[i] == i) continue;
        out << '(';
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out << ' ';
            out << (j + 1);
            first = false;
            j = map_[j];
        }
        out << ')';
        any = true;
    }
    return any ? out.str() : "()";
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> v(order());
    for (int i = 0; i < order(); ++i) v[i] = map_[i] + 1;
    return v;
}

CycleType cycle_type(const Permutation& p) {
    const int k = p.order();
    std::vector<bool> seen(k, false);
    CycleType t;
    for (int i = 1; i <= k; ++i) {
        if (seen[i - 1]) continue;
        int len = 0, j = i;
        while (!seen[j - 1]) {
            seen[j - 1] = true;
            j = p.image(j);
            ++len;
        }
        if (len >= 2) t.parts.push_back(len);
    }
    std::sort(t.parts.begin(), t.parts.end());
    return t;
}

std::string CycleType::to_string() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ',';
        out << parts[i];
    }
    out << ')';
    return out.str();
}

bool LatinSquare::is_latin(int k, std::span<const int> grid) {
    if (static_cast<int>(grid.size()) != k * k) return false;
    std::vector<bool> seen(k);
    for (int r = 0; r < k; ++r) {
        std::fill(seen.begin(), seen.end(), false);
        for (int c = 0; c < k; ++c) {
            int v = grid[r * k + c];
            if (v < 1 || v > k || seen[v - 1]) return false;
            seen[v - 1] = true;
        }
    }
    for (int c = 0; c < k; ++c) {
        std::fill(seen.begin(), seen.end(), false);
        for (int r = 0; r < k; ++r) {
            int v = grid[r * k + c];
            if (seen[v - 1]) return false;
            seen[v - 1] = true;
        }
    }
    return true;
}

LatinSquare LatinSquare::from_grid(int k, std::vector<int> grid) {
    if (!is_latin(k, grid)) throw std::invalid_argument("grid is not a Latin square");
    return LatinSquare(k, std::move(grid));
}

LatinSquare LatinSquare::transposed() const {
    std::vector<int> g(grid_.size());
    for (int r = 0; r < k_; ++r)
        for (int c = 0; c < k_; ++c) g[c * k_ + r] = grid_[r * k_ + c];
    return LatinSquare(k_, std::move(g));
}

bool LatinSquare::is_reduced() const {
    for (int i = 1; i <= k_; ++i)
        if (at(1, i) != i || at(i, 1) != i) return false;
    return true;
}

LatinSquare LatinSquare::first_row_normalized() const {
    std::vector<int> relabel(k_ + 1);
    for (int c = 1; c <= k_; ++c) relabel[at(1, c)] = c;
    std::vector<int> g(grid_.size());
    for (size_t i = 0; i < grid_.size(); ++i) g[i] = relabel[grid_[i]];
    return LatinSquare(k_, std::move(g));
}

std::string LatinSquare::to_text() const {
    std::ostringstream out;
    for (int r = 1; r <= k_; ++r) {
        for (int c = 1; c <= k_; ++c) {
            if (c > 1) out << ' ';
            out << at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

LatinSquare LatinSquare::from_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> values;
    int v;
    while (in >> v) values.push_back(v);
    int k = 0;
    while (k * k < static_cast<int>(values.size())) ++k;
    if (k * k != static_cast<int>(values.size()) || k == 0)
        throw std::invalid_argument("square text must contain k*k integers");
    return from_grid(k, std::move(values));
}

OlsPair::OlsPair(LatinSquare a, LatinSquare b) : first(std::move(a)), second(std::move(b)) {
    if (!are_orthogonal(first, second))
        throw std::invalid_argument("squares are not orthogonal");
}

bool OlsPair::operator<(const OlsPair& o) const {
    if (first.flat() != o.first.flat()) return first.flat() < o.first.flat();
    return second.flat() < o.second.flat();
}

Permutation row_permutation(const LatinSquare& L, int i, int j) {
    const int k = L.order();
    if (i < 1 || i > k || j < 1 || j > k) throw std::out_of_range("row index");
    if (i == j) throw std::invalid_argument("row_permutation requires i != j");
    std::vector<int> images(k);
    for (int p = 1; p <= k; ++p) images[L.at(i, p) - 1] = L.at(j, p);
    return Permutation::from_images(std::move(images));
}

LatinSquare cyclic_square(const Permutation& sigma) {
    if (!sigma.is_k_cycle()) throw std::invalid_argument("cyclic_square requires a k-cycle");
    const int k = sigma.order();
    std::vector<Permutation> sigmas(static_cast<size_t>(k - 1), sigma);
    return from_permutations(sigmas);
}

LatinSquare from_permutations(std::span<const Permutation> sigmas) {
    if (sigmas.empty()) throw std::invalid_argument("need k-1 permutations");
    const int k = static_cast<int>(sigmas.size()) + 1;
    std::vector<int> grid(static_cast<size_t>(k) * k);
    for (int c = 0; c < k; ++c) grid[c] = c + 1;
    for (int r = 1; r < k; ++r) {
        const Permutation& s = sigmas[r - 1];
        if (s.order() != k) throw std::invalid_argument("permutation order mismatch");
        if (!s.is_fixed_point_free())
            throw std::invalid_argument("row permutations must be fixed point free");
        for (int c = 0; c < k; ++c) grid[r * k + c] = s.image(grid[(r - 1) * k + c]);
    }
    if (!LatinSquare::is_latin(k, grid))
        throw std::invalid_argument("inconsistent permutation sequence");
    return LatinSquare::from_grid(k, std::move(grid));
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    if (a.order() != b.order()) throw std::invalid_argument("order mismatch");
    const int k = a.order();
    std::vector<bool> hit(static_cast<size_t>(k) * k, false);
    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= k; ++c) {
            int idx = (a.at(r, c) - 1) * k + (b.at(r, c) - 1);
            if (hit[idx]) return false;
            hit[idx] = true;
        }
    return true;
}

std::vector<Transversal> find_transversals(const LatinSquare& L) {
    const int k = L.order();
    std::vector<Transversal> result;
    std::vector<int> cols;
    std::vector<bool> col_used(k, false), sym_used(k, false);
    // backtracking by row, columns ascending: output is lexicographic
    auto rec = [&](auto&& self, int row) -> void {
        if (row == k) {
            result.push_back(Transversal{cols});
            return;
        }
        for (int c = 0; c < k; ++c) {
            if (col_used[c]) continue;
            int s = L.at(row + 1, c + 1) - 1;
            if (sym_used[s]) continue;
            col_used[c] = sym_used[s] = true;
            cols.push_back(c);
            self(self, row + 1);
            cols.pop_back();
            col_used[c] = sym_used[s] = false;
        }
    };
    rec(rec, 0);
    return result;
}

namespace {

exact_cover::DancingLinks cover_problem(const LatinSquare& L,
                                        const std::vector<Transversal>& ts) {
    const int k = L.order();
    exact_cover::DancingLinks dlx(k * k);
    for (const Transversal& t : ts) {
        std::vector<int> cells(k);
        for (int r = 0; r < k; ++r) cells[r] = r * k + t.cols[r];
        dlx.add_row(cells);
    }
    return dlx;
}

}  // namespace

std::optional<std::vector<Transversal>> disjoint_decomposition(const LatinSquare& L) {
    auto ts = find_transversals(L);
    if (static_cast<int>(ts.size()) < L.order()) return std::nullopt;
    auto dlx = cover_problem(L, ts);
    std::vector<int> rows;
    if (!dlx.first_cover(rows)) return std::nullopt;
    std::vector<Transversal> out;
    out.reserve(rows.size());
    for (int r : rows) out.push_back(ts[r]);
    return out;
}

std::vector<std::vector<int>> all_disjoint_decompositions(const LatinSquare& L) {
    auto ts = find_transversals(L);
    std::vector<std::vector<int>> covers;
    if (static_cast<int>(ts.size()) < L.order()) return covers;
    auto dlx = cover_problem(L, ts);
    dlx.solve([&](const std::vector<int>& rows) {
        covers.push_back(rows);
        return true;
    });
    std::sort(covers.begin(), covers.end());
    return covers;
}

std::vector<LatinSquare> orthogonal_mates(const LatinSquare& L, bool reduced_only) {
    const int k = L.order();
    auto ts = find_transversals(L);
    auto covers = all_disjoint_decompositions(L);
    std::vector<LatinSquare> mates;
    for (const auto& cover : covers) {
        // symbol m on the m-th transversal of the decomposition
        std::vector<int> grid(static_cast<size_t>(k) * k);
        for (int m = 0; m < k; ++m) {
            const Transversal& t = ts[cover[m]];
            for (int r = 0; r < k; ++r) grid[r * k + t.cols[r]] = m + 1;
        }
        LatinSquare base = LatinSquare::from_grid(k, std::move(grid));
        if (reduced_only) {
            mates.push_back(base.first_row_normalized());
        } else {
            // all k! symbol labelings
            std::vector<int> relabel(k);
            std::iota(relabel.begin(), relabel.end(), 1);
            do {
                std::vector<int> g(base.flat());
                for (auto& v : g) v = relabel[v - 1];
                mates.push_back(LatinSquare::from_grid(k, std::move(g)));
            } while (std::next_permutation(relabel.begin(), relabel.end()));
        }
    }
    std::sort(mates.begin(), mates.end());
    mates.erase(std::unique(mates.begin(), mates.end()), mates.end());
    return mates;
}

bool has_orthogonal_mate(const LatinSquare& L) {
    return disjoint_decomposition(L).has_value();
}

void enumerate_latin(int k, bool reduced,
                     const std::function<void(const LatinSquare&)>& yield) {
    if (k < 1) throw std::invalid_argument("order must be >= 1");
    if (k > 6) throw std::invalid_argument("enumeration guarded at order 6");
    if (k == 6 && !reduced)
        throw std::invalid_argument(
            "full enumeration guarded at order 6: use reduced mode");

    std::vector<int> grid(static_cast<size_t>(k) * k, 0);
    std::vector<std::vector<bool>> row_used(k, std::vector<bool>(k + 1, false));
    std::vector<std::vector<bool>> col_used(k, std::vector<bool>(k + 1, false));

    auto fixed = [&](int r, int c) -> int {
        if (!reduced) return 0;
        if (r == 0) return c + 1;
        if (c == 0) return r + 1;
        return 0;
    };

    auto rec = [&](auto&& self, int cell) -> void {
        if (cell == k * k) {
            yield(LatinSquare::from_grid(k, grid));
            return;
        }
        int r = cell / k, c = cell % k;
        int want = fixed(r, c);
        for (int v = want ? want : 1; v <= (want ? want : k); ++v) {
            if (row_used[r][v] || col_used[c][v]) continue;
            row_used[r][v] = col_used[c][v] = true;
            grid[cell] = v;
            self(self, cell + 1);
            row_used[r][v] = col_used[c][v] = false;
        }
        grid[cell] = 0;
    };
    rec(rec, 0);
}

std::uint64_t count_latin(int k, bool reduced) {
    std::uint64_t n = 0;
    enumerate_latin(k, reduced, [&](const LatinSquare&) { ++n; });
    return n;
}

}  // namespace netforge::combinat
