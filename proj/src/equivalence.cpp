#include "netforge/equivalence.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace netforge::equivalence {

namespace {

std::vector<int> swapped_rows(const LatinSquare& L, int a, int b) {
    const int k = L.order();
    std::vector<int> g = L.flat();
    for (int c = 0; c < k; ++c) std::swap(g[(a - 1) * k + c], g[(b - 1) * k + c]);
    return g;
}

std::vector<int> swapped_cols(const LatinSquare& L, int a, int b) {
    const int k = L.order();
    std::vector<int> g = L.flat();
    for (int r = 0; r < k; ++r) std::swap(g[r * k + (a - 1)], g[r * k + (b - 1)]);
    return g;
}

std::vector<int> swapped_symbols(const LatinSquare& L, int a, int b) {
    std::vector<int> g = L.flat();
    for (int& v : g) {
        if (v == a) v = b;
        else if (v == b) v = a;
    }
    return g;
}

void check_move_args(int k, int a, int b) {
    if (a < 1 || a > k || b < 1 || b > k) throw std::out_of_range("move index out of range");
    if (a == b) throw std::invalid_argument("move requires two distinct indices");
}

// Packed 4-limb key for a pair, base-k digits, 18 cells per limb. Exact for
// k <= 6 (6^18 < 2^47).
using Key = std::array<std::uint64_t, 4>;

struct KeyHash {
    size_t operator()(const Key& key) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t v : key) {
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<size_t>(h);
    }
};

void pack_square(const LatinSquare& L, std::uint64_t* limbs) {
    const int k = L.order();
    const auto& g = L.flat();
    limbs[0] = limbs[1] = 0;
    for (size_t i = 0; i < g.size(); ++i)
        limbs[i / 18] = limbs[i / 18] * static_cast<std::uint64_t>(k) +
                        static_cast<std::uint64_t>(g[i] - 1);
}

Key pack_pair(const OlsPair& p) {
    Key key{};
    pack_square(p.first, key.data());
    pack_square(p.second, key.data() + 2);
    return key;
}

OlsPair unpack_pair(const Key& key, int k) {
    auto unpack_square = [k](std::uint64_t* limbs) {
        std::vector<int> g(static_cast<size_t>(k) * k);
        for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i) {
            g[i] = static_cast<int>(limbs[i / 18] % k) + 1;
            limbs[i / 18] /= k;
        }
        return LatinSquare::from_grid(k, std::move(g));
    };
    Key tmp = key;
    LatinSquare a = unpack_square(tmp.data());
    LatinSquare b = unpack_square(tmp.data() + 2);
    return OlsPair(std::move(a), std::move(b));
}

// Lexicographically minimal symbol relabeling: symbols renumbered by first
// occurrence in row-major order.
std::vector<int> greedy_relabel(int k, const std::vector<int>& g) {
    std::vector<int> relabel(k + 1, 0), out(g.size());
    int next = 1;
    for (size_t i = 0; i < g.size(); ++i) {
        if (!relabel[g[i]]) relabel[g[i]] = next++;
        out[i] = relabel[g[i]];
    }
    return out;
}

std::vector<PairMove> generator_moves(int k) {
    std::vector<PairMove> moves;
    for (int i = 1; i < k; ++i) moves.push_back({PairMove::Kind::SwapRows, i, i + 1});
    for (int i = 1; i < k; ++i) moves.push_back({PairMove::Kind::SwapColumns, i, i + 1});
    for (int i = 1; i < k; ++i) moves.push_back({PairMove::Kind::SwapSymbolsFirst, i, i + 1});
    for (int i = 1; i < k; ++i) moves.push_back({PairMove::Kind::SwapSymbolsSecond, i, i + 1});
    moves.push_back({PairMove::Kind::TransposeFirst});
    moves.push_back({PairMove::Kind::TransposeSecond});
    moves.push_back({PairMove::Kind::SwapSquares});
    return moves;
}

struct OrbitScan {
    std::uint64_t size = 0;
    Key min_key;
    std::map<std::string, std::uint64_t> rejected;
};

// BFS over accepted moves. `visited` may be shared across calls: orbits of
// distinct seeds are disjoint (every generator is an involution, so
// reachability is an equivalence), and a shared set halves peak memory for
// exhaustive classification. on_state sees every new state exactly once.
template <typename OnState>
OrbitScan orbit_bfs(const OlsPair& seed, std::uint64_t budget,
                    std::unordered_set<Key, KeyHash>& visited, OnState&& on_state) {
    const int k = seed.first.order();
    if (k > 6) throw std::invalid_argument("pair orbits guarded at order 6");
    const auto moves = generator_moves(k);

    std::deque<Key> frontier;
    OrbitScan scan;

    Key start = pack_pair(seed);
    visited.insert(start);
    frontier.push_back(start);
    scan.min_key = start;
    scan.size = 1;
    on_state(start);

    while (!frontier.empty()) {
        Key cur = frontier.front();
        frontier.pop_front();
        OlsPair p = unpack_pair(cur, k);
        for (const PairMove& m : moves) {
            auto result = apply_pair_move(p, m);
            if (std::holds_alternative<MoveRejected>(result)) {
                ++scan.rejected[to_string(m.kind)];
                continue;
            }
            Key key = pack_pair(std::get<OlsPair>(result));
            if (visited.insert(key).second) {
                if (++scan.size > budget) throw BudgetExceeded(scan.size);
                if (key < scan.min_key) scan.min_key = key;
                frontier.push_back(key);
                on_state(key);
            }
        }
    }
    return scan;
}

std::uint64_t fnv1a(const std::vector<int>& a, const std::vector<int>& b) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](int v) {
        h ^= static_cast<std::uint64_t>(v);
        h *= 1099511628211ULL;
    };
    for (int v : a) mix(v);
    mix(-1);
    for (int v : b) mix(v);
    return h;
}

}  // namespace

LatinSquare apply_square_move(const LatinSquare& L, const SquareMove& m) {
    check_move_args(L.order(), m.a, m.b);
    switch (m.kind) {
        case SquareMove::Kind::SwapRows:
            return LatinSquare::from_grid(L.order(), swapped_rows(L, m.a, m.b));
        case SquareMove::Kind::SwapColumns:
            return LatinSquare::from_grid(L.order(), swapped_cols(L, m.a, m.b));
        case SquareMove::Kind::SwapSymbols:
            return LatinSquare::from_grid(L.order(), swapped_symbols(L, m.a, m.b));
    }
    throw std::logic_error("unreachable");
}

std::string to_string(PairMove::Kind kind) {
    switch (kind) {
        case PairMove::Kind::SwapRows: return "R1:swap_rows";
        case PairMove::Kind::SwapColumns: return "R2:swap_columns";
        case PairMove::Kind::SwapSymbolsFirst: return "R3:swap_symbols_first";
        case PairMove::Kind::SwapSymbolsSecond: return "R4:swap_symbols_second";
        case PairMove::Kind::TransposeFirst: return "R5:transpose_first";
        case PairMove::Kind::TransposeSecond: return "R5:transpose_second";
        case PairMove::Kind::SwapSquares: return "R6:swap_squares";
    }
    throw std::logic_error("unreachable");
}

std::variant<OlsPair, MoveRejected> apply_pair_move(const OlsPair& p, const PairMove& m) {
    const int k = p.first.order();
    LatinSquare a = p.first, b = p.second;
    switch (m.kind) {
        case PairMove::Kind::SwapRows:
            check_move_args(k, m.a, m.b);
            a = LatinSquare::from_grid(k, swapped_rows(a, m.a, m.b));
            b = LatinSquare::from_grid(k, swapped_rows(b, m.a, m.b));
            break;
        case PairMove::Kind::SwapColumns:
            check_move_args(k, m.a, m.b);
            a = LatinSquare::from_grid(k, swapped_cols(a, m.a, m.b));
            b = LatinSquare::from_grid(k, swapped_cols(b, m.a, m.b));
            break;
        case PairMove::Kind::SwapSymbolsFirst:
            check_move_args(k, m.a, m.b);
            a = LatinSquare::from_grid(k, swapped_symbols(a, m.a, m.b));
            break;
        case PairMove::Kind::SwapSymbolsSecond:
            check_move_args(k, m.a, m.b);
            b = LatinSquare::from_grid(k, swapped_symbols(b, m.a, m.b));
            break;
        case PairMove::Kind::TransposeFirst:
            a = a.transposed();
            break;
        case PairMove::Kind::TransposeSecond:
            b = b.transposed();
            break;
        case PairMove::Kind::SwapSquares:
            std::swap(a, b);
            break;
    }
    // verify orthogonality and extract a witness on failure
    std::vector<int> hit(static_cast<size_t>(k) * k, 0);
    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= k; ++c) {
            int idx = (a.at(r, c) - 1) * k + (b.at(r, c) - 1);
            if (hit[idx]) return MoveRejected{m, a.at(r, c), b.at(r, c)};
            hit[idx] = 1;
        }
    return OlsPair(std::move(a), std::move(b));
}

LatinSquare square_canonical_form(const LatinSquare& L) {
    const int k = L.order();
    if (k > 6) throw std::invalid_argument("square canonical form guarded at order 6");
    std::vector<int> rows(k), cols(k);
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<int> best;
    std::vector<int> arranged(static_cast<size_t>(k) * k);
    do {
        std::iota(cols.begin(), cols.end(), 0);
        do {
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c)
                    arranged[r * k + c] = L.flat()[rows[r] * k + cols[c]];
            std::vector<int> cand = greedy_relabel(k, arranged);
            if (best.empty() || cand < best) best = std::move(cand);
        } while (std::next_permutation(cols.begin(), cols.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));
    return LatinSquare::from_grid(k, std::move(best));
}

LatinSquare conjugate_normalize(const LatinSquare& L, int i, int j) {
    const int k = L.order();
    check_move_args(k, i, j);
    // rows i, j to positions 1, 2; remaining rows keep relative order
    std::vector<int> row_order{i - 1, j - 1};
    for (int r = 0; r < k; ++r)
        if (r != i - 1 && r != j - 1) row_order.push_back(r);
    std::vector<int> g(static_cast<size_t>(k) * k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) g[r * k + c] = L.flat()[row_order[r] * k + c];
    // sort columns by first-row entry; sigma_12 is untouched by this
    std::vector<int> col_order(k);
    std::iota(col_order.begin(), col_order.end(), 0);
    std::sort(col_order.begin(), col_order.end(), [&](int x, int y) { return g[x] < g[y]; });
    std::vector<int> w(static_cast<size_t>(k) * k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) w[r * k + c] = g[r * k + col_order[c]];
    return LatinSquare::from_grid(k, std::move(w));
}

OrbitResult pair_orbit(const OlsPair& p, std::uint64_t budget) {
    const int k = p.first.order();
    std::vector<Key> keys;
    std::unordered_set<Key, KeyHash> visited;
    OrbitScan scan = orbit_bfs(p, budget, visited, [&](const Key& key) { keys.push_back(key); });
    std::sort(keys.begin(), keys.end());
    OrbitResult out;
    out.members.reserve(keys.size());
    for (const Key& key : keys) out.members.push_back(unpack_pair(key, k));
    out.rejected_moves = std::move(scan.rejected);
    return out;
}

OlsPair pair_canonical_form(const OlsPair& p, std::uint64_t budget) {
    std::unordered_set<Key, KeyHash> visited;
    OrbitScan scan = orbit_bfs(p, budget, visited, [](const Key&) {});
    return unpack_pair(scan.min_key, p.first.order());
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("NETFORGE_BUDGET")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("NETFORGE_BUDGET must be a positive integer");
    }
    return 20'000'000ULL;
}

std::string stable_pair_hash(const OlsPair& p) {
    std::uint64_t h = fnv1a(p.first.flat(), p.second.flat());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Classification classify_ols(int k, std::uint64_t budget) {
    using combinat::cyclic_square;
    using combinat::enumerate_latin;
    using combinat::orthogonal_mates;
    using combinat::Permutation;

    Classification out;
    out.k = k;

    if (k == 6) {
        // OLS_6 is empty: no reduced square admits 6 disjoint transversals,
        // and every square is ~-equivalent to a reduced one.
        std::uint64_t with_cover = 0;
        enumerate_latin(6, true, [&](const LatinSquare& L) {
            if (combinat::disjoint_decomposition(L)) ++with_cover;
        });
        if (with_cover != 0) throw std::logic_error("unexpected order-6 decomposition");
        out.resolved_open_bound = "reduced sweep found no order-6 square with 6 disjoint transversals";
        return out;
    }
    if (k < 3 || k > 5) throw std::invalid_argument("classification supports k in {3,4,5,6}");

    // watched pairs for the k=5 bound resolution
    std::vector<Key> watch;
    if (k == 5) {
        OlsPair c1(cyclic_square(Permutation::from_cycles("(12345)", 5)),
                   cyclic_square(Permutation::from_cycles("(15432)", 5)));
        OlsPair c2(cyclic_square(Permutation::from_cycles("(12345)", 5)),
                   cyclic_square(Permutation::from_cycles("(14253)", 5)));
        watch = {pack_pair(c1), pack_pair(c2)};
    }
    std::vector<int> watch_class(watch.size(), -1);

    std::unordered_set<Key, KeyHash> seen;
    enumerate_latin(k, false, [&](const LatinSquare& L) {
        auto mates = orthogonal_mates(L, false);
        for (const auto& M : mates) {
            OlsPair p(L, M);
            Key key = pack_pair(p);
            ++out.total_pairs;
            if (seen.contains(key)) continue;
            int class_index = static_cast<int>(out.classes.size());
            OrbitScan scan = orbit_bfs(p, budget, seen, [&](const Key& s) {
                for (size_t w = 0; w < watch.size(); ++w)
                    if (s == watch[w]) watch_class[w] = class_index;
            });
            EquivalenceClass cls{unpack_pair(scan.min_key, k), scan.size, "", scan.rejected};
            cls.class_id = stable_pair_hash(cls.representative);
            out.classes.push_back(std::move(cls));
        }
    });

    if (static_cast<std::uint64_t>(seen.size()) != out.total_pairs)
        throw std::logic_error("orbit union does not cover OLS_k");

    if (k == 5) {
        bool merge = watch_class[0] >= 0 && watch_class[0] == watch_class[1];
        out.candidates_merge = merge;
        out.resolved_open_bound =
            std::string("|OLS_5/~'| = ") + std::to_string(out.classes.size()) +
            (merge ? "; the two candidate pairs fall in the same class"
                   : "; the two candidate pairs fall in distinct classes");
    }
    return out;
}

}  // namespace netforge::equivalence
