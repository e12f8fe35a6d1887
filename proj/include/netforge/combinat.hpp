// Core Latin-square objects: permutations, squares, transversals,
// orthogonality and orthogonal-mate search.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace netforge::combinat {

// A permutation of {1..k}. Stored 0-based internally; every interface
// (images, cycle strings, serialization) is 1-based.
class Permutation {
public:
    explicit Permutation(int k);  // identity
    // images[i] is the 1-based image of i+1; must be a bijection of {1..k}.
    static Permutation from_images(std::vector<int> images);
    // Parses cycle notation, e.g. "(1 2)(3 4)" or "(123)" (single digits
    // only in the compact form). Unlisted points are fixed.
    static Permutation from_cycles(const std::string& text, int k);

    int order() const { return static_cast<int>(map_.size()); }
    int image(int i) const { return map_[i - 1] + 1; }

    Permutation compose(const Permutation& inner) const;  // this ∘ inner
    Permutation inverse() const;

    bool is_identity() const;
    bool is_fixed_point_free() const;
    bool is_k_cycle() const;
    bool is_even() const;

    std::string cycle_string() const;
    std::vector<int> one_line() const;  // 1-based images

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> map_;  // 0-based images
};

// Multiset of cycle lengths >= 2, sorted ascending; fixed points excluded.
struct CycleType {
    std::vector<int> parts;
    bool operator==(const CycleType&) const = default;
    std::string to_string() const;
};

CycleType cycle_type(const Permutation& p);

class LatinSquare {
public:
    // grid is row-major, 1-based symbols; throws std::invalid_argument if
    // the grid is not Latin.
    static LatinSquare from_grid(int k, std::vector<int> grid);
    static bool is_latin(int k, std::span<const int> grid);

    int order() const { return k_; }
    int at(int row, int col) const { return grid_[(row - 1) * k_ + (col - 1)]; }
    const std::vector<int>& flat() const { return grid_; }

    LatinSquare transposed() const;
    bool is_reduced() const;  // first row and first column are 1..k
    // Relabels symbols so that the first row reads 1..k.
    LatinSquare first_row_normalized() const;

    std::string to_text() const;  // k lines of k space-separated integers
    static LatinSquare from_text(const std::string& text);

    bool operator==(const LatinSquare&) const = default;
    bool operator<(const LatinSquare& o) const { return grid_ < o.grid_; }

private:
    LatinSquare(int k, std::vector<int> grid) : k_(k), grid_(std::move(grid)) {}
    int k_ = 0;
    std::vector<int> grid_;
};

// k cells, one per row; cols[r] is the 0-based column used in row r+1.
struct Transversal {
    std::vector<int> cols;
    bool operator==(const Transversal&) const = default;
    bool operator<(const Transversal& o) const { return cols < o.cols; }
};

struct OlsPair {
    LatinSquare first;
    LatinSquare second;

    OlsPair(LatinSquare a, LatinSquare b);  // throws if not orthogonal
    bool operator==(const OlsPair&) const = default;
    bool operator<(const OlsPair& o) const;
};

// sigma with sigma(L[i][p]) = L[j][p] for all p. Requires i != j.
Permutation row_permutation(const LatinSquare& L, int i, int j);

// Multiplication-table square of the k-cycle sigma: first row 1..k, each
// following row is sigma applied entrywise to the previous one.
LatinSquare cyclic_square(const Permutation& sigma);

// First row 1..k; row m+1 = sigmas[m] applied entrywise to row m. Throws
// "inconsistent permutation sequence" if the result is not Latin.
LatinSquare from_permutations(std::span<const Permutation> sigmas);

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

// All transversals, deterministic order (lexicographic by column-of-each-row).
std::vector<Transversal> find_transversals(const LatinSquare& L);

// One exact cover of the k^2 cells by k disjoint transversals, if any;
// deterministic first under the fixed transversal order.
std::optional<std::vector<Transversal>> disjoint_decomposition(const LatinSquare& L);

// Every exact cover by k disjoint transversals, as index lists into
// find_transversals(L), in deterministic order.
std::vector<std::vector<int>> all_disjoint_decompositions(const LatinSquare& L);

// All mates M with (L, M) orthogonal. Symbol m goes to the m-th transversal
// of a decomposition; the full list applies all k! labelings, the reduced
// list keeps one representative per labeling class (first row = 1..k).
std::vector<LatinSquare> orthogonal_mates(const LatinSquare& L, bool reduced_only);

bool has_orthogonal_mate(const LatinSquare& L);

// Streams every Latin square of order k exactly once, lexicographic by
// flattened grid. Guarded at k <= 6; reduced mode fixes the first row and
// first column to 1..k.
void enumerate_latin(int k, bool reduced,
                     const std::function<void(const LatinSquare&)>& yield);

std::uint64_t count_latin(int k, bool reduced);

}  // namespace netforge::combinat
