// Dancing-links exact cover over a fixed universe of columns.
#pragma once

#include <functional>
#include <vector>

namespace netforge::exact_cover {

// Rows are added as sorted lists of column indices in [0, n_cols).
// solve() reports covers as lists of row ids in the order rows were added;
// the search picks the lowest-count column first and tries rows in
// insertion order, so the first cover found is deterministic.
class DancingLinks {
public:
    explicit DancingLinks(int n_cols);

    void add_row(const std::vector<int>& cols);

    // Calls on_cover for each exact cover (row ids, sorted). Returning
    // false from the callback stops the search.
    void solve(const std::function<bool(const std::vector<int>&)>& on_cover);

    // Convenience: first cover, if any.
    bool first_cover(std::vector<int>& out);

private:
    struct Node {
        int left, right, up, down;
        int col;     // column header index, -1 for root/headers themselves
        int row_id;  // payload for row nodes
    };

    void cover(int c);
    void uncover(int c);
    bool search(const std::function<bool(const std::vector<int>&)>& on_cover);

    std::vector<Node> nodes_;
    std::vector<int> col_count_;
    std::vector<int> stack_;
    int n_cols_;
    int next_row_id_ = 0;
};

}  // namespace netforge::exact_cover
