#include "netforge/exact_cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace netforge::exact_cover {

DancingLinks::DancingLinks(int n_cols) : n_cols_(n_cols) {
    // node 0 is the root; nodes 1..n_cols are column headers
    nodes_.resize(n_cols + 1);
    col_count_.assign(n_cols, 0);
    for (int i = 0; i <= n_cols; ++i) {
        nodes_[i].left = (i + n_cols) % (n_cols + 1);
        nodes_[i].right = (i + 1) % (n_cols + 1);
        nodes_[i].up = i;
        nodes_[i].down = i;
        nodes_[i].col = i - 1;
        nodes_[i].row_id = -1;
    }
}

void DancingLinks::add_row(const std::vector<int>& cols) {
    if (cols.empty()) throw std::invalid_argument("exact cover row must be nonempty");
    int row_id = next_row_id_++;
    int first = -1;
    for (int c : cols) {
        if (c < 0 || c >= n_cols_) throw std::out_of_range("column index");
        int header = c + 1;
        Node n{};
        n.col = header;
        n.row_id = row_id;
        n.up = nodes_[header].up;
        n.down = header;
        int idx = static_cast<int>(nodes_.size());
        nodes_[nodes_[header].up].down = idx;
        nodes_[header].up = idx;
        ++col_count_[c];
        if (first < 0) {
            n.left = idx;
            n.right = idx;
            nodes_.push_back(n);
            first = idx;
        } else {
            n.left = nodes_[first].left;
            n.right = first;
            nodes_.push_back(n);
            nodes_[nodes_[first].left].right = idx;
            nodes_[first].left = idx;
        }
    }
}

void DancingLinks::cover(int header) {
    nodes_[nodes_[header].right].left = nodes_[header].left;
    nodes_[nodes_[header].left].right = nodes_[header].right;
    for (int i = nodes_[header].down; i != header; i = nodes_[i].down) {
        for (int j = nodes_[i].right; j != i; j = nodes_[j].right) {
            nodes_[nodes_[j].down].up = nodes_[j].up;
            nodes_[nodes_[j].up].down = nodes_[j].down;
            --col_count_[nodes_[j].col - 1];
        }
    }
}

void DancingLinks::uncover(int header) {
    for (int i = nodes_[header].up; i != header; i = nodes_[i].up) {
        for (int j = nodes_[i].left; j != i; j = nodes_[j].left) {
            ++col_count_[nodes_[j].col - 1];
            nodes_[nodes_[j].down].up = j;
            nodes_[nodes_[j].up].down = j;
        }
    }
    nodes_[nodes_[header].right].left = header;
    nodes_[nodes_[header].left].right = header;
}

bool DancingLinks::search(const std::function<bool(const std::vector<int>&)>& on_cover) {
    if (nodes_[0].right == 0) {
        std::vector<int> cover_rows = stack_;
        std::sort(cover_rows.begin(), cover_rows.end());
        return on_cover(cover_rows);
    }
    // lowest-count column heuristic, ties broken by position
    int best = -1, best_count = -1;
    for (int h = nodes_[0].right; h != 0; h = nodes_[h].right) {
        int c = col_count_[h - 1];
        if (best < 0 || c < best_count) {
            best = h;
            best_count = c;
        }
    }
    if (best_count == 0) return true;
    cover(best);
    for (int i = nodes_[best].down; i != best; i = nodes_[i].down) {
        stack_.push_back(nodes_[i].row_id);
        for (int j = nodes_[i].right; j != i; j = nodes_[j].right) cover(nodes_[j].col);
        bool keep_going = search(on_cover);
        for (int j = nodes_[i].left; j != i; j = nodes_[j].left) uncover(nodes_[j].col);
        stack_.pop_back();
        if (!keep_going) {
            uncover(best);
            return false;
        }
    }
    uncover(best);
    return true;
}

void DancingLinks::solve(const std::function<bool(const std::vector<int>&)>& on_cover) {
    stack_.clear();
    search(on_cover);
}

bool DancingLinks::first_cover(std::vector<int>& out) {
    bool found = false;
    solve([&](const std::vector<int>& rows) {
        out = rows;
        found = true;
        return false;
    });
    return found;
}

}  // namespace netforge::exact_cover
