#include "qgr/shapes.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("Partition::part: 1-based index");
    return i <= rows() ? parts_[i - 1] : 0;
}

int Partition::box_count() const {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
}

bool Partition::contains(Box b) const {
    return b.row >= 1 && b.row <= rows() && b.col >= 1 && b.col <= parts_[b.row - 1];
}

bool Partition::fits_in_box(int max_rows, int max_cols) const {
    return rows() <= max_rows && cols() <= max_cols;
}

std::vector<Box> Partition::boxes() const {
    std::vector<Box> out;
    out.reserve(box_count());
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= parts_[i - 1]; ++j) out.push_back({i, j});
    return out;
}

bool validate_le(const Partition& shape, const std::set<Box>& black) {
    for (const Box& b : black)
        if (!shape.contains(b))
            throw std::invalid_argument("validate_le: black box outside the shape");
    for (const Box& b : black) {
        bool row_prefix_black = true;
        for (int j = 1; j < b.col && row_prefix_black; ++j)
            if (!black.contains({b.row, j})) row_prefix_black = false;
        if (row_prefix_black) continue;
        bool col_prefix_black = true;
        for (int i = 1; i < b.row && col_prefix_black; ++i)
            if (!black.contains({i, b.col})) col_prefix_black = false;
        if (!col_prefix_black) return false;
    }
    return true;
}

LeDiagram::LeDiagram(Partition shape, std::set<Box> black)
    : shape_(std::move(shape)), black_(std::move(black)) {
    if (!validate_le(shape_, black_))
        throw std::invalid_argument("LeDiagram: Le condition violated");
}

std::vector<Box> LeDiagram::whites() const {
    std::vector<Box> out;
    for (const Box& b : shape_.boxes())
        if (!black_.contains(b)) out.push_back(b);
    return out;
}

IndexSet::IndexSet(std::vector<int> elems) : elems_(std::move(elems)) {
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 1) throw std::invalid_argument("IndexSet: entries must be >= 1");
        if (i > 0 && elems_[i] <= elems_[i - 1])
            throw std::invalid_argument("IndexSet: entries must be strictly increasing");
    }
}

bool IndexSet::contains(int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool IndexSet::valid_for(int m, int n) const {
    return size() == m && (elems_.empty() || elems_.back() <= n);
}

Partition gamma_to_partition(int m, int n, const IndexSet& gamma) {
    if (!gamma.valid_for(m, n))
        throw std::invalid_argument("gamma_to_partition: gamma invalid for (m,n)");
    std::vector<int> parts;
    for (int i = 1; i <= m; ++i) parts.push_back(n - m - (gamma[i - 1] - i));
    return Partition(parts);
}

IndexSet partition_to_gamma(int m, int n, const Partition& lambda) {
    if (!lambda.fits_in_box(m, n - m))
        throw std::invalid_argument("partition_to_gamma: shape exceeds the m x (n-m) box");
    // Walk the SE border from the NE corner: in row i, first the horizontal
    // steps for the columns right of lambda_i, then the vertical step for
    // row i itself. The i-th vertical step gets label gamma_i.
    std::vector<int> gamma;
    int label = 0;
    int col = n - m;  // leftmost column not yet passed
    for (int i = 1; i <= m; ++i) {
        while (col > lambda.part(i)) {
            ++label;  // horizontal step
            --col;
        }
        ++label;  // vertical step closing row i
        gamma.push_back(label);
    }
    return IndexSet(gamma);
}

LadderBijection ladder_box_bijection(int m, int n, const IndexSet& gamma) {
    if (!gamma.valid_for(m, n))
        throw std::invalid_argument("ladder_box_bijection: gamma invalid for (m,n)");
    std::vector<int> complement;  // a_1 < ... < a_{n-m}
    for (int x = 1; x <= n; ++x)
        if (!gamma.contains(x)) complement.push_back(x);

    LadderBijection bij;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n - m; ++j) {
            int a_j = complement[j - 1];
            if (a_j <= gamma[m - i]) continue;  // j > gamma_{m+1-i} fails
            Box ladder_box{i, a_j};
            Box young_box{m + 1 - i, n - m + 1 - j};
            bij.ladder.push_back(ladder_box);
            bij.ladder_to_young.emplace(ladder_box, young_box);
            bij.young_to_ladder.emplace(young_box, ladder_box);
        }
    }
    return bij;
}

namespace {

// DFS over boxes in lex order; a box may be coloured black only if its row
// prefix or column prefix is already all black (decidable at assignment
// time because earlier boxes precede it in lex order).
void extend_coloring(const std::vector<Box>& boxes, size_t idx, std::set<Box>& black,
                     std::vector<std::set<Box>>& out) {
    if (idx == boxes.size()) {
        out.push_back(black);
        return;
    }
    const Box& b = boxes[idx];
    extend_coloring(boxes, idx + 1, black, out);  // white
    bool row_prefix_black = true;
    for (int j = 1; j < b.col && row_prefix_black; ++j)
        if (!black.contains({b.row, j})) row_prefix_black = false;
    bool col_prefix_black = row_prefix_black;
    if (!col_prefix_black) {
        col_prefix_black = true;
        for (int i = 1; i < b.row && col_prefix_black; ++i)
            if (!black.contains({i, b.col})) col_prefix_black = false;
    }
    if (row_prefix_black || col_prefix_black) {
        black.insert(b);
        extend_coloring(boxes, idx + 1, black, out);
        black.erase(b);
    }
}

}  // namespace

std::vector<LeDiagram> enumerate_le_diagrams(const Partition& shape) {
    std::vector<Box> boxes = shape.boxes();
    std::vector<std::set<Box>> blacks;
    std::set<Box> current;
    extend_coloring(boxes, 0, current, blacks);
    std::sort(blacks.begin(), blacks.end(), [](const std::set<Box>& a, const std::set<Box>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    std::vector<LeDiagram> out;
    out.reserve(blacks.size());
    for (auto& bl : blacks) out.emplace_back(shape, std::move(bl));
    return out;
}

namespace {

void extend_partition(std::vector<int>& parts, int remaining_rows, int max_part,
                      std::vector<Partition>& out) {
    out.emplace_back(parts);
    if (remaining_rows == 0) return;
    for (int p = max_part; p >= 1; --p) {
        parts.push_back(p);
        extend_partition(parts, remaining_rows - 1, p, out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(int max_rows, int max_cols) {
    std::vector<Partition> out;
    std::vector<int> parts;
    extend_partition(parts, max_rows, max_cols, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<IndexSet> all_index_sets(int m, int n) {
    std::vector<IndexSet> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == m) {
            out.emplace_back(current);
            return;
        }
        int needed = m - static_cast<int>(current.size());
        for (int x = next; x + needed - 1 <= n; ++x) {
            current.push_back(x);
            self(self, x + 1);
            current.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

int inversion_count(const std::vector<int>& perm) {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv;
}

HPrimeKey make_hprime_key(int m, int n, IndexSet gamma, LeDiagram diagram) {
    if (m < 1 || m >= n) throw std::invalid_argument("make_hprime_key: need 1 <= m < n");
    if (!gamma.valid_for(m, n))
        throw std::invalid_argument("make_hprime_key: gamma invalid for (m,n)");
    if (diagram.shape() != gamma_to_partition(m, n, gamma))
        throw std::invalid_argument("make_hprime_key: diagram shape inconsistent with gamma");
    return HPrimeKey{m, n, std::move(gamma), std::move(diagram)};
}

std::vector<HPrimeKey> enumerate_hprime_keys(int m, int n) {
    if (m < 1 || m >= n) throw std::invalid_argument("enumerate_hprime_keys: need 1 <= m < n");
    std::vector<HPrimeKey> out;
    for (const IndexSet& gamma : all_index_sets(m, n)) {
        Partition lambda = gamma_to_partition(m, n, gamma);
        for (LeDiagram& diagram : enumerate_le_diagrams(lambda))
            out.push_back(HPrimeKey{m, n, gamma, std::move(diagram)});
    }
    return out;
}

}  // namespace qgr
