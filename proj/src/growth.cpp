#include "sl3/growth.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "sl3/errors.hpp"

namespace sl3 {

TypeWord parse_word(const std::string& s) {
    if (s.empty()) throw ParseError("empty type word");
    TypeWord w;
    for (char c : s) {
        if (c != '1' && c != '2') throw ParseError("type word letters must be 1 or 2: '" + s + "'");
        w.push_back(c - '0');
    }
    return w;
}

std::string word_str(const TypeWord& w) {
    std::string s;
    for (int x : w) s += static_cast<char>('0' + x);
    return s;
}

bool is_partition(const Partition& p) { return p[0] >= p[1] && p[1] >= p[2] && p[2] >= 0; }

int size(const Partition& p) { return p[0] + p[1] + p[2]; }

std::string partition_str(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < 3 && p[i] > 0; ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

DominantWeight weight_of(const Partition& p) { return DominantWeight::normalize(p); }

bool is_vertical_strip(const Partition& inner, const Partition& outer) {
    for (int i = 0; i < 3; ++i)
        if (outer[i] - inner[i] != 0 && outer[i] - inner[i] != 1) return false;
    return true;
}

std::vector<int> dif(const Partition& a, const Partition& b) {
    if (!is_vertical_strip(a, b) && !is_vertical_strip(b, a))
        throw NotVerticalStrip(partition_str(a) + " and " + partition_str(b));
    std::vector<int> rows;
    for (int i = 0; i < 3; ++i)
        if (a[i] != b[i]) rows.push_back(i + 1);
    return rows;
}

Partition local_rule(const Partition& g, const Partition& g_below, const Partition& g_right) {
    Partition r;
    for (int i = 0; i < 3; ++i) r[i] = g_below[i] + g_right[i] - g[i];
    std::sort(r.rbegin(), r.rend());
    if (!is_partition(r) || !is_vertical_strip(g_below, r) || !is_vertical_strip(r, g_right))
        throw NotAPartitionAfterSort("from " + partition_str(g) + ", " + partition_str(g_below) + ", " +
                                     partition_str(g_right));
    return r;
}

namespace {

std::string at_str(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

Partition complement(const Partition& p, int k) { return {k - p[2], k - p[1], k - p[0]}; }

TypeWord validate_chain(const std::vector<Partition>& row) {
    if (row.size() < 2) throw InvalidChain("a row needs at least two entries");
    if (row.front() != Partition{0, 0, 0}) throw InvalidChain("row must start at the empty partition");
    TypeWord w;
    for (size_t j = 0; j < row.size(); ++j) {
        if (!is_partition(row[j])) throw InvalidChain("entry " + std::to_string(j + 1) + " is not a partition");
        if (j == 0) continue;
        int step = size(row[j]) - size(row[j - 1]);
        if (!is_vertical_strip(row[j - 1], row[j]) || (step != 1 && step != 2))
            throw InvalidChain("step " + std::to_string(j) + " is not a vertical strip of size 1 or 2");
        w.push_back(step);
    }
    const Partition& last = row.back();
    if (last[0] != last[1] || last[1] != last[2]) throw InvalidChain("row must end at a rectangle");
    return w;
}

}  // namespace

GrowthDiagram GrowthDiagram::complete_from_row(const std::vector<Partition>& first_row) {
    GrowthDiagram d;
    d.word_ = validate_chain(first_row);
    const int n = d.n();
    const Partition pi = first_row.back();
    d.rows_.push_back(first_row);
    for (int i = 0; i < n; ++i) {
        const auto& prev = d.rows_.back();
        std::vector<Partition> next(static_cast<size_t>(n + 1));
        next[0] = {0, 0, 0};
        for (int m = 1; m < n; ++m) {
            try {
                next[m] = local_rule(prev[m], next[m - 1], prev[m + 1]);
            } catch (const NotAPartitionAfterSort& e) {
                throw LocalRuleViolation("square at " + at_str(i + 1, i + 1 + m) + ": " + e.what());
            }
        }
        next[n] = pi;
        if (!is_vertical_strip(next[n - 1], next[n]) || !is_vertical_strip(next[n - 1], prev[n]))
            throw LocalRuleViolation("boundary square at " + at_str(i + 2, i + 1 + n));
        d.rows_.push_back(std::move(next));
    }
    if (d.rows_[static_cast<size_t>(n)] != d.rows_[0])
        throw LocalRuleViolation("row " + std::to_string(n + 1) + " differs from row 1 (periodicity)");
    const int k = pi[0];
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= i + n; ++j)
            if (d.at(j, i + n) != complement(d.at(i, j), k))
                throw LocalRuleViolation("complement symmetry fails at " + at_str(i, j));
    return d;
}

Partition GrowthDiagram::at(int i, int j) const {
    const int n = this->n();
    if (j < i || j > i + n) throw std::out_of_range("index " + at_str(i, j) + " outside the staircase");
    int ii = ((i - 1) % n + n) % n + 1;
    int jj = j - (i - ii);
    return rows_[static_cast<size_t>(ii - 1)][static_cast<size_t>(jj - ii)];
}

GrowthDiagram GrowthDiagram::rotated(int r) const {
    const int n = this->n();
    r = ((r % n) + n) % n;
    GrowthDiagram d;
    d.word_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d.word_[i] = word_[(i + r) % n];
    for (int i = 0; i <= n; ++i) d.rows_.push_back(rows_[static_cast<size_t>((i + r) % n)]);
    return d;
}

std::string GrowthDiagram::str() const {
    std::string s;
    for (const auto& row : rows_) {
        for (size_t j = 0; j < row.size(); ++j) s += (j ? ", " : "") + partition_str(row[j]);
        s += "\n";
    }
    return s;
}

std::vector<Partition> promotion(const std::vector<Partition>& row) {
    return GrowthDiagram::complete_from_row(row).row(1);
}

Tableau row_to_tableau(const std::vector<Partition>& row) {
    validate_chain(row);
    Tableau t;
    for (size_t j = 1; j < row.size(); ++j)
        for (int r : dif(row[j], row[j - 1])) t[static_cast<size_t>(r - 1)].push_back(static_cast<int>(j));
    return t;
}

std::vector<Partition> tableau_to_row(const Tableau& t) {
    int n = 0;
    for (const auto& r : t)
        for (int x : r) n = std::max(n, x);
    std::vector<Partition> row{{0, 0, 0}};
    for (int j = 1; j <= n; ++j) {
        Partition p = row.back();
        for (int r = 0; r < 3; ++r)
            if (std::count(t[r].begin(), t[r].end(), j)) ++p[r];
        row.push_back(p);
    }
    validate_chain(row);
    return row;
}

namespace {

// Vertical strips of a given size as row subsets, in lexicographic order.
const std::vector<std::vector<int>>& strips(int size) {
    static const std::vector<std::vector<int>> one{{0}, {1}, {2}};
    static const std::vector<std::vector<int>> two{{0, 1}, {0, 2}, {1, 2}};
    return size == 1 ? one : two;
}

bool add_strip(const Partition& p, const std::vector<int>& rows, int k, Partition& out) {
    out = p;
    for (int r : rows) ++out[r];
    return is_partition(out) && out[0] <= k;
}

int box_count(const TypeWord& w) {
    int total = 0;
    for (int x : w) {
        if (x != 1 && x != 2) throw InvalidChain("type word letters must be 1 or 2");
        total += x;
    }
    return total;
}

}  // namespace

std::vector<GrowthDiagram> enumerate_diagrams(const TypeWord& w) {
    std::vector<GrowthDiagram> out;
    const int total = box_count(w);
    if (total % 3 != 0) return out;
    const int k = total / 3;
    std::vector<Partition> row{{0, 0, 0}};
    std::function<void(size_t)> dfs = [&](size_t j) {
        if (j == w.size()) {
            out.push_back(GrowthDiagram::complete_from_row(row));
            return;
        }
        for (const auto& s : strips(w[j])) {
            Partition next;
            if (!add_strip(row.back(), s, k, next)) continue;
            row.push_back(next);
            dfs(j + 1);
            row.pop_back();
        }
    };
    dfs(0);
    return out;
}

std::uint64_t dim_inv(const TypeWord& w) {
    const int total = box_count(w);
    if (total % 3 != 0) return 0;
    const int k = total / 3;
    std::map<Partition, std::uint64_t> layer{{{0, 0, 0}, 1}};
    for (int letter : w) {
        std::map<Partition, std::uint64_t> next;
        for (const auto& [p, count] : layer)
            for (const auto& s : strips(letter)) {
                Partition q;
                if (add_strip(p, s, k, q)) next[q] += count;
            }
        layer = std::move(next);
    }
    auto it = layer.find({k, k, k});
    return it == layer.end() ? 0 : it->second;
}

}  // namespace sl3
