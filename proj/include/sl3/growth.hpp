#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sl3/building.hpp"

namespace sl3 {

// Partition with at most three rows, parts weakly decreasing.
using Partition = std::array<int, 3>;

// Letters 1 (omega1) and 2 (omega2).
using TypeWord = std::vector<int>;

TypeWord parse_word(const std::string& s);
std::string word_str(const TypeWord& w);

bool is_partition(const Partition& p);
int size(const Partition& p);
std::string partition_str(const Partition& p);
DominantWeight weight_of(const Partition& p);
// True when outer/inner is a vertical strip (inner inside outer, at most one box per row).
bool is_vertical_strip(const Partition& inner, const Partition& outer);
// 1-based rows where a and b differ.
std::vector<int> dif(const Partition& a, const Partition& b);
// Entry at (i+1, j+1) of a unit square from (i,j), (i+1,j) and (i,j+1).
Partition local_rule(const Partition& g, const Partition& g_below, const Partition& g_right);

class GrowthDiagram {
public:
    static GrowthDiagram complete_from_row(const std::vector<Partition>& first_row);

    int n() const { return static_cast<int>(word_.size()); }
    const TypeWord& word() const { return word_; }
    int k() const { return rows_[0].back()[0]; }
    // Row i (0-based) lists gamma_{i+1, i+1}, ..., gamma_{i+1, i+1+n}.
    const std::vector<Partition>& row(int i) const { return rows_[static_cast<size_t>(i)]; }
    const std::vector<Partition>& first_row() const { return rows_[0]; }
    // gamma_{i,j} with 1-based indices and periodic extension; requires i <= j <= i+n.
    Partition at(int i, int j) const;
    // The same diagram read from the vertex r positions further along.
    GrowthDiagram rotated(int r) const;
    std::string str() const;

    friend bool operator==(const GrowthDiagram& a, const GrowthDiagram& b) { return a.rows_ == b.rows_; }

private:
    TypeWord word_;
    std::vector<std::vector<Partition>> rows_;
};

std::vector<Partition> promotion(const std::vector<Partition>& row);

// Row-strict tableau: rows[r] lists the entries in tableau row r+1.
using Tableau = std::array<std::vector<int>, 3>;
Tableau row_to_tableau(const std::vector<Partition>& row);
std::vector<Partition> tableau_to_row(const Tableau& t);

std::vector<GrowthDiagram> enumerate_diagrams(const TypeWord& w);
std::uint64_t dim_inv(const TypeWord& w);

}  // namespace sl3
