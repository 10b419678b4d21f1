#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ehk {

// Partitions are weakly decreasing vectors of positive ints; the empty
// vector is the empty partition. Cells are 1-based (i, j) with i the row
// (part index) and j the position inside the part. The box offsets
// x(s) = i - 1 and y(s) = j - 1 carry q and t respectively in all box
// statistics.
using Partition = std::vector<int>;
using Cell = std::pair<int, int>;

bool is_partition(const Partition& p);
void require_partition(const Partition& p);

int p_weight(const Partition& p);
Partition p_conjugate(const Partition& p);
// Diagram containment: small fits inside big row by row.
bool p_contains(const Partition& big, const Partition& small);
// n(lambda) = sum (i-1) * lambda_i.
int p_nstat(const Partition& p);
// Dominance order: partial sums of a are >= those of b (equal weights).
bool p_dominates(const Partition& a, const Partition& b);

// Part at 1-based row i, zero beyond the last part.
int p_part(const Partition& p, int i);
// Generalized arm and leg: lambda_i - j and lambda'_j - i, valid for any
// cell position, negative outside the diagram.
int p_arm(const Partition& p, int i, int j);
int p_leg(const Partition& p, int i, int j);

// All cells in row-major order.
std::vector<Cell> p_cells(const Partition& p);
// Cells whose removal (resp. addition) leaves a partition, ordered by
// increasing column.
std::vector<Cell> p_removable(const Partition& p);
std::vector<Cell> p_addable(const Partition& p);
Partition p_add_cell(const Partition& p, const Cell& c);
Partition p_remove_cell(const Partition& p, const Cell& c);
// The single cell of big \ small; DomainError unless the difference is
// exactly one box.
Cell p_cell_diff(const Partition& big, const Partition& small);
// All cells of big outside small (big must contain small).
std::vector<Cell> p_skew_cells(const Partition& big, const Partition& small);

// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions_of(int n);

std::string p_to_string(const Partition& p);
// Accepts "(2,1)", "[2,1]", "2,1" or "" / "()" / "[]" for the empty one.
Partition parse_partition(const std::string& text);

// Tuples of partitions for higher rank; component r is indexed from 0.
using MultiPartition = std::vector<Partition>;
int mp_weight(const MultiPartition& m);
std::vector<MultiPartition> multipartitions_of(int n, int components);
std::string mp_to_string(const MultiPartition& m);

} // namespace ehk
