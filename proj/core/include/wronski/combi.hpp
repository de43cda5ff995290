#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wronski/rational.hpp"

namespace wronski {

// 1-indexed diagram cell (row i, column j).
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; throws unless parts are weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);

  // "3,2,1"; an empty string or "0" is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  // Row and column lengths, 1-indexed, zero outside the diagram.
  int row(int i) const noexcept;
  int col(int j) const noexcept;

  Partition conjugate() const;
  bool contains(const Partition& other) const;
  bool contains(Cell c) const noexcept;

  // Cells in row-reading order.
  std::vector<Cell> cells() const;
  std::vector<Cell> removable() const;
  std::vector<Cell> addable() const;
  Partition without(Cell c) const;
  Partition with(Cell c) const;
  int hook(Cell c) const;
  // Position of a cell in row-reading order.
  int cell_index(Cell c) const;

  std::string str() const;

  bool operator==(const Partition& other) const = default;
  auto operator<=>(const Partition& other) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  static Composition parse(std::string_view text);
  static Composition ones(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  // 1-indexed part.
  int part(int b) const { return parts_.at(static_cast<std::size_t>(b - 1)); }

  bool restricted() const noexcept;
  int n1() const noexcept;
  int n2() const noexcept;
  // n + 1 - (mu_1 + ... + mu_b).
  int bar(int b) const;
  Partition sorted() const;

  std::string str() const;
  bool operator==(const Composition& other) const = default;
  auto operator<=>(const Composition& other) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

class Tableau {
 public:
  Tableau() = default;
  // Throws unless rows fit the shape and entries weakly increase along rows and columns.
  Tableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int at(Cell c) const { return rows_.at(c.row - 1).at(c.col - 1); }
  int max_entry() const noexcept;

  // Histogram of entries 1..max_entry.
  std::vector<int> content() const;
  // shape(T restricted to entries <= b).
  Partition shape_upto(int b) const;
  // Cells holding entry b, row-reading order.
  std::vector<Cell> level(int b) const;
  std::vector<int> reading_word() const;
  bool standard() const;
  // Exchanges entries b and b+1 without validating the result.
  Tableau swapped(int b) const;

  std::string str() const;

  bool operator==(const Tableau& other) const = default;
  std::strong_ordering operator<=>(const Tableau& other) const;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

struct DominoStats {
  int singles = 0;
  int hdominoes = 0;
  int vdominoes = 0;
  int twoskews = 0;
  bool operator==(const DominoStats&) const = default;
};

struct SignedTableau {
  Tableau tableau;
  int sign = 1;
};

// Decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);
// All kappa contained in lambda.
std::vector<Partition> subpartitions(const Partition& lambda);
// Every composition of n with parts in {1,2}.
std::vector<Composition> compositions_12(int n);

// Manhattan distance between two cells.
int distance(Cell a, Cell b) noexcept;

std::int64_t syt_count(const Partition& lambda);

// Weakly increasing fillings of shape lambda with content mu, ordered by reading word.
std::vector<Tableau> enumerate_tab(const Partition& lambda, const Composition& mu);
std::vector<Tableau> standard_tableaux(const Partition& lambda);

DominoStats domino_stats(const Tableau& t);

// Murnaghan-Nakayama tableaux of content mu with their signs, ordered by reading word.
std::vector<SignedTableau> mn_filter(const Partition& lambda, const Composition& mu);
bool is_mn(const Tableau& t);
int mn_sign(const Tableau& t);

int inv_stat(const Tableau& t);
// Signed inversion count over SYT(lambda), without enumerating tableaux.
Integer iota(const Partition& lambda);

Tableau t_zero(const Partition& lambda);

struct SwapEdge {
  int from = 0;
  int to = 0;
  // Entries b and b+1 are exchanged.
  int b = 0;
};

struct SwapGraph {
  std::vector<Tableau> vertices;
  std::vector<SwapEdge> edges;
  // Spanning tree rooted at T0 (vertex index root); parent[root] = -1.
  int root = 0;
  std::vector<int> parent;
  std::vector<int> parent_edge;
  // Vertices in BFS order of the tree, root first.
  std::vector<int> order;

  int index_of(const Tableau& t) const;
  bool connected() const;
};

// seed 0 gives the canonical BFS tree; other seeds shuffle the exploration order.
SwapGraph swap_graph(const Partition& lambda, std::uint64_t seed = 0);

}  // namespace wronski
