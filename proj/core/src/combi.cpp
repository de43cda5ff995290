#include "wronski/combi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

namespace wronski {

namespace {

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) {
      token.clear();
      return;
    }
    auto last = token.find_last_not_of(" \t");
    std::string t = token.substr(first, last - first + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed integer list: " + std::string(text));
    }
    if (used != t.size()) throw std::invalid_argument("malformed integer list: " + std::string(text));
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      if (token.find_first_not_of(" \t") == std::string::npos)
        throw std::invalid_argument("malformed integer list: " + std::string(text));
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

// ---- Partition ----

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) { return Partition(parse_ints(text)); }

int Partition::row(int i) const noexcept {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::col(int j) const noexcept {
  if (j < 1) return 0;
  int c = 0;
  for (int p : parts_) {
    if (p >= j) ++c;
    else break;
  }
  return c;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; j <= row(1); ++j) c.push_back(col(j));
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i)
    if (other.row(i) > row(i)) return false;
  return true;
}

bool Partition::contains(Cell c) const noexcept {
  return c.row >= 1 && c.col >= 1 && c.col <= row(c.row);
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= row(i); ++j) out.push_back({i, j});
  return out;
}

std::vector<Cell> Partition::removable() const {
  std::vector<Cell> out;
  for (int i = 1; i <= length(); ++i)
    if (row(i) > row(i + 1)) out.push_back({i, row(i)});
  return out;
}

std::vector<Cell> Partition::addable() const {
  std::vector<Cell> out;
  for (int i = 1; i <= length() + 1; ++i)
    if (i == 1 || row(i) < row(i - 1)) out.push_back({i, row(i) + 1});
  return out;
}

Partition Partition::without(Cell c) const {
  std::vector<int> p = parts_;
  if (c.row < 1 || c.row > length() || p[static_cast<std::size_t>(c.row - 1)] != c.col)
    throw std::invalid_argument("cell is not at the end of its row");
  --p[static_cast<std::size_t>(c.row - 1)];
  return Partition(std::move(p));
}

Partition Partition::with(Cell c) const {
  std::vector<int> p = parts_;
  if (c.row == length() + 1) p.push_back(0);
  if (c.row < 1 || c.row > static_cast<int>(p.size()) || p[static_cast<std::size_t>(c.row - 1)] + 1 != c.col)
    throw std::invalid_argument("cell is not addable");
  ++p[static_cast<std::size_t>(c.row - 1)];
  return Partition(std::move(p));
}

int Partition::hook(Cell c) const {
  return row(c.row) - c.col + col(c.col) - c.row + 1;
}

int Partition::cell_index(Cell c) const {
  if (!contains(c)) throw std::out_of_range("cell outside the diagram");
  int idx = 0;
  for (int i = 1; i < c.row; ++i) idx += row(i);
  return idx + c.col - 1;
}

std::string Partition::str() const { return join(parts_); }

// ---- Composition ----

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("composition parts must be positive");
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::parse(std::string_view text) { return Composition(parse_ints(text)); }

Composition Composition::ones(int n) { return Composition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

bool Composition::restricted() const noexcept {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1 || p == 2; });
}

int Composition::n1() const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), 1));
}

int Composition::n2() const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), 2));
}

int Composition::bar(int b) const {
  int s = 0;
  for (int i = 1; i <= b; ++i) s += part(i);
  return size_ + 1 - s;
}

Partition Composition::sorted() const {
  std::vector<int> p = parts_;
  std::sort(p.begin(), p.end(), std::greater<>());
  return Partition(std::move(p));
}

std::string Composition::str() const { return join(parts_); }

// ---- Tableau ----

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw std::invalid_argument("tableau row count does not match shape");
  for (int i = 1; i <= shape_.length(); ++i) {
    const auto& r = rows_[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(r.size()) != shape_.row(i))
      throw std::invalid_argument("tableau row length does not match shape");
    for (int j = 1; j <= shape_.row(i); ++j) {
      int v = r[static_cast<std::size_t>(j - 1)];
      if (v < 1) throw std::invalid_argument("tableau entries must be positive");
      if (j > 1 && r[static_cast<std::size_t>(j - 2)] > v)
        throw std::invalid_argument("tableau rows must weakly increase");
      if (i > 1 && rows_[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)] > v)
        throw std::invalid_argument("tableau columns must weakly increase");
    }
  }
}

int Tableau::max_entry() const noexcept {
  int m = 0;
  for (const auto& r : rows_)
    for (int v : r) m = std::max(m, v);
  return m;
}

std::vector<int> Tableau::content() const {
  std::vector<int> h(static_cast<std::size_t>(max_entry()), 0);
  for (const auto& r : rows_)
    for (int v : r) ++h[static_cast<std::size_t>(v - 1)];
  return h;
}

Partition Tableau::shape_upto(int b) const {
  std::vector<int> p;
  for (const auto& r : rows_) {
    int c = static_cast<int>(std::count_if(r.begin(), r.end(), [b](int v) { return v <= b; }));
    if (c == 0) break;
    p.push_back(c);
  }
  return Partition(std::move(p));
}

std::vector<Cell> Tableau::level(int b) const {
  std::vector<Cell> out;
  for (int i = 1; i <= shape_.length(); ++i)
    for (int j = 1; j <= shape_.row(i); ++j)
      if (at({i, j}) == b) out.push_back({i, j});
  return out;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
  return w;
}

bool Tableau::standard() const {
  auto w = reading_word();
  std::sort(w.begin(), w.end());
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] != static_cast<int>(k + 1)) return false;
  return true;
}

Tableau Tableau::swapped(int b) const {
  Tableau t = *this;
  for (auto& r : t.rows_)
    for (int& v : r) {
      if (v == b) v = b + 1;
      else if (v == b + 1) v = b;
    }
  return t;
}

std::string Tableau::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ',';
    s += '[' + join(rows_[i]) + ']';
  }
  return s + ']';
}

std::strong_ordering Tableau::operator<=>(const Tableau& other) const {
  if (auto c = shape_ <=> other.shape_; c != 0) return c;
  return reading_word() <=> other.reading_word();
}

// ---- free functions ----

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int i) -> void {
    if (i > lambda.length()) {
      out.emplace_back(cur);
      return;
    }
    int bound = std::min(lambda.row(i), i == 1 ? lambda.row(1) : cur.back());
    for (int v = bound; v >= 0; --v) {
      cur.push_back(v);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Composition> compositions_12(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= std::min(2, remaining); ++p) {
      cur.push_back(p);
      self(self, remaining - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

int distance(Cell a, Cell b) noexcept { return std::abs(a.row - b.row) + std::abs(a.col - b.col); }

std::int64_t syt_count(const Partition& lambda) {
  Integer num = factorial(static_cast<unsigned>(lambda.size()));
  Integer den = 1;
  for (Cell c : lambda.cells()) den *= lambda.hook(c);
  Integer q = num / den;
  if (!q.fits_slong_p()) throw std::overflow_error("syt_count exceeds 64 bits");
  return q.get_si();
}

std::vector<Tableau> enumerate_tab(const Partition& lambda, const Composition& mu) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("|mu| must equal |lambda|");
  std::vector<Tableau> out;
  const int d = lambda.length();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) rows[static_cast<std::size_t>(i - 1)].assign(static_cast<std::size_t>(lambda.row(i)), 0);

  // shape[i] holds the current row lengths of the filled region.
  std::vector<int> shape(static_cast<std::size_t>(d), 0);
  auto fill_level = [&](auto&& self, int b) -> void {
    if (b > mu.length()) {
      out.emplace_back(lambda, rows);
      return;
    }
    const std::vector<int> base = shape;
    std::vector<int> next(static_cast<std::size_t>(d), 0);
    // Choose next row lengths row by row, keeping a partition inside lambda.
    auto choose = [&](auto&& choose_self, int i, int remaining) -> void {
      if (i > d) {
        if (remaining != 0) return;
        for (int r = 0; r < d; ++r)
          for (int j = base[static_cast<std::size_t>(r)]; j < next[static_cast<std::size_t>(r)]; ++j)
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = b;
        shape = next;
        self(self, b + 1);
        shape = base;
        return;
      }
      const auto ui = static_cast<std::size_t>(i - 1);
      int lo = base[ui];
      int hi = lambda.row(i);
      if (i > 1) hi = std::min(hi, next[ui - 1]);
      for (int v = lo; v <= hi; ++v) {
        if (v - lo > remaining) break;
        next[ui] = v;
        choose_self(choose_self, i + 1, remaining - (v - lo));
      }
    };
    choose(choose, 1, mu.part(b));
  };
  fill_level(fill_level, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  return enumerate_tab(lambda, Composition::ones(lambda.size()));
}

DominoStats domino_stats(const Tableau& t) {
  DominoStats s;
  int levels = t.max_entry();
  for (int b = 1; b <= levels; ++b) {
    auto cells = t.level(b);
    if (cells.size() == 1) {
      ++s.singles;
    } else if (cells.size() == 2) {
      const Cell& a = cells[0];
      const Cell& c = cells[1];
      if (a.row == c.row && std::abs(a.col - c.col) == 1) ++s.hdominoes;
      else if (a.col == c.col && std::abs(a.row - c.row) == 1) ++s.vdominoes;
      else ++s.twoskews;
    } else if (cells.size() > 2) {
      throw std::invalid_argument("domino statistics need content parts in {1,2}");
    }
  }
  return s;
}

namespace {

// Level set is a connected skew shape with no 2x2 square.
bool is_border_strip(const std::vector<Cell>& cells) {
  if (cells.empty()) return false;
  std::map<Cell, bool> in;
  for (Cell c : cells) in[c] = true;
  for (Cell c : cells)
    if (in.count({c.row + 1, c.col}) && in.count({c.row, c.col + 1}) && in.count({c.row + 1, c.col + 1}))
      return false;
  std::vector<Cell> stack{cells.front()};
  std::map<Cell, bool> seen{{cells.front(), true}};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (Cell nb : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}})
      if (in.count(nb) && !seen.count(nb)) {
        seen[nb] = true;
        stack.push_back(nb);
      }
  }
  return seen.size() == cells.size();
}

int strip_rows(const std::vector<Cell>& cells) {
  std::vector<int> r;
  for (Cell c : cells) r.push_back(c.row);
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return static_cast<int>(r.size());
}

}  // namespace

bool is_mn(const Tableau& t) {
  for (int b = 1; b <= t.max_entry(); ++b)
    if (!is_border_strip(t.level(b))) return false;
  return true;
}

int mn_sign(const Tableau& t) {
  int s = 1;
  for (int b = 1; b <= t.max_entry(); ++b)
    if ((strip_rows(t.level(b)) - 1) % 2 != 0) s = -s;
  return s;
}

std::vector<SignedTableau> mn_filter(const Partition& lambda, const Composition& mu) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("|mu| must equal |lambda|");
  std::vector<SignedTableau> out;
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= lambda.length(); ++i) rows.emplace_back(static_cast<std::size_t>(lambda.row(i)), 0);

  // Peel border strips of size mu_b from the outside in, largest entry first.
  auto peel = [&](auto&& self, const Partition& shape, int b, int sign) -> void {
    if (b == 0) {
      if (shape.empty()) out.push_back({Tableau(lambda, rows), sign});
      return;
    }
    const int r = mu.part(b);
    for (const Partition& inner : subpartitions(shape)) {
      if (inner.size() != shape.size() - r) continue;
      std::vector<Cell> strip;
      for (Cell c : shape.cells())
        if (!inner.contains(c)) strip.push_back(c);
      if (!is_border_strip(strip)) continue;
      for (Cell c : strip) rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = b;
      int s = (strip_rows(strip) - 1) % 2 == 0 ? sign : -sign;
      self(self, inner, b - 1, s);
    }
  };
  peel(peel, lambda, mu.length(), 1);
  std::sort(out.begin(), out.end(), [](const SignedTableau& a, const SignedTableau& b) { return a.tableau < b.tableau; });
  return out;
}

int inv_stat(const Tableau& t) {
  const auto cells = t.shape().cells();
  int inv = 0;
  for (Cell a : cells)
    for (Cell b : cells)
      if (a.row < b.row && t.at(a) > t.at(b)) ++inv;
  return inv;
}

Integer iota(const Partition& lambda) {
  // Adding the largest entry in row i creates one inversion with each cell in a lower row.
  std::map<Partition, Integer> memo;
  auto rec = [&](auto&& self, const Partition& shape) -> Integer {
    if (shape.empty()) return 1;
    if (auto it = memo.find(shape); it != memo.end()) return it->second;
    Integer total = 0;
    for (Cell c : shape.removable()) {
      int below = 0;
      for (int i = c.row + 1; i <= shape.length(); ++i) below += shape.row(i);
      Integer sub = self(self, shape.without(c));
      if (below % 2 == 0) total += sub;
      else total -= sub;
    }
    memo.emplace(shape, total);
    return total;
  };
  return rec(rec, lambda);
}

Tableau t_zero(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  int k = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    std::vector<int> r;
    for (int j = 1; j <= lambda.row(i); ++j) r.push_back(++k);
    rows.push_back(std::move(r));
  }
  return Tableau(lambda, std::move(rows));
}

int SwapGraph::index_of(const Tableau& t) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), t);
  if (it == vertices.end() || !(*it == t)) return -1;
  return static_cast<int>(it - vertices.begin());
}

bool SwapGraph::connected() const { return order.size() == vertices.size(); }

SwapGraph swap_graph(const Partition& lambda, std::uint64_t seed) {
  SwapGraph g;
  g.vertices = standard_tableaux(lambda);
  const int n = lambda.size();
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    const Tableau& t = g.vertices[static_cast<std::size_t>(v)];
    for (int b = 1; b < n; ++b) {
      Cell p = t.level(b).front();
      Cell q = t.level(b + 1).front();
      if (p.row == q.row || p.col == q.col) continue;
      int w = g.index_of(t.swapped(b));
      if (w > v) g.edges.push_back({v, w, b});
    }
  }
  g.root = g.index_of(t_zero(lambda));
  const auto nv = g.vertices.size();
  g.parent.assign(nv, -1);
  g.parent_edge.assign(nv, -1);
  std::vector<std::vector<int>> adj(nv);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    adj[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].from)].push_back(e);
    adj[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].to)].push_back(e);
  }
  std::mt19937_64 rng(seed);
  if (seed != 0)
    for (auto& a : adj) std::shuffle(a.begin(), a.end(), rng);
  std::vector<bool> seen(nv, false);
  std::queue<int> q;
  q.push(g.root);
  seen[static_cast<std::size_t>(g.root)] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    g.order.push_back(v);
    for (int e : adj[static_cast<std::size_t>(v)]) {
      const SwapEdge& ed = g.edges[static_cast<std::size_t>(e)];
      int w = ed.from == v ? ed.to : ed.from;
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      g.parent[static_cast<std::size_t>(w)] = v;
      g.parent_edge[static_cast<std::size_t>(w)] = e;
      q.push(w);
    }
  }
  return g;
}

}  // namespace wronski
