#include "vk/smith.hpp"

#include <algorithm>
#include <set>

#include "vk/error.hpp"

namespace vk {

namespace {

using Entry = IntegerMatrix::Entry;
using Row = std::vector<Entry>;

auto find_col(Row& row, std::size_t c) {
  return std::lower_bound(row.begin(), row.end(), c,
                          [](const Entry& e, std::size_t col) { return e.first < col; });
}

// Elimination state: rows plus a column index, so both row and column
// operations touch only the nonzero entries they need.
class Eliminator {
 public:
  explicit Eliminator(const IntegerMatrix& m) : rows_(m.rows()), col_rows_(m.cols()) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      rows_[r] = m.row(r);
      for (const auto& [c, v] : rows_[r]) col_rows_[c].insert(r);
      if (!rows_[r].empty()) active_.insert(r);
    }
  }

  std::vector<Integer> run() {
    std::vector<Integer> diagonal;
    while (!active_.empty()) {
      const auto [r, c] = pick_pivot();
      const Integer p = rows_[r][find_col(rows_[r], c) - rows_[r].begin()].second;
      bool clean = true;

      std::vector<std::size_t> others;
      for (std::size_t i : col_rows_[c]) {
        if (i != r) others.push_back(i);
      }
      for (std::size_t i : others) {
        const Integer a = find_col(rows_[i], c)->second;
        const Integer q = a / p;
        if (q != 0) add_row_multiple(i, -q, r);
        if (a - q * p != 0) clean = false;
      }

      const Row pivot_row = rows_[r];
      for (const auto& [j, v] : pivot_row) {
        if (j == c) continue;
        const Integer q = v / p;
        if (q != 0) add_col_multiple(j, -q, c);
        if (v - q * p != 0) clean = false;
      }

      if (clean) {
        diagonal.push_back(abs(p));
        col_rows_[c].erase(r);
        rows_[r].clear();
        active_.erase(r);
      }
    }
    return diagonal;
  }

 private:
  std::pair<std::size_t, std::size_t> pick_pivot() const {
    std::size_t best_r = 0;
    std::size_t best_c = 0;
    Integer best = -1;
    for (std::size_t r : active_) {
      for (const auto& [c, v] : rows_[r]) {
        const Integer a = abs(v);
        if (best < 0 || a < best) {
          best = a;
          best_r = r;
          best_c = c;
          if (best == 1) return {best_r, best_c};
        }
      }
    }
    return {best_r, best_c};
  }

  // row_i += f * row_r
  void add_row_multiple(std::size_t i, const Integer& f, std::size_t r) {
    const Row& b = rows_[r];
    Row& a = rows_[i];
    Row merged;
    merged.reserve(a.size() + b.size());
    std::size_t x = 0;
    std::size_t y = 0;
    while (x < a.size() || y < b.size()) {
      if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
        merged.push_back(std::move(a[x++]));
      } else if (x == a.size() || b[y].first < a[x].first) {
        merged.emplace_back(b[y].first, f * b[y].second);
        col_rows_[b[y].first].insert(i);
        ++y;
      } else {
        Integer sum = a[x].second + f * b[y].second;
        if (sum == 0) {
          col_rows_[a[x].first].erase(i);
        } else {
          merged.emplace_back(a[x].first, std::move(sum));
        }
        ++x;
        ++y;
      }
    }
    a = std::move(merged);
    if (a.empty()) active_.erase(i);
  }

  // col_j += f * col_c
  void add_col_multiple(std::size_t j, const Integer& f, std::size_t c) {
    const std::vector<std::size_t> touched(col_rows_[c].begin(), col_rows_[c].end());
    for (std::size_t i : touched) {
      Row& row = rows_[i];
      const Integer delta = f * find_col(row, c)->second;
      auto it = find_col(row, j);
      if (it != row.end() && it->first == j) {
        it->second += delta;
        if (it->second == 0) {
          row.erase(it);
          col_rows_[j].erase(i);
        }
      } else {
        row.insert(it, Entry{j, delta});
        col_rows_[j].insert(i);
      }
      if (row.empty()) active_.erase(i);
    }
  }

  std::vector<Row> rows_;
  std::vector<std::set<std::size_t>> col_rows_;
  std::set<std::size_t> active_;
};

}  // namespace

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::parameter, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0) m.data_[r].emplace_back(c, Integer(rows[r][c]));
    }
  }
  return m;
}

Integer IntegerMatrix::at(std::size_t r, std::size_t c) const {
  const Row& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it == row.end() || it->first != c) return 0;
  return it->second;
}

void IntegerMatrix::set(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::parameter, "matrix index out of range");
  Row& row = data_[r];
  auto it = find_col(row, c);
  const bool present = it != row.end() && it->first == c;
  if (v == 0) {
    if (present) row.erase(it);
  } else if (present) {
    it->second = v;
  } else {
    row.insert(it, Entry{c, v});
  }
}

void IntegerMatrix::add(std::size_t r, std::size_t c, const Integer& v) { set(r, c, at(r, c) + v); }

std::vector<Integer> smith_normal_form(const IntegerMatrix& m) {
  std::vector<Integer> diagonal = Eliminator(m).run();

  // Units already sit at the head of any divisibility chain; only the
  // remaining entries need the gcd/lcm normalisation.
  std::vector<Integer> units;
  std::vector<Integer> rest;
  for (auto& d : diagonal) (d == 1 ? units : rest).push_back(std::move(d));
  std::sort(rest.begin(), rest.end());
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      const Integer g = gcd(rest[i], rest[j]);
      const Integer l = rest[i] / g * rest[j];
      rest[i] = g;
      rest[j] = l;
    }
  }

  std::vector<Integer> out = std::move(units);
  for (auto& d : rest) {
    if (d == 1) {
      out.insert(out.begin(), Integer(1));
    } else {
      out.push_back(std::move(d));
    }
  }
  out.resize(std::min(m.rows(), m.cols()), Integer(0));
  return out;
}

}  // namespace vk
