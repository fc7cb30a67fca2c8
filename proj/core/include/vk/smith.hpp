#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vk {

using Integer = boost::multiprecision::cpp_int;

/// Sparse integer matrix, rows kept sorted by column.
class IntegerMatrix {
 public:
  using Entry = std::pair<std::size_t, Integer>;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  static IntegerMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Integer& v);
  void add(std::size_t r, std::size_t c, const Integer& v);
  const std::vector<Entry>& row(std::size_t r) const { return data_[r]; }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> data_;
};

/// Invariant factors d_1 | d_2 | ... of the matrix, min(rows, cols) of them,
/// nonzero ones first. Pivots on the smallest nonzero |entry|, ties broken by
/// row-major position.
std::vector<Integer> smith_normal_form(const IntegerMatrix& m);

}  // namespace vk
