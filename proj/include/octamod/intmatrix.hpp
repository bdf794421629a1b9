#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "octamod/ints.hpp"

namespace octamod {

using SEntry = std::pair<std::int32_t, Int>;  // (column, value), value != 0
using SRow = std::vector<SEntry>;             // sorted by column

// Sparse integer matrix, row major. No stored zeros; rows sorted by column.
struct SparseMat {
  int nrows = 0;
  int ncols = 0;
  std::vector<SRow> rows;

  SparseMat() = default;
  SparseMat(int r, int c) : nrows(r), ncols(c), rows(r) {}

  void set(int r, int c, Int v);
  const Int* get(int r, int c) const;
  std::size_t nnz() const;
  SparseMat transpose() const;
  bool is_zero() const;

  static SparseMat from_dense(const std::vector<std::vector<Int>>& d);
  std::vector<std::vector<Int>> to_dense() const;

  static SparseMat from_rows(int ncols, std::vector<SRow> rows);

  friend bool operator==(const SparseMat& a, const SparseMat& b);
};

// sort within a row and drop zeros (entries with equal columns are summed)
void normalize_row(SRow& r);

// dst += c * src (sparse merge)
void row_axpy(SRow& dst, const SRow& src, const Int& c);
void row_scale(SRow& r, const Int& c);
// exact dot with a dense vector
Int row_dot(const SRow& r, const std::vector<Int>& v);

// largest |entry|
Int max_abs(const SparseMat& m);

// SMS sparse text format: "rows cols M", 1-indexed "i j v" lines, "0 0 0".
void write_sms(std::ostream& os, const SparseMat& m);
SparseMat read_sms(std::istream& is);

// Matrix Market coordinate integer general.
void write_matrix_market(std::ostream& os, const SparseMat& m);
SparseMat read_matrix_market(std::istream& is);

// FNV-1a over the canonical SMS serialization
std::string matrix_digest(const SparseMat& m);

}  // namespace octamod
