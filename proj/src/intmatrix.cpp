#include "octamod/intmatrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "octamod/util.hpp"

namespace octamod {

void normalize_row(SRow& r) {
  std::sort(r.begin(), r.end(),
            [](const SEntry& a, const SEntry& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < r.size();) {
    auto col = r[i].first;
    Int acc = std::move(r[i].second);
    std::size_t j = i + 1;
    while (j < r.size() && r[j].first == col) acc += r[j++].second;
    if (!acc.is_zero()) {
      r[out].first = col;
      r[out].second = std::move(acc);
      ++out;
    }
    i = j;
  }
  r.resize(out);
}

void SparseMat::set(int r, int c, Int v) {
  require(r >= 0 && r < nrows && c >= 0 && c < ncols, "index out of range");
  auto& row = rows[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const SEntry& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v.is_zero())
      row.erase(it);
    else
      it->second = std::move(v);
  } else if (!v.is_zero()) {
    row.insert(it, {c, std::move(v)});
  }
}

const Int* SparseMat::get(int r, int c) const {
  const auto& row = rows[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const SEntry& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) return &it->second;
  return nullptr;
}

std::size_t SparseMat::nnz() const {
  std::size_t t = 0;
  for (const auto& r : rows) t += r.size();
  return t;
}

SparseMat SparseMat::transpose() const {
  SparseMat t(ncols, nrows);
  for (int r = 0; r < nrows; ++r)
    for (const auto& [c, v] : rows[r]) t.rows[c].emplace_back(r, v);
  return t;  // column order within rows is already ascending
}

bool SparseMat::is_zero() const {
  for (const auto& r : rows)
    if (!r.empty()) return false;
  return true;
}

SparseMat SparseMat::from_dense(const std::vector<std::vector<Int>>& d) {
  SparseMat m(static_cast<int>(d.size()),
              d.empty() ? 0 : static_cast<int>(d[0].size()));
  for (int r = 0; r < m.nrows; ++r)
    for (int c = 0; c < m.ncols; ++c)
      if (!d[r][c].is_zero()) m.rows[r].emplace_back(c, d[r][c]);
  return m;
}

std::vector<std::vector<Int>> SparseMat::to_dense() const {
  std::vector<std::vector<Int>> d(nrows, std::vector<Int>(ncols, Int(0)));
  for (int r = 0; r < nrows; ++r)
    for (const auto& [c, v] : rows[r]) d[r][c] = v;
  return d;
}

SparseMat SparseMat::from_rows(int ncols, std::vector<SRow> rows) {
  SparseMat m;
  m.nrows = static_cast<int>(rows.size());
  m.ncols = ncols;
  m.rows = std::move(rows);
  for (auto& r : m.rows) normalize_row(r);
  return m;
}

bool operator==(const SparseMat& a, const SparseMat& b) {
  if (a.nrows != b.nrows || a.ncols != b.ncols) return false;
  for (int r = 0; r < a.nrows; ++r) {
    if (a.rows[r].size() != b.rows[r].size()) return false;
    for (std::size_t i = 0; i < a.rows[r].size(); ++i)
      if (a.rows[r][i].first != b.rows[r][i].first ||
          a.rows[r][i].second != b.rows[r][i].second)
        return false;
  }
  return true;
}

void row_axpy(SRow& dst, const SRow& src, const Int& c) {
  if (c.is_zero() || src.empty()) return;
  SRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j >= src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i >= dst.size() || src[j].first < dst[i].first) {
      Int v = src[j].second * c;
      if (!v.is_zero()) out.emplace_back(src[j].first, std::move(v));
      ++j;
    } else {
      Int v = std::move(dst[i].second);
      v.addmul(src[j].second, c);
      if (!v.is_zero()) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

void row_scale(SRow& r, const Int& c) {
  if (c.is_zero()) {
    r.clear();
    return;
  }
  for (auto& [col, v] : r) v *= c;
}

Int row_dot(const SRow& r, const std::vector<Int>& v) {
  Int acc(0);
  for (const auto& [c, x] : r) acc.addmul(x, v[c]);
  return acc;
}

Int max_abs(const SparseMat& m) {
  Int best(0);
  for (const auto& r : m.rows)
    for (const auto& [c, v] : r)
      if (Int::cmp_abs(v, best) > 0) best = Int::abs(v);
  return best;
}

void write_sms(std::ostream& os, const SparseMat& m) {
  os << m.nrows << ' ' << m.ncols << " M\n";
  for (int r = 0; r < m.nrows; ++r)
    for (const auto& [c, v] : m.rows[r])
      os << (r + 1) << ' ' << (c + 1) << ' ' << v.to_string() << '\n';
  os << "0 0 0\n";
}

SparseMat read_sms(std::istream& is) {
  int nr, nc;
  std::string tag;
  require(static_cast<bool>(is >> nr >> nc >> tag), "bad SMS header");
  SparseMat m(nr, nc);
  for (;;) {
    long long r, c;
    std::string v;
    require(static_cast<bool>(is >> r >> c >> v), "truncated SMS stream");
    if (r == 0 && c == 0) break;
    m.set(static_cast<int>(r - 1), static_cast<int>(c - 1),
          Int::from_string(v));
  }
  return m;
}

void write_matrix_market(std::ostream& os, const SparseMat& m) {
  os << "%%MatrixMarket matrix coordinate integer general\n";
  os << m.nrows << ' ' << m.ncols << ' ' << m.nnz() << '\n';
  for (int r = 0; r < m.nrows; ++r)
    for (const auto& [c, v] : m.rows[r])
      os << (r + 1) << ' ' << (c + 1) << ' ' << v.to_string() << '\n';
}

SparseMat read_matrix_market(std::istream& is) {
  std::string line;
  require(static_cast<bool>(std::getline(is, line)), "empty matrix market file");
  require(line.rfind("%%MatrixMarket", 0) == 0, "bad matrix market banner");
  do {
    require(static_cast<bool>(std::getline(is, line)), "missing size line");
  } while (!line.empty() && line[0] == '%');
  std::istringstream hdr(line);
  long long nr, nc, nnz;
  require(static_cast<bool>(hdr >> nr >> nc >> nnz), "bad size line");
  SparseMat m(static_cast<int>(nr), static_cast<int>(nc));
  for (long long k = 0; k < nnz; ++k) {
    long long r, c;
    std::string v;
    require(static_cast<bool>(is >> r >> c >> v), "truncated entry list");
    m.set(static_cast<int>(r - 1), static_cast<int>(c - 1),
          Int::from_string(v));
  }
  return m;
}

std::string matrix_digest(const SparseMat& m) {
  Fnv1a64 h;
  std::ostringstream os;
  write_sms(os, m);
  h.update(os.str());
  return h.hex();
}

}  // namespace octamod
