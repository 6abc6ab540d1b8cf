#include "lpa/linalg.hpp"

namespace lpa {

namespace {

// Reduced row echelon form in place; returns pivot columns in row order.
std::vector<std::size_t> rref(DenseMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Scalar inv = Scalar(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar k = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= k * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Scalar>> rational_nullspace(const DenseMatrix& a, std::size_t cols) {
  DenseMatrix m = a;
  for (auto& row : m) {
    if (row.size() != cols) throw Error("matrix row has the wrong length");
  }
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const DenseMatrix& a, std::size_t cols) {
  DenseMatrix m = a;
  return rref(m, cols).size();
}

void axpy(SparseRow& row, const Scalar& k, const SparseRow& other) {
  if (k.is_zero()) return;
  for (const auto& [c, x] : other) {
    auto [it, fresh] = row.try_emplace(c, k * x);
    if (!fresh) {
      it->second += k * x;
      if (it->second.is_zero()) row.erase(it);
    } else if (it->second.is_zero()) {
      row.erase(it);
    }
  }
}

SparseRow SparseEchelon::reduce(SparseRow row) const {
  // Clear every column that carries a pivot, scanning left to right.
  auto it = row.begin();
  while (it != row.end()) {
    auto pivot = rows_.find(it->first);
    if (pivot == rows_.end()) {
      ++it;
      continue;
    }
    std::uint32_t col = it->first;
    Scalar k = -it->second;
    axpy(row, k, pivot->second);
    it = row.upper_bound(col);
  }
  return row;
}

bool SparseEchelon::insert(SparseRow row) {
  for (auto& [c, x] : row) x = Scalar(mpq_class(x.value()), field_);
  std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
  row = reduce(std::move(row));
  if (row.empty()) return false;
  Scalar inv = Scalar(1) / row.begin()->second;
  for (auto& [c, x] : row) x *= inv;
  rows_.emplace(row.begin()->first, std::move(row));
  return true;
}

std::vector<SparseRow> SparseEchelon::kernel(std::uint32_t cols) const {
  // Back-substitute to reduced form, last pivot first.
  std::map<std::uint32_t, SparseRow> red = rows_;
  for (auto it = red.rbegin(); it != red.rend(); ++it) {
    for (auto jt = red.begin(); jt->first != it->first; ++jt) {
      auto hit = jt->second.find(it->first);
      if (hit != jt->second.end()) {
        Scalar k = -hit->second;
        axpy(jt->second, k, it->second);
      }
    }
  }
  std::vector<SparseRow> basis;
  for (std::uint32_t f = 0; f < cols; ++f) {
    if (red.count(f)) continue;
    SparseRow v;
    v[f] = Scalar(mpq_class(1), field_);
    for (const auto& [p, row] : red) {
      auto hit = row.find(f);
      if (hit != row.end()) v[p] = -hit->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lpa
