#include "qinv/linalg.hpp"

namespace qinv {

std::size_t RowEchelon::pivot_of(const SparseVec& row) const {
  return policy_ == Pivot::Largest ? row.rbegin()->first : row.begin()->first;
}

SparseVec RowEchelon::reduce(SparseVec row) const {
  // Stored rows have disjoint pivots and zeros in each other's pivot columns,
  // so one pass over pivot columns present in the row suffices.
  std::vector<std::size_t> hits;
  for (const auto& kv : row)
    if (rows_.count(kv.first)) hits.push_back(kv.first);
  for (std::size_t p : hits) {
    auto it = row.find(p);
    if (it == row.end()) continue;
    Scalar c = -it->second;
    axpy(row, c, rows_.at(p));
  }
  return row;
}

bool RowEchelon::insert(SparseVec row, std::set<std::string> tags) {
  std::vector<std::size_t> hits;
  for (const auto& kv : row)
    if (rows_.count(kv.first)) hits.push_back(kv.first);
  for (std::size_t p : hits) {
    auto it = row.find(p);
    if (it == row.end()) continue;
    Scalar c = -it->second;
    axpy(row, c, rows_.at(p));
    const auto& t = tags_.at(p);
    tags.insert(t.begin(), t.end());
  }
  if (row.empty()) return false;
  std::size_t p = pivot_of(row);
  Scalar inv = row.at(p).inverse();
  for (auto& kv : row) kv.second *= inv;
  // back-substitute into existing rows
  for (auto& [q, r] : rows_) {
    auto it = r.find(p);
    if (it == r.end()) continue;
    Scalar c = -it->second;
    axpy(r, c, row);
    tags_[q].insert(tags.begin(), tags.end());
  }
  rows_.emplace(p, std::move(row));
  tags_.emplace(p, std::move(tags));
  return true;
}

std::size_t rank(const std::vector<SparseVec>& rows) {
  RowEchelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, std::size_t ncols) {
  RowEchelon e(RowEchelon::Pivot::Smallest);
  for (const auto& r : rows) e.insert(r);
  std::vector<SparseVec> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (e.is_pivot(f)) continue;
    SparseVec x;
    x.emplace(f, Scalar(1L));
    for (const auto& [p, r] : e.rows()) {
      auto it = r.find(f);
      if (it != r.end()) x.emplace(p, -it->second);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<SparseVec> columns(const LinearOperator& a) {
  std::vector<SparseVec> out;
  out.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a.column(j));
  return out;
}

std::vector<SparseVec> rows_of(const LinearOperator& a) { return columns(a.transpose()); }

std::optional<LinearOperator> inverse(const LinearOperator& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) return std::nullopt;
  RowEchelon e(RowEchelon::Pivot::Smallest);
  auto rows = rows_of(a);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec r = rows[i];
    r.emplace(n + i, Scalar(1L));
    e.insert(std::move(r));
  }
  LinearOperator inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!e.is_pivot(i)) return std::nullopt;
    for (const auto& [c, v] : e.rows().at(i))
      if (c >= n) inv.set(i, c - n, v);
  }
  return inv;
}

}  // namespace qinv
