#include "qinv/linop.hpp"

#include <stdexcept>

namespace qinv {

void add_entry(SparseVec& y, std::size_t index, const Scalar& a) {
  if (a.is_zero()) return;
  auto it = y.find(index);
  if (it == y.end()) {
    y.emplace(index, a);
    return;
  }
  it->second += a;
  if (it->second.is_zero()) y.erase(it);
}

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (const auto& [i, c] : x) add_entry(y, i, a * c);
}

SparseVec scaled(const SparseVec& x, const Scalar& a) {
  SparseVec r;
  if (a.is_zero()) return r;
  for (const auto& [i, c] : x) r.emplace(i, a * c);
  return r;
}

std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::size_t tensor_index(const std::vector<int>& labels, int dim) {
  std::size_t idx = 0;
  for (int a : labels) idx = idx * static_cast<std::size_t>(dim) + static_cast<std::size_t>(a - 1);
  return idx;
}

std::vector<int> tensor_labels(std::size_t index, int dim, int k) {
  std::vector<int> out(static_cast<std::size_t>(k));
  for (int t = k - 1; t >= 0; --t) {
    out[static_cast<std::size_t>(t)] = static_cast<int>(index % static_cast<std::size_t>(dim)) + 1;
    index /= static_cast<std::size_t>(dim);
  }
  return out;
}

LinearOperator LinearOperator::identity(std::size_t n) {
  LinearOperator r(n, n);
  for (std::size_t i = 0; i < n; ++i) r.col_[i].emplace(i, Scalar(1L));
  return r;
}

Scalar LinearOperator::at(std::size_t r, std::size_t c) const {
  auto it = col_[c].find(r);
  return it == col_[c].end() ? Scalar() : it->second;
}

void LinearOperator::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (v.is_zero()) col_[c].erase(r);
  else col_[c][r] = v;
}

void LinearOperator::add(std::size_t r, std::size_t c, const Scalar& v) { add_entry(col_[c], r, v); }

std::size_t LinearOperator::nnz() const {
  std::size_t n = 0;
  for (const auto& c : col_) n += c.size();
  return n;
}

SparseVec LinearOperator::apply(const SparseVec& x) const {
  SparseVec y;
  for (const auto& [j, c] : x) axpy(y, c, col_[j]);
  return y;
}

LinearOperator LinearOperator::transpose() const {
  LinearOperator t(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& [i, c] : col_[j]) t.col_[i].emplace(j, c);
  return t;
}

LinearOperator LinearOperator::kron(const LinearOperator& o) const {
  LinearOperator r(rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t j1 = 0; j1 < cols_; ++j1)
    for (std::size_t j2 = 0; j2 < o.cols_; ++j2) {
      SparseVec& dst = r.col_[j1 * o.cols_ + j2];
      for (const auto& [i1, c1] : col_[j1])
        for (const auto& [i2, c2] : o.col_[j2]) dst.emplace(i1 * o.rows_ + i2, c1 * c2);
    }
  return r;
}

bool LinearOperator::is_zero() const {
  for (const auto& c : col_)
    if (!c.empty()) return false;
  return true;
}

bool LinearOperator::is_diagonal() const {
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& kv : col_[j])
      if (kv.first != j) return false;
  return true;
}

LinearOperator LinearOperator::operator*(const LinearOperator& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("operator composition: dimension mismatch");
  LinearOperator r(rows_, o.cols_);
  for (std::size_t j = 0; j < o.cols_; ++j) r.col_[j] = apply(o.col_[j]);
  return r;
}

LinearOperator LinearOperator::operator+(const LinearOperator& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("operator sum: dimension mismatch");
  LinearOperator r = *this;
  for (std::size_t j = 0; j < cols_; ++j) axpy(r.col_[j], Scalar(1L), o.col_[j]);
  return r;
}

LinearOperator LinearOperator::operator-(const LinearOperator& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("operator difference: dimension mismatch");
  LinearOperator r = *this;
  for (std::size_t j = 0; j < cols_; ++j) axpy(r.col_[j], Scalar(-1L), o.col_[j]);
  return r;
}

LinearOperator LinearOperator::scaled(const Scalar& s) const {
  LinearOperator r(rows_, cols_);
  if (s.is_zero()) return r;
  for (std::size_t j = 0; j < cols_; ++j) r.col_[j] = qinv::scaled(col_[j], s);
  return r;
}

LinearOperator operator*(const Scalar& s, const LinearOperator& a) { return a.scaled(s); }

bool operator==(const LinearOperator& a, const LinearOperator& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.col_ == b.col_;
}

std::vector<std::tuple<std::size_t, std::size_t, std::string>> LinearOperator::triplets() const {
  std::vector<std::tuple<std::size_t, std::size_t, std::string>> out;
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& [i, c] : col_[j]) out.emplace_back(i, j, c.str());
  return out;
}

SparseVec apply_local(const LinearOperator& op, int s, const SparseVec& x, int dim, int k, int pos) {
  const std::size_t inner = ipow(static_cast<std::size_t>(dim), s);
  const std::size_t tail = ipow(static_cast<std::size_t>(dim), k - pos - s);
  SparseVec y;
  for (const auto& [idx, c] : x) {
    std::size_t lo = idx % tail;
    std::size_t mid = (idx / tail) % inner;
    std::size_t hi = idx / (tail * inner);
    for (const auto& [r, e] : op.column(mid)) add_entry(y, (hi * inner + r) * tail + lo, c * e);
  }
  return y;
}

LinearOperator embed_local(const LinearOperator& op, int s, int dim, int k, int pos) {
  const std::size_t n = ipow(static_cast<std::size_t>(dim), k);
  LinearOperator r(n, n);
  for (std::size_t j = 0; j < n; ++j) r.set_column(j, apply_local(op, s, SparseVec{{j, Scalar(1L)}}, dim, k, pos));
  return r;
}

LinearOperator permutation_operator(const std::vector<int>& perm, int dim) {
  const int k = static_cast<int>(perm.size());
  const std::size_t n = ipow(static_cast<std::size_t>(dim), k);
  LinearOperator r(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto labels = tensor_labels(j, dim, k);
    std::vector<int> out(labels.size());
    for (int t = 0; t < k; ++t) out[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])] = labels[static_cast<std::size_t>(t)];
    r.set(tensor_index(out, dim), j, Scalar(1L));
  }
  return r;
}

}  // namespace qinv
