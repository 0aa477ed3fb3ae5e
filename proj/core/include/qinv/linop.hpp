#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qinv/scalar.hpp"

namespace qinv {

// Sparse vector over a basis indexed by flat tensor indices; never stores zeros.
using SparseVec = std::map<std::size_t, Scalar>;

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);
void add_entry(SparseVec& y, std::size_t index, const Scalar& a);
SparseVec scaled(const SparseVec& x, const Scalar& a);

// Flat index of a label tuple (labels are 1-based) in V^{⊗k}, first factor most significant.
std::size_t tensor_index(const std::vector<int>& labels, int dim);
std::vector<int> tensor_labels(std::size_t index, int dim, int k);
std::size_t ipow(std::size_t base, int e);

// Exact sparse matrix stored by columns: column j is the image of basis vector j.
class LinearOperator {
 public:
  LinearOperator() = default;
  LinearOperator(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), col_(cols) {}
  static LinearOperator identity(std::size_t n);
  static LinearOperator zero(std::size_t n) { return {n, n}; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add(std::size_t r, std::size_t c, const Scalar& v);
  const SparseVec& column(std::size_t c) const { return col_[c]; }
  void set_column(std::size_t c, SparseVec v) { col_[c] = std::move(v); }
  std::size_t nnz() const;

  SparseVec apply(const SparseVec& x) const;
  LinearOperator transpose() const;
  LinearOperator kron(const LinearOperator& o) const;
  bool is_zero() const;
  bool is_diagonal() const;

  LinearOperator operator*(const LinearOperator& o) const;  // composition: this ∘ o
  LinearOperator operator+(const LinearOperator& o) const;
  LinearOperator operator-(const LinearOperator& o) const;
  LinearOperator scaled(const Scalar& s) const;
  friend bool operator==(const LinearOperator& a, const LinearOperator& b);

  // (row, col, scalar-string) triplets in column-major order, 0-based indices
  std::vector<std::tuple<std::size_t, std::size_t, std::string>> triplets() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec> col_;
};

LinearOperator operator*(const Scalar& s, const LinearOperator& a);

// Apply an operator on V^{⊗s} to the factors pos..pos+s-1 of a vector in V^{⊗k}.
SparseVec apply_local(const LinearOperator& op, int s, const SparseVec& x, int dim, int k, int pos);
// id^{⊗pos} ⊗ op ⊗ id^{⊗(k-pos-s)} as an operator on V^{⊗k}.
LinearOperator embed_local(const LinearOperator& op, int s, int dim, int k, int pos);
// Permutation operator sending v_{a_1}⊗...⊗v_{a_k} to the tensor whose factor perm[t] is a_t.
LinearOperator permutation_operator(const std::vector<int>& perm, int dim);

}  // namespace qinv
