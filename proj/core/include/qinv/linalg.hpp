#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qinv/linop.hpp"

namespace qinv {

// Incremental Gauss-Jordan elimination over Q(v). Rows are sparse vectors;
// each stored row has a pivot (its largest or smallest index, per policy)
// with coefficient 1, and no other stored row has a nonzero in that column.
class RowEchelon {
 public:
  enum class Pivot { Largest, Smallest };
  explicit RowEchelon(Pivot policy = Pivot::Smallest) : policy_(policy) {}

  // Reduce a vector against the stored rows (does not insert).
  SparseVec reduce(SparseVec row) const;
  // Insert a row; returns false if it was dependent on the stored rows.
  bool insert(SparseVec row, std::set<std::string> tags = {});

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }
  const std::map<std::size_t, SparseVec>& rows() const { return rows_; }
  const std::set<std::string>& tags(std::size_t pivot) const { return tags_.at(pivot); }

 private:
  std::size_t pivot_of(const SparseVec& row) const;
  Pivot policy_;
  std::map<std::size_t, SparseVec> rows_;
  std::map<std::size_t, std::set<std::string>> tags_;
};

std::size_t rank(const std::vector<SparseVec>& rows);
// Basis of {x : row·x = 0 for all rows}, over columns 0..ncols-1. One vector per
// free column in increasing order, with a 1 in that column.
std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, std::size_t ncols);
// Exact inverse; nullopt if singular.
std::optional<LinearOperator> inverse(const LinearOperator& a);
// Columns of the operator as vectors (for span/image computations).
std::vector<SparseVec> columns(const LinearOperator& a);
std::vector<SparseVec> rows_of(const LinearOperator& a);

}  // namespace qinv
