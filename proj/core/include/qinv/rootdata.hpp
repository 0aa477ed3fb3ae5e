#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qinv/linop.hpp"
#include "qinv/scalar.hpp"

namespace qinv {

enum class Family { GL, B, C, D };

std::string to_string(Family f);
Family parse_family(const std::string& s);

struct LieTypeSpec {
  Family family = Family::D;
  int rank = 2;
  friend bool operator==(const LieTypeSpec&, const LieTypeSpec&) = default;
  friend auto operator<=>(const LieTypeSpec&, const LieTypeSpec&) = default;
};

std::string to_string(const LieTypeSpec& s);
// throws std::invalid_argument when the rank is out of range
void validate(const LieTypeSpec& s);

// Whether "n odd" in the sign of σ on the highest weight vector refers to the
// rank or to the size N of the defining matrices.
enum class SigmaReading { Rank, MatrixSize };

struct RepData {
  LieTypeSpec spec;
  int dimV = 0;
  // per label a = 1..dimV: the signed index (i, 0 or -i); GL: a itself
  std::vector<int> signed_index;
  // per label: weight in the ε-basis (length rank)
  std::vector<std::vector<int>> weights;
  // per Chevalley index i = 1..r (stored at i-1)
  std::vector<std::vector<int>> simple_roots;
  std::vector<LinearOperator> e, f, k, k_inv;
  // [e_i, f_i] = (k_i - k_i^{-1}) / ef_den[i]
  std::vector<Scalar> ef_den;
  // GL only: the torus generators K_b and their inverses, b = 1..n
  std::vector<LinearOperator> K, K_inv;
  std::vector<std::vector<int>> positive_roots;
  std::vector<int> two_rho;
  // (2ρ, λ_a) per label
  std::vector<int> rho_pairings;

  int chevalley_rank() const { return static_cast<int>(e.size()); }
  // label of v_{-s} for the vector with signed index s (B/C/D)
  int dual_label(int a) const;
  int label_of(int signed_idx) const;
  std::string label_name(int a) const;
};

RepData natural_rep(const LieTypeSpec& spec);
const RepData& natural_rep_cached(const LieTypeSpec& spec);

// Bilinear form on the ε-basis (standard, integer valued).
int pairing(const std::vector<int>& a, const std::vector<int>& b);

Scalar quantum_dimension(const LieTypeSpec& spec);
// Σ_a q^{-(2ρ, λ_a)}
Scalar quantum_trace_of_k2rho(const LieTypeSpec& spec);
int rho_pairing(const LieTypeSpec& spec, int label);

// Weyl dimension formula for gl_k; λ has at most k parts.
unsigned long long irrep_dim_gl(int k, const std::vector<int>& lambda);

struct SigmaValidationError : std::logic_error {
  using std::logic_error::logic_error;
};

// σ on V for D (swap v_n and v_{-n}, signed) and B (a scalar).
LinearOperator sigma_candidate(const LieTypeSpec& spec, SigmaReading reading = SigmaReading::Rank);

struct RelationCheck {
  std::string name;
  bool pass = false;
};

// The defining relations of U_q as matrix identities on V.
std::vector<RelationCheck> check_uq_relations(const RepData& rep);

}  // namespace qinv
