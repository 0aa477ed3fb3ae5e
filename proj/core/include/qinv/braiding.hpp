#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qinv/linop.hpp"
#include "qinv/rootdata.hpp"

namespace qinv {

struct SpectralSummand {
  std::string name;  // "s", "a", "0"
  Scalar eigenvalue;
  std::vector<SparseVec> vectors;  // spanning vectors in V⊗V
};

struct SpectralData {
  std::vector<SpectralSummand> summands;
  const SpectralSummand* find(const std::string& name) const;
};

// Explicit submodule bases of V⊗V with their Ř-eigenvalues.
SpectralData spectral_data(const LieTypeSpec& spec);

struct Projectors {
  LinearOperator Ps, Pa;
  std::optional<LinearOperator> P0;
};

Projectors projectors(const LieTypeSpec& spec);
const LinearOperator& rcheck(const LieTypeSpec& spec);
// Ř for the type-A R-matrix of gl_n without the flip
LinearOperator gl_r_matrix(int n);
// Ř_{V^{⊗k}, V^{⊗l}}: moves the last l strands in front of the first k.
const LinearOperator& rcheck_cabled(const LieTypeSpec& spec, int k, int l);
// κ: the eigenvalue on the trivial summand (B/C/D)
Scalar kappa(const LieTypeSpec& spec);

enum class GenKind { E, F, K, Kinv };
// Coproduct action of a Chevalley generator (GL: K/Kinv index the torus K_b) on V^{⊗r}.
LinearOperator tensor_power_action(const RepData& rep, GenKind kind, int index, int r);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct BraidReport {
  LieTypeSpec spec;
  std::vector<CheckResult> checks;
  std::vector<std::size_t> projector_ranks;  // (s, a[, 0])
  bool pass() const;
};

BraidReport verify_braid_and_skein(const LieTypeSpec& spec);

}  // namespace qinv
