#pragma once

#include <string>
#include <vector>

#include "qinv/algebras.hpp"
#include "qinv/braiding.hpp"

namespace qinv {

// K and Kinv index k_i for B/C/D and the torus K_b for GL. Sigma is the
// diagram automorphism of B/D, acting as a group-like element.
enum class GenOp { E, F, K, Kinv, Sigma };

struct GeneratorRef {
  GenOp op = GenOp::E;
  int index = 1;
  // Exterior algebras carry two commuting actions: group 0 is gl_n on the
  // column index, group 1 is gl_m on the row index.
  int group = 0;
};

std::string to_string(const GeneratorRef& g);

// The generators whose annihilation (E, F) or trivial action (K) defines
// invariance. With `with_sigma`, σ is appended for B/D.
std::vector<GeneratorRef> invariance_generators(const AlgebraHandle& h, bool with_sigma = false);

// Action of a generator on an element, extended from the letters by the
// coproduct: e(ab) = e(a)k(b) + a e(b), f(ab) = f(a)b + k^{-1}(a)f(b),
// g(ab) = g(a)g(b) for group-likes. The result is in normal form.
NCPolynomial act(const AlgebraHandle& h, const GeneratorRef& g, const NCPolynomial& p);
// The same extension on the free algebra: no reduction of input or output.
NCPolynomial act_free(const AlgebraHandle& h, const GeneratorRef& g, const NCPolynomial& p);

// Weight of a word (sum of letter weights; dual letters count negatively).
// For exterior algebras the gl_n part comes first, then the gl_m part.
std::vector<int> weight(const AlgebraHandle& h, const Word& w);

struct InvariantReport {
  bool invariant = true;
  // one entry per generator: the normal form of g·p (E, F) or g·p − p (K, σ)
  std::vector<std::pair<std::string, NCPolynomial>> residuals;
};

InvariantReport is_invariant(const AlgebraHandle& h, const NCPolynomial& p, bool with_sigma = false);

// Basis of the invariants among the ordered words of the given multidegree.
// Only weight-zero words can contribute, so the search is restricted to them.
std::vector<NCPolynomial> invariant_basis(const AlgebraHandle& h, const std::vector<int>& multidegree,
                                          bool with_sigma = false);

// The invariant vector T ∈ V ⊗ V (B/C/D) with coefficients c_a on v_a ⊗ v_{a'},
// and the constant c_a c_{a'}^{-1} q^{-(2ρ, λ_a)} (which must not depend on a).
struct PairVectorReport {
  SparseVec T;
  std::vector<Scalar> coefficients;  // c_a per label
  std::vector<Scalar> ratios;        // per label
  Scalar constant;
  bool annihilated = false;  // e_i T = f_i T = 0, k_i T = T
  bool constant_ratio = false;
};

PairVectorReport invariant_pair_vector(const LieTypeSpec& spec);

}  // namespace qinv
