#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qinv/ncpoly.hpp"
#include "qinv/rootdata.hpp"

namespace qinv {

enum class AlgebraKind { SymmetricAlgebra, Copies, MixedGL, Exterior };

// Printed: the relations as stated for the family. Derived: relations read
// off Ř (the braided-tensor construction).
enum class Variant { Printed, Derived };

std::string to_string(Variant v);

struct AlgebraHandle {
  AlgebraKind kind = AlgebraKind::SymmetricAlgebra;
  LieTypeSpec spec;  // GL{n} for the mixed and exterior algebras
  int m = 1;         // copies of V; rows k of X for MixedGL; gl_m for Exterior
  int l = 0;         // rows of Y for MixedGL
  Variant variant = Variant::Printed;
  bool square_free = false;
  Alphabet alphabet;
  std::vector<QuadraticRelation> relations;
  RewriteSystem rules;
  // degree-3 overlaps that fail to resolve (empty iff the ordered words form a basis)
  std::vector<OverlapFailure> overlap_failures;

  std::string name() const;
  bool confluent() const { return overlap_failures.empty(); }
  LetterId x(int factor, int label) const { return alphabet.id(LetterKind::X, factor, label); }
  LetterId y(int factor, int label) const { return alphabet.id(LetterKind::Y, factor, label); }
  NCPolynomial X(int factor, int label) const { return NCPolynomial::letter(x(factor, label)); }
  NCPolynomial Y(int factor, int label) const { return NCPolynomial::letter(y(factor, label)); }
  NCPolynomial mul(const NCPolynomial& a, const NCPolynomial& b) const;
  NCPolynomial reduce(const NCPolynomial& a) const;
};

using Handle = std::shared_ptr<const AlgebraHandle>;

// All builders cache by argument and throw PresentationError when the
// relations do not yield a rule for every inverted pair.
Handle build_sq(const LieTypeSpec& spec, Variant variant = Variant::Printed);
Handle build_am(const LieTypeSpec& spec, int m, Variant variant = Variant::Derived);
// X_{ia} (i ≤ k) from the coordinate algebra, Y_{βb} (β ≤ l) from its dual.
Handle build_akl(int n, int k, int l);
// Λ_q(V^{(m)} ⊗ V^{(n)}), generators X_{ij}
Handle build_exterior(int m, int n, Variant variant = Variant::Printed);

// Number of ordered words of the multidegree (one entry per slot).
std::size_t graded_dimension(const AlgebraHandle& h, const std::vector<int>& multidegree);

// Product in A_m computed from the braided tensor structure: blocks of
// different copies are exchanged with the cabled Ř, then each copy is
// straightened in S_q(V). Independent of the cross relations of h.
NCPolynomial tensor_oracle_product(const AlgebraHandle& h, const NCPolynomial& x,
                                   const NCPolynomial& y, std::uint64_t fuel = default_fuel());

// The relations of `printed` that fail in `reference`, with their normal forms
// there.
struct RelationDefect {
  std::string citation;
  NCPolynomial relation;
  NCPolynomial defect;
};
std::vector<RelationDefect> relation_defects(const std::vector<QuadraticRelation>& printed,
                                             const AlgebraHandle& reference);

// The printed relation list for A_m without building rules (so inconsistent
// printed presentations can still be inspected).
std::vector<QuadraticRelation> printed_am_relations(const LieTypeSpec& spec, int m);
std::vector<QuadraticRelation> derived_am_relations(const LieTypeSpec& spec, int m);
Alphabet copies_alphabet(const LieTypeSpec& spec, int m);

}  // namespace qinv
