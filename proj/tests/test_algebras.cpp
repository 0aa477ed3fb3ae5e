#include <gtest/gtest.h>

#include "qinv/algebras.hpp"
#include "qinv/braiding.hpp"
#include "qinv/linalg.hpp"

using namespace qinv;

namespace {

const Scalar q = Scalar::q();
const Scalar dq = Scalar::q() - Scalar::q(-1);

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool same_rules(const AlgebraHandle& a, const AlgebraHandle& b) {
  if (a.rules.rules().size() != b.rules.rules().size()) return false;
  for (const auto& r : a.rules.rules()) {
    const Rule* s = b.rules.find(r.hi, r.lo);
    if (!s || !(s->rhs == r.rhs)) return false;
  }
  return true;
}

// dim of T(V)_d / I_d by elimination over all placements u·r·w of the relations
std::size_t quotient_dimension(const AlgebraHandle& h, int d) {
  const std::size_t n = h.alphabet.size();
  auto flat = [&](const Word& w) {
    std::size_t x = 0;
    for (LetterId id : w) x = x * n + id;
    return x;
  };
  RowEchelon ech;
  std::vector<Word> ctx;
  for (int left = 0; left <= d - 2; ++left) {
    const int right = d - 2 - left;
    std::size_t combos = ipow(n, left + right);
    for (std::size_t c = 0; c < combos; ++c) {
      Word u, w;
      std::size_t x = c;
      for (int i = 0; i < left + right; ++i) {
        (i < left ? u : w).push_back(static_cast<LetterId>(x % n));
        x /= n;
      }
      for (const auto& rel : h.relations) {
        SparseVec row;
        for (const auto& [mid, coef] : rel.poly.terms()) {
          Word full = u;
          full.insert(full.end(), mid.begin(), mid.end());
          full.insert(full.end(), w.begin(), w.end());
          add_entry(row, flat(full), coef);
        }
        ech.insert(std::move(row));
      }
    }
  }
  return ipow(n, d) - ech.rank();
}

const std::vector<LieTypeSpec> kGrid = {{Family::D, 2}, {Family::D, 3}, {Family::B, 1}, {Family::B, 2},
                                        {Family::C, 2}, {Family::C, 3}, {Family::GL, 2}, {Family::GL, 3}};

}  // namespace

TEST(SymmetricAlgebra, PrintedAgreesWithDerived) {
  for (const auto& s : kGrid) {
    Handle p = build_sq(s, Variant::Printed), d = build_sq(s, Variant::Derived);
    EXPECT_TRUE(same_rules(*p, *d)) << to_string(s);
    EXPECT_TRUE(p->confluent()) << to_string(s);
    const std::size_t N = static_cast<std::size_t>(natural_rep(s).dimV);
    EXPECT_EQ(p->rules.rules().size(), N * (N - 1) / 2) << to_string(s);
  }
}

TEST(SymmetricAlgebra, RuleExamples) {
  EXPECT_EQ(build_sq({Family::D, 2})->rules.rules().size(), 6u);
  // B1 labels: v_1, v_0, v_{-1}; (q-1) v_0 v_0 = v_1 v_{-1} - v_{-1} v_1
  Handle b1 = build_sq({Family::B, 1});
  auto L = [&](int a) { return NCPolynomial::letter(static_cast<LetterId>(a - 1)); };
  EXPECT_EQ(b1->reduce(L(3) * L(1)), L(1) * L(3) - (q - Scalar(1L)) * (L(2) * L(2)));
  // C2: v_{-n} v_n = v_n v_{-n} + (q - q^-1) ψ_n, ψ_n = Σ_j q^{n+1-j} v_j v_{-j}
  Handle c2 = build_sq({Family::C, 2});
  NCPolynomial psi = q * q * (L(1) * L(4)) + q * (L(2) * L(3));
  EXPECT_EQ(c2->reduce(L(3) * L(2)), c2->reduce(L(2) * L(3) + dq * psi));
}

TEST(SymmetricAlgebra, FlatByIdealElimination) {
  for (const auto& s : {LieTypeSpec{Family::D, 2}, LieTypeSpec{Family::B, 1}, LieTypeSpec{Family::C, 2}}) {
    Handle h = build_sq(s);
    const std::size_t N = static_cast<std::size_t>(natural_rep(s).dimV);
    for (int d = 2; d <= 3; ++d) {
      EXPECT_EQ(quotient_dimension(*h, d), binom(N + d - 1, d)) << to_string(s) << " d=" << d;
      EXPECT_EQ(graded_dimension(*h, {d}), binom(N + d - 1, d));
    }
  }
}

TEST(Copies, DerivedIsConfluentOnTheGrid) {
  for (const auto& s : kGrid)
    for (int m = 1; m <= 3; ++m) {
      Handle h = build_am(s, m);
      EXPECT_TRUE(h->confluent()) << h->name();
      const std::size_t N = static_cast<std::size_t>(natural_rep(s).dimV) * static_cast<std::size_t>(m);
      EXPECT_EQ(h->rules.rules().size(), N * (N - 1) / 2) << h->name();
    }
}

TEST(Copies, FlatByIdealElimination) {
  Handle h = build_am({Family::B, 1}, 2);
  EXPECT_EQ(quotient_dimension(*h, 3), binom(6 + 2, 3));
  EXPECT_EQ(graded_dimension(*build_am({Family::D, 2}, 2), {1, 1}), 16u);
}

TEST(Copies, PrintedRelationsThatHoldInTheDerivedAlgebra) {
  Handle a2 = build_am({Family::D, 2}, 2);
  // X_{22} X_{13} = q X_{13} X_{22} - (q - q^-1) ψ_2^{(1,2)}, ψ_2 = q^{-1} X_{14} X_{21} + X_{13} X_{22}
  NCPolynomial psi2 = Scalar::q(-1) * (a2->X(1, 4) * a2->X(2, 1)) + a2->X(1, 3) * a2->X(2, 2);
  EXPECT_EQ(a2->mul(a2->X(2, 2), a2->X(1, 3)), a2->reduce(q * (a2->X(1, 3) * a2->X(2, 2)) - dq * psi2));
  // C2: Ψ^{(2,1)} = -q^{-5} Ψ^{(1,2)}
  Handle c = build_am({Family::C, 2}, 2);
  auto Psi = [&](int s, int t) {
    NCPolynomial p;
    for (int k = 1; k <= 2; ++k) {
      p += Scalar::q(3 - k) * (c->X(s, k) * c->X(t, 5 - k));
      p -= Scalar::q(k - 3) * (c->X(s, 5 - k) * c->X(t, k));
    }
    return p;
  };
  EXPECT_EQ(c->reduce(Psi(2, 1)), c->reduce(-Scalar::q(-5) * Psi(1, 2)));
}

TEST(Copies, TraceIdentities) {
  struct Case {
    LieTypeSpec spec;
    Scalar factor;
  };
  for (const Case& cs : {Case{{Family::D, 2}, Scalar::q(-3)}, Case{{Family::D, 3}, Scalar::q(-5)},
                         Case{{Family::B, 1}, Scalar::q(-2)}, Case{{Family::B, 2}, Scalar::q(-4)},
                         Case{{Family::C, 2}, -Scalar::q(-5)}}) {
    Handle h = build_am(cs.spec, 2);
    const RepData& rep = natural_rep(cs.spec);
    // Ψ^{(i,j)} from the invariant vector T of V⊗V
    SparseVec T;
    for (const auto& sd : spectral_data(cs.spec).summands)
      if (sd.eigenvalue == kappa(cs.spec)) T = sd.vectors.at(0);
    ASSERT_FALSE(T.empty());
    auto Psi = [&](int i, int j) {
      NCPolynomial p;
      for (const auto& [idx, c] : T) {
        auto lab = tensor_labels(idx, rep.dimV, 2);
        p += c * (h->X(i, lab[0]) * h->X(j, lab[1]));
      }
      return h->reduce(p);
    };
    EXPECT_EQ(Psi(2, 1), cs.factor * Psi(1, 2)) << to_string(cs.spec);
  }
}

TEST(Copies, PrintedCrossRelationsDisagreeWithTheBraiding) {
  // D: only the second dual-pair family fails; B and C printed sets are not even consistent.
  for (int n : {2, 3}) {
    Handle d = build_am({Family::D, n}, 2);
    auto defects = relation_defects(printed_am_relations({Family::D, n}, 2), *d);
    EXPECT_EQ(defects.size(), static_cast<std::size_t>(n));
    for (const auto& df : defects) EXPECT_NE(df.citation.find("psibar_t+1"), std::string::npos);
  }
  EXPECT_THROW(build_am({Family::B, 1}, 2, Variant::Printed), PresentationError);
  EXPECT_THROW(build_am({Family::C, 2}, 2, Variant::Printed), PresentationError);
  EXPECT_FALSE(relation_defects(printed_am_relations({Family::B, 1}, 2), *build_am({Family::B, 1}, 2)).empty());
}

TEST(Copies, GLPrintedEqualsDerived) {
  for (int n : {2, 3})
    for (int m : {2, 3})
      EXPECT_TRUE(same_rules(*build_am({Family::GL, n}, m, Variant::Printed), *build_am({Family::GL, n}, m)));
}

TEST(Copies, ClassicalLimitIsCommutative) {
  for (const auto& s : kGrid) {
    Handle h = build_am(s, 2);
    for (const auto& r : h->rules.rules()) {
      NCPolynomial lim = r.rhs.classical_limit();
      EXPECT_EQ(lim, NCPolynomial::monomial(Word{r.lo, r.hi})) << h->name() << " " << r.citation;
    }
  }
}

TEST(Oracle, ReproducesTheLetterLevelRule) {
  for (const auto& s : {LieTypeSpec{Family::D, 2}, LieTypeSpec{Family::B, 1}, LieTypeSpec{Family::C, 2}}) {
    Handle h = build_am(s, 2);
    const LinearOperator& R = rcheck(s);
    const int N = natural_rep(s).dimV;
    for (int a = 1; a <= N; ++a)
      for (int b = 1; b <= N; ++b) {
        NCPolynomial expect;
        for (const auto& [idx, c] : R.column(tensor_index({a, b}, N))) {
          auto cd = tensor_labels(idx, N, 2);
          expect += c * (h->X(1, cd[0]) * h->X(2, cd[1]));
        }
        EXPECT_EQ(tensor_oracle_product(*h, h->X(2, a), h->X(1, b)), h->reduce(expect));
      }
  }
}

TEST(Oracle, UnitAndGeneratorPairs) {
  Handle h = build_am({Family::D, 2}, 2);
  NCPolynomial y = h->X(1, 2) * h->X(2, 3);
  EXPECT_EQ(tensor_oracle_product(*h, NCPolynomial(Scalar(1L)), y), y);
  std::size_t pairs = 0;
  for (LetterId a = 0; a < h->alphabet.size(); ++a)
    for (LetterId b = 0; b < h->alphabet.size(); ++b) {
      NCPolynomial x = NCPolynomial::letter(a), z = NCPolynomial::letter(b);
      EXPECT_EQ(tensor_oracle_product(*h, x, z), h->mul(x, z));
      ++pairs;
    }
  EXPECT_EQ(pairs, 64u);
}

TEST(Oracle, AgreesWithPresentationUpToDegreeThree) {
  Handle h = build_am({Family::D, 2}, 2);
  std::vector<Word> words{{}};
  for (int d = 1; d <= 3; ++d) {
    auto w = words_of_degree(h->alphabet, d, false);
    words.insert(words.end(), w.begin(), w.end());
  }
  for (const Word& x : words)
    for (const Word& y : words) {
      if (x.size() + y.size() > 3) continue;
      NCPolynomial X = NCPolynomial::monomial(x), Y = NCPolynomial::monomial(y);
      ASSERT_EQ(tensor_oracle_product(*h, X, Y), h->mul(X, Y))
          << h->alphabet.render(x) << " * " << h->alphabet.render(y);
    }
}

TEST(Mixed, CrossRuleExamples) {
  Handle h = build_akl(2, 1, 1);
  EXPECT_TRUE(h->confluent());
  NCPolynomial X11Y11 = h->X(1, 1) * h->Y(1, 1), X12Y12 = h->X(1, 2) * h->Y(1, 2);
  EXPECT_EQ(h->mul(h->Y(1, 1), h->X(1, 1)), q * X11Y11 - dq * (X11Y11 + X12Y12));
  EXPECT_EQ(h->mul(h->Y(1, 2), h->X(1, 1)), h->X(1, 1) * h->Y(1, 2));
}

TEST(Mixed, DualRowStraightening) {
  // q^{-1} Ȳ_2 Ȳ_1 = Σ R^{-1} Ȳ_a' Ȳ_b': in one row Y_12 Y_11 = q^{-1} Y_11 Y_12
  Handle h = build_akl(2, 0, 1);
  EXPECT_EQ(h->mul(h->Y(1, 2), h->Y(1, 1)), Scalar::q(-1) * (h->Y(1, 1) * h->Y(1, 2)));
  Handle h2 = build_akl(2, 0, 2);
  // two rows: Ȳ_{22} Ȳ_{11} = Ȳ_{11} Ȳ_{22} - (q - q^-1) Ȳ_{12} Ȳ_{21}
  EXPECT_EQ(h2->mul(h2->Y(2, 2), h2->Y(1, 1)),
            h2->Y(1, 1) * h2->Y(2, 2) - dq * (h2->Y(1, 2) * h2->Y(2, 1)));
}

TEST(Mixed, BidegreeDimensions) {
  Handle h = build_akl(2, 2, 2);
  EXPECT_TRUE(h->confluent());
  for (int dx = 0; dx <= 4; ++dx)
    for (int dy = 0; dx + dy <= 4; ++dy) {
      std::size_t total = 0;
      for (int a = 0; a <= dx; ++a)
        for (int b = 0; b <= dy; ++b) total += graded_dimension(*h, {a, dx - a, b, dy - b});
      EXPECT_EQ(total, binom(4 + dx - 1, dx) * binom(4 + dy - 1, dy));
    }
}

TEST(Mixed, FlatByIdealElimination) {
  Handle h = build_akl(2, 1, 1);
  EXPECT_EQ(quotient_dimension(*h, 3), binom(4 + 2, 3));
}

TEST(Exterior, Examples) {
  Handle h = build_exterior(2, 2);
  // X_{12} X_{11} = -q^{-1} X_{11} X_{12}
  EXPECT_EQ(h->mul(h->X(1, 2), h->X(1, 1)), -Scalar::q(-1) * (h->X(1, 1) * h->X(1, 2)));
  // X_{21} X_{12}: the first relation also needs X_{22} X_{11} = -X_{11} X_{22}
  EXPECT_EQ(h->mul(h->X(2, 1), h->X(1, 2)), -(h->X(1, 2) * h->X(2, 1)) + dq * (h->X(1, 1) * h->X(2, 2)));
}

TEST(Exterior, PrintedAgreesWithDerivedAndIsFlat) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {1, 3}}) {
    Handle p = build_exterior(m, n), d = build_exterior(m, n, Variant::Derived);
    EXPECT_TRUE(same_rules(*p, *d)) << m << "x" << n;
    EXPECT_TRUE(p->confluent());
    std::size_t total = 0;
    for (int k = 0; k <= m * n; ++k) {
      std::size_t c = graded_dimension(*p, {k});
      EXPECT_EQ(c, binom(static_cast<std::size_t>(m * n), static_cast<std::size_t>(k)));
      total += c;
    }
    EXPECT_EQ(total, std::size_t{1} << (m * n));
  }
  EXPECT_EQ(graded_dimension(*build_exterior(2, 2), {2}), 6u);
  EXPECT_EQ(quotient_dimension(*build_exterior(2, 2), 3), 4u);
}

TEST(Exterior, ClassicalLimitIsAnticommutative) {
  Handle h = build_exterior(2, 3);
  for (const auto& r : h->rules.rules()) {
    NCPolynomial lim = r.rhs.classical_limit();
    if (r.hi == r.lo) {
      EXPECT_TRUE(lim.is_zero());
    } else {
      EXPECT_EQ(lim, -NCPolynomial::monomial(Word{r.lo, r.hi}));
    }
  }
}

TEST(Manifest, RulesCarryCitations) {
  Handle h = build_am({Family::C, 2}, 2);
  for (const auto& r : h->rules.rules()) EXPECT_FALSE(r.citation.empty());
  EXPECT_EQ(h->name(), "A_2(C2)");
  EXPECT_EQ(build_akl(2, 2, 2)->name(), "A_{2,2}(gl_2)");
  EXPECT_EQ(build_exterior(2, 3)->name(), "Lambda_q(2,3)");
}
