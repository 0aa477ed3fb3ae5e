#include <gtest/gtest.h>

#include <functional>

#include "qinv/invariants.hpp"

using namespace qinv;

namespace {

Scalar q(int k = 1) { return Scalar::q(k); }

// Number of monomials in commuting variables p_{ij} (i ≤ j, or i < j when
// `strict`) with the given degree in each index; p_{ii} counts twice in slot i.
// Equals the classical invariant count when the p_{ij} are independent.
std::size_t classical_pair_count(const std::vector<int>& d, bool strict) {
  const int m = static_cast<int>(d.size());
  std::vector<std::pair<int, int>> vars;
  for (int i = 0; i < m; ++i)
    for (int j = strict ? i + 1 : i; j < m; ++j) vars.emplace_back(i, j);
  std::vector<int> rest = d;
  std::function<std::size_t(std::size_t)> rec = [&](std::size_t v) -> std::size_t {
    if (v == vars.size()) {
      for (int x : rest)
        if (x != 0) return 0;
      return 1;
    }
    auto [i, j] = vars[v];
    std::size_t total = 0;
    int used = 0;
    while (true) {
      total += rec(v + 1);
      if (rest[static_cast<std::size_t>(i)] < 1 || rest[static_cast<std::size_t>(j)] < (i == j ? 2 : 1)) break;
      rest[static_cast<std::size_t>(i)] -= 1;
      rest[static_cast<std::size_t>(j)] -= 1;
      ++used;
    }
    rest[static_cast<std::size_t>(i)] += used;
    rest[static_cast<std::size_t>(j)] += used;
    return total;
  };
  return rec(0);
}

// p_{iβ} for 1 ≤ i ≤ k, 1 ≤ β ≤ l: a k×l matrix with prescribed row and column sums
std::size_t classical_mixed_count(const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> c = cols;
  std::function<std::size_t(std::size_t, std::size_t, int)> rec = [&](std::size_t i, std::size_t b,
                                                                      int left) -> std::size_t {
    if (i == rows.size()) {
      for (int x : c)
        if (x != 0) return 0;
      return 1;
    }
    if (b + 1 == c.size()) {
      if (left > c[b]) return 0;
      c[b] -= left;
      std::size_t r = rec(i + 1, 0, i + 1 < rows.size() ? rows[i + 1] : 0);
      c[b] += left;
      return r;
    }
    std::size_t total = 0;
    for (int e = 0; e <= std::min(left, c[b]); ++e) {
      c[b] -= e;
      total += rec(i, b + 1, left - e);
      c[b] += e;
    }
    return total;
  };
  return rows.empty() ? 1 : rec(0, 0, rows[0]);
}

std::vector<std::vector<int>> multidegrees(int slots, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(slots), 0);
  std::function<void(int, int)> rec = [&](int s, int left) {
    if (s == slots) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[static_cast<std::size_t>(s)] = e;
      rec(s + 1, left - e);
    }
  };
  rec(0, max_total);
  return out;
}

}  // namespace

TEST(Psi, OrthogonalDefinition) {
  Handle a = build_am({Family::D, 2}, 2);
  const RepData& r = natural_rep_cached({Family::D, 2});
  auto X = [&](int i, int s) { return a->X(i, r.label_of(s)); };
  NCPolynomial expect = q(-1) * X(1, -1) * X(2, 1) + q(1) * X(1, 1) * X(2, -1) + X(1, -2) * X(2, 2) + X(1, 2) * X(2, -2);
  EXPECT_EQ(psi_word_form(*a, 1, 2), expect);
  EXPECT_EQ(psi(*a, 1, 2), a->reduce(expect));
}

TEST(Psi, MixedDefinition) {
  Handle a = build_akl(2, 1, 2);
  EXPECT_EQ(psi_word_form(*a, 1, 2), a->X(1, 1) * a->Y(2, 1) + a->X(1, 2) * a->Y(2, 2));
  EXPECT_THROW(psi(*a, 2, 1), std::out_of_range);
}

TEST(Psi, SymplecticDiagonalRejected) {
  Handle c = build_am({Family::C, 2}, 2);
  EXPECT_THROW(psi(*c, 1, 1), std::invalid_argument);
  EXPECT_NO_THROW(psi(*c, 1, 2));
  EXPECT_THROW(psi(*build_sq({Family::GL, 2}), 1, 1), std::invalid_argument);
}

TEST(Psi, DiagonalIsMultipleOfPhiPlus) {
  for (int n : {2, 3}) {
    Handle s = build_sq({Family::D, n});
    NCPolynomial phi1 = phi_partial(*s, PartialKind::PhiPlus, 1, 1, 1);
    EXPECT_EQ(psi(*s, 1, 1), q(1 - n) * (q(n - 1) + q(1 - n)) * phi1) << n;
  }
}

TEST(Psi, PhiPlusMinusAgreeOnlyForFullSum) {
  Handle s = build_sq({Family::D, 3});
  auto plus = [&](int t) { return phi_partial(*s, PartialKind::PhiPlus, 1, 1, t); };
  auto minus = [&](int t) { return phi_partial(*s, PartialKind::PhiMinus, 1, 1, t); };
  EXPECT_EQ(plus(1), q(4) * minus(1));
  EXPECT_NE(plus(2), q(4) * minus(2));
  EXPECT_NE(plus(3), q(4) * minus(3));
  // the last term alone: v_n v_{-n} on both sides
  EXPECT_EQ(plus(3), minus(3));
}

TEST(Psi, VarphiIsRescaledDiagonal) {
  for (int n : {1, 2}) {
    Handle s = build_sq({Family::B, n});
    NCPolynomial vp = phi_partial(*s, PartialKind::Varphi, 1, 1, 1);
    EXPECT_EQ((Scalar(1L) + q(1 - 2 * n)) * vp, psi(*s, 1, 1)) << n;
    // the other closed form does not agree
    EXPECT_NE((q(2 * n) - q(-1)) / (q() - q(-1)) * psi(*s, 1, 1), vp) << n;
  }
  EXPECT_THROW(phi_partial(*build_sq({Family::D, 2}), PartialKind::Varphi, 1, 1, 1), std::invalid_argument);
}

TEST(Psi, PartialSumsAddUp) {
  Handle d = build_am({Family::D, 3}, 2);
  NCPolynomial sum = phi_partial(*d, PartialKind::PsiT, 1, 2, 3) + phi_partial(*d, PartialKind::BarPsiT, 1, 2, 3);
  EXPECT_EQ(sum, psi(*d, 1, 2));
  Handle c = build_am({Family::C, 2}, 2);
  NCPolynomial csum = phi_partial(*c, PartialKind::BarPsiT, 1, 2, 1) - phi_partial(*c, PartialKind::PsiT, 1, 2, 1);
  EXPECT_EQ(csum, psi(*c, 1, 2));
  EXPECT_EQ(parse_partial_kind("bar_psi_t"), PartialKind::BarPsiT);
  EXPECT_THROW(parse_partial_kind("phi"), std::invalid_argument);
}

TEST(Psi, AllGeneratorsAreInvariant) {
  for (const Handle& h : {build_sq({Family::D, 2}), build_sq({Family::B, 2}), build_am({Family::D, 2}, 2),
                          build_am({Family::B, 1}, 2), build_am({Family::C, 2}, 3), build_akl(2, 2, 2)}) {
    const bool mixed = h->kind == AlgebraKind::MixedGL;
    const int m = h->kind == AlgebraKind::SymmetricAlgebra ? 1 : h->m;
    const int cols = mixed ? h->l : m;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= cols; ++j) {
        if (h->spec.family == Family::C && i == j) continue;
        EXPECT_TRUE(is_invariant(*h, psi(*h, i, j), !mixed).invariant) << h->name() << " " << i << "," << j;
      }
  }
}

TEST(Relations, SuitesPass) {
  for (const Handle& h : {build_sq({Family::D, 2}), build_am({Family::D, 2}, 4), build_am({Family::B, 1}, 4),
                          build_am({Family::C, 2}, 4), build_akl(2, 2, 2)}) {
    RelationReport r = verify_relation_suite(*h);
    EXPECT_FALSE(r.entries.empty()) << h->name();
    for (const RelationEntry& e : r.entries)
      EXPECT_TRUE(e.pass) << h->name() << " " << e.citation << " " << e.instance;
    EXPECT_TRUE(r.pass());
    for (const RelationEntry& e : r.entries) EXPECT_EQ(e.pass, e.residual.is_zero());
  }
}

TEST(Relations, PrintedVariantsAreReportedAndFail) {
  for (const Handle& h : {build_am({Family::D, 2}, 4), build_am({Family::B, 1}, 4), build_am({Family::C, 2}, 4)}) {
    RelationReport r = verify_relation_suite(*h);
    EXPECT_FALSE(r.variants.empty()) << h->name();
    EXPECT_FALSE(r.notes.empty()) << h->name();
    std::size_t failing = 0;
    for (const RelationEntry& e : r.variants) failing += e.pass ? 0 : 1;
    EXPECT_GT(failing, 0u) << h->name();
  }
  RelationReport gl = verify_relation_suite(*build_akl(2, 2, 2));
  EXPECT_TRUE(gl.variants.empty());
}

TEST(Fft, OrthogonalDimensions) {
  Handle d = build_am({Family::D, 2}, 2);
  EXPECT_EQ(fft_verify(*d, {1, 1}).invariant_dim, 1u);
  EXPECT_EQ(fft_verify(*d, {2, 0}).invariant_dim, 1u);
  FftReport r22 = fft_verify(*d, {2, 2});
  EXPECT_EQ(r22.invariant_dim, 2u);
  EXPECT_TRUE(r22.pass);
  EXPECT_EQ(fft_verify(*build_sq({Family::D, 2}), {3}).invariant_dim, 0u);
  EXPECT_EQ(fft_verify(*build_akl(2, 1, 1), {1, 1}).invariant_dim, 1u);
}

TEST(Fft, MatchesClassicalCount) {
  for (const Handle& h : {build_am({Family::D, 2}, 2), build_am({Family::B, 1}, 2), build_am({Family::C, 2}, 2)}) {
    const bool strict = h->spec.family == Family::C;
    for (const auto& md : multidegrees(2, 4)) {
      FftReport r = fft_verify(*h, md);
      EXPECT_TRUE(r.pass) << h->name();
      EXPECT_EQ(r.invariant_dim, classical_pair_count(md, strict)) << h->name() << " " << md[0] << "," << md[1];
    }
  }
  Handle gl = build_akl(2, 2, 2);
  for (const auto& md : multidegrees(4, 4)) {
    FftReport r = fft_verify(*gl, md);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.invariant_dim, classical_mixed_count({md[0], md[1]}, {md[2], md[3]}));
  }
}

TEST(Fft, SpanOfPsiMonomials) {
  Handle d = build_am({Family::D, 2}, 2);
  SpanResult s = psi_monomial_span(*d, {2, 2});
  // Ψ11Ψ22, Ψ12Ψ12 are independent; Ψ22Ψ11 is not generated (canonical order only)
  EXPECT_EQ(s.monomials, 2u);
  EXPECT_EQ(s.dimension, 2u);
  EXPECT_THROW(psi_monomial_span(*d, {2}), std::invalid_argument);
}

TEST(Exterior, Partitions) {
  EXPECT_EQ(partitions_in_box(2, 2).size(), 6u);
  EXPECT_EQ(partitions_in_box(2, 3).size(), 10u);
  EXPECT_EQ(conjugate({2, 1}), (std::vector<int>{2, 1}));
  EXPECT_EQ(conjugate({3, 1}), (std::vector<int>{2, 1, 1}));
  EXPECT_TRUE(conjugate({}).empty());
}

TEST(Exterior, HighestWeightVectors) {
  for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}})
    for (const auto& lam : partitions_in_box(m, n)) {
      HighestWeightReport r = exterior_highest_weight(m, n, lam);
      EXPECT_TRUE(r.pass()) << m << "x" << n << " |λ|=" << lam.size();
    }
  Handle ext = build_exterior(2, 2);
  HighestWeightReport r = exterior_highest_weight(2, 2, {2, 1});
  EXPECT_EQ(r.pi, ext->reduce(ext->X(1, 1) * ext->X(1, 2) * ext->X(2, 1)));
  EXPECT_EQ(r.row_weight, (std::vector<int>{2, 1}));
  EXPECT_EQ(r.column_weight, (std::vector<int>{2, 1}));
  EXPECT_THROW(exterior_highest_weight(2, 2, {3}), std::invalid_argument);
  EXPECT_THROW(exterior_highest_weight(2, 2, {1, 2}), std::invalid_argument);
}

TEST(Exterior, SkewDuality) {
  SkewDualityReport a = skew_duality_check(2, 2);
  EXPECT_EQ(a.total, 16u);
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(a.by_degree, (std::vector<unsigned long long>{1, 4, 6, 4, 1}));
  SkewDualityReport b = skew_duality_check(2, 3);
  EXPECT_EQ(b.total, 64u);
  EXPECT_TRUE(b.pass());
  EXPECT_EQ(b.by_degree, (std::vector<unsigned long long>{1, 6, 15, 20, 15, 6, 1}));
}
