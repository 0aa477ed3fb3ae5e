#include <gtest/gtest.h>

#include "qinv/linalg.hpp"
#include "qinv/rootdata.hpp"

using namespace qinv;

namespace {

const std::vector<LieTypeSpec> kGrid = {{Family::D, 2}, {Family::D, 3}, {Family::B, 1}, {Family::B, 2},
                                        {Family::C, 2}, {Family::C, 3}, {Family::GL, 2}, {Family::GL, 3}};

std::size_t idx(const RepData& r, int s) { return static_cast<std::size_t>(r.label_of(s) - 1); }

}  // namespace

TEST(RootData, RankValidation) {
  EXPECT_THROW(natural_rep({Family::D, 1}), std::invalid_argument);
  EXPECT_THROW(natural_rep({Family::B, 0}), std::invalid_argument);
  EXPECT_NO_THROW(natural_rep({Family::GL, 1}));
}

TEST(RootData, D2LastRaisingOperator) {
  RepData r = natural_rep({Family::D, 2});
  const auto& e2 = r.e[1];
  EXPECT_EQ(e2.nnz(), 2u);
  EXPECT_EQ(e2.at(idx(r, 1), idx(r, -2)), Scalar(1L));
  EXPECT_EQ(e2.at(idx(r, 2), idx(r, -1)), Scalar(-1L));
}

TEST(RootData, B1Matrices) {
  RepData r = natural_rep({Family::B, 1});
  EXPECT_EQ(r.dimV, 3);
  EXPECT_EQ(r.e[0].at(idx(r, 1), idx(r, 0)), Scalar(1L));
  EXPECT_EQ(r.e[0].at(idx(r, 0), idx(r, -1)), Scalar(-1L));
  EXPECT_EQ(r.e[0].nnz(), 2u);
  EXPECT_EQ(r.k[0].at(0, 0), Scalar::q());
  EXPECT_EQ(r.k[0].at(1, 1), Scalar(1L));
  EXPECT_EQ(r.k[0].at(2, 2), Scalar::q(-1));
}

TEST(RootData, GL2Matrices) {
  RepData r = natural_rep({Family::GL, 2});
  EXPECT_EQ(r.e[0].at(0, 1), Scalar(1L));
  EXPECT_EQ(r.e[0].nnz(), 1u);
  EXPECT_EQ(r.f[0].at(1, 0), Scalar(1L));
  EXPECT_EQ(r.K[0].at(0, 0), Scalar::q());
  EXPECT_EQ(r.K[0].at(1, 1), Scalar(1L));
}

TEST(RootData, PrintedTorusMatchesWeights) {
  // π(k_n) = 1 + (q^2-1)E_{nn} + (q^{-2}-1)E_{-n,-n} for C
  RepData c = natural_rep({Family::C, 2});
  EXPECT_EQ(c.k[1].at(idx(c, 2), idx(c, 2)), Scalar::q(2));
  EXPECT_EQ(c.k[1].at(idx(c, -2), idx(c, -2)), Scalar::q(-2));
  EXPECT_EQ(c.k[1].at(idx(c, 1), idx(c, 1)), Scalar(1L));
  // π(k_n) for D raises on v_{n-1}, v_n
  RepData d = natural_rep({Family::D, 3});
  EXPECT_EQ(d.k[2].at(idx(d, 2), idx(d, 2)), Scalar::q());
  EXPECT_EQ(d.k[2].at(idx(d, 3), idx(d, 3)), Scalar::q());
  EXPECT_EQ(d.k[2].at(idx(d, -3), idx(d, -3)), Scalar::q(-1));
}

TEST(RootData, DefiningRelationsHoldOnGrid) {
  for (const auto& s : kGrid) {
    RepData r = natural_rep(s);
    for (const auto& c : check_uq_relations(r)) EXPECT_TRUE(c.pass) << to_string(s) << ": " << c.name;
  }
}

TEST(RootData, QuantumDimension) {
  EXPECT_EQ(quantum_dimension({Family::D, 2}), Scalar::q(2) + Scalar(2L) + Scalar::q(-2));
  EXPECT_EQ(quantum_dimension({Family::B, 1}), Scalar::q() + Scalar(1L) + Scalar::q(-1));
  EXPECT_EQ(classical_limit(quantum_dimension({Family::D, 3})), 6);
}

TEST(RootDataProperty, QuantumDimensionIsTraceOfK2Rho) {
  for (const auto& s : kGrid) {
    EXPECT_EQ(quantum_dimension(s), quantum_trace_of_k2rho(s)) << to_string(s);
    EXPECT_EQ(classical_limit(quantum_dimension(s)), natural_rep(s).dimV) << to_string(s);
  }
}

TEST(RootData, RhoPairings) {
  // 2ρ for so_{2n} is Σ (2n-2i) ε_i
  LieTypeSpec d3{Family::D, 3};
  RepData r = natural_rep(d3);
  EXPECT_EQ(r.two_rho, (std::vector<int>{4, 2, 0}));
  EXPECT_EQ(rho_pairing({Family::D, 2}, 1), 2);
  EXPECT_EQ(rho_pairing({Family::B, 1}, 2), 0);
  EXPECT_EQ(rho_pairing({Family::GL, 2}, 2), -1);
}

TEST(RootData, WeylDimension) {
  EXPECT_EQ(irrep_dim_gl(2, {1}), 2u);
  EXPECT_EQ(irrep_dim_gl(2, {2, 1}), 2u);
  EXPECT_EQ(irrep_dim_gl(3, {1, 1}), 3u);
  EXPECT_EQ(irrep_dim_gl(3, {2, 1}), 8u);
  EXPECT_THROW(irrep_dim_gl(1, {1, 1}), std::invalid_argument);
}

TEST(RootData, Sigma) {
  LieTypeSpec d2{Family::D, 2};
  LinearOperator s = sigma_candidate(d2);
  RepData r = natural_rep(d2);
  EXPECT_EQ(s * s, LinearOperator::identity(4));
  EXPECT_EQ(s * r.e[0] * s, r.e[1]);
  EXPECT_EQ(s * (r.k[0] * r.k[1]), (r.k[0] * r.k[1]) * s);
  // rank reading: n = 2 even, sign +1 on v_1
  EXPECT_EQ(s.at(0, 0), Scalar(1L));
  EXPECT_EQ(sigma_candidate({Family::D, 3}).at(0, 0), Scalar(-1L));
  EXPECT_EQ(sigma_candidate({Family::D, 3}, SigmaReading::MatrixSize).at(0, 0), Scalar(1L));
  LinearOperator sb = sigma_candidate({Family::B, 2});
  EXPECT_EQ(sb, LinearOperator::identity(5));
  EXPECT_THROW(sigma_candidate({Family::C, 2}), std::invalid_argument);
}

TEST(RootDataProperty, RaisingOperatorsRespectWeights) {
  for (const auto& s : kGrid) {
    RepData r = natural_rep(s);
    for (int i = 0; i < r.chevalley_rank(); ++i)
      for (std::size_t a = 0; a < static_cast<std::size_t>(r.dimV); ++a)
        for (const auto& [b, c] : r.f[static_cast<std::size_t>(i)].column(a)) {
          (void)c;
          auto w = r.weights[a];
          for (std::size_t t = 0; t < w.size(); ++t) w[t] -= r.simple_roots[static_cast<std::size_t>(i)][t];
          EXPECT_EQ(w, r.weights[b]);
        }
  }
}

TEST(LinAlg, InverseAndNullspace) {
  LinearOperator a(2, 2);
  a.set(0, 0, Scalar::q());
  a.set(0, 1, Scalar(1L));
  a.set(1, 1, Scalar::q(-1));
  auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(a * *inv, LinearOperator::identity(2));
  std::vector<SparseVec> rows = {{{0, Scalar(1L)}, {1, Scalar::q()}}};
  auto ns = nullspace(rows, 3);
  EXPECT_EQ(ns.size(), 2u);
  for (const auto& x : ns) {
    Scalar dot;
    for (const auto& [i, c] : rows[0])
      if (x.count(i)) dot += c * x.at(i);
    EXPECT_TRUE(dot.is_zero());
  }
}
