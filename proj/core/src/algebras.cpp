#include "qinv/algebras.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <tuple>

#include "qinv/braiding.hpp"
#include "qinv/linalg.hpp"

namespace qinv {

namespace {

Scalar q(int k = 1) { return Scalar::q(k); }
Scalar dq() { return q(1) - q(-1); }

NCPolynomial w2(LetterId a, LetterId b, const Scalar& c = Scalar(1L)) {
  return NCPolynomial::monomial(Word{a, b}, c);
}

// Relation Σ c·L(x)L(y) read off a vector Σ c·v_x⊗v_y in V⊗V.
NCPolynomial from_tensor(const SparseVec& vec, int dim, const std::function<LetterId(int)>& L) {
  NCPolynomial p;
  for (const auto& [idx, c] : vec) {
    auto lab = tensor_labels(idx, dim, 2);
    p.add_term(Word{L(lab[0]), L(lab[1])}, c);
  }
  return p;
}

// Relations of S_q(V) in one copy; L maps a label to a letter.
std::vector<QuadraticRelation> sq_printed(const LieTypeSpec& spec,
                                          const std::function<LetterId(int)>& L) {
  const RepData& rep = natural_rep_cached(spec);
  const int n = spec.rank;
  auto S = [&](int s) { return L(rep.label_of(s)); };
  std::vector<QuadraticRelation> out;
  auto add = [&](NCPolynomial p, std::string cite) { out.push_back({std::move(p), std::move(cite)}); };

  if (spec.family == Family::GL) {
    const LinearOperator R = gl_r_matrix(n);
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        NCPolynomial p = w2(L(a), L(b), q());
        for (int a2 = 1; a2 <= n; ++a2)
          for (int b2 = 1; b2 <= n; ++b2)
            p.add_term(Word{L(b2), L(a2)},
                       -R.at(tensor_index({a2, b2}, n), tensor_index({a, b}, n)));
        add(std::move(p), "same-row RTT: q t_a t_b = sum R t_b' t_a'");
      }
    return out;
  }

  // B: index n+1 stands for v_0 in the first two families of relations
  const int top = spec.family == Family::B ? n + 1 : n;
  auto pos = [&](int j) { return j == n + 1 ? 0 : j; };
  for (int i = 1; i <= top; ++i)
    for (int j = i + 1; j <= top; ++j) {
      add(w2(S(pos(i)), S(pos(j))) - w2(S(pos(j)), S(pos(i)), q(-1)),
          "v_i v_j = q^-1 v_j v_i, i<j");
      add(w2(S(-pos(j)), S(-pos(i))) - w2(S(-pos(i)), S(-pos(j)), q(-1)),
          "v_-j v_-i = q^-1 v_-i v_-j, i<j");
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) add(w2(S(i), S(-j)) - w2(S(-j), S(i), q(-1)), "v_i v_-j = q^-1 v_-j v_i, i!=j");
  for (int i = 1; i < n; ++i) {
    add(w2(S(i), S(-i)) - w2(S(-i), S(i)) - w2(S(i + 1), S(-i - 1), q()) +
            w2(S(-i - 1), S(i + 1), q(-1)),
        "v_i v_-i - v_-i v_i = q v_i+1 v_-i-1 - q^-1 v_-i-1 v_i+1");
  }
  switch (spec.family) {
    case Family::D:
      add(w2(S(n), S(-n)) - w2(S(-n), S(n)), "v_n v_-n = v_-n v_n");
      break;
    case Family::B:
      add(w2(S(0), S(0), q() - Scalar(1L)) - w2(S(n), S(-n)) + w2(S(-n), S(n)),
          "(q-1) v_0 v_0 = v_n v_-n - v_-n v_n");
      break;
    case Family::C: {
      NCPolynomial p;
      for (int i = 1; i <= n; ++i) {
        p.add_term(Word{S(i), S(-i)}, q(n - i + 1));
        p.add_term(Word{S(-i), S(i)}, -q(i - n - 1));
      }
      add(std::move(p), "sum q^(n-i+1) v_i v_-i - q^(i-n-1) v_-i v_i = 0");
      break;
    }
    default:
      break;
  }
  return out;
}

// The image of the non-symmetric part of Ř on V⊗V.
std::vector<QuadraticRelation> sq_derived(const LieTypeSpec& spec,
                                          const std::function<LetterId(int)>& L) {
  const LinearOperator& R = rcheck(spec);
  const std::size_t N = R.rows();
  const LinearOperator Id = LinearOperator::identity(N);
  LinearOperator M = R - q() * Id;
  std::string cite = "image of (R - q) on V(x)V";
  if (spec.family == Family::B || spec.family == Family::D) {
    M = M * (R - kappa(spec) * Id);
    cite = "image of (R - q)(R - kappa) on V(x)V";
  }
  const int dim = natural_rep_cached(spec).dimV;
  RowEchelon basis;
  for (const auto& col : columns(M)) basis.insert(col);
  std::vector<QuadraticRelation> out;
  for (const auto& [p, row] : basis.rows()) out.push_back({from_tensor(row, dim, L), cite});
  return out;
}

// X_{jb} X_{ia} = Σ Ř[(c,d),(b,a)] X_{ic} X_{jd}, i<j
std::vector<QuadraticRelation> cross_derived(const LieTypeSpec& spec, int m,
                                             const std::function<LetterId(int, int)>& X) {
  const LinearOperator& R = rcheck(spec);
  const int dim = natural_rep_cached(spec).dimV;
  std::vector<QuadraticRelation> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int a = 1; a <= dim; ++a)
        for (int b = 1; b <= dim; ++b) {
          NCPolynomial p = w2(X(j, b), X(i, a));
          for (const auto& [idx, c] : R.column(tensor_index({b, a}, dim))) {
            auto cd = tensor_labels(idx, dim, 2);
            p.add_term(Word{X(i, cd[0]), X(j, cd[1])}, -c);
          }
          out.push_back({std::move(p), "braided tensor product: X_jb X_ia = sum R X_ic X_jd, i<j"});
        }
  return out;
}

std::vector<QuadraticRelation> cross_printed_d(int n, int m, const std::function<LetterId(int, int)>& X) {
  const int N = 2 * n;
  std::vector<QuadraticRelation> out;
  auto add = [&](NCPolynomial p, const char* cite) { out.push_back({std::move(p), cite}); };
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      auto psi = [&](int t) {
        NCPolynomial p;
        for (int k = 1; k <= t; ++k) p.add_term(Word{X(i, N + 1 - k), X(j, k)}, q(k - n));
        return p;
      };
      auto psibar = [&](int t) {
        NCPolynomial p;
        for (int k = 1; k <= t; ++k) p.add_term(Word{X(i, k), X(j, N + 1 - k)}, q(n - k));
        return p;
      };
      const NCPolynomial Psi = psi(n) + psibar(n);
      for (int a = 1; a <= N; ++a) add(w2(X(j, a), X(i, a)) - w2(X(i, a), X(j, a), q()), "X_ja X_ia = q X_ia X_ja");
      for (int a = 1; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b) {
          if (b == N + 1 - a) continue;
          add(w2(X(j, b), X(i, a)) - w2(X(i, a), X(j, b)) - w2(X(i, b), X(j, a), dq()),
              "X_jb X_ia = X_ia X_jb + (q-q^-1) X_ib X_ja, a<b non-dual");
          add(w2(X(j, a), X(i, b)) - w2(X(i, b), X(j, a)), "X_ja X_ib = X_ib X_ja, a<b non-dual");
        }
      for (int t = 1; t <= n; ++t) {
        add(w2(X(j, t), X(i, N + 1 - t)) - w2(X(i, N + 1 - t), X(j, t), q()) + (dq() * q(n - t)) * psi(t),
            "X_jt X_i,2n+1-t = q X_i,2n+1-t X_jt - (q-q^-1) q^(n-t) psi_t");
        add(w2(X(j, N + 1 - t), X(i, t)) - w2(X(i, t), X(j, N + 1 - t), q()) +
                w2(X(i, N + 1 - t), X(j, t), dq()) - (dq() * q(t - n)) * (psibar(t + 1) - Psi),
            "X_j,2n+1-t X_it = q X_it X_j,2n+1-t - (q-q^-1) X_i,2n+1-t X_jt + (q-q^-1) q^(t-n) (psibar_t+1 - Psi)");
      }
    }
  return out;
}

std::vector<QuadraticRelation> cross_printed_b(int n, int m, const std::function<LetterId(int, int)>& X) {
  const int N = 2 * n + 1;
  std::vector<QuadraticRelation> out;
  auto add = [&](NCPolynomial p, const char* cite) { out.push_back({std::move(p), cite}); };
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      auto psi = [&](int t) {
        NCPolynomial p;
        for (int s = 1; s <= t; ++s) p.add_term(Word{X(i, N + 1 - s), X(j, s)}, q(s - n - 1));
        return p;
      };
      auto psibar = [&](int t) {
        NCPolynomial p;
        for (int s = 1; s <= t; ++s) p.add_term(Word{X(i, s), X(j, N + 1 - s)}, q(n - s));
        return p;
      };
      const NCPolynomial Psi = psi(n) + w2(X(i, n + 1), X(j, n + 1)) + psibar(n);
      for (int a = 1; a <= N; ++a) add(w2(X(j, a), X(i, a)) - w2(X(i, a), X(j, a), q()), "X_ja X_ia = q X_ia X_ja");
      for (int a = 1; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b) {
          if (a + b == N + 1) continue;
          add(w2(X(j, b), X(i, a)) - w2(X(i, a), X(j, b)) - w2(X(i, b), X(j, a), dq()),
              "X_jb X_ia = X_ia X_jb + (q-q^-1) X_ib X_ja, a<b, a+b!=2n+2");
          add(w2(X(j, a), X(i, b)) - w2(X(i, b), X(j, a)), "X_ja X_ib = X_ib X_ja, a<b, a+b!=2n+2");
        }
      add(w2(X(j, n + 1), X(i, n + 1)) - w2(X(i, n + 1), X(j, n + 1)) + dq() * psi(n),
          "X_j,n+1 X_i,n+1 = X_i,n+1 X_j,n+1 - (q-q^-1) psi_n");
      for (int t = 1; t <= n; ++t) {
        add(w2(X(j, t), X(i, N + 1 - t)) - w2(X(i, N + 1 - t), X(j, t), q()) + (dq() * q(n - t + 1)) * psi(t),
            "X_jt X_i,2n+2-t = q X_i,2n+2-t X_jt - (q-q^-1) q^(n-t+1) psi_t");
        add(w2(X(j, N + 1 - t), X(i, t)) - w2(X(i, t), X(j, N + 1 - t), q(-1)) +
                w2(X(i, N + 1 - t), X(j, t), dq()) - (dq() * q(t - n)) * (psibar(t) - Psi),
            "X_j,2n+2-t X_it = q^-1 X_it X_j,2n+2-t - (q-q^-1) X_i,2n+2-t X_jt + (q-q^-1) q^(t-n) (psibar_t - Psi)");
      }
    }
  return out;
}

std::vector<QuadraticRelation> cross_printed_c(int n, int m, const std::function<LetterId(int, int)>& X) {
  const int N = 2 * n;
  std::vector<QuadraticRelation> out;
  auto add = [&](NCPolynomial p, const char* cite) { out.push_back({std::move(p), cite}); };
  auto Psi = [&](int s, int t) {
    NCPolynomial p;
    for (int k = 1; k <= n; ++k) {
      p.add_term(Word{X(s, k), X(t, N + 1 - k)}, q(n + 1 - k));
      p.add_term(Word{X(s, N + 1 - k), X(t, k)}, -q(k - n - 1));
    }
    return p;
  };
  for (int s = 1; s <= m; ++s)
    for (int t = s + 1; t <= m; ++t) {
      // tail sum from i
      auto psibar = [&](int i) {
        NCPolynomial p;
        for (int k = i; k <= n; ++k) p.add_term(Word{X(s, k), X(t, N + 1 - k)}, q(n + 1 - k));
        return p;
      };
      for (int a = 1; a <= N; ++a) add(w2(X(t, a), X(s, a)) - w2(X(s, a), X(t, a), q()), "X_ta X_sa = q X_sa X_ta");
      for (int a = 1; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b) {
          if (b == N + 1 - a) continue;
          add(w2(X(t, a), X(s, b)) - w2(X(s, b), X(t, a)), "X_ta X_sb = X_sb X_ta, a<b non-dual");
          add(w2(X(t, b), X(s, a)) - w2(X(s, a), X(t, b)) - w2(X(s, b), X(t, a), dq()),
              "X_tb X_sa = X_sa X_tb + (q-q^-1) X_sb X_ta, a<b non-dual");
        }
      add(Psi(t, s) + q(-1 - 2 * n) * Psi(s, t), "Psi(t,s) = -q^(-1-2n) Psi(s,t)");
      for (int i = 1; i <= n; ++i) {
        add(w2(X(t, i), X(s, N + 1 - i)) - w2(X(s, N + 1 - i), X(t, i), q(-1)),
            "X_ti X_s,2n+1-i = q^-1 X_s,2n+1-i X_ti");
        add(w2(X(t, N + 1 - i), X(s, i)) - w2(X(s, i), X(t, N + 1 - i), q()) -
                w2(X(s, N + 1 - i), X(t, i), dq()) - (dq() * q(i - n - 1)) * (psibar(i + 1) - Psi(s, t)),
            "X_t,2n+1-i X_si = q X_si X_t,2n+1-i + (q-q^-1) X_s,2n+1-i X_ti + (q-q^-1) q^(i-n-1) (psibar_i+1 - Psi)");
      }
    }
  return out;
}

// ordered RTT relations between rows i<j of the coordinate algebra
std::vector<QuadraticRelation> cross_printed_gl(int n, int m, const std::function<LetterId(int, int)>& X) {
  const LinearOperator R = gl_r_matrix(n);
  std::vector<QuadraticRelation> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          NCPolynomial p = w2(X(j, b), X(i, a));
          for (int a2 = 1; a2 <= n; ++a2)
            for (int b2 = 1; b2 <= n; ++b2)
              p.add_term(Word{X(i, b2), X(j, a2)}, -R.at(tensor_index({a2, b2}, n), tensor_index({b, a}, n)));
          out.push_back({std::move(p), "ordered RTT: t_jb t_ia = sum t_ib' t_ja' R, i<j"});
        }
  return out;
}

struct Cache {
  std::mutex mu;
  std::map<std::tuple<int, LieTypeSpec, int, int, int>, Handle> map;
};

Cache& cache() {
  static Cache c;
  return c;
}

template <class F>
Handle cached(AlgebraKind kind, const LieTypeSpec& spec, int m, int l, Variant v, F build) {
  auto key = std::make_tuple(static_cast<int>(kind), spec, m, l, static_cast<int>(v));
  {
    std::lock_guard<std::mutex> lock(cache().mu);
    auto it = cache().map.find(key);
    if (it != cache().map.end()) return it->second;
  }
  Handle h = build();
  std::lock_guard<std::mutex> lock(cache().mu);
  return cache().map.emplace(key, h).first->second;
}

Handle finish(std::shared_ptr<AlgebraHandle> h) {
  h->rules = rules_from_relations(h->alphabet, h->square_free, h->relations);
  h->overlap_failures = check_overlaps(h->rules);
  return h;
}

}  // namespace

std::string to_string(Variant v) { return v == Variant::Printed ? "printed" : "derived"; }

std::string AlgebraHandle::name() const {
  const std::string t = to_string(spec);
  switch (kind) {
    case AlgebraKind::SymmetricAlgebra: return "S_q(" + t + ")";
    case AlgebraKind::Copies: return "A_" + std::to_string(m) + "(" + t + ")";
    case AlgebraKind::MixedGL:
      return "A_{" + std::to_string(m) + "," + std::to_string(l) + "}(gl_" + std::to_string(spec.rank) + ")";
    case AlgebraKind::Exterior:
      return "Lambda_q(" + std::to_string(m) + "," + std::to_string(spec.rank) + ")";
  }
  return "?";
}

NCPolynomial AlgebraHandle::mul(const NCPolynomial& a, const NCPolynomial& b) const {
  return multiply(a, b, rules);
}

NCPolynomial AlgebraHandle::reduce(const NCPolynomial& a) const { return normal_form(a, rules); }

Alphabet copies_alphabet(const LieTypeSpec& spec, int m) {
  const int dim = natural_rep_cached(spec).dimV;
  std::vector<Letter> letters;
  std::vector<int> slots;
  for (int i = 1; i <= m; ++i)
    for (int a = 1; a <= dim; ++a) {
      letters.push_back({LetterKind::X, i, a});
      slots.push_back(i - 1);
    }
  return Alphabet(std::move(letters), std::move(slots), m, LetterStyle::Matrix);
}

namespace {

std::function<LetterId(int, int)> copy_letter(int dim) {
  return [dim](int i, int a) { return static_cast<LetterId>((i - 1) * dim + (a - 1)); };
}

std::vector<QuadraticRelation> per_copy(const LieTypeSpec& spec, int m, bool printed) {
  const int dim = natural_rep_cached(spec).dimV;
  std::vector<QuadraticRelation> out;
  for (int i = 1; i <= m; ++i) {
    auto L = [&](int a) { return copy_letter(dim)(i, a); };
    auto rels = printed ? sq_printed(spec, L) : sq_derived(spec, L);
    for (auto& r : rels) out.push_back({std::move(r.poly), "S_q: " + r.citation});
  }
  return out;
}

}  // namespace

std::vector<QuadraticRelation> printed_am_relations(const LieTypeSpec& spec, int m) {
  validate(spec);
  auto out = per_copy(spec, m, true);
  const auto X = copy_letter(natural_rep_cached(spec).dimV);
  std::vector<QuadraticRelation> cross;
  switch (spec.family) {
    case Family::D: cross = cross_printed_d(spec.rank, m, X); break;
    case Family::B: cross = cross_printed_b(spec.rank, m, X); break;
    case Family::C: cross = cross_printed_c(spec.rank, m, X); break;
    case Family::GL: cross = cross_printed_gl(spec.rank, m, X); break;
  }
  out.insert(out.end(), cross.begin(), cross.end());
  return out;
}

std::vector<QuadraticRelation> derived_am_relations(const LieTypeSpec& spec, int m) {
  validate(spec);
  auto out = per_copy(spec, m, false);
  auto cross = cross_derived(spec, m, copy_letter(natural_rep_cached(spec).dimV));
  out.insert(out.end(), cross.begin(), cross.end());
  return out;
}

Handle build_sq(const LieTypeSpec& spec, Variant variant) {
  validate(spec);
  return cached(AlgebraKind::SymmetricAlgebra, spec, 1, 0, variant, [&] {
    auto h = std::make_shared<AlgebraHandle>();
    h->kind = AlgebraKind::SymmetricAlgebra;
    h->spec = spec;
    h->variant = variant;
    const int dim = natural_rep_cached(spec).dimV;
    std::vector<Letter> letters;
    for (int a = 1; a <= dim; ++a) letters.push_back({LetterKind::X, 1, a});
    h->alphabet = Alphabet(std::move(letters), std::vector<int>(static_cast<std::size_t>(dim), 0), 1,
                           LetterStyle::Vector);
    auto L = [](int a) { return static_cast<LetterId>(a - 1); };
    h->relations = variant == Variant::Printed ? sq_printed(spec, L) : sq_derived(spec, L);
    return finish(h);
  });
}

Handle build_am(const LieTypeSpec& spec, int m, Variant variant) {
  validate(spec);
  if (m < 1) throw std::invalid_argument("number of copies must be positive");
  return cached(AlgebraKind::Copies, spec, m, 0, variant, [&] {
    auto h = std::make_shared<AlgebraHandle>();
    h->kind = AlgebraKind::Copies;
    h->spec = spec;
    h->m = m;
    h->variant = variant;
    h->alphabet = copies_alphabet(spec, m);
    h->relations = variant == Variant::Printed ? printed_am_relations(spec, m) : derived_am_relations(spec, m);
    return finish(h);
  });
}

Handle build_akl(int n, int k, int l) {
  const LieTypeSpec spec{Family::GL, n};
  validate(spec);
  if (k < 0 || l < 0 || k + l == 0) throw std::invalid_argument("need at least one row");
  return cached(AlgebraKind::MixedGL, spec, k, l, Variant::Printed, [&] {
    auto h = std::make_shared<AlgebraHandle>();
    h->kind = AlgebraKind::MixedGL;
    h->spec = spec;
    h->m = k;
    h->l = l;
    h->variant = Variant::Printed;
    std::vector<Letter> letters;
    std::vector<int> slots;
    for (int i = 1; i <= k; ++i)
      for (int a = 1; a <= n; ++a) {
        letters.push_back({LetterKind::X, i, a});
        slots.push_back(i - 1);
      }
    for (int b = 1; b <= l; ++b)
      for (int a = 1; a <= n; ++a) {
        letters.push_back({LetterKind::Y, b, a});
        slots.push_back(k + b - 1);
      }
    h->alphabet = Alphabet(std::move(letters), std::move(slots), k + l, LetterStyle::Matrix);
    auto X = [n](int i, int a) { return static_cast<LetterId>((i - 1) * n + (a - 1)); };
    auto Y = [n, k](int b, int a) { return static_cast<LetterId>((k + b - 1) * n + (a - 1)); };

    const LinearOperator R = gl_r_matrix(n);
    const LinearOperator Rinv = *inverse(R);
    auto at = [n](const LinearOperator& M, int x, int y, int x2, int y2) {
      return M.at(tensor_index({x, y}, n), tensor_index({x2, y2}, n));
    };
    auto& rel = h->relations;
    for (int i = 1; i <= k; ++i) {
      auto L = [&](int a) { return X(i, a); };
      for (auto& r : sq_printed(spec, L)) rel.push_back(std::move(r));
    }
    for (auto& r : cross_printed_gl(n, k, X)) rel.push_back(std::move(r));
    for (int i = 1; i <= l; ++i)
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          NCPolynomial p = w2(Y(i, b), Y(i, a), q(-1));
          for (int a2 = 1; a2 <= n; ++a2)
            for (int b2 = 1; b2 <= n; ++b2) p.add_term(Word{Y(i, a2), Y(i, b2)}, -at(Rinv, a, b, a2, b2));
          rel.push_back({std::move(p), "dual same-row RTT: q^-1 tb_ib tb_ia = sum tb_ia' tb_ib' R^-1"});
        }
    for (int i = 1; i <= l; ++i)
      for (int j = i + 1; j <= l; ++j)
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b) {
            NCPolynomial p = w2(Y(j, b), Y(i, a));
            for (int a2 = 1; a2 <= n; ++a2)
              for (int b2 = 1; b2 <= n; ++b2) p.add_term(Word{Y(i, a2), Y(j, b2)}, -at(Rinv, a, b, a2, b2));
            rel.push_back({std::move(p), "dual ordered RTT: tb_jb tb_ia = sum tb_ia' tb_jb' R^-1, i<j"});
          }
    for (int i = 1; i <= k; ++i)
      for (int be = 1; be <= l; ++be)
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b) {
            NCPolynomial p = w2(Y(be, b), X(i, a));
            if (a == b) {
              p -= w2(X(i, a), Y(be, a), q());
              for (int c = a; c <= n; ++c) p += w2(X(i, c), Y(be, c), dq());
              rel.push_back({std::move(p), "Y_ba X_ia = q X_ia Y_ba - (q-q^-1) sum_{c>=a} X_ic Y_bc"});
            } else {
              p -= w2(X(i, a), Y(be, b));
              rel.push_back({std::move(p), "Y_bb X_ia = X_ia Y_bb, a!=b"});
            }
          }
    return finish(h);
  });
}

Handle build_exterior(int m, int n, Variant variant) {
  const LieTypeSpec spec{Family::GL, n};
  validate(spec);
  validate(LieTypeSpec{Family::GL, m});
  return cached(AlgebraKind::Exterior, spec, m, 0, variant, [&] {
    auto h = std::make_shared<AlgebraHandle>();
    h->kind = AlgebraKind::Exterior;
    h->spec = spec;
    h->m = m;
    h->variant = variant;
    h->square_free = true;
    std::vector<Letter> letters;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j) letters.push_back({LetterKind::X, i, j});
    h->alphabet = Alphabet(std::move(letters), std::vector<int>(static_cast<std::size_t>(m * n), 0), 1,
                           LetterStyle::Matrix);
    auto X = [n](int i, int j) { return static_cast<LetterId>((i - 1) * n + (j - 1)); };
    auto& rel = h->relations;
    if (variant == Variant::Printed) {
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
          for (int k = 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l) {
              rel.push_back({w2(X(i, l), X(j, k)) + w2(X(j, k), X(i, l)) + w2(X(j, l), X(i, k), dq()),
                             "X_il X_jk + X_jk X_il + (q-q^-1) X_jl X_ik = 0"});
              rel.push_back({w2(X(i, k), X(j, l)) + w2(X(j, l), X(i, k)), "X_ik X_jl + X_jl X_ik = 0"});
            }
      for (int i = 1; i <= m; ++i)
        for (int k = 1; k <= n; ++k) rel.push_back({w2(X(i, k), X(i, k)), "X_ik^2 = 0"});
      for (int i = 1; i <= m; ++i)
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l)
            rel.push_back({w2(X(i, l), X(i, k)) + w2(X(i, k), X(i, l), q(-1)), "X_il X_ik + q^-1 X_ik X_il = 0"});
      for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= m; ++i)
          for (int j = i + 1; j <= m; ++j)
            rel.push_back({w2(X(j, k), X(i, k)) + w2(X(i, k), X(j, k), q(-1)), "X_jk X_ik + q^-1 X_ik X_jk = 0"});
    } else {
      // Ř on (V_m⊗V_n)^{⊗2}, conjugated from Ř_m ⊗ Ř_n; relations span the image of Ř + 1
      const LinearOperator Rm = rcheck({Family::GL, m});
      const LinearOperator Rn = rcheck({Family::GL, n});
      const int d = m * n;
      const std::size_t N = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
      RowEchelon basis;
      for (std::size_t col = 0; col < N; ++col) {
        auto lab = tensor_labels(col, d, 2);
        const int i = (lab[0] - 1) / n + 1, j = (lab[0] - 1) % n + 1;
        const int s = (lab[1] - 1) / n + 1, t = (lab[1] - 1) % n + 1;
        SparseVec img;
        add_entry(img, col, Scalar(1L));
        for (const auto& [r1, c1] : Rm.column(tensor_index({i, s}, m))) {
          auto is = tensor_labels(r1, m, 2);
          for (const auto& [r2, c2] : Rn.column(tensor_index({j, t}, n))) {
            auto jt = tensor_labels(r2, n, 2);
            const int left = (is[0] - 1) * n + jt[0], right = (is[1] - 1) * n + jt[1];
            add_entry(img, tensor_index({left, right}, d), c1 * c2);
          }
        }
        basis.insert(std::move(img));
      }
      for (const auto& [p, row] : basis.rows())
        rel.push_back({from_tensor(row, d, [](int a) { return static_cast<LetterId>(a - 1); }),
                       "image of (R + 1) on V(x)V"});
    }
    return finish(h);
  });
}

std::size_t graded_dimension(const AlgebraHandle& h, const std::vector<int>& md) {
  return graded_words(h.alphabet, md, h.square_free).size();
}

namespace {

struct Block {
  int factor;
  std::vector<int> labels;
  friend bool operator<(const Block& a, const Block& b) {
    return std::tie(a.factor, a.labels) < std::tie(b.factor, b.labels);
  }
};
using Blocks = std::vector<Block>;

void push_block(Blocks& bs, int factor, const std::vector<int>& labels) {
  if (labels.empty()) return;
  if (!bs.empty() && bs.back().factor == factor) {
    bs.back().labels.insert(bs.back().labels.end(), labels.begin(), labels.end());
  } else {
    bs.push_back({factor, labels});
  }
}

}  // namespace

NCPolynomial tensor_oracle_product(const AlgebraHandle& h, const NCPolynomial& x, const NCPolynomial& y,
                                   std::uint64_t fuel) {
  if (h.kind != AlgebraKind::Copies) throw std::invalid_argument("tensor oracle needs an A_m handle");
  const int dim = natural_rep_cached(h.spec).dimV;
  Handle sq = build_sq(h.spec, Variant::Derived);

  std::map<Blocks, Scalar> pending;
  for (const auto& [u, c] : x.terms())
    for (const auto& [w, d] : y.terms()) {
      Blocks bs;
      for (LetterId id : u) push_block(bs, h.alphabet.letter(id).factor, {h.alphabet.letter(id).label});
      for (LetterId id : w) push_block(bs, h.alphabet.letter(id).factor, {h.alphabet.letter(id).label});
      auto [it, fresh] = pending.try_emplace(std::move(bs), c * d);
      if (!fresh) it->second += c * d;
    }

  NCPolynomial out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Blocks& bs = node.key();
    const Scalar& c = node.mapped();
    if (c.is_zero()) continue;
    std::size_t p = 0;
    while (p + 1 < bs.size() && bs[p].factor < bs[p + 1].factor) ++p;
    if (p + 1 >= bs.size()) {
      // copies are in order: straighten each inside S_q(V)
      NCPolynomial prod(c);
      for (const Block& b : bs) {
        Word sw;
        for (int a : b.labels) sw.push_back(static_cast<LetterId>(a - 1));
        NCPolynomial nf = normal_form(NCPolynomial::monomial(sw), sq->rules, fuel);
        NCPolynomial mapped;
        for (const auto& [w, d] : nf.terms()) {
          Word mw;
          for (LetterId s : w) mw.push_back(h.x(b.factor, static_cast<int>(s) + 1));
          mapped.add_term(mw, d);
        }
        prod = prod * mapped;
      }
      out += prod;
      continue;
    }
    const Block& A = bs[p];
    const Block& B = bs[p + 1];
    const int k = static_cast<int>(A.labels.size()), l = static_cast<int>(B.labels.size());
    std::vector<int> joint = A.labels;
    joint.insert(joint.end(), B.labels.begin(), B.labels.end());
    const LinearOperator& R = rcheck_cabled(h.spec, k, l);
    for (const auto& [idx, d] : R.column(tensor_index(joint, dim))) {
      auto lab = tensor_labels(idx, dim, k + l);
      Blocks nb(bs.begin(), bs.begin() + static_cast<std::ptrdiff_t>(p));
      push_block(nb, B.factor, std::vector<int>(lab.begin(), lab.begin() + l));
      push_block(nb, A.factor, std::vector<int>(lab.begin() + l, lab.end()));
      for (std::size_t t = p + 2; t < bs.size(); ++t) push_block(nb, bs[t].factor, bs[t].labels);
      auto [it, fresh] = pending.try_emplace(std::move(nb), c * d);
      if (!fresh) it->second += c * d;
    }
  }
  return out;
}

std::vector<RelationDefect> relation_defects(const std::vector<QuadraticRelation>& printed,
                                             const AlgebraHandle& reference) {
  std::vector<RelationDefect> out;
  for (const auto& r : printed) {
    NCPolynomial d = reference.reduce(r.poly);
    if (!d.is_zero()) out.push_back({r.citation, r.poly, std::move(d)});
  }
  return out;
}

}  // namespace qinv
