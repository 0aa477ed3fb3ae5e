#include "qinv/rootdata.hpp"

#include <gmpxx.h>

#include <map>
#include <mutex>

namespace qinv {

std::string to_string(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "GL" || s == "gl" || s == "A") return Family::GL;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("unknown family '" + s + "' (expected GL, B, C or D)");
}

std::string to_string(const LieTypeSpec& s) { return to_string(s.family) + std::to_string(s.rank); }

void validate(const LieTypeSpec& s) {
  int min_rank = s.family == Family::D ? 2 : 1;
  if (s.rank < min_rank)
    throw std::invalid_argument("rank " + std::to_string(s.rank) + " out of range for family " +
                                to_string(s.family));
}

int pairing(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

int dim_of(const LieTypeSpec& s) {
  switch (s.family) {
    case Family::GL: return s.rank;
    case Family::B: return 2 * s.rank + 1;
    default: return 2 * s.rank;
  }
}

std::vector<int> eps(int n, int i, int coeff = 1) {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  w[static_cast<std::size_t>(i - 1)] = coeff;
  return w;
}

std::vector<int> vadd(std::vector<int> a, const std::vector<int>& b, int sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
  return a;
}

// diagonal operator with entries q^{(h, wt_a)}
LinearOperator torus_op(const std::vector<std::vector<int>>& weights, const std::vector<int>& h, int sign) {
  LinearOperator k(weights.size(), weights.size());
  for (std::size_t a = 0; a < weights.size(); ++a) k.set(a, a, Scalar::q(sign * pairing(h, weights[a])));
  return k;
}

}  // namespace

int RepData::label_of(int s) const {
  const int n = spec.rank;
  switch (spec.family) {
    case Family::GL: return s;
    case Family::B: return s > 0 ? s : (s == 0 ? n + 1 : 2 * n + 2 + s);
    default: return s > 0 ? s : 2 * n + 1 + s;
  }
}

int RepData::dual_label(int a) const { return label_of(-signed_index[static_cast<std::size_t>(a - 1)]); }

std::string RepData::label_name(int a) const {
  return "v_" + std::to_string(signed_index[static_cast<std::size_t>(a - 1)]);
}

RepData natural_rep(const LieTypeSpec& spec) {
  validate(spec);
  RepData r;
  r.spec = spec;
  const int n = spec.rank;
  const int N = dim_of(spec);
  r.dimV = N;
  for (int a = 1; a <= N; ++a) {
    int s = a;
    if (spec.family == Family::B) s = a <= n ? a : (a == n + 1 ? 0 : a - 2 * n - 2);
    else if (spec.family != Family::GL) s = a <= n ? a : a - 2 * n - 1;
    r.signed_index.push_back(s);
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    if (s != 0) w[static_cast<std::size_t>(std::abs(s) - 1)] = s > 0 ? 1 : -1;
    r.weights.push_back(w);
  }

  auto E = [&](LinearOperator& m, int s, int t, long c) {
    m.add(static_cast<std::size_t>(r.label_of(s) - 1), static_cast<std::size_t>(r.label_of(t) - 1), Scalar(c));
  };

  const Scalar qq = Scalar::q() - Scalar::q(-1);
  if (spec.family == Family::GL) {
    for (int a = 1; a < n; ++a) {
      LinearOperator e(N, N), f(N, N);
      E(e, a, a + 1, 1);
      E(f, a + 1, a, 1);
      r.e.push_back(e);
      r.f.push_back(f);
      r.simple_roots.push_back(vadd(eps(n, a), eps(n, a + 1), -1));
      r.ef_den.push_back(qq);
    }
    for (int b = 1; b <= n; ++b) {
      r.K.push_back(torus_op(r.weights, eps(n, b), 1));
      r.K_inv.push_back(torus_op(r.weights, eps(n, b), -1));
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) r.positive_roots.push_back(vadd(eps(n, i), eps(n, j), -1));
  } else {
    for (int i = 1; i < n; ++i) {
      LinearOperator e(N, N), f(N, N);
      E(e, i, i + 1, 1);
      E(e, -i - 1, -i, -1);
      E(f, i + 1, i, 1);
      E(f, -i, -i - 1, -1);
      r.e.push_back(e);
      r.f.push_back(f);
      r.simple_roots.push_back(vadd(eps(n, i), eps(n, i + 1), -1));
      r.ef_den.push_back(qq);
    }
    LinearOperator e(N, N), f(N, N);
    switch (spec.family) {
      case Family::D:
        E(e, n - 1, -n, 1);
        E(e, n, -n + 1, -1);
        E(f, -n, n - 1, 1);
        E(f, -n + 1, n, -1);
        r.simple_roots.push_back(vadd(eps(n, n - 1), eps(n, n)));
        r.ef_den.push_back(qq);
        break;
      case Family::B:
        // modified e_n, so the denominator stays q - q^{-1}
        E(e, n, 0, 1);
        E(e, 0, -n, -1);
        E(f, 0, n, 1);
        E(f, -n, 0, -1);
        r.simple_roots.push_back(eps(n, n));
        r.ef_den.push_back(qq);
        break;
      case Family::C:
        // π(f_i) for i < n is taken as E_{i+1,i} - E_{-i,-i-1}; the transposed unit would not lower weight
        E(e, n, -n, 1);
        E(f, -n, n, 1);
        r.simple_roots.push_back(eps(n, n, 2));
        r.ef_den.push_back(Scalar::q(2) - Scalar::q(-2));
        break;
      default: break;
    }
    r.e.push_back(e);
    r.f.push_back(f);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        r.positive_roots.push_back(vadd(eps(n, i), eps(n, j), -1));
        r.positive_roots.push_back(vadd(eps(n, i), eps(n, j)));
      }
    for (int i = 1; i <= n; ++i) {
      if (spec.family == Family::B) r.positive_roots.push_back(eps(n, i));
      if (spec.family == Family::C) r.positive_roots.push_back(eps(n, i, 2));
    }
  }
  for (const auto& alpha : r.simple_roots) {
    r.k.push_back(torus_op(r.weights, alpha, 1));
    r.k_inv.push_back(torus_op(r.weights, alpha, -1));
  }
  r.two_rho.assign(static_cast<std::size_t>(n), 0);
  for (const auto& beta : r.positive_roots) r.two_rho = vadd(r.two_rho, beta);
  for (const auto& w : r.weights) r.rho_pairings.push_back(pairing(r.two_rho, w));
  return r;
}

const RepData& natural_rep_cached(const LieTypeSpec& spec) {
  static std::mutex mu;
  static std::map<LieTypeSpec, RepData> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(spec);
  if (it == cache.end()) it = cache.emplace(spec, natural_rep(spec)).first;
  return it->second;
}

Scalar quantum_trace_of_k2rho(const LieTypeSpec& spec) {
  const RepData& r = natural_rep_cached(spec);
  Scalar s;
  for (int p : r.rho_pairings) s += Scalar::q(-p);
  return s;
}

Scalar quantum_dimension(const LieTypeSpec& spec) {
  validate(spec);
  const int n = spec.rank;
  const Scalar qq = Scalar::q() - Scalar::q(-1);
  switch (spec.family) {
    case Family::D: return qint(n) * (Scalar::q(n - 1) + Scalar::q(1 - n));
    case Family::B: return (Scalar::q(1 - 2 * n) + Scalar(1L)) * (Scalar::q(2 * n) - Scalar::q(-1)) / qq;
    default: return quantum_trace_of_k2rho(spec);
  }
}

int rho_pairing(const LieTypeSpec& spec, int label) {
  const RepData& r = natural_rep_cached(spec);
  if (label < 1 || label > r.dimV) throw std::out_of_range("label out of range");
  return r.rho_pairings[static_cast<std::size_t>(label - 1)];
}

unsigned long long irrep_dim_gl(int k, const std::vector<int>& lambda) {
  if (static_cast<int>(lambda.size()) > k) throw std::invalid_argument("partition has more than k parts");
  std::vector<long> l(static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0 || (i > 0 && lambda[i] > lambda[i - 1])) throw std::invalid_argument("not a partition");
    l[i] = lambda[i];
  }
  mpq_class d = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      d *= mpq_class(l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)] + j - i, j - i);
  d.canonicalize();
  return d.get_num().get_ui();
}

LinearOperator sigma_candidate(const LieTypeSpec& spec, SigmaReading reading) {
  validate(spec);
  if (spec.family != Family::B && spec.family != Family::D)
    throw std::invalid_argument("σ is defined only for the orthogonal families B and D");
  const RepData& r = natural_rep_cached(spec);
  const int n = spec.rank;
  const int N = r.dimV;
  int parity = reading == SigmaReading::Rank ? n : N;
  Scalar sign(parity % 2 == 1 ? -1L : 1L);
  LinearOperator s(N, N);
  for (int a = 1; a <= N; ++a) {
    int image = a;
    if (spec.family == Family::D && (r.signed_index[static_cast<std::size_t>(a - 1)] == n ||
                                     r.signed_index[static_cast<std::size_t>(a - 1)] == -n))
      image = r.dual_label(a);
    s.set(static_cast<std::size_t>(image - 1), static_cast<std::size_t>(a - 1), sign);
  }
  // σ is an involution, so σ^{-1} = σ
  if (!(s * s == LinearOperator::identity(static_cast<std::size_t>(N))))
    throw SigmaValidationError("σ candidate is not an involution");
  const int r_count = r.chevalley_rank();
  auto image_index = [&](int i) {
    if (spec.family == Family::D && i == n - 1) return n;
    if (spec.family == Family::D && i == n) return n - 1;
    return i;
  };
  for (int i = 1; i <= r_count; ++i) {
    const auto j = static_cast<std::size_t>(image_index(i) - 1);
    const auto ii = static_cast<std::size_t>(i - 1);
    if (!(s * r.e[ii] * s == r.e[j]) || !(s * r.f[ii] * s == r.f[j]) || !(s * r.k[ii] * s == r.k[j]))
      throw SigmaValidationError("σ candidate does not intertwine generator " + std::to_string(i));
  }
  return s;
}

namespace {

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) { return a * b - b * a; }

// Σ_r (-1)^r [N choose r]_{base} x^{N-r} y x^r with N = 1 - a_ij
LinearOperator serre(const LinearOperator& x, const LinearOperator& y, int N, const Scalar& base) {
  LinearOperator acc = LinearOperator::zero(x.rows());
  for (int r = 0; r <= N; ++r) {
    LinearOperator term = y;
    for (int t = 0; t < N - r; ++t) term = x * term;
    for (int t = 0; t < r; ++t) term = term * x;
    Scalar c = qbinom(N, r, base);
    if (r % 2 == 1) c = -c;
    acc = acc + term.scaled(c);
  }
  return acc;
}

}  // namespace

std::vector<RelationCheck> check_uq_relations(const RepData& rep) {
  std::vector<RelationCheck> out;
  const std::size_t N = static_cast<std::size_t>(rep.dimV);
  const LinearOperator id = LinearOperator::identity(N);
  const int r = rep.chevalley_rank();
  auto add = [&](std::string name, bool pass) { out.push_back({std::move(name), pass}); };
  for (int i = 0; i < r; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    std::string si = std::to_string(i + 1);
    add("k" + si + " diagonal and invertible",
        rep.k[ui].is_diagonal() && rep.k[ui] * rep.k_inv[ui] == id);
    for (int j = 0; j < r; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      std::string sij = si + "," + std::to_string(j + 1);
      int aij = pairing(rep.simple_roots[ui], rep.simple_roots[uj]);
      add("k e k^-1 " + sij, rep.k[ui] * rep.e[uj] * rep.k_inv[ui] == rep.e[uj].scaled(Scalar::q(aij)));
      add("k f k^-1 " + sij, rep.k[ui] * rep.f[uj] * rep.k_inv[ui] == rep.f[uj].scaled(Scalar::q(-aij)));
      LinearOperator rhs = LinearOperator::zero(N);
      if (i == j) rhs = (rep.k[ui] - rep.k_inv[ui]).scaled(rep.ef_den[ui].inverse());
      add("[e,f] " + sij, commutator(rep.e[ui], rep.f[uj]) == rhs);
      if (i != j) {
        int aii = pairing(rep.simple_roots[ui], rep.simple_roots[ui]);
        int cartan = 2 * aij / aii;
        // q_i = q^{(α_i,α_i)/2} = v^{(α_i,α_i)}
        Scalar base = Scalar::v(aii);
        add("Serre e " + sij, serre(rep.e[ui], rep.e[uj], 1 - cartan, base).is_zero());
        add("Serre f " + sij, serre(rep.f[ui], rep.f[uj], 1 - cartan, base).is_zero());
      }
    }
    // weight bookkeeping: e_i raises by α_i
    bool raises = true;
    for (std::size_t a = 0; a < N; ++a)
      for (const auto& [b, c] : rep.e[ui].column(a)) {
        (void)c;
        std::vector<int> w = rep.weights[a];
        for (std::size_t t = 0; t < w.size(); ++t) w[t] += rep.simple_roots[ui][t];
        if (w != rep.weights[b]) raises = false;
      }
    add("e" + si + " raises weight by alpha", raises);
  }
  for (std::size_t b = 0; b < rep.K.size(); ++b) {
    std::string sb = std::to_string(b + 1);
    add("K" + sb + " invertible", rep.K[b] * rep.K_inv[b] == id);
    for (int a = 0; a < r; ++a) {
      const auto ua = static_cast<std::size_t>(a);
      int c = pairing(std::vector<int>(rep.weights[b]), rep.simple_roots[ua]);
      add("K e K^-1 " + sb + "," + std::to_string(a + 1),
          rep.K[b] * rep.e[ua] * rep.K_inv[b] == rep.e[ua].scaled(Scalar::q(c)));
      add("k = K_a K_{a+1}^-1 " + std::to_string(a + 1), rep.K[ua] * rep.K_inv[ua + 1] == rep.k[ua]);
    }
  }
  return out;
}

}  // namespace qinv
