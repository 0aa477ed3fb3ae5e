#include "qinv/braiding.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "qinv/linalg.hpp"

namespace qinv {

const SpectralSummand* SpectralData::find(const std::string& name) const {
  for (const auto& s : summands)
    if (s.name == name) return &s;
  return nullptr;
}

namespace {

Scalar q(int k = 1) { return Scalar::q(k); }

// Builder for vectors in V⊗V addressed by signed indices.
struct Pair {
  const RepData& rep;
  SparseVec v;
  Pair& add(const Scalar& c, int s, int t) {
    add_entry(v, tensor_index({rep.label_of(s), rep.label_of(t)}, rep.dimV), c);
    return *this;
  }
};

SpectralData orthogonal_or_symplectic(const RepData& rep) {
  const int n = rep.spec.rank;
  const Family fam = rep.spec.family;
  const bool B = fam == Family::B;
  const bool C = fam == Family::C;
  auto P = [&] { return Pair{rep, {}}; };
  // B: the index n+1 stands for 0
  auto idx = [&](int i) { return B && i == n + 1 ? 0 : i; };
  const int top = B ? n + 1 : n;

  SpectralSummand s{"s", q(), {}}, a{"a", -q(-1), {}}, z{"0", Scalar(), {}};
  z.eigenvalue = fam == Family::D ? q(1 - 2 * n) : (B ? q(-2 * n) : -q(-2 * n - 1));

  Pair t = P();
  for (int i = 1; i <= n; ++i) {
    if (C) t.add(q(n - i + 1), i, -i).add(-q(i - n - 1), -i, i);
    else t.add(q(n - i), i, -i).add(q(i - n - (B ? 1 : 0)), -i, i);
  }
  if (B) t.add(Scalar(1L), 0, 0);
  z.vectors.push_back(t.v);

  // squares
  for (int i = 1; i <= n; ++i) {
    s.vectors.push_back(P().add(Scalar(1L), i, i).v);
    s.vectors.push_back(P().add(Scalar(1L), -i, -i).v);
  }
  // pairs i < j
  for (int i = 1; i <= top; ++i)
    for (int j = i + 1; j <= top; ++j) {
      int I = idx(i), J = idx(j);
      s.vectors.push_back(P().add(Scalar(1L), I, J).add(q(), J, I).v);
      s.vectors.push_back(P().add(Scalar(1L), -J, -I).add(q(), -I, -J).v);
      a.vectors.push_back(P().add(Scalar(1L), I, J).add(-q(-1), J, I).v);
      a.vectors.push_back(P().add(Scalar(1L), -J, -I).add(-q(-1), -I, -J).v);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      s.vectors.push_back(P().add(Scalar(1L), i, -j).add(q(), -j, i).v);
      a.vectors.push_back(P().add(Scalar(1L), i, -j).add(-q(-1), -j, i).v);
    }
  for (int i = 1; i <= n - 1; ++i) {
    if (C) {
      s.vectors.push_back(
          P().add(Scalar(1L), i + 1, -i - 1).add(Scalar(1L), -i - 1, i + 1).add(-q(-1), i, -i).add(-q(), -i, i).v);
    } else {
      s.vectors.push_back(
          P().add(q(-1), i, -i).add(q(), -i, i).add(Scalar(-1L), i + 1, -i - 1).add(Scalar(-1L), -i - 1, i + 1).v);
    }
    bool last_d = fam == Family::D && i == n - 1;
    Pair w = P().add(Scalar(1L), i, -i).add(Scalar(-1L), -i, i);
    if (last_d) {
      Pair w2 = w;
      w.add(-q(), n, -n).add(q(-1), -n, n);
      w2.add(q(-1), n, -n).add(-q(), -n, n);
      a.vectors.push_back(w.v);
      a.vectors.push_back(w2.v);
    } else {
      w.add(-q(), i + 1, -i - 1).add(q(-1), -i - 1, i + 1);
      a.vectors.push_back(w.v);
    }
  }
  if (B) {
    s.vectors.push_back(P().add(q() + Scalar(1L), 0, 0).add(-q(-1), n, -n).add(-q(), -n, n).v);
    // the printed coefficient of v_0⊗v_0 is read as q - 1
    a.vectors.push_back(P().add(q() - Scalar(1L), 0, 0).add(Scalar(-1L), n, -n).add(Scalar(1L), -n, n).v);
  }
  if (C) s.vectors.push_back(P().add(q(-1), n, -n).add(q(), -n, n).v);

  SpectralData d;
  d.summands = {s, a, z};
  return d;
}

SpectralData general_linear(const RepData& rep) {
  const int n = rep.spec.rank;
  SpectralSummand s{"s", q(), {}}, a{"a", -q(-1), {}};
  auto at = [&](int x, int y) { return tensor_index({x, y}, n); };
  for (int i = 1; i <= n; ++i) s.vectors.push_back({{at(i, i), Scalar(1L)}});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      SparseVec u, w;
      add_entry(u, at(i, j), Scalar(1L));
      add_entry(u, at(j, i), q());
      add_entry(w, at(i, j), Scalar(1L));
      add_entry(w, at(j, i), -q(-1));
      s.vectors.push_back(u);
      a.vectors.push_back(w);
    }
  SpectralData d;
  d.summands = {s, a};
  return d;
}

struct BraidData {
  SpectralData spectral;
  LinearOperator rcheck;
  Projectors proj;
};

BraidData build(const LieTypeSpec& spec) {
  const RepData& rep = natural_rep_cached(spec);
  const std::size_t N2 = static_cast<std::size_t>(rep.dimV) * static_cast<std::size_t>(rep.dimV);
  BraidData bd;
  if (spec.family == Family::GL) {
    bd.spectral = general_linear(rep);
    LinearOperator R = gl_r_matrix(spec.rank);
    LinearOperator P = permutation_operator({1, 0}, rep.dimV);
    bd.rcheck = P * R;
    const LinearOperator id = LinearOperator::identity(N2);
    Scalar norm = (q() + q(-1)).inverse();
    bd.proj.Ps = (bd.rcheck + id.scaled(q(-1))).scaled(norm);
    bd.proj.Pa = (id.scaled(q()) - bd.rcheck).scaled(norm);
    return bd;
  }
  bd.spectral = orthogonal_or_symplectic(rep);
  // change of basis: columns are the listed vectors in the order s, a, 0
  LinearOperator basis(N2, N2);
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::size_t col = 0;
  for (const auto& sm : bd.spectral.summands) {
    std::size_t start = col;
    for (const auto& v : sm.vectors) {
      if (col >= N2) throw std::logic_error("listed submodule vectors exceed dim V⊗V for " + to_string(spec));
      basis.set_column(col++, v);
    }
    ranges.emplace_back(start, col);
  }
  if (col != N2) throw std::logic_error("listed submodule vectors do not span V⊗V for " + to_string(spec));
  auto inv = inverse(basis);
  if (!inv) throw std::logic_error("listed submodule vectors are dependent for " + to_string(spec));
  auto diag_for = [&](std::size_t which, const Scalar& value) {
    LinearOperator d(N2, N2);
    for (std::size_t c = ranges[which].first; c < ranges[which].second; ++c) d.set(c, c, value);
    return d;
  };
  bd.proj.Ps = basis * diag_for(0, Scalar(1L)) * *inv;
  bd.proj.Pa = basis * diag_for(1, Scalar(1L)) * *inv;
  bd.proj.P0 = basis * diag_for(2, Scalar(1L)) * *inv;
  LinearOperator D(N2, N2);
  for (std::size_t w = 0; w < 3; ++w)
    for (std::size_t c = ranges[w].first; c < ranges[w].second; ++c) D.set(c, c, bd.spectral.summands[w].eigenvalue);
  bd.rcheck = basis * D * *inv;
  return bd;
}

const BraidData& braid_data(const LieTypeSpec& spec) {
  static std::mutex mu;
  static std::map<LieTypeSpec, std::unique_ptr<BraidData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[spec];
  if (!slot) slot = std::make_unique<BraidData>(build(spec));
  return *slot;
}

}  // namespace

SpectralData spectral_data(const LieTypeSpec& spec) { return braid_data(spec).spectral; }

Projectors projectors(const LieTypeSpec& spec) { return braid_data(spec).proj; }

const LinearOperator& rcheck(const LieTypeSpec& spec) { return braid_data(spec).rcheck; }

Scalar kappa(const LieTypeSpec& spec) {
  const int n = spec.rank;
  switch (spec.family) {
    case Family::D: return q(1 - 2 * n);
    case Family::B: return q(-2 * n);
    case Family::C: return -q(-2 * n - 1);
    default: throw std::invalid_argument("κ is defined only for B, C, D");
  }
}

LinearOperator gl_r_matrix(int n) {
  const std::size_t N2 = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  LinearOperator R = LinearOperator::identity(N2);
  auto at = [&](int x, int y) { return tensor_index({x, y}, n); };
  for (int a = 1; a <= n; ++a) R.add(at(a, a), at(a, a), q() - Scalar(1L));
  // E_{ab}⊗E_{ba} sends v_b⊗v_a to v_a⊗v_b
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) R.add(at(a, b), at(b, a), q() - q(-1));
  return R;
}

const LinearOperator& rcheck_cabled(const LieTypeSpec& spec, int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("cabling degrees must be positive");
  static std::mutex mu;
  static std::map<std::tuple<LieTypeSpec, int, int>, std::unique_ptr<LinearOperator>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({spec, k, l});
    if (it != cache.end()) return *it->second;
  }
  const LinearOperator& R = rcheck(spec);
  const int d = natural_rep_cached(spec).dimV;
  const int r = k + l;
  const std::size_t n = ipow(static_cast<std::size_t>(d), r);
  LinearOperator out(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    SparseVec x{{c, Scalar(1L)}};
    // strand k+j (0-based) travels left to position j
    for (int j = 0; j < l; ++j)
      for (int p = k + j; p > j; --p) x = apply_local(R, 2, x, d, r, p - 1);
    out.set_column(c, std::move(x));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{spec, k, l}];
  if (!slot) slot = std::make_unique<LinearOperator>(std::move(out));
  return *slot;
}

LinearOperator tensor_power_action(const RepData& rep, GenKind kind, int index, int r) {
  const auto i = static_cast<std::size_t>(index - 1);
  const std::size_t d = static_cast<std::size_t>(rep.dimV);
  const bool gl = rep.spec.family == Family::GL;
  auto kron_chain = [&](const std::vector<const LinearOperator*>& fs) {
    LinearOperator acc = *fs[0];
    for (std::size_t t = 1; t < fs.size(); ++t) acc = acc.kron(*fs[t]);
    return acc;
  };
  const LinearOperator id = LinearOperator::identity(d);
  if (kind == GenKind::K || kind == GenKind::Kinv) {
    const LinearOperator& g = gl ? (kind == GenKind::K ? rep.K[i] : rep.K_inv[i])
                                 : (kind == GenKind::K ? rep.k[i] : rep.k_inv[i]);
    return kron_chain(std::vector<const LinearOperator*>(static_cast<std::size_t>(r), &g));
  }
  const std::size_t n = ipow(d, r);
  LinearOperator acc(n, n);
  for (int p = 0; p < r; ++p) {
    std::vector<const LinearOperator*> fs;
    for (int t = 0; t < r; ++t) {
      if (t == p) fs.push_back(kind == GenKind::E ? &rep.e[i] : &rep.f[i]);
      else if (kind == GenKind::E) fs.push_back(t < p ? &id : &rep.k[i]);
      else fs.push_back(t < p ? &rep.k_inv[i] : &id);
    }
    acc = acc + kron_chain(fs);
  }
  return acc;
}

bool BraidReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

BraidReport verify_braid_and_skein(const LieTypeSpec& spec) {
  BraidReport rep;
  rep.spec = spec;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  try {
    const RepData& V = natural_rep_cached(spec);
    const int d = V.dimV;
    const std::size_t N2 = static_cast<std::size_t>(d * d);
    const LinearOperator id2 = LinearOperator::identity(N2);
    const LinearOperator& R = rcheck(spec);
    const SpectralData sd = spectral_data(spec);
    const Projectors P = projectors(spec);

    std::vector<SparseVec> all;
    for (const auto& sm : sd.summands) all.insert(all.end(), sm.vectors.begin(), sm.vectors.end());
    add("spectral vectors form a basis of V⊗V", rank(all) == N2 && all.size() == N2);
    for (const auto& sm : sd.summands) {
      bool ok = true;
      for (const auto& v : sm.vectors)
        if (R.apply(v) != scaled(v, sm.eigenvalue)) ok = false;
      add("Ř acts by " + sm.eigenvalue.str() + " on summand " + sm.name, ok);
    }

    std::vector<const LinearOperator*> ps = {&P.Ps, &P.Pa};
    if (P.P0) ps.push_back(&*P.P0);
    LinearOperator sum(N2, N2);
    bool idem = true, orth = true;
    for (std::size_t x = 0; x < ps.size(); ++x) {
      sum = sum + *ps[x];
      if (!(*ps[x] * *ps[x] == *ps[x])) idem = false;
      for (std::size_t y = 0; y < ps.size(); ++y)
        if (x != y && !(*ps[x] * *ps[y]).is_zero()) orth = false;
      rep.projector_ranks.push_back(rank(columns(*ps[x])));
    }
    add("projectors idempotent", idem);
    add("projectors pairwise orthogonal", orth);
    add("projectors sum to identity", sum == id2);
    std::string ranks;
    for (auto r : rep.projector_ranks) ranks += (ranks.empty() ? "" : ",") + std::to_string(r);
    bool images_ok = true;
    for (std::size_t x = 0; x < ps.size(); ++x)
      for (const auto& v : sd.summands[x].vectors)
        if (ps[x]->apply(v) != v) images_ok = false;
    add("projector images contain the listed vectors", images_ok, "ranks (" + ranks + ")");

    LinearOperator spectral_form = P.Ps.scaled(q()) - P.Pa.scaled(q(-1));
    if (P.P0) spectral_form = spectral_form + P.P0->scaled(kappa(spec));
    add("Ř equals its spectral form", spectral_form == R);

    bool commutes = true;
    std::string bad;
    auto check_gen = [&](GenKind kind, int i, const std::string& nm) {
      LinearOperator g = tensor_power_action(V, kind, i, 2);
      if (!(R * g == g * R)) {
        commutes = false;
        bad += nm + std::to_string(i) + " ";
      }
    };
    for (int i = 1; i <= V.chevalley_rank(); ++i) {
      check_gen(GenKind::E, i, "e");
      check_gen(GenKind::F, i, "f");
      if (spec.family != Family::GL) check_gen(GenKind::K, i, "k");
    }
    if (spec.family == Family::GL)
      for (int b = 1; b <= spec.rank; ++b) check_gen(GenKind::K, b, "K");
    add("Ř commutes with the coproduct action", commutes, bad);

    const LinearOperator R1 = embed_local(R, 2, d, 3, 0);
    const LinearOperator R2 = embed_local(R, 2, d, 3, 1);
    add("braid identity on V⊗V⊗V", R1 * R2 * R1 == R2 * R1 * R2);

    LinearOperator minpoly = (R - id2.scaled(q())) * (R + id2.scaled(q(-1)));
    if (spec.family != Family::GL) minpoly = minpoly * (R - id2.scaled(kappa(spec)));
    add(spec.family == Family::GL ? "(Ř-q)(Ř+q^-1) = 0" : "(Ř-q)(Ř+q^-1)(Ř-κ) = 0, κ = " + kappa(spec).str(),
        minpoly.is_zero());

    if (spec.family == Family::GL) {
      auto Rinv = inverse(R);
      add("skein Ř - Ř^-1 = (q - q^-1)", Rinv && R - *Rinv == id2.scaled(q() - q(-1)));
    } else {
      const SparseVec& T = sd.find("0")->vectors.front();
      add("Ř T = κ T", R.apply(T) == scaled(T, kappa(spec)));
    }
    if (spec.family == Family::B || spec.family == Family::D) {
      LinearOperator s = sigma_candidate(spec);
      LinearOperator ss = s.kron(s);
      add("Δ(σ) commutes with Ř", ss * R == R * ss);
    }
  } catch (const std::exception& ex) {
    add("construction", false, ex.what());
  }
  return rep;
}

}  // namespace qinv
