#include "qinv/uqaction.hpp"

#include <stdexcept>

#include "qinv/linalg.hpp"

namespace qinv {

namespace {

using Image = std::vector<std::pair<LetterId, Scalar>>;

// How one generator moves the letters. `side` is the scalar by which the
// group-like partner of E (k) or F (k^{-1}) acts on each letter.
struct LetterAction {
  GenOp op = GenOp::E;
  std::vector<Image> image;
  std::vector<Scalar> side;
};

bool group_like(GenOp op) { return op == GenOp::K || op == GenOp::Kinv || op == GenOp::Sigma; }

const RepData& rep_for(const AlgebraHandle& h, int group) {
  if (group == 0) return natural_rep_cached(h.spec);
  if (h.kind != AlgebraKind::Exterior) throw std::invalid_argument("generator group 1 exists only for exterior algebras");
  return natural_rep_cached(LieTypeSpec{Family::GL, h.m});
}

LinearOperator torus(const RepData& rep, int index, bool inverse) {
  const bool gl = rep.spec.family == Family::GL;
  const auto& ops = gl ? (inverse ? rep.K_inv : rep.K) : (inverse ? rep.k_inv : rep.k);
  if (index < 1 || index > static_cast<int>(ops.size())) throw std::out_of_range("torus generator index out of range");
  return ops[static_cast<std::size_t>(index - 1)];
}

void check_chevalley(const RepData& rep, int index) {
  if (index < 1 || index > rep.chevalley_rank()) throw std::out_of_range("Chevalley index out of range");
}

// π(g) on V, and the matrix of its group-like partner (E: k_i, F: k_i^{-1}).
std::pair<LinearOperator, LinearOperator> matrices(const RepData& rep, const GeneratorRef& g) {
  const auto i = static_cast<std::size_t>(g.index - 1);
  switch (g.op) {
    case GenOp::E: check_chevalley(rep, g.index); return {rep.e[i], rep.k[i]};
    case GenOp::F: check_chevalley(rep, g.index); return {rep.f[i], rep.k_inv[i]};
    case GenOp::K: return {torus(rep, g.index, false), {}};
    case GenOp::Kinv: return {torus(rep, g.index, true), {}};
    case GenOp::Sigma: return {sigma_candidate(rep.spec), {}};
  }
  throw std::logic_error("unreachable");
}

// π'(x) = π(S(x))^T on the dual: S(e) = -e k^{-1}, S(f) = -k f, S(g) = g^{-1}.
std::pair<LinearOperator, LinearOperator> dual_matrices(const RepData& rep, const GeneratorRef& g) {
  const auto i = static_cast<std::size_t>(g.index - 1);
  const Scalar minus(-1L);
  switch (g.op) {
    case GenOp::E:
      check_chevalley(rep, g.index);
      return {(minus * (rep.e[i] * rep.k_inv[i])).transpose(), rep.k_inv[i]};
    case GenOp::F:
      check_chevalley(rep, g.index);
      return {(minus * (rep.k[i] * rep.f[i])).transpose(), rep.k[i]};
    case GenOp::K: return {torus(rep, g.index, true), {}};
    case GenOp::Kinv: return {torus(rep, g.index, false), {}};
    case GenOp::Sigma: break;
  }
  throw std::invalid_argument("σ does not act on the dual coordinates");
}

LetterAction letter_action(const AlgebraHandle& h, const GeneratorRef& g) {
  if (g.group < 0 || g.group > 1) throw std::invalid_argument("generator group must be 0 or 1");
  const RepData& rep = rep_for(h, g.group);
  if (g.op == GenOp::Sigma && rep.spec.family != Family::B && rep.spec.family != Family::D)
    throw std::invalid_argument("σ is defined only for B and D");
  LetterAction la;
  la.op = g.op;
  const std::size_t n = h.alphabet.size();
  la.image.resize(n);
  la.side.assign(n, Scalar(1L));
  std::pair<LinearOperator, LinearOperator> plain = matrices(rep, g), dual;
  bool have_dual = false;
  for (LetterId id = 0; id < n; ++id) {
    const Letter& L = h.alphabet.letter(id);
    const bool on_row = g.group == 1;
    const int index = on_row ? L.factor : L.label;
    const std::pair<LinearOperator, LinearOperator>* mats = &plain;
    if (L.kind == LetterKind::Y) {
      if (!have_dual) {
        dual = dual_matrices(rep, g);
        have_dual = true;
      }
      mats = &dual;
    }
    for (const auto& [c, s] : mats->first.column(static_cast<std::size_t>(index - 1))) {
      const int target = static_cast<int>(c) + 1;
      la.image[id].emplace_back(on_row ? h.alphabet.id(L.kind, target, L.label) : h.alphabet.id(L.kind, L.factor, target), s);
    }
    if (!group_like(g.op)) la.side[id] = mats->second.at(static_cast<std::size_t>(index - 1), static_cast<std::size_t>(index - 1));
  }
  return la;
}

NCPolynomial apply_free(const LetterAction& la, const NCPolynomial& p) {
  NCPolynomial out;
  for (const auto& [w, c] : p.terms()) {
    if (group_like(la.op)) {
      std::vector<std::pair<Word, Scalar>> partial{{Word{}, c}};
      for (LetterId l : w) {
        std::vector<std::pair<Word, Scalar>> next;
        for (const auto& [pw, pc] : partial)
          for (const auto& [t, s] : la.image[l]) {
            Word nw = pw;
            nw.push_back(t);
            next.emplace_back(std::move(nw), pc * s);
          }
        partial = std::move(next);
      }
      for (const auto& [pw, pc] : partial) out.add_term(pw, pc);
      continue;
    }
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      Scalar factor = c;
      if (la.op == GenOp::E)
        for (std::size_t t = pos + 1; t < w.size(); ++t) factor = factor * la.side[w[t]];
      else
        for (std::size_t t = 0; t < pos; ++t) factor = factor * la.side[w[t]];
      for (const auto& [t, s] : la.image[w[pos]]) {
        Word nw = w;
        nw[pos] = t;
        out.add_term(nw, factor * s);
      }
    }
  }
  return out;
}

bool all_zero(const std::vector<int>& v) {
  for (int x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

std::string to_string(const GeneratorRef& g) {
  std::string s;
  switch (g.op) {
    case GenOp::E: s = "e_"; break;
    case GenOp::F: s = "f_"; break;
    case GenOp::K: s = "k_"; break;
    case GenOp::Kinv: s = "kinv_"; break;
    case GenOp::Sigma: return "sigma";
  }
  s += std::to_string(g.index);
  return g.group == 1 ? "row:" + s : s;
}

std::vector<GeneratorRef> invariance_generators(const AlgebraHandle& h, bool with_sigma) {
  std::vector<GeneratorRef> out;
  const int groups = h.kind == AlgebraKind::Exterior ? 2 : 1;
  for (int grp = 0; grp < groups; ++grp) {
    const RepData& rep = rep_for(h, grp);
    for (int i = 1; i <= rep.chevalley_rank(); ++i) {
      out.push_back({GenOp::E, i, grp});
      out.push_back({GenOp::F, i, grp});
    }
    const bool gl = rep.spec.family == Family::GL;
    const int tori = gl ? static_cast<int>(rep.K.size()) : rep.chevalley_rank();
    for (int b = 1; b <= tori; ++b) out.push_back({GenOp::K, b, grp});
  }
  if (with_sigma && (h.spec.family == Family::B || h.spec.family == Family::D) && h.kind != AlgebraKind::Exterior)
    out.push_back({GenOp::Sigma, 1, 0});
  return out;
}

NCPolynomial act(const AlgebraHandle& h, const GeneratorRef& g, const NCPolynomial& p) {
  return h.reduce(apply_free(letter_action(h, g), h.reduce(p)));
}

NCPolynomial act_free(const AlgebraHandle& h, const GeneratorRef& g, const NCPolynomial& p) {
  return apply_free(letter_action(h, g), p);
}

std::vector<int> weight(const AlgebraHandle& h, const Word& w) {
  const RepData& rep = natural_rep_cached(h.spec);
  const bool ext = h.kind == AlgebraKind::Exterior;
  const RepData* row = ext ? &natural_rep_cached(LieTypeSpec{Family::GL, h.m}) : nullptr;
  const std::size_t n = rep.weights.front().size();
  std::vector<int> out(n + (ext ? row->weights.front().size() : 0), 0);
  for (LetterId id : w) {
    const Letter& L = h.alphabet.letter(id);
    const int sign = L.kind == LetterKind::Y ? -1 : 1;
    const auto& wt = rep.weights[static_cast<std::size_t>(L.label - 1)];
    for (std::size_t t = 0; t < n; ++t) out[t] += sign * wt[t];
    if (ext) {
      const auto& rw = row->weights[static_cast<std::size_t>(L.factor - 1)];
      for (std::size_t t = 0; t < rw.size(); ++t) out[n + t] += rw[t];
    }
  }
  return out;
}

InvariantReport is_invariant(const AlgebraHandle& h, const NCPolynomial& p, bool with_sigma) {
  InvariantReport rep;
  const NCPolynomial np = h.reduce(p);
  for (const GeneratorRef& g : invariance_generators(h, with_sigma)) {
    NCPolynomial r = act(h, g, np);
    if (group_like(g.op)) r -= np;
    if (!r.is_zero()) rep.invariant = false;
    rep.residuals.emplace_back(to_string(g), std::move(r));
  }
  return rep;
}

std::vector<NCPolynomial> invariant_basis(const AlgebraHandle& h, const std::vector<int>& multidegree,
                                          bool with_sigma) {
  std::vector<Word> words;
  for (Word& w : graded_words(h.alphabet, multidegree, h.square_free))
    if (all_zero(weight(h, w))) words.push_back(std::move(w));
  if (words.empty()) return {};

  // one block of equations per non-torus generator: the coefficient of each
  // target word in Σ_w x_w g·w must vanish
  std::map<std::pair<std::size_t, Word>, SparseVec> eqs;
  std::size_t block = 0;
  for (const GeneratorRef& g : invariance_generators(h, with_sigma)) {
    if (g.op == GenOp::K || g.op == GenOp::Kinv) continue;
    const LetterAction la = letter_action(h, g);
    for (std::size_t col = 0; col < words.size(); ++col) {
      NCPolynomial img = h.reduce(apply_free(la, NCPolynomial::monomial(words[col])));
      if (g.op == GenOp::Sigma) img -= NCPolynomial::monomial(words[col]);
      for (const auto& [u, c] : img.terms()) add_entry(eqs[{block, u}], col, c);
    }
    ++block;
  }
  std::vector<SparseVec> rows;
  rows.reserve(eqs.size());
  for (auto& [key, row] : eqs)
    if (!row.empty()) rows.push_back(std::move(row));
  std::vector<NCPolynomial> out;
  for (const SparseVec& v : nullspace(rows, words.size())) {
    NCPolynomial p;
    for (const auto& [col, c] : v) p.add_term(words[col], c);
    out.push_back(std::move(p));
  }
  return out;
}

PairVectorReport invariant_pair_vector(const LieTypeSpec& spec) {
  validate(spec);
  if (spec.family == Family::GL) throw std::invalid_argument("the invariant pairing vector exists for B, C and D");
  const RepData& rep = natural_rep_cached(spec);
  const SpectralData sd = spectral_data(spec);
  const Scalar kap = kappa(spec);
  PairVectorReport out;
  for (const auto& s : sd.summands)
    if (s.eigenvalue == kap && s.vectors.size() == 1) out.T = s.vectors.front();
  if (out.T.empty()) throw std::logic_error("no one-dimensional summand with eigenvalue κ");

  out.annihilated = true;
  for (int i = 1; i <= rep.chevalley_rank(); ++i) {
    if (!tensor_power_action(rep, GenKind::E, i, 2).apply(out.T).empty()) out.annihilated = false;
    if (!tensor_power_action(rep, GenKind::F, i, 2).apply(out.T).empty()) out.annihilated = false;
    if (tensor_power_action(rep, GenKind::K, i, 2).apply(out.T) != out.T) out.annihilated = false;
  }

  const int N = rep.dimV;
  auto coeff = [&](int a, int b) {
    auto it = out.T.find(tensor_index({a, b}, N));
    return it == out.T.end() ? Scalar() : it->second;
  };
  out.constant_ratio = true;
  for (int a = 1; a <= N; ++a) out.coefficients.push_back(coeff(a, rep.dual_label(a)));
  for (int a = 1; a <= N; ++a) {
    const Scalar& ca = out.coefficients[static_cast<std::size_t>(a - 1)];
    const Scalar& cd = out.coefficients[static_cast<std::size_t>(rep.dual_label(a) - 1)];
    if (ca.is_zero() || cd.is_zero()) {
      out.constant_ratio = false;
      out.ratios.push_back(Scalar());
      continue;
    }
    out.ratios.push_back(ca / cd * Scalar::q(-rep.rho_pairings[static_cast<std::size_t>(a - 1)]));
  }
  out.constant = out.ratios.front();
  for (const Scalar& r : out.ratios)
    if (!(r == out.constant)) out.constant_ratio = false;
  // T has no other support
  for (const auto& [idx, c] : out.T) {
    auto lab = tensor_labels(idx, N, 2);
    if (lab[1] != rep.dual_label(lab[0])) out.constant_ratio = false;
  }
  return out;
}

}  // namespace qinv
