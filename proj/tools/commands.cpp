#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qinv/algebras.hpp"
#include "qinv/braiding.hpp"
#include "qinv/invariants.hpp"
#include "qinv/uqaction.hpp"

namespace qinv::cli {

namespace {

using nlohmann::ordered_json;

const std::vector<std::string> kCommands = {"dims",  "braiding",     "relations",         "invariance",
                                            "fft",   "skew-duality", "dump-presentation", "oracle-diff"};

unsigned long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  return r;
}

std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// all d ∈ N^slots with |d| = total, lexicographically
std::vector<std::vector<int>> compositions(int slots, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(slots), 0);
  std::function<void(int, int)> rec = [&](int s, int left) {
    if (s + 1 == slots) {
      cur[static_cast<std::size_t>(s)] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[static_cast<std::size_t>(s)] = e;
      rec(s + 1, left - e);
    }
  };
  if (slots == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  rec(0, total);
  return out;
}

std::string render(const AlgebraHandle& h, const NCPolynomial& p) { return p.is_zero() ? "" : p.str(h.alphabet); }

LieTypeSpec spec_of(const RunConfig& cfg) {
  if (!cfg.family) throw ConfigError("--family", "--family is required for '" + cfg.command + "'");
  if (!cfg.rank) throw ConfigError("--rank", "--rank is required for '" + cfg.command + "'");
  LieTypeSpec s;
  try {
    s.family = parse_family(*cfg.family);
  } catch (const std::exception& e) {
    throw ConfigError("--family", e.what());
  }
  s.rank = *cfg.rank;
  try {
    validate(s);
  } catch (const std::exception& e) {
    throw ConfigError("--rank", e.what());
  }
  return s;
}

bool orthosymplectic(const AlgebraHandle& h) {
  return (h.kind == AlgebraKind::SymmetricAlgebra || h.kind == AlgebraKind::Copies) && h.spec.family != Family::GL;
}

bool has_sigma(const AlgebraHandle& h) {
  return orthosymplectic(h) && (h.spec.family == Family::B || h.spec.family == Family::D);
}

Handle algebra_of(const RunConfig& cfg) {
  if (!cfg.family && cfg.m && cfg.n) {
    if (*cfg.m < 1) throw ConfigError("--m", "--m must be positive");
    if (*cfg.n < 1) throw ConfigError("--n", "--n must be positive");
    return build_exterior(*cfg.m, *cfg.n);
  }
  const LieTypeSpec s = spec_of(cfg);
  if (cfg.k || cfg.l) {
    if (s.family != Family::GL) throw ConfigError("--k", "--k/--l select the mixed algebra, which needs --family GL");
    const int k = cfg.k.value_or(1), l = cfg.l.value_or(1);
    if (k < 1) throw ConfigError("--k", "--k must be positive");
    if (l < 1) throw ConfigError("--l", "--l must be positive");
    return build_akl(s.rank, k, l);
  }
  if (cfg.copies < 1) throw ConfigError("--copies", "--copies must be positive");
  if (cfg.copies == 1) return build_sq(s);
  return build_am(s, cfg.copies, cfg.strict_paper ? Variant::Printed : Variant::Derived);
}

Suite construction_failure(const RunConfig& cfg, const std::string& what) {
  Suite s{"construction", {}, {}, {}};
  s.entries.push_back({"rule set from the presentation", cfg.family.value_or("") + " copies=" + std::to_string(cfg.copies),
                       what, false});
  return s;
}

// ---- suites -------------------------------------------------------------

Suite confluence_entry_suite(const AlgebraHandle& h, const std::string& name) {
  Suite s{name, {}, {}, {}};
  std::string bad;
  for (const auto& f : h.overlap_failures) bad += (bad.empty() ? "" : "; ") + h.alphabet.render(f.word);
  s.entries.push_back({"degree-3 overlaps resolve", h.name(), bad, h.confluent()});
  return s;
}

Suite dims_suite(const AlgebraHandle& h, int max_degree) {
  Suite s = confluence_entry_suite(h, "flatness " + h.name());
  auto add = [&](const std::string& cit, const std::string& inst, unsigned long long got, unsigned long long want) {
    s.entries.push_back({cit, inst + ": " + std::to_string(got) + " (classical " + std::to_string(want) + ")",
                         got == want ? "" : std::to_string(got) + " != " + std::to_string(want), got == want});
  };
  const int slots = h.alphabet.num_slots();
  if (h.kind == AlgebraKind::Exterior) {
    const int mn = h.m * h.spec.rank;
    unsigned long long total = 0;
    for (int k = 0; k <= mn; ++k) {
      const auto d = graded_dimension(h, {k});
      total += d;
      add("graded dimension = C(mn, k)", "k=" + std::to_string(k), d, binom(mn, k));
    }
    add("total dimension = 2^(mn)", "mn=" + std::to_string(mn), total, 1ULL << mn);
    return s;
  }
  if (h.kind == AlgebraKind::MixedGL) {
    const int n = h.spec.rank;
    for (int a = 0; a <= max_degree; ++a)
      for (int b = 0; a + b <= max_degree; ++b) {
        unsigned long long got = 0;
        for (const auto& dx : compositions(h.m, a))
          for (const auto& dy : compositions(h.l, b)) {
            std::vector<int> md = dx;
            md.insert(md.end(), dy.begin(), dy.end());
            got += graded_dimension(h, md);
          }
        add("bidegree dimension = C(kn+a-1, a) C(ln+b-1, b)", "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")",
            got, binom(h.m * n + a - 1, a) * binom(h.l * n + b - 1, b));
      }
    return s;
  }
  const long long N = static_cast<long long>(h.alphabet.size());
  for (int k = 0; k <= max_degree; ++k) {
    unsigned long long got = 0;
    for (const auto& md : compositions(slots, k)) got += graded_dimension(h, md);
    add("graded dimension = C(m dim V + k - 1, k)", "k=" + std::to_string(k), got, binom(N + k - 1, k));
  }
  return s;
}

Suite braiding_suite(const LieTypeSpec& spec) {
  BraidReport r = verify_braid_and_skein(spec);
  Suite s{"braiding " + to_string(spec), {}, {}, {}};
  for (const auto& c : r.checks) s.entries.push_back({c.name, c.detail, c.pass ? "" : c.detail, c.pass});
  std::vector<int> ranks(r.projector_ranks.begin(), r.projector_ranks.end());
  int sum = 0;
  for (int x : ranks) sum += x;
  const int d = natural_rep_cached(spec).dimV;
  s.entries.push_back({"projector ranks add up to dim V⊗V", join(ranks), sum == d * d ? "" : std::to_string(sum),
                       sum == d * d});
  return s;
}

Suite relations_suite(const AlgebraHandle& h) {
  RelationReport r = verify_relation_suite(h);
  Suite s{r.suite, {}, {}, r.notes};
  for (const auto& e : r.entries) s.entries.push_back({e.citation, e.instance, render(h, e.residual), e.pass});
  for (const auto& e : r.variants) s.variants.push_back({e.citation, e.instance, render(h, e.residual), e.pass});
  return s;
}

Entry invariance_entry(const AlgebraHandle& h, const NCPolynomial& p, const std::string& what, const std::string& inst,
                       bool sigma) {
  InvariantReport r = is_invariant(h, p, sigma);
  std::string res;
  for (const auto& [g, poly] : r.residuals)
    if (!poly.is_zero()) res += (res.empty() ? "" : "; ") + g + ": " + render(h, poly);
  return {what + " is invariant", inst, res, r.invariant};
}

Suite invariance_suite(const AlgebraHandle& h, bool sigma) {
  Suite s{"invariance " + h.name(), {}, {}, {}};
  const bool use_sigma = sigma && has_sigma(h);
  if (sigma && !use_sigma) s.notes.push_back("σ exists only for B and D; checked without it");
  if (h.kind == AlgebraKind::MixedGL) {
    for (int i = 1; i <= h.m; ++i)
      for (int b = 1; b <= h.l; ++b)
        s.entries.push_back(invariance_entry(h, psi(h, i, b), "Psi_{i beta}", h.name() + " i=" + std::to_string(i) +
                                                                                    " beta=" + std::to_string(b), false));
    return s;
  }
  if (h.kind == AlgebraKind::Exterior) throw ConfigError("--m", "invariance is defined for S_q, A_m and A_{k,l}");
  if (!orthosymplectic(h)) {
    s.notes.push_back("GL has no quadratic invariants on copies of V");
    return s;
  }
  const int m = h.kind == AlgebraKind::SymmetricAlgebra ? 1 : h.m;
  const bool strict = h.spec.family == Family::C;
  if (!strict) {
    // Φ from the invariant pair vector, one per copy
    const PairVectorReport pv = invariant_pair_vector(h.spec);
    const RepData& rep = natural_rep_cached(h.spec);
    for (int i = 1; i <= m; ++i) {
      NCPolynomial phi;
      for (int a = 1; a <= rep.dimV; ++a)
        phi.add_term(Word{h.x(i, a), h.x(i, rep.dual_label(a))}, pv.coefficients[static_cast<std::size_t>(a - 1)]);
      s.entries.push_back(invariance_entry(h, h.reduce(phi), "Phi", h.name() + " copy " + std::to_string(i), use_sigma));
    }
  }
  for (int i = 1; i <= m; ++i)
    for (int j = strict ? i + 1 : i; j <= m; ++j)
      s.entries.push_back(invariance_entry(h, psi(h, i, j), "Psi^(i,j)",
                                           h.name() + " i=" + std::to_string(i) + " j=" + std::to_string(j), use_sigma));
  if (strict && m == 1) s.notes.push_back("S_q of the symplectic family has no quadratic invariants");
  return s;
}

Suite pair_vector_suite(const LieTypeSpec& spec) {
  Suite s{"invariant pair vector " + to_string(spec), {}, {}, {}};
  PairVectorReport pv = invariant_pair_vector(spec);
  s.entries.push_back({"e_i T = f_i T = 0 and k_i T = T", to_string(spec), "", pv.annihilated});
  std::string ratios;
  for (const auto& r : pv.ratios) ratios += (ratios.empty() ? "" : ",") + r.str();
  s.entries.push_back({"c_a / c_a' * q^(-(2rho, lambda_a)) is independent of a", "constant " + pv.constant.str(),
                       pv.constant_ratio ? "" : ratios, pv.constant_ratio});
  if (spec.family == Family::B)
    s.entries.push_back({"normalization constant is 1", "constant " + pv.constant.str(), "", pv.constant == Scalar(1L)});
  return s;
}

Suite fft_suite(const AlgebraHandle& h, int max_degree, bool sigma) {
  Suite s{"fft " + h.name(), {}, {}, {}};
  const bool use_sigma = sigma && has_sigma(h);
  for (int total = 1; total <= max_degree; ++total)
    for (const auto& md : compositions(h.alphabet.num_slots(), total)) {
      FftReport r = fft_verify(h, md);
      std::string inst = "d=" + join(md) + ": invariants " + std::to_string(r.invariant_dim) + ", span " +
                         std::to_string(r.span_dim);
      if (use_sigma) inst += ", sigma-fixed " + std::to_string(invariant_basis(h, md, true).size());
      std::string res;
      if (!r.contained) res = "a Psi-monomial is not invariant";
      else if (!r.pass) res = "dimensions differ";
      s.entries.push_back({"dim invariants = dim Psi-span", inst, res, r.pass});
    }
  return s;
}

std::vector<Suite> skew_suites(int m, int n) {
  SkewDualityReport r = skew_duality_check(m, n);
  const std::string mn = std::to_string(m) + "x" + std::to_string(n);
  Suite a{"skew duality " + mn, {}, {}, {}};
  a.entries.push_back({"sum of dim L_lambda dim L_lambda' = 2^(mn)", std::to_string(r.total) + " = " + std::to_string(r.expected),
                       "", r.total == r.expected});
  for (std::size_t k = 0; k < r.by_degree.size(); ++k) {
    const bool ok = r.by_degree[k] == r.graded_dims[k];
    a.entries.push_back({"degree-k part matches the graded dimension",
                         "k=" + std::to_string(k) + ": " + std::to_string(r.by_degree[k]) + " vs " +
                             std::to_string(r.graded_dims[k]),
                         "", ok});
  }
  Suite b{"highest weight vectors " + mn, {}, {}, {}};
  for (const auto& lam : partitions_in_box(m, n)) {
    HighestWeightReport h = exterior_highest_weight(m, n, lam);
    std::string res;
    if (!h.nonzero) res = "Pi is zero";
    else if (!h.annihilated) res = "not annihilated by the raising operators";
    else if (!h.weights_match) res = "weights " + join(h.row_weight) + ", " + join(h.column_weight);
    b.entries.push_back({"Pi_lambda is a highest weight vector of weight (lambda, lambda')",
                         "lambda=" + join(lam), res, h.pass()});
  }
  return {a, b};
}

Suite dump_suite(const AlgebraHandle& h) {
  Suite s{"presentation " + h.name(), {}, {}, {}};
  s.notes.push_back("variant " + to_string(h.variant) + ", " + std::to_string(h.alphabet.size()) + " generators, " +
                    std::to_string(h.relations.size()) + " relations, " + std::to_string(h.rules.rules().size()) +
                    " rules");
  for (const auto& r : h.relations) s.entries.push_back({r.citation, render(h, r.poly) + " = 0", "", true});
  for (const auto& r : h.rules.rules())
    s.entries.push_back({"rule: " + r.citation, h.alphabet.render(Word{r.hi, r.lo}) + " -> " +
                                                    (r.rhs.is_zero() ? "0" : r.rhs.str(h.alphabet)),
                         "", true});
  Suite c = confluence_entry_suite(h, "");
  s.entries.push_back(c.entries.front());
  return s;
}

Suite dump_printed(const LieTypeSpec& spec, int m, const std::string& error) {
  const Alphabet alpha = copies_alphabet(spec, m);
  Suite s{"presentation A_" + std::to_string(m) + "(" + to_string(spec) + ") printed", {}, {}, {}};
  for (const auto& r : printed_am_relations(spec, m))
    s.entries.push_back({r.citation, (r.poly.is_zero() ? "0" : r.poly.str(alpha)) + " = 0", "", true});
  s.entries.push_back({"rule set from the presentation", "", error, false});
  return s;
}

std::vector<Suite> oracle_suites(const LieTypeSpec& spec, int m, int max_degree, bool strict) {
  Handle h = build_am(spec, m, Variant::Derived);
  Suite t{"oracle product table " + h->name(), {}, {}, {}};
  std::vector<std::vector<Word>> by_deg(static_cast<std::size_t>(max_degree + 1));
  for (int d = 1; d <= max_degree; ++d) by_deg[static_cast<std::size_t>(d)] = words_of_degree(h->alphabet, d, h->square_free);
  for (int dx = 1; dx < max_degree; ++dx)
    for (int dy = 1; dx + dy <= max_degree; ++dy) {
      std::size_t count = 0, bad = 0;
      std::string first;
      for (const Word& x : by_deg[static_cast<std::size_t>(dx)])
        for (const Word& y : by_deg[static_cast<std::size_t>(dy)]) {
          NCPolynomial X = NCPolynomial::monomial(x), Y = NCPolynomial::monomial(y);
          NCPolynomial diff = tensor_oracle_product(*h, X, Y) - h->mul(X, Y);
          ++count;
          if (!diff.is_zero()) {
            if (!bad) first = h->alphabet.render(x) + " * " + h->alphabet.render(y) + ": " + diff.str(h->alphabet);
            ++bad;
          }
        }
      t.entries.push_back({"presented product = braided tensor product",
                           "degrees " + std::to_string(dx) + "x" + std::to_string(dy) + ": " + std::to_string(count) +
                               " products, " + std::to_string(bad) + " differ",
                           first, bad == 0});
    }
  Suite p{"printed relations in " + h->name(), {}, {}, {}};
  std::size_t hold = 0, total = 0;
  for (const auto& r : printed_am_relations(spec, m)) {
    ++total;
    const NCPolynomial defect = h->reduce(r.poly);
    if (defect.is_zero()) {
      ++hold;
      continue;
    }
    p.variants.push_back({r.citation, render(*h, r.poly) + " = 0", render(*h, defect), false});
  }
  p.notes.push_back(std::to_string(hold) + " of " + std::to_string(total) +
                    " printed relations hold in the algebra read off the braiding");
  if (!strict) p.notes.push_back("printed relations that fail are reported, not gated; --strict-paper gates them");
  return {t, p};
}

Suite classical_limit_suite(const std::vector<Handle>& algebras, const std::vector<LieTypeSpec>& specs) {
  Suite s{"classical limit", {}, {}, {}};
  for (const Handle& h : algebras) {
    const bool anti = h->kind == AlgebraKind::Exterior;
    std::size_t cross = 0;
    std::string bad;
    for (const Rule& r : h->rules.rules()) {
      const Letter &a = h->alphabet.letter(r.hi), &b = h->alphabet.letter(r.lo);
      if (a.kind == b.kind && a.factor == b.factor && !anti) continue;
      if (anti && r.hi == r.lo) continue;
      ++cross;
      NCPolynomial swap = NCPolynomial::monomial(Word{r.lo, r.hi});
      NCPolynomial defect = anti ? r.rhs + swap : r.rhs - swap;
      std::string err;
      try {
        if (!defect.classical_limit().is_zero()) err = defect.classical_limit().str(h->alphabet);
      } catch (const std::exception& e) {
        err = e.what();
      }
      if (!err.empty() && bad.empty()) bad = h->alphabet.render(Word{r.hi, r.lo}) + ": " + err;
    }
    s.entries.push_back({anti ? "anticommutator defect vanishes at v = 1" : "commutator defect vanishes at v = 1",
                         h->name() + ": " + std::to_string(cross) + " rules", bad, bad.empty()});
  }
  for (const LieTypeSpec& spec : specs) {
    const Scalar qd = quantum_dimension(spec);
    const int d = natural_rep_cached(spec).dimV;
    bool ok = false;
    try {
      ok = classical_limit(qd) == d;
    } catch (const std::exception&) {
    }
    s.entries.push_back({"quantum dimension at v = 1 is dim V", to_string(spec) + ": " + qd.str(), ok ? "" : qd.str(), ok});
  }
  return s;
}

ordered_json config_json(const RunConfig& cfg) {
  ordered_json c;
  c["command"] = cfg.command;
  if (cfg.family) c["family"] = *cfg.family;
  if (cfg.rank) c["rank"] = *cfg.rank;
  if (cfg.family && !cfg.k && !cfg.l) c["copies"] = cfg.copies;
  if (cfg.k) c["k"] = *cfg.k;
  if (cfg.l) c["l"] = *cfg.l;
  if (cfg.m) c["m"] = *cfg.m;
  if (cfg.n) c["n"] = *cfg.n;
  if (cfg.max_degree) c["max_degree"] = *cfg.max_degree;
  if (cfg.fuel) c["fuel"] = *cfg.fuel;
  c["strict_paper"] = cfg.strict_paper;
  c["sigma"] = cfg.sigma;
  return c;
}

int max_degree_or(const RunConfig& cfg, int dflt) {
  const int d = cfg.max_degree.value_or(dflt);
  if (d < 0) throw ConfigError("--max-degree", "--max-degree must be non-negative");
  return d;
}

}  // namespace

std::vector<std::string> command_names() { return kCommands; }

Report execute(const RunConfig& cfg) {
  Report rep;
  rep.config = config_json(cfg);
  rep.strict_paper = cfg.strict_paper;
  rep.verbose = cfg.verbose;
  const std::string& c = cfg.command;
  // the strict printed presentation of A_m may not define a rule set
  auto with_algebra = [&](const std::function<void(const AlgebraHandle&)>& f) {
    Handle h;
    try {
      h = algebra_of(cfg);
    } catch (const PresentationError& e) {
      if (c == "dump-presentation") rep.suites.push_back(dump_printed(spec_of(cfg), cfg.copies, e.what()));
      else rep.suites.push_back(construction_failure(cfg, e.what()));
      return;
    }
    f(*h);
  };
  if (c == "dims") {
    const int d = max_degree_or(cfg, 4);
    with_algebra([&](const AlgebraHandle& h) { rep.suites.push_back(dims_suite(h, d)); });
  } else if (c == "braiding") {
    rep.suites.push_back(braiding_suite(spec_of(cfg)));
  } else if (c == "relations") {
    with_algebra([&](const AlgebraHandle& h) {
      if (h.kind == AlgebraKind::Exterior) throw ConfigError("--m", "relations are stated for S_q, A_m and A_{k,l}");
      if (!orthosymplectic(h) && h.kind != AlgebraKind::MixedGL)
        throw ConfigError("--k", "GL relations are stated for the mixed algebra; pass --k and --l");
      rep.suites.push_back(relations_suite(h));
    });
  } else if (c == "invariance") {
    with_algebra([&](const AlgebraHandle& h) {
      rep.suites.push_back(invariance_suite(h, cfg.sigma));
      if (orthosymplectic(h)) rep.suites.push_back(pair_vector_suite(h.spec));
    });
  } else if (c == "fft") {
    const int d = max_degree_or(cfg, 4);
    with_algebra([&](const AlgebraHandle& h) {
      if (!orthosymplectic(h) && h.kind != AlgebraKind::MixedGL)
        throw ConfigError("--family", "fft is defined for B, C, D copies and for the mixed GL algebra");
      rep.suites.push_back(fft_suite(h, d, cfg.sigma));
    });
  } else if (c == "skew-duality") {
    const int m = cfg.m.value_or(2), n = cfg.n.value_or(2);
    if (m < 1) throw ConfigError("--m", "--m must be positive");
    if (n < 1) throw ConfigError("--n", "--n must be positive");
    for (auto& s : skew_suites(m, n)) rep.suites.push_back(std::move(s));
  } else if (c == "dump-presentation") {
    with_algebra([&](const AlgebraHandle& h) { rep.suites.push_back(dump_suite(h)); });
  } else if (c == "oracle-diff") {
    const LieTypeSpec s = spec_of(cfg);
    if (cfg.copies < 2) throw ConfigError("--copies", "oracle-diff compares cross relations; needs --copies >= 2");
    for (auto& x : oracle_suites(s, cfg.copies, max_degree_or(cfg, 3), cfg.strict_paper)) rep.suites.push_back(std::move(x));
  } else {
    throw ConfigError("command", "unknown command '" + c + "'");
  }
  return rep;
}

Report run_grid(const RunConfig& cfg) {
  Report rep;
  rep.config = {{"command", "grid"}, {"strict_paper", cfg.strict_paper}, {"sigma", cfg.sigma}};
  rep.strict_paper = cfg.strict_paper;
  rep.verbose = cfg.verbose;
  auto& S = rep.suites;
  const std::vector<LieTypeSpec> braid_specs = {{Family::D, 2}, {Family::D, 3}, {Family::B, 1}, {Family::B, 2},
                                                {Family::C, 2}, {Family::C, 3}, {Family::GL, 2}, {Family::GL, 3}};
  for (const auto& s : braid_specs) S.push_back(braiding_suite(s));

  const std::vector<LieTypeSpec> am_specs = {{Family::D, 2}, {Family::B, 1}, {Family::C, 2}};
  std::vector<Handle> flat;
  for (const auto& s : am_specs) {
    flat.push_back(build_sq(s));
    flat.push_back(build_am(s, 2));
  }
  flat.push_back(build_am({Family::GL, 2}, 2));
  flat.push_back(build_akl(2, 2, 2));
  flat.push_back(build_exterior(2, 2));
  flat.push_back(build_exterior(2, 3));
  for (const Handle& h : flat) S.push_back(dims_suite(*h, 4));

  for (const auto& s : am_specs)
    for (auto& x : oracle_suites(s, 2, 3, cfg.strict_paper)) S.push_back(std::move(x));

  std::vector<Handle> inv = {build_sq({Family::D, 2}), build_sq({Family::D, 3}), build_sq({Family::B, 1}),
                             build_sq({Family::B, 2}), build_am({Family::D, 2}, 2), build_am({Family::B, 1}, 2),
                             build_am({Family::C, 2}, 2), build_am({Family::C, 2}, 3), build_akl(2, 2, 2)};
  for (const Handle& h : inv) S.push_back(invariance_suite(*h, cfg.sigma));
  for (const auto& s : std::vector<LieTypeSpec>{{Family::D, 2}, {Family::D, 3}, {Family::B, 1}, {Family::B, 2},
                                                {Family::C, 2}, {Family::C, 3}})
    S.push_back(pair_vector_suite(s));

  for (const Handle& h : {build_am({Family::D, 2}, 4), build_am({Family::B, 1}, 4), build_am({Family::C, 2}, 4),
                          build_akl(2, 2, 2)})
    S.push_back(relations_suite(*h));

  for (const Handle& h : {build_am({Family::D, 2}, 2), build_am({Family::B, 1}, 2), build_am({Family::C, 2}, 2),
                          build_akl(2, 2, 2)})
    S.push_back(fft_suite(*h, 4, cfg.sigma));

  for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}})
    for (auto& x : skew_suites(m, n)) S.push_back(std::move(x));

  std::vector<Handle> cl = {build_am({Family::D, 2}, 2), build_am({Family::B, 1}, 2), build_am({Family::C, 2}, 2),
                            build_am({Family::GL, 2}, 2), build_akl(2, 2, 2)};
  S.push_back(classical_limit_suite(cl, braid_specs));
  return rep;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Exact verification of braided module algebras and their invariants", "qinv"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  RunConfig cfg;
  bool grid = false;
  std::string family;
  int rank = 0, k = 0, l = 0, m = 0, n = 0, max_degree = 0;
  unsigned long long fuel = 0;
  app.add_flag("--grid", grid, "Run the full acceptance matrix");
  auto* o_family = app.add_option("--family", family, "GL, B, C or D");
  auto* o_rank = app.add_option("--rank", rank, "Rank n");
  app.add_option("--copies", cfg.copies, "Number of copies m of V (1 = S_q(V))");
  auto* o_k = app.add_option("--k", k, "Rows of X in the mixed GL algebra");
  auto* o_l = app.add_option("--l", l, "Rows of Y in the mixed GL algebra");
  auto* o_m = app.add_option("--m", m, "gl_m side of the exterior algebra");
  auto* o_n = app.add_option("--n", n, "gl_n side of the exterior algebra");
  auto* o_deg = app.add_option("--max-degree", max_degree, "Largest total degree");
  auto* o_fuel = app.add_option("--fuel", fuel, "Rewrite steps per normal form (also QINV_FUEL)");
  app.add_flag("--strict-paper", cfg.strict_paper, "Use the printed presentations and gate printed readings");
  app.add_flag("--sigma", cfg.sigma, "Include the diagram automorphism in invariance checks (B, D)");
  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", cfg.output, "Write the report here instead of stdout");
  app.add_flag("--verbose", cfg.verbose, "Include residuals of passing entries");
  for (const auto& c : kCommands) app.add_subcommand(c, "")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*o_family) cfg.family = family;
  if (*o_rank) cfg.rank = rank;
  if (*o_k) cfg.k = k;
  if (*o_l) cfg.l = l;
  if (*o_m) cfg.m = m;
  if (*o_n) cfg.n = n;
  if (*o_deg) cfg.max_degree = max_degree;
  if (*o_fuel) {
    cfg.fuel = fuel;
    setenv("QINV_FUEL", std::to_string(fuel).c_str(), 1);
  }
  const auto subs = app.get_subcommands();
  if (grid == !subs.empty()) {
    std::cerr << "error: give exactly one of --grid or a command (" ;
    for (std::size_t i = 0; i < kCommands.size(); ++i) std::cerr << (i ? ", " : "") << kCommands[i];
    std::cerr << ")\n";
    return 2;
  }
  if (!grid) cfg.command = subs.front()->get_name();

  Report rep;
  try {
    rep = grid ? run_grid(cfg) : execute(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.field << ": " << e.what() << '\n';
    return 2;
  } catch (const FuelExhausted& e) {
    std::cerr << "error: rewrite fuel exhausted (raise --fuel or QINV_FUEL)\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream os;
  if (cfg.format == "json") os << rep.to_json().dump(2) << '\n';
  else rep.write_text(os);
  if (cfg.output.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) {
      std::cerr << "error: --output: cannot write " << cfg.output << '\n';
      return 2;
    }
    f << os.str();
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace qinv::cli
