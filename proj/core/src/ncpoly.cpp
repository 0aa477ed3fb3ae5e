#include "qinv/ncpoly.hpp"

#include <cstdlib>
#include <iterator>
#include <sstream>

#include "qinv/linalg.hpp"

namespace qinv {

Alphabet::Alphabet(std::vector<Letter> letters, std::vector<int> slots, int num_slots,
                   LetterStyle style)
    : letters_(std::move(letters)), slots_(std::move(slots)), num_slots_(num_slots), style_(style) {
  if (slots_.size() != letters_.size()) throw std::invalid_argument("alphabet: slot table size");
}

std::optional<LetterId> Alphabet::find(LetterKind kind, int factor, int label) const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const Letter& l = letters_[i];
    if (l.kind == kind && l.factor == factor && l.label == label) return static_cast<LetterId>(i);
  }
  return std::nullopt;
}

LetterId Alphabet::id(LetterKind kind, int factor, int label) const {
  auto r = find(kind, factor, label);
  if (!r) {
    throw std::out_of_range("no letter " + std::string(kind == LetterKind::X ? "X" : "Y") + "[" +
                            std::to_string(factor) + "," + std::to_string(label) + "]");
  }
  return *r;
}

std::string Alphabet::render(LetterId id) const {
  const Letter& l = letters_.at(id);
  if (style_ == LetterStyle::Vector) return "v[" + std::to_string(l.label) + "]";
  return std::string(l.kind == LetterKind::X ? "X" : "Y") + "[" + std::to_string(l.factor) + "," +
         std::to_string(l.label) + "]";
}

std::string Alphabet::render(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += render(w[i]);
  }
  return out;
}

NCPolynomial::NCPolynomial(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Word{}, c);
}

NCPolynomial NCPolynomial::monomial(Word w, const Scalar& c) {
  NCPolynomial p;
  if (!c.is_zero()) p.terms_.emplace(std::move(w), c);
  return p;
}

Scalar NCPolynomial::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void NCPolynomial::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::size_t NCPolynomial::max_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

bool NCPolynomial::is_homogeneous(std::size_t degree) const {
  for (const auto& kv : terms_)
    if (kv.first.size() != degree) return false;
  return true;
}

NCPolynomial NCPolynomial::operator-() const {
  NCPolynomial r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
  NCPolynomial r;
  for (const auto& [u, c] : a.terms_) {
    for (const auto& [w, d] : b.terms_) {
      Word uw = u;
      uw.insert(uw.end(), w.begin(), w.end());
      r.add_term(uw, c * d);
    }
  }
  return r;
}

NCPolynomial operator*(const Scalar& s, const NCPolynomial& a) {
  NCPolynomial r;
  if (s.is_zero()) return r;
  for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, s * c);
  return r;
}

NCPolynomial NCPolynomial::classical_limit() const {
  NCPolynomial r;
  for (const auto& [w, c] : terms_) r.add_term(w, Scalar(c.classical_limit()));
  return r;
}

std::string NCPolynomial::str(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    if (w.empty()) {
      out += "(" + c.str() + ")";
      continue;
    }
    if (c.is_one()) {
      out += alphabet.render(w);
    } else if ((-c).is_one()) {
      out += "-" + alphabet.render(w);
    } else {
      out += "(" + c.str() + ")*" + alphabet.render(w);
    }
  }
  return out;
}

RewriteSystem::RewriteSystem(std::size_t alphabet_size, bool square_free, std::vector<Rule> rules)
    : n_(alphabet_size), square_free_(square_free), rules_(std::move(rules)),
      table_(alphabet_size * alphabet_size, -1) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    if (r.hi >= n_ || r.lo >= n_) throw PresentationError("rule letter out of range");
    if (r.hi < r.lo || (r.hi == r.lo && !square_free_))
      throw PresentationError("rule pattern is not an inverted pair");
    const Word pattern{r.hi, r.lo};
    for (const auto& [w, c] : r.rhs.terms()) {
      if (w.size() != 2 || !(w < pattern))
        throw PresentationError("rule does not decrease the word order");
    }
    int& slot = table_[static_cast<std::size_t>(r.hi) * n_ + r.lo];
    if (slot >= 0) throw PresentationError("duplicate rule");
    slot = static_cast<int>(i);
  }
}

bool RewriteSystem::is_normal(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (find(w[i], w[i + 1])) return false;
  return true;
}

RewriteSystem rules_from_relations(const Alphabet& alphabet, bool square_free,
                                   const std::vector<QuadraticRelation>& relations) {
  const std::size_t n = alphabet.size();
  RowEchelon ech(RowEchelon::Pivot::Largest);
  for (const auto& rel : relations) {
    SparseVec row;
    for (const auto& [w, c] : rel.poly.terms()) {
      if (w.size() != 2) throw PresentationError("relation is not quadratic: " + rel.citation);
      add_entry(row, static_cast<std::size_t>(w[0]) * n + w[1], c);
    }
    if (!row.empty()) ech.insert(std::move(row), {rel.citation});
  }
  std::vector<Rule> rules;
  for (const auto& [p, row] : ech.rows()) {
    LetterId a = static_cast<LetterId>(p / n), b = static_cast<LetterId>(p % n);
    if (a < b || (a == b && !square_free)) {
      throw PresentationError("relations force a relation among ordered words, led by " +
                              alphabet.render(Word{a, b}));
    }
    Rule r;
    r.hi = a;
    r.lo = b;
    for (const auto& [col, c] : row) {
      if (col == p) continue;
      r.rhs.add_term(Word{static_cast<LetterId>(col / n), static_cast<LetterId>(col % n)}, -c);
    }
    std::string cite;
    for (const auto& t : ech.tags(p)) cite += (cite.empty() ? "" : "; ") + t;
    r.citation = cite;
    rules.push_back(std::move(r));
  }
  for (LetterId a = 0; a < n; ++a) {
    for (LetterId b = 0; b <= a; ++b) {
      if (a == b && !square_free) continue;
      if (!ech.is_pivot(static_cast<std::size_t>(a) * n + b))
        throw PresentationError("no rule for " + alphabet.render(Word{a, b}));
    }
  }
  return RewriteSystem(n, square_free, std::move(rules));
}

std::uint64_t default_fuel() {
  if (const char* s = std::getenv("QINV_FUEL")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') return v;
  }
  return kDefaultFuel;
}

NCPolynomial normal_form(const NCPolynomial& p, const RewriteSystem& rs, std::uint64_t fuel) {
  NCPolynomial::Terms pending = p.terms();
  NCPolynomial done;
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Word w = it->first;
    Scalar c = it->second;
    pending.erase(it);
    const Rule* rule = nullptr;
    std::size_t pos = 0;
    for (; pos + 1 < w.size(); ++pos) {
      if ((rule = rs.find(w[pos], w[pos + 1]))) break;
    }
    if (!rule) {
      // every word still pending is smaller, so w is final
      done.add_term(w, c);
      continue;
    }
    if (fuel == 0) {
      NCPolynomial partial = done;
      for (const auto& [u, d] : pending) partial.add_term(u, d);
      partial.add_term(w, c);
      throw FuelExhausted(std::move(partial));
    }
    --fuel;
    for (const auto& [u, d] : rule->rhs.terms()) {
      Word nw = w;
      nw[pos] = u[0];
      nw[pos + 1] = u[1];
      if (!DegLexLess{}(nw, w)) throw std::logic_error("rewrite step did not decrease the word");
      auto [jt, fresh] = pending.try_emplace(std::move(nw), c * d);
      if (!fresh) {
        jt->second += c * d;
        if (jt->second.is_zero()) pending.erase(jt);
      }
    }
  }
  return done;
}

NCPolynomial multiply(const NCPolynomial& a, const NCPolynomial& b, const RewriteSystem& rs,
                      std::uint64_t fuel) {
  return normal_form(a * b, rs, fuel);
}

namespace {

void enumerate(const Alphabet& al, std::vector<int>& remaining, int left, LetterId start,
               bool strict, Word& cur, std::vector<Word>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (LetterId id = start; id < al.size(); ++id) {
    int s = al.slot(id);
    if (remaining[static_cast<std::size_t>(s)] == 0) continue;
    --remaining[static_cast<std::size_t>(s)];
    cur.push_back(id);
    enumerate(al, remaining, left - 1, strict ? id + 1 : id, strict, cur, out);
    cur.pop_back();
    ++remaining[static_cast<std::size_t>(s)];
  }
}

}  // namespace

std::vector<Word> graded_words(const Alphabet& alphabet, const std::vector<int>& md,
                               bool square_free) {
  if (static_cast<int>(md.size()) != alphabet.num_slots())
    throw std::invalid_argument("multidegree length does not match the grading");
  int total = 0;
  for (int d : md) {
    if (d < 0) throw std::invalid_argument("negative degree");
    total += d;
  }
  std::vector<int> remaining = md;
  std::vector<Word> out;
  Word cur;
  enumerate(alphabet, remaining, total, 0, square_free, cur, out);
  return out;
}

std::vector<Word> words_of_degree(const Alphabet& alphabet, int degree, bool square_free) {
  std::vector<int> remaining(static_cast<std::size_t>(alphabet.num_slots()), degree);
  std::vector<Word> out;
  Word cur;
  enumerate(alphabet, remaining, degree, 0, square_free, cur, out);
  return out;
}

std::vector<int> multidegree(const Alphabet& alphabet, const Word& w) {
  std::vector<int> d(static_cast<std::size_t>(alphabet.num_slots()), 0);
  for (LetterId id : w) ++d[static_cast<std::size_t>(alphabet.slot(id))];
  return d;
}

std::vector<OverlapFailure> check_overlaps(const RewriteSystem& rs, std::uint64_t fuel) {
  std::vector<OverlapFailure> out;
  const auto n = static_cast<LetterId>(rs.alphabet_size());
  for (LetterId a = 0; a < n; ++a) {
    for (LetterId b = 0; b < n; ++b) {
      const Rule* left = rs.find(a, b);
      if (!left) continue;
      for (LetterId c = 0; c < n; ++c) {
        const Rule* right = rs.find(b, c);
        if (!right) continue;
        NCPolynomial x = left->rhs * NCPolynomial::letter(c);
        NCPolynomial y = NCPolynomial::letter(a) * right->rhs;
        NCPolynomial diff = normal_form(x, rs, fuel) - normal_form(y, rs, fuel);
        if (!diff.is_zero()) out.push_back({Word{a, b, c}, std::move(diff)});
      }
    }
  }
  return out;
}

}  // namespace qinv
