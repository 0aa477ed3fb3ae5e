#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qinv/scalar.hpp"

namespace qinv {

using LetterId = std::uint32_t;
using Word = std::vector<LetterId>;

// Degree first, then lexicographic on letter ids.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

enum class LetterKind { X, Y };

// A generator: kind, row/copy index (factor) and column label.
struct Letter {
  LetterKind kind = LetterKind::X;
  int factor = 1;
  int label = 1;
};

enum class LetterStyle { Vector, Matrix };

// Letters are numbered in the generator order; a slot groups letters that
// share one grading component.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::vector<Letter> letters, std::vector<int> slots, int num_slots, LetterStyle style);

  std::size_t size() const { return letters_.size(); }
  const Letter& letter(LetterId id) const { return letters_.at(id); }
  int slot(LetterId id) const { return slots_.at(id); }
  int num_slots() const { return num_slots_; }
  // throws std::out_of_range for unknown letters
  LetterId id(LetterKind kind, int factor, int label) const;
  std::optional<LetterId> find(LetterKind kind, int factor, int label) const;
  std::string render(LetterId id) const;
  std::string render(const Word& w) const;

 private:
  std::vector<Letter> letters_;
  std::vector<int> slots_;
  int num_slots_ = 0;
  LetterStyle style_ = LetterStyle::Matrix;
};

class NCPolynomial {
 public:
  using Terms = std::map<Word, Scalar, DegLexLess>;

  NCPolynomial() = default;
  explicit NCPolynomial(const Scalar& c);
  static NCPolynomial monomial(Word w, const Scalar& c = Scalar(1L));
  static NCPolynomial letter(LetterId id) { return monomial({id}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const Word& w) const;
  void add_term(const Word& w, const Scalar& c);
  std::size_t max_degree() const;
  bool is_homogeneous(std::size_t degree) const;

  NCPolynomial operator-() const;
  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  // concatenation product in the free algebra
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
  friend NCPolynomial operator*(const Scalar& s, const NCPolynomial& a);
  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) { return a.terms_ == b.terms_; }

  // value of every coefficient at v = 1
  NCPolynomial classical_limit() const;
  std::string str(const Alphabet& alphabet) const;

 private:
  Terms terms_;
};

// hi·lo → rhs, where hi > lo (or hi == lo for square-zero rules).
struct Rule {
  LetterId hi = 0;
  LetterId lo = 0;
  NCPolynomial rhs;
  std::string citation;
};

struct PresentationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class RewriteSystem {
 public:
  RewriteSystem() = default;
  // Validates that every rule rewrites its pattern into strictly smaller words.
  RewriteSystem(std::size_t alphabet_size, bool square_free, std::vector<Rule> rules);

  std::size_t alphabet_size() const { return n_; }
  bool square_free() const { return square_free_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const Rule* find(LetterId a, LetterId b) const {
    int i = table_[static_cast<std::size_t>(a) * n_ + b];
    return i < 0 ? nullptr : &rules_[static_cast<std::size_t>(i)];
  }
  bool is_normal(const Word& w) const;

 private:
  std::size_t n_ = 0;
  bool square_free_ = false;
  std::vector<Rule> rules_;
  std::vector<int> table_;
};

struct QuadraticRelation {
  NCPolynomial poly;
  std::string citation;
};

// Gauss-Jordan on the span of the relations with largest-word pivots. Each
// pivot must be an inverted pair (or a square when square_free); the reduced
// rows become rules. Throws PresentationError if a pair is left without a
// rule or the relations force a relation among ordered words.
RewriteSystem rules_from_relations(const Alphabet& alphabet, bool square_free,
                                   const std::vector<QuadraticRelation>& relations);

constexpr std::uint64_t kDefaultFuel = 1000000;
// kDefaultFuel unless QINV_FUEL is set
std::uint64_t default_fuel();

struct FuelExhausted : std::runtime_error {
  explicit FuelExhausted(NCPolynomial p)
      : std::runtime_error("rewrite fuel exhausted"), partial(std::move(p)) {}
  NCPolynomial partial;
};

// Leftmost-redex straightening, largest words first. Each rule application
// costs one unit of fuel.
NCPolynomial normal_form(const NCPolynomial& p, const RewriteSystem& rs,
                         std::uint64_t fuel = default_fuel());
NCPolynomial multiply(const NCPolynomial& a, const NCPolynomial& b, const RewriteSystem& rs,
                      std::uint64_t fuel = default_fuel());

// Ordered words with the given number of letters in each slot, in
// lexicographic order. Strictly increasing when square_free.
std::vector<Word> graded_words(const Alphabet& alphabet, const std::vector<int>& multidegree,
                               bool square_free);
std::vector<Word> words_of_degree(const Alphabet& alphabet, int degree, bool square_free);
std::vector<int> multidegree(const Alphabet& alphabet, const Word& w);

// Overlap ambiguities a·b·c with both a·b and b·c redexes; a failure records
// the word and the difference of the two resolutions.
struct OverlapFailure {
  Word word;
  NCPolynomial difference;
};
std::vector<OverlapFailure> check_overlaps(const RewriteSystem& rs,
                                           std::uint64_t fuel = default_fuel());

}  // namespace qinv
