#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace tfg {

using Word = std::string;

/// A two-sided subshift over an alphabet of single characters, defined either
/// by finitely many forbidden words or by a primitive substitution. Values are
/// immutable; the substitution backend memoizes factor sets behind a mutex.
class Subshift {
 public:
  /// Throws InvalidSubshift or UnknownLetter.
  static std::shared_ptr<const Subshift> sft(std::string alphabet, std::vector<Word> forbidden);
  /// Throws InvalidSubshift (missing rule, empty image, not primitive, not growing).
  static std::shared_ptr<const Subshift> substitution(std::string alphabet, std::map<char, Word> rules);

  static std::shared_ptr<const Subshift> full_shift(std::string alphabet) { return sft(std::move(alphabet), {}); }

  const std::string& alphabet() const noexcept { return alphabet_; }
  bool is_sft() const noexcept { return rules_.empty(); }
  const std::vector<Word>& forbidden() const noexcept { return forbidden_; }
  const std::map<char, Word>& rules() const noexcept { return rules_; }

  /// Is w in the language, i.e. a factor of some point? Throws UnknownLetter.
  bool admits(std::string_view w) const;
  /// All admissible words of length n, sorted.
  std::vector<Word> words(std::size_t n) const;
  /// Number of admissible words of length n.
  std::size_t factor_complexity(std::size_t n) const { return words(n).size(); }

  Subshift(std::string alphabet, std::vector<Word> forbidden, std::map<char, Word> rules);
  ~Subshift();

 private:
  void check_letters(std::string_view w) const;
  bool free_of_forbidden(std::string_view w) const;
  void build_states();
  const std::vector<Word>& substitution_factors(std::size_t n) const;

  std::string alphabet_;
  std::vector<Word> forbidden_;
  std::map<char, Word> rules_;
  struct Cache;
  std::unique_ptr<Cache> cache_;
};

using SubshiftRef = std::shared_ptr<const Subshift>;

/// A sliding block code: x_i maps to rule(x[i - radius .. i + radius]).
struct BlockCode {
  int radius = 0;
  std::map<Word, char> rule;
  SubshiftRef source;
  SubshiftRef target;

  /// Image of a word of length >= 2 radius + 1. Throws RuleIncomplete.
  Word image(std::string_view w) const;
};

struct FactorCheck {
  bool images_admissible = false;
  /// Surjectivity of the code is never decided here.
  bool surjectivity_checked = false;
};

/// Every admissible source word of length `depth` maps to an admissible
/// target word. Throws RuleIncomplete if an admissible window has no rule.
FactorCheck factor_code_check(const BlockCode& q, std::size_t depth);
/// 2 radius + the longest forbidden target word, and at least 2 radius + 8.
std::size_t default_check_depth(const BlockCode& q);

/// A two-sided eventually periodic sequence ... L L center R R ...;
/// center[0] sits at coordinate `start`. Kept in a normal form so that
/// equal sequences compare equal.
class BiPoint {
 public:
  /// Throws InvalidPoint on empty cycles.
  static BiPoint make(Word left, Word center, Word right, long start);

  const Word& left() const noexcept { return left_; }
  const Word& center() const noexcept { return center_; }
  const Word& right() const noexcept { return right_; }
  long start() const noexcept { return start_; }

  char at(long i) const;
  /// x[from .. from + length - 1]
  Word window(long from, std::size_t length) const;
  /// u^k(x), i.e. the sequence i -> x_{i+k}.
  BiPoint shifted(long k) const;

  auto operator<=>(const BiPoint&) const = default;

 private:
  BiPoint(Word l, Word c, Word r, long s) : left_(std::move(l)), center_(std::move(c)), right_(std::move(r)), start_(s) {}
  Word left_, center_, right_;
  long start_ = 0;
};

/// All factors of length <= depth around the glued region are admissible.
/// Throws UnknownLetter.
bool is_admissible(const Subshift& s, const BiPoint& x, std::size_t depth);

}  // namespace tfg
