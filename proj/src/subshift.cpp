#include "tfg/subshift.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "tfg/error.hpp"

namespace tfg {

struct Subshift::Cache {
  std::mutex mutex;
  // SFT backend: admissible words of length (longest forbidden word - 1)
  // that lie on some bi-infinite path.
  std::vector<Word> states;
  std::size_t state_length = 0;
  std::set<Word> two_factors;
  bool have_two_factors = false;
  std::map<std::size_t, std::vector<Word>> factors;
};

Subshift::Subshift(std::string alphabet, std::vector<Word> forbidden, std::map<char, Word> rules)
    : alphabet_(std::move(alphabet)),
      forbidden_(std::move(forbidden)),
      rules_(std::move(rules)),
      cache_(std::make_unique<Cache>()) {}

Subshift::~Subshift() = default;

namespace {

std::string sorted_alphabet(std::string alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  if (alphabet.empty()) throw Error(ErrorCode::InvalidSubshift, "alphabet is empty");
  if (std::adjacent_find(alphabet.begin(), alphabet.end()) != alphabet.end())
    throw Error(ErrorCode::InvalidSubshift, "alphabet has repeated letters");
  return alphabet;
}

Word substitute(const std::map<char, Word>& rules, std::string_view w) {
  Word out;
  for (char c : w) out += rules.at(c);
  return out;
}

}  // namespace

SubshiftRef Subshift::sft(std::string alphabet, std::vector<Word> forbidden) {
  auto s = std::make_shared<Subshift>(sorted_alphabet(std::move(alphabet)), std::vector<Word>{}, std::map<char, Word>{});
  for (const auto& f : forbidden) {
    if (f.empty()) throw Error(ErrorCode::InvalidSubshift, "forbidden word is empty");
    s->check_letters(f);
  }
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
  s->forbidden_ = std::move(forbidden);
  s->build_states();
  return s;
}

SubshiftRef Subshift::substitution(std::string alphabet, std::map<char, Word> rules) {
  alphabet = sorted_alphabet(std::move(alphabet));
  auto s = std::make_shared<Subshift>(alphabet, std::vector<Word>{}, std::map<char, Word>{});
  if (rules.size() != alphabet.size()) throw Error(ErrorCode::InvalidSubshift, "every letter needs exactly one rule");
  for (const auto& [c, img] : rules) {
    s->check_letters(std::string_view(&c, 1));
    if (img.empty()) throw Error(ErrorCode::InvalidSubshift, "substitution image is empty");
    s->check_letters(img);
  }
  // Primitive: some power of the incidence matrix is positive. Wielandt's
  // bound (n-1)^2 + 1 on the exponent makes the search finite.
  const std::size_t n = alphabet.size();
  auto idx = [&](char c) { return static_cast<std::size_t>(alphabet.find(c)); };
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& [c, img] : rules)
    for (char d : img) reach[idx(c)][idx(d)] = true;
  std::vector<std::vector<bool>> power = reach;
  bool primitive = false;
  for (std::size_t k = 1; k <= (n - 1) * (n - 1) + 1 && !primitive; ++k) {
    primitive = true;
    for (const auto& row : power)
      for (bool b : row) primitive = primitive && b;
    if (primitive) break;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (power[i][j])
          for (std::size_t l = 0; l < n; ++l) next[i][l] = next[i][l] || reach[j][l];
    power = std::move(next);
  }
  if (!primitive) throw Error(ErrorCode::InvalidSubshift, "substitution is not primitive");
  bool growing = std::any_of(rules.begin(), rules.end(), [](const auto& kv) { return kv.second.size() >= 2; });
  if (!growing) throw Error(ErrorCode::InvalidSubshift, "substitution does not grow words");
  s->rules_ = std::move(rules);
  return s;
}

bool Subshift::free_of_forbidden(std::string_view w) const {
  return std::none_of(forbidden_.begin(), forbidden_.end(),
                      [&](const Word& f) { return w.find(f) != std::string_view::npos; });
}

void Subshift::build_states() {
  std::size_t longest = 0;
  for (const auto& f : forbidden_) longest = std::max(longest, f.size());
  const std::size_t m = longest > 0 ? longest - 1 : 0;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0; len < m; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (char c : alphabet_)
        if (free_of_forbidden(w + c)) next.push_back(w + c);
    layer = std::move(next);
  }
  std::set<Word> alive(layer.begin(), layer.end());
  auto successors = [&](const Word& s) {
    std::vector<Word> out;
    for (char c : alphabet_) {
      Word t = s + c;
      if (free_of_forbidden(t) && alive.contains(t.substr(1))) out.push_back(t.substr(1));
    }
    return out;
  };
  for (bool changed = true; changed;) {
    changed = false;
    std::set<Word> has_pred;
    for (const auto& s : alive)
      for (auto& t : successors(s)) has_pred.insert(std::move(t));
    for (auto it = alive.begin(); it != alive.end();) {
      if (!has_pred.contains(*it) || successors(*it).empty()) {
        it = alive.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  if (alive.empty()) throw Error(ErrorCode::InvalidSubshift, "the subshift is empty");
  cache_->states.assign(alive.begin(), alive.end());
  cache_->state_length = m;
}

void Subshift::check_letters(std::string_view w) const {
  for (char c : w)
    if (alphabet_.find(c) == std::string::npos)
      throw Error(ErrorCode::UnknownLetter, std::string("letter '") + c + "' is not in the alphabet");
}

bool Subshift::admits(std::string_view w) const {
  check_letters(w);
  if (is_sft()) {
    if (!free_of_forbidden(w)) return false;
    const auto& states = cache_->states;
    const std::size_t m = cache_->state_length;
    if (w.size() < m)
      return std::any_of(states.begin(), states.end(),
                         [&](const Word& s) { return s.find(w) != std::string::npos; });
    for (std::size_t i = 0; i + m <= w.size(); ++i)
      if (!std::binary_search(states.begin(), states.end(), w.substr(i, m))) return false;
    return true;
  }
  const auto& fs = substitution_factors(w.size());
  return std::binary_search(fs.begin(), fs.end(), w);
}

namespace {

void extend_words(const Subshift& s, Word& cur, std::size_t n, std::vector<Word>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (char c : s.alphabet()) {
    cur.push_back(c);
    if (s.admits(cur)) extend_words(s, cur, n, out);
    cur.pop_back();
  }
}

void add_factors(std::string_view w, std::size_t n, std::set<Word>& out) {
  if (w.size() < n) return;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.emplace(w.substr(i, n));
}

}  // namespace

std::vector<Word> Subshift::words(std::size_t n) const {
  if (is_sft()) {
    std::vector<Word> out;
    Word cur;
    extend_words(*this, cur, n, out);
    return out;
  }
  return substitution_factors(n);
}

const std::vector<Word>& Subshift::substitution_factors(std::size_t n) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (auto it = cache_->factors.find(n); it != cache_->factors.end()) return it->second;

  if (!cache_->have_two_factors) {
    // Two-letter factors are closed under taking the 2-factors of images.
    std::set<Word> l2;
    for (const auto& [c, img] : rules_) add_factors(img, 2, l2);
    for (bool grew = true; grew;) {
      grew = false;
      std::set<Word> next = l2;
      for (const auto& w : l2) add_factors(substitute(rules_, w), 2, next);
      if (next.size() != l2.size()) {
        l2 = std::move(next);
        grew = true;
      }
    }
    cache_->two_factors = std::move(l2);
    cache_->have_two_factors = true;
  }

  std::set<Word> found;
  if (n == 0) {
    found.insert(Word{});
  } else {
    // Once every sigma^k(c) has length >= n - 1, each n-factor sits inside
    // sigma^k(cd) for some two-letter factor cd.
    std::vector<Word> seeds(cache_->two_factors.begin(), cache_->two_factors.end());
    for (char c : alphabet_) seeds.emplace_back(1, c);
    std::map<char, Word> power;
    for (char c : alphabet_) power[c] = Word(1, c);
    auto shortest = [&] {
      std::size_t m = SIZE_MAX;
      for (const auto& [c, w] : power) m = std::min(m, w.size());
      return m;
    };
    while (shortest() + 1 < n)
      for (auto& [c, w] : power) w = substitute(rules_, w);
    for (const auto& seed : seeds) {
      Word image;
      for (char c : seed) image += power[c];
      add_factors(image, n, found);
    }
  }
  return cache_->factors.emplace(n, std::vector<Word>(found.begin(), found.end())).first->second;
}

Word BlockCode::image(std::string_view w) const {
  const std::size_t span = 2 * static_cast<std::size_t>(radius) + 1;
  if (w.size() < span) throw Error(ErrorCode::RuleIncomplete, "word shorter than the code window");
  Word out;
  out.reserve(w.size() - span + 1);
  for (std::size_t i = 0; i + span <= w.size(); ++i) {
    auto it = rule.find(Word(w.substr(i, span)));
    if (it == rule.end()) throw Error(ErrorCode::RuleIncomplete, "no rule for window '" + Word(w.substr(i, span)) + "'");
    out.push_back(it->second);
  }
  return out;
}

std::size_t default_check_depth(const BlockCode& q) {
  std::size_t longest = 8;
  if (q.target)
    for (const auto& f : q.target->forbidden()) longest = std::max(longest, f.size());
  return 2 * static_cast<std::size_t>(std::max(q.radius, 0)) + longest;
}

FactorCheck factor_code_check(const BlockCode& q, std::size_t depth) {
  if (q.radius < 0) throw Error(ErrorCode::RuleIncomplete, "negative radius");
  const std::size_t span = 2 * static_cast<std::size_t>(q.radius) + 1;
  for (const auto& w : q.source->words(span))
    if (!q.rule.contains(w)) throw Error(ErrorCode::RuleIncomplete, "no rule for admissible window '" + w + "'");
  for (const auto& [w, c] : q.rule) {
    if (w.size() != span) throw Error(ErrorCode::RuleIncomplete, "rule window '" + w + "' has the wrong length");
    if (q.target->alphabet().find(c) == std::string::npos)
      throw Error(ErrorCode::UnknownLetter, std::string("rule emits letter '") + c + "' outside the target alphabet");
  }
  FactorCheck out;
  out.images_admissible = true;
  for (const auto& w : q.source->words(std::max(depth, span)))
    if (!q.target->admits(q.image(w))) {
      out.images_admissible = false;
      break;
    }
  return out;
}

namespace {

std::size_t primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return d;
  }
  return n;
}

long floor_mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

BiPoint BiPoint::make(Word left, Word center, Word right, long start) {
  if (left.empty() || right.empty()) throw Error(ErrorCode::InvalidPoint, "periodic tails must be non-empty");
  left.resize(primitive_root(left));
  right.resize(primitive_root(right));
  // Grow the right tail leftwards over the center as far as it reaches.
  while (!center.empty() && center.back() == right.back()) {
    center.pop_back();
    std::rotate(right.rbegin(), right.rbegin() + 1, right.rend());
  }
  if (center.empty()) {
    // Then keep growing it into the left tail, unless the point is periodic.
    while (left != right && left.back() == right.back()) {
      std::rotate(left.rbegin(), left.rbegin() + 1, left.rend());
      std::rotate(right.rbegin(), right.rbegin() + 1, right.rend());
      --start;
    }
    if (left == right) {
      const long p = static_cast<long>(right.size());
      const long shift = floor_mod(start, p) - start;
      // Moving the seam by `shift` positions rotates both tails by the same amount.
      const auto r = static_cast<std::ptrdiff_t>(floor_mod(-shift, p));
      std::rotate(right.begin(), right.begin() + (p - r) % p, right.end());
      left = right;
      start += shift;
    }
  } else {
    while (!center.empty() && center.front() == left.front()) {
      center.erase(center.begin());
      std::rotate(left.begin(), left.begin() + 1, left.end());
      ++start;
    }
  }
  return BiPoint(std::move(left), std::move(center), std::move(right), start);
}

char BiPoint::at(long i) const {
  const long off = i - start_;
  const long c = static_cast<long>(center_.size());
  if (off >= 0 && off < c) return center_[static_cast<std::size_t>(off)];
  if (off >= c) return right_[static_cast<std::size_t>((off - c) % static_cast<long>(right_.size()))];
  const long l = static_cast<long>(left_.size());
  return left_[static_cast<std::size_t>(l - 1 - ((-off - 1) % l))];
}

Word BiPoint::window(long from, std::size_t length) const {
  Word out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(at(from + static_cast<long>(i)));
  return out;
}

BiPoint BiPoint::shifted(long k) const { return make(left_, center_, right_, start_ - k); }

bool is_admissible(const Subshift& s, const BiPoint& x, std::size_t depth) {
  if (depth == 0) depth = 1;
  const long d = static_cast<long>(depth);
  const long from = x.start() - d - static_cast<long>(x.left().size());
  const long to = x.start() + static_cast<long>(x.center().size() + x.right().size()) + d;
  for (long p = from; p + d <= to; ++p)
    if (!s.admits(x.window(p, depth))) return false;
  return true;
}

}  // namespace tfg
