#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace tfg;
using namespace tfg::test;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidSystem;
}

SubshiftRef two() { return Subshift::full_shift("01"); }

CocycleElement swap01(const SubshiftRef& s) {
  return cocycle_validate(s, {{"01", 0, 1}, {"01", -1, -1}, {"000", -1, 0}, {"100", -1, 0}, {"110", -1, 0}, {"111", -1, 0}});
}

BlockCode xor_code(const SubshiftRef& s) {
  BlockCode q{1, {}, s, s};
  for (char a : std::string("01"))
    for (char b : std::string("01"))
      for (char c : std::string("01")) q.rule[std::string{a, b, c}] = b == c ? '0' : '1';
  return q;
}

BlockCode identity_code(const SubshiftRef& s) {
  BlockCode q{0, {}, s, s};
  for (char a : s->alphabet()) q.rule[std::string(1, a)] = a;
  return q;
}

BiPoint periodic(const Word& w) { return BiPoint::make(w, "", w, 0); }

/// Every binary word of length 1..max_len, as periodic points.
std::vector<BiPoint> periodic_points(std::size_t max_len) {
  std::set<BiPoint> out;
  for (std::size_t n = 1; n <= max_len; ++n)
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
      Word w;
      for (std::size_t i = 0; i < n; ++i) w.push_back((bits >> i) & 1u ? '1' : '0');
      for (long s = 0; s < static_cast<long>(n); ++s) out.insert(periodic(w).shifted(s));
    }
  return {out.begin(), out.end()};
}

BiPoint oracle_apply(const CocycleElement& g, const BiPoint& x) {
  auto k = oracle_cocycle_value(g.pieces(), x);
  REQUIRE(k.has_value());
  return x.shifted(*k);
}

/// n-factors of a long prefix of the fixed point, by direct iteration.
std::set<Word> fibonacci_factors(std::size_t n) {
  Word w = "a";
  while (w.size() < 4000) {
    Word next;
    for (char c : w) next += c == 'a' ? "ab" : "a";
    w = next;
  }
  std::set<Word> out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

}  // namespace

TEST_CASE("languages") {
  CHECK(two()->admits("0110"));
  SubshiftRef gm = Subshift::sft("01", {"11"});
  CHECK_FALSE(gm->admits("11"));
  CHECK(gm->admits("0100"));
  SubshiftRef fib = Subshift::substitution("ab", {{'a', "ab"}, {'b', "a"}});
  CHECK_FALSE(fib->admits("bb"));
  CHECK(fib->admits("abaab"));
  CHECK(code_of([&] { two()->admits("2"); }) == ErrorCode::UnknownLetter);
  CHECK(code_of([&] { Subshift::substitution("ab", {{'a', "ab"}}); }) == ErrorCode::InvalidSubshift);

  for (std::size_t n = 1; n <= 12; ++n) {
    auto expect = fibonacci_factors(n);
    CHECK(fib->factor_complexity(n) == n + 1);
    const auto words = fib->words(n);
    CHECK(std::set<Word>(words.begin(), words.end()) == expect);
  }
  for (std::size_t n = 1; n <= 10; ++n) CHECK(two()->factor_complexity(n) == (std::size_t{1} << n));

  // Words that cannot extend both ways are not in an SFT's language.
  SubshiftRef dead = Subshift::sft("012", {"20", "21", "22", "02", "12"});
  CHECK_FALSE(dead->admits("2"));
  CHECK(dead->admits("0101"));
}

TEST_CASE("cocycle validation") {
  SubshiftRef s = two();
  CocycleElement u = cocycle_validate(s, {{"", 0, 1}});
  CHECK(u == shift_power(s, 1));
  CHECK(cocycle_inverse(u) == shift_power(s, -1));
  CocycleElement sw = swap01(s);
  CHECK(sw == cylinder_swap(s, "01", 1));
  CHECK(cocycle_compose(sw, sw) == cocycle_identity(s));
  CHECK(code_of([&] { cocycle_validate(s, {{"1", 0, 1}, {"0", 0, -1}}); }) == ErrorCode::NotBijective);
  CHECK(code_of([&] { cocycle_validate(s, {{"1", 0, 1}}); }) == ErrorCode::NotPartition);
  CHECK(code_of([&] { cocycle_validate(s, {{"1", 0, 0}, {"", 0, 0}}); }) == ErrorCode::NotPartition);
  CHECK(code_of([&] { cylinder_swap(s, "00", 1); }) == ErrorCode::NotDisjoint);
}

TEST_CASE("composition and application") {
  SubshiftRef s = two();
  CHECK(cocycle_compose(shift_power(s, 1), shift_power(s, 1)) == shift_power(s, 2));
  CocycleElement sw = swap01(s);
  CHECK(cocycle_compose(sw, cocycle_identity(s)) == sw);
  CHECK(cocycle_compose(cocycle_identity(s), sw) == sw);

  // swap o swap is k = 0 on every window of length 5.
  CocycleElement sq = cocycle_compose(sw, sw);
  for (unsigned bits = 0; bits < 32; ++bits) {
    Word w;
    for (int i = 0; i < 5; ++i) w.push_back((bits >> i) & 1u ? '1' : '0');
    CHECK(oracle_cocycle_value(sq.pieces(), BiPoint::make("0", w, "0", -2)) == 0);
  }

  BiPoint x = BiPoint::make("0", "01", "0", 0);
  CHECK(cocycle_apply(sw, x) == x.shifted(1));
  CHECK(cocycle_apply(shift_power(s, 1), x) == x.shifted(1));
  CHECK(cocycle_apply(shift_power(s, 1), x).at(0) == '1');
  CHECK(cocycle_apply(cocycle_identity(s), x) == x);
  CHECK(code_of([&] { cocycle_compose(sw, cocycle_identity(Subshift::sft("01", {"11"}))); }) ==
        ErrorCode::InvalidSubshift);
}

TEST_CASE("random elements against the piece oracle") {
  Rng rng(5);
  SubshiftRef s = two();
  const auto pts = periodic_points(6);
  for (int i = 0; i < 40; ++i) {
    CocycleElement g = random_cocycle(s, rng, 2, 1);
    CocycleElement h = random_cocycle(s, rng, 2, 1);
    CocycleElement gh = cocycle_compose(g, h);
    std::set<BiPoint> image;
    for (const auto& x : pts) {
      CHECK(cocycle_apply(g, x) == oracle_apply(g, x));
      CHECK(cocycle_apply(gh, x) == cocycle_apply(g, cocycle_apply(h, x)));
      image.insert(cocycle_apply(g, x));
    }
    // A bijection permutes the periodic points of each period.
    CHECK(image == std::set<BiPoint>(pts.begin(), pts.end()));
    for (int j = 0; j < 10; ++j) {
      BiPoint x = random_bipoint(*s, rng);
      CHECK(cocycle_apply(gh, x) == cocycle_apply(g, cocycle_apply(h, x)));
      CHECK(cocycle_apply(cocycle_inverse(g), cocycle_apply(g, x)) == x);
    }
  }
}

TEST_CASE("group axioms") {
  Rng rng(12);
  for (SubshiftRef s : {two(), Subshift::sft("01", {"11"})}) {
    for (int i = 0; i < 30; ++i) {
      CocycleElement a = random_cocycle(s, rng, 2, 1);
      CocycleElement b = random_cocycle(s, rng, 2, 1);
      CocycleElement c = random_cocycle(s, rng, 2, 1);
      CHECK(cocycle_compose(cocycle_compose(a, b), c) == cocycle_compose(a, cocycle_compose(b, c)));
      CHECK(cocycle_compose(a, cocycle_inverse(a)) == cocycle_identity(s));
      CHECK(cocycle_compose(cocycle_inverse(a), a) == cocycle_identity(s));
      CHECK(cocycle_inverse(cocycle_inverse(a)) == a);
      CHECK(cocycle_validate(s, a.pieces()) == a);
    }
  }
}

TEST_CASE("factor code check") {
  SubshiftRef s = two();
  FactorCheck id = factor_code_check(identity_code(s), 6);
  CHECK(id.images_admissible);
  CHECK_FALSE(id.surjectivity_checked);
  CHECK(factor_code_check(xor_code(s), 6).images_admissible);
  SubshiftRef gm = Subshift::sft("01", {"11"});
  BlockCode ones{0, {{"0", '1'}, {"1", '1'}}, s, gm};
  CHECK_FALSE(factor_code_check(ones, 4).images_admissible);
  BlockCode partial{0, {{"0", '0'}}, s, s};
  CHECK(code_of([&] { factor_code_check(partial, 3); }) == ErrorCode::RuleIncomplete);
}

TEST_CASE("embedding through a factor code") {
  SubshiftRef s = two();
  CocycleElement u = shift_power(s, 1);
  CocycleElement sw = swap01(s);
  CHECK(embed_via_factor(u, identity_code(s), sw) == sw);
  CHECK(embed_via_factor(u, xor_code(s), cocycle_identity(s)) == cocycle_identity(s));
  CHECK(embed_via_factor(u, xor_code(s), cocycle_compose(sw, sw)) == cocycle_identity(s));
  CHECK(code_of([&] { embed_via_factor(u, xor_code(s), shift_power(s, 20), 16); }) ==
        ErrorCode::UnsupportedIteration);
  SubshiftRef gm = Subshift::sft("01", {"11"});
  BlockCode ones{0, {{"0", '1'}, {"1", '1'}}, s, gm};
  CHECK(code_of([&] { embed_via_factor(u, ones, cocycle_identity(gm)); }) == ErrorCode::NotFactorCode);

  Rng rng(19);
  const auto pts = periodic_points(6);
  for (int i = 0; i < 30; ++i) {
    CocycleElement g = random_cocycle(s, rng, 2, 1);
    CocycleElement h = random_cocycle(s, rng, 2, 1);
    CocycleElement rg = embed_via_factor(u, xor_code(s), g);
    CHECK(embed_via_factor(u, xor_code(s), cocycle_compose(g, h)) ==
          cocycle_compose(rg, embed_via_factor(u, xor_code(s), h)));
    // rho(g)(x) = u^{k_g(q x)}(x), evaluated on periodic points.
    for (const auto& x : pts) {
      const long p = static_cast<long>(x.right().size());
      Word y;
      for (long j = 0; j < p; ++j) y.push_back(x.at(j) == x.at(j + 1) ? '0' : '1');
      BiPoint qx = periodic(y);
      for (long j = -p; j < 2 * p; ++j) REQUIRE(qx.at(j) == (x.at(j) == x.at(j + 1) ? '0' : '1'));
      auto k = oracle_cocycle_value(g.pieces(), qx);
      REQUIRE(k.has_value());
      CHECK(cocycle_apply(rg, x) == x.shifted(*k));
    }
  }
}
