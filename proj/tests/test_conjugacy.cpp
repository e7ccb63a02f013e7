#include <doctest.h>

#include <map>

#include "fibconj/conjugacy.hpp"
#include "fibconj/error.hpp"
#include "fibconj/fibonacci.hpp"
#include "fibconj/grammar.hpp"
#include "fibconj/nblock.hpp"
#include "helpers.hpp"

using namespace fibconj;
using testing::sub;
using testing::word;

namespace {

const Substitution kPhi = sub("0->01;1->0");
const Substitution kEta5 = sub("1->12;2->34;3->5;4->1;5->23");
const Substitution kEta = sub("a->b;b->ca;c->ba");
const Substitution kZeta = sub("a->b;b->ac;c->ab");

std::vector<std::pair<Letter, Letter>> pair_letters(const std::vector<CyclicPair>& ps) {
  std::vector<std::pair<Letter, Letter>> out;
  for (const auto& p : ps) out.emplace_back(p.b, p.a);
  return out;
}

}  // namespace

TEST_CASE("cyclic pairs") {
  const auto phi = cyclic_pairs(kPhi);
  CHECK(pair_letters(phi) == std::vector<std::pair<Letter, Letter>>{{0, 0}, {1, 0}});
  // 1 is the last letter of phi^m(1) only for even m.
  CHECK(phi.front().m == 2);

  const auto eta = cyclic_pairs(kEta5);
  CHECK(pair_letters(eta) == std::vector<std::pair<Letter, Letter>>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 0}});
  for (const auto& p : eta) CHECK(p.m == 6);

  const auto bab = cyclic_pairs(sub("a->b;b->c;c->bab"));
  CHECK(pair_letters(bab) == std::vector<std::pair<Letter, Letter>>{{1, 2}, {2, 1}});

  CHECK_THROWS_AS(cyclic_pairs(sub("0->0;1->10")), Error);
}

TEST_CASE("cyclic pair invariants on random primitive substitutions") {
  std::mt19937_64 rng(0xc1c1'1c00ULL);
  int checked = 0;
  for (int i = 0; i < 1500; ++i) {
    const Substitution s(oracle::random_images(rng, 2 + i % 3, 3));
    if (!is_primitive(s)) continue;
    const auto l2 = language(s, 2);
    for (const auto& p : cyclic_pairs(s)) {
      const auto sm = power(s, p.m);
      CHECK(sm.image(p.b).back() == p.b);
      CHECK(sm.image(p.a).front() == p.a);
      CHECK(l2.contains(std::vector<Letter>{p.b, p.a}));
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("pair windows are two-sided fixed points") {
  for (const auto& p : cyclic_pairs(kEta5)) {
    const auto w = pair_window(kEta5, p, 6);
    REQUIRE(w.size() == 12);
    CHECK(w[5] == p.b);
    CHECK(w[6] == p.a);
    const auto l = language(kEta5, 12);
    CHECK(l.contains(w));
  }
}

TEST_CASE("Z-triples") {
  const auto eta2 = sub("a->b;b->ca;c->ab");
  const auto triples = z_triples(eta2);
  REQUIRE_FALSE(triples.empty());
  // Built from the 2-words ab, bb, bc.
  bool found = false;
  for (const auto& t : triples)
    found = found || (t.ba.b == 0 && t.ba.a == 1 && t.bd.b == 1 && t.bd.a == 1 && t.cd.b == 1 && t.cd.a == 2) ||
            (t.ba.b == 1 && t.ba.a == 2 && t.bd.b == 1 && t.bd.a == 1 && t.cd.b == 0 && t.cd.a == 1);
  CHECK(found);
  CHECK(z_triples(kEta5).empty());
  CHECK(z_triples(kPhi).empty());
}

TEST_CASE("Z-triple presence is invariant under relabelling") {
  std::mt19937_64 rng(0x2a7e'1e55ULL);
  int cases = 0;
  for (int i = 0; cases < 1000 && i < 20000; ++i) {
    const Substitution s(oracle::random_images(rng, 3, 3));
    if (!is_primitive(s)) continue;
    std::vector<Letter> perm{0, 1, 2};
    for (int r = i % 6; r > 0; --r) std::next_permutation(perm.begin(), perm.end());
    CHECK(z_triples(s).empty() == z_triples(permute_letters(s, perm)).empty());
    ++cases;
  }
  CHECK(cases == 1000);
}

TEST_CASE("two-point factor") {
  const auto tp = two_point_factor(sub("a->b;b->c;c->bab"));
  REQUIRE(tp);
  CHECK(tp->part0 == std::vector<Letter>{0, 2});
  CHECK(tp->part1 == std::vector<Letter>{1});
  CHECK_FALSE(two_point_factor(kPhi));
  CHECK_FALSE(two_point_factor(kEta5));
  CHECK_THROWS_AS(two_point_factor(sub("0->1;1->000")), Error);
}

TEST_CASE("time reversal") {
  CHECK(time_reversal(kPhi) == sub("0->10;1->0"));
  CHECK(time_reversal(kEta) == kZeta);
  const auto pal = sub("0->010;1->101");
  CHECK(time_reversal(pal) == pal);

  std::mt19937_64 rng(0x7e7e'0001ULL);
  int cases = 0;
  for (int i = 0; cases < 1000 && i < 20000; ++i) {
    const Substitution s(oracle::random_images(rng, 2 + i % 2, 4));
    CHECK(time_reversal(time_reversal(s)) == s);
    if (!is_primitive(s)) continue;
    ++cases;
    const auto r = time_reversal(s);
    for (std::size_t l = 1; l <= 8; l += 3) {
      std::set<Word> reversed;
      for (auto w : language(s, l).words) {
        std::reverse(w.begin(), w.end());
        reversed.insert(w);
      }
      CHECK(language(r, l).words == reversed);
    }
  }
  CHECK(cases == 1000);
}

TEST_CASE("same language") {
  CHECK(same_language(kPhi, sub("0->10;1->0"), 12));
  const Letter swap[] = {1, 0};
  CHECK_FALSE(same_language(kPhi, permute_letters(kPhi, swap), 5));
  CHECK_FALSE(same_language(kEta, kZeta, 8));
  CHECK_THROWS_AS(same_language(kPhi, kEta, 3), Error);
}

TEST_CASE("substitutions with a given matrix") {
  CHECK(substitutions_with_matrix(IntMatrix{{0, 1, 0}, {1, 0, 1}, {1, 1, 0}}).size() == 4);
  CHECK(substitutions_with_matrix(IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 2, 0}}).size() == 3);
  const auto two = substitutions_with_matrix(IntMatrix{{1, 1}, {1, 0}});
  CHECK(two == std::vector<Substitution>{kPhi, sub("0->10;1->0")});
  CHECK_THROWS_AS(substitutions_with_matrix(IntMatrix{{1, 1}, {0, 0}}), Error);
  CHECK_THROWS_AS(substitutions_with_matrix(IntMatrix{{1, -1}, {1, 0}}), Error);

  // Count is the product of row multinomials; every member has matrix m.
  std::mt19937_64 rng(0x5b5b'0002ULL);
  std::uniform_int_distribution<std::int64_t> entry(0, 2);
  auto factorial = [](std::int64_t n) {
    std::int64_t f = 1;
    for (std::int64_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = 2 + static_cast<std::size_t>(i % 2);
    IntMatrix m(k);
    std::int64_t expected = 1;
    for (std::size_t a = 0; a < k; ++a) {
      std::int64_t total = 0;
      for (std::size_t b = 0; b < k; ++b) total += m(a, b) = entry(rng);
      if (total == 0) m(a, a) = total = 1;
      expected *= factorial(total);
      for (std::size_t b = 0; b < k; ++b) expected /= factorial(m(a, b));
    }
    const auto subs = substitutions_with_matrix(m);
    CHECK(static_cast<std::int64_t>(subs.size()) == expected);
    CHECK(std::is_sorted(subs.begin(), subs.end()));
    for (const auto& s : subs) CHECK(incidence_matrix(s) == m);
  }
}

TEST_CASE("letter-code certificates") {
  const Letter pi[] = {1, 0, 0};
  const auto cert = letter_code_certificate(kEta, pi, kPhi, 4);
  CHECK(cert.intertwines);
  CHECK(cert.verdict == CodeVerdict::Conjugate);
  CHECK(cert.window == std::size_t{1});

  const auto two = nblock_substitution(kPhi, 2, 0);
  std::vector<Letter> first;
  for (Letter c = 0; c < two.code.size(); ++c) first.push_back(two.code.first_letter(c));
  const auto block = letter_code_certificate(two.substitution, first, kPhi, 3);
  CHECK(block.verdict == CodeVerdict::Conjugate);

  const Letter id[] = {0, 1};
  const auto ident = letter_code_certificate(kPhi, id, kPhi, 2);
  CHECK(ident.verdict == CodeVerdict::Conjugate);
  CHECK(ident.window == std::size_t{0});

  const Letter wrong[] = {0, 1, 1};
  CHECK(letter_code_certificate(kEta, wrong, kPhi, 4).verdict == CodeVerdict::NotIntertwining);

  // Collapsing onto one letter breaks intertwining through image lengths.
  const Letter collapse[] = {0, 0};
  CHECK_FALSE(letter_code_certificate(kPhi, collapse, sub("0->00"), 3).intertwines);

  const Letter short_map[] = {0, 1};
  CHECK_THROWS_AS(letter_code_certificate(kEta, short_map, kPhi, 4), Error);
  const Letter out_of_range[] = {0, 2, 0};
  CHECK_THROWS_AS(letter_code_certificate(kEta, out_of_range, kPhi, 4), Error);
}

TEST_CASE("intertwining maps carry languages into the target language") {
  std::mt19937_64 rng(0x1e77'e2ULL);
  int cases = 0;
  for (int i = 0; cases < 1000 && i < 200000; ++i) {
    const Substitution s(oracle::random_images(rng, 3, 3));
    std::vector<Letter> pi(3);
    for (auto& x : pi) x = static_cast<Letter>(rng() % 2);
    // Build the unique target t with pi s = t pi when pi is consistent.
    std::vector<std::optional<Word>> images(2);
    bool consistent = true;
    for (Letter a = 0; a < 3 && consistent; ++a) {
      Word img;
      for (Letter b : s.image(a)) img.push_back(pi[b]);
      if (images[pi[a]] && *images[pi[a]] != img) consistent = false;
      images[pi[a]] = img;
    }
    if (!consistent || !images[0] || !images[1] || !is_primitive(s)) continue;
    const Substitution t({*images[0], *images[1]});
    if (!is_primitive(t)) continue;
    ++cases;
    CHECK(letter_code_certificate(s, pi, t, 1).intertwines);
    for (std::size_t l = 1; l <= 8; l += 7)
      for (const auto& w : language(s, l).words) {
        Word image;
        for (Letter x : w) image.push_back(pi[x]);
        CHECK(language(t, l).contains(image));
      }
  }
  CHECK(cases == 1000);
}

TEST_CASE("three-symbol classification") {
  const auto report = classify_three_symbol();
  CHECK(report.matrices.size() == 3);
  std::map<std::string, Verdict> verdicts;
  int conjugate_injective = 0;
  for (const auto& c : report.candidates) {
    verdicts[format_substitution(c.substitution, Notation::Alpha)] = c.verdict;
    if (c.verdict == Verdict::Conjugate && c.injective) ++conjugate_injective;
  }
  CHECK(report.candidates.size() == 11);
  CHECK(verdicts.at("a->b;b->ca;c->ba") == Verdict::Conjugate);
  CHECK(verdicts.at("a->b;b->ac;c->ab") == Verdict::Conjugate);
  CHECK(verdicts.at("a->b;b->c;c->bab") == Verdict::ExcludedTwoPoint);
  CHECK(verdicts.at("a->b;b->ac;c->ca") == Verdict::ExcludedZTriple);
  CHECK(verdicts.at("a->b;b->ca;c->ab") == Verdict::ExcludedZTriple);
  CHECK(conjugate_injective == 2);
  for (const auto& c : report.candidates) CHECK(c.verdict != Verdict::Inconclusive);
}
