#include <doctest.h>

#include <random>

#include "fibconj/error.hpp"
#include "fibconj/fibonacci.hpp"
#include "fibconj/quad_int.hpp"
#include "helpers.hpp"

using namespace fibconj;
using testing::digits;
using testing::sub;
using testing::word;

namespace {

const Substitution kPhi = sub("0->01;1->0");

std::mt19937_64 rng(0x6f1b'0dd5ULL);

}  // namespace

TEST_CASE("Fibonacci numbers and word") {
  CHECK(fib(1) == 1);
  CHECK(fib(5) == 5);
  CHECK(fib(12) == 144);
  CHECK(fib(92) == 7540113804746346429ULL);
  CHECK_THROWS_AS(fib(0), Error);
  CHECK_THROWS_AS(fib(93), Error);
  CHECK(digits(fibonacci_word(10)) == "0100101001");
  CHECK(fibonacci_word(1) == Word{0});
  CHECK(fibonacci_word(5000) == oracle::long_prefix(kPhi.images(), 0, 5000));
  CHECK(reverse_fibonacci_substitution() == sub("0->10;1->0"));
}

TEST_CASE("exact floors in Z[gamma]") {
  CHECK(floor_mul(QuadInt::golden(), 2) == 3);
  CHECK(floor_mul(QuadInt::golden(), 0) == 0);
  CHECK(floor_mul(QuadInt::gamma(), 5) == 3);
  for (long long n = -3000; n <= 3000; ++n) CHECK(floor_mul(QuadInt::golden(), n) == oracle::floor_n_phi(n));
  CHECK(QuadInt(0, 1) * QuadInt(0, 1) == QuadInt(1, -1));
  CHECK(QuadInt::golden() * QuadInt::gamma() == QuadInt(1));
  CHECK(QuadInt(-1, 2).sign() == 1);
  CHECK(QuadInt(1, -2).sign() == -1);
  CHECK(QuadInt(0, 0).sign() == 0);
  CHECK(QuadInt(3, -5).floor() == -1);
  CHECK((QuadInt(7, 3).frac() == QuadInt(0, 3) - QuadInt(1)));
}

TEST_CASE("QuadInt sign and floor agree with high-precision floats") {
  std::uniform_int_distribution<std::int64_t> coeff(-1'000'000'000, 1'000'000'000);
  mpf_class sqrt5(5, 256);
  sqrt5 = sqrt(sqrt5);
  const mpf_class gamma = (sqrt5 - 1) / 2;
  for (int i = 0; i < 2000; ++i) {
    const QuadInt x(coeff(rng), coeff(rng));
    const mpf_class value = mpf_class(static_cast<long>(x.p()), 256) + static_cast<long>(x.q()) * gamma;
    CHECK(x.sign() == sgn(value));
    CHECK(x.floor() == mpf_class(floor(value)).get_si());
  }
}

TEST_CASE("rotation coding") {
  const auto at_gamma = rotation_code(QuadInt::gamma(), 0, 0);
  CHECK(at_gamma.ambiguous_at == std::vector<std::int64_t>{0});
  CHECK(at_gamma.left != at_gamma.right);

  const auto twice = rotation_code(QuadInt(-1, 2), -5, 5);
  // An orbit point k gamma meets 0 at n = -k and gamma at n = 1 - k.
  CHECK(twice.ambiguous_at == std::vector<std::int64_t>{-2, -1});

  const auto three = rotation_code(QuadInt(-1, 3), 1, 20);
  CHECK_FALSE(three.ambiguous());
  const auto l5 = language(kPhi, 5);
  for (std::size_t i = 0; i + 5 <= three.left.size(); ++i) CHECK(l5.contains(std::span(three.left).subspan(i, 5)));

  const auto zero = rotation_code(QuadInt(0), 2, 200);
  CHECK(zero.ambiguous_at.empty());
  CHECK(zero.right == oracle::rotation_bits(0, 0, 2, 201));

  CHECK_THROWS_AS(rotation_code(QuadInt(0), 3, 2), Error);
}

TEST_CASE("rotation coding agrees with float oracle and is shift-equivariant") {
  std::uniform_int_distribution<std::int64_t> coeff(-50, 50);
  for (int i = 0; i < 200; ++i) {
    const auto p = coeff(rng), q = coeff(rng), from = coeff(rng);
    const auto code = rotation_code(QuadInt(p, q), from, from + 60);
    const auto expected = oracle::rotation_bits(p, q, from, from + 61);
    for (std::size_t j = 0; j < expected.size(); ++j) {
      const auto n = from + static_cast<std::int64_t>(j);
      const bool hit = std::find(code.ambiguous_at.begin(), code.ambiguous_at.end(), n) != code.ambiguous_at.end();
      if (!hit) CHECK(code.right[j] == expected[j]);
    }
    // Coding z + gamma from n equals coding z from n + 1.
    const auto shifted = rotation_code(QuadInt(p, q + 1), from, from + 59);
    CHECK(shifted.right == Word(code.right.begin() + 1, code.right.end()));
    CHECK(shifted.left == Word(code.left.begin() + 1, code.left.end()));
  }
}

TEST_CASE("singular words") {
  CHECK(digits(singular_word(1)) == "1");
  CHECK(digits(singular_word(2)) == "00");
  CHECK(digits(singular_word(4)) == "00100");
  CHECK(digits(singular_word(5)) == "10100101");
  CHECK_THROWS_AS(singular_word(0), Error);
  // w_n is the one factor of length F_{n+1} whose Parikh vector differs from
  // all the others.
  const auto f = fibonacci_word(20000);
  for (unsigned n = 1; n <= 12; ++n) {
    const auto w = singular_word(n);
    REQUIRE(w.size() == fib(n + 1));
    const auto facs = oracle::factors(f, w.size());
    CHECK(facs.contains(w));
    std::map<std::vector<std::int64_t>, int> counts;
    for (const auto& u : facs) ++counts[parikh_vector(u, 2)];
    CHECK(counts.size() == 2);
    CHECK(counts[parikh_vector(w, 2)] == 1);
  }
}

TEST_CASE("return words") {
  const auto r4 = return_words(4);
  CHECK(digits(r4.u) == "0010010100101");
  CHECK(digits(r4.v) == "00100101");
  CHECK(r4.u.size() == 13);
  CHECK(r4.v.size() == 8);
  const auto r2 = return_words(2);
  CHECK(digits(r2.u) == "00101");
  CHECK(digits(r2.v) == "001");
  CHECK_THROWS_AS(return_words(1), Error);

  const auto f = fibonacci_word(30000);
  for (unsigned n = 2; n <= 9; ++n) {
    const auto w = singular_word(n);
    const auto r = return_words(n);
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i + w.size() <= f.size(); ++i)
      if (std::equal(w.begin(), w.end(), f.begin() + static_cast<std::ptrdiff_t>(i))) at.push_back(i);
    REQUIRE(at.size() > 3);
    for (std::size_t k = 0; k + 1 < at.size(); ++k) {
      const Word gap(f.begin() + static_cast<std::ptrdiff_t>(at[k]), f.begin() + static_cast<std::ptrdiff_t>(at[k + 1]));
      CHECK((gap == r.u || gap == r.v));
    }
  }
}

TEST_CASE("decomposition blocks") {
  const auto b7 = decomposition_blocks(7);
  CHECK(digits(b7.b0, 1) == "6123451234512");
  CHECK(digits(b7.b1, 1) == "61234512");
  const auto b5 = decomposition_blocks(5);
  CHECK(b5.b0.size() == 5);
  CHECK(b5.b1.size() == 3);
  for (unsigned n = 5; n <= 10; ++n) {
    const auto b = decomposition_blocks(n);
    CHECK(b.b0.size() == fib(n));
    CHECK(b.b1.size() == fib(n - 1));
    CHECK(b.code.block_length() == fib(n - 2));
  }
  CHECK_THROWS_AS(decomposition_blocks(4), Error);
}

TEST_CASE("parsing concatenations of blocks") {
  const auto b = decomposition_blocks(7);
  Word w = b.b0;
  w.insert(w.end(), b.b1.begin(), b.b1.end());
  w.insert(w.end(), b.b0.begin(), b.b0.end());
  const auto parses = parse_concatenation(w, b.b0, b.b1);
  const auto exact = std::find_if(parses.begin(), parses.end(),
                                  [](const BlockParse& p) { return p.head == 0 && p.tail == 0; });
  REQUIRE(exact != parses.end());
  CHECK(digits(exact->induced) == "010");
  CHECK(exact->cuts == std::vector<std::size_t>{0, 13, 21});

  const auto coded = block_encode(fibonacci_word(200 + 4), b.code);
  const auto l = language(kPhi, 12);
  for (const auto& p : parse_concatenation(coded, b.b0, b.b1)) {
    CHECK(p.head < b.b0.size());
    CHECK(p.tail < b.b0.size());
    if (p.induced.size() >= 13) CHECK(l.contains(std::span(p.induced).first(12)));
  }

  try {
    parse_concatenation(Word(50, 0), b.b0, b.b1);
    FAIL("expected not-decomposable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDecomposable);
  }
}

TEST_CASE("zero doubling") {
  CHECK(digits(double_zeros(word("01001"))) == "00100001");
  CHECK(double_zeros(Word{}).empty());
  CHECK(double_zeros(word("1")) == word("1"));
  CHECK(doubled_letter(1) == 0);
  CHECK(doubled_letter(2) == 0);
  CHECK(doubled_letter(3) == 1);
  CHECK_THROWS_AS(doubled_letter(0), Error);
  const auto d = double_zeros(fibonacci_word(3000));
  for (std::int64_t n = 1; n <= 4000; ++n) {
    const long long expected = oracle::floor_n_phi(n + 2) - oracle::floor_n_phi(n) - oracle::floor_n_phi(2);
    CHECK(doubled_letter(n) == expected);
    CHECK(d[static_cast<std::size_t>(n - 1)] == static_cast<Letter>(expected));
  }
}

TEST_CASE("fourth powers") {
  CHECK(find_fourth_powers(fibonacci_word(100000), 25).empty());
  const auto ab = find_fourth_powers(word("01010101"), 4);
  CHECK(std::find(ab.begin(), ab.end(), Repetition{0, 2}) != ab.end());
  const auto doubled = double_zeros(fibonacci_word(13000));
  REQUIRE(doubled.size() >= 20000);
  const auto hits = find_fourth_powers(std::span(doubled).first(20000), 25);
  CHECK_FALSE(hits.empty());
  for (const auto& r : hits) CHECK(r.period == 1);

  std::uniform_int_distribution<int> period(1, 4), bit(0, 1);
  for (int i = 0; i < 300; ++i) {
    // Random words built from short repeated chunks so repetitions occur.
    Word w;
    while (w.size() < 120) {
      Word chunk(static_cast<std::size_t>(period(rng)));
      for (auto& x : chunk) x = static_cast<Letter>(bit(rng));
      for (int k = period(rng); k > 0; --k) w.insert(w.end(), chunk.begin(), chunk.end());
    }
    std::vector<std::pair<std::size_t, std::size_t>> got;
    for (const auto& r : find_fourth_powers(w, 10)) got.emplace_back(r.offset, r.period);
    CHECK(got == oracle::fourth_powers(w, 10));
  }
}
