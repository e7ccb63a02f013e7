#include <doctest.h>

#include "fibconj/error.hpp"
#include "fibconj/fibonacci.hpp"
#include "fibconj/grammar.hpp"
#include "fibconj/nblock.hpp"
#include "fibconj/reshape.hpp"
#include "helpers.hpp"

using namespace fibconj;
using testing::digits;
using testing::sub;
using testing::word;

namespace {

const Substitution kPhi4 = sub("1->12;2->3;3->45;4->12;5->3");

std::string rules(const Substitution& s) { return format_rules(s, Notation::OneBased); }

ReshapeSpec spec(std::vector<std::size_t> cuts0, std::vector<std::size_t> cuts1) {
  return {word("123", 1), word("45", 1), std::move(cuts0), std::move(cuts1)};
}

}  // namespace

TEST_CASE("reshaping the 4-block Fibonacci substitution") {
  const auto eta = partition_reshape(kPhi4, spec({2, 2, 1}, {1, 2}));
  CHECK(rules(eta) == "1->12, 2->34, 3->5, 4->1, 5->23");
  CHECK(has_full_rank(eta));
  CHECK(is_injective(eta));
  for (std::size_t l = 1; l <= 8; ++l) CHECK(language(eta, l) == language(kPhi4, l));

  const auto zeta = partition_reshape(kPhi4, spec({2, 1, 2}, {1, 2}));
  CHECK(rules(zeta) == "1->12, 2->3, 3->45, 4->1, 5->23");
  for (std::size_t l = 1; l <= 8; ++l) CHECK(language(zeta, l) == language(kPhi4, l));

  // Cuts equal to the image lengths reproduce the substitution.
  CHECK(partition_reshape(kPhi4, spec({2, 1, 2}, {2, 1})) == kPhi4);
}

TEST_CASE("reshape validation") {
  auto kind = [](const ReshapeSpec& s) {
    try {
      partition_reshape(kPhi4, s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  CHECK(kind(spec({2, 2}, {1, 2})) == ErrorKind::InvalidArgument);
  CHECK(kind(spec({2, 2, 2}, {1, 2})) == ErrorKind::InvalidArgument);
  CHECK(kind(spec({3, 2, 0}, {1, 2})) == ErrorKind::InvalidArgument);
  CHECK(kind({word("123", 1), word("34", 1), {2, 2, 1}, {1, 2}}) == ErrorKind::InvalidArgument);
  CHECK(kind({word("12", 1), word("45", 1), {2, 1}, {1, 2}}) == ErrorKind::InvalidArgument);
  CHECK(kind({word("123", 1), word("46", 1), {2, 2, 1}, {1, 2}}) == ErrorKind::AlphabetMismatch);
}

TEST_CASE("rotate_word") {
  CHECK(digits(rotate_word(word("01001"))) == "10010");
  CHECK(rotate_word(word("1")) == word("1"));
  CHECK(digits(rotate_word(word("01"))) == "10");
  CHECK_THROWS_AS(rotate_word(Word{}), Error);
}

TEST_CASE("eta family") {
  const auto eta7 = eta_family(7);
  CHECK(format_rules(eta7.substitution, Notation::OneBased) ==
        "1->1,2, 2->3,4, 3->5,6,7, 4->8,9, 5->10, 6->11, 7->12, 8->13, 9->1, 10->2,3, 11->4,5, 12->6, 13->7,8");
  CHECK(digits(eta7.length_pattern) == "10010");
  for (Letter a = 0; a < 13; ++a) {
    const auto expected = a < 3 ? Species::Small : (a < 8 ? Species::Medium : Species::Large);
    CHECK(eta7.species[a] == expected);
  }
  CHECK(eta7.medium_head == 3);
  CHECK(eta7.large_head == 8);

  CHECK(format_rules(eta_family(5).substitution, Notation::OneBased) == "1->12, 2->34, 3->5, 4->1, 5->23");
  CHECK_THROWS_AS(eta_family(4), Error);
  CHECK_THROWS_AS(eta_family(7, word("11010")), Error);
  CHECK_THROWS_AS(eta_family(7, word("1001")), Error);
  CHECK_THROWS_AS(eta_family(7, word("10011")), Error);
}

TEST_CASE("eta family structure") {
  for (unsigned n = 5; n <= 14; ++n) {
    const auto m = eta_family(n);
    const auto& s = m.substitution;
    const std::size_t total = fib(n), f1 = fib(n - 1);
    REQUIRE(s.alphabet_size() == total);
    // Images of 1..F_{n-1} tile 1..F_n and images of the rest tile 1..F_{n-1}.
    Word low, high;
    for (Letter a = 0; a < total; ++a) {
      auto& into = a < f1 ? low : high;
      into.insert(into.end(), s.image(a).begin(), s.image(a).end());
    }
    for (std::size_t i = 0; i < low.size(); ++i) CHECK(low[i] == i);
    for (std::size_t i = 0; i < high.size(); ++i) CHECK(high[i] == i);
    CHECK(low.size() == total);
    CHECK(high.size() == f1);
    CHECK(is_injective(s));
    CHECK(is_primitive(s));
    CHECK(has_full_rank(s));
  }
}

TEST_CASE("eta is a reshape of the (F_n - 1)-block Fibonacci substitution") {
  for (unsigned n = 5; n <= 7; ++n) {
    const auto eta = eta_family(n).substitution;
    const auto block = nblock_substitution(fibonacci_substitution(), fib(n) - 1, 0).substitution;
    for (std::size_t l = 1; l <= 6; ++l) CHECK(language(eta, l) == language(block, l));
  }
}

TEST_CASE("first letter map") {
  const auto f = first_letter_map(eta_family(7).substitution, 2);
  CHECK(f[12] == 11);
  CHECK(f[7] == 6);
  CHECK(first_letter_map(fibonacci_substitution(), 1)[0] == 0);
}

TEST_CASE("eta certificates") {
  for (unsigned n = 5; n <= 14; ++n) {
    const auto cert = certify_eta(n);
    CHECK(cert.passed());
    CHECK(cert.primitive);
    CHECK(cert.full_rank);
    CHECK(cert.first_letter_decreasing);
    CHECK(cert.small_growth);
    CHECK(cert.reaches_small);
    CHECK(cert.reaches_one);
    CHECK(cert.max_steps_to_one <= 2 * fib(n));
  }
}
