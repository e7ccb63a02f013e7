#include <doctest.h>

#include "fibconj/error.hpp"
#include "fibconj/fibonacci.hpp"
#include "fibconj/grammar.hpp"
#include "fibconj/nblock.hpp"
#include "helpers.hpp"

using namespace fibconj;
using testing::digits;
using testing::sub;
using testing::word;

namespace {

const Substitution kPhi = sub("0->01;1->0");

std::string rules(const Substitution& s) { return format_rules(s, Notation::OneBased); }

}  // namespace

TEST_CASE("2-block and 4-block presentations of Fibonacci") {
  const auto two = nblock_substitution(kPhi, 2, 0);
  CHECK(rules(two.substitution) == "1->12, 2->3, 3->12");
  CHECK(two.code.blocks() == std::vector<Word>{word("01"), word("10"), word("00")});
  CHECK(two.seed == 0);

  const auto four = nblock_substitution(kPhi, 4, 0);
  CHECK(rules(four.substitution) == "1->12, 2->3, 3->45, 4->12, 5->3");
  CHECK(rules(power(four.substitution, 2)) == "1->123, 2->45, 3->123, 4->123, 5->45");

  CHECK(nblock_substitution(kPhi, 1, 0).substitution == kPhi);
}

TEST_CASE("block codes") {
  const auto two = nblock_substitution(kPhi, 2, 0);
  CHECK(digits(block_encode(word("010010"), two.code), 1) == "12312");
  CHECK(digits(project_first(word("12312", 1), two.code)) == "01001");
  CHECK(project_first(Word{}, two.code).empty());
  CHECK(block_encode(word("00"), two.code) == Word{2});
  CHECK(two.code.first_letter(2) == 0);
  CHECK(two.code.code_of(word("11")) == std::nullopt);
  CHECK_THROWS_AS(two.code.block(3), Error);

  try {
    block_encode(word("0110"), two.code);
    FAIL("expected not-in-language");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInLanguage);
    CHECK(std::string(e.what()).find("offset 1") != std::string::npos);
  }

  const auto five = decomposition_blocks(7).code;
  CHECK(block_encode(singular_word(4), five) == Word{5});
  CHECK(digits(project_first(word("6123451234512", 1), five)) == "0010010100101");
}

TEST_CASE("key equation") {
  CHECK(verify_key_equation(kPhi, 1, 50));
  CHECK(verify_key_equation(kPhi, 2, 100));
  CHECK(verify_key_equation(kPhi, 8, 1000));
  CHECK(verify_key_equation(sub("0->001;1->10"), 3, 200));
  CHECK_THROWS_AS(verify_key_equation(sub("0->1;1->0"), 2, 10), Error);
}

TEST_CASE("block substitution agrees with an independent construction") {
  // theta_N([x_i .. x_{i+N-1}]) = the |theta(x_i)| windows of theta(x) starting
  // inside theta(x_i), read off a long fixed-point prefix.
  for (const char* text : {"0->01;1->0", "0->012;1->02;2->1", "0->001;1->10"}) {
    const auto s = sub(text);
    const auto seed = *default_seed(s);
    const auto x = fixed_point_prefix(s, seed, 4000);
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto ps = nblock_substitution(s, n, seed);
      // Coding by first occurrence in x.
      const auto order = factors_in_order(x, n);
      REQUIRE(order == ps.code.blocks());
      const Word sx = substitute(s, x);
      std::size_t pos = 0;
      for (std::size_t i = 0; i + n <= x.size() && pos + s.image(x[i]).size() + n <= sx.size(); ++i) {
        const Letter a = *ps.code.code_of(std::span(x).subspan(i, n));
        Word expected;
        for (std::size_t j = 0; j < s.image(x[i]).size(); ++j)
          expected.push_back(*ps.code.code_of(std::span(sx).subspan(pos + j, n)));
        CHECK(ps.substitution.image(a) == expected);
        pos += s.image(x[i]).size();
      }
    }
  }
}
