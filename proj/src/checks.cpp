#include "fibconj/checks.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "fibconj/conjugacy.hpp"
#include "fibconj/error.hpp"
#include "fibconj/fibonacci.hpp"
#include "fibconj/grammar.hpp"
#include "fibconj/matrices.hpp"
#include "fibconj/nblock.hpp"
#include "fibconj/reshape.hpp"

namespace fibconj {

namespace {

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return failed_ == 0; }
  std::string detail() const {
    std::ostringstream out;
    if (passed()) {
      out << total_ << " checks";
      for (const auto& n : notes_) out << "; " << n;
    } else {
      out << failed_ << "/" << total_ << " failed: ";
      for (std::size_t i = 0; i < failures_.size(); ++i) out << (i ? "; " : "") << failures_[i];
    }
    return out.str();
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::vector<std::string> failures_, notes_;
};

Substitution parse(const char* text) { return parse_substitution(text).substitution; }

std::string one_based(const Substitution& s) { return format_rules(s, Notation::OneBased); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Word interval(std::size_t first, std::size_t last) {
  Word w;
  for (std::size_t x = first; x <= last; ++x) w.push_back(static_cast<Letter>(x - 1));
  return w;
}

void nblock_tables(Tally& t) {
  const auto phi = fibonacci_substitution();
  const auto p2 = nblock_substitution(phi, 2, 0).substitution;
  const auto p4 = nblock_substitution(phi, 4, 0).substitution;
  t.expect(one_based(p2) == "1->12, 2->3, 3->12", "phi_2 = " + one_based(p2));
  t.expect(one_based(p4) == "1->12, 2->3, 3->45, 4->12, 5->3", "phi_4 = " + one_based(p4));
  const auto sq = power(p4, 2);
  t.expect(one_based(sq) == "1->123, 2->45, 3->123, 4->123, 5->45", "phi_4^2 = " + one_based(sq));
}

void reshaping(Tally& t) {
  const auto p4 = nblock_substitution(fibonacci_substitution(), 4, 0).substitution;
  const auto r = partition_reshape(p4, {{0, 1, 2}, {3, 4}, {2, 2, 1}, {1, 2}});
  t.expect(one_based(r) == "1->12, 2->34, 3->5, 4->1, 5->23", "reshaped = " + one_based(r));
  t.expect(same_language(r, p4, 8), "language differs from phi_4 below depth 8");
  t.expect(has_full_rank(r), "reshaped matrix is singular");
}

void eta_family_check(Tally& t) {
  const auto eta7 = eta_family(7).substitution;
  const std::string expected =
      "1->1,2, 2->3,4, 3->5,6,7, 4->8,9, 5->10, 6->11, 7->12, 8->13, 9->1, 10->2,3, 11->4,5, 12->6, 13->7,8";
  t.expect(one_based(eta7) == expected, "eta_7 = " + one_based(eta7));
  const auto t0 = std::chrono::steady_clock::now();
  for (unsigned n = 5; n <= 14; ++n) {
    const auto cert = inspect_eta(n);
    std::string why;
    for (const auto& f : cert.failures) why += " [" + f + "]";
    t.expect(cert.passed(), "eta_" + std::to_string(n) + why);
  }
  const double elapsed = seconds_since(t0);
  t.expect(elapsed < kEtaTimeLimit, "certification took " + std::to_string(elapsed) + " s");
}

void interval_equation(Tally& t) {
  const auto phi = fibonacci_substitution();
  for (unsigned n = 5; n <= 12; ++n) {
    const auto s = nblock_substitution(phi, fib(n) - 1, 0).substitution;
    const std::size_t f = fib(n), f1 = fib(n - 1);
    t.expect(s.alphabet_size() == f, "n=" + std::to_string(n) + ": alphabet size");
    t.expect(substitute(s, interval(1, f1)) == interval(1, f), "n=" + std::to_string(n) + ": image of 1..F_{n-1}");
    t.expect(substitute(s, interval(f1 + 1, f)) == interval(1, f1), "n=" + std::to_string(n) + ": image of F_{n-1}+1..F_n");
  }
}

void decomposition(Tally& t) {
  auto bits = [](const Word& w) { return format_word(w, Notation::ZeroBased, 2); };
  t.expect(bits(singular_word(4)) == "00100", "w_4 = " + bits(singular_word(4)));
  const auto rw = return_words(4);
  t.expect(bits(rw.u) == "0010010100101" && bits(rw.v) == "00100101", "return words " + bits(rw.u) + ", " + bits(rw.v));
  const auto db7 = decomposition_blocks(7);
  const auto b0 = format_word(db7.b0, Notation::OneBased, db7.code.size());
  const auto b1 = format_word(db7.b1, Notation::OneBased, db7.code.size());
  t.expect(b0 == "6123451234512" && b1 == "61234512", "blocks " + b0 + ", " + b1);

  const auto phi = fibonacci_substitution();
  for (unsigned n : {5U, 6U, 7U}) {
    const auto db = decomposition_blocks(n);
    const auto coded = block_encode(fixed_point_prefix(phi, 0, 4000 + db.code.block_length()), db.code);
    std::size_t parses = 0;
    for (std::size_t offset : {0, 1, 7, 100, 555, 1234, 2999}) {
      const std::span<const Letter> factor(coded.data() + offset, 500);
      const auto all = parse_concatenation(factor, db.b0, db.b1);
      parses += all.size();
      const std::string where = "n=" + std::to_string(n) + " offset " + std::to_string(offset);
      // B1 is a prefix of B0, so a trailing B1 may also be the tail slack of
      // a B0: only the last induced letter can depend on the window end.
      bool some_full = false;
      for (const auto& p : all) {
        some_full = some_full || language(phi, p.induced.size()).contains(p.induced);
        const std::span<const Letter> settled(p.induced.data(), p.induced.size() - 1);
        t.expect(language(phi, settled.size()).contains(settled), where + ": induced word outside L_phi");
      }
      t.expect(some_full, where + ": no parse with induced word in L_phi");
    }
    t.note("n=" + std::to_string(n) + ": " + std::to_string(parses) + " parses");
  }
}

void matrix_classes(Tally& t) {
  const auto classes = permutation_classes(enumerate_golden(3, 2));
  const std::set<IntMatrix> expected{IntMatrix{{0, 1, 0}, {1, 0, 1}, {1, 1, 0}},
                                     IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 2, 0}},
                                     IntMatrix{{0, 1, 0}, {1, 0, 1}, {1, 0, 1}}};
  t.expect(std::set<IntMatrix>(classes.begin(), classes.end()) == expected && classes.size() == 3,
           "F_3 classes differ");
  for (const auto& m : enumerate_golden(3, 2)) {
    const auto c = golden_pf_check(m);
    t.expect(c.second == c.trace - 2 && c.det == 1 - c.trace, m.to_string() + ": F, D relation");
    t.expect(c.trace >= 0 && c.trace <= 2, m.to_string() + ": trace");
  }
  const auto two = enumerate_golden(2, 2);
  const IntMatrix fib_matrix{{1, 1}, {1, 0}};
  t.expect(!two.empty() && std::all_of(two.begin(), two.end(),
                                       [&](const IntMatrix& m) { return permutation_conjugate(m, fib_matrix); }),
           "F_2 is not the single class of [[1,1],[1,0]]");
  t.expect(permutation_classes(two).size() == 1, "F_2 has more than one class");
}

void three_symbols(Tally& t) {
  const auto report = classify_three_symbol();
  auto verdict_of = [&](const char* text) -> const CandidateVerdict* {
    const auto s = parse(text);
    for (const auto& c : report.candidates)
      if (c.substitution == s) return &c;
    return nullptr;
  };
  auto expect_verdict = [&](const char* text, Verdict v, std::optional<bool> injective) {
    const auto* c = verdict_of(text);
    if (!c) return t.expect(false, std::string(text) + " missing from the candidate list");
    t.expect(c->verdict == v, std::string(text) + " is " + to_string(c->verdict));
    if (injective) t.expect(c->injective == *injective, std::string(text) + " injectivity");
  };
  expect_verdict("a->b;b->ca;c->ba", Verdict::Conjugate, true);
  expect_verdict("a->b;b->ac;c->ab", Verdict::Conjugate, true);
  expect_verdict("a->b;b->ca;c->ab", Verdict::ExcludedZTriple, std::nullopt);
  expect_verdict("a->b;b->c;c->abb", Verdict::ExcludedZTriple, std::nullopt);
  expect_verdict("a->b;b->ac;c->ca", Verdict::ExcludedZTriple, std::nullopt);
  expect_verdict("a->b;b->c;c->bab", Verdict::ExcludedTwoPoint, std::nullopt);
  expect_verdict("a->b;b->ac;c->ac", Verdict::Conjugate, false);
  expect_verdict("a->b;b->ca;c->ca", Verdict::Conjugate, false);

  std::size_t injective_conjugate = 0;
  for (const auto& c : report.candidates) {
    t.expect(c.verdict != Verdict::Inconclusive, format_rules(c.substitution, Notation::Alpha) + " inconclusive");
    if (c.verdict == Verdict::Conjugate && c.injective) ++injective_conjugate;
  }
  t.expect(injective_conjugate == 2, std::to_string(injective_conjugate) + " injective conjugate candidates");
  t.note(std::to_string(report.candidates.size()) + " candidates over " + std::to_string(report.matrices.size()) +
         " matrices");
}

void key_equation(Tally& t) {
  const auto phi = fibonacci_substitution();
  for (std::size_t n = 1; n <= 8; ++n)
    t.expect(verify_key_equation(phi, n, 1000), "key equation fails at N=" + std::to_string(n));
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto presentation = nblock_substitution(phi, n, 0);
    for (std::size_t l = 1; l <= 8; ++l) {
      std::set<Word> coded;
      for (const auto& w : language(phi, n + l - 1).words) coded.insert(block_encode(w, presentation.code));
      t.expect(coded == language(presentation.substitution, l).words,
               "N=" + std::to_string(n) + " L=" + std::to_string(l) + ": block language differs");
    }
  }
}

void zero_doubling(Tally& t) {
  const auto phi = fibonacci_substitution();
  const auto doubled_prefix = double_zeros(fixed_point_prefix(phi, 0, 10000));
  std::size_t mismatches = 0;
  for (std::int64_t n = 1; n <= 10000; ++n)
    if (doubled_letter(n) != static_cast<int>(doubled_prefix[static_cast<std::size_t>(n - 1)])) ++mismatches;
  t.expect(mismatches == 0, std::to_string(mismatches) + " letters differ from the floor formula");

  const auto t0 = std::chrono::steady_clock::now();
  Word doubled = double_zeros(fixed_point_prefix(phi, 0, 13000));
  doubled.resize(20000);
  const auto reps = find_fourth_powers(doubled, 25);
  bool only_0000 = !reps.empty();
  for (const auto& r : reps) only_0000 = only_0000 && r.period == 1 && doubled[r.offset] == 0;
  t.expect(only_0000, "doubled word has a fourth power other than 0000");
  const auto plain = find_fourth_powers(fixed_point_prefix(phi, 0, 100000), 25);
  t.expect(plain.empty(), "Fibonacci prefix has " + std::to_string(plain.size()) + " fourth powers");
  const double elapsed = seconds_since(t0);
  t.expect(elapsed < kFourthPowerTimeLimit, "fourth-power scan took " + std::to_string(elapsed) + " s");
  t.note(std::to_string(reps.size()) + " occurrences of 0000");
}

void cyclic(Tally& t) {
  const auto phi = fibonacci_substitution();
  const auto pairs = cyclic_pairs(phi);
  std::vector<std::pair<Letter, Letter>> got;
  for (const auto& p : pairs) got.emplace_back(p.b, p.a);
  t.expect(got == std::vector<std::pair<Letter, Letter>>{{0, 0}, {1, 0}}, "cyclic pairs of phi");

  const auto eta = parse("1->12;2->34;3->5;4->1;5->23");
  std::vector<std::pair<Letter, Letter>> eta_got;
  for (const auto& p : cyclic_pairs(eta)) {
    eta_got.emplace_back(p.b, p.a);
    t.expect(p.m == 6, "eta pair power " + std::to_string(p.m));
  }
  t.expect(eta_got == std::vector<std::pair<Letter, Letter>>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 0}},
           "cyclic pairs of eta");
  t.expect(z_triples(phi).empty(), "phi has a Z-triple");
  t.expect(z_triples(eta).empty(), "eta has a Z-triple");
}

// Random primitive substitution on 2..4 letters with images of length 1..3.
Substitution random_primitive(std::mt19937_64& rng) {
  while (true) {
    const std::size_t k = 2 + rng() % 3;
    std::vector<Word> images(k);
    for (auto& img : images) {
      const std::size_t len = 1 + rng() % 3;
      for (std::size_t i = 0; i < len; ++i) img.push_back(static_cast<Letter>(rng() % k));
    }
    Substitution s(std::move(images));
    if (s.max_image_length() >= 2 && is_primitive(s)) return s;
  }
}

void properties(Tally& t) {
  std::mt19937_64 rng(kPropertySeed);

  for (std::size_t c = 0; c < kPropertyCases; ++c) {
    const auto s = random_primitive(rng);
    const auto k = s.alphabet_size();
    Word w;
    for (std::size_t i = 0, len = rng() % 20; i < len; ++i) w.push_back(static_cast<Letter>(rng() % k));
    const auto before = parikh_vector(w, k);
    const auto after = parikh_vector(substitute(s, w), k);
    const auto m = incidence_matrix(s);
    std::vector<std::int64_t> expected(k, 0);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) expected[b] += before[a] * m(a, b);
    t.expect(after == expected, "Parikh homomorphism fails for " + format_substitution(s, Notation::ZeroBased));
  }

  std::size_t full_rank_cases = 0;
  while (full_rank_cases < kPropertyCases) {
    const auto s = random_primitive(rng);
    if (!has_full_rank(s)) continue;
    ++full_rank_cases;
    for (unsigned p = 1; p <= 6; ++p)
      t.expect(is_injective(power(s, p)), "full rank but power " + std::to_string(p) + " of " +
                                              format_substitution(s, Notation::ZeroBased) + " is not injective");
  }

  const auto phi = fibonacci_substitution();
  for (std::size_t n = 1; n <= 30; ++n) t.expect(complexity(phi, n) == n + 1, "p_phi(" + std::to_string(n) + ")");

  std::vector<FactorLanguage> phi_language;
  for (std::size_t n = 1; n <= 24; ++n) phi_language.push_back(language(phi, n));
  for (std::size_t c = 0; c < kPropertyCases; ++c) {
    const auto p = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const auto q = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const QuadInt z = QuadInt(p, q).frac();
    const auto from = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const auto len = static_cast<std::int64_t>(1 + rng() % 24);
    const auto code = rotation_code(z, from, from + len - 1);
    const auto& lang = phi_language[static_cast<std::size_t>(len - 1)];
    t.expect(lang.contains(code.left) && lang.contains(code.right),
             "rotation window of " + z.to_string() + " from " + std::to_string(from) + " outside L_phi");
  }

  for (std::size_t r = 3; r <= 10; ++r) {
    const auto m = remark_matrix(r);
    t.expect(left_eigenvector_check(m), "left eigenvector, r=" + std::to_string(r));
    t.expect(golden_pf_check(m).golden(), "golden check, r=" + std::to_string(r));
  }
  t.note(std::to_string(kPropertyCases) + " random cases per property, seed " + std::to_string(kPropertySeed));
}

struct Criterion {
  const char* name;
  void (*run)(Tally&);
};

constexpr Criterion kCriteria[] = {
    {"n-block tables", nblock_tables},
    {"partition reshaping", reshaping},
    {"eta family", eta_family_check},
    {"interval images of the (F_n - 1)-block substitution", interval_equation},
    {"singular words, return words, block parses", decomposition},
    {"golden matrix classification", matrix_classes},
    {"three-symbol classification", three_symbols},
    {"key equation and block languages", key_equation},
    {"zero doubling and fourth powers", zero_doubling},
    {"cyclic pairs and Z-triples", cyclic},
    {"property suites", properties},
};

}  // namespace

CheckResult run_criterion(int id) {
  if (id < 1 || id > static_cast<int>(std::size(kCriteria)))
    throw Error(ErrorKind::InvalidArgument, "no acceptance criterion " + std::to_string(id));
  const auto& c = kCriteria[id - 1];
  CheckResult out{id, c.name};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Tally t;
    c.run(t);
    out.passed = t.passed();
    out.detail = t.detail();
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = std::string("exception: ") + e.what();
  }
  out.seconds = seconds_since(t0);
  return out;
}

std::vector<CheckResult> run_acceptance(bool fail_fast) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= static_cast<int>(std::size(kCriteria)); ++id) {
    out.push_back(run_criterion(id));
    if (fail_fast && !out.back().passed) break;
  }
  return out;
}

}  // namespace fibconj
