#include "fibconj/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibconj/checks.hpp"
#include "fibconj/conjugacy.hpp"
#include "fibconj/error.hpp"
#include "fibconj/fibonacci.hpp"
#include "fibconj/grammar.hpp"
#include "fibconj/matrices.hpp"
#include "fibconj/nblock.hpp"
#include "fibconj/reshape.hpp"

namespace fibconj::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  struct Check {
    std::string name;
    bool passed;
    std::string detail;
  };
  std::vector<Check> checks;
  std::ostringstream text;

  void check(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

Json word_json(std::span<const Letter> w, Notation notation) {
  Json out = Json::array();
  for (Letter a : w) out.push_back(letter_label(a, notation));
  return out;
}

Json substitution_json(const Substitution& s, Notation notation) {
  Json images = Json::array();
  for (const auto& img : s.images()) images.push_back(word_json(img, notation));
  return {{"grammar", format_substitution(s, notation)}, {"images", images}};
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

const char* notation_name(Notation n) {
  switch (n) {
    case Notation::ZeroBased: return "zero-based";
    case Notation::OneBased: return "one-based";
    case Notation::Alpha: return "alpha";
  }
  return "?";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::size_t> parse_size_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Parse, std::string("bad number '") + item + "' in " + what);
    }
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parse, std::string("expected p,q for ") + what + ", got '" + text + "'");
  }
}

void cmd_sub(Report& r, const std::string& text, unsigned power_k, bool print_only) {
  const auto parsed = parse_substitution(text);
  const auto s = power(parsed.substitution, power_k);
  r.inputs = {{"sub", text}, {"power", power_k}};
  r.results["substitution"] = substitution_json(s, parsed.notation);
  r.text << format_substitution(s, parsed.notation) << "\n";
  if (print_only) return;
  const bool primitive = is_primitive(s);
  r.results["notation"] = notation_name(parsed.notation);
  r.results["alphabet_size"] = s.alphabet_size();
  r.results["primitive"] = primitive;
  r.results["injective"] = is_injective(s);
  r.results["full_rank"] = has_full_rank(s);
  r.results["incidence_matrix"] = matrix_json(incidence_matrix(s));
  r.text << "alphabet size " << s.alphabet_size() << " (" << notation_name(parsed.notation) << ")\n"
         << "primitive " << yes_no(primitive) << ", injective " << yes_no(is_injective(s)) << ", full rank "
         << yes_no(has_full_rank(s)) << "\n"
         << "incidence matrix " << incidence_matrix(s).to_string() << "\n";
}

void cmd_lang(Report& r, const std::string& text, std::size_t n, bool list) {
  const auto parsed = parse_substitution(text);
  const auto lang = language(parsed.substitution, n);
  r.inputs = {{"sub", text}, {"n", n}};
  r.results["complexity"] = lang.size();
  r.text << "p(" << n << ") = " << lang.size() << "\n";
  if (!list) return;
  Json words = Json::array();
  for (const auto& w : lang.words) {
    words.push_back(word_json(w, parsed.notation));
    r.text << "  " << format_word(w, parsed.notation, parsed.substitution.alphabet_size()) << "\n";
  }
  r.results["words"] = words;
}

void cmd_nblock(Report& r, const std::string& text, std::size_t n, const std::string& seed_text) {
  const auto parsed = parse_substitution(text);
  const auto& s = parsed.substitution;
  Letter seed = 0;
  if (seed_text.empty()) {
    const auto d = default_seed(s);
    if (!d) throw Error(ErrorKind::NotAFixedPointSeed, "no letter a has s(a) starting with a and |s(a)| >= 2");
    seed = *d;
  } else {
    const Word w = parse_word(seed_text, parsed.notation, s.alphabet_size());
    if (w.size() != 1) throw Error(ErrorKind::Parse, "--seed must be a single letter");
    seed = w[0];
  }
  const auto p = nblock_substitution(s, n, seed);
  r.inputs = {{"sub", text}, {"n", n}, {"seed", letter_label(seed, parsed.notation)}};
  r.results["substitution"] = substitution_json(p.substitution, Notation::OneBased);
  Json table = Json::array();
  r.text << format_rules(p.substitution, Notation::OneBased) << "\n";
  r.text << "code table (" << p.code.size() << " blocks of length " << n << "):\n";
  for (Letter c = 0; c < p.code.size(); ++c) {
    table.push_back({{"block", word_json(p.code.block(c), parsed.notation)}, {"letter", c + 1}});
    r.text << "  " << format_word(p.code.block(c), parsed.notation, s.alphabet_size()) << " -> " << c + 1 << "\n";
  }
  r.results["code"] = table;
}

void cmd_reshape(Report& r, const std::string& text, const std::string& b0, const std::string& b1,
                 const std::string& cuts, std::size_t depth) {
  const auto parsed = parse_substitution(text);
  const auto& s = parsed.substitution;
  const auto slash = cuts.find('/');
  if (slash == std::string::npos) throw Error(ErrorKind::Parse, "--cuts must look like 2,2,1/1,2");
  ReshapeSpec spec{parse_word(b0, parsed.notation, s.alphabet_size()), parse_word(b1, parsed.notation, s.alphabet_size()),
                   parse_size_list(cuts.substr(0, slash), "--cuts"), parse_size_list(cuts.substr(slash + 1), "--cuts")};
  const auto out = partition_reshape(s, spec);
  r.inputs = {{"sub", text}, {"b0", b0}, {"b1", b1}, {"cuts", cuts}, {"depth", depth}};
  r.results["substitution"] = substitution_json(out, parsed.notation);
  r.results["full_rank"] = has_full_rank(out);
  r.text << format_rules(out, parsed.notation) << "\n";
  r.text << "full rank " << yes_no(has_full_rank(out)) << "\n";
  r.check("language equal to the input up to length " + std::to_string(depth), same_language(out, s, depth));
}

void cmd_eta(Report& r, unsigned n, const std::string& pattern) {
  const auto member = pattern.empty() ? eta_family(n) : eta_family(n, parse_word(pattern, Notation::ZeroBased, 2));
  const auto& eta = member.substitution;
  const auto k = eta.alphabet_size();
  r.inputs = {{"n", n}, {"pattern", format_word(member.length_pattern, Notation::ZeroBased, 2)}};
  r.results["substitution"] = substitution_json(eta, Notation::OneBased);

  const char* names[] = {"S", "M", "L"};
  Json species = Json::object();
  for (int sp = 0; sp < 3; ++sp) {
    Json letters = Json::array();
    bool first = true;
    for (Letter a = 0; a < k; ++a) {
      if (static_cast<int>(member.species[a]) != sp) continue;
      letters.push_back(a + 1);
      r.text << (first ? names[sp] : " ") << "  " << std::setw(3) << a + 1 << " -> "
             << format_word(eta.images()[a], Notation::OneBased, k) << "\n";
      first = false;
    }
    species[names[sp]] = letters;
  }
  r.results["species"] = species;
  r.results["a_M"] = member.medium_head + 1;
  r.results["a_L"] = member.large_head + 1;
  r.text << "grammar: " << format_substitution(eta, Notation::OneBased) << "\n";

  const auto cert = inspect_eta(n);
  if (!pattern.empty()) {
    r.check("primitive", is_primitive(eta));
    r.check("full rank", has_full_rank(eta));
    return;
  }
  r.check("primitive", cert.primitive);
  r.check("full rank", cert.full_rank);
  r.check("first letter of eta^2 decreases on L and M minus a_M", cert.first_letter_decreasing);
  r.check("|eta^(2m+1)(a)| >= m+2 on S", cert.small_growth);
  r.check("M and L reach S", cert.reaches_small);
  r.check("letter 1 reached from every letter", cert.reaches_one,
          "max steps " + std::to_string(cert.max_steps_to_one));
}

void cmd_fib_blocks(Report& r, unsigned n) {
  const auto db = decomposition_blocks(n);
  const auto k = db.code.size();
  r.inputs = {{"n", n}};
  r.results["block_length"] = db.code.block_length();
  r.results["b0"] = word_json(db.b0, Notation::OneBased);
  r.results["b1"] = word_json(db.b1, Notation::OneBased);
  r.text << "N = " << db.code.block_length() << ", " << k << " blocks\n"
         << "B0 = " << format_word(db.b0, Notation::OneBased, k) << "  (length " << db.b0.size() << ")\n"
         << "B1 = " << format_word(db.b1, Notation::OneBased, k) << "  (length " << db.b1.size() << ")\n";
}

void cmd_fib_singular(Report& r, unsigned n) {
  const auto w = singular_word(n);
  r.inputs = {{"n", n}};
  r.results["word"] = word_json(w, Notation::ZeroBased);
  r.text << "w_" << n << " = " << format_word(w, Notation::ZeroBased, 2) << "\n";
}

void cmd_fib_return(Report& r, unsigned n) {
  const auto rw = return_words(n);
  r.inputs = {{"n", n}};
  r.results["u"] = word_json(rw.u, Notation::ZeroBased);
  r.results["v"] = word_json(rw.v, Notation::ZeroBased);
  r.text << "u = " << format_word(rw.u, Notation::ZeroBased, 2) << "\n"
         << "v = " << format_word(rw.v, Notation::ZeroBased, 2) << "\n";
}

void cmd_fib_doubled(Report& r, std::size_t count) {
  if (count == 0) throw Error(ErrorKind::InvalidArgument, "--check needs a positive count");
  const auto doubled = double_zeros(fibonacci_word(count));
  std::size_t mismatches = 0;
  Word formula;
  for (std::size_t n = 1; n <= count; ++n) {
    const int x = doubled_letter(static_cast<std::int64_t>(n));
    formula.push_back(static_cast<Letter>(x));
    if (static_cast<Letter>(x) != doubled[n - 1]) ++mismatches;
  }
  const std::size_t shown = std::min<std::size_t>(count, 60);
  r.inputs = {{"check", count}};
  r.results["prefix"] = word_json(std::span<const Letter>(formula).first(shown), Notation::ZeroBased);
  r.results["mismatches"] = mismatches;
  r.text << "y = " << format_word(std::span<const Letter>(formula).first(shown), Notation::ZeroBased, 2)
         << (count > shown ? "..." : "") << "\n";
  r.check("floor formula matches doubled Fibonacci word for n <= " + std::to_string(count), mismatches == 0,
          std::to_string(mismatches) + " mismatches");
}

void cmd_fib_rotation(Report& r, const std::string& z_text, std::int64_t from, std::int64_t to) {
  const auto [p, q] = parse_pair(z_text, "--z");
  const QuadInt z(p, q);
  const auto code = rotation_code(z, from, to);
  r.inputs = {{"z", z.to_string()}, {"from", from}, {"to", to}};
  r.results["left"] = word_json(code.left, Notation::ZeroBased);
  r.results["right"] = word_json(code.right, Notation::ZeroBased);
  r.results["ambiguous_at"] = code.ambiguous_at;
  r.text << "left  " << format_word(code.left, Notation::ZeroBased, 2) << "\n";
  if (code.ambiguous()) {
    r.text << "right " << format_word(code.right, Notation::ZeroBased, 2) << "\nambiguous at";
    for (auto n : code.ambiguous_at) r.text << " " << n;
    r.text << "\n";
  }
}

void cmd_fib_powers4(Report& r, std::size_t len, std::size_t max_period, bool doubled) {
  Word w;
  if (doubled) {
    w = double_zeros(fibonacci_word(len));
    w.resize(len);
  } else {
    w = fibonacci_word(len);
  }
  const auto reps = find_fourth_powers(w, max_period);
  std::map<std::size_t, std::size_t> by_period;
  for (const auto& rep : reps) ++by_period[rep.period];
  r.inputs = {{"len", len}, {"max_period", max_period}, {"doubled", doubled}};
  Json periods = Json::object();
  for (const auto& [p, c] : by_period) periods[std::to_string(p)] = c;
  r.results["count"] = reps.size();
  r.results["by_period"] = periods;
  r.text << reps.size() << " fourth powers with period <= " << max_period << "\n";
  for (const auto& [p, c] : by_period) {
    const auto it = std::find_if(reps.begin(), reps.end(), [&](const Repetition& x) { return x.period == p; });
    r.text << "  period " << p << ": " << c << " (first at " << it->offset << ": "
           << format_word(std::span<const Letter>(w).subspan(it->offset, 4 * p), Notation::ZeroBased, 2) << ")\n";
  }
}

std::string pair_text(const CyclicPair& p, Notation notation) {
  return "(" + format_letter(p.b, notation) + "," + format_letter(p.a, notation) + ")";
}

void cmd_cyclic(Report& r, const std::string& text) {
  const auto parsed = parse_substitution(text);
  const auto pairs = cyclic_pairs(parsed.substitution);
  r.inputs = {{"sub", text}};
  Json out = Json::array();
  for (const auto& p : pairs)
    out.push_back({{"b", letter_label(p.b, parsed.notation)}, {"a", letter_label(p.a, parsed.notation)}});
  r.results["pairs"] = out;
  r.results["m"] = pairs.empty() ? 0U : pairs.front().m;
  r.text << pairs.size() << " cyclic pairs";
  if (!pairs.empty()) r.text << ", power " << pairs.front().m;
  r.text << "\n";
  for (const auto& p : pairs) r.text << "  " << pair_text(p, parsed.notation) << "\n";
}

void cmd_ztriples(Report& r, const std::string& text) {
  const auto parsed = parse_substitution(text);
  const auto triples = z_triples(parsed.substitution);
  r.inputs = {{"sub", text}};
  Json out = Json::array();
  for (const auto& t : triples) {
    out.push_back({pair_text(t.ba, parsed.notation), pair_text(t.bd, parsed.notation), pair_text(t.cd, parsed.notation)});
    r.text << "  " << pair_text(t.ba, parsed.notation) << " " << pair_text(t.bd, parsed.notation) << " "
           << pair_text(t.cd, parsed.notation) << "\n";
  }
  r.results["triples"] = out;
  r.results["two_point_factor"] = two_point_factor(parsed.substitution).has_value();
  r.text << triples.size() << " Z-triples\n";
  if (const auto bp = two_point_factor(parsed.substitution))
    r.text << "two-point factor: {" << format_word(bp->part0, parsed.notation, parsed.substitution.alphabet_size())
           << "} -> 0, {" << format_word(bp->part1, parsed.notation, parsed.substitution.alphabet_size()) << "} -> 1\n";
}

void cmd_reverse(Report& r, const std::string& text, std::size_t depth) {
  const auto parsed = parse_substitution(text);
  const auto rev = time_reversal(parsed.substitution);
  r.inputs = {{"sub", text}, {"depth", depth}};
  r.results["substitution"] = substitution_json(rev, parsed.notation);
  const bool same = is_primitive(rev) && same_language(rev, parsed.substitution, depth);
  r.results["same_language"] = same;
  r.text << format_substitution(rev, parsed.notation) << "\n"
         << "same language up to length " << depth << ": " << yes_no(same) << "\n";
}

void cmd_certify(Report& r, const std::string& text, const std::string& map_text, const std::string& target_text,
                 std::size_t window) {
  const auto src = parse_substitution(text);
  const auto tgt = parse_substitution(target_text);
  std::vector<Letter> pi(src.substitution.alphabet_size(), 0);
  std::vector<bool> seen(pi.size(), false);
  std::stringstream in(map_text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Parse, "map entries look like a:1, got '" + item + "'");
    const Word from = parse_word(item.substr(0, colon), src.notation, src.substitution.alphabet_size());
    const Word to = parse_word(item.substr(colon + 1), tgt.notation, tgt.substitution.alphabet_size());
    if (from.size() != 1 || to.size() != 1) throw Error(ErrorKind::Parse, "map entry '" + item + "' is not letter:letter");
    pi[from[0]] = to[0];
    seen[from[0]] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(ErrorKind::AlphabetMismatch, "--map must send every letter of the source alphabet");
  const auto cert = letter_code_certificate(src.substitution, pi, tgt.substitution, window);
  r.inputs = {{"sub", text}, {"map", map_text}, {"target", target_text}, {"window", window}};
  r.results["intertwines"] = cert.intertwines;
  r.results["verdict"] = to_string(cert.verdict);
  r.results["window"] = cert.window ? Json(*cert.window) : Json(nullptr);
  r.text << "intertwines " << yes_no(cert.intertwines) << "\nverdict " << to_string(cert.verdict);
  if (cert.window) r.text << " (window radius " << *cert.window << ")";
  r.text << "\n";
  r.check("letter map is a conjugacy", cert.verdict == CodeVerdict::Conjugate);
}

void cmd_classify3(Report& r) {
  const auto report = classify_three_symbol();
  Json matrices = Json::array();
  for (const auto& m : report.matrices) matrices.push_back(matrix_json(m));
  r.results["matrices"] = matrices;
  Json candidates = Json::array();
  for (std::size_t mi = 0; mi < report.matrices.size(); ++mi) {
    r.text << "matrix " << mi + 1 << " " << report.matrices[mi].to_string() << "\n";
    for (const auto& c : report.candidates) {
      if (c.matrix_index != mi) continue;
      Json entry = {{"matrix", mi + 1},
                    {"substitution", format_substitution(c.substitution, Notation::Alpha)},
                    {"primitive", c.primitive},
                    {"injective", c.injective},
                    {"verdict", to_string(c.verdict)},
                    {"reason", c.provenance}};
      r.text << "  " << std::left << std::setw(22) << format_rules(c.substitution, Notation::Alpha) << std::right
             << to_string(c.verdict);
      if (c.verdict == Verdict::Conjugate) {
        std::string map;
        for (Letter a = 0; a < c.letter_map.size(); ++a)
          map += (a ? "," : "") + format_letter(a, Notation::Alpha) + ":" + std::to_string(c.letter_map[a]);
        entry["letter_map"] = map;
        entry["window"] = c.window;
        r.text << " via " << map << ", W=" << c.window;
      }
      r.text << (c.injective ? "" : ", not injective") << " [" << c.provenance << "]\n";
      candidates.push_back(entry);
    }
  }
  r.results["candidates"] = candidates;
}

void cmd_matrices(Report& r, std::size_t dim, std::int64_t bound, bool raw) {
  const auto all = enumerate_golden(dim, bound);
  const auto classes = permutation_classes(all);
  r.inputs = {{"r", dim}, {"bound", bound}};
  r.results["raw_count"] = all.size();
  auto describe = [&](const IntMatrix& m) {
    const auto c = golden_pf_check(m);
    Json j = {{"matrix", matrix_json(m)}, {"trace", c.trace}, {"F", c.second}, {"D", c.det}};
    if (c.third_eigenvalue) j["lambda3"] = *c.third_eigenvalue;
    std::ostringstream line;
    line << m.to_string() << "  T=" << c.trace << " F=" << c.second << " D=" << c.det;
    if (c.third_eigenvalue) line << " lambda3=" << *c.third_eigenvalue;
    return std::make_pair(j, line.str());
  };
  Json cls = Json::array();
  r.text << classes.size() << " classes (" << all.size() << " matrices)\n";
  for (const auto& m : classes) {
    auto [j, line] = describe(m);
    cls.push_back(j);
    r.text << "  " << line << "\n";
  }
  r.results["classes"] = cls;
  if (raw) {
    Json list = Json::array();
    r.text << "raw:\n";
    for (const auto& m : all) {
      auto [j, line] = describe(m);
      list.push_back(j);
      r.text << "  " << line << "\n";
    }
    r.results["raw"] = list;
  }
}

void cmd_verify(Report& r, int criterion, bool timings, bool keep_going) {
  std::vector<CheckResult> results;
  if (criterion > 0)
    results.push_back(run_criterion(criterion));
  else
    results = run_acceptance(!keep_going);
  for (const auto& c : results) {
    r.check(std::to_string(c.id) + " " + c.name, c.passed, c.detail);
    if (timings) r.text << "criterion " << c.id << ": " << std::fixed << std::setprecision(3) << c.seconds << " s\n";
  }
  if (!results.empty() && !results.back().passed && criterion == 0 && !keep_going)
    r.text << "stopped at criterion " << results.back().id << " (" << results.back().name << ")\n";
}

void render(const Report& r, bool json, std::ostream& out) {
  if (json) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    Json doc = {{"schema", 1}, {"command", r.command}, {"inputs", r.inputs}, {"results", r.results}, {"checks", checks}};
    out << doc.dump(2) << "\n";
    return;
  }
  out << r.text.str();
  for (const auto& c : r.checks)
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibonacci-like substitution subshifts: algebra, codes and certificates", "fibconj"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  Report report;
  std::function<void()> action;

  std::string sub_text, seed_text, b0, b1, cuts, pattern, map_text, target_text, z_text;
  unsigned power_k = 1, n_index = 0;
  std::size_t n = 1, depth = 8, window = 4, count = 0, len = 0, max_period = 25, r_dim = 3;
  std::int64_t from = 0, to = 0, bound = 2;
  bool print_only = false, list = false, raw = false, doubled = false, timings = false, keep_going = false;
  int criterion = 0;

  auto* sub = app.add_subcommand("sub", "Parse, print and raise a substitution to a power");
  sub->add_option("--sub", sub_text, "Substitution, e.g. 0->01;1->0")->required();
  sub->add_option("--power", power_k, "Power")->check(CLI::PositiveNumber);
  sub->add_flag("--print", print_only, "Only print the (powered) substitution");
  sub->callback([&] { action = [&] { cmd_sub(report, sub_text, power_k, print_only); }; });

  auto* lang = app.add_subcommand("lang", "Factor language of a primitive substitution");
  lang->add_option("--sub", sub_text)->required();
  lang->add_option("--n", n, "Factor length")->required()->check(CLI::PositiveNumber);
  lang->add_flag("--list", list, "List the words");
  lang->callback([&] { action = [&] { cmd_lang(report, sub_text, n, list); }; });

  auto* nblock = app.add_subcommand("nblock", "N-block substitution with canonical coding");
  nblock->add_option("--sub", sub_text)->required();
  nblock->add_option("--n", n, "Block length")->required()->check(CLI::PositiveNumber);
  nblock->add_option("--seed", seed_text, "Fixed-point seed letter");
  nblock->callback([&] { action = [&] { cmd_nblock(report, sub_text, n, seed_text); }; });

  auto* reshape = app.add_subcommand("reshape", "Partition reshaping");
  reshape->add_option("--sub", sub_text)->required();
  reshape->add_option("--b0", b0, "First block, e.g. 123")->required();
  reshape->add_option("--b1", b1, "Second block, e.g. 45")->required();
  reshape->add_option("--cuts", cuts, "Cut lengths, e.g. 2,2,1/1,2")->required();
  reshape->add_option("--depth", depth, "Language comparison depth");
  reshape->callback([&] { action = [&] { cmd_reshape(report, sub_text, b0, b1, cuts, depth); }; });

  auto* eta = app.add_subcommand("eta", "The substitution eta_n");
  eta->add_option("n", n_index, "Index n >= 5")->required();
  eta->add_option("--pattern", pattern, "Custom L-length pattern (binary word)");
  eta->callback([&] { action = [&] { cmd_eta(report, n_index, pattern); }; });

  auto* fibc = app.add_subcommand("fib", "Fibonacci word machinery");
  fibc->require_subcommand(1);
  auto* blocks = fibc->add_subcommand("blocks", "Decomposition blocks B0, B1");
  blocks->add_option("n", n_index)->required();
  blocks->callback([&] { action = [&] { cmd_fib_blocks(report, n_index); }; });
  auto* singular = fibc->add_subcommand("singular", "Singular word w_n");
  singular->add_option("n", n_index)->required();
  singular->callback([&] { action = [&] { cmd_fib_singular(report, n_index); }; });
  auto* ret = fibc->add_subcommand("return", "Return words of w_n");
  ret->add_option("n", n_index)->required();
  ret->callback([&] { action = [&] { cmd_fib_return(report, n_index); }; });
  auto* dbl = fibc->add_subcommand("doubled", "Zero-doubled Fibonacci word against the floor formula");
  dbl->add_option("--check", count, "Number of letters to compare")->required();
  dbl->callback([&] { action = [&] { cmd_fib_doubled(report, count); }; });
  auto* rot = fibc->add_subcommand("rotation", "Coding of the rotation by gamma");
  rot->add_option("--z", z_text, "Start point p + q*gamma as p,q")->required();
  rot->add_option("--from", from)->required();
  rot->add_option("--to", to)->required();
  rot->callback([&] { action = [&] { cmd_fib_rotation(report, z_text, from, to); }; });
  auto* p4 = fibc->add_subcommand("powers4", "Fourth powers in a Fibonacci prefix");
  p4->add_option("--len", len, "Prefix length")->required();
  p4->add_option("--max-period", max_period);
  p4->add_flag("--doubled", doubled, "Scan the zero-doubled word instead");
  p4->callback([&] { action = [&] { cmd_fib_powers4(report, len, max_period, doubled); }; });

  auto* cyclic = app.add_subcommand("cyclic", "Cyclic pairs");
  cyclic->add_option("--sub", sub_text)->required();
  cyclic->callback([&] { action = [&] { cmd_cyclic(report, sub_text); }; });

  auto* zt = app.add_subcommand("ztriples", "Z-triples and two-point factors");
  zt->add_option("--sub", sub_text)->required();
  zt->callback([&] { action = [&] { cmd_ztriples(report, sub_text); }; });

  auto* rev = app.add_subcommand("reverse", "Time reversal");
  rev->add_option("--sub", sub_text)->required();
  rev->add_option("--depth", depth);
  rev->callback([&] { action = [&] { cmd_reverse(report, sub_text, depth); }; });

  auto* cert = app.add_subcommand("certify", "Letter-to-letter conjugacy certificate");
  cert->add_option("--sub", sub_text)->required();
  cert->add_option("--map", map_text, "e.g. a:1,b:0,c:0")->required();
  cert->add_option("--target", target_text)->required();
  cert->add_option("--window", window);
  cert->callback([&] { action = [&] { cmd_certify(report, sub_text, map_text, target_text, window); }; });

  auto* c3 = app.add_subcommand("classify3", "Classify the three-letter candidates");
  c3->callback([&] { action = [&] { cmd_classify3(report); }; });

  auto* mats = app.add_subcommand("matrices", "Golden-mean Perron-Frobenius matrices");
  mats->add_option("--r", r_dim)->check(CLI::Range(2, 3));
  mats->add_option("--bound", bound)->check(CLI::PositiveNumber);
  mats->add_flag("--raw", raw, "Also list every matrix before class reduction");
  mats->callback([&] { action = [&] { cmd_matrices(report, r_dim, bound, raw); }; });

  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance criteria");
  verify->add_option("--criterion", criterion, "Run only this criterion")->check(CLI::Range(1, 11));
  verify->add_flag("--timings", timings, "Print per-criterion run times");
  verify->add_flag("--keep-going", keep_going, "Do not stop at the first failure");
  verify->callback([&] { action = [&] { cmd_verify(report, criterion, timings, keep_going); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  for (const auto* s : app.get_subcommands()) {
    report.command = s->get_name();
    for (const auto* inner : s->get_subcommands()) report.command += " " + inner->get_name();
  }
  try {
    action();
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::CertificateFailure ? kExitCheckFailed : kExitUsage;
  }
  render(report, format == "json", out);
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace fibconj::cli
