#include "fibconj/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "fibconj/error.hpp"

namespace fibconj {

namespace {

struct Token {
  std::string text;
  std::size_t position;
};

bool is_alpha_label(const std::string& t) { return t.size() == 1 && t[0] >= 'a' && t[0] <= 'z'; }

bool is_number(const std::string& t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string strip(std::string_view text, std::vector<std::size_t>& origin) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      out.push_back(text[i]);
      origin.push_back(i);
    }
  origin.push_back(text.size());
  return out;
}

bool multi_char_labels(Notation notation, std::size_t alphabet_size) {
  switch (notation) {
    case Notation::ZeroBased: return alphabet_size > 10;
    case Notation::OneBased: return alphabet_size > 9;
    case Notation::Alpha: return false;
  }
  return false;
}

Letter label_to_letter(const std::string& label, Notation notation, std::size_t alphabet_size, std::size_t position) {
  long long value = 0;
  if (notation == Notation::Alpha) {
    if (!is_alpha_label(label)) throw ParseError(position, "expected a letter a-z, got '" + label + "'");
    value = label[0] - 'a';
  } else {
    if (!is_number(label) || label.size() > 9) throw ParseError(position, "expected a number, got '" + label + "'");
    value = std::stoll(label) - (notation == Notation::OneBased ? 1 : 0);
  }
  if (value < 0 || static_cast<std::size_t>(value) >= alphabet_size)
    throw ParseError(position, "letter '" + label + "' is outside the alphabet");
  return static_cast<Letter>(value);
}

std::vector<Token> split_image(const std::string& text, std::size_t offset, const std::vector<std::size_t>& origin,
                               bool comma_list) {
  std::vector<Token> out;
  if (comma_list || text.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (piece.empty()) throw ParseError(origin[offset + start], "empty letter in comma list");
      out.push_back({piece, origin[offset + start]});
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) out.push_back({std::string(1, text[i]), origin[offset + i]});
  }
  return out;
}

}  // namespace

ParsedSubstitution parse_substitution(std::string_view raw) {
  std::vector<std::size_t> origin;
  const std::string text = strip(raw, origin);
  if (text.empty()) throw ParseError(0, "empty substitution");

  struct Rule {
    Token lhs;
    std::string image;
    std::size_t image_offset;
  };
  std::vector<Rule> rules;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    const std::string rule = text.substr(start, end - start);
    if (rule.empty()) throw ParseError(origin[start], "empty rule");
    const auto arrow = rule.find("->");
    if (arrow == std::string::npos) throw ParseError(origin[start], "rule without '->'");
    if (arrow == 0) throw ParseError(origin[start], "rule without a left-hand letter");
    if (arrow + 2 == rule.size()) throw ParseError(origin[start + arrow], "rule with an empty image");
    rules.push_back({{rule.substr(0, arrow), origin[start]}, rule.substr(arrow + 2), start + arrow + 2});
    start = end + 1;
  }

  // The left-hand sides fix the alphabet and its numbering.
  Notation notation;
  if (std::all_of(rules.begin(), rules.end(), [](const Rule& r) { return is_alpha_label(r.lhs.text); })) {
    notation = Notation::Alpha;
  } else {
    long long lowest = -1;
    for (const auto& r : rules) {
      if (!is_number(r.lhs.text) || r.lhs.text.size() > 9)
        throw ParseError(r.lhs.position, "left-hand side '" + r.lhs.text + "' is not a letter label");
      const auto v = std::stoll(r.lhs.text);
      if (lowest < 0 || v < lowest) lowest = v;
    }
    if (lowest > 1) throw ParseError(0, "digit alphabets must start at 0 or 1");
    notation = lowest == 0 ? Notation::ZeroBased : Notation::OneBased;
  }
  const std::size_t k = rules.size();
  const bool comma_list = multi_char_labels(notation, k);

  std::vector<std::optional<Word>> images(k);
  for (const auto& r : rules) {
    const Letter a = label_to_letter(r.lhs.text, notation, k, r.lhs.position);
    if (images[a]) throw ParseError(r.lhs.position, "duplicate rule for '" + r.lhs.text + "'");
    Word img;
    for (const auto& tok : split_image(r.image, r.image_offset, origin, comma_list))
      img.push_back(label_to_letter(tok.text, notation, k, tok.position));
    images[a] = std::move(img);
  }
  std::vector<Word> ordered;
  for (auto& img : images) ordered.push_back(std::move(*img));
  return {Substitution(std::move(ordered)), notation};
}

long long letter_label(Letter a, Notation notation) {
  return notation == Notation::OneBased ? static_cast<long long>(a) + 1 : static_cast<long long>(a);
}

std::string format_letter(Letter a, Notation notation) {
  if (notation == Notation::Alpha && a < 26) return std::string(1, static_cast<char>('a' + a));
  return std::to_string(letter_label(a, notation == Notation::Alpha ? Notation::ZeroBased : notation));
}

std::string format_word(std::span<const Letter> w, Notation notation, std::size_t alphabet_size) {
  const bool commas = multi_char_labels(notation, alphabet_size);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (commas && i > 0) out += ',';
    out += format_letter(w[i], notation);
  }
  return out;
}

Word parse_word(std::string_view raw, Notation notation, std::size_t alphabet_size) {
  std::vector<std::size_t> origin;
  const std::string text = strip(raw, origin);
  Word out;
  if (text.empty()) return out;
  for (const auto& tok : split_image(text, 0, origin, multi_char_labels(notation, alphabet_size)))
    out.push_back(label_to_letter(tok.text, notation, alphabet_size, tok.position));
  return out;
}

std::string format_substitution(const Substitution& s, Notation notation) {
  std::string out;
  for (Letter a = 0; a < s.alphabet_size(); ++a) {
    if (a > 0) out += ';';
    out += format_letter(a, notation) + "->" + format_word(s.images()[a], notation, s.alphabet_size());
  }
  return out;
}

std::string format_rules(const Substitution& s, Notation notation) {
  std::string out;
  for (Letter a = 0; a < s.alphabet_size(); ++a) {
    if (a > 0) out += ", ";
    out += format_letter(a, notation) + "->" + format_word(s.images()[a], notation, s.alphabet_size());
  }
  return out;
}

}  // namespace fibconj
