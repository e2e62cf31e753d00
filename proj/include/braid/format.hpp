#ifndef BRAID_FORMAT_HPP
#define BRAID_FORMAT_HPP

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "braid/braid_word.hpp"
#include "braid/free_word.hpp"

namespace braid {

namespace detail {

inline std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ',')
      ++pos;
    if (pos > start) tokens.push_back(text.substr(start, pos - start));
  }
  return tokens;
}

}  // namespace detail

/// Shared braid word text format: signed integers separated by whitespace or
/// commas, entry e standing for sigma_{|e|}^{sign(e)}. The strand count comes
/// from outside.
inline BraidWord parse_word(int n, std::string_view text) {
  const auto tokens = detail::tokenize(text);
  std::vector<int> entries;
  entries.reserve(tokens.size());
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(tokens[k].data(), tokens[k].data() + tokens[k].size(), value);
    if (ec != std::errc{} || ptr != tokens[k].data() + tokens[k].size())
      throw std::invalid_argument("parse_word: entry " + std::to_string(k + 1) + " '" +
                                  std::string(tokens[k]) + "' is not an integer");
    entries.push_back(value);
  }
  return make_word(n, entries);
}

inline std::string format_word(const BraidWord& w) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.encoded());
  }
  return out;
}

/// Free word text format: tokens like `a2^-1 a3 a1`; exponents beyond +-1 are
/// accepted and expanded.
inline FreeWord parse_free_word(int rank, std::string_view text) {
  const auto tokens = detail::tokenize(text);
  std::vector<Syllable> syllables;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    const std::string_view tok = tokens[k];
    const auto bad = [&](const std::string& why) {
      return std::invalid_argument("parse_free_word: token " + std::to_string(k + 1) + " '" +
                                   std::string(tok) + "' " + why);
    };
    if (tok.size() < 2 || tok[0] != 'a') throw bad("must look like a<index>[^<exp>]");
    const std::size_t caret = tok.find('^');
    const std::string_view idx_part = tok.substr(1, caret == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : caret - 1);
    int gen = 0;
    auto [p1, e1] = std::from_chars(idx_part.data(), idx_part.data() + idx_part.size(), gen);
    if (e1 != std::errc{} || p1 != idx_part.data() + idx_part.size() || gen < 1)
      throw bad("has a bad generator index");
    int exp = 1;
    if (caret != std::string_view::npos) {
      const std::string_view exp_part = tok.substr(caret + 1);
      auto [p2, e2] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), exp);
      if (e2 != std::errc{} || p2 != exp_part.data() + exp_part.size() || exp == 0)
        throw bad("has a bad exponent");
    }
    for (int t = 0; t < (exp < 0 ? -exp : exp); ++t)
      syllables.push_back(Syllable{gen, exp < 0 ? -1 : 1});
  }
  return FreeWord::reduced(rank, syllables);
}

inline std::string format_free_word(const FreeWord& w) {
  std::string out;
  const auto& syl = w.syllables();
  for (std::size_t k = 0; k < syl.size();) {
    std::size_t run = k + 1;
    while (run < syl.size() && syl[run] == syl[k]) ++run;
    const int exp = static_cast<int>(run - k) * syl[k].sign;
    if (!out.empty()) out += ' ';
    out += 'a' + std::to_string(syl[k].gen);
    if (exp != 1) out += '^' + std::to_string(exp);
    k = run;
  }
  return out;
}

}  // namespace braid

#endif  // BRAID_FORMAT_HPP
