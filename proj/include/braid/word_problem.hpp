#ifndef BRAID_WORD_PROBLEM_HPP
#define BRAID_WORD_PROBLEM_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "braid/braid_word.hpp"

namespace braid {

/// Raised when an operation gives up against an explicit resource budget.
/// Callers must treat it as "undecided", never as a negative answer.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

namespace garside {

// A permutation braid (simple element) is stored as its permutation table:
// table[x] = image position, 0-based, composed left to right like words.
using Table = std::vector<int>;

inline Table identity_table(int n) {
  Table t(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) t[static_cast<std::size_t>(x)] = x;
  return t;
}

inline Table delta_table(int n) {
  Table t(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) t[static_cast<std::size_t>(x)] = n - 1 - x;
  return t;
}

inline bool is_identity(const Table& t) {
  for (std::size_t x = 0; x < t.size(); ++x)
    if (t[x] != static_cast<int>(x)) return false;
  return true;
}

inline Table letter_table(int n, int index) {
  Table t = identity_table(n);
  std::swap(t[static_cast<std::size_t>(index - 1)], t[static_cast<std::size_t>(index)]);
  return t;
}

/// The simple factor Delta * sigma_index^{-1}, i.e. the left complement of a
/// generator in Delta.
inline Table delta_over_letter(int n, int index) {
  Table t = delta_table(n);
  // append sigma_index^{-1} on the right: swap the two values index-1, index
  for (auto& v : t) {
    if (v == index - 1)
      v = index;
    else if (v == index)
      v = index - 1;
  }
  return t;
}

inline Table inverse(const Table& t) {
  Table inv(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) inv[static_cast<std::size_t>(t[x])] = static_cast<int>(x);
  return inv;
}

/// Conjugation by Delta (the flip automorphism tau), Table-level.
inline Table flip(const Table& t) {
  const int n = static_cast<int>(t.size());
  Table out(t.size());
  for (int x = 0; x < n; ++x)
    out[static_cast<std::size_t>(x)] = n - 1 - t[static_cast<std::size_t>(n - 1 - x)];
  return out;
}

/// Make the adjacent pair (a, b) left-weighted: while some generator starts b
/// but does not finish a, move it across. Returns true if the pair changed.
inline bool left_weight_pair(Table& a, Table& b) {
  const int n = static_cast<int>(a.size());
  bool changed = false;
  Table inv_a = inverse(a);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int d = 0; d + 1 < n; ++d) {
      const bool starts_b = b[static_cast<std::size_t>(d)] > b[static_cast<std::size_t>(d + 1)];
      const bool finishes_a =
          inv_a[static_cast<std::size_t>(d)] > inv_a[static_cast<std::size_t>(d + 1)];
      if (starts_b && !finishes_a) {
        // a <- a * sigma_{d+1}
        a[static_cast<std::size_t>(inv_a[static_cast<std::size_t>(d)])] = d + 1;
        a[static_cast<std::size_t>(inv_a[static_cast<std::size_t>(d + 1)])] = d;
        std::swap(inv_a[static_cast<std::size_t>(d)], inv_a[static_cast<std::size_t>(d + 1)]);
        // b <- sigma_{d+1}^{-1} * b
        std::swap(b[static_cast<std::size_t>(d)], b[static_cast<std::size_t>(d + 1)]);
        progress = true;
        changed = true;
      }
    }
  }
  return changed;
}

/// Canonical positive word of a permutation braid: repeatedly peel the
/// smallest starting generator.
inline std::vector<int> table_word(Table t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> word;
  bool more = true;
  while (more) {
    more = false;
    for (int d = 0; d + 1 < n; ++d) {
      if (t[static_cast<std::size_t>(d)] > t[static_cast<std::size_t>(d + 1)]) {
        word.push_back(d + 1);
        std::swap(t[static_cast<std::size_t>(d)], t[static_cast<std::size_t>(d + 1)]);
        more = true;
        break;
      }
    }
  }
  return word;
}

}  // namespace garside

/// Left (greedy) normal form Delta^p f_1 ... f_l with permutation-braid
/// factors, no factor trivial or Delta, and every adjacent pair
/// left-weighted. Two words are equal in B_n iff their normal forms match.
struct NormalForm {
  int strands = 2;
  std::int64_t delta_power = 0;
  std::vector<garside::Table> factors;

  bool is_trivial_element() const { return delta_power == 0 && factors.empty(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

  std::string to_string() const {
    std::string out = "D^" + std::to_string(delta_power);
    for (const auto& f : factors) {
      out += " .";
      for (int i : garside::table_word(f)) out += " " + std::to_string(i);
    }
    return out;
  }
};

inline NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  NormalForm nf;
  nf.strands = n;

  std::deque<garside::Table> factors;
  for (const Letter& l : w.letters()) {
    if (l.sign > 0) {
      factors.push_back(garside::letter_table(n, l.index));
    } else {
      // sigma_i^{-1} = Delta^{-1} * (Delta sigma_i^{-1}); carrying Delta^{-1}
      // to the front conjugates every factor on its left by Delta.
      nf.delta_power -= 1;
      for (auto& f : factors) f = garside::flip(f);
      factors.push_back(garside::delta_over_letter(n, l.index));
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < factors.size(); ++j)
      if (garside::left_weight_pair(factors[j], factors[j + 1])) changed = true;
    for (std::size_t j = factors.size(); j-- > 0;)
      if (garside::is_identity(factors[j])) factors.erase(factors.begin() + static_cast<long>(j));
  }

  const garside::Table delta = garside::delta_table(n);
  while (!factors.empty() && factors.front() == delta) {
    nf.delta_power += 1;
    factors.pop_front();
  }

  nf.factors.assign(factors.begin(), factors.end());
  return nf;
}

/// Complete decision procedure for the word problem (no budget needed).
inline bool is_trivial(const BraidWord& w) {
  if (exponent_sum(w) != 0) return false;
  return normal_form(free_cancel(w)).is_trivial_element();
}

inline bool equal(const BraidWord& u, const BraidWord& v) {
  require_same_strands(u, v, "equal");
  return is_trivial(concat(u, invert(v)));
}

/// Decision plus a diagnostic certificate (the two normal forms).
struct EqualityVerdict {
  bool equal = false;
  std::optional<std::string> certificate;
};

inline EqualityVerdict equal_verdict(const BraidWord& u, const BraidWord& v) {
  require_same_strands(u, v, "equal");
  const NormalForm a = normal_form(u);
  const NormalForm b = normal_form(v);
  EqualityVerdict verdict;
  verdict.equal = (a == b);
  verdict.certificate = "lhs: " + a.to_string() + " | rhs: " + b.to_string();
  return verdict;
}

namespace detail {

inline std::string positive_key(const std::vector<Letter>& letters) {
  std::string key;
  key.reserve(letters.size());
  for (const Letter& l : letters) key.push_back(static_cast<char>(l.index));
  return key;
}

/// Words reachable from `letters` by one relation activation (both relations,
/// both directions; lengths never change).
inline std::vector<std::vector<Letter>> relation_moves(const std::vector<Letter>& letters) {
  std::vector<std::vector<Letter>> out;
  for (std::size_t p = 0; p + 1 < letters.size(); ++p) {
    const int a = letters[p].index, b = letters[p + 1].index;
    if (std::abs(a - b) >= 2) {
      auto next = letters;
      std::swap(next[p], next[p + 1]);
      out.push_back(std::move(next));
    }
  }
  for (std::size_t p = 0; p + 2 < letters.size(); ++p) {
    const int a = letters[p].index, b = letters[p + 1].index, c = letters[p + 2].index;
    if (a == c && std::abs(a - b) == 1) {
      auto next = letters;
      next[p] = Letter{b, 1};
      next[p + 1] = Letter{a, 1};
      next[p + 2] = Letter{b, 1};
      out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace detail

/// Positive equivalence: connectivity by single relation activations among
/// positive words of one fixed length. Breadth-first with memoized states;
/// the search space is finite, so no budget is required at desk scale.
/// Independent of the normal-form route, which makes it an oracle for
/// `equal` on positive inputs.
inline bool positive_equal(const BraidWord& u, const BraidWord& v) {
  require_same_strands(u, v, "positive_equal");
  if (!is_positive(u) || !is_positive(v))
    throw std::invalid_argument("positive_equal: inputs must be positive words");
  if (u.length() != v.length()) return false;

  const std::string target = detail::positive_key(v.letters());
  std::unordered_set<std::string> seen;
  std::deque<std::vector<Letter>> queue;
  queue.push_back(u.letters());
  seen.insert(detail::positive_key(u.letters()));
  while (!queue.empty()) {
    std::vector<Letter> cur = std::move(queue.front());
    queue.pop_front();
    if (detail::positive_key(cur) == target) return true;
    for (auto& next : detail::relation_moves(cur)) {
      std::string key = detail::positive_key(next);
      if (seen.insert(std::move(key)).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

/// The full positive-equivalence class of a positive word.
inline std::vector<BraidWord> positive_orbit(const BraidWord& u) {
  if (!is_positive(u)) throw std::invalid_argument("positive_orbit: input must be positive");
  std::unordered_set<std::string> seen;
  std::deque<std::vector<Letter>> queue;
  std::vector<BraidWord> orbit;
  queue.push_back(u.letters());
  seen.insert(detail::positive_key(u.letters()));
  while (!queue.empty()) {
    std::vector<Letter> cur = std::move(queue.front());
    queue.pop_front();
    for (auto& next : detail::relation_moves(cur)) {
      std::string key = detail::positive_key(next);
      if (seen.insert(std::move(key)).second) queue.push_back(std::move(next));
    }
    orbit.emplace_back(u.strands(), std::move(cur));
  }
  return orbit;
}

namespace detail {

inline std::optional<std::vector<Letter>> left_extract_letters(const std::vector<Letter>& w,
                                                               int gen) {
  if (w.empty()) return std::nullopt;
  const int j = w.front().index;
  std::vector<Letter> rest(w.begin() + 1, w.end());
  if (j == gen) return rest;
  auto r = left_extract_letters(rest, gen);
  if (!r) return std::nullopt;
  if (std::abs(gen - j) >= 2) {
    // sigma_j sigma_gen r = sigma_gen sigma_j r
    std::vector<Letter> out;
    out.reserve(w.size() - 1);
    out.push_back(Letter{j, 1});
    out.insert(out.end(), r->begin(), r->end());
    return out;
  }
  // |gen - j| = 1: need r = sigma_j v, then
  // sigma_j sigma_gen sigma_j v = sigma_gen sigma_j sigma_gen v.
  auto v = left_extract_letters(*r, j);
  if (!v) return std::nullopt;
  std::vector<Letter> out;
  out.reserve(w.size() - 1);
  out.push_back(Letter{j, 1});
  out.push_back(Letter{gen, 1});
  out.insert(out.end(), v->begin(), v->end());
  return out;
}

}  // namespace detail

/// If the positive word alpha equals sigma_gen * w' for a positive w',
/// return such a w' with |w'| = |alpha| - 1; otherwise nullopt. Greedy
/// rewriting on the leading letter, using only the two defining relations.
inline std::optional<BraidWord> left_extract(const BraidWord& alpha, int gen) {
  if (!is_positive(alpha)) throw std::invalid_argument("left_extract: input must be positive");
  if (gen < 1 || gen > alpha.strands() - 1)
    throw std::invalid_argument("left_extract: generator index out of range");
  auto letters = detail::left_extract_letters(alpha.letters(), gen);
  if (!letters) return std::nullopt;
  return BraidWord(alpha.strands(), std::move(*letters));
}

/// Test support: enumerate positive words w with |w| <= max_len and return
/// the first with w^{-1} alpha w = beta. nullopt means "none within budget",
/// not "not conjugate".
inline std::optional<BraidWord> find_positive_conjugator(const BraidWord& alpha,
                                                         const BraidWord& beta, int max_len) {
  require_same_strands(alpha, beta, "find_positive_conjugator");
  const int gens = alpha.strands() - 1;
  for (int len = 0; len <= max_len; ++len) {
    std::vector<int> digits(static_cast<std::size_t>(len), 1);
    while (true) {
      std::vector<Letter> letters;
      letters.reserve(static_cast<std::size_t>(len));
      for (int d : digits) letters.push_back(Letter{d, 1});
      BraidWord w(alpha.strands(), std::move(letters));
      if (equal(conjugate(alpha, w), beta)) return w;
      int k = len - 1;
      while (k >= 0 && digits[static_cast<std::size_t>(k)] == gens) {
        digits[static_cast<std::size_t>(k)] = 1;
        --k;
      }
      if (k < 0) break;
      ++digits[static_cast<std::size_t>(k)];
    }
    if (gens == 0) break;  // only the empty word exists
  }
  return std::nullopt;
}

}  // namespace braid

#endif  // BRAID_WORD_PROBLEM_HPP
