#ifndef BRAID_COMBING_HPP
#define BRAID_COMBING_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "braid/braid_word.hpp"
#include "braid/free_word.hpp"
#include "braid/word_problem.hpp"

namespace braid {

/// Membership in A_n, the subgroup of braids with strands 2..n straight:
/// exactly the pure braids whose strand-1 deletion is trivial in B_{n-1}.
inline bool in_A_n(const BraidWord& w) {
  if (w.strands() == 1) return true;
  if (!permutation(w).is_identity()) return false;
  return is_trivial(delete_strand(w, 1));
}

struct CombOptions {
  /// Cap on the intermediate free-word length; combing is exponential in the
  /// worst case. Exceeding it raises budget_error, reported as "undecided".
  std::size_t max_syllables = 1u << 20;
};

namespace detail {

/// Conjugation by one letter of the straight-strand copy of B_{n-1} acts on
/// the free generators of A_n. With j = c + 1 the conjugating braid letter:
///   sigma_j^{-1} a_c     sigma_j = a_{c+1}
///   sigma_j^{-1} a_{c+1} sigma_j = a_{c+1} a_c a_{c+1}^{-1}
/// and the inverse conjugation swaps the roles:
///   sigma_j a_{c+1} sigma_j^{-1} = a_c
///   sigma_j a_c     sigma_j^{-1} = a_c^{-1} a_{c+1} a_c
/// (wrong-way conjugate written with inverted wing). All other generators
/// commute with sigma_j. The oracle tests pin these identities per n.
inline void substitute(std::vector<Syllable>& acc, int c, int sign) {
  std::vector<Syllable> out;
  out.reserve(acc.size() + 2);
  auto push = [&out](Syllable s) {
    if (!out.empty() && out.back() == s.inverse())
      out.pop_back();
    else
      out.push_back(s);
  };
  for (const Syllable& s : acc) {
    if (sign > 0) {
      if (s.gen == c) {
        push(Syllable{c + 1, s.sign});
      } else if (s.gen == c + 1) {
        push(Syllable{c + 1, 1});
        push(Syllable{c, s.sign});
        push(Syllable{c + 1, -1});
      } else {
        push(s);
      }
    } else {
      if (s.gen == c + 1) {
        push(Syllable{c, s.sign});
      } else if (s.gen == c) {
        push(Syllable{c, -1});
        push(Syllable{c + 1, s.sign});
        push(Syllable{c, 1});
      } else {
        push(s);
      }
    }
  }
  acc = std::move(out);
}

}  // namespace detail

/// Write a member of A_n as a reduced word in the free generators
/// a_1..a_{n-1}. Schreier-style single pass: follow the strand starting at
/// position 1 through the word. A letter it crosses "the wrong way" emits a
/// free generator; a letter not involving it is pushed into the straight
/// B_{n-1} residue, conjugating the emitted prefix. The residue equals the
/// strand-1 deletion of the input and must be trivial, which is re-checked
/// here; the binding contract is equal(embed(comb(w), n), w).
inline FreeWord comb(const BraidWord& w, const CombOptions& options = {}) {
  const int n = w.strands();
  if (n == 1) return FreeWord(0);

  std::vector<Syllable> acc;
  std::vector<Letter> residue;
  int p = 1;  // current position of the tracked strand
  for (const Letter& l : w.letters()) {
    const int i = l.index;
    if (p == i && l.sign > 0) {
      p = i + 1;
    } else if (p == i && l.sign < 0) {
      if (!acc.empty() && acc.back() == Syllable{i, 1})
        acc.pop_back();
      else
        acc.push_back(Syllable{i, -1});
      p = i + 1;
    } else if (p == i + 1 && l.sign > 0) {
      if (!acc.empty() && acc.back() == Syllable{i, -1})
        acc.pop_back();
      else
        acc.push_back(Syllable{i, 1});
      p = i;
    } else if (p == i + 1 && l.sign < 0) {
      p = i;
    } else {
      const int c = (i >= p + 1) ? i - 1 : i;
      detail::substitute(acc, c, l.sign);
      residue.push_back(Letter{c, l.sign});
      if (acc.size() > options.max_syllables)
        throw budget_error("comb: free-word length exceeded budget of " +
                           std::to_string(options.max_syllables) + " syllables");
    }
  }

  if (p != 1)
    throw std::invalid_argument("comb: input is not in A_n (strand 1 does not return)");
  if (!is_trivial(BraidWord(n - 1, std::move(residue))))
    throw std::invalid_argument("comb: input is not in A_n (strands 2..n are linked)");
  return FreeWord::reduced(n - 1, acc);
}

}  // namespace braid

#endif  // BRAID_COMBING_HPP
