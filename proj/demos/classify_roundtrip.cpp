// Generate a conjugated generator power, classify it, and re-check the
// returned certificate with the word-problem oracle.

#include <cstdio>

#include "braid/format.hpp"
#include "braid/half_twist.hpp"

int main() {
  using namespace braid;
  const int n = 5;
  const HalfTwistInstance inst = random_half_twist_power(n, 4, 10, 2024);
  std::printf("word        : %s\n", format_word(inst.word).c_str());

  const Classification verdict = classify(inst.word);
  const auto* p = std::get_if<Power>(&verdict);
  if (!p) {
    std::printf("unexpected verdict\n");
    return 1;
  }
  std::printf("k           : %d\n", p->k);
  std::printf("root        : %s\n", format_word(p->root).c_str());
  std::printf("conjugator  : %s\n", format_word(p->conjugator).c_str());

  const BraidWord sigma1(n, {Letter{1, 1}});
  std::printf("root^k == b : %s\n", equal(power(p->root, p->k), inst.word) ? "yes" : "no");
  std::printf("P~s1^k~P==b : %s\n",
              equal(conjugate(power(sigma1, p->k), p->conjugator), inst.word) ? "yes" : "no");
  std::printf("root unique : %s\n", equal(p->root, inst.root) ? "yes" : "no");
  return 0;
}
