// Comb a member of A_4 into the free generators and round-trip it.

#include <cstdio>

#include "braid/combing.hpp"
#include "braid/format.hpp"

int main() {
  using namespace braid;
  const BraidWord w = parse_word(4, "1 -2 -3 -3 2 2 3 3 -2 1");
  std::printf("word     : %s\n", format_word(w).c_str());
  std::printf("in A_n   : %s\n", in_A_n(w) ? "yes" : "no");

  const FreeWord combed = comb(w);
  std::printf("combed   : %s\n", format_free_word(combed).c_str());
  std::printf("embedded : %s\n", format_word(embed(combed, 4)).c_str());
  std::printf("equal    : %s\n", equal(embed(combed, 4), w) ? "yes" : "no");
  return 0;
}
