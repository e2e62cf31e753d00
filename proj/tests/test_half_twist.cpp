#include <catch2/catch_amalgamated.hpp>

#include "braid/half_twist.hpp"
#include "helpers.hpp"

using namespace braid;

namespace {

const BraidWord example_B = make_word(4, {1, 2, 3, 1, 2, 3});
const BraidWord example_half = make_word(4, {1, 2, 3, 1, 2, 1});

void check_power_certificate(const BraidWord& b, const Classification& c, int expected_k) {
  const auto* p = std::get_if<Power>(&c);
  REQUIRE(p != nullptr);
  CHECK(p->k == expected_k);
  CHECK(equal(power(p->root, p->k), b));
  const BraidWord sigma1(b.strands(), {Letter{1, 1}});
  CHECK(equal(conjugate(power(sigma1, p->k), p->conjugator), b));
}

}  // namespace

TEST_CASE("power helper") {
  CHECK(power(make_word(2, {1}), 2) == make_word(2, {1, 1}));
  CHECK(power(make_word(2, {1}), 0) == make_word(2, {}));
  CHECK(power(make_word(2, {1}), -1) == make_word(2, {-1}));
}

TEST_CASE("delta and its conjugator") {
  CHECK(delta(2) == make_word(2, {1}));
  CHECK(delta(3) == make_word(3, {1, 2, -1}));
  CHECK(delta_conjugator(2).empty());
  CHECK(delta_conjugator(3) == make_word(3, {2}));
  for (int n = 2; n <= 6; ++n) {
    const BraidWord sigma1(n, {Letter{1, 1}});
    CHECK(equal(conjugate(sigma1, delta_conjugator(n)), delta(n)));
    // delta is the square root of the free generator a_{n-1}
    CHECK(equal(power(delta(n), 2), embed_generator(n, n - 1, 1)));
  }
}

TEST_CASE("move_switching_strands") {
  const auto untouched = move_switching_strands(make_word(4, {1, 2, 3, 2, 1, 1, 2, 3, 2, 1}),
                                                SwitchingPair{1, 4});
  CHECK(untouched.second.empty());

  const auto [moved, mover] = move_switching_strands(make_word(3, {2, 2}), SwitchingPair{2, 3});
  const CrossingMatrix cr = crossing_matrix(moved);
  CHECK(cr.at(1, 3) == 1);
  CHECK(cr.at(3, 1) == 1);
  CHECK(cr.nonzero().size() == 2);

  const auto [m2, c2] = move_switching_strands(make_word(4, {2, 2}), SwitchingPair{2, 3});
  CHECK(c2 == make_word(4, {1, 3}));

  CHECK_THROWS_AS(move_switching_strands(make_word(3, {1}), SwitchingPair{2, 2}),
                  std::invalid_argument);
}

TEST_CASE("classify named vectors") {
  const Classification c1 = classify(make_word(3, {1}));
  check_power_certificate(make_word(3, {1}), c1, 1);
  CHECK(std::get<Power>(c1).conjugator.empty());
  CHECK(equal(std::get<Power>(c1).root, make_word(3, {1})));

  const Classification chalf = classify(example_half);
  REQUIRE(std::holds_alternative<NotPower>(chalf));
  CHECK(std::get<NotPower>(chalf).reason == FailedStep::permutation_filter);

  const Classification cB = classify(example_B);
  REQUIRE(std::holds_alternative<NotPower>(cB));
  CHECK(std::get<NotPower>(cB).reason == FailedStep::permutation_filter);

  // an even power whose switching pair is away from (1, n)
  const Classification csq = classify(make_word(3, {2, 2}));
  check_power_certificate(make_word(3, {2, 2}), csq, 2);
  CHECK(equal(std::get<Power>(csq).root, make_word(3, {2})));
}

TEST_CASE("classify handles zero and negative exponent sums") {
  CHECK(std::holds_alternative<IsIdentity>(classify(make_word(3, {1, -1}))));
  CHECK(std::holds_alternative<IsIdentity>(classify(make_word(3, {}))));

  const Classification c = classify(make_word(3, {1, 1, -2, -2}));
  REQUIRE(std::holds_alternative<NotPower>(c));
  CHECK(std::get<NotPower>(c).reason == FailedStep::zero_exp);

  const BraidWord b = conjugate(make_word(4, {-1, -1, -1}), make_word(4, {2, -3, 1}));
  const Classification cn = classify(b);
  check_power_certificate(b, cn, -3);
  // the root itself stays a half-twist: its exponent sum is +1
  CHECK(exponent_sum(std::get<Power>(cn).root) == 1);
}

TEST_CASE("classify random conjugates of generator powers") {
  auto rng = testing::make_rng(211);
  for (int t = 0; t < 25; ++t) {
    const int n = 3 + t % 3;
    const int k = 1 + t % 5;
    const BraidWord q = testing::random_word(rng, n, 6);
    std::uniform_int_distribution<int> gen(1, n - 1);
    const BraidWord b = conjugate(power(BraidWord(n, {Letter{gen(rng), 1}}), k), q);
    check_power_certificate(b, classify(b), k);
  }
}

TEST_CASE("classify returns the ground truth of generated instances") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = random_half_twist_power(3 + seed % 4, 1 + static_cast<int>(seed) % 6,
                                              static_cast<int>(seed) % 9, seed);
    CHECK(equal(power(inst.root, inst.k), inst.word));
    CHECK(exponent_sum(inst.word) == inst.k);
    const BraidWord sigma1(inst.word.strands(), {Letter{1, 1}});
    CHECK(equal(conjugate(power(sigma1, inst.k), inst.conjugator), inst.word));

    const Classification c = classify(inst.word);
    check_power_certificate(inst.word, c, inst.k);
    // Unique roots: the classifier's root is the constructed one
    CHECK(equal(std::get<Power>(c).root, inst.root));
  }
}

TEST_CASE("roots of powers of one half-twist coincide") {
  auto rng = testing::make_rng(223);
  for (int t = 0; t < 6; ++t) {
    const int n = 3 + t % 3;
    const BraidWord q = testing::random_word(rng, n, 5);
    const BraidWord h = conjugate(BraidWord(n, {Letter{1 + t % (n - 1), 1}}), q);
    for (int m = 1; m <= 5; ++m) {
      const Classification c = classify(power(h, m));
      const auto* p = std::get_if<Power>(&c);
      REQUIRE(p != nullptr);
      CHECK(p->k == m);
      CHECK(equal(p->root, h));
    }
  }
}

TEST_CASE("classification k is conjugation invariant") {
  auto rng = testing::make_rng(227);
  for (int t = 0; t < 10; ++t) {
    const auto inst = random_half_twist_power(4, 1 + t % 4, 4, 1000 + t);
    const BraidWord q = testing::random_word(rng, 4, 6);
    const Classification c = classify(conjugate(inst.word, q));
    const auto* p = std::get_if<Power>(&c);
    REQUIRE(p != nullptr);
    CHECK(p->k == inst.k);
    CHECK(exponent_sum(conjugate(inst.word, q)) == exponent_sum(inst.word));
  }
}

TEST_CASE("classify in B_2 and on the standard (1,n) half-twist") {
  for (int k : {1, 4, 5}) {
    const BraidWord b = power(make_word(2, {1}), k);
    check_power_certificate(b, classify(b), k);
  }
  for (int k : {1, 2, 3}) {
    const BraidWord b = power(delta(4), k);
    const Classification c = classify(b);
    check_power_certificate(b, c, k);
    CHECK(equal(std::get<Power>(c).root, delta(4)));
  }
}

TEST_CASE("any power verdict on arbitrary words carries a valid certificate") {
  auto rng = testing::make_rng(229);
  int powers_seen = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 4;
    const BraidWord w = testing::random_word(rng, n, t % 12);
    const Classification c = classify(w);
    if (const auto* p = std::get_if<Power>(&c)) {
      ++powers_seen;
      CHECK(p->k == exponent_sum(w));
      CHECK(equal(power(p->root, p->k), w));
      const BraidWord sigma1(n, {Letter{1, 1}});
      CHECK(equal(conjugate(power(sigma1, p->k), p->conjugator), w));
    } else if (std::holds_alternative<IsIdentity>(c)) {
      CHECK(is_trivial(w));
    }
  }
  CHECK(powers_seen > 0);  // short random words do hit genuine powers
}

TEST_CASE("odd inputs with extra entanglement fail the squared crossing filter") {
  const Classification c = classify(make_word(3, {1, 1, 1, 1, 1, -2, -2}));
  REQUIRE(std::holds_alternative<NotPower>(c));
  CHECK(std::get<NotPower>(c).reason == FailedStep::crossing_filter);
}

TEST_CASE("rejections carry the right failed step") {
  // pure braid entangling two separate strand pairs
  const BraidWord two_pairs = concat(make_word(5, {1, 1}), make_word(5, {3, 3}));
  const Classification c = classify(two_pairs);
  REQUIRE(std::holds_alternative<NotPower>(c));
  CHECK(std::get<NotPower>(c).reason == FailedStep::crossing_filter);

  // odd exponent sum, permutation is a 4-cycle
  const Classification c2 = classify(make_word(4, {1, 2, 3}));
  REQUIRE(std::holds_alternative<NotPower>(c2));
  CHECK(std::get<NotPower>(c2).reason == FailedStep::permutation_filter);

  // a_3 [a_1, a_2] embedded: passes every filter up to the free conjugacy test
  const FreeWord f = FreeWord::reduced(3, {{3, 1}, {1, 1}, {2, 1}, {1, -1}, {2, -1}});
  const Classification c3 = classify(embed(f, 4));
  REQUIRE(std::holds_alternative<NotPower>(c3));
  CHECK(std::get<NotPower>(c3).reason == FailedStep::free_conjugacy);

  // crossing-free commutator on strands 2..4 keeps the pattern but breaks
  // A_n membership
  const BraidWord wrap = make_word(4, {1, 2, 3, 3, -2, -1});
  const BraidWord tangle = make_word(4, {2, 2, 2, 3, 3, -2, -2, -2, 2, -3, -3, -2});
  const Classification c4 = classify(concat(wrap, tangle));
  REQUIRE(std::holds_alternative<NotPower>(c4));
  CHECK(std::get<NotPower>(c4).reason == FailedStep::not_combed);
}

TEST_CASE("a tiny comb budget surfaces as undecided") {
  CombOptions tiny;
  tiny.max_syllables = 0;
  const BraidWord b = conjugate(make_word(3, {1, 1}), make_word(3, {2}));
  const Classification c = classify(b, tiny);
  CHECK(std::holds_alternative<Undecided>(c));
}

TEST_CASE("generated instances are deterministic in the seed") {
  const auto a = random_half_twist_power(5, 3, 8, 42);
  const auto b = random_half_twist_power(5, 3, 8, 42);
  CHECK(a.word == b.word);
  CHECK(a.root == b.root);
  CHECK(a.conjugator == b.conjugator);
  const auto c = random_half_twist_power(5, 3, 8, 43);
  CHECK(a.word != c.word);
}
