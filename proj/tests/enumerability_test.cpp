#include <gtest/gtest.h>

#include <set>

#include "cwb/enumerability.hpp"
#include "cwb/library.hpp"
#include "cwb/pairing.hpp"
#include "support.hpp"

namespace cwb {
namespace {

const Alphabet& D = Alphabet::delimited();
const std::string kEnums = std::string(CWB_DATA_DIR) + "/enumerators/";

Tape unary(unsigned n) { return rep_unary().encode(Natural(n)); }
Tape binary(unsigned n) { return rep_binary_marked().encode(Natural(n)); }
Enumerator naturals() { return {unary_successor(), unary(0), 100000}; }

TEST(AcceptorFromEnumerator, StartTapeIsIndexZero) {
  Acceptance a = acceptor_from_enumerator(naturals(), unary(0), 10);
  EXPECT_EQ(a.status, Acceptance::Status::Accepted);
  EXPECT_EQ(a.index, 0u);
}

TEST(AcceptorFromEnumerator, Evens) {
  Enumerator evens = load_enumerator(kEnums + "evens.enum");
  for (CompareMode mode : {CompareMode::Meta, CompareMode::PureTM}) {
    Acceptance six = acceptor_from_enumerator(evens, unary(6), 100, mode);
    EXPECT_EQ(six.status, Acceptance::Status::Accepted);
    EXPECT_EQ(six.index, 3u);
    Acceptance three = acceptor_from_enumerator(evens, unary(3), 100, mode);
    EXPECT_EQ(three.status, Acceptance::Status::Inconclusive);
  }
}

TEST(AcceptorFromEnumerator, FiniteEnumerationEnds) {
  Enumerator one = load_enumerator(kEnums + "singleton.enum");
  EXPECT_EQ(acceptor_from_enumerator(one, parse_tape("^1$", D), 10).status,
            Acceptance::Status::Accepted);
  EXPECT_EQ(acceptor_from_enumerator(one, parse_tape("^10$", D), 10).status,
            Acceptance::Status::NotFound);
}

TEST(AcceptorFromEnumerator, StarvedStepIsInconclusive) {
  Enumerator slow{unary_successor(), unary(0), 2};
  EXPECT_EQ(acceptor_from_enumerator(slow, unary(5), 100).status,
            Acceptance::Status::Inconclusive);
}

TEST(EnumeratorFromAcceptor, Singleton) {
  Acceptor one{machine_recognize_const(parse_tape("^1", D)), Conventions::yes(D)};
  auto out = enumerator_from_acceptor(one, enc_word_universe(), 300);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(render_tape(out[0].tape), "^1$");
}

// After R rounds of the (r, r) schedule the stream holds exactly the
// universe tapes below R that the acceptor accepts within R steps.
TEST(EnumeratorFromAcceptor, MatchesDirectScan) {
  Acceptor a{starts_with_one_acceptor(), Conventions::yes(D)};
  Universe u = enc_word_universe();
  const std::uint64_t rounds = 200;
  std::set<std::uint64_t> emitted;
  for (const Emission& e : enumerator_from_acceptor(a, u, rounds)) {
    EXPECT_EQ(e.tape, u.tape(e.index));
    EXPECT_TRUE(emitted.insert(e.index).second);
  }
  std::set<std::uint64_t> expected;
  for (std::uint64_t k = 0; k < rounds; ++k) {
    RunResult r = run(a.machine, u.tape(k), rounds);
    if (r.halted() && same_tape(r.tape, a.accept_tape)) expected.insert(k);
  }
  EXPECT_EQ(emitted, expected);
  for (std::uint64_t k : emitted) {
    const std::string w = render_tape(u.tape(k));
    EXPECT_EQ(w.substr(0, 2), "^1") << w;
  }
}

TEST(EnumeratorFromAcceptor, ThousandEmissionsWithoutRepeats) {
  Dovetail d({starts_with_one_acceptor(), Conventions::yes(D)}, enc_word_universe());
  std::set<std::string> seen;
  std::uint64_t last_round = 0;
  for (int i = 0; i < 1000; ++i) {
    auto e = d.next(d.rounds_done() + 5000);  // gaps double with word length
    ASSERT_TRUE(e) << i;
    EXPECT_TRUE(seen.insert(render_tape(e->tape)).second);
    EXPECT_GE(e->round, last_round);
    last_round = e->round;
  }
}

TEST(Invert, Examples) {
  Inversion id = invert_via_enumeration(identity_machine(), naturals(), unary(4), 50);
  ASSERT_EQ(id.status, Inversion::Status::Found);
  EXPECT_EQ(*id.preimage, unary(4));

  Inversion pred = invert_via_enumeration(unary_successor(), naturals(), unary(7), 200);
  ASSERT_EQ(pred.status, Inversion::Status::Found);
  EXPECT_EQ(*pred.preimage, unary(6));

  EXPECT_EQ(invert_via_enumeration(unary_successor(), naturals(), unary(0), 300).status,
            Inversion::Status::Inconclusive);
}

TEST(Invert, NonInjective) {
  // Two steps on every input: the first cell becomes 1. ^0$ and ^1$ both
  // reach ^1$ in round 2.
  MachineBuilder b(D);
  b.start("s").halt("h");
  for (char c : std::string("_01$")) b.rule("s", c, '1', Move::Right, "t");
  b.pass("t", "_01$", Move::Left, "h");
  Enumerator dom = load_enumerator(kEnums + "binary-marked.enum");
  Inversion v = invert_via_enumeration(b.build(), dom, binary(1), 50);
  EXPECT_EQ(v.status, Inversion::Status::NonInjectiveEvidence);
  ASSERT_TRUE(v.preimage && v.other);
  EXPECT_NE(*v.preimage, *v.other);
}

TEST(Translate, UnaryAndBinaryBothWays) {
  Representation u = rep_unary(), b = rep_binary_marked();
  Enumerator eu = load_enumerator(kEnums + "unary.enum");
  Enumerator eb = load_enumerator(kEnums + "binary-marked.enum");
  Translation first = translate_via_enumerators(u, b, eu, eb, unary(0), 10);
  ASSERT_EQ(first.status, Translation::Status::Translated);
  EXPECT_EQ(first.index, 0u);
  EXPECT_EQ(*first.tape, binary(0));

  EXPECT_EQ(render_tape(*translate_via_enumerators(u, b, eu, eb, unary(5), 10).tape), "^101$");
  for (unsigned n = 0; n <= 200; n += 7) {
    Translation there = translate_via_enumerators(u, b, eu, eb, unary(n), 1000);
    ASSERT_EQ(there.status, Translation::Status::Translated) << n;
    EXPECT_EQ(*there.tape, b.encode(*u.decode(unary(n))));
    Translation back = translate_via_enumerators(b, u, eb, eu, *there.tape, 1000);
    ASSERT_EQ(back.status, Translation::Status::Translated);
    EXPECT_EQ(*back.tape, unary(n));
  }
}

TEST(Translate, OutsideImageOrBudget) {
  Representation u = rep_unary(), b = rep_binary_marked();
  Enumerator eu = load_enumerator(kEnums + "unary.enum");
  Enumerator eb = load_enumerator(kEnums + "binary-marked.enum");
  EXPECT_EQ(translate_via_enumerators(u, b, eu, eb, parse_tape("^101$", D), 100).status,
            Translation::Status::Inconclusive);
  EXPECT_EQ(translate_via_enumerators(u, b, eu, eb, unary(50), 10).status,
            Translation::Status::Inconclusive);
}

TEST(EnumeratorFile, ParsesAndComposes) {
  Enumerator e = parse_enumerator(
      "machine: ../machines/unary-successor.tm\n"
      "machine: ../machines/unary-successor.tm\n"
      "start: ^110$\n"
      "fuel: 500\n",
      kEnums);
  EXPECT_EQ(e.fuel_per_step, 500u);
  EXPECT_EQ(e.start, unary(1));
  EXPECT_EQ(run(e.machine, e.start, 500).tape, unary(3));
  EXPECT_THROW(parse_enumerator("start: ^1$\n", kEnums), std::exception);
  EXPECT_THROW(parse_enumerator("machine: x.tm\nbogus: 1\n", kEnums), std::exception);
}

}  // namespace
}  // namespace cwb
