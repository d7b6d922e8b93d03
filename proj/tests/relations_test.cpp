#include <gtest/gtest.h>

#include "cwb/library.hpp"
#include "cwb/machine_io.hpp"
#include "cwb/pairing.hpp"
#include "cwb/relations.hpp"
#include "support.hpp"

namespace cwb {
namespace {

const std::string kSuites = std::string(CWB_DATA_DIR) + "/benchmarks/";
constexpr std::uint64_t kFuel = 100000;
constexpr std::uint64_t kBound = 200;

// n -> ρc(n + k).
Representation shifted_unary(unsigned k) {
  Representation u = rep_unary();
  return {"unary+" + std::to_string(k), AbstractDomain::naturals(),
          [u, k](const Element& e) { return u.encode(as_natural(e) + k); },
          [u, k](const Tape& t) -> std::optional<Element> {
            auto n = u.decode(t);
            if (!n || as_natural(*n) < k) return std::nullopt;
            return Element{as_natural(*n) - k};
          }};
}

TEST(VerifyTransformable, Examples) {
  Representation u = rep_unary();
  EXPECT_EQ(verify_transformable(u, u, identity_machine(), 100, 10).status, Verdict::Verified);
  WitnessVerdict wrong = verify_transformable(u, u, unary_successor(), 100, kFuel);
  ASSERT_EQ(wrong.status, Verdict::Refuted);
  EXPECT_EQ(as_natural(*wrong.element), 0);
  EXPECT_TRUE(replay_refutation(unary_successor(), wrong));
}

TEST(VerifyTransformable, Transitive) {
  Representation u = rep_unary(), u1 = shifted_unary(1), u2 = shifted_unary(2);
  Machine f = unary_successor(), g = unary_successor();
  ASSERT_EQ(verify_transformable(u, u1, f, 60, kFuel).status, Verdict::Verified);
  ASSERT_EQ(verify_transformable(u1, u2, g, 60, kFuel).status, Verdict::Verified);
  EXPECT_EQ(verify_transformable(u, u2, compose(f, g), 60, kFuel).status, Verdict::Verified);
}

TEST(StrengthReport, IdenticalRepresentations) {
  std::vector<Benchmark> bs{benchmark_function("successor", kFuel, kBound)};
  bs[0].witnesses.emplace("unary", unary_successor());
  RelationReport r = strength_report(rep_unary(), rep_unary(), bs, 40, kFuel);
  EXPECT_EQ(r.verdict, RelationVerdict::EquivalentEvidence);
}

TEST(StrengthReport, UnaryAgainstAugmented) {
  auto bs = load_benchmarks(kSuites + "unary-vs-augmented.suite", 1000, kBound);
  Representation aug = representation_by_name("halting-augmented", 1000, kBound);
  RelationReport r = strength_report(rep_unary(), aug, bs, 50, kFuel);
  EXPECT_EQ(r.verdict, RelationVerdict::IncomparableEvidence);
  EXPECT_EQ(r.xy, Direction::NoWitness);
  EXPECT_EQ(r.yx, Direction::NoWitness);
  EXPECT_EQ(r.xy_reason, "diagonal-flag");
  EXPECT_EQ(r.yx_reason, "successor");
}

TEST(StrengthReport, UnaryAgainstBinary) {
  auto bs = load_benchmarks(kSuites + "unary-vs-binary.suite", kFuel, kBound);
  RelationReport r = strength_report(rep_unary(), rep_binary_marked(), bs, 50, kFuel);
  EXPECT_EQ(r.verdict, RelationVerdict::EquivalentEvidence);
}

TEST(StrengthReport, RefutedWitnessShowsUp) {
  std::vector<Benchmark> bs{benchmark_function("double", kFuel, kBound)};
  bs[0].witnesses.emplace("unary", unary_successor());
  RelationReport r = strength_report(rep_unary(), rep_unary(), bs, 10, kFuel);
  ASSERT_TRUE(r.rows[0].x);
  EXPECT_EQ(r.rows[0].x->status, Verdict::Refuted);
}

TEST(CombineDirections, Table) {
  using D = Direction;
  using V = RelationVerdict;
  EXPECT_EQ(combine_directions(D::VerifiedOnSamples, D::VerifiedOnSamples), V::EquivalentEvidence);
  EXPECT_EQ(combine_directions(D::VerifiedOnSamples, D::NoWitness), V::StrongerEvidenceX);
  EXPECT_EQ(combine_directions(D::Refuted, D::VerifiedOnSamples), V::StrongerEvidenceY);
  EXPECT_EQ(combine_directions(D::NoWitness, D::Refuted), V::IncomparableEvidence);
  EXPECT_EQ(combine_directions(D::Unresolved, D::VerifiedOnSamples), V::Unknown);
}

TEST(Endorep, VerdictsMatch) {
  auto aug_suite = load_benchmarks(kSuites + "unary-vs-augmented.suite", 1000, kBound);
  Representation aug = representation_by_name("halting-augmented", 1000, kBound);
  EndorepReport a = endorep_strength_check(aug, rep_unary(), aug_suite, 30, kFuel);
  EXPECT_EQ(a.direct.verdict, RelationVerdict::IncomparableEvidence);
  EXPECT_TRUE(a.matches);

  auto bin_suite = load_benchmarks(kSuites + "unary-vs-binary.suite", kFuel, kBound);
  EndorepReport b = endorep_strength_check(rep_binary_marked(), rep_unary(), bin_suite, 30, kFuel);
  EXPECT_EQ(b.direct.verdict, RelationVerdict::EquivalentEvidence);
  EXPECT_TRUE(b.matches);

  EndorepReport same = endorep_strength_check(rep_unary(), rep_unary(), bin_suite, 30, kFuel);
  EXPECT_EQ(same.endorep.verdict, RelationVerdict::EquivalentEvidence);
  EXPECT_TRUE(same.matches);
}

TEST(Refuter, ZigzagComparator) {
  Machine zz = zigzag_comparator();
  Refutation r = refute_binary_comparator(zz, 5, kFuel);
  ASSERT_TRUE(r.transcript) << r.note;
  const RefutationTranscript& t = *r.transcript;
  EXPECT_EQ(t.m, t.n + (Natural(1) << t.s_n));
  EXPECT_NE(t.m, t.n);
  EXPECT_TRUE(t.run_nn.accepted);
  EXPECT_TRUE(t.run_mn.accepted);
  EXPECT_EQ(t.run_nn.steps, t.s_n);
  EXPECT_LE(static_cast<std::uint64_t>(head_excursion(zz, t.input_nn, kFuel)), t.s_n);
  std::string why;
  EXPECT_TRUE(replay_transcript(zz, t, kFuel, &why)) << why;
}

TEST(Refuter, ZigzagIsRightOnUnaryPairs) {
  Machine zz = zigzag_comparator();
  Representation u = rep_pair_unary_twosided();
  for (unsigned n = 0; n <= 15; ++n)
    for (unsigned m = 0; m <= 15; ++m) {
      RunResult r = run(zz, u.encode(NaturalPair{n, m}), kFuel);
      ASSERT_TRUE(r.halted());
      EXPECT_EQ(r.accepted, n == m) << n << " " << m;
    }
}

TEST(Refuter, AlwaysYes) {
  Refutation r = refute_binary_comparator(always_yes_binary(), 5, kFuel);
  ASSERT_TRUE(r.transcript);
  EXPECT_EQ(r.transcript->s_n, 0u);
  EXPECT_EQ(r.transcript->m, 6);
  EXPECT_TRUE(replay_transcript(always_yes_binary(), *r.transcript, kFuel));
}

TEST(Refuter, NonHaltingIsNotApplicable) {
  MachineBuilder b(Alphabet::binary());
  b.start("w").halt("h").pass("w", "01", Move::Left, "w");
  Refutation r = refute_binary_comparator(b.build(), 5, 1000);
  EXPECT_FALSE(r.transcript);
  EXPECT_FALSE(r.note.empty());
}

TEST(Refuter, TamperedTranscriptFailsReplay) {
  Machine zz = zigzag_comparator();
  RefutationTranscript t = *refute_binary_comparator(zz, 5, kFuel).transcript;
  t.m += 1;
  EXPECT_FALSE(replay_transcript(zz, t, kFuel));
}

TEST(BenchmarkFile, Errors) {
  EXPECT_THROW(parse_benchmarks("function: successor\n", kSuites, kFuel, kBound), ParseError);
  EXPECT_THROW(parse_benchmarks("benchmark: b\nfunction: nope\n", kSuites, kFuel, kBound),
               std::exception);
  auto bs = parse_benchmarks("benchmark: b\nfunction: identity\n", kSuites, kFuel, kBound);
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_TRUE(bs[0].witnesses.empty());
}

}  // namespace
}  // namespace cwb
