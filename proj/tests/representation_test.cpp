#include <gtest/gtest.h>

#include "cwb/library.hpp"
#include "cwb/numbering.hpp"
#include "cwb/pairing.hpp"
#include "cwb/relations.hpp"
#include "cwb/representation.hpp"
#include "support.hpp"

namespace cwb {
namespace {

const Alphabet& D = Alphabet::delimited();

Element nat(unsigned n) { return Natural(n); }
std::string lit(const Representation& r, unsigned n) { return render_tape(r.encode(nat(n))); }

Natural succ_fn(const Natural& n) { return n + 1; }
AbstractFunction successor() {
  return [](const Element& e) -> Element { return succ_fn(as_natural(e)); };
}

TEST(Unary, Encoding) {
  Representation u = rep_unary();
  EXPECT_EQ(lit(u, 0), "^10$");
  EXPECT_EQ(lit(u, 3), "^11110$");
  EXPECT_EQ(as_natural(*u.decode(parse_tape("^110$", D))), 1);
  EXPECT_FALSE(u.decode(parse_tape("^101$", D)));
  EXPECT_FALSE(u.decode(parse_tape("^0$", D)));
}

TEST(BinaryMarked, Encoding) {
  Representation b = rep_binary_marked();
  EXPECT_EQ(lit(b, 0), "^0$");
  EXPECT_EQ(lit(b, 5), "^101$");
  EXPECT_EQ(lit(b, 6), "^011$");
  for (unsigned n = 0; n <= 1000; ++n) ASSERT_EQ(as_natural(*b.decode(b.encode(nat(n)))), n);
  EXPECT_FALSE(b.decode(parse_tape("^010$", D)));  // leading zero at the top
}

TEST(TwoSided, UnaryAndBinary) {
  Representation u = rep_pair_unary_twosided();
  EXPECT_EQ(render_tape(u.encode(NaturalPair{2, 0})), "1^111");
  Representation b = rep_pair_binary_twosided();
  EXPECT_EQ(render_tape(b.encode(NaturalPair{5, 5})), "101^101");
  for (unsigned n = 1; n < 40; ++n) {
    for (unsigned k = 0; (1u << k) <= n; ++k) {
      Tape nn = b.encode(NaturalPair{n, n});
      Tape mn = b.encode(NaturalPair{n + (1u << k), n});
      for (Position p = -static_cast<Position>(k); p < static_cast<Position>(k); ++p)
        EXPECT_EQ(nn.at(p), mn.at(p)) << n << " " << k << " " << p;
    }
  }
  for (unsigned n = 0; n < 20; ++n)
    for (unsigned m = 0; m < 20; ++m) {
      auto back = u.decode(u.encode(NaturalPair{n, m}));
      ASSERT_TRUE(back);
      EXPECT_EQ(std::get<NaturalPair>(*back), (NaturalPair{n, m}));
    }
}

class Augmented : public ::testing::Test {
 protected:
  static constexpr std::uint64_t kFuel = 1000;
  static constexpr std::uint64_t kBound = 501;
  static void SetUpTestSuite() {
    chain_ = new std::vector<JumpApprox>(empty_jump_chain(2, kFuel, kBound));
  }
  static void TearDownTestSuite() { delete chain_; }
  static Oracle level(int k) { return chain_oracle(*chain_, k); }
  static std::vector<JumpApprox>* chain_;
};
std::vector<JumpApprox>* Augmented::chain_ = nullptr;

TEST_F(Augmented, FlagComponentFollowsCertificate) {
  Representation r = rep_halting_augmented(level(1));
  Machine reader = flag_reader();
  EXPECT_EQ(reader.rules().size(), 2u);
  int certified = 0;
  for (unsigned n = 0; n < kBound; ++n) {
    const Answer a = (*chain_)[1].answer(n);
    if (a == Answer::Unknown) {
      EXPECT_THROW(r.encode(nat(n)), UnknownFlag) << n;
      continue;
    }
    ++certified;
    Tape t = r.encode(nat(n));
    auto parts = unpair_mach(t);
    ASSERT_TRUE(parts);
    EXPECT_EQ(enc(parts->first), rep_unary().encode(nat(a == Answer::Yes ? 1 : 0)));
    EXPECT_EQ(enc(parts->second), rep_unary().encode(nat(n)));
    EXPECT_EQ(as_natural(*r.decode(t)), n);
    RunResult run_r = run(reader, t, 10);
    ASSERT_TRUE(run_r.halted());
    EXPECT_EQ(run_r.accepted, a == Answer::Yes) << n;
  }
  EXPECT_GT(certified, 0);
}

TEST_F(Augmented, NeverGuessesPastTheBound) {
  Representation r = rep_halting_augmented(level(1));
  EXPECT_THROW(r.encode(nat(kBound)), UnknownFlag);
  EXPECT_THROW(r.encode(nat(kBound + 100)), UnknownFlag);
}

TEST_F(Augmented, ProjectionRecoversUnary) {
  Representation r = rep_halting_augmented(level(1));
  WitnessVerdict v = verify_transformable(r, rep_unary(), machine_proj2(), 60, 3000000);
  EXPECT_EQ(v.status, Verdict::Verified) << v.note;
}

TEST_F(Augmented, SuccessorNeedsAnUncertifiedFlag) {
  Representation r = rep_halting_augmented(level(1));
  bool exhibited = false;
  for (unsigned n = 0; n + 1 <= kBound && !exhibited; ++n) {
    try {
      r.encode(nat(n));
    } catch (const UnknownFlag&) {
      continue;
    }
    try {
      r.encode(nat(n + 1));
    } catch (const UnknownFlag& e) {
      EXPECT_EQ(e.element(), n + 1);
      exhibited = true;
    }
  }
  EXPECT_TRUE(exhibited);
}

TEST_F(Augmented, HierarchyNesting) {
  Representation u0 = rep_u_k(0, {});
  Representation u1 = rep_u_k(1, {level(1)});
  Representation u2 = rep_u_k(2, {level(1), level(2)});
  Machine p2 = machine_proj2();
  for (unsigned n = 0; n < 40; ++n) {
    EXPECT_EQ(u0.encode(nat(n)), rep_unary().encode(nat(n)));
    Tape t1, t2;
    try {
      t1 = u1.encode(nat(n));
      t2 = u2.encode(nat(n));
    } catch (const UnknownFlag&) {
      continue;
    }
    RunResult r = run(p2, t1, 3000000);
    ASSERT_TRUE(r.halted());
    EXPECT_EQ(r.tape, u0.encode(nat(n)));
    EXPECT_EQ(unpair_mach(t2)->second, t1);
    EXPECT_EQ(as_natural(*u2.decode(t2)), n);
  }
}

TEST(RepresentFunction, Examples) {
  Representation u = rep_unary(), b = rep_binary_marked();
  TapeMap id = represent_function([](const Element& e) { return e; }, u, u);
  EXPECT_EQ(id(u.encode(nat(4))), u.encode(nat(4)));
  TapeMap s = represent_function(successor(), u, u);
  EXPECT_EQ(s(u.encode(nat(4))), u.encode(nat(5)));
  TapeMap dbl = represent_function(
      [](const Element& e) -> Element { return as_natural(e) * 2; }, u, b);
  EXPECT_EQ(render_tape(*dbl(parse_tape("^110$", D))), "^01$");
  EXPECT_FALSE(dbl(parse_tape("^101$", D)));
}

TEST(CheckWitness, Examples) {
  Representation u = rep_unary();
  auto identity = [](const Element& e) { return e; };
  EXPECT_EQ(check_witness(identity_machine(), identity, u, u, 50, 10).status, Verdict::Verified);
  EXPECT_EQ(check_witness(identity_machine(), identity, rep_binary_marked(),
                          rep_binary_marked(), 50, 10).status,
            Verdict::Verified);
  WitnessVerdict ok = check_witness(unary_successor(), successor(), u, u, 200, 100000);
  EXPECT_EQ(ok.status, Verdict::Verified);
  EXPECT_EQ(ok.checked, 200u);

  auto plus2 = [](const Element& e) -> Element { return as_natural(e) + 2; };
  WitnessVerdict bad = check_witness(unary_successor(), plus2, u, u, 200, 100000);
  ASSERT_EQ(bad.status, Verdict::Refuted);
  EXPECT_EQ(as_natural(*bad.element), 0);
  EXPECT_TRUE(replay_refutation(unary_successor(), bad));

  WitnessVerdict starved = check_witness(unary_successor(), successor(), u, u, 20, 3);
  EXPECT_EQ(starved.status, Verdict::Inconclusive);
}

TEST(ConstantMachine, Examples) {
  Representation u = rep_unary(), b = rep_binary_marked();
  Machine zero = build_constant_machine(u, nat(0));
  for (unsigned n = 0; n < 30; ++n) {
    RunResult r = run(zero, u.encode(nat(n)), 100000);
    ASSERT_TRUE(r.halted());
    EXPECT_EQ(render_tape(r.tape), "^10$");
  }
  Machine five = build_constant_machine(b, nat(5));
  EXPECT_EQ(check_witness(five, [](const Element&) -> Element { return Natural(5); }, b, b, 50,
                          100000)
                .status,
            Verdict::Verified);
  Machine six = compose(five, binary_increment());
  EXPECT_EQ(check_witness(six, [](const Element&) -> Element { return Natural(6); }, b, b, 50,
                          100000)
                .status,
            Verdict::Verified);
}

TEST(FiniteFunctionMachine, Tables) {
  auto check = [](const std::vector<std::string>& labels,
                  const std::map<std::string, std::string>& table) {
    Representation r = rep_finite(labels);
    Machine m = build_finite_function_machine(r, table);
    auto f = [&](const Element& e) -> Element { return table.at(std::get<std::string>(e)); };
    return check_witness(m, f, r, r, labels.size(), 10000).status;
  };
  EXPECT_EQ(check({"a", "b", "c"}, {{"a", "a"}, {"b", "b"}, {"c", "c"}}), Verdict::Verified);
  EXPECT_EQ(check({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Verdict::Verified);
  EXPECT_EQ(check({"p", "q", "r", "s", "t"},
                  {{"p", "t"}, {"q", "t"}, {"r", "p"}, {"s", "q"}, {"t", "s"}}),
            Verdict::Verified);
}

TEST(Domains, Prefixes) {
  auto pairs = AbstractDomain::natural_pairs().prefix(6);
  ASSERT_EQ(pairs.size(), 6u);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [x, y] = std::get<NaturalPair>(pairs[i]);
    EXPECT_EQ(cantor_pair(x, y), i);
  }
  EXPECT_EQ(AbstractDomain::finite({"a", "b"}).prefix(10).size(), 2u);
  auto tapes = AbstractDomain::tapes(D).prefix(20);
  for (std::size_t i = 0; i < tapes.size(); ++i)
    EXPECT_EQ(tape_number(std::get<Tape>(tapes[i])), i);
}

}  // namespace
}  // namespace cwb
