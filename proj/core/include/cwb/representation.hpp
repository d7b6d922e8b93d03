#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cwb/machine.hpp"
#include "cwb/natural.hpp"
#include "cwb/oracle.hpp"

namespace cwb {

using NaturalPair = std::pair<Natural, Natural>;
// A natural, a pair of naturals, a tape, or a finite-set label.
using Element = std::variant<Natural, NaturalPair, Tape, std::string>;

std::string element_to_string(const Element& e);
// Throws std::invalid_argument unless e holds a natural.
const Natural& as_natural(const Element& e);

// Countable set with a fixed enumeration: first() then successor().
class AbstractDomain {
 public:
  enum class Kind { Naturals, NaturalPairs, Tapes, Machines, MachineTapePairs, FiniteSet };
  using Successor = std::function<std::optional<Element>(const Element&)>;

  AbstractDomain(Kind kind, std::string name, Element first, Successor successor,
                 std::vector<std::string> labels = {});

  static AbstractDomain naturals();
  // Cantor order.
  static AbstractDomain natural_pairs();
  // Tape-number order over `alphabet`.
  static AbstractDomain tapes(const Alphabet& alphabet);
  // Machines by number.
  static AbstractDomain machines();
  // (machine number, tape number) in Cantor order.
  static AbstractDomain machine_tape_pairs();
  static AbstractDomain finite(std::vector<std::string> labels);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const Element& first() const { return first_; }
  // nullopt past the end of a finite domain.
  std::optional<Element> successor(const Element& e) const { return successor_(e); }
  const std::vector<std::string>& labels() const { return labels_; }
  // The first n elements (fewer for a finite domain).
  std::vector<Element> prefix(std::uint64_t n) const;

 private:
  Kind kind_;
  std::string name_;
  Element first_;
  Successor successor_;
  std::vector<std::string> labels_;
};

// Raised by encoders that would need a flag no certificate supports.
class UnknownFlag : public std::runtime_error {
 public:
  explicit UnknownFlag(Natural n)
      : std::runtime_error("no certificate for the flag of " + to_string(n)),
        n_(std::move(n)) {}
  const Natural& element() const { return n_; }

 private:
  Natural n_;
};

// Injective map from an abstract domain into tapes.
struct Representation {
  std::string name;
  AbstractDomain domain;
  std::function<Tape(const Element&)> encode;
  std::function<std::optional<Element>(const Tape&)> decode;
};

// ρc: n -> "^1..10$" with n + 1 ones.
Representation rep_unary();
// LSB-first binary then `$`; 0 -> "^0$".
Representation rep_binary_marked();
// Over {0,1}: (n, m) -> n + 1 ones rightward from the head and m + 1 ones
// leftward from cell -1.
Representation rep_pair_unary_twosided();
// Over {0,1}: (n, m) -> binary n with its LSB at the head, binary m mirrored
// with its LSB at cell -1; no delimiters, so zeros past the top bit are blank.
Representation rep_pair_binary_twosided();
// Label i -> ρc(i).
Representation rep_finite(std::vector<std::string> labels);

// The component whose enc is ρc(n).
Tape unary_payload(const Natural& n);

// 1 when `oracle` certifies indexed_tape(n) as a member, 0 when it
// certifies a non-member; UnknownFlag otherwise.
int diagonal_flag(const Oracle& oracle, const Natural& n);

// n -> pair_mach(payload of ρc(flag(n)), payload of ρc(n)), flag(n) = 1
// when the oracle certifies indexed_tape(n) as a member. Encoding an
// uncertified n raises UnknownFlag.
Representation rep_halting_augmented(const Oracle& flag_oracle);

// u^(0) = ρc; u^(k)(n) = pair_mach(payload of ρc(χ^(k)(n)), c) where c is
// the payload of ρc(n) for k = 1 and u^(k-1)(n) itself for k = 2. `chain`
// holds the oracles for χ', ..., χ^(k).
Representation rep_u_k(int k, const std::vector<Oracle>& chain);

using AbstractFunction = std::function<Element(const Element&)>;
using TapeMap = std::function<std::optional<Tape>(const Tape&)>;

// ρa(x) -> ρb(f(x)) on the image of ra, nullopt elsewhere.
TapeMap represent_function(AbstractFunction f, const Representation& ra,
                           const Representation& rb);

struct WitnessVerdict {
  Verdict status = Verdict::Inconclusive;
  std::uint64_t checked = 0;  // samples that matched
  std::uint64_t fuel = 0;
  // Refuted: the mismatch. Inconclusive: the first unresolved sample.
  std::optional<Element> element;
  std::optional<Tape> input;
  std::optional<Tape> expected;
  std::optional<RunResult> actual;
  std::string note;
};

const char* verdict_name(Verdict v);

// Checks run(m, ra(x), fuel) = rb(f(x)) on the first `samples` elements.
// A mismatch refutes; exhausted fuel, unknown oracle answers and unknown
// flags make the verdict inconclusive.
WitnessVerdict check_witness(const Machine& m, const AbstractFunction& f,
                             const Representation& ra, const Representation& rb,
                             std::uint64_t samples, std::uint64_t fuel,
                             const QueryFn& oracle = {});

// Re-runs a Refuted verdict and confirms the mismatch.
bool replay_refutation(const Machine& m, const WitnessVerdict& v,
                       const QueryFn& oracle = {});

// Writes ra(x) on every input in ra's single-component form.
Machine build_constant_machine(const Representation& ra, const Element& x);

// For a finite domain: reads the input along a trie of the encodings,
// erasing it, then writes the encoding of table[label].
Machine build_finite_function_machine(const Representation& ra,
                                      const std::map<std::string, std::string>& table);

// Names: unary, binary-marked, pair-unary-2sided, pair-binary-2sided,
// halting-augmented, u1, u2. The flag representations certify flags with
// the empty-oracle jump chain at the given fuel and bound.
std::vector<std::string> representation_names();
Representation representation_by_name(const std::string& name, std::uint64_t fuel,
                                      std::uint64_t bound);

}  // namespace cwb
