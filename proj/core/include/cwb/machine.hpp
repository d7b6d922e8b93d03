#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cwb/tape.hpp"

namespace cwb {

enum class Move : std::int8_t { Left = -1, Stay = 0, Right = 1 };

char move_char(Move m);
Move parse_move(char c);

using StateId = int;
// Entered when no quintuple matches; a halting, non-accepting state.
inline constexpr StateId kRejectState = -1;

struct Action {
  Symbol write = 0;
  Move move = Move::Stay;
  StateId next = kRejectState;
  friend bool operator==(const Action&, const Action&) = default;
};

struct OraclePorts {
  StateId query;
  StateId yes;
  StateId no;
  friend bool operator==(const OraclePorts&, const OraclePorts&) = default;
};

using RuleKey = std::pair<StateId, Symbol>;

// Deterministic single-tape machine given as a partial quintuple table.
class Machine {
 public:
  Machine(Alphabet alphabet, std::vector<std::string> state_names,
          StateId start, std::set<StateId> halt_states,
          std::map<RuleKey, Action> rules,
          std::optional<OraclePorts> oracle = std::nullopt);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return names_.size(); }
  const std::string& state_name(StateId s) const;
  std::optional<StateId> find_state(const std::string& name) const;
  StateId start() const { return start_; }
  const std::set<StateId>& halt_states() const { return halts_; }
  bool is_halt(StateId s) const {
    return s == kRejectState || halts_.count(s) != 0;
  }
  const std::optional<OraclePorts>& oracle() const { return oracle_; }
  const std::map<RuleKey, Action>& rules() const { return rules_; }

  // nullptr when no quintuple is defined for (state, symbol).
  const Action* rule(StateId s, Symbol read) const {
    const Action& a = table_[static_cast<std::size_t>(s) * alphabet_.size() + read];
    return a.next == kUndefined ? nullptr : &a;
  }

  friend bool operator==(const Machine& a, const Machine& b) {
    return a.alphabet_ == b.alphabet_ && a.names_ == b.names_ &&
           a.start_ == b.start_ && a.halts_ == b.halts_ &&
           a.rules_ == b.rules_ && a.oracle_ == b.oracle_;
  }

 private:
  static constexpr StateId kUndefined = -2;

  Alphabet alphabet_;
  std::vector<std::string> names_;
  StateId start_;
  std::set<StateId> halts_;
  std::map<RuleKey, Action> rules_;
  std::optional<OraclePorts> oracle_;
  std::vector<Action> table_;
};

// Assembles machines from named states and character symbols.
class MachineBuilder {
 public:
  explicit MachineBuilder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  MachineBuilder& start(const std::string& s);
  MachineBuilder& halt(const std::string& s);
  MachineBuilder& rule(const std::string& from, char read, char write, Move m,
                       const std::string& to);
  // One rule per symbol in `reads`, each rewriting the symbol it read.
  MachineBuilder& pass(const std::string& from, std::string_view reads, Move m,
                       const std::string& to);
  MachineBuilder& oracle(const std::string& query, const std::string& yes,
                         const std::string& no);
  StateId id(const std::string& s);

  Machine build() const;

 private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::map<std::string, StateId> ids_;
  std::optional<StateId> start_;
  std::set<StateId> halts_;
  std::map<RuleKey, Action> rules_;
  std::optional<OraclePorts> oracle_;
};

struct Configuration {
  Tape tape;
  StateId state;
  std::uint64_t steps = 0;
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Small-step semantics: applies the quintuple for the scanned symbol, or
// moves to kRejectState when there is none.
Configuration step(const Machine& m, const Configuration& c);

// yes / no tapes: "^1" and the blank tape.
struct Conventions {
  static Tape yes(const Alphabet& a = Alphabet::binary());
  static Tape no(const Alphabet& a = Alphabet::binary());
};

enum class Outcome { Halted, Exhausted, OracleUnknown };

struct RunResult {
  Outcome outcome = Outcome::Exhausted;
  Tape tape;                 // final tape, or the tape when the run stopped
  std::uint64_t steps = 0;
  StateId state = kRejectState;
  bool accepted = false;     // halted in a declared halt state
  Position excursion = 0;    // max |head - initial head|
  std::optional<Tape> query; // the unanswered query for OracleUnknown

  bool halted() const { return outcome == Outcome::Halted; }
};

// Answers an oracle query about the whole current tape; nullopt = unknown.
using QueryFn = std::function<std::optional<bool>(const Tape&)>;

// Fuel-bounded execution over a dense buffer. The input alphabet must embed
// in the machine alphabet; the result is reported over the input alphabet
// when every final symbol belongs to it.
class Simulator {
 public:
  Simulator(const Machine& m, const Tape& input);

  // Returns false when the machine is already halted.
  bool step(const QueryFn& oracle);
  bool halted() const { return m_->is_halt(state_); }
  bool waiting_on_oracle() const { return pending_; }
  StateId state() const { return state_; }
  std::uint64_t steps() const { return steps_; }
  Position head() const { return head_ + base_; }
  Position excursion() const { return excursion_; }
  Tape tape() const;
  bool same_configuration(const Simulator& other) const;

 private:
  Symbol& cell(Position p);

  const Machine* m_;
  Alphabet input_alphabet_;
  std::vector<Symbol> buf_;
  Position base_ = 0;  // position of buf_[0]
  Position head_ = 0;  // index into buf_
  Position start_head_ = 0;
  StateId state_;
  std::uint64_t steps_ = 0;
  Position excursion_ = 0;
  bool pending_ = false;
};

// Oracle ports consult `oracle`; without one every query is answered "no".
RunResult run(const Machine& m, const Tape& input, std::uint64_t fuel,
              const QueryFn& oracle = {});

// Head excursion of a fuel-bounded run.
Position head_excursion(const Machine& m, const Tape& input, std::uint64_t fuel);

// Sequential composition: every declared halt of f continues at g's start.
Machine compose(const Machine& f, const Machine& g);

// Starts with an oracle query on the whole tape and continues as `yes` or
// `no`. Neither branch may have oracle ports.
Machine branch_on_oracle(const Machine& yes, const Machine& no);

// Halts immediately on every input.
Machine identity_machine(const Alphabet& a = Alphabet::delimited());

enum class Verdict { Verified, Refuted, Inconclusive };

struct OriginCheck {
  Verdict verdict;
  std::optional<Tape> sample;  // offending or unresolved sample
};

// Samples whether every halting run ends with the head back at position 0.
OriginCheck check_origin_convention(const Machine& m,
                                    const std::vector<Tape>& samples,
                                    std::uint64_t fuel);

}  // namespace cwb
