#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cwb/machine.hpp"

namespace cwb {

enum class Answer { Yes, No, Unknown };

const char* answer_name(Answer a);

// Replayable evidence behind a Yes or No.
struct Certificate {
  enum class Kind {
    None,         // attached to Unknown
    TableEntry,   // explicit membership data
    Halted,       // halting run of `steps` steps
    Unreachable,  // no halt state reachable in the state graph
    Cycle,        // configuration at `steps` recurs after `period` more steps
  };
  Kind kind = Kind::None;
  std::uint64_t steps = 0;
  std::uint64_t period = 0;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// "table", "halted", "unreachable" or "cycle:<start>+<period>".
std::string certificate_reason(const Certificate& c);
std::optional<Certificate> parse_certificate_reason(const std::string& text);

struct QueryAnswer {
  Answer answer = Answer::Unknown;
  Certificate certificate;
  std::optional<Tape> unanswered;  // oracle query that blocked a run
};

// True when no halt (declared or reject) can be reached from the start
// state. Query states may continue at either port.
bool halt_unreachable(const Machine& m);

// Decides a bounded run three ways. Yes: halted within fuel. No: the state
// graph has no reachable halt, or a full configuration repeats within fuel.
// Unknown: neither, or an oracle query went unanswered.
QueryAnswer bounded_halting(const Machine& m, const Tape& input,
                            std::uint64_t fuel, const QueryFn& oracle = {});

// Re-derives a Halted / Unreachable / Cycle certificate from scratch.
bool replay_certificate(const Machine& m, const Tape& input,
                        Answer answer, const Certificate& c,
                        const QueryFn& oracle = {});

struct JumpApprox;

// Membership predicate over tapes. Immutable once built; copies share state.
class Oracle {
 public:
  enum class Kind { Table, BoundedHalting, Chain };

  // Tapes are compared after recentring. With `closed`, absent tapes are
  // answered No, otherwise Unknown.
  static Oracle table(std::unordered_map<Tape, bool, TapeHash> entries,
                      bool closed);
  static Oracle table_of_members(const std::vector<Tape>& members);
  // The empty set.
  static Oracle empty();
  // Diagonal halting: tape t is a member when machine number(t) halts on t.
  // The simulated machines consult the empty oracle.
  static Oracle bounded_halting(std::uint64_t fuel);
  // Answers from a jump approximation: members Yes, non-members No.
  static Oracle chain(std::shared_ptr<const JumpApprox> jump);

  Kind kind() const;
  // Jump level of the set this oracle describes: 0 for tables.
  int level() const;
  QueryAnswer query(const Tape& t) const;
  // Adapter for run(): Yes / No / nullopt.
  QueryFn as_query_fn() const;

 private:
  struct Impl;
  explicit Oracle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// run() against an oracle. Unknown answers stop the run with
// Outcome::OracleUnknown and the offending query.
RunResult run_with_oracle(const Machine& m, const Oracle& o, const Tape& input,
                          std::uint64_t fuel);

struct JumpEntry {
  std::uint64_t element = 0;
  Answer answer = Answer::Unknown;
  Certificate certificate;
  std::optional<Tape> unanswered;  // query that blocked the run, if any
};

// Bounded approximation of C' for C = the set behind `base`, over the
// elements 0..bound-1 of the domain of delimited tapes (element k is
// indexed_tape(k), and machine number k is run on it).
struct JumpApprox {
  int level = 0;
  std::uint64_t fuel = 0;
  std::uint64_t bound = 0;
  std::vector<JumpEntry> entries;  // entries[k].element == k

  std::vector<std::uint64_t> members() const;
  std::vector<std::uint64_t> non_members() const;
  std::vector<std::uint64_t> unknown() const;
  Answer answer(std::uint64_t element) const;
};

JumpApprox jump_approx(const Oracle& base, std::uint64_t fuel,
                       std::uint64_t bound);

// Levels 0..n of the chain starting from the empty set. Level 0 lists every
// element as a non-member.
std::vector<JumpApprox> empty_jump_chain(int n, std::uint64_t fuel,
                                         std::uint64_t bound);

// The oracle describing levels[k] (k = 0 gives Oracle::empty()).
Oracle chain_oracle(const std::vector<JumpApprox>& levels, int k);

// Replays every Yes/No certificate of `jump` against `base`.
bool replay_jump(const JumpApprox& jump, const Oracle& base);

// Certificate table text: `level:`, `fuel:` and `bound:` headers, then
// `yes <element> <steps>` / `no <element> <reason>` lines. Elements not
// listed are Unknown.
std::string format_certificates(const JumpApprox& jump);
JumpApprox parse_certificates(std::string_view text);

}  // namespace cwb
