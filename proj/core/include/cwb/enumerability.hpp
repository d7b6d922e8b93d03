#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwb/machine.hpp"
#include "cwb/representation.hpp"

namespace cwb {

// Iterating `machine` from `start` lists a set; each step gets
// `fuel_per_step` steps.
struct Enumerator {
  Machine machine;
  Tape start;
  std::uint64_t fuel_per_step = 100000;
};

// A tape is accepted when the machine halts on it leaving `accept_tape`.
struct Acceptor {
  Machine machine;
  Tape accept_tape;
};

// The tapes scanned by dovetailing, by index.
struct Universe {
  std::string name;
  std::function<Tape(std::uint64_t)> tape;
};

// Tape-number order over `alphabet`.
Universe tape_universe(const Alphabet& alphabet);
// "^w$" for w over {0,1} in length-lex order: index k carries the binary
// digits of k + 1 after its leading 1.
Universe enc_word_universe();
// rep.encode of the first, second, ... domain elements.
Universe image_universe(const Representation& rep);

struct Budget {
  std::uint64_t tape_bound;
  std::uint64_t fuel;
};
using Schedule = std::function<Budget(std::uint64_t round)>;
// Round r: tape_bound = r, fuel = r.
Schedule triangular_schedule();

enum class CompareMode { Meta, PureTM };

struct Acceptance {
  enum class Status { Accepted, NotFound, Inconclusive };
  Status status = Status::Inconclusive;
  std::uint64_t index = 0;  // witness index when accepted, else iterations done
  std::string note;
};

const char* acceptance_name(Acceptance::Status s);

// Compares τ0, f(τ0), f²(τ0), ... with the input. A repeated tape ends a
// finite enumeration with NotFound. PureTM mode decides each comparison by
// running machine_eq on pair_mach of the two payloads.
Acceptance acceptor_from_enumerator(const Enumerator& e, const Tape& input,
                                    std::uint64_t max_iterations,
                                    CompareMode mode = CompareMode::Meta);

struct Emission {
  Tape tape;
  std::uint64_t index;  // position in the universe
  std::uint64_t round;
  std::uint64_t steps;  // steps the acceptance took
};

// Dovetails an acceptor over a universe. Round r advances every tape with
// index below tape_bound(r) to fuel(r) steps in total and emits the newly
// accepted ones in index order. Runs continue across rounds, so for a
// non-decreasing schedule a tape is emitted at the first round whose fuel
// covers its acceptance.
class Dovetail {
 public:
  Dovetail(const Acceptor& a, Universe universe, Schedule schedule = triangular_schedule());

  // Next emission, or nullopt when none arrives by round `max_rounds` (a
  // total, not a count of further rounds).
  std::optional<Emission> next(std::uint64_t max_rounds);
  std::uint64_t rounds_done() const { return round_; }

 private:
  void run_round();

  struct Slot {
    Tape tape;
    std::optional<Simulator> sim;
    bool done = false;
  };

  std::shared_ptr<const Machine> machine_;
  Tape accept_tape_;
  Universe universe_;
  Schedule schedule_;
  std::uint64_t round_ = 0;
  std::vector<Slot> slots_;
  std::deque<Emission> pending_;
};

// All emissions within `rounds` rounds.
std::vector<Emission> enumerator_from_acceptor(const Acceptor& a, const Universe& universe,
                                               std::uint64_t rounds,
                                               const Schedule& schedule = triangular_schedule());

struct Inversion {
  enum class Status { Found, Inconclusive, NonInjectiveEvidence };
  Status status = Status::Inconclusive;
  std::optional<Tape> preimage;
  std::optional<Tape> other;  // second preimage for NonInjectiveEvidence
  std::uint64_t rounds = 0;
  std::string note;
};

const char* inversion_name(Inversion::Status s);

// Round r extends dom's stream to r elements and advances f on each of them
// to r steps. Stops after the first round with a preimage; two distinct
// preimages in that round are reported as NonInjectiveEvidence.
Inversion invert_via_enumeration(const Machine& f, const Enumerator& dom,
                                 const Tape& target, std::uint64_t budget);

struct Translation {
  enum class Status { Translated, Inconclusive };
  Status status = Status::Inconclusive;
  std::optional<Tape> tape;
  std::uint64_t index = 0;
  std::string note;
};

const char* translation_name(Translation::Status s);

// Runs ex and ey in lockstep; when the x side reaches the input at step i
// the y side's step i tape is the translation. Inputs outside rx's image
// are Inconclusive without running anything.
Translation translate_via_enumerators(const Representation& rx, const Representation& ry,
                                      const Enumerator& ex, const Enumerator& ey,
                                      const Tape& input, std::uint64_t budget);

// Enumerator spec file:
//   machine: <path>     one or more; several are composed in order
//   start: <tape literal over the machine alphabet>
//   fuel: <steps per enumeration step>
// Relative paths resolve against `base_dir`.
Enumerator parse_enumerator(std::string_view text, const std::string& base_dir);
Enumerator load_enumerator(const std::string& path);

}  // namespace cwb
