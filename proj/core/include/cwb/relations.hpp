#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cwb/machine.hpp"
#include "cwb/representation.hpp"

namespace cwb {

// run(witness, rx(x)) = ry(x) on the first `samples` elements.
WitnessVerdict verify_transformable(const Representation& rx, const Representation& ry,
                                    const Machine& witness, std::uint64_t samples,
                                    std::uint64_t fuel);

// A function with witness machines in some representations. Without a
// codomain the function maps the domain to itself and each witness outputs
// in its own representation; otherwise witnesses output in `codomain`.
struct Benchmark {
  std::string name;
  AbstractFunction function;
  std::optional<Representation> codomain;
  std::map<std::string, Machine> witnesses;  // representation name -> machine
};

// check_witness for the witness registered under `rep.name`.
std::optional<WitnessVerdict> check_benchmark(const Benchmark& b, const Representation& rep,
                                              std::uint64_t samples, std::uint64_t fuel);

// Evidence that everything the benchmarks compute in one representation is
// computed in the other.
enum class Direction { VerifiedOnSamples, Refuted, NoWitness, Unresolved };
enum class RelationVerdict {
  EquivalentEvidence,
  StrongerEvidenceX,
  StrongerEvidenceY,
  IncomparableEvidence,
  Unknown,
};

const char* direction_name(Direction d);
const char* relation_verdict_name(RelationVerdict v);

struct BenchmarkRow {
  std::string name;
  std::optional<WitnessVerdict> x;  // nullopt: no witness
  std::optional<WitnessVerdict> y;
};

struct RelationReport {
  std::string x_name;
  std::string y_name;
  std::vector<BenchmarkRow> rows;
  // xy: every benchmark verified on the y side is verified on the x side.
  Direction xy = Direction::Unresolved;
  Direction yx = Direction::Unresolved;
  std::string xy_reason;  // offending benchmark, if any
  std::string yx_reason;
  RelationVerdict verdict = RelationVerdict::Unknown;
};

// Verdict from the two directions; Unresolved anywhere gives Unknown.
RelationVerdict combine_directions(Direction xy, Direction yx);

RelationReport strength_report(const Representation& rx, const Representation& ry,
                               const std::vector<Benchmark>& benchmarks,
                               std::uint64_t samples, std::uint64_t fuel);

struct EndorepReport {
  RelationReport direct;   // rx against ry
  RelationReport endorep;  // rx∘ry⁻¹ on ry's image against the identity there
  bool matches = false;
};

// Builds rx∘ry⁻¹ over the tapes of ry's image, carries every benchmark over
// (rx witnesses serve the endorepresentation, ry witnesses the identity)
// and compares both reports' verdicts.
EndorepReport endorep_strength_check(const Representation& rx, const Representation& ry,
                                     const std::vector<Benchmark>& benchmarks,
                                     std::uint64_t samples, std::uint64_t fuel);

// A comparator on rep_pair_binary_twosided answering ν (accepting halt) on
// (n, n) after s_n steps also answers ν on (m, n), m = n + 2^{s_n}.
struct RefutationTranscript {
  Natural n;
  std::uint64_t s_n = 0;
  Natural m;
  Tape input_nn;
  Tape input_mn;
  RunResult run_nn;
  RunResult run_mn;
};

struct Refutation {
  std::optional<RefutationTranscript> transcript;  // nullopt: not applicable
  std::string note;
};

Refutation refute_binary_comparator(const Machine& candidate, const Natural& start_n,
                                    std::uint64_t fuel);

// Re-simulates both runs and checks m != n, m = n mod 2^{s_n}, agreement
// of the two inputs on every cell the first run could read, the excursion
// bound and the shared wrong answer.
bool replay_transcript(const Machine& candidate, const RefutationTranscript& t,
                       std::uint64_t fuel, std::string* why = nullptr);

// Registry for benchmark files: successor, double, identity, diagonal-flag.
// diagonal-flag has codomain ρc and certifies flags with the level-1 chain
// at the given fuel and bound.
Benchmark benchmark_function(const std::string& function, std::uint64_t fuel,
                             std::uint64_t bound);

// Benchmark suite file, one block per benchmark:
//   benchmark: <name>
//   function: <registry name>
//   witness: <representation name> <machine file>
// Relative paths resolve against `base_dir`.
std::vector<Benchmark> parse_benchmarks(std::string_view text, const std::string& base_dir,
                                        std::uint64_t fuel, std::uint64_t bound);
std::vector<Benchmark> load_benchmarks(const std::string& path, std::uint64_t fuel,
                                       std::uint64_t bound);

}  // namespace cwb
