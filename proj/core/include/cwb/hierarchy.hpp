#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cwb/oracle.hpp"
#include "cwb/representation.hpp"

namespace cwb {

// verify_transformable with the witness consulting `r`. Unknown oracle
// answers make the verdict inconclusive.
WitnessVerdict relativized_verify_transformable(const Representation& rx,
                                                const Representation& ry,
                                                const Machine& witness, const Oracle& r,
                                                std::uint64_t samples, std::uint64_t fuel);

// A decider says no by halting in the reject state or by leaving the no
// tape (blank, or enc of blank); any other halt says yes.
std::optional<bool> decider_answer(const RunResult& r);

struct Falsification {
  bool found = false;
  std::uint64_t element = 0;
  Answer certified = Answer::Unknown;
  Certificate certificate;
  std::optional<bool> candidate_answer;
  std::uint64_t compared = 0;  // certified elements the candidate answered
  std::uint64_t skipped = 0;   // certified elements it left unanswered
};

// Scans the certified members and non-members of jump_approx(c, fuel,
// bound) in element order and returns the first one the candidate gets
// wrong. The candidate runs on indexed_tape(k) consulting `c`, or
// `consult` when given. found == false claims nothing beyond the bound.
Falsification jump_decider_falsifier(const Machine& candidate, const Oracle& c,
                                     std::uint64_t bound, std::uint64_t fuel,
                                     const std::optional<Oracle>& consult = std::nullopt);

// Overload over a jump approximation computed elsewhere.
Falsification jump_decider_falsifier(const Machine& candidate, const JumpApprox& jump,
                                     const Oracle& consult, std::uint64_t fuel);

// Answers yes / no by querying its oracle with the whole input.
Machine oracle_decider();

}  // namespace cwb
