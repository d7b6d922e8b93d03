#include "cwb/hierarchy.hpp"

#include "cwb/numbering.hpp"
#include "cwb/pairing.hpp"

namespace cwb {

WitnessVerdict relativized_verify_transformable(const Representation& rx,
                                                const Representation& ry,
                                                const Machine& witness, const Oracle& r,
                                                std::uint64_t samples, std::uint64_t fuel) {
  return check_witness(witness, [](const Element& e) { return e; }, rx, ry, samples, fuel,
                       r.as_query_fn());
}

std::optional<bool> decider_answer(const RunResult& r) {
  if (!r.halted()) return std::nullopt;
  if (!r.accepted) return false;
  return decode_answer(r.tape).value_or(true);
}

Falsification jump_decider_falsifier(const Machine& candidate, const JumpApprox& jump,
                                     const Oracle& consult, std::uint64_t fuel) {
  Falsification out;
  const QueryFn q = consult.as_query_fn();
  for (const JumpEntry& e : jump.entries) {
    if (e.answer == Answer::Unknown) continue;
    const auto said = decider_answer(run(candidate, indexed_tape(e.element), fuel, q));
    if (!said) {
      ++out.skipped;
      continue;
    }
    ++out.compared;
    if (*said != (e.answer == Answer::Yes)) {
      out.found = true;
      out.element = e.element;
      out.certified = e.answer;
      out.certificate = e.certificate;
      out.candidate_answer = said;
      return out;
    }
  }
  return out;
}

Falsification jump_decider_falsifier(const Machine& candidate, const Oracle& c,
                                     std::uint64_t bound, std::uint64_t fuel,
                                     const std::optional<Oracle>& consult) {
  return jump_decider_falsifier(candidate, jump_approx(c, fuel, bound), consult.value_or(c),
                                fuel);
}

Machine oracle_decider() {
  MachineBuilder yes(Alphabet::delimited());
  yes.start("mark").halt("h");
  for (char c : std::string("_01$")) yes.rule("mark", c, '1', Move::Stay, "h");
  MachineBuilder no(Alphabet::delimited());
  no.start("r").halt("h");
  return branch_on_oracle(yes.build(), no.build());
}

}  // namespace cwb
