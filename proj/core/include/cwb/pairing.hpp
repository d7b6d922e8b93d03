#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwb/machine.hpp"
#include "cwb/tape.hpp"

namespace cwb {

// Bijective pairing through tape numbers and the Cantor pairing function.
// Both components must be over the same alphabet; the result is too.
Tape pair_meta(const Tape& a, const Tape& b);
std::pair<Tape, Tape> unpair_meta(const Tape& t);

// Maps a tape over {0,1} or a prefix of the delimited alphabet onto the
// delimited alphabet, sending its blank to `_`.
Tape to_delimited(const Tape& t);

// Single-component form: fold(t) written rightward from the head, then `$`.
Tape enc(const Tape& t);
// Inverse of enc on its image (head at 0, one trailing `$`).
std::optional<Tape> unenc(const Tape& t);

// Self-delimiting pairing over the delimited alphabet: enc(a) to the right
// of the head and enc(b) mirrored to its left, so the left delimiter sits at
// -(|fold b| + 1). Components may themselves contain `$`; unpairing splits at
// the outermost delimiter on each side.
Tape pair_mach(const Tape& a, const Tape& b);
std::optional<std::pair<Tape, Tape>> unpair_mach(const Tape& t);

// Combinator machines over Alphabet::work(). Inputs are enc / pair_mach
// images of components without `$`; behaviour elsewhere is unspecified.
//
//   duplicate      enc(a)          -> pair_mach(a, a)
//   swap           pair_mach(a, b) -> pair_mach(b, a)
//   proj1          pair_mach(a, b) -> enc(a)
//   proj2          pair_mach(a, b) -> enc(b), built as compose(swap, proj1)
//   eq             pair_mach(a, b) -> yes tape if a == b, else the blank tape
//   const(t)       enc(x)          -> enc(t)
//   recognize(t)   enc(x)          -> yes tape if x == t, else the blank tape
Machine machine_duplicate();
Machine machine_swap();
Machine machine_proj1();
Machine machine_proj2();
Machine machine_eq();
Machine machine_const(const Tape& t);
Machine machine_recognize_const(const Tape& t);

// pair_mach(a, b) -> pair_mach(g(a), b) where f, over the delimited
// alphabet, maps enc(a) to enc(g(a)). The left component is hidden behind
// marks while f runs; f sees blanks there and must not write over them.
Machine machine_partial_apply(const Machine& f);

// Reads a yes/no answer off a result tape: the yes tape or enc of it is
// yes, the blank tape or enc of it is no.
std::optional<bool> decode_answer(const Tape& t);

namespace detail {

// Adds states `from`, `from.*` that write `word` rightward from the current
// cell over plain cells, return to that cell and enter `halt`.
void add_writer(MachineBuilder& b, const std::string& from,
                const std::vector<char>& word, const std::string& halt);
// Characters from the head to the last non-blank cell.
std::vector<char> right_word(const Tape& t);

}  // namespace detail

}  // namespace cwb
