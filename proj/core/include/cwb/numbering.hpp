#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cwb/machine.hpp"
#include "cwb/natural.hpp"

namespace cwb {

// Standard numbering of machines over Alphabet::delimited().
//
// A canonical machine has its non-halting states renumbered q0..q{S-1} in
// breadth-first order of first use from the start state, every declared halt
// merged into a single state h, and unreachable states dropped. It is
// serialized to a bit string:
//
//   header   1^S 0, then one oracle bit when S > 0
//   ports    query, yes, no             (only when the oracle bit is set)
//   rules    state read write move next (strictly increasing (state, read))
//
// Every field is a truncated-binary code over its range: states [0,S),
// symbols [0,4), moves S/L/R, targets q0..q{S-1}, h, reject. Bit strings are
// numbered in length-then-lex order, so string w has number
// (binary "1w") - 1.
Machine canonicalize(const Machine& m);
std::string machine_bits(const Machine& m);  // of canonicalize(m)
Natural encode_machine(const Machine& m);
// Total: numbers that do not denote a canonical machine give fallback_machine().
Machine decode_machine(const Natural& n);
Machine fallback_machine();

RunResult simulate_indexed(const Natural& e, const Tape& input,
                           std::uint64_t fuel, const QueryFn& oracle = {});

// Tape numbers k < tape_bound on which machine e halts within fuel.
std::vector<std::uint64_t> halting_table(const Natural& e, std::uint64_t fuel,
                                         std::uint64_t tape_bound);

// { k < tape_bound | machine k halts on tape k within fuel }.
std::vector<std::uint64_t> k_approx(std::uint64_t fuel, std::uint64_t tape_bound);

// Tape number k over the delimited alphabet.
Tape indexed_tape(std::uint64_t k);

}  // namespace cwb
