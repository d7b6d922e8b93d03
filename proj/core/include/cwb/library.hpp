#pragma once

#include <string>
#include <vector>

#include "cwb/machine.hpp"

namespace cwb {

// Bundled machines. Unless noted they run over Alphabet::delimited() (or
// its work extension) and leave the head at the origin.

// ρc(n) = "^1..10$" (n+1 ones) -> ρc(n+1).
Machine unary_successor();
// LSB-first binary digits then `$` -> the same for n+1.
Machine binary_increment();
// MSB-first word w then `$` -> the next word starting with 1 in length-lex
// order ("1" -> "10" -> "11" -> "100" ...).
Machine msb_increment();

// Acceptors. Members end on the yes tape, non-members on the blank tape.
Machine evens_acceptor();          // ρc(n) with n even
Machine starts_with_one_acceptor();  // "^w$" with w starting with 1

// Reads the flag of pair_mach(flag, n) in the halting-augmented
// representation: two quintuples, accepts iff the flag is 1.
Machine flag_reader();

// Zigzag comparator over {0,1} (blank 0) plus marks: compares cell i with
// cell -(i+1) and accepts when both are blank. Correct on the two-sided
// unary pairs, fooled on the two-sided binary pairs.
Machine zigzag_comparator();

// Over {0,1}: accepts immediately.
Machine always_yes_binary();

// A one-state machine over Alphabet::delimited() that moves left forever.
Machine left_mover();

// Registry of the machines above plus the pairing combinators and
// evens-step (the successor composed with itself).
std::vector<std::string> bundled_machine_names();
Machine bundled_machine(const std::string& name);

}  // namespace cwb
