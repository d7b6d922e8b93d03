#pragma once

#include <ostream>
#include <random>
#include <string>

#include "cwb/machine.hpp"
#include "cwb/tape.hpp"

namespace cwb {

inline void PrintTo(const Tape& t, std::ostream* os) {
  *os << '"' << render_tape(t) << "\" over " << t.alphabet().symbols()
      << " cells [" << t.min_pos() << ", " << t.max_pos() << "]";
}

}  // namespace cwb

namespace cwb::testing {

inline constexpr unsigned kSeed = 20240611;

// Random machine over `a` with up to `states` working states plus h.
// Each (state, symbol) gets a rule with probability 0.85; targets include h.
inline Machine random_machine(std::mt19937_64& rng, const Alphabet& a, int states) {
  MachineBuilder b(a);
  b.start("q0").halt("h");
  std::uniform_int_distribution<int> st(0, states);  // states == h
  std::uniform_int_distribution<int> sym(0, static_cast<int>(a.size()) - 1);
  std::uniform_int_distribution<int> mv(0, 2);
  std::bernoulli_distribution present(0.85);
  for (int q = 0; q < states; ++q) {
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (!present(rng)) continue;
      const int to = st(rng);
      const int k = mv(rng);
      const Move m = k == 0 ? Move::Left : k == 1 ? Move::Right : Move::Stay;
      b.rule("q" + std::to_string(q), a.symbol(static_cast<Symbol>(s)),
             a.symbol(static_cast<Symbol>(sym(rng))), m,
             to == states ? "h" : "q" + std::to_string(to));
    }
  }
  return b.build();
}

// Random tape with support in [-radius, radius], head at 0.
inline Tape random_tape(std::mt19937_64& rng, const Alphabet& a, int radius) {
  std::uniform_int_distribution<int> sym(0, static_cast<int>(a.size()) - 1);
  Tape t(a);
  for (Position p = -radius; p <= radius; ++p) t = t.with(p, static_cast<Symbol>(sym(rng)));
  return t;
}

}  // namespace cwb::testing
