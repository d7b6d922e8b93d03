#include "cwb/numbering.hpp"

#include <deque>
#include <map>
#include <optional>
#include <stdexcept>

namespace cwb {
namespace {

constexpr unsigned kSymbols = 4;

unsigned floor_log2(unsigned n) {
  unsigned k = 0;
  while ((2u << k) <= n) ++k;
  return k;
}

// Truncated binary code for v in [0, n).
void put(std::string& out, unsigned v, unsigned n) {
  if (n <= 1) return;
  const unsigned k = floor_log2(n);
  const unsigned u = (2u << k) - n;
  unsigned code = v;
  unsigned bits = k;
  if (v >= u) {
    code = v + u;
    bits = k + 1;
  }
  for (unsigned i = bits; i-- > 0;) out.push_back((code >> i) & 1u ? '1' : '0');
}

class BitReader {
 public:
  explicit BitReader(const std::string& bits) : bits_(bits) {}

  std::optional<unsigned> bit() {
    if (pos_ >= bits_.size()) return std::nullopt;
    return bits_[pos_++] == '1' ? 1u : 0u;
  }

  std::optional<unsigned> get(unsigned n) {
    if (n <= 1) return 0u;
    const unsigned k = floor_log2(n);
    const unsigned u = (2u << k) - n;
    unsigned v = 0;
    for (unsigned i = 0; i < k; ++i) {
      auto b = bit();
      if (!b) return std::nullopt;
      v = (v << 1) | *b;
    }
    if (v < u) return v;
    auto b = bit();
    if (!b) return std::nullopt;
    return ((v << 1) | *b) - u;
  }

  bool done() const { return pos_ == bits_.size(); }

 private:
  const std::string& bits_;
  std::size_t pos_ = 0;
};

std::string canonical_name(StateId s, StateId halt) {
  return s == halt ? "h" : "q" + std::to_string(s);
}

std::string bits_of_number(const Natural& n) {
  Natural v = n + 1;
  std::string bits;
  while (v > 1) {
    bits.push_back(static_cast<unsigned>(v & 1) ? '1' : '0');
    v >>= 1;
  }
  return std::string(bits.rbegin(), bits.rend());
}

Natural number_of_bits(const std::string& bits) {
  Natural v = 1;
  for (char c : bits) v = v * 2 + (c == '1' ? 1 : 0);
  return v - 1;
}

std::optional<Machine> parse_bits(const std::string& bits) {
  BitReader in(bits);
  unsigned states = 0;
  for (;;) {
    auto b = in.bit();
    if (!b) return std::nullopt;
    if (*b == 0) break;
    if (++states > 64) return std::nullopt;
  }
  const auto S = static_cast<StateId>(states);
  const StateId halt = S;
  std::vector<std::string> names;
  for (StateId s = 0; s <= S; ++s) names.push_back(canonical_name(s, halt));
  if (S == 0) {
    if (!in.done()) return std::nullopt;
    return Machine(Alphabet::delimited(), names, halt, {halt}, {});
  }
  const unsigned targets = states + 2;  // q0..q{S-1}, h, reject
  auto target = [&](unsigned v) {
    return v == states + 1 ? kRejectState : static_cast<StateId>(v);
  };
  std::optional<OraclePorts> ports;
  auto has_oracle = in.bit();
  if (!has_oracle) return std::nullopt;
  if (*has_oracle) {
    auto q = in.get(states);
    auto y = in.get(targets);
    auto n = in.get(targets);
    if (!q || !y || !n) return std::nullopt;
    ports = OraclePorts{static_cast<StateId>(*q), target(*y), target(*n)};
    if (ports->yes == kRejectState || ports->no == kRejectState) return std::nullopt;
  }
  std::map<RuleKey, Action> rules;
  std::optional<RuleKey> last;
  while (!in.done()) {
    auto s = in.get(states);
    auto r = in.get(kSymbols);
    auto w = in.get(kSymbols);
    auto mv = in.get(3);
    auto nx = in.get(targets);
    if (!s || !r || !w || !mv || !nx) return std::nullopt;
    RuleKey key{static_cast<StateId>(*s), static_cast<Symbol>(*r)};
    if (last && !(*last < key)) return std::nullopt;
    if (ports && key.first == ports->query) return std::nullopt;
    last = key;
    static constexpr Move kMoves[] = {Move::Stay, Move::Left, Move::Right};
    rules[key] = Action{static_cast<Symbol>(*w), kMoves[*mv], target(*nx)};
  }
  try {
    return Machine(Alphabet::delimited(), names, 0, {halt}, rules, ports);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

unsigned move_code(Move m) {
  switch (m) {
    case Move::Stay: return 0;
    case Move::Left: return 1;
    case Move::Right: return 2;
  }
  return 0;
}

}  // namespace

Machine canonicalize(const Machine& m) {
  constexpr StateId kHaltMark = -3;
  std::map<StateId, StateId> renumber;
  std::deque<StateId> queue;
  auto visit = [&](StateId s) -> StateId {
    if (s == kRejectState) return kRejectState;
    if (m.halt_states().count(s)) return kHaltMark;
    auto [it, inserted] = renumber.try_emplace(s, static_cast<StateId>(renumber.size()));
    if (inserted) queue.push_back(s);
    return it->second;
  };
  visit(m.start());
  std::map<RuleKey, Action> rules;
  std::optional<OraclePorts> ports;
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    const StateId from = renumber.at(s);
    if (m.oracle() && s == m.oracle()->query) {
      StateId y = visit(m.oracle()->yes);
      StateId n = visit(m.oracle()->no);
      ports = OraclePorts{from, y, n};
      continue;
    }
    for (Symbol c = 0; c < m.alphabet().size(); ++c) {
      const Action* a = m.rule(s, c);
      if (a == nullptr) continue;
      rules[{from, c}] = Action{a->write, a->move, visit(a->next)};
    }
  }
  const auto S = static_cast<StateId>(renumber.size());
  const StateId halt = S;
  auto fix = [halt](StateId s) { return s == kHaltMark ? halt : s; };
  for (auto& [key, a] : rules) a.next = fix(a.next);
  if (ports) {
    ports->yes = fix(ports->yes);
    ports->no = fix(ports->no);
  }
  std::vector<std::string> names;
  for (StateId s = 0; s <= S; ++s) names.push_back(canonical_name(s, halt));
  const StateId start = m.halt_states().count(m.start()) ? halt : 0;
  return Machine(m.alphabet(), std::move(names), start, {halt}, std::move(rules),
                 ports);
}

std::string machine_bits(const Machine& machine) {
  if (machine.alphabet() != Alphabet::delimited())
    throw std::invalid_argument("the standard numbering covers machines over '" +
                                Alphabet::delimited().symbols() + "' only");
  const Machine m = canonicalize(machine);
  const auto S = static_cast<unsigned>(m.state_count() - 1);
  std::string out(S, '1');
  out.push_back('0');
  if (S == 0) return out;
  const unsigned targets = S + 2;
  auto target = [S](StateId s) {
    return s == kRejectState ? S + 1 : static_cast<unsigned>(s);
  };
  out.push_back(m.oracle() ? '1' : '0');
  if (m.oracle()) {
    put(out, static_cast<unsigned>(m.oracle()->query), S);
    put(out, target(m.oracle()->yes), targets);
    put(out, target(m.oracle()->no), targets);
  }
  for (const auto& [key, a] : m.rules()) {
    put(out, static_cast<unsigned>(key.first), S);
    put(out, key.second, kSymbols);
    put(out, a.write, kSymbols);
    put(out, move_code(a.move), 3);
    put(out, target(a.next), targets);
  }
  return out;
}

Natural encode_machine(const Machine& m) { return number_of_bits(machine_bits(m)); }

Machine fallback_machine() { return identity_machine(Alphabet::delimited()); }

Machine decode_machine(const Natural& n) {
  const std::string bits = bits_of_number(n);
  auto parsed = parse_bits(bits);
  if (!parsed || machine_bits(*parsed) != bits) return fallback_machine();
  return *parsed;
}

RunResult simulate_indexed(const Natural& e, const Tape& input,
                           std::uint64_t fuel, const QueryFn& oracle) {
  return run(decode_machine(e), input, fuel, oracle);
}

Tape indexed_tape(std::uint64_t k) { return tape_of_number(k, Alphabet::delimited()); }

std::vector<std::uint64_t> halting_table(const Natural& e, std::uint64_t fuel,
                                         std::uint64_t tape_bound) {
  const Machine m = decode_machine(e);
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 0; k < tape_bound; ++k)
    if (run(m, indexed_tape(k), fuel).halted()) out.push_back(k);
  return out;
}

std::vector<std::uint64_t> k_approx(std::uint64_t fuel, std::uint64_t tape_bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 0; k < tape_bound; ++k)
    if (simulate_indexed(k, indexed_tape(k), fuel).halted()) out.push_back(k);
  return out;
}

}  // namespace cwb
