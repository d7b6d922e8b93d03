#include "cwb/machine.hpp"

#include <algorithm>
#include <stdexcept>

namespace cwb {

char move_char(Move m) {
  switch (m) {
    case Move::Left: return 'L';
    case Move::Right: return 'R';
    case Move::Stay: return 'S';
  }
  return '?';
}

Move parse_move(char c) {
  switch (c) {
    case 'L': return Move::Left;
    case 'R': return Move::Right;
    case 'S': return Move::Stay;
  }
  throw std::invalid_argument(std::string("bad move '") + c + "'");
}

Machine::Machine(Alphabet alphabet, std::vector<std::string> state_names,
                 StateId start, std::set<StateId> halt_states,
                 std::map<RuleKey, Action> rules,
                 std::optional<OraclePorts> oracle)
    : alphabet_(std::move(alphabet)),
      names_(std::move(state_names)),
      start_(start),
      halts_(std::move(halt_states)),
      rules_(std::move(rules)),
      oracle_(oracle) {
  const auto n = static_cast<StateId>(names_.size());
  auto valid = [n](StateId s) { return s >= 0 && s < n; };
  if (!valid(start_)) throw std::invalid_argument("start state out of range");
  if (halts_.empty()) throw std::invalid_argument("a machine needs a halt state");
  for (StateId h : halts_)
    if (!valid(h)) throw std::invalid_argument("halt state out of range");
  if (oracle_) {
    if (!valid(oracle_->query) || !valid(oracle_->yes) || !valid(oracle_->no))
      throw std::invalid_argument("oracle port out of range");
    if (halts_.count(oracle_->query))
      throw std::invalid_argument("the query state cannot be a halt state");
  }
  table_.assign(names_.size() * alphabet_.size(), Action{0, Move::Stay, kUndefined});
  for (const auto& [key, action] : rules_) {
    const auto [s, read] = key;
    if (!valid(s)) throw std::invalid_argument("rule state out of range");
    if (halts_.count(s))
      throw std::invalid_argument("halt state '" + names_[s] + "' has a rule");
    if (oracle_ && s == oracle_->query)
      throw std::invalid_argument("the query state cannot have rules");
    if (read >= alphabet_.size() || action.write >= alphabet_.size())
      throw std::invalid_argument("rule symbol outside the alphabet");
    if (action.next != kRejectState && !valid(action.next))
      throw std::invalid_argument("rule target out of range");
    table_[static_cast<std::size_t>(s) * alphabet_.size() + read] = action;
  }
}

const std::string& Machine::state_name(StateId s) const {
  static const std::string reject = "reject";
  if (s == kRejectState) return reject;
  return names_.at(static_cast<std::size_t>(s));
}

std::optional<StateId> Machine::find_state(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<StateId>(it - names_.begin());
}

StateId MachineBuilder::id(const std::string& s) {
  if (s == "reject")
    throw std::invalid_argument("'reject' names the implicit rejecting halt");
  auto [it, inserted] = ids_.try_emplace(s, static_cast<StateId>(names_.size()));
  if (inserted) names_.push_back(s);
  return it->second;
}

MachineBuilder& MachineBuilder::start(const std::string& s) {
  start_ = id(s);
  return *this;
}

MachineBuilder& MachineBuilder::halt(const std::string& s) {
  halts_.insert(id(s));
  return *this;
}

MachineBuilder& MachineBuilder::rule(const std::string& from, char read,
                                     char write, Move m, const std::string& to) {
  const RuleKey key{id(from), alphabet_.index(read)};
  const Action action{alphabet_.index(write), m,
                      to == "reject" ? kRejectState : id(to)};
  auto [it, inserted] = rules_.emplace(key, action);
  if (!inserted && !(it->second == action))
    throw std::invalid_argument("conflicting rules for state '" + from +
                                "' reading '" + read + "'");
  return *this;
}

MachineBuilder& MachineBuilder::pass(const std::string& from,
                                     std::string_view reads, Move m,
                                     const std::string& to) {
  for (char c : reads) rule(from, c, c, m, to);
  return *this;
}

MachineBuilder& MachineBuilder::oracle(const std::string& query,
                                       const std::string& yes,
                                       const std::string& no) {
  oracle_ = OraclePorts{id(query), id(yes), id(no)};
  return *this;
}

Machine MachineBuilder::build() const {
  if (!start_) throw std::invalid_argument("machine has no start state");
  return Machine(alphabet_, names_, *start_, halts_, rules_, oracle_);
}

Configuration step(const Machine& m, const Configuration& c) {
  if (m.is_halt(c.state)) return c;
  if (m.oracle() && c.state == m.oracle()->query)
    throw std::logic_error("step() cannot answer oracle queries");
  const Tape& t = c.tape;
  const Symbol read = t.over(m.alphabet()).at(t.head());
  const Action* a = m.rule(c.state, read);
  if (a == nullptr) return {t, kRejectState, c.steps + 1};
  Tape next = t.over(m.alphabet()).with(t.head(), a->write);
  next = next.with_head(t.head() + static_cast<Position>(a->move));
  if (next.alphabet() != t.alphabet()) {
    bool fits = std::all_of(next.cells().begin(), next.cells().end(),
                            [&](Symbol s) { return s < t.alphabet().size(); });
    if (fits) next = next.over(t.alphabet());
  }
  return {next, a->next, c.steps + 1};
}

Tape Conventions::yes(const Alphabet& a) {
  return Tape(a).with(0, a.index('1'));
}

Tape Conventions::no(const Alphabet& a) { return Tape(a); }

Simulator::Simulator(const Machine& m, const Tape& input)
    : m_(&m), input_alphabet_(input.alphabet()), state_(m.start()) {
  if (!input.alphabet().embeds_in(m.alphabet()))
    throw std::invalid_argument("input alphabet '" + input.alphabet().symbols() +
                                "' does not match machine alphabet '" +
                                m.alphabet().symbols() + "'");
  Position lo = input.head(), hi = input.head();
  if (!input.all_blank()) {
    lo = std::min(lo, input.min_pos());
    hi = std::max(hi, input.max_pos());
  }
  base_ = lo - 8;
  buf_.assign(static_cast<std::size_t>(hi - lo + 17), 0);
  for (Position p = input.all_blank() ? 1 : input.min_pos();
       !input.all_blank() && p <= input.max_pos(); ++p)
    buf_[static_cast<std::size_t>(p - base_)] = input.at(p);
  head_ = input.head() - base_;
  start_head_ = head_;
}

Symbol& Simulator::cell(Position p) {
  if (p < 0) {
    const auto grow = static_cast<std::size_t>(std::max<Position>(-p, 64) +
                                               static_cast<Position>(buf_.size()) / 2);
    buf_.insert(buf_.begin(), grow, Symbol{0});
    base_ -= static_cast<Position>(grow);
    head_ += static_cast<Position>(grow);
    start_head_ += static_cast<Position>(grow);
    p += static_cast<Position>(grow);
  } else if (p >= static_cast<Position>(buf_.size())) {
    buf_.resize(static_cast<std::size_t>(p) + 64 + buf_.size() / 2, Symbol{0});
  }
  return buf_[static_cast<std::size_t>(p)];
}

bool Simulator::step(const QueryFn& oracle) {
  pending_ = false;
  if (halted()) return false;
  const auto& ports = m_->oracle();
  if (ports && state_ == ports->query) {
    std::optional<bool> answer = false;
    if (oracle) answer = oracle(tape());
    if (!answer) {
      pending_ = true;
      return false;
    }
    state_ = *answer ? ports->yes : ports->no;
    ++steps_;
    return true;
  }
  Symbol& c = cell(head_);
  const Action* a = m_->rule(state_, c);
  ++steps_;
  if (a == nullptr) {
    state_ = kRejectState;
    return true;
  }
  cell(head_) = a->write;
  head_ += static_cast<Position>(a->move);
  cell(head_);
  excursion_ = std::max(excursion_, std::abs(head_ - start_head_));
  state_ = a->next;
  return true;
}

Tape Simulator::tape() const {
  Tape t = Tape::from_cells(m_->alphabet(), base_, buf_, head_ + base_);
  bool fits = std::all_of(t.cells().begin(), t.cells().end(), [&](Symbol s) {
    return s < input_alphabet_.size();
  });
  return fits ? t.over(input_alphabet_) : t;
}

bool Simulator::same_configuration(const Simulator& other) const {
  if (state_ != other.state_ || head() != other.head()) return false;
  const Position lo = std::min(base_, other.base_);
  const Position hi = std::max(base_ + static_cast<Position>(buf_.size()),
                               other.base_ + static_cast<Position>(other.buf_.size()));
  auto at = [](const Simulator& s, Position p) -> Symbol {
    Position i = p - s.base_;
    if (i < 0 || i >= static_cast<Position>(s.buf_.size())) return 0;
    return s.buf_[static_cast<std::size_t>(i)];
  };
  for (Position p = lo; p < hi; ++p)
    if (at(*this, p) != at(other, p)) return false;
  return true;
}

RunResult run(const Machine& m, const Tape& input, std::uint64_t fuel,
              const QueryFn& oracle) {
  Simulator sim(m, input);
  RunResult r;
  while (!sim.halted() && sim.steps() < fuel) {
    if (!sim.step(oracle)) break;
  }
  r.tape = sim.tape();
  r.steps = sim.steps();
  r.state = sim.state();
  r.excursion = sim.excursion();
  if (sim.waiting_on_oracle()) {
    r.outcome = Outcome::OracleUnknown;
    r.query = r.tape;
  } else if (sim.halted()) {
    r.outcome = Outcome::Halted;
    r.accepted = sim.state() != kRejectState;
  } else {
    r.outcome = Outcome::Exhausted;
  }
  return r;
}

Position head_excursion(const Machine& m, const Tape& input, std::uint64_t fuel) {
  return run(m, input, fuel).excursion;
}

namespace {

const Alphabet& wider_of(const Alphabet& a, const Alphabet& b) {
  if (a.embeds_in(b)) return b;
  if (b.embeds_in(a)) return a;
  throw std::invalid_argument("cannot compose machines over alphabets '" +
                              a.symbols() + "' and '" + b.symbols() + "'");
}

}  // namespace

Machine compose(const Machine& f, const Machine& g) {
  if (f.oracle() && g.oracle())
    throw std::invalid_argument("cannot compose two oracle machines");
  const Alphabet& alphabet = wider_of(f.alphabet(), g.alphabet());
  const auto nf = static_cast<StateId>(f.state_count());
  std::vector<std::string> names;
  for (StateId s = 0; s < nf; ++s) names.push_back("f." + f.state_name(s));
  for (StateId s = 0; s < static_cast<StateId>(g.state_count()); ++s)
    names.push_back("g." + g.state_name(s));

  const StateId g_start = nf + g.start();
  auto from_f = [&](StateId s) {
    if (s == kRejectState) return kRejectState;
    return f.halt_states().count(s) ? g_start : s;
  };
  auto from_g = [&](StateId s) { return s == kRejectState ? s : nf + s; };

  std::map<RuleKey, Action> rules;
  for (const auto& [key, a] : f.rules())
    rules[{key.first, key.second}] = Action{a.write, a.move, from_f(a.next)};
  for (const auto& [key, a] : g.rules())
    rules[{from_g(key.first), key.second}] = Action{a.write, a.move, from_g(a.next)};

  std::set<StateId> halts;
  for (StateId h : g.halt_states()) halts.insert(from_g(h));

  std::optional<OraclePorts> ports;
  if (f.oracle())
    ports = OraclePorts{f.oracle()->query, from_f(f.oracle()->yes),
                        from_f(f.oracle()->no)};
  if (g.oracle())
    ports = OraclePorts{from_g(g.oracle()->query), from_g(g.oracle()->yes),
                        from_g(g.oracle()->no)};
  return Machine(alphabet, std::move(names), from_f(f.start()), std::move(halts),
                 std::move(rules), ports);
}

Machine branch_on_oracle(const Machine& yes, const Machine& no) {
  if (yes.oracle() || no.oracle())
    throw std::invalid_argument("branches of an oracle query cannot query");
  const Alphabet& alphabet = wider_of(yes.alphabet(), no.alphabet());
  std::vector<std::string> names{"query"};
  std::map<RuleKey, Action> rules;
  std::set<StateId> halts;
  auto add = [&](const Machine& m, const std::string& prefix) {
    const auto base = static_cast<StateId>(names.size());
    for (StateId s = 0; s < static_cast<StateId>(m.state_count()); ++s)
      names.push_back(prefix + m.state_name(s));
    auto shift = [base](StateId s) { return s == kRejectState ? s : base + s; };
    for (const auto& [key, a] : m.rules())
      rules[{shift(key.first), key.second}] = Action{a.write, a.move, shift(a.next)};
    for (StateId h : m.halt_states()) halts.insert(shift(h));
    return shift(m.start());
  };
  const StateId y = add(yes, "yes.");
  const StateId n = add(no, "no.");
  return Machine(alphabet, std::move(names), 0, std::move(halts), std::move(rules),
                 OraclePorts{0, y, n});
}

Machine identity_machine(const Alphabet& a) {
  return MachineBuilder(a).start("h").halt("h").build();
}

OriginCheck check_origin_convention(const Machine& m,
                                    const std::vector<Tape>& samples,
                                    std::uint64_t fuel) {
  std::optional<Tape> unresolved;
  for (const Tape& t : samples) {
    RunResult r = run(m, t, fuel);
    if (!r.halted()) {
      if (!unresolved) unresolved = t;
      continue;
    }
    if (r.tape.head() != t.head()) return {Verdict::Refuted, t};
  }
  if (unresolved) return {Verdict::Inconclusive, unresolved};
  return {Verdict::Verified, std::nullopt};
}

}  // namespace cwb
