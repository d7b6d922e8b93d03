#include "cwb/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cwb/machine_io.hpp"
#include "cwb/numbering.hpp"

namespace cwb {

const char* answer_name(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "?";
}

std::string certificate_reason(const Certificate& c) {
  switch (c.kind) {
    case Certificate::Kind::None: return "none";
    case Certificate::Kind::TableEntry: return "table";
    case Certificate::Kind::Halted: return "halted";
    case Certificate::Kind::Unreachable: return "unreachable";
    case Certificate::Kind::Cycle:
      return "cycle:" + std::to_string(c.steps) + "+" + std::to_string(c.period);
  }
  return "?";
}

std::optional<Certificate> parse_certificate_reason(const std::string& text) {
  if (text == "table") return Certificate{Certificate::Kind::TableEntry};
  if (text == "unreachable") return Certificate{Certificate::Kind::Unreachable};
  if (text.rfind("cycle:", 0) != 0) return std::nullopt;
  const std::string rest = text.substr(6);
  const auto plus = rest.find('+');
  if (plus == std::string::npos) return std::nullopt;
  try {
    std::size_t used = 0;
    Certificate c{Certificate::Kind::Cycle};
    c.steps = std::stoull(rest.substr(0, plus), &used);
    if (used != plus) return std::nullopt;
    c.period = std::stoull(rest.substr(plus + 1), &used);
    if (used != rest.size() - plus - 1 || c.period == 0) return std::nullopt;
    return c;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool halt_unreachable(const Machine& m) {
  std::vector<bool> seen(m.state_count(), false);
  std::deque<StateId> queue{m.start()};
  seen[static_cast<std::size_t>(m.start())] = true;
  auto visit = [&](StateId s) {
    if (m.is_halt(s)) return false;
    if (!seen[static_cast<std::size_t>(s)]) {
      seen[static_cast<std::size_t>(s)] = true;
      queue.push_back(s);
    }
    return true;
  };
  if (m.is_halt(m.start())) return false;
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    if (m.oracle() && s == m.oracle()->query) {
      if (!visit(m.oracle()->yes) || !visit(m.oracle()->no)) return false;
      continue;
    }
    for (Symbol c = 0; c < m.alphabet().size(); ++c) {
      const Action* a = m.rule(s, c);
      if (a == nullptr || !visit(a->next)) return false;
    }
  }
  return true;
}

QueryAnswer bounded_halting(const Machine& m, const Tape& input,
                            std::uint64_t fuel, const QueryFn& oracle) {
  if (halt_unreachable(m)) return {Answer::No, {Certificate::Kind::Unreachable}};
  // Brent's cycle detection on full configurations.
  Simulator hare(m, input);
  Simulator tortoise = hare;
  std::uint64_t power = 1, lam = 0;
  for (;;) {
    if (hare.halted())
      return {Answer::Yes, {Certificate::Kind::Halted, hare.steps()}};
    if (hare.steps() >= fuel) return {};
    if (!hare.step(oracle)) return {Answer::Unknown, {}, hare.tape()};
    ++lam;
    if (!hare.halted() && hare.same_configuration(tortoise)) break;
    if (lam == power) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
  }
  Simulator a(m, input);
  Simulator b(m, input);
  for (std::uint64_t i = 0; i < lam; ++i) b.step(oracle);
  std::uint64_t mu = 0;
  while (!a.same_configuration(b)) {
    a.step(oracle);
    b.step(oracle);
    ++mu;
  }
  return {Answer::No, {Certificate::Kind::Cycle, mu, lam}};
}

bool replay_certificate(const Machine& m, const Tape& input, Answer answer,
                        const Certificate& c, const QueryFn& oracle) {
  using K = Certificate::Kind;
  switch (c.kind) {
    case K::None: return answer == Answer::Unknown;
    case K::TableEntry: return answer != Answer::Unknown;
    case K::Halted: {
      if (answer != Answer::Yes) return false;
      RunResult r = run(m, input, c.steps, oracle);
      return r.halted() && r.steps == c.steps;
    }
    case K::Unreachable: return answer == Answer::No && halt_unreachable(m);
    case K::Cycle: {
      if (answer != Answer::No || c.period == 0) return false;
      Simulator sim(m, input);
      while (sim.steps() < c.steps)
        if (!sim.step(oracle) || sim.halted()) return false;
      const Simulator mark = sim;
      while (sim.steps() < c.steps + c.period)
        if (!sim.step(oracle) || sim.halted()) return false;
      return sim.same_configuration(mark);
    }
  }
  return false;
}

namespace {

std::optional<std::uint64_t> element_of(const Tape& t) {
  const Alphabet& d = Alphabet::delimited();
  if (!t.alphabet().embeds_in(d)) {
    for (Symbol s : t.cells())
      if (s >= d.size()) return std::nullopt;
  }
  const Natural n = tape_number(t.over(d).recentred());
  if (n > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(n);
}

}  // namespace

struct Oracle::Impl {
  Kind kind;
  std::unordered_map<Tape, bool, TapeHash> table;
  bool closed = true;
  std::uint64_t fuel = 0;
  std::shared_ptr<const JumpApprox> jump;
};

Oracle Oracle::table(std::unordered_map<Tape, bool, TapeHash> entries,
                     bool closed) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Table;
  for (auto& [t, v] : entries) impl->table[t.recentred()] = v;
  impl->closed = closed;
  return Oracle(std::move(impl));
}

Oracle Oracle::table_of_members(const std::vector<Tape>& members) {
  std::unordered_map<Tape, bool, TapeHash> entries;
  for (const Tape& t : members) entries[t] = true;
  return table(std::move(entries), true);
}

Oracle Oracle::empty() { return table({}, true); }

Oracle Oracle::bounded_halting(std::uint64_t fuel) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::BoundedHalting;
  impl->fuel = fuel;
  return Oracle(std::move(impl));
}

Oracle Oracle::chain(std::shared_ptr<const JumpApprox> jump) {
  if (!jump) throw std::invalid_argument("chain oracle needs a jump approximation");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Chain;
  impl->jump = std::move(jump);
  return Oracle(std::move(impl));
}

Oracle::Kind Oracle::kind() const { return impl_->kind; }

int Oracle::level() const {
  switch (impl_->kind) {
    case Kind::Table: return 0;
    case Kind::BoundedHalting: return 1;
    case Kind::Chain: return impl_->jump->level;
  }
  return 0;
}

QueryAnswer Oracle::query(const Tape& t) const {
  const Certificate table_entry{Certificate::Kind::TableEntry};
  switch (impl_->kind) {
    case Kind::Table: {
      auto it = impl_->table.find(t.recentred());
      if (it != impl_->table.end())
        return {it->second ? Answer::Yes : Answer::No, table_entry};
      if (impl_->closed) return {Answer::No, table_entry};
      return {};
    }
    case Kind::BoundedHalting: {
      auto k = element_of(t);
      if (!k) return {Answer::No, table_entry};
      return cwb::bounded_halting(decode_machine(*k), indexed_tape(*k), impl_->fuel,
                                  Oracle::empty().as_query_fn());
    }
    case Kind::Chain: {
      auto k = element_of(t);
      if (!k) return {Answer::No, table_entry};
      const JumpApprox& j = *impl_->jump;
      if (*k >= j.entries.size()) return {};
      const JumpEntry& e = j.entries[*k];
      return {e.answer, e.certificate, e.unanswered};
    }
  }
  return {};
}

QueryFn Oracle::as_query_fn() const {
  return [o = *this](const Tape& t) -> std::optional<bool> {
    const QueryAnswer a = o.query(t);
    if (a.answer == Answer::Unknown) return std::nullopt;
    return a.answer == Answer::Yes;
  };
}

RunResult run_with_oracle(const Machine& m, const Oracle& o, const Tape& input,
                          std::uint64_t fuel) {
  return run(m, input, fuel, o.as_query_fn());
}

std::vector<std::uint64_t> JumpApprox::members() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : entries)
    if (e.answer == Answer::Yes) out.push_back(e.element);
  return out;
}

std::vector<std::uint64_t> JumpApprox::non_members() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : entries)
    if (e.answer == Answer::No) out.push_back(e.element);
  return out;
}

std::vector<std::uint64_t> JumpApprox::unknown() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : entries)
    if (e.answer == Answer::Unknown) out.push_back(e.element);
  return out;
}

Answer JumpApprox::answer(std::uint64_t element) const {
  return element < entries.size() ? entries[element].answer : Answer::Unknown;
}

JumpApprox jump_approx(const Oracle& base, std::uint64_t fuel,
                       std::uint64_t bound) {
  JumpApprox j{base.level() + 1, fuel, bound, {}};
  const QueryFn q = base.as_query_fn();
  j.entries.reserve(bound);
  for (std::uint64_t k = 0; k < bound; ++k) {
    QueryAnswer a = bounded_halting(decode_machine(k), indexed_tape(k), fuel, q);
    j.entries.push_back({k, a.answer, a.certificate, a.unanswered});
  }
  return j;
}

std::vector<JumpApprox> empty_jump_chain(int n, std::uint64_t fuel,
                                         std::uint64_t bound) {
  if (n < 0 || n > 2) throw std::invalid_argument("jump level must be 0, 1 or 2");
  std::vector<JumpApprox> levels;
  JumpApprox zero{0, fuel, bound, {}};
  for (std::uint64_t k = 0; k < bound; ++k)
    zero.entries.push_back({k, Answer::No, {Certificate::Kind::TableEntry}, {}});
  levels.push_back(std::move(zero));
  for (int k = 1; k <= n; ++k)
    levels.push_back(jump_approx(chain_oracle(levels, k - 1), fuel, bound));
  return levels;
}

Oracle chain_oracle(const std::vector<JumpApprox>& levels, int k) {
  if (k == 0) return Oracle::empty();
  return Oracle::chain(std::make_shared<JumpApprox>(levels.at(static_cast<std::size_t>(k))));
}

bool replay_jump(const JumpApprox& jump, const Oracle& base) {
  const QueryFn q = base.as_query_fn();
  for (const JumpEntry& e : jump.entries) {
    if (e.answer == Answer::Unknown) continue;
    if (jump.level == 0) {
      if (e.answer != Answer::No) return false;
      continue;
    }
    if (!replay_certificate(decode_machine(e.element), indexed_tape(e.element),
                            e.answer, e.certificate, q))
      return false;
  }
  return true;
}

std::string format_certificates(const JumpApprox& jump) {
  std::ostringstream out;
  out << "level: " << jump.level << "\n";
  out << "fuel: " << jump.fuel << "\n";
  out << "bound: " << jump.bound << "\n";
  for (const JumpEntry& e : jump.entries) {
    if (e.answer == Answer::Yes) {
      out << "yes " << e.element << ' ' << e.certificate.steps << "\n";
    } else if (e.answer == Answer::No) {
      out << "no " << e.element << ' ' << certificate_reason(e.certificate) << "\n";
    }
  }
  return out.str();
}

JumpApprox parse_certificates(std::string_view text) {
  JumpApprox j;
  std::optional<std::uint64_t> bound;
  std::vector<JumpEntry> listed;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto number = [&](const std::string& s) -> std::uint64_t {
    try {
      std::size_t used = 0;
      auto v = std::stoull(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(line_no, "expected a natural number, got '" + s + "'");
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string tok; words >> tok;) w.push_back(tok);
    if (w.empty()) continue;
    if (w.size() == 2 && w[0] == "level:") {
      j.level = static_cast<int>(number(w[1]));
    } else if (w.size() == 2 && w[0] == "fuel:") {
      j.fuel = number(w[1]);
    } else if (w.size() == 2 && w[0] == "bound:") {
      bound = number(w[1]);
    } else if (w.size() == 3 && w[0] == "yes") {
      listed.push_back({number(w[1]), Answer::Yes,
                        {Certificate::Kind::Halted, number(w[2])}, {}});
    } else if (w.size() == 3 && w[0] == "no") {
      auto c = parse_certificate_reason(w[2]);
      if (!c) throw ParseError(line_no, "unknown reason '" + w[2] + "'");
      listed.push_back({number(w[1]), Answer::No, *c, {}});
    } else {
      throw ParseError(line_no, "expected 'yes <element> <steps>' or 'no <element> <reason>'");
    }
  }
  std::uint64_t n = 0;
  for (const auto& e : listed) n = std::max(n, e.element + 1);
  j.bound = bound.value_or(n);
  if (n > j.bound) throw ParseError(line_no, "element beyond the declared bound");
  for (std::uint64_t k = 0; k < j.bound; ++k) j.entries.push_back({k});
  for (auto& e : listed) {
    if (j.entries[e.element].answer != Answer::Unknown)
      throw ParseError(line_no, "element " + std::to_string(e.element) + " listed twice");
    j.entries[e.element] = e;
  }
  return j;
}

}  // namespace cwb
