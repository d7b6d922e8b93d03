#include "cwb/enumerability.hpp"

#include <filesystem>
#include <sstream>
#include <unordered_set>

#include "cwb/machine_io.hpp"
#include "cwb/pairing.hpp"

namespace cwb {

Universe tape_universe(const Alphabet& alphabet) {
  return {"tapes", [alphabet](std::uint64_t k) { return tape_of_number(k, alphabet); }};
}

Universe enc_word_universe() {
  return {"enc-words", [](std::uint64_t k) {
            const Natural n = Natural(k) + 1;
            std::string bits;
            for (Natural x = n; x > 1; x >>= 1) bits.push_back(static_cast<unsigned>(x & 1) ? '1' : '0');
            std::string w(bits.rbegin(), bits.rend());
            return parse_tape("^" + w + "$", Alphabet::delimited());
          }};
}

Universe image_universe(const Representation& rep) {
  auto cache = std::make_shared<std::vector<Element>>();
  return {rep.name + "-image", [rep, cache](std::uint64_t k) {
            if (cache->empty()) cache->push_back(rep.domain.first());
            while (cache->size() <= k) {
              auto next = rep.domain.successor(cache->back());
              if (!next) throw std::out_of_range("universe index past a finite domain");
              cache->push_back(*next);
            }
            return rep.encode((*cache)[k]);
          }};
}

Schedule triangular_schedule() {
  return [](std::uint64_t r) { return Budget{r, r}; };
}

const char* acceptance_name(Acceptance::Status s) {
  switch (s) {
    case Acceptance::Status::Accepted: return "accepted";
    case Acceptance::Status::NotFound: return "not-found";
    case Acceptance::Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* inversion_name(Inversion::Status s) {
  switch (s) {
    case Inversion::Status::Found: return "found";
    case Inversion::Status::Inconclusive: return "inconclusive";
    case Inversion::Status::NonInjectiveEvidence: return "non-injective";
  }
  return "?";
}

const char* translation_name(Translation::Status s) {
  switch (s) {
    case Translation::Status::Translated: return "translated";
    case Translation::Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::optional<bool> tm_equal(const Tape& a, const Tape& b, std::uint64_t fuel) {
  static const Machine eq = machine_eq();
  auto pa = unenc(a.over(Alphabet::delimited()));
  auto pb = unenc(b.over(Alphabet::delimited()));
  if (!pa || !pb) return std::nullopt;
  for (const Tape* p : {&*pa, &*pb})
    for (Symbol s : p->cells())
      if (Alphabet::delimited().symbol(s) == '$') return std::nullopt;
  const std::uint64_t len = pa->cells().size() + pb->cells().size() + 4;
  RunResult r = run(eq, pair_mach(*pa, *pb), fuel + 16 * len * len);
  if (!r.halted()) return std::nullopt;
  return decode_answer(r.tape);
}

}  // namespace

Acceptance acceptor_from_enumerator(const Enumerator& e, const Tape& input,
                                    std::uint64_t max_iterations, CompareMode mode) {
  Acceptance out;
  std::unordered_set<Tape, TapeHash> seen;
  Tape cur = e.start;
  for (std::uint64_t i = 0; i < max_iterations; ++i) {
    std::optional<bool> match;
    if (mode == CompareMode::Meta) {
      match = same_tape(cur, input);
    } else {
      try {
        match = tm_equal(cur, input, e.fuel_per_step);
      } catch (const std::invalid_argument&) {
      }
      if (!match) {
        out.index = i;
        out.note = "machine_eq could not compare step " + std::to_string(i);
        return out;
      }
    }
    if (*match) {
      out.status = Acceptance::Status::Accepted;
      out.index = i;
      return out;
    }
    seen.insert(cur);
    RunResult r = run(e.machine, cur, e.fuel_per_step);
    if (!r.halted() || !r.accepted) {
      out.index = i + 1;
      out.note = r.halted() ? "enumerator rejected at step " + std::to_string(i)
                            : "enumerator exhausted its fuel at step " + std::to_string(i);
      return out;
    }
    if (seen.count(r.tape)) {
      out.status = Acceptance::Status::NotFound;
      out.index = i + 1;
      out.note = "enumeration repeats after " + std::to_string(i + 1) + " steps";
      return out;
    }
    cur = std::move(r.tape);
  }
  out.index = max_iterations;
  out.note = "iteration bound reached";
  return out;
}

Dovetail::Dovetail(const Acceptor& a, Universe universe, Schedule schedule)
    : machine_(std::make_shared<const Machine>(a.machine)),
      accept_tape_(a.accept_tape),
      universe_(std::move(universe)),
      schedule_(std::move(schedule)) {}

void Dovetail::run_round() {
  ++round_;
  const Budget b = schedule_(round_);
  while (slots_.size() < b.tape_bound) slots_.push_back({universe_.tape(slots_.size()), {}, false});
  for (std::uint64_t i = 0; i < b.tape_bound; ++i) {
    Slot& s = slots_[i];
    if (s.done) continue;
    if (!s.sim) s.sim.emplace(*machine_, s.tape);
    while (!s.sim->halted() && s.sim->steps() < b.fuel)
      if (!s.sim->step({})) break;
    if (!s.sim->halted()) continue;
    s.done = true;
    if (s.sim->state() != kRejectState && same_tape(s.sim->tape(), accept_tape_))
      pending_.push_back({s.tape, i, round_, s.sim->steps()});
    s.sim.reset();
  }
}

std::optional<Emission> Dovetail::next(std::uint64_t max_rounds) {
  while (pending_.empty() && round_ < max_rounds) run_round();
  if (pending_.empty()) return std::nullopt;
  Emission e = std::move(pending_.front());
  pending_.pop_front();
  return e;
}

std::vector<Emission> enumerator_from_acceptor(const Acceptor& a, const Universe& universe,
                                               std::uint64_t rounds,
                                               const Schedule& schedule) {
  Dovetail d(a, universe, schedule);
  std::vector<Emission> out;
  while (auto e = d.next(rounds)) out.push_back(std::move(*e));
  return out;
}

Inversion invert_via_enumeration(const Machine& f, const Enumerator& dom,
                                 const Tape& target, std::uint64_t budget) {
  Inversion out;
  std::vector<Tape> xs;
  std::vector<std::optional<Simulator>> sims;
  std::vector<bool> done;
  std::unordered_set<Tape, TapeHash> seen;
  bool stream_ended = false;
  for (std::uint64_t r = 1; r <= budget; ++r) {
    out.rounds = r;
    if (!stream_ended && xs.size() < r) {
      if (xs.empty()) {
        xs.push_back(dom.start);
      } else {
        RunResult step = run(dom.machine, xs.back(), dom.fuel_per_step);
        if (!step.halted() || !step.accepted || seen.count(step.tape)) {
          stream_ended = true;
          out.note = step.halted() && step.accepted
                         ? "domain enumeration repeats after " + std::to_string(xs.size())
                         : "domain enumerator stopped after " + std::to_string(xs.size());
        } else {
          xs.push_back(std::move(step.tape));
        }
      }
      if (xs.size() > sims.size()) {
        seen.insert(xs.back());
        sims.emplace_back();
        done.push_back(false);
      }
    }
    std::vector<std::size_t> found;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (done[i]) continue;
      if (!sims[i]) sims[i].emplace(f, xs[i]);
      Simulator& s = *sims[i];
      while (!s.halted() && s.steps() < r)
        if (!s.step({})) break;
      if (!s.halted()) continue;
      done[i] = true;
      if (s.state() != kRejectState && same_tape(s.tape(), target)) found.push_back(i);
      sims[i].reset();
    }
    if (found.empty()) continue;
    out.preimage = xs[found[0]];
    if (found.size() > 1) {
      out.status = Inversion::Status::NonInjectiveEvidence;
      out.other = xs[found[1]];
    } else {
      out.status = Inversion::Status::Found;
    }
    return out;
  }
  if (out.note.empty()) out.note = "no preimage within the budget";
  return out;
}

Translation translate_via_enumerators(const Representation& rx, const Representation& ry,
                                      const Enumerator& ex, const Enumerator& ey,
                                      const Tape& input, std::uint64_t budget) {
  (void)ry;
  Translation out;
  if (!rx.decode(input)) {
    out.note = "input is not in the image of " + rx.name;
    return out;
  }
  Tape x = ex.start, y = ey.start;
  for (std::uint64_t i = 0;; ++i) {
    if (same_tape(x, input)) {
      out.status = Translation::Status::Translated;
      out.tape = y;
      out.index = i;
      return out;
    }
    if (i == budget) break;
    RunResult rx_step = run(ex.machine, x, ex.fuel_per_step);
    RunResult ry_step = run(ey.machine, y, ey.fuel_per_step);
    if (!rx_step.halted() || !ry_step.halted()) {
      out.index = i;
      out.note = "an enumerator exhausted its fuel at step " + std::to_string(i);
      return out;
    }
    x = std::move(rx_step.tape);
    y = std::move(ry_step.tape);
  }
  out.index = budget;
  out.note = "input not reached within the budget";
  return out;
}

Enumerator parse_enumerator(std::string_view text, const std::string& base_dir) {
  std::optional<Machine> machine;
  std::optional<std::string> start;
  std::uint64_t fuel = 100000;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto colon = line.find(':');
    std::istringstream fields(line);
    std::string key, value;
    if (!(fields >> key)) continue;
    if (colon == std::string::npos) throw ParseError(line_no, "expected 'key: value'");
    key = line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    std::istringstream rest(line.substr(colon + 1));
    if (!(rest >> value)) throw ParseError(line_no, "missing value for '" + key + "'");
    if (key == "machine") {
      std::filesystem::path p(value);
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      Machine m = load_machine(p.string());
      machine = machine ? compose(*machine, m) : m;
    } else if (key == "start") {
      start = value;
    } else if (key == "fuel") {
      try {
        fuel = std::stoull(value);
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad fuel '" + value + "'");
      }
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }
  if (!machine) throw ParseError(line_no, "no machine given");
  if (!start) throw ParseError(line_no, "no start tape given");
  const Alphabet& alphabet = Alphabet::delimited().embeds_in(machine->alphabet())
                                 ? Alphabet::delimited()
                                 : machine->alphabet();
  Tape t;
  try {
    t = parse_tape(*start, alphabet);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
  return {*machine, t, fuel};
}

Enumerator load_enumerator(const std::string& path) {
  return parse_enumerator(read_file(path),
                          std::filesystem::path(path).parent_path().string());
}

}  // namespace cwb
