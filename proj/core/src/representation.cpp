#include "cwb/representation.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "cwb/numbering.hpp"
#include "cwb/pairing.hpp"

namespace cwb {

std::string element_to_string(const Element& e) {
  struct Visitor {
    std::string operator()(const Natural& n) const { return to_string(n); }
    std::string operator()(const NaturalPair& p) const {
      return "(" + to_string(p.first) + "," + to_string(p.second) + ")";
    }
    std::string operator()(const Tape& t) const { return render_tape(t); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, e);
}

const Natural& as_natural(const Element& e) {
  if (const Natural* n = std::get_if<Natural>(&e)) return *n;
  throw std::invalid_argument("expected a natural, got " + element_to_string(e));
}

namespace {

const NaturalPair& as_pair(const Element& e) {
  if (const NaturalPair* p = std::get_if<NaturalPair>(&e)) return *p;
  throw std::invalid_argument("expected a pair, got " + element_to_string(e));
}

std::optional<Element> next_natural(const Element& e) {
  return Element{as_natural(e) + 1};
}

std::optional<Element> next_cantor(const Element& e) {
  const auto& [x, y] = as_pair(e);
  if (x == 0) return Element{NaturalPair{y + 1, Natural(0)}};
  return Element{NaturalPair{x - 1, y + 1}};
}

std::optional<std::uint64_t> small(const Natural& n) {
  if (n > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(n);
}

const Alphabet& sigma4() { return Alphabet::delimited(); }

Tape from_word(const Alphabet& a, std::string_view word, Position first) {
  std::vector<Symbol> cells;
  for (char c : word) cells.push_back(a.index(c));
  return Tape::from_cells(a, first, std::move(cells), 0);
}

// Right-only word at the head, or nullopt if the tape has cells left of it.
std::optional<std::string> right_only(const Tape& t, const Alphabet& a) {
  if (t.alphabet() != a || t.head() != 0) return std::nullopt;
  if (t.all_blank()) return std::string();
  if (t.min_pos() < 0) return std::nullopt;
  std::string w;
  for (Position p = 0; p <= t.max_pos(); ++p) w.push_back(t.char_at(p));
  return w;
}

Tape unary_tape(const Natural& n) {
  auto k = small(n);
  if (!k || *k > (1u << 24)) throw std::invalid_argument("unary code too long");
  return from_word(sigma4(), std::string(*k + 1, '1') + "0$", 0);
}

std::optional<Natural> unary_value(const Tape& t) {
  auto w = right_only(t, sigma4());
  if (!w || w->size() < 3 || w->substr(w->size() - 2) != "0$") return std::nullopt;
  for (std::size_t i = 0; i + 2 < w->size(); ++i)
    if ((*w)[i] != '1') return std::nullopt;
  return Natural(w->size() - 3);
}

}  // namespace

AbstractDomain::AbstractDomain(Kind kind, std::string name, Element first,
                               Successor successor, std::vector<std::string> labels)
    : kind_(kind),
      name_(std::move(name)),
      first_(std::move(first)),
      successor_(std::move(successor)),
      labels_(std::move(labels)) {}

AbstractDomain AbstractDomain::naturals() {
  return {Kind::Naturals, "naturals", Element{Natural(0)}, next_natural};
}

AbstractDomain AbstractDomain::natural_pairs() {
  return {Kind::NaturalPairs, "natural-pairs",
          Element{NaturalPair{Natural(0), Natural(0)}}, next_cantor};
}

AbstractDomain AbstractDomain::tapes(const Alphabet& alphabet) {
  return {Kind::Tapes, "tapes", Element{Tape(alphabet)},
          [alphabet](const Element& e) -> std::optional<Element> {
            const Tape& t = std::get<Tape>(e);
            return Element{tape_of_number(tape_number(t) + 1, alphabet)};
          }};
}

AbstractDomain AbstractDomain::machines() {
  return {Kind::Machines, "machines", Element{Natural(0)}, next_natural};
}

AbstractDomain AbstractDomain::machine_tape_pairs() {
  return {Kind::MachineTapePairs, "machine-tape-pairs",
          Element{NaturalPair{Natural(0), Natural(0)}}, next_cantor};
}

AbstractDomain AbstractDomain::finite(std::vector<std::string> labels) {
  if (labels.empty()) throw std::invalid_argument("a finite domain needs a label");
  auto copy = labels;
  return {Kind::FiniteSet, "finite", Element{labels.front()},
          [copy](const Element& e) -> std::optional<Element> {
            const auto& s = std::get<std::string>(e);
            for (std::size_t i = 0; i + 1 < copy.size(); ++i)
              if (copy[i] == s) return Element{copy[i + 1]};
            return std::nullopt;
          },
          std::move(labels)};
}

std::vector<Element> AbstractDomain::prefix(std::uint64_t n) const {
  std::vector<Element> out;
  if (n == 0) return out;
  std::optional<Element> e = first_;
  while (e && out.size() < n) {
    out.push_back(*e);
    if (out.size() < n) e = successor_(*e);
  }
  return out;
}

Representation rep_unary() {
  return {"unary", AbstractDomain::naturals(),
          [](const Element& e) { return unary_tape(as_natural(e)); },
          [](const Tape& t) -> std::optional<Element> {
            auto n = unary_value(t);
            if (!n) return std::nullopt;
            return Element{*n};
          }};
}

Representation rep_binary_marked() {
  return {"binary-marked", AbstractDomain::naturals(),
          [](const Element& e) {
            Natural n = as_natural(e);
            std::string w;
            do {
              w.push_back(static_cast<unsigned>(n & 1) ? '1' : '0');
              n >>= 1;
            } while (n > 0);
            return from_word(sigma4(), w + "$", 0);
          },
          [](const Tape& t) -> std::optional<Element> {
            auto w = right_only(t, sigma4());
            if (!w || w->size() < 2 || w->back() != '$') return std::nullopt;
            w->pop_back();
            if (w->size() > 1 && w->back() == '0') return std::nullopt;
            Natural n = 0;
            for (auto it = w->rbegin(); it != w->rend(); ++it) {
              if (*it != '0' && *it != '1') return std::nullopt;
              n = n * 2 + (*it == '1' ? 1 : 0);
            }
            return Element{n};
          }};
}

Representation rep_pair_unary_twosided() {
  const Alphabet& a = Alphabet::binary();
  return {"pair-unary-2sided", AbstractDomain::natural_pairs(),
          [a](const Element& e) {
            const auto& [n, m] = as_pair(e);
            auto sn = small(n), sm = small(m);
            if (!sn || !sm) throw std::invalid_argument("unary code too long");
            std::vector<Symbol> cells(*sn + *sm + 2, 1);
            return Tape::from_cells(a, -static_cast<Position>(*sm + 1), std::move(cells), 0);
          },
          [a](const Tape& t) -> std::optional<Element> {
            if (t.alphabet() != a || t.head() != 0 || t.all_blank()) return std::nullopt;
            if (t.min_pos() > -1 || t.max_pos() < 0) return std::nullopt;
            for (Symbol s : t.cells())
              if (s != 1) return std::nullopt;
            return Element{NaturalPair{Natural(t.max_pos()), Natural(-t.min_pos() - 1)}};
          }};
}

Representation rep_pair_binary_twosided() {
  const Alphabet& a = Alphabet::binary();
  return {"pair-binary-2sided", AbstractDomain::natural_pairs(),
          [a](const Element& e) {
            const auto& [n, m] = as_pair(e);
            Tape t(a);
            Natural x = n;
            for (Position p = 0; x > 0; ++p, x >>= 1)
              if (static_cast<unsigned>(x & 1)) t = t.with(p, 1);
            x = m;
            for (Position p = -1; x > 0; --p, x >>= 1)
              if (static_cast<unsigned>(x & 1)) t = t.with(p, 1);
            return t;
          },
          [a](const Tape& t) -> std::optional<Element> {
            if (t.alphabet() != a || t.head() != 0) return std::nullopt;
            Natural n = 0, m = 0;
            if (!t.all_blank()) {
              for (Position p = t.max_pos(); p >= 0; --p) n = n * 2 + t.at(p);
              for (Position p = t.min_pos(); p <= -1; ++p) m = m * 2 + t.at(p);
            }
            return Element{NaturalPair{n, m}};
          }};
}

Representation rep_finite(std::vector<std::string> labels) {
  AbstractDomain domain = AbstractDomain::finite(labels);
  auto index = [labels](const std::string& s) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == s) return i;
    return std::nullopt;
  };
  return {"finite", domain,
          [index](const Element& e) {
            auto i = index(std::get<std::string>(e));
            if (!i) throw std::invalid_argument("unknown label " + element_to_string(e));
            return unary_tape(*i);
          },
          [labels](const Tape& t) -> std::optional<Element> {
            auto n = unary_value(t);
            if (!n || *n >= labels.size()) return std::nullopt;
            return Element{labels[static_cast<std::size_t>(*n)]};
          }};
}

Tape unary_payload(const Natural& n) { return *unenc(unary_tape(n)); }

int diagonal_flag(const Oracle& o, const Natural& n) {
  auto k = small(n);
  if (!k) throw UnknownFlag(n);
  const QueryAnswer a = o.query(indexed_tape(*k));
  if (a.answer == Answer::Unknown) throw UnknownFlag(n);
  return a.answer == Answer::Yes ? 1 : 0;
}

namespace {

std::optional<int> flag_of_payload(const Tape& payload) {
  auto f = unary_value(enc(payload));
  if (!f || *f > 1) return std::nullopt;
  return static_cast<int>(*f);
}

// Wraps `inner` with the flag of `oracle` as the first pair component.
Representation with_flag(std::string name, const Oracle& oracle,
                         const Representation& inner, bool inner_is_payload) {
  return {std::move(name), AbstractDomain::naturals(),
          [oracle, inner, inner_is_payload](const Element& e) {
            const Natural& n = as_natural(e);
            const int flag = diagonal_flag(oracle, n);
            Tape rest = inner.encode(e);
            if (inner_is_payload) rest = *unenc(rest);
            return pair_mach(unary_payload(flag), rest);
          },
          [oracle, inner, inner_is_payload](const Tape& t) -> std::optional<Element> {
            auto parts = unpair_mach(t);
            if (!parts) return std::nullopt;
            auto flag = flag_of_payload(parts->first);
            auto n = inner.decode(inner_is_payload ? enc(parts->second) : parts->second);
            if (!flag || !n) return std::nullopt;
            try {
              if (diagonal_flag(oracle, as_natural(*n)) != *flag) return std::nullopt;
            } catch (const UnknownFlag&) {
              return std::nullopt;
            }
            return n;
          }};
}

}  // namespace

Representation rep_halting_augmented(const Oracle& flag_oracle) {
  return with_flag("halting-augmented", flag_oracle, rep_unary(), true);
}

Representation rep_u_k(int k, const std::vector<Oracle>& chain) {
  if (k < 0 || k > 2) throw std::invalid_argument("u^(k) is provided for k <= 2");
  if (chain.size() < static_cast<std::size_t>(k))
    throw std::invalid_argument("u^(k) needs k oracles");
  Representation r = rep_unary();
  r.name = "u0";
  if (k >= 1) r = with_flag("u1", chain[0], r, true);
  if (k >= 2) r = with_flag("u2", chain[1], r, false);
  return r;
}

TapeMap represent_function(AbstractFunction f, const Representation& ra,
                           const Representation& rb) {
  return [f = std::move(f), ra, rb](const Tape& t) -> std::optional<Tape> {
    auto x = ra.decode(t);
    if (!x) return std::nullopt;
    return rb.encode(f(*x));
  };
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Refuted: return "refuted";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

WitnessVerdict check_witness(const Machine& m, const AbstractFunction& f,
                             const Representation& ra, const Representation& rb,
                             std::uint64_t samples, std::uint64_t fuel,
                             const QueryFn& oracle) {
  WitnessVerdict v;
  v.fuel = fuel;
  bool unresolved = false;
  auto note_unresolved = [&](const Element& x, std::string why) {
    if (unresolved) return;
    unresolved = true;
    v.element = x;
    v.note = std::move(why);
  };
  for (const Element& x : ra.domain.prefix(samples)) {
    Tape in, expected;
    try {
      in = ra.encode(x);
      expected = rb.encode(f(x));
    } catch (const UnknownFlag& e) {
      note_unresolved(x, e.what());
      continue;
    }
    RunResult r = run(m, in, fuel, oracle);
    if (r.outcome == Outcome::Exhausted) {
      note_unresolved(x, "fuel exhausted");
      continue;
    }
    if (r.outcome == Outcome::OracleUnknown) {
      note_unresolved(x, "oracle could not answer " + render_tape(*r.query));
      continue;
    }
    if (r.tape != expected) {
      v.status = Verdict::Refuted;
      v.element = x;
      v.input = in;
      v.expected = expected;
      v.actual = r;
      v.note = "output differs";
      return v;
    }
    ++v.checked;
  }
  v.status = unresolved ? Verdict::Inconclusive : Verdict::Verified;
  return v;
}

bool replay_refutation(const Machine& m, const WitnessVerdict& v, const QueryFn& oracle) {
  if (v.status != Verdict::Refuted || !v.input || !v.expected || !v.actual) return false;
  RunResult r = run(m, *v.input, v.fuel, oracle);
  return r.halted() && r.tape == v.actual->tape && r.steps == v.actual->steps &&
         r.tape != *v.expected;
}

Machine build_constant_machine(const Representation& ra, const Element& x) {
  auto payload = unenc(ra.encode(x));
  if (!payload)
    throw std::invalid_argument(ra.name + " does not encode into single-component form");
  return machine_const(*payload);
}

namespace {

std::string state_tag(char c) {
  switch (c) {
    case '_': return "B";
    case '$': return "D";
    default: return std::string(1, c);
  }
}

}  // namespace

Machine build_finite_function_machine(const Representation& ra,
                                      const std::map<std::string, std::string>& table) {
  if (ra.domain.kind() != AbstractDomain::Kind::FiniteSet)
    throw std::invalid_argument("the table lemma needs a finite domain");
  MachineBuilder b(Alphabet::work());
  b.start("t").halt("h");
  std::map<std::string, std::string> written;  // target label -> writer state
  for (const std::string& label : ra.domain.labels()) {
    auto it = table.find(label);
    if (it == table.end()) throw std::invalid_argument("table misses label '" + label + "'");
    const Tape in = ra.encode(Element{label});
    const Tape out = ra.encode(Element{it->second});
    if (!unenc(in) || !unenc(out))
      throw std::invalid_argument(ra.name + " does not encode into single-component form");
    const std::string writer = "out." + std::to_string(
        std::distance(ra.domain.labels().begin(),
                      std::find(ra.domain.labels().begin(), ra.domain.labels().end(),
                                it->second)));
    if (written.emplace(it->second, writer).second)
      detail::add_writer(b, writer, detail::right_word(out), "h");
    const std::string home = "home." + writer;
    b.rule(home, '_', '_', Move::Left, home);
    b.rule(home, '#', '_', Move::Stay, writer);
    const std::vector<char> w = detail::right_word(in);
    std::string node = "t";
    for (std::size_t d = 0; d < w.size(); ++d) {
      const char c = w[d];
      if (c == '$') {
        if (d == 0) b.rule(node, c, '_', Move::Stay, writer);
        else b.rule(node, c, '_', Move::Left, home);
        break;
      }
      const std::string child = node + state_tag(c);
      b.rule(node, c, d == 0 ? '#' : '_', Move::Right, child);
      node = child;
    }
  }
  return b.build();
}

std::vector<std::string> representation_names() {
  return {"unary", "binary-marked", "pair-unary-2sided", "pair-binary-2sided",
          "halting-augmented", "u1", "u2"};
}

Representation representation_by_name(const std::string& name, std::uint64_t fuel,
                                       std::uint64_t bound) {
  if (name == "unary") return rep_unary();
  if (name == "binary-marked") return rep_binary_marked();
  if (name == "pair-unary-2sided") return rep_pair_unary_twosided();
  if (name == "pair-binary-2sided") return rep_pair_binary_twosided();
  if (name == "halting-augmented" || name == "u1" || name == "u2") {
    const int k = name == "u2" ? 2 : 1;
    const auto levels = empty_jump_chain(k, fuel, bound);
    std::vector<Oracle> chain;
    for (int i = 1; i <= k; ++i) chain.push_back(chain_oracle(levels, i));
    if (name == "halting-augmented") return rep_halting_augmented(chain[0]);
    return rep_u_k(k, chain);
  }
  throw std::invalid_argument("unknown representation '" + name + "'");
}

}  // namespace cwb
