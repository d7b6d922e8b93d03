#include "cwb/pairing.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "cwb/machine_io.hpp"

namespace cwb {

Tape pair_meta(const Tape& a, const Tape& b) {
  if (a.alphabet() != b.alphabet())
    throw std::invalid_argument("pair_meta needs components over one alphabet");
  return tape_of_number(cantor_pair(tape_number(a), tape_number(b)), a.alphabet());
}

std::pair<Tape, Tape> unpair_meta(const Tape& t) {
  auto [x, y] = cantor_unpair(tape_number(t));
  return {tape_of_number(x, t.alphabet()), tape_of_number(y, t.alphabet())};
}

Tape to_delimited(const Tape& t) {
  const Alphabet& d = Alphabet::delimited();
  if (t.alphabet() == d) return t;
  if (t.alphabet().embeds_in(d)) return t.over(d);
  std::vector<Symbol> cells;
  for (Symbol s : t.cells())
    cells.push_back(s == 0 ? Symbol{0} : d.index(t.alphabet().symbol(s)));
  if (t.all_blank()) return Tape(d, t.head());
  return Tape::from_cells(d, t.min_pos(), std::move(cells), t.head());
}

namespace {

constexpr Symbol kDollar = 3;  // index of `$` in the delimited alphabet

}  // namespace

Tape enc(const Tape& t) {
  FoldedWord w = fold(to_delimited(t));
  w.symbols.push_back(kDollar);
  return Tape::from_cells(Alphabet::delimited(), 0, std::move(w.symbols), 0);
}

std::optional<Tape> unenc(const Tape& t) {
  if (t.alphabet() != Alphabet::delimited() || t.head() != 0 || t.all_blank())
    return std::nullopt;
  if (t.min_pos() < 0 || t.at(t.max_pos()) != kDollar) return std::nullopt;
  FoldedWord w;
  for (Position p = 0; p < t.max_pos(); ++p) w.symbols.push_back(t.at(p));
  if (!w.symbols.empty() && w.symbols.back() == 0) return std::nullopt;
  return unfold(Alphabet::delimited(), w, 0);
}

Tape pair_mach(const Tape& a, const Tape& b) {
  const FoldedWord wa = fold(to_delimited(a));
  const FoldedWord wb = fold(to_delimited(b));
  const auto la = static_cast<Position>(wa.symbols.size());
  const auto lb = static_cast<Position>(wb.symbols.size());
  std::vector<Symbol> cells(static_cast<std::size_t>(la + lb + 2), 0);
  // cells[0] is position -(lb + 1)
  cells[0] = kDollar;
  for (Position i = 0; i < lb; ++i)
    cells[static_cast<std::size_t>(lb - i)] = wb.symbols[static_cast<std::size_t>(i)];
  for (Position i = 0; i < la; ++i)
    cells[static_cast<std::size_t>(lb + 1 + i)] = wa.symbols[static_cast<std::size_t>(i)];
  cells.back() = kDollar;
  return Tape::from_cells(Alphabet::delimited(), -(lb + 1), std::move(cells), 0);
}

std::optional<std::pair<Tape, Tape>> unpair_mach(const Tape& t) {
  if (t.alphabet() != Alphabet::delimited() || t.head() != 0 || t.all_blank())
    return std::nullopt;
  const Position lo = t.min_pos(), hi = t.max_pos();
  if (lo > -1 || hi < 0 || t.at(lo) != kDollar || t.at(hi) != kDollar)
    return std::nullopt;
  FoldedWord wa, wb;
  for (Position p = 0; p < hi; ++p) wa.symbols.push_back(t.at(p));
  for (Position p = -1; p > lo; --p) wb.symbols.push_back(t.at(p));
  if (!wa.symbols.empty() && wa.symbols.back() == 0) return std::nullopt;
  if (!wb.symbols.empty() && wb.symbols.back() == 0) return std::nullopt;
  return std::pair{unfold(Alphabet::delimited(), wa, 0),
                   unfold(Alphabet::delimited(), wb, 0)};
}

std::optional<bool> decode_answer(const Tape& t) {
  const Alphabet& d = Alphabet::delimited();
  Tape u = t.recentred();
  if (u.alphabet() != d) {
    if (u.alphabet() != Alphabet::binary() && !u.alphabet().embeds_in(d) &&
        !d.embeds_in(u.alphabet()))
      return std::nullopt;
    u = to_delimited(u);
  }
  if (u == Conventions::yes(d) || u == enc(Conventions::yes(d))) return true;
  if (u == Conventions::no(d) || u == enc(Conventions::no(d))) return false;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Combinators. Plain cells hold _ 0 1 $; the right half of a pair is marked
// with a b c d as it is processed and the left half with A B C D.

namespace {

const std::string kPlain = "_01$";
const std::string kLower = "abcd";
const std::string kUpper = "ABCD";

char lower(char c) { return kLower[kPlain.find(c)]; }
char upper(char c) { return kUpper[kPlain.find(c)]; }
char plain_of(char m) {
  auto i = kLower.find(m);
  if (i == std::string::npos) i = kUpper.find(m);
  return kPlain[i];
}
// State-name fragment for a carried symbol.
std::string tag(char c) {
  switch (c) {
    case '_': return "B";
    case '$': return "D";
    default: return std::string(1, c);
  }
}

MachineBuilder work_builder() { return MachineBuilder(Alphabet::work()); }

// Removes every mark and stops at the origin. Entry `from`: the head is on
// the right half, which is marked lowercase from 0 up to some cell; the left
// half is marked uppercase from -1 down to some cell (possibly empty).
void add_cleanup(MachineBuilder& b, const std::string& from, const std::string& halt) {
  const std::string p = from + ".";
  // walk to the left end of the marked region
  b.pass(from, kLower, Move::Left, from);
  b.pass(from, kUpper, Move::Left, p + "left");
  b.pass(from, kPlain, Move::Right, p + "unmark_left");
  b.pass(p + "left", kUpper, Move::Left, p + "left");
  b.pass(p + "left", kPlain, Move::Right, p + "unmark_left");
  // unmark the left half; the first lowercase cell is the origin
  for (char m : kUpper) b.rule(p + "unmark_left", m, plain_of(m), Move::Right, p + "unmark_left");
  b.pass(p + "unmark_left", kLower, Move::Right, p + "unmark_right");
  // unmark cells 1.. of the right half, keep the origin marked
  for (char m : kLower) b.rule(p + "unmark_right", m, plain_of(m), Move::Right, p + "unmark_right");
  b.pass(p + "unmark_right", kPlain, Move::Left, p + "home");
  b.pass(p + "home", kPlain, Move::Left, p + "home");
  for (char m : kLower) b.rule(p + "home", m, plain_of(m), Move::Stay, halt);
}

}  // namespace

Machine machine_duplicate() {
  // Copy cell i to cell -(i+1), marking both, until the `$` is copied.
  MachineBuilder b = work_builder();
  b.start("read").halt("h");
  for (char c : kPlain) {
    const std::string carry = "carry" + tag(c);
    b.rule("read", c, lower(c), Move::Left, carry);
    b.pass(carry, kLower, Move::Left, carry);
    b.pass(carry, kUpper, Move::Left, carry);
    b.rule(carry, '_', upper(c), Move::Right, c == '$' ? "tidy" : "back");
  }
  b.pass("back", kUpper, Move::Right, "back");
  b.pass("back", kLower, Move::Right, "back");
  b.pass("back", kPlain, Move::Stay, "read");
  add_cleanup(b, "tidy", "h");
  return b.build();
}

Machine machine_swap() {
  // Exchange cells i and -(i+1) until both delimiters have been moved.
  // A hole `#` remembers cell i while the head visits the left half.
  MachineBuilder b = work_builder();
  b.start("read00").halt("h");
  for (int rdone = 0; rdone < 2; ++rdone) {
    for (int ldone = 0; ldone < 2; ++ldone) {
      if (rdone && ldone) continue;
      const std::string flags = std::to_string(rdone) + std::to_string(ldone);
      const std::string read = "read" + flags;
      for (char c : kPlain) {
        const int r2 = rdone || c == '$';
        const std::string carry = "carry" + tag(c) + std::to_string(r2) + std::to_string(ldone);
        b.rule(read, c, '#', Move::Left, carry);
        b.pass(carry, kLower, Move::Left, carry);
        b.pass(carry, kUpper, Move::Left, carry);
        for (char d : kPlain) {
          const int l2 = ldone || d == '$';
          const std::string ret = "ret" + tag(d) + std::to_string(r2) + std::to_string(l2);
          b.rule(carry, d, upper(c), Move::Right, ret);
        }
      }
    }
  }
  for (char d : kPlain) {
    for (int r2 = 0; r2 < 2; ++r2) {
      for (int l2 = 0; l2 < 2; ++l2) {
        const std::string flags = std::to_string(r2) + std::to_string(l2);
        const std::string ret = "ret" + tag(d) + flags;
        b.pass(ret, kUpper, Move::Right, ret);
        b.pass(ret, kLower, Move::Right, ret);
        b.rule(ret, '#', lower(d), Move::Right, flags == "11" ? "tidy0" : "read" + flags);
      }
    }
  }
  b.pass("tidy0", kPlain, Move::Left, "tidy");
  add_cleanup(b, "tidy", "h");
  return b.build();
}

Machine machine_proj1() {
  // Mark the origin, erase the left half through its `$`, come back.
  MachineBuilder b = work_builder();
  b.start("mark").halt("h");
  for (char c : kPlain) b.rule("mark", c, lower(c), Move::Left, "erase");
  for (char c : std::string("_01")) b.rule("erase", c, '_', Move::Left, "erase");
  b.rule("erase", '$', '_', Move::Right, "home");
  b.rule("home", '_', '_', Move::Right, "home");
  for (char m : kLower) b.rule("home", m, plain_of(m), Move::Stay, "h");
  return b.build();
}

Machine machine_proj2() { return compose(machine_swap(), machine_proj1()); }

Machine machine_eq() {
  // Compare cell i with cell -(i+1). On the verdict, erase everything and
  // leave the answer at the origin.
  MachineBuilder b = work_builder();
  b.start("read").halt("h");
  for (char c : kPlain) {
    const std::string carry = "carry" + tag(c);
    b.rule("read", c, lower(c), Move::Left, carry);
    b.pass(carry, kLower, Move::Left, carry);
    b.pass(carry, kUpper, Move::Left, carry);
    for (char d : kPlain) {
      if (c != d) {
        b.rule(carry, d, d, Move::Stay, "no.erase_left");
      } else if (c == '$') {
        b.rule(carry, d, d, Move::Stay, "yes.erase_left");
      } else {
        b.rule(carry, d, upper(d), Move::Right, "back");
      }
    }
  }
  b.pass("back", kUpper, Move::Right, "back");
  b.pass("back", kLower, Move::Right, "back");
  b.pass("back", kPlain, Move::Stay, "read");
  for (const std::string verdict : {"yes", "no"}) {
    const std::string p = verdict + ".";
    const char result = verdict == "yes" ? '1' : '_';
    // from the current left cell leftward through the left `$`
    for (char c : std::string("_01")) b.rule(p + "erase_left", c, '_', Move::Left, p + "erase_left");
    b.rule(p + "erase_left", '$', '_', Move::Right, p + "sweep");
    // rightward: erase up to the origin, hole it, erase through the right `$`
    b.rule(p + "sweep", '_', '_', Move::Right, p + "sweep");
    for (char m : kUpper) b.rule(p + "sweep", m, '_', Move::Right, p + "sweep");
    for (char m : std::string("abc")) b.rule(p + "sweep", m, '#', Move::Right, p + "erase_right");
    b.rule(p + "sweep", 'd', result, Move::Stay, "h");
    for (char c : std::string("_01abc")) b.rule(p + "erase_right", c, '_', Move::Right, p + "erase_right");
    b.rule(p + "erase_right", '$', '_', Move::Left, p + "home");
    b.rule(p + "erase_right", 'd', '_', Move::Left, p + "home");
    b.rule(p + "home", '_', '_', Move::Left, p + "home");
    b.rule(p + "home", '#', result, Move::Stay, "h");
  }
  return b.build();
}

namespace detail {

void add_writer(MachineBuilder& b, const std::string& from,
                const std::vector<char>& word, const std::string& halt) {
  const auto n = word.size();
  auto w = [&](std::size_t i) { return i == 0 ? from : from + ".w" + std::to_string(i); };
  auto r = [&](std::size_t i) { return from + ".r" + std::to_string(i); };
  for (std::size_t i = 0; i < n; ++i) {
    const bool last = i + 1 == n;
    const std::string next = last ? (n == 1 ? halt : r(n - 1)) : w(i + 1);
    const Move mv = last ? (n == 1 ? Move::Stay : Move::Left) : Move::Right;
    for (char c : kPlain) b.rule(w(i), c, word[i], mv, next);
  }
  for (std::size_t i = n - 1; i >= 1 && n > 1; --i) {
    const std::string next = i == 1 ? halt : r(i - 1);
    for (char c : kPlain) b.rule(r(i), c, c, i == 1 ? Move::Stay : Move::Left, next);
  }
}

std::vector<char> right_word(const Tape& t) {
  std::vector<char> out;
  if (t.all_blank()) return out;
  for (Position p = t.head(); p <= t.max_pos(); ++p) out.push_back(t.char_at(p));
  return out;
}

}  // namespace detail

namespace {

std::vector<char> enc_word(const Tape& t) { return detail::right_word(enc(t)); }

}  // namespace

Machine machine_const(const Tape& t) {
  MachineBuilder b = work_builder();
  b.start("start").halt("h");
  // erase enc(x), leaving a hole at the origin
  b.rule("start", '$', '_', Move::Stay, "write");
  for (char c : std::string("_01")) b.rule("start", c, '#', Move::Right, "erase");
  for (char c : std::string("_01")) b.rule("erase", c, '_', Move::Right, "erase");
  b.rule("erase", '$', '_', Move::Left, "home");
  b.rule("home", '_', '_', Move::Left, "home");
  b.rule("home", '#', '_', Move::Stay, "write");
  detail::add_writer(b, "write", enc_word(t), "h");
  return b.build();
}

Machine machine_recognize_const(const Tape& t) {
  const std::vector<char> w = enc_word(t);
  MachineBuilder b = work_builder();
  b.start("cmp0").halt("h");
  auto cmp = [](std::size_t k) { return "cmp" + std::to_string(k); };
  for (std::size_t k = 0; k < w.size(); ++k) {
    for (char c : kPlain) {
      const bool match = c == w[k];
      if (k == 0) {
        if (match && c == '$') b.rule(cmp(0), c, '1', Move::Stay, "h");
        else if (c == '$') b.rule(cmp(0), c, '_', Move::Stay, "h");
        else if (match) b.rule(cmp(0), c, '#', Move::Right, cmp(1));
        else b.rule(cmp(0), c, '#', Move::Right, "no.erase");
        continue;
      }
      if (match && c == '$') b.rule(cmp(k), c, '_', Move::Left, "yes.home");
      else if (match) b.rule(cmp(k), c, '_', Move::Right, cmp(k + 1));
      else if (c == '$') b.rule(cmp(k), c, '_', Move::Left, "no.home");
      else b.rule(cmp(k), c, '_', Move::Right, "no.erase");
    }
  }
  for (char c : std::string("_01")) b.rule("no.erase", c, '_', Move::Right, "no.erase");
  b.rule("no.erase", '$', '_', Move::Left, "no.home");
  for (const std::string verdict : {"yes", "no"}) {
    b.rule(verdict + ".home", '_', '_', Move::Left, verdict + ".home");
    b.rule(verdict + ".home", '#', verdict == "yes" ? '1' : '_', Move::Stay, "h");
  }
  return b.build();
}

Machine machine_partial_apply(const Machine& f) {
  const Alphabet& w = Alphabet::work();
  if (f.alphabet() != Alphabet::delimited())
    throw std::invalid_argument("partial application needs a machine over '" +
                                Alphabet::delimited().symbols() + "'");
  const std::string plain = "_01$";
  const std::string marks = "abcd";  // hidden _, 0, 1, $

  // Marks the left component up to its delimiter and returns home.
  MachineBuilder hide(w);
  hide.start("start").halt("home");
  hide.pass("start", plain, Move::Left, "mark");
  for (int i = 0; i < 3; ++i) hide.rule("mark", plain[i], marks[i], Move::Left, "mark");
  hide.rule("mark", '$', 'd', Move::Right, "back");
  hide.pass("back", marks, Move::Right, "back");
  hide.pass("back", plain, Move::Stay, "home");

  // f, reading marked cells as blanks it leaves alone.
  std::vector<std::string> names;
  for (StateId s = 0; s < static_cast<StateId>(f.state_count()); ++s)
    names.push_back(f.state_name(s));
  std::map<RuleKey, Action> rules;
  for (const auto& [key, a] : f.rules()) {
    rules[key] = a;
    if (key.second != 0 || a.write != 0) continue;
    for (char m : marks) {
      const Symbol ms = w.index(m);
      rules[{key.first, ms}] = Action{ms, a.move, a.next};
    }
  }
  Machine inner(w, names, f.start(), f.halt_states(), rules, f.oracle());

  // Restores the marks from the delimiter rightward and stops at home.
  MachineBuilder show(w);
  show.start("start").halt("h");
  show.pass("start", plain, Move::Left, "seek");
  show.pass("seek", "abc", Move::Left, "seek");
  show.rule("seek", 'd', '$', Move::Right, "restore");
  for (int i = 0; i < 3; ++i) show.rule("restore", marks[i], plain[i], Move::Right, "restore");
  show.pass("restore", plain, Move::Stay, "h");

  return compose(compose(hide.build(), inner), show.build());
}

}  // namespace cwb
