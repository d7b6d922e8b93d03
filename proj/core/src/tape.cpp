#include "cwb/tape.hpp"

#include <algorithm>
#include <stdexcept>

namespace cwb {

Natural cantor_pair(const Natural& x, const Natural& y) {
  Natural s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<Natural, Natural> cantor_unpair(const Natural& z) {
  // w = floor((sqrt(8z+1) - 1) / 2)
  Natural disc = 8 * z + 1;
  Natural w = (Natural(boost::multiprecision::sqrt(disc)) - 1) / 2;
  Natural t = w * (w + 1) / 2;
  Natural y = z - t;
  return {w - y, y};
}

Alphabet::Alphabet(std::string_view symbols, char blank) {
  if (symbols.find(blank) == std::string_view::npos)
    throw std::invalid_argument("blank symbol is not in the alphabet");
  symbols_.push_back(blank);
  for (char c : symbols) {
    if (c == blank) continue;
    if (c == '^') throw std::invalid_argument("'^' is reserved for the head");
    if (symbols_.find(c) != std::string::npos)
      throw std::invalid_argument(std::string("duplicate symbol '") + c + "'");
    symbols_.push_back(c);
  }
  if (symbols_.size() < 2)
    throw std::invalid_argument("an alphabet needs at least two symbols");
  if (symbols_.size() > 255)
    throw std::invalid_argument("alphabet too large");
}

const Alphabet& Alphabet::binary() {
  static const Alphabet a("01", '0');
  return a;
}

const Alphabet& Alphabet::delimited() {
  static const Alphabet a("_01$", '_');
  return a;
}

const Alphabet& Alphabet::work() {
  static const Alphabet a("_01$abcdABCD#", '_');
  return a;
}

Symbol Alphabet::index(char c) const {
  auto pos = symbols_.find(c);
  if (pos == std::string::npos)
    throw std::invalid_argument(std::string("unknown symbol '") + c + "'");
  return static_cast<Symbol>(pos);
}

bool Alphabet::embeds_in(const Alphabet& wider) const {
  return symbols_.size() <= wider.symbols_.size() &&
         std::equal(symbols_.begin(), symbols_.end(), wider.symbols_.begin());
}

Tape::Tape(Alphabet alphabet, Position head)
    : alphabet_(std::move(alphabet)), head_(head) {}

Tape Tape::from_cells(Alphabet alphabet, Position first,
                      std::vector<Symbol> cells, Position head) {
  Tape t(std::move(alphabet), head);
  for (Symbol s : cells)
    if (s >= t.alphabet_.size())
      throw std::invalid_argument("symbol index outside the alphabet");
  t.origin_ = first;
  t.cells_ = std::move(cells);
  t.trim();
  return t;
}

void Tape::trim() {
  auto first = std::find_if(cells_.begin(), cells_.end(),
                            [](Symbol s) { return s != 0; });
  if (first == cells_.end()) {
    cells_.clear();
    origin_ = 0;
    return;
  }
  auto last = std::find_if(cells_.rbegin(), cells_.rend(),
                           [](Symbol s) { return s != 0; })
                  .base();
  origin_ += first - cells_.begin();
  cells_ = std::vector<Symbol>(first, last);
}

Symbol Tape::at(Position p) const {
  if (cells_.empty() || p < origin_ || p > max_pos()) return 0;
  return cells_[static_cast<std::size_t>(p - origin_)];
}

Tape Tape::with(Position p, Symbol s) const {
  if (s >= alphabet_.size())
    throw std::invalid_argument("symbol index outside the alphabet");
  Tape t = *this;
  if (t.cells_.empty()) {
    if (s == 0) return t;
    t.origin_ = p;
    t.cells_.assign(1, s);
    return t;
  }
  if (p < t.origin_) {
    if (s == 0) return t;
    t.cells_.insert(t.cells_.begin(), static_cast<std::size_t>(t.origin_ - p),
                    Symbol{0});
    t.origin_ = p;
  } else if (p > t.max_pos()) {
    if (s == 0) return t;
    t.cells_.resize(static_cast<std::size_t>(p - t.origin_ + 1), Symbol{0});
  }
  t.cells_[static_cast<std::size_t>(p - t.origin_)] = s;
  t.trim();
  return t;
}

Tape Tape::with_head(Position h) const {
  Tape t = *this;
  t.head_ = h;
  return t;
}

Tape Tape::recentred() const {
  Tape t = *this;
  if (!t.cells_.empty()) t.origin_ -= head_;
  t.head_ = 0;
  return t;
}

Tape Tape::over(const Alphabet& other) const {
  if (!alphabet_.embeds_in(other)) {
    if (!other.embeds_in(alphabet_))
      throw std::invalid_argument("alphabets are not compatible");
    for (Symbol s : cells_)
      if (s >= other.size())
        throw std::invalid_argument("tape uses symbols outside the alphabet");
  }
  Tape t = *this;
  t.alphabet_ = other;
  return t;
}

std::size_t hash_value(const Tape& t) {
  std::size_t h = std::hash<std::string>{}(t.alphabet().symbols());
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::uint64_t>(t.head()));
  mix(static_cast<std::uint64_t>(t.min_pos()));
  for (Symbol s : t.cells()) mix(s);
  return h;
}

Tape parse_tape(std::string_view text, const Alphabet& alphabet) {
  std::vector<Symbol> cells;
  Position head = 0;
  int markers = 0;
  for (char c : text) {
    if (c == '^') {
      ++markers;
      head = static_cast<Position>(cells.size());
      continue;
    }
    cells.push_back(alphabet.index(c));
  }
  if (markers != 1)
    throw std::invalid_argument("tape literal needs exactly one '^' marker");
  return Tape::from_cells(alphabet, -head, std::move(cells), 0);
}

bool same_tape(const Tape& a, const Tape& b) {
  if (a.alphabet() == b.alphabet()) return a == b;
  const Alphabet& wide = a.alphabet().embeds_in(b.alphabet()) ? b.alphabet() : a.alphabet();
  try {
    return a.over(wide) == b.over(wide);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string render_tape(const Tape& t) {
  const Position head = t.head();
  Position lo = head;
  Position hi = head - 1;
  if (!t.all_blank()) {
    lo = std::min(lo, t.min_pos());
    hi = std::max(hi, t.max_pos());
  }
  std::string out;
  for (Position p = lo; p <= hi; ++p) {
    if (p == head) out.push_back('^');
    out.push_back(t.char_at(p));
  }
  if (head > hi) out.push_back('^');
  return out;
}

Position fold_offset(std::size_t index) {
  if (index == 0) return 0;
  auto k = static_cast<Position>((index + 1) / 2);
  return (index % 2 == 1) ? k : -k;
}

FoldedWord fold(const Tape& t) {
  FoldedWord w;
  if (t.all_blank()) return w;
  Position reach = std::max(t.max_pos() - t.head(), t.head() - t.min_pos());
  // right offset k sits at index 2k-1, left offset k at index 2k
  std::size_t n = reach > 0 ? static_cast<std::size_t>(2 * reach + 1) : 1;
  w.symbols.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    w.symbols.push_back(t.at(t.head() + fold_offset(i)));
  while (!w.symbols.empty() && w.symbols.back() == 0) w.symbols.pop_back();
  return w;
}

Tape unfold(const Alphabet& alphabet, const FoldedWord& w, Position head) {
  if (w.symbols.empty()) return Tape(alphabet, head);
  Position lo = 0, hi = 0;
  for (std::size_t i = 0; i < w.symbols.size(); ++i) {
    lo = std::min(lo, fold_offset(i));
    hi = std::max(hi, fold_offset(i));
  }
  std::vector<Symbol> cells(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < w.symbols.size(); ++i)
    cells[static_cast<std::size_t>(fold_offset(i) - lo)] = w.symbols[i];
  return Tape::from_cells(alphabet, head + lo, std::move(cells), head);
}

Natural tape_number(const Tape& t) {
  const FoldedWord w = fold(t);
  const std::size_t len = w.symbols.size();
  if (len == 0) return 0;
  const Natural b = t.alphabet().size();
  // words shorter than len: 1 + sum_{l=1}^{len-1} (b-1) b^(l-1) = b^(len-1)
  Natural shorter = boost::multiprecision::pow(b, static_cast<unsigned>(len - 1));
  Natural prefix = 0;
  for (std::size_t i = 0; i + 1 < len; ++i) prefix = prefix * b + w.symbols[i];
  return shorter + prefix * (b - 1) + (w.symbols.back() - 1);
}

Tape tape_of_number(const Natural& n, const Alphabet& alphabet) {
  if (n == 0) return Tape(alphabet);
  const Natural b = alphabet.size();
  std::size_t len = 1;
  Natural shorter = 1;  // b^(len-1)
  while (shorter * b <= n) {
    shorter *= b;
    ++len;
  }
  Natural rank = n - shorter;
  FoldedWord w;
  w.symbols.assign(len, 0);
  w.symbols[len - 1] = static_cast<Symbol>(static_cast<unsigned>(rank % (b - 1)) + 1);
  Natural prefix = rank / (b - 1);
  for (std::size_t i = len - 1; i-- > 0;) {
    w.symbols[i] = static_cast<Symbol>(static_cast<unsigned>(prefix % b));
    prefix /= b;
  }
  return unfold(alphabet, w, 0);
}

}  // namespace cwb
