#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cwb/natural.hpp"

namespace cwb {

using Symbol = std::uint8_t;  // index into an Alphabet; the blank is always 0
using Position = std::int64_t;

// Ordered finite set of single-character symbols. The blank is stored at
// index 0, the rest keep the order they were given in.
class Alphabet {
 public:
  Alphabet(std::string_view symbols, char blank);

  // {0,1}, blank 0.
  static const Alphabet& binary();
  // {_,0,1,$}, blank _.
  static const Alphabet& delimited();
  // delimited() followed by scratch marks for the bundled combinators:
  // a-d and A-D mark _ 0 1 $ on the right and left halves, # is a hole.
  static const Alphabet& work();

  std::size_t size() const { return symbols_.size(); }
  char blank() const { return symbols_[0]; }
  char symbol(Symbol s) const { return symbols_[s]; }
  const std::string& symbols() const { return symbols_; }
  bool contains(char c) const { return symbols_.find(c) != std::string::npos; }
  // Throws std::invalid_argument for characters outside the alphabet.
  Symbol index(char c) const;

  // True when every symbol of *this sits at the same index in `wider`.
  bool embeds_in(const Alphabet& wider) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) = default;

 private:
  std::string symbols_;
};

// A sequence of symbols with trailing blanks removed.
struct FoldedWord {
  std::vector<Symbol> symbols;
  friend bool operator==(const FoldedWord&, const FoldedWord&) = default;
};

// Two-way infinite tape with finitely many non-blank cells. Stored as a dense
// window [origin, origin + cells.size()) whose first and last cells are
// non-blank; the empty window is the all-blank tape.
class Tape {
 public:
  explicit Tape(Alphabet alphabet = Alphabet::binary(), Position head = 0);

  // Cells given left to right starting at `first`; blanks are trimmed.
  static Tape from_cells(Alphabet alphabet, Position first,
                         std::vector<Symbol> cells, Position head);

  const Alphabet& alphabet() const { return alphabet_; }
  Position head() const { return head_; }
  Symbol at(Position p) const;
  char char_at(Position p) const { return alphabet_.symbol(at(p)); }
  bool all_blank() const { return cells_.empty(); }
  // Leftmost / rightmost non-blank positions. Undefined for a blank tape.
  Position min_pos() const { return origin_; }
  Position max_pos() const {
    return origin_ + static_cast<Position>(cells_.size()) - 1;
  }
  const std::vector<Symbol>& cells() const { return cells_; }

  Tape with(Position p, Symbol s) const;
  Tape with_head(Position h) const;
  // Same cells relative to the head, head moved to position 0.
  Tape recentred() const;
  // Reinterpret over an alphabet this one embeds into (or that embeds into
  // this one, provided every stored symbol fits).
  Tape over(const Alphabet& other) const;

  friend bool operator==(const Tape&, const Tape&) = default;

 private:
  void trim();

  Alphabet alphabet_;
  Position origin_ = 0;
  std::vector<Symbol> cells_;
  Position head_ = 0;
};

std::size_t hash_value(const Tape& t);

struct TapeHash {
  std::size_t operator()(const Tape& t) const { return hash_value(t); }
};

// Literal format: symbols left to right with `^` immediately before the head
// cell, e.g. "11^10". A trailing `^` puts the head just past the last cell.
Tape parse_tape(std::string_view text,
                const Alphabet& alphabet = Alphabet::binary());
std::string render_tape(const Tape& t);

// Equal cells and head once both are read over the wider alphabet.
bool same_tape(const Tape& a, const Tape& b);

// Fold order around the head: 0, 1, -1, 2, -2, ...
Position fold_offset(std::size_t index);
FoldedWord fold(const Tape& t);
Tape unfold(const Alphabet& alphabet, const FoldedWord& w, Position head = 0);

// Bijection between head-at-0 tapes and the naturals: length-then-lex order
// of the folded word. Tapes with the head elsewhere are recentred first.
Natural tape_number(const Tape& t);
Tape tape_of_number(const Natural& n,
                    const Alphabet& alphabet = Alphabet::binary());

}  // namespace cwb
