#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cwb::lambda {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Abs, App };
  Kind kind;
  std::string name;  // Var, Abs
  TermPtr left;      // Abs body, App function
  TermPtr right;     // App argument
};

TermPtr var(std::string name);
TermPtr abs(std::string name, TermPtr body);
TermPtr app(TermPtr f, TermPtr x);
// app(app(f, x1), x2) ...
TermPtr apply(TermPtr f, const std::vector<TermPtr>& xs);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t pos, const std::string& what)
      : std::runtime_error("column " + std::to_string(pos + 1) + ": " + what), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// `\x.M` or `λx.M`, `\x y.M` for nested binders, left-associative
// application, parentheses. Names are runs of letters, digits, `_` and `'`.
TermPtr parse_term(std::string_view text);
std::string print_term(const TermPtr& t);

std::set<std::string> free_vars(const TermPtr& t);
// De Bruijn form; free variables keep their names.
std::string de_bruijn(const TermPtr& t);
bool alpha_equal(const TermPtr& a, const TermPtr& b);

// t[x := s], renaming binders that would capture free variables of s.
TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& s);

// Path of a subterm: 'l' goes to a body or function, 'r' to an argument.
using Path = std::string;

struct Contraction {
  Path path;       // where the redex sat
  TermPtr redex;   // the application that was contracted
  TermPtr result;  // whole term afterwards
};

// One step of the reduction chain: an abstraction with k leading binders
// applied to j arguments has min(k, j) of them contracted together.
struct ChainStep {
  std::vector<Contraction> betas;
  TermPtr result;
};

struct Reduction {
  enum class Status { NormalForm, Diverges, Exhausted };
  Status status = Status::Exhausted;
  TermPtr term;                  // last term reached
  std::uint64_t beta_steps = 0;  // single contractions
  std::vector<ChainStep> chain;
  // Diverges: an α-equivalent term recurred; the chain indices of both visits.
  std::optional<std::pair<std::size_t, std::size_t>> cycle;
  std::uint64_t chain_steps() const { return chain.size(); }
};

const char* reduction_name(Reduction::Status s);

// Leftmost-outermost reduction; `fuel` bounds single contractions.
Reduction reduce_normal_order(const TermPtr& t, std::uint64_t fuel);

// The leftmost-outermost redex, if any.
std::optional<Path> leftmost_redex(const TermPtr& t);
// Every redex position in t.
std::vector<Path> redexes(const TermPtr& t);
// Contracts the redex at `path`.
TermPtr contract_at(const TermPtr& t, const Path& path);
TermPtr subterm(const TermPtr& t, const Path& path);

// Church booleans: ν = λx.λy.x, o = λx.λy.y.
TermPtr church_true();
TermPtr church_false();

// Raised when App(L, I) neither reaches a normal form nor recurs within fuel.
class UnknownHalting : public std::runtime_error {
 public:
  UnknownHalting() : std::runtime_error("no certificate for whether L I halts") {}
};

struct HaltingCertificate {
  bool halts = false;
  Reduction evidence;  // normal form reached, or a recurrence
};

HaltingCertificate certify_halting(const TermPtr& l, const TermPtr& i, std::uint64_t fuel);

// λa.a L I with a fresh a.
TermPtr rep_tuple(const TermPtr& l, const TermPtr& i);
// λa.a L I h with h = ν if L I has a normal form, o if it provably has
// none; UnknownHalting otherwise.
TermPtr rep_tuple_augmented(const TermPtr& l, const TermPtr& i, std::uint64_t fuel);
// As above with h supplied; throws std::invalid_argument if h disagrees with
// the certificate.
TermPtr rep_tuple_augmented(const TermPtr& l, const TermPtr& i, const TermPtr& h,
                            std::uint64_t fuel);

// λm.m (λx.λy.λz.z)
TermPtr halt_detector();

struct Demo {
  TermPtr tuple;
  TermPtr h;
  HaltingCertificate certificate;
  Reduction reduction;        // of halt_detector() applied to tuple
  bool answers_h = false;     // normal form α-equal to h
  bool contracted_li = false; // some contraction had App(L, I) as its redex
};

// Reduces the detector on the augmented tuple with at most `demo_fuel`
// contractions.
Demo demo_halting(const TermPtr& l, const TermPtr& i, std::uint64_t certify_fuel,
                  std::uint64_t demo_fuel = 10);

// Numbered chain "0  term", "1  term", ... ending in the normal form.
std::string format_chain(const TermPtr& start, const Reduction& r);

// Case file: `L: <term>` and `I: <term>` lines, `#` comments.
struct LambdaCase {
  TermPtr l;
  TermPtr i;
};
LambdaCase parse_case(std::string_view text);

}  // namespace cwb::lambda
