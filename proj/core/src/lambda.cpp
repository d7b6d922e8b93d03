#include "cwb/lambda.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

namespace cwb::lambda {

TermPtr var(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  return std::make_shared<const Term>(Term{Term::Kind::Var, std::move(name), nullptr, nullptr});
}

TermPtr abs(std::string name, TermPtr body) {
  if (name.empty()) throw std::invalid_argument("empty binder name");
  return std::make_shared<const Term>(
      Term{Term::Kind::Abs, std::move(name), std::move(body), nullptr});
}

TermPtr app(TermPtr f, TermPtr x) {
  return std::make_shared<const Term>(Term{Term::Kind::App, "", std::move(f), std::move(x)});
}

TermPtr apply(TermPtr f, const std::vector<TermPtr>& xs) {
  for (const TermPtr& x : xs) f = app(std::move(f), x);
  return f;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  TermPtr parse() {
    TermPtr t = term();
    skip();
    if (pos_ < s_.size()) throw SyntaxError(pos_, "unexpected '" + std::string(1, s_[pos_]) + "'");
    return t;
  }

 private:
  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_lambda() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '\\') return true;
    return s_.substr(pos_, 2) == "\xCE\xBB";
  }

  void eat_lambda() { pos_ += s_[pos_] == '\\' ? 1 : 2; }

  std::string name() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }

  TermPtr term() {
    if (at_lambda()) return lambda();
    std::optional<TermPtr> f;
    while (true) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] == ')') break;
      TermPtr x;
      bool last = false;
      if (at_lambda()) {
        x = lambda();
        last = true;
      } else if (s_[pos_] == '(') {
        const std::size_t open = pos_++;
        x = term();
        skip();
        if (pos_ >= s_.size() || s_[pos_] != ')') throw SyntaxError(open, "unclosed '('");
        ++pos_;
      } else if (name_char(s_[pos_])) {
        x = var(name());
      } else {
        throw SyntaxError(pos_, "unexpected '" + std::string(1, s_[pos_]) + "'");
      }
      f = f ? app(*f, x) : x;
      if (last) break;
    }
    if (!f) throw SyntaxError(pos_, "expected a term");
    return *f;
  }

  TermPtr lambda() {
    eat_lambda();
    std::vector<std::string> names{name()};
    while (true) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '.') break;
      if (pos_ >= s_.size() || !name_char(s_[pos_])) throw SyntaxError(pos_, "expected '.'");
      names.push_back(name());
    }
    ++pos_;
    TermPtr body = term();
    for (auto it = names.rbegin(); it != names.rend(); ++it) body = abs(*it, body);
    return body;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void print_into(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      out += t->name;
      return;
    case Term::Kind::Abs:
      out += "λ" + t->name + ".";
      print_into(t->left, out);
      return;
    case Term::Kind::App: {
      const bool paren_f = t->left->kind == Term::Kind::Abs;
      if (paren_f) out += "(";
      print_into(t->left, out);
      if (paren_f) out += ")";
      out += " ";
      const bool paren_x = t->right->kind != Term::Kind::Var;
      if (paren_x) out += "(";
      print_into(t->right, out);
      if (paren_x) out += ")";
      return;
    }
  }
}

void free_into(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case Term::Kind::Abs: {
      const bool fresh = bound.insert(t->name).second;
      free_into(t->left, bound, out);
      if (fresh) bound.erase(t->name);
      return;
    }
    case Term::Kind::App:
      free_into(t->left, bound, out);
      free_into(t->right, bound, out);
      return;
  }
}

void de_bruijn_into(const TermPtr& t, std::vector<std::string>& env, std::string& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      for (std::size_t k = env.size(); k-- > 0;) {
        if (env[k] == t->name) {
          out += std::to_string(env.size() - 1 - k);
          return;
        }
      }
      out += "'" + t->name;
      return;
    case Term::Kind::Abs:
      out += "(\\";
      env.push_back(t->name);
      de_bruijn_into(t->left, env, out);
      env.pop_back();
      out += ")";
      return;
    case Term::Kind::App:
      out += "(";
      de_bruijn_into(t->left, env, out);
      out += " ";
      de_bruijn_into(t->right, env, out);
      out += ")";
      return;
  }
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string stem = base;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  if (stem.empty()) stem = "v";
  for (int k = 1;; ++k) {
    std::string n = stem + std::to_string(k);
    if (!avoid.count(n)) return n;
  }
}

TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& s,
              const std::set<std::string>& fv_s) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t->name == x ? s : t;
    case Term::Kind::App: {
      TermPtr l = subst(t->left, x, s, fv_s);
      TermPtr r = subst(t->right, x, s, fv_s);
      if (l == t->left && r == t->right) return t;
      return app(std::move(l), std::move(r));
    }
    case Term::Kind::Abs: {
      if (t->name == x) return t;
      const std::set<std::string> fv_body = free_vars(t->left);
      if (!fv_body.count(x)) return t;
      if (!fv_s.count(t->name)) {
        TermPtr body = subst(t->left, x, s, fv_s);
        return abs(t->name, std::move(body));
      }
      std::set<std::string> avoid = fv_s;
      avoid.insert(fv_body.begin(), fv_body.end());
      avoid.insert(x);
      const std::string y = fresh_name(t->name, avoid);
      TermPtr body = subst(t->left, t->name, var(y), {y});
      return abs(y, subst(body, x, s, fv_s));
    }
  }
  return t;
}

bool is_redex(const TermPtr& t) {
  return t->kind == Term::Kind::App && t->left->kind == Term::Kind::Abs;
}

TermPtr beta(const TermPtr& redex) {
  return substitute(redex->left->left, redex->left->name, redex->right);
}

TermPtr replace_at(const TermPtr& t, const Path& path, std::size_t depth, const TermPtr& with) {
  if (depth == path.size()) return with;
  if (path[depth] == 'l') {
    TermPtr l = replace_at(t->left, path, depth + 1, with);
    return t->kind == Term::Kind::Abs ? abs(t->name, std::move(l)) : app(std::move(l), t->right);
  }
  return app(t->left, replace_at(t->right, path, depth + 1, with));
}

void redexes_into(const TermPtr& t, Path& path, std::vector<Path>& out) {
  if (is_redex(t)) out.push_back(path);
  if (t->left) {
    path.push_back('l');
    redexes_into(t->left, path, out);
    path.pop_back();
  }
  if (t->right) {
    path.push_back('r');
    redexes_into(t->right, path, out);
    path.pop_back();
  }
}

std::optional<Path> leftmost_from(const TermPtr& t, Path& path) {
  if (is_redex(t)) return path;
  for (const auto& [child, step] : {std::pair{t->left, 'l'}, std::pair{t->right, 'r'}}) {
    if (!child) continue;
    path.push_back(step);
    auto found = leftmost_from(child, path);
    path.pop_back();
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

TermPtr parse_term(std::string_view text) { return Parser(text).parse(); }

std::string print_term(const TermPtr& t) {
  std::string out;
  print_into(t, out);
  return out;
}

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  free_into(t, bound, out);
  return out;
}

std::string de_bruijn(const TermPtr& t) {
  std::vector<std::string> env;
  std::string out;
  de_bruijn_into(t, env, out);
  return out;
}

bool alpha_equal(const TermPtr& a, const TermPtr& b) { return de_bruijn(a) == de_bruijn(b); }

TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& s) {
  return subst(t, x, s, free_vars(s));
}

TermPtr subterm(const TermPtr& t, const Path& path) {
  TermPtr cur = t;
  for (char c : path) {
    cur = c == 'l' ? cur->left : cur->right;
    if (!cur) throw std::invalid_argument("path leaves the term");
  }
  return cur;
}

TermPtr contract_at(const TermPtr& t, const Path& path) {
  const TermPtr r = subterm(t, path);
  if (!is_redex(r)) throw std::invalid_argument("no redex at the path");
  return replace_at(t, path, 0, beta(r));
}

std::vector<Path> redexes(const TermPtr& t) {
  std::vector<Path> out;
  Path path;
  redexes_into(t, path, out);
  return out;
}

std::optional<Path> leftmost_redex(const TermPtr& t) {
  Path path;
  return leftmost_from(t, path);
}

const char* reduction_name(Reduction::Status s) {
  switch (s) {
    case Reduction::Status::NormalForm: return "normal-form";
    case Reduction::Status::Diverges: return "diverges";
    case Reduction::Status::Exhausted: return "exhausted";
  }
  return "?";
}

Reduction reduce_normal_order(const TermPtr& t, std::uint64_t fuel) {
  Reduction r;
  r.term = t;
  std::unordered_map<std::string, std::size_t> seen{{de_bruijn(t), 0}};
  while (true) {
    auto p = leftmost_redex(r.term);
    if (!p) {
      r.status = Reduction::Status::NormalForm;
      return r;
    }
    if (r.beta_steps >= fuel) return r;
    // binders at the head and arguments along the spine
    std::size_t binders = 0;
    for (TermPtr a = subterm(r.term, *p)->left; a->kind == Term::Kind::Abs; a = a->left) ++binders;
    std::size_t args = 1;
    for (Path q = *p; !q.empty() && q.back() == 'l';) {
      q.pop_back();
      if (subterm(r.term, q)->kind != Term::Kind::App) break;
      ++args;
    }
    ChainStep step;
    Path at = *p;
    for (std::size_t k = 0; k < std::min(binders, args) && r.beta_steps < fuel; ++k) {
      TermPtr redex = subterm(r.term, at);
      r.term = contract_at(r.term, at);
      ++r.beta_steps;
      step.betas.push_back({at, redex, r.term});
      if (!at.empty()) at.pop_back();
    }
    step.result = r.term;
    r.chain.push_back(std::move(step));
    auto [it, fresh] = seen.emplace(de_bruijn(r.term), r.chain.size());
    if (!fresh) {
      r.status = Reduction::Status::Diverges;
      r.cycle = std::pair{it->second, r.chain.size()};
      return r;
    }
  }
}

TermPtr church_true() { return parse_term("\\x.\\y.x"); }
TermPtr church_false() { return parse_term("\\x.\\y.y"); }

HaltingCertificate certify_halting(const TermPtr& l, const TermPtr& i, std::uint64_t fuel) {
  HaltingCertificate c;
  c.evidence = reduce_normal_order(app(l, i), fuel);
  if (c.evidence.status == Reduction::Status::Exhausted) throw UnknownHalting();
  c.halts = c.evidence.status == Reduction::Status::NormalForm;
  return c;
}

namespace {

TermPtr tuple_of(const std::vector<TermPtr>& parts) {
  std::set<std::string> avoid;
  for (const TermPtr& p : parts) {
    auto fv = free_vars(p);
    avoid.insert(fv.begin(), fv.end());
  }
  const std::string a = avoid.count("a") ? fresh_name("a", avoid) : "a";
  return abs(a, apply(var(a), parts));
}

}  // namespace

TermPtr rep_tuple(const TermPtr& l, const TermPtr& i) { return tuple_of({l, i}); }

TermPtr rep_tuple_augmented(const TermPtr& l, const TermPtr& i, std::uint64_t fuel) {
  const HaltingCertificate c = certify_halting(l, i, fuel);
  return tuple_of({l, i, c.halts ? church_true() : church_false()});
}

TermPtr rep_tuple_augmented(const TermPtr& l, const TermPtr& i, const TermPtr& h,
                            std::uint64_t fuel) {
  const HaltingCertificate c = certify_halting(l, i, fuel);
  if (!alpha_equal(h, c.halts ? church_true() : church_false()))
    throw std::invalid_argument("h disagrees with the halting certificate");
  return tuple_of({l, i, h});
}

TermPtr halt_detector() { return parse_term("\\m.m (\\x.\\y.\\z.z)"); }

Demo demo_halting(const TermPtr& l, const TermPtr& i, std::uint64_t certify_fuel,
                  std::uint64_t demo_fuel) {
  Demo d;
  d.certificate = certify_halting(l, i, certify_fuel);
  d.h = d.certificate.halts ? church_true() : church_false();
  d.tuple = rep_tuple_augmented(l, i, d.h, certify_fuel);
  d.reduction = reduce_normal_order(app(halt_detector(), d.tuple), demo_fuel);
  d.answers_h = d.reduction.status == Reduction::Status::NormalForm &&
                alpha_equal(d.reduction.term, d.h);
  const TermPtr li = app(l, i);
  for (const ChainStep& s : d.reduction.chain)
    for (const Contraction& c : s.betas)
      if (alpha_equal(c.redex, li)) d.contracted_li = true;
  return d;
}

std::string format_chain(const TermPtr& start, const Reduction& r) {
  std::ostringstream out;
  out << "0  " << print_term(start) << "\n";
  for (std::size_t k = 0; k < r.chain.size(); ++k) {
    out << k + 1 << "  " << print_term(r.chain[k].result);
    if (r.chain[k].betas.size() > 1) out << "   [" << r.chain[k].betas.size() << " β]";
    out << "\n";
  }
  return out.str();
}

LambdaCase parse_case(std::string_view text) {
  LambdaCase c;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'L:' or 'I:'");
    std::string key = line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    TermPtr t;
    try {
      t = parse_term(line.substr(colon + 1));
    } catch (const SyntaxError& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (key == "L") c.l = t;
    else if (key == "I") c.i = t;
    else throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
  }
  if (!c.l || !c.i) throw std::invalid_argument("a case needs both L and I");
  return c;
}

}  // namespace cwb::lambda
