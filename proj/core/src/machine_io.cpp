#include "cwb/machine_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace cwb {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
          c == '-' || c == ':'))
      return false;
  return true;
}

// Drops a trailing comment: the first token from `from` on that starts
// with `#`. Earlier tokens are symbol slots where `#` is a symbol.
void drop_comment(std::vector<std::string>& toks, std::size_t from) {
  for (std::size_t i = from; i < toks.size(); ++i) {
    if (toks[i][0] == '#') {
      toks.resize(i);
      return;
    }
  }
}

char single_symbol(const std::string& tok, int line) {
  if (tok.size() != 1) throw ParseError(line, "symbol '" + tok + "' is not a single character");
  return tok[0];
}

}  // namespace

Machine parse_machine(std::string_view text) {
  std::optional<std::string> symbols;
  std::optional<char> blank;
  std::optional<std::string> start;
  std::vector<std::string> halts;
  std::optional<std::vector<std::string>> ports;
  std::vector<std::string> states;
  struct Rule {
    int line;
    std::string from, to;
    char read, write, move;
  };
  std::vector<Rule> rules;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = split(raw);
    if (toks.empty() || toks[0][0] == '#') continue;
    const bool is_rule = toks.size() >= 3 && toks[2] == "->";
    auto colon = raw.find(':');
    if (!is_rule && colon != std::string::npos) {
      std::string key = raw.substr(0, colon);
      key.erase(0, key.find_first_not_of(" \t"));
      key.erase(key.find_last_not_of(" \t") + 1);
      auto args = split(raw.substr(colon + 1));
      drop_comment(args, key == "alphabet" || key == "blank" ? 1 : 0);
      if (key == "alphabet") {
        if (args.size() != 1) throw ParseError(line_no, "alphabet takes one word of symbols");
        symbols = args[0];
      } else if (key == "blank") {
        if (args.size() != 1) throw ParseError(line_no, "blank takes one symbol");
        blank = single_symbol(args[0], line_no);
      } else if (key == "start") {
        if (args.size() != 1 || !is_identifier(args[0]))
          throw ParseError(line_no, "start takes one state");
        start = args[0];
      } else if (key == "halt") {
        if (args.empty()) throw ParseError(line_no, "halt needs at least one state");
        for (auto& a : args) {
          if (!is_identifier(a)) throw ParseError(line_no, "bad state '" + a + "'");
          halts.push_back(a);
        }
      } else if (key == "states") {
        for (auto& a : args) {
          if (!is_identifier(a)) throw ParseError(line_no, "bad state '" + a + "'");
          states.push_back(a);
        }
      } else if (key == "oracle") {
        if (args.size() != 3) throw ParseError(line_no, "oracle takes query, yes and no states");
        ports = args;
      } else {
        throw ParseError(line_no, "unknown header '" + key + "'");
      }
      continue;
    }
    drop_comment(toks, 6);
    if (toks.size() != 6 || toks[2] != "->")
      throw ParseError(line_no, "expected '<state> <read> -> <write> <L|R|S> <state>'");
    if (!is_identifier(toks[0]) || !is_identifier(toks[5]))
      throw ParseError(line_no, "bad state name");
    Rule r{line_no, toks[0], toks[5], single_symbol(toks[1], line_no),
           single_symbol(toks[3], line_no), single_symbol(toks[4], line_no)};
    rules.push_back(r);
  }
  if (!symbols) throw ParseError(line_no, "missing 'alphabet:' header");
  if (!start) throw ParseError(line_no, "missing 'start:' header");
  if (halts.empty()) throw ParseError(line_no, "missing 'halt:' header");

  try {
    Alphabet alphabet(*symbols, blank.value_or((*symbols)[0]));
    MachineBuilder b(alphabet);
    for (auto& st : states) b.id(st);
    b.start(*start);
    for (auto& h : halts) b.halt(h);
    if (ports) b.oracle((*ports)[0], (*ports)[1], (*ports)[2]);
    for (const Rule& r : rules) {
      try {
        b.rule(r.from, r.read, r.write, parse_move(r.move), r.to);
      } catch (const std::invalid_argument& e) {
        throw ParseError(r.line, e.what());
      }
    }
    return b.build();
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string format_machine(const Machine& m) {
  std::ostringstream out;
  out << "alphabet: " << m.alphabet().symbols() << "\n";
  out << "blank: " << m.alphabet().blank() << "\n";
  out << "states:";
  for (StateId s = 0; s < static_cast<StateId>(m.state_count()); ++s) out << ' ' << m.state_name(s);
  out << "\n";
  out << "start: " << m.state_name(m.start()) << "\n";
  out << "halt:";
  for (StateId h : m.halt_states()) out << ' ' << m.state_name(h);
  out << "\n";
  if (m.oracle())
    out << "oracle: " << m.state_name(m.oracle()->query) << ' '
        << m.state_name(m.oracle()->yes) << ' ' << m.state_name(m.oracle()->no)
        << "\n";
  for (const auto& [key, a] : m.rules())
    out << m.state_name(key.first) << ' ' << m.alphabet().symbol(key.second)
        << " -> " << m.alphabet().symbol(a.write) << ' ' << move_char(a.move)
        << ' ' << m.state_name(a.next) << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Machine load_machine(const std::string& path) { return parse_machine(read_file(path)); }

}  // namespace cwb
