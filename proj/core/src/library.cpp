#include "cwb/library.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "cwb/pairing.hpp"

namespace cwb {

namespace {

MachineBuilder delimited_builder() { return MachineBuilder(Alphabet::delimited()); }

}  // namespace

Machine unary_successor() {
  MachineBuilder b = delimited_builder();
  b.start("ones").halt("h");
  b.rule("ones", '1', '1', Move::Right, "ones");
  b.rule("ones", '0', '1', Move::Right, "zero");
  b.rule("zero", '$', '0', Move::Right, "end");
  b.rule("end", '_', '$', Move::Left, "back");
  b.pass("back", "01$", Move::Left, "back");
  b.rule("back", '_', '_', Move::Right, "h");
  return b.build();
}

Machine binary_increment() {
  MachineBuilder b = delimited_builder();
  b.start("carry").halt("h");
  b.rule("carry", '1', '0', Move::Right, "carry");
  b.rule("carry", '0', '1', Move::Left, "back");
  b.rule("carry", '$', '1', Move::Right, "end");
  b.rule("end", '_', '$', Move::Left, "back");
  b.pass("back", "01$", Move::Left, "back");
  b.rule("back", '_', '_', Move::Right, "h");
  return b.build();
}

Machine msb_increment() {
  MachineBuilder b = delimited_builder();
  b.start("seek").halt("h");
  b.pass("seek", "01", Move::Right, "seek");
  b.rule("seek", '$', '$', Move::Left, "carry");
  b.rule("carry", '1', '0', Move::Left, "carry");
  b.rule("carry", '0', '1', Move::Left, "back");
  // every digit was 1: the word becomes 1 0^|w|
  b.rule("carry", '_', '_', Move::Right, "lead");
  b.rule("lead", '0', '1', Move::Right, "skip");
  b.pass("skip", "0", Move::Right, "skip");
  b.rule("skip", '$', '0', Move::Right, "end");
  b.rule("end", '_', '$', Move::Left, "back");
  b.pass("back", "01$", Move::Left, "back");
  b.rule("back", '_', '_', Move::Right, "h");
  return b.build();
}

Machine evens_acceptor() {
  MachineBuilder b(Alphabet::work());
  b.start("start").halt("h");
  b.rule("start", '1', '#', Move::Right, "odd");
  b.rule("odd", '1', '_', Move::Right, "even");
  b.rule("even", '1', '_', Move::Right, "odd");
  // n + 1 ones: an odd count means n is even
  b.rule("odd", '0', '_', Move::Right, "yes.end");
  b.rule("even", '0', '_', Move::Right, "no.end");
  for (const char* v : {"yes", "no"}) {
    const std::string p = std::string(v) + ".";
    b.rule(p + "end", '$', '_', Move::Left, p + "home");
    b.rule(p + "home", '_', '_', Move::Left, p + "home");
    b.rule(p + "home", '#', p == "yes." ? '1' : '_', Move::Stay, "h");
  }
  return b.build();
}

Machine starts_with_one_acceptor() {
  MachineBuilder b(Alphabet::work());
  b.start("start").halt("h");
  b.rule("start", '$', '_', Move::Stay, "h");
  b.rule("start", '1', '#', Move::Right, "yes.erase");
  b.rule("start", '0', '#', Move::Right, "no.erase");
  for (const char* v : {"yes", "no"}) {
    const std::string p = std::string(v) + ".";
    b.rule(p + "erase", '0', '_', Move::Right, p + "erase");
    b.rule(p + "erase", '1', '_', Move::Right, p + "erase");
    b.rule(p + "erase", '$', '_', Move::Left, p + "home");
    b.rule(p + "home", '_', '_', Move::Left, p + "home");
    b.rule(p + "home", '#', p == "yes." ? '1' : '_', Move::Stay, "h");
  }
  return b.build();
}

Machine flag_reader() {
  MachineBuilder b = delimited_builder();
  b.start("q0").halt("h");
  b.rule("q0", '1', '1', Move::Right, "q1");
  b.rule("q1", '1', '1', Move::Left, "h");
  return b.build();
}

Machine zigzag_comparator() {
  MachineBuilder b(Alphabet("01xy", '0'));
  b.start("read").halt("h");
  b.rule("read", '1', 'x', Move::Left, "carry1");
  b.rule("read", '0', 'x', Move::Left, "carry0");
  for (const char* carry : {"carry0", "carry1"}) b.pass(carry, "xy", Move::Left, carry);
  b.rule("carry1", '1', 'y', Move::Right, "back");
  b.rule("carry0", '0', '0', Move::Stay, "h");
  b.pass("back", "xy", Move::Right, "back");
  b.pass("back", "01", Move::Stay, "read");
  return b.build();
}

Machine always_yes_binary() { return identity_machine(Alphabet::binary()); }

Machine left_mover() {
  MachineBuilder b = delimited_builder();
  b.start("s").halt("h");
  b.pass("s", "_01$", Move::Left, "s");
  return b.build();
}

namespace {

const std::map<std::string, std::function<Machine()>>& registry() {
  static const std::map<std::string, std::function<Machine()>> r = {
      {"always-yes", always_yes_binary},
      {"binary-increment", binary_increment},
      {"duplicate", machine_duplicate},
      {"eq", machine_eq},
      {"evens-acceptor", evens_acceptor},
      {"evens-step", [] { return compose(unary_successor(), unary_successor()); }},
      {"flag-reader", flag_reader},
      {"left-mover", left_mover},
      {"msb-increment", msb_increment},
      {"proj1", machine_proj1},
      {"proj2", machine_proj2},
      {"starts-with-one-acceptor", starts_with_one_acceptor},
      {"swap", machine_swap},
      {"unary-successor", unary_successor},
      {"zigzag-comparator", zigzag_comparator},
  };
  return r;
}

}  // namespace

std::vector<std::string> bundled_machine_names() {
  std::vector<std::string> out;
  for (const auto& [name, make] : registry()) out.push_back(name);
  return out;
}

Machine bundled_machine(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("no bundled machine '" + name + "'");
  return it->second();
}

}  // namespace cwb
