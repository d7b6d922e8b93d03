#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <string>

#include "CLI11.hpp"
#include "cwb/enumerability.hpp"
#include "cwb/hierarchy.hpp"
#include "cwb/lambda.hpp"
#include "cwb/library.hpp"
#include "cwb/machine_io.hpp"
#include "cwb/numbering.hpp"
#include "cwb/oracle.hpp"
#include "cwb/pairing.hpp"
#include "cwb/relations.hpp"
#include "cwb/representation.hpp"
#include "report.hpp"

namespace cwb::cli {
namespace {

enum Exit { kOk = 0, kRefuted = 1, kInconclusive = 2, kInputError = 3 };

struct Config {
  std::string format = "text";
  std::uint64_t fuel = 100000;
  std::uint64_t bound = 100;
  std::uint64_t seed = 0;
};

Json config_echo(const Config& c, Json extra = Json::object()) {
  Json j = {{"fuel", c.fuel}, {"bound", c.bound}, {"seed", c.seed}, {"format", c.format}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  return j;
}

Json nat(const Natural& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(n);
  return to_string(n);
}

// "@name" is a bundled machine, anything else a file.
Machine resolve_machine(const std::string& ref) {
  if (!ref.empty() && ref[0] == '@') return bundled_machine(ref.substr(1));
  return load_machine(ref);
}

Alphabet input_alphabet(const Machine& m, const std::string& override_symbols) {
  if (!override_symbols.empty()) return Alphabet(override_symbols, override_symbols[0]);
  if (Alphabet::delimited().embeds_in(m.alphabet())) return Alphabet::delimited();
  if (Alphabet::binary().embeds_in(m.alphabet())) return Alphabet::binary();
  return m.alphabet();
}

std::string state_label(const Machine& m, StateId s) {
  return s == kRejectState ? "reject" : m.state_name(s);
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Halted: return "halted";
    case Outcome::Exhausted: return "exhausted";
    case Outcome::OracleUnknown: return "oracle-unknown";
  }
  return "?";
}

Json run_json(const Machine& m, const RunResult& r) {
  Json j = {{"outcome", outcome_name(r.outcome)},
            {"state", state_label(m, r.state)},
            {"accepted", r.accepted},
            {"steps", r.steps},
            {"excursion", r.excursion},
            {"tape", render_tape(r.tape)}};
  if (r.query) j["query"] = render_tape(*r.query);
  return j;
}

Json verdict_json(const WitnessVerdict& v) {
  Json j = {{"status", verdict_name(v.status)}, {"checked", v.checked}};
  if (v.element) j["element"] = element_to_string(*v.element);
  if (v.expected) j["expected"] = render_tape(*v.expected);
  if (v.actual) j["actual"] = render_tape(v.actual->tape);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json report_json(const RelationReport& r) {
  Json rows = Json::array();
  for (const BenchmarkRow& row : r.rows) {
    rows.push_back({{"benchmark", row.name},
                    {"x", row.x ? verdict_json(*row.x) : Json("no witness")},
                    {"y", row.y ? verdict_json(*row.y) : Json("no witness")}});
  }
  Json j = {{"x", r.x_name}, {"y", r.y_name}, {"benchmarks", rows}};
  j["x_covers_y"] = direction_name(r.xy);
  if (!r.xy_reason.empty()) j["x_covers_y_because"] = r.xy_reason;
  j["y_covers_x"] = direction_name(r.yx);
  if (!r.yx_reason.empty()) j["y_covers_x_because"] = r.yx_reason;
  j["verdict"] = relation_verdict_name(r.verdict);
  return j;
}

Enumerator default_enumerator(const std::string& rep, std::uint64_t fuel) {
  if (rep == "unary") return {unary_successor(), rep_unary().encode(Element{Natural(0)}), fuel};
  if (rep == "binary-marked")
    return {binary_increment(), rep_binary_marked().encode(Element{Natural(0)}), fuel};
  throw std::invalid_argument("no built-in enumerator for '" + rep + "'; pass one");
}

struct Output {
  Json report;
  int code = kOk;
};

Output cmd_run(const Config& c, const std::string& machine_ref, const std::string& tape,
               const std::string& alphabet, int oracle_level) {
  const Machine m = resolve_machine(machine_ref);
  const Tape input = parse_tape(tape, input_alphabet(m, alphabet));
  RunResult r;
  if (oracle_level >= 0) {
    const auto chain = empty_jump_chain(oracle_level, c.fuel, c.bound);
    r = run_with_oracle(m, chain_oracle(chain, oracle_level), input, c.fuel);
  } else {
    r = run(m, input, c.fuel);
  }
  Json extra = {{"machine", machine_ref}, {"input", render_tape(input)}};
  if (oracle_level >= 0) extra["oracle_level"] = oracle_level;
  Output out;
  out.report = {{"command", "run"}, {"config", config_echo(c, extra)}};
  const Json details = run_json(m, r);
  for (auto& [k, v] : details.items()) out.report[k] = v;
  out.code = r.halted() ? kOk : kInconclusive;
  return out;
}

Output cmd_refute_eq(const Config& c, const std::string& machine_ref, std::uint64_t n) {
  const Machine m = resolve_machine(machine_ref);
  const Refutation ref = refute_binary_comparator(m, Natural(n), c.fuel);
  Output out;
  out.report = {{"command", "refute-eq"},
                {"config", config_echo(c, {{"candidate", machine_ref}, {"n", n}})}};
  if (!ref.transcript) {
    out.report["status"] = "not-applicable";
    out.report["note"] = ref.note;
    out.code = kInconclusive;
    return out;
  }
  const RefutationTranscript& t = *ref.transcript;
  out.report["status"] = "refuted";
  out.report["n"] = nat(t.n);
  out.report["s_n"] = t.s_n;
  out.report["m"] = nat(t.m);
  out.report["m_minus_n"] = "2^" + std::to_string(t.s_n);
  out.report["window_radius"] = t.s_n == 0 ? 0 : t.s_n - 1;
  out.report["input_nn"] = render_tape(t.input_nn);
  out.report["input_mn"] = render_tape(t.input_mn);
  out.report["run_nn"] = run_json(m, t.run_nn);
  out.report["run_mn"] = run_json(m, t.run_mn);
  out.report["replayed"] = replay_transcript(m, t, c.fuel);
  return out;
}

Output cmd_translate(const Config& c, const std::string& from, const std::string& to,
                     const std::string& ex_file, const std::string& ey_file,
                     const std::string& literal, std::uint64_t budget) {
  const Representation rx = representation_by_name(from, c.fuel, c.bound);
  const Representation ry = representation_by_name(to, c.fuel, c.bound);
  const Enumerator ex = ex_file.empty() ? default_enumerator(from, c.fuel) : load_enumerator(ex_file);
  const Enumerator ey = ey_file.empty() ? default_enumerator(to, c.fuel) : load_enumerator(ey_file);
  const Tape input = parse_tape(literal, Alphabet::delimited());
  const Translation t = translate_via_enumerators(rx, ry, ex, ey, input, budget);
  Output out;
  Json extra = {{"from", from}, {"to", to}, {"budget", budget}};
  if (!ex_file.empty()) extra["x_enumerator"] = ex_file;
  if (!ey_file.empty()) extra["y_enumerator"] = ey_file;
  out.report = {{"command", "translate"}, {"config", config_echo(c, extra)}};
  out.report["input"] = render_tape(input);
  out.report["status"] = translation_name(t.status);
  if (t.tape) {
    out.report["output"] = render_tape(*t.tape);
    out.report["index"] = t.index;
  }
  if (!t.note.empty()) out.report["note"] = t.note;
  out.code = t.tape ? kOk : kInconclusive;
  return out;
}

Output cmd_jump(const Config& c, int level, bool table, const std::string& out_file) {
  if (level < 0 || level > 2) throw std::invalid_argument("--level must be 0, 1 or 2");
  const auto chain = empty_jump_chain(level, c.fuel, c.bound);
  const JumpApprox& j = chain[level];
  const bool replayed = level == 0 || replay_jump(j, chain_oracle(chain, level - 1));
  Output out;
  out.report = {{"command", "jump"}, {"config", config_echo(c, {{"level", level}})}};
  out.report["level"] = level;
  out.report["scanned"] = j.entries.size();
  out.report["members"] = j.members();
  out.report["non_members"] = j.non_members().size();
  out.report["unknown"] = j.unknown().size();
  out.report["certificates_replayed"] = replayed;
  if (table) out.report["table"] = format_certificates(j);
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw std::runtime_error("cannot write '" + out_file + "'");
    f << format_certificates(j);
  }
  out.code = replayed ? kOk : kRefuted;
  return out;
}

Output cmd_relations(const Config& c, const std::string& suite, const std::string& x,
                     const std::string& y, std::uint64_t samples, bool endorep) {
  const auto benchmarks = load_benchmarks(suite, c.fuel, c.bound);
  const Representation rx = representation_by_name(x, c.fuel, c.bound);
  const Representation ry = representation_by_name(y, c.fuel, c.bound);
  Output out;
  out.report = {{"command", "relations"},
                {"config", config_echo(c, {{"suite", std::filesystem::path(suite).filename().string()},
                                           {"samples", samples}})}};
  if (endorep) {
    const EndorepReport e = endorep_strength_check(rx, ry, benchmarks, samples, c.fuel);
    out.report["direct"] = report_json(e.direct);
    out.report["endorepresentation"] = report_json(e.endorep);
    out.report["verdicts_match"] = e.matches;
    out.code = e.direct.verdict == RelationVerdict::Unknown ? kInconclusive : kOk;
    return out;
  }
  const RelationReport r = strength_report(rx, ry, benchmarks, samples, c.fuel);
  const Json details = report_json(r);
  for (auto& [k, v] : details.items()) out.report[k] = v;
  out.code = r.verdict == RelationVerdict::Unknown ? kInconclusive : kOk;
  return out;
}

Universe universe_by_name(const std::string& name, const Config& c) {
  if (name == "enc-words") return enc_word_universe();
  if (name == "tapes") return tape_universe(Alphabet::delimited());
  return image_universe(representation_by_name(name, c.fuel, c.bound));
}

Output cmd_enumerate(const Config& c, const std::string& acceptor_ref, const std::string& accept,
                     const std::string& universe, std::uint64_t rounds, std::uint64_t limit) {
  const Machine m = resolve_machine(acceptor_ref);
  const Acceptor a{m, parse_tape(accept, Alphabet::delimited())};
  Dovetail d(a, universe_by_name(universe, c));
  Json emitted = Json::array();
  while (emitted.size() < limit) {
    auto e = d.next(rounds);
    if (!e) break;
    emitted.push_back({{"index", e->index}, {"round", e->round}, {"steps", e->steps},
                       {"tape", render_tape(e->tape)}});
  }
  Output out;
  out.report = {{"command", "enumerate"},
                {"config", config_echo(c, {{"acceptor", acceptor_ref},
                                           {"accept", accept},
                                           {"universe", universe},
                                           {"rounds", rounds},
                                           {"limit", limit}})}};
  out.report["rounds_run"] = d.rounds_done();
  out.report["count"] = emitted.size();
  out.report["emitted"] = emitted;
  return out;
}

Output cmd_accept(const Config& c, const std::string& enumerator_file, const std::string& literal,
                  bool pure_tm) {
  const Enumerator e = load_enumerator(enumerator_file);
  const Tape input = parse_tape(literal, e.start.alphabet());
  const Acceptance a = acceptor_from_enumerator(e, input, c.bound,
                                                pure_tm ? CompareMode::PureTM : CompareMode::Meta);
  Output out;
  out.report = {{"command", "enumerate"},
                {"config", config_echo(c, {{"enumerator", enumerator_file},
                                           {"mode", pure_tm ? "pure-tm" : "meta"}})}};
  out.report["input"] = render_tape(input);
  out.report["status"] = acceptance_name(a.status);
  out.report["index"] = a.index;
  if (!a.note.empty()) out.report["note"] = a.note;
  out.code = a.status == Acceptance::Status::Accepted   ? kOk
             : a.status == Acceptance::Status::NotFound ? kRefuted
                                                        : kInconclusive;
  return out;
}

Output cmd_lambda_demo(const Config& c, const std::string& case_file, const std::string& l_text,
                       const std::string& i_text, std::uint64_t certify_fuel) {
  lambda::LambdaCase lc;
  if (!case_file.empty()) {
    lc = lambda::parse_case(read_file(case_file));
  } else {
    if (l_text.empty() || i_text.empty()) throw std::invalid_argument("give --case or both --L and --I");
    lc = {lambda::parse_term(l_text), lambda::parse_term(i_text)};
  }
  Json extra = {{"certify_fuel", certify_fuel}};
  if (!case_file.empty()) extra["case"] = std::filesystem::path(case_file).filename().string();
  Output out;
  out.report = {{"command", "lambda-demo"}, {"config", config_echo(c, extra)}};
  out.report["L"] = lambda::print_term(lc.l);
  out.report["I"] = lambda::print_term(lc.i);
  lambda::Demo d;
  try {
    d = lambda::demo_halting(lc.l, lc.i, certify_fuel);
  } catch (const lambda::UnknownHalting& e) {
    out.report["status"] = "unknown-flag";
    out.report["note"] = e.what();
    out.code = kInconclusive;
    return out;
  }
  const lambda::Reduction& ev = d.certificate.evidence;
  Json cert = {{"halts", d.certificate.halts},
               {"evidence", lambda::reduction_name(ev.status)},
               {"beta_steps", ev.beta_steps}};
  if (ev.cycle)
    cert["recurrence"] = std::to_string(ev.cycle->first) + " -> " + std::to_string(ev.cycle->second);
  else
    cert["normal_form"] = lambda::print_term(ev.term);
  out.report["certificate"] = cert;
  out.report["h"] = lambda::print_term(d.h);
  out.report["chain"] =
      lambda::format_chain(lambda::app(lambda::halt_detector(), d.tuple), d.reduction);
  out.report["chain_steps"] = d.reduction.chain_steps();
  out.report["beta_steps"] = d.reduction.beta_steps;
  out.report["answers_h"] = d.answers_h;
  out.report["contracted_L_I"] = d.contracted_li;
  out.report["result"] = lambda::print_term(d.reduction.term);
  out.code = d.answers_h && !d.contracted_li ? kOk : kRefuted;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cwb: Turing machines, representations and their relations"};
  app.require_subcommand(1);
  Config c;
  app.add_option("--format", c.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--fuel", c.fuel, "step budget")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--bound", c.bound, "element / tape bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", c.seed, "recorded in reports; checks sample fixed domain prefixes")->capture_default_str();
  std::function<Output()> action;

  auto* run_cmd = app.add_subcommand("run", "run a machine on a tape")->fallthrough();
  std::string machine_ref, tape, alphabet;
  int oracle_level = -1;
  run_cmd->add_option("machine", machine_ref, "machine file or @bundled-name")->required();
  run_cmd->add_option("tape", tape, "tape literal, ^ before the head cell")->required();
  run_cmd->add_option("--alphabet", alphabet, "input alphabet symbols, blank first");
  run_cmd->add_option("--oracle-level", oracle_level, "answer queries from the empty-set jump chain")
      ->check(CLI::Range(0, 2));
  run_cmd->callback([&] { action = [&] { return cmd_run(c, machine_ref, tape, alphabet, oracle_level); }; });

  auto* refute = app.add_subcommand("refute-eq", "refute a two-sided binary comparator")->fallthrough();
  std::uint64_t n = 5;
  refute->add_option("candidate", machine_ref, "machine file or @bundled-name")->required();
  refute->add_option("--n", n, "the n of (n, n)")->capture_default_str();
  refute->callback([&] { action = [&] { return cmd_refute_eq(c, machine_ref, n); }; });

  auto* translate = app.add_subcommand("translate", "translate between representations")->fallthrough();
  std::string from, to, ex_file, ey_file, literal;
  std::optional<std::uint64_t> budget;
  translate->add_option("--from", from, "representation of the input")->required();
  translate->add_option("--to", to, "target representation")->required();
  translate->add_option("--ex", ex_file, "enumerator file for --from");
  translate->add_option("--ey", ey_file, "enumerator file for --to");
  translate->add_option("--budget", budget, "enumeration steps (default: --bound)");
  translate->add_option("input", literal, "tape literal")->required();
  translate->callback([&] {
    action = [&] { return cmd_translate(c, from, to, ex_file, ey_file, literal, budget.value_or(c.bound)); };
  });

  auto* jump = app.add_subcommand("jump", "certified approximation of the empty-set jump chain")->fallthrough();
  int level = 1;
  bool table = false;
  std::string out_file;
  jump->add_option("--level", level, "0, 1 or 2")->capture_default_str();
  jump->add_flag("--table", table, "include the certificate table");
  jump->add_option("--out", out_file, "write the certificate table to a file");
  jump->callback([&] { action = [&] { return cmd_jump(c, level, table, out_file); }; });

  auto* relations = app.add_subcommand("relations", "strength report over a benchmark suite")->fallthrough();
  std::string suite, x, y;
  std::uint64_t samples = 50;
  bool endorep = false;
  relations->add_option("suite", suite, "benchmark suite file")->required();
  relations->add_option("--x", x, "first representation")->required();
  relations->add_option("--y", y, "second representation")->required();
  relations->add_option("--samples", samples, "domain elements checked per witness")->capture_default_str();
  relations->add_flag("--endorep", endorep, "also compare through the endorepresentation");
  relations->callback([&] { action = [&] { return cmd_relations(c, suite, x, y, samples, endorep); }; });

  auto* enumerate = app.add_subcommand("enumerate", "dovetail an acceptor, or accept through an enumerator")->fallthrough();
  std::string acceptor_ref, accept = "^1", universe = "enc-words", enumerator_file, input;
  std::optional<std::uint64_t> rounds;
  std::uint64_t limit = 1000;
  bool pure_tm = false;
  enumerate->add_option("acceptor", acceptor_ref, "acceptor machine file or @bundled-name");
  enumerate->add_option("--accept", accept, "tape the acceptor leaves on members")->capture_default_str();
  enumerate->add_option("--universe", universe, "enc-words, tapes or a representation name")->capture_default_str();
  enumerate->add_option("--rounds", rounds, "dovetailing rounds (default: --bound)");
  enumerate->add_option("--limit", limit, "stop after this many emissions")->capture_default_str();
  enumerate->add_option("--enumerator", enumerator_file, "enumerator file; accept --input instead");
  enumerate->add_option("--input", input, "tape literal to look for in the enumeration");
  enumerate->add_flag("--pure-tm", pure_tm, "compare with the eq machine");
  enumerate->callback([&] {
    action = [&] {
      if (!enumerator_file.empty()) {
        if (input.empty()) throw std::invalid_argument("--enumerator needs --input");
        return cmd_accept(c, enumerator_file, input, pure_tm);
      }
      if (acceptor_ref.empty()) throw std::invalid_argument("give an acceptor or --enumerator");
      return cmd_enumerate(c, acceptor_ref, accept, universe, rounds.value_or(c.bound), limit);
    };
  });

  auto* lambda_cmd = app.add_subcommand("lambda-demo", "the halting detector on λa.a L I h")->fallthrough();
  std::string case_file, l_text, i_text;
  std::uint64_t certify_fuel = 1000;
  lambda_cmd->add_option("--case", case_file, "file with L: and I: lines");
  lambda_cmd->add_option("--L", l_text, "term L");
  lambda_cmd->add_option("--I", i_text, "term I");
  lambda_cmd->add_option("--certify-fuel", certify_fuel, "contractions allowed when certifying L I")
      ->capture_default_str();
  lambda_cmd->callback([&] {
    action = [&] { return cmd_lambda_demo(c, case_file, l_text, i_text, certify_fuel); };
  });

  auto* machine_cmd = app.add_subcommand("machine", "print a bundled machine")->fallthrough();
  std::string bundled;
  bool list = false;
  machine_cmd->add_option("name", bundled, "bundled machine name");
  machine_cmd->add_flag("--list", list, "list the bundled machines");
  machine_cmd->callback([&] {
    action = [&] {
      Output out;
      if (list || bundled.empty()) {
        out.report = {{"command", "machine"}, {"bundled", bundled_machine_names()}};
      } else {
        out.report = {{"command", "machine"}, {"name", bundled},
                      {"machine", format_machine(bundled_machine(bundled))}};
      }
      return out;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    Output out = action();
    if (machine_cmd->parsed() && c.format == "text" && out.report.contains("machine")) {
      std::cout << out.report["machine"].get<std::string>();
    } else {
      std::cout << render(out.report, c.format);
    }
    return out.code;
  } catch (const ParseError& e) {
    std::cerr << "cwb: parse error: " << e.what() << "\n";
  } catch (const lambda::SyntaxError& e) {
    std::cerr << "cwb: syntax error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "cwb: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace cwb::cli

int main(int argc, char** argv) { return cwb::cli::main(argc, argv); }
