#include "cwb/relations.hpp"

#include <filesystem>
#include <sstream>

#include "cwb/machine_io.hpp"

namespace cwb {

WitnessVerdict verify_transformable(const Representation& rx, const Representation& ry,
                                    const Machine& witness, std::uint64_t samples,
                                    std::uint64_t fuel) {
  return check_witness(witness, [](const Element& e) { return e; }, rx, ry, samples, fuel);
}

namespace {

std::optional<WitnessVerdict> check_under(const Benchmark& b, const std::string& key,
                                          const Representation& rep, std::uint64_t samples,
                                          std::uint64_t fuel) {
  auto it = b.witnesses.find(key);
  if (it == b.witnesses.end()) return std::nullopt;
  const Representation& out = b.codomain ? *b.codomain : rep;
  return check_witness(it->second, b.function, rep, out, samples, fuel);
}

// Direction "mine covers theirs" over the rows.
Direction cover(const std::vector<BenchmarkRow>& rows, bool x_covers_y, std::string* reason) {
  Direction worst = Direction::VerifiedOnSamples;
  auto rank = [](Direction d) {
    switch (d) {
      case Direction::Refuted: return 3;
      case Direction::NoWitness: return 2;
      case Direction::Unresolved: return 1;
      case Direction::VerifiedOnSamples: return 0;
    }
    return 0;
  };
  for (const BenchmarkRow& row : rows) {
    const auto& mine = x_covers_y ? row.x : row.y;
    const auto& theirs = x_covers_y ? row.y : row.x;
    if (!theirs || theirs->status != Verdict::Verified) continue;
    Direction d = Direction::VerifiedOnSamples;
    if (!mine) d = Direction::NoWitness;
    else if (mine->status == Verdict::Refuted) d = Direction::Refuted;
    else if (mine->status == Verdict::Inconclusive) d = Direction::Unresolved;
    if (rank(d) > rank(worst)) {
      worst = d;
      *reason = row.name;
    }
  }
  return worst;
}

RelationReport report_with(const Representation& rx, const std::string& x_key,
                           const Representation& ry, const std::string& y_key,
                           const std::vector<Benchmark>& benchmarks, std::uint64_t samples,
                           std::uint64_t fuel) {
  RelationReport r;
  r.x_name = rx.name;
  r.y_name = ry.name;
  for (const Benchmark& b : benchmarks)
    r.rows.push_back({b.name, check_under(b, x_key, rx, samples, fuel),
                      check_under(b, y_key, ry, samples, fuel)});
  r.xy = cover(r.rows, true, &r.xy_reason);
  r.yx = cover(r.rows, false, &r.yx_reason);
  r.verdict = combine_directions(r.xy, r.yx);
  return r;
}

}  // namespace

std::optional<WitnessVerdict> check_benchmark(const Benchmark& b, const Representation& rep,
                                              std::uint64_t samples, std::uint64_t fuel) {
  return check_under(b, rep.name, rep, samples, fuel);
}

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::VerifiedOnSamples: return "verified-on-samples";
    case Direction::Refuted: return "refuted";
    case Direction::NoWitness: return "no-witness";
    case Direction::Unresolved: return "unresolved";
  }
  return "?";
}

const char* relation_verdict_name(RelationVerdict v) {
  switch (v) {
    case RelationVerdict::EquivalentEvidence: return "equivalent-evidence";
    case RelationVerdict::StrongerEvidenceX: return "stronger-evidence(x)";
    case RelationVerdict::StrongerEvidenceY: return "stronger-evidence(y)";
    case RelationVerdict::IncomparableEvidence: return "incomparable-evidence";
    case RelationVerdict::Unknown: return "unknown";
  }
  return "?";
}

RelationVerdict combine_directions(Direction xy, Direction yx) {
  if (xy == Direction::Unresolved || yx == Direction::Unresolved) return RelationVerdict::Unknown;
  const bool x_covers = xy == Direction::VerifiedOnSamples;
  const bool y_covers = yx == Direction::VerifiedOnSamples;
  if (x_covers && y_covers) return RelationVerdict::EquivalentEvidence;
  if (x_covers) return RelationVerdict::StrongerEvidenceX;
  if (y_covers) return RelationVerdict::StrongerEvidenceY;
  return RelationVerdict::IncomparableEvidence;
}

RelationReport strength_report(const Representation& rx, const Representation& ry,
                               const std::vector<Benchmark>& benchmarks,
                               std::uint64_t samples, std::uint64_t fuel) {
  return report_with(rx, rx.name, ry, ry.name, benchmarks, samples, fuel);
}

EndorepReport endorep_strength_check(const Representation& rx, const Representation& ry,
                                     const std::vector<Benchmark>& benchmarks,
                                     std::uint64_t samples, std::uint64_t fuel) {
  EndorepReport out;
  out.direct = strength_report(rx, ry, benchmarks, samples, fuel);

  auto abstract = [ry](const Element& e) {
    auto a = ry.decode(std::get<Tape>(e));
    if (!a) throw std::invalid_argument("tape outside the image of " + ry.name);
    return *a;
  };
  AbstractDomain image(
      AbstractDomain::Kind::Tapes, ry.name + "-image", Element{ry.encode(ry.domain.first())},
      [ry, abstract](const Element& e) -> std::optional<Element> {
        auto next = ry.domain.successor(abstract(e));
        if (!next) return std::nullopt;
        try {
          return Element{ry.encode(*next)};
        } catch (const UnknownFlag&) {
          return std::nullopt;
        }
      });
  Representation endo{"endo(" + rx.name + "/" + ry.name + ")", image,
                      [rx, abstract](const Element& e) { return rx.encode(abstract(e)); },
                      [rx, ry](const Tape& t) -> std::optional<Element> {
                        auto a = rx.decode(t);
                        if (!a) return std::nullopt;
                        return Element{ry.encode(*a)};
                      }};
  Representation id{"id(" + ry.name + "-image)", image,
                    [](const Element& e) { return std::get<Tape>(e); },
                    [ry](const Tape& t) -> std::optional<Element> {
                      if (!ry.decode(t)) return std::nullopt;
                      return Element{t};
                    }};

  std::vector<Benchmark> induced;
  for (const Benchmark& b : benchmarks) {
    Benchmark c;
    c.name = b.name;
    c.codomain = b.codomain;
    auto f = b.function;
    if (b.codomain) {
      c.function = [f, abstract](const Element& e) { return f(abstract(e)); };
    } else {
      c.function = [f, abstract, ry](const Element& e) {
        return Element{ry.encode(f(abstract(e)))};
      };
    }
    if (auto it = b.witnesses.find(rx.name); it != b.witnesses.end())
      c.witnesses.emplace(endo.name, it->second);
    if (auto it = b.witnesses.find(ry.name); it != b.witnesses.end())
      c.witnesses.emplace(id.name, it->second);
    induced.push_back(std::move(c));
  }
  out.endorep = strength_report(endo, id, induced, samples, fuel);
  out.matches = out.endorep.verdict == out.direct.verdict;
  return out;
}

namespace {

const Natural& pow2(std::uint64_t s, Natural& storage) {
  storage = 1;
  storage <<= s;
  return storage;
}

Tape pair_input(const Natural& first, const Natural& second) {
  static const Representation rep = rep_pair_binary_twosided();
  return rep.encode(Element{NaturalPair{first, second}});
}

}  // namespace

Refutation refute_binary_comparator(const Machine& candidate, const Natural& start_n,
                                    std::uint64_t fuel) {
  Refutation out;
  RefutationTranscript t;
  t.n = start_n;
  t.input_nn = pair_input(start_n, start_n);
  t.run_nn = run(candidate, t.input_nn, fuel);
  if (!t.run_nn.halted() || !t.run_nn.accepted) {
    out.note = t.run_nn.halted() ? "candidate answers o on (n, n)"
                                 : "candidate does not halt on (n, n) within fuel";
    return out;
  }
  t.s_n = t.run_nn.steps;
  if (t.s_n > (1u << 20)) {
    out.note = "s_n too large to build the counterexample";
    return out;
  }
  Natural p;
  t.m = start_n + pow2(t.s_n, p);
  t.input_mn = pair_input(t.m, start_n);
  t.run_mn = run(candidate, t.input_mn, fuel);
  std::string why;
  if (!replay_transcript(candidate, t, fuel, &why)) {
    out.note = "transcript does not replay: " + why;
    return out;
  }
  out.transcript = std::move(t);
  return out;
}

bool replay_transcript(const Machine& candidate, const RefutationTranscript& t,
                       std::uint64_t fuel, std::string* why) {
  auto fail = [why](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  Natural p;
  if (t.m == t.n) return fail("m equals n");
  if ((t.m - t.n) % pow2(t.s_n, p) != 0) return fail("m differs from n mod 2^s_n");
  if (t.input_nn != pair_input(t.n, t.n) || t.input_mn != pair_input(t.m, t.n))
    return fail("inputs are not the encodings of (n, n) and (m, n)");
  const auto radius = static_cast<Position>(t.s_n) - 1;
  for (Position q = -radius; q <= radius; ++q)
    if (t.input_nn.at(q) != t.input_mn.at(q)) return fail("inputs differ inside the window");
  auto same = [](const RunResult& a, const RunResult& b) {
    return a.outcome == b.outcome && a.tape == b.tape && a.steps == b.steps &&
           a.state == b.state && a.accepted == b.accepted;
  };
  const RunResult nn = run(candidate, t.input_nn, fuel);
  const RunResult mn = run(candidate, t.input_mn, fuel);
  if (!same(nn, t.run_nn) || !same(mn, t.run_mn)) return fail("re-simulation differs");
  if (nn.steps != t.s_n) return fail("s_n is not the step count on (n, n)");
  if (nn.excursion > static_cast<Position>(t.s_n)) return fail("head left the radius s_n");
  if (!nn.halted() || !nn.accepted) return fail("no ν answer on (n, n)");
  if (!mn.halted() || !mn.accepted) return fail("no ν answer on (m, n)");
  return true;
}

Benchmark benchmark_function(const std::string& function, std::uint64_t fuel,
                             std::uint64_t bound) {
  Benchmark b;
  b.name = function;
  if (function == "successor") {
    b.function = [](const Element& e) { return Element{as_natural(e) + 1}; };
  } else if (function == "double") {
    b.function = [](const Element& e) { return Element{as_natural(e) * 2}; };
  } else if (function == "identity") {
    b.function = [](const Element& e) { return e; };
  } else if (function == "diagonal-flag") {
    const Oracle flags = chain_oracle(empty_jump_chain(1, fuel, bound), 1);
    b.function = [flags](const Element& e) {
      return Element{Natural(diagonal_flag(flags, as_natural(e)))};
    };
    b.codomain = rep_unary();
  } else {
    throw std::invalid_argument("unknown benchmark function '" + function + "'");
  }
  return b;
}

std::vector<Benchmark> parse_benchmarks(std::string_view text, const std::string& base_dir,
                                        std::uint64_t fuel, std::uint64_t bound) {
  std::vector<Benchmark> out;
  std::optional<std::string> name;
  std::map<std::string, Machine> witnesses;
  std::optional<std::string> function;
  int line_no = 0;
  auto flush = [&]() {
    if (!name) return;
    if (!function) throw ParseError(line_no, "benchmark '" + *name + "' has no function");
    Benchmark b = benchmark_function(*function, fuel, bound);
    b.name = *name;
    b.witnesses = std::move(witnesses);
    out.push_back(std::move(b));
    name.reset();
    function.reset();
    witnesses.clear();
  };
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected 'key: value'");
    std::istringstream key_in(line.substr(0, colon));
    std::istringstream rest(line.substr(colon + 1));
    std::string key, value;
    key_in >> key;
    if (!(rest >> value)) throw ParseError(line_no, "missing value for '" + key + "'");
    if (key == "benchmark") {
      flush();
      name = value;
    } else if (!name) {
      throw ParseError(line_no, "'" + key + "' outside a benchmark block");
    } else if (key == "function") {
      function = value;
    } else if (key == "witness") {
      std::string file;
      if (!(rest >> file)) throw ParseError(line_no, "witness needs a representation and a file");
      std::filesystem::path p(file);
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      witnesses.insert_or_assign(value, load_machine(p.string()));
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }
  flush();
  return out;
}

std::vector<Benchmark> load_benchmarks(const std::string& path, std::uint64_t fuel,
                                       std::uint64_t bound) {
  return parse_benchmarks(read_file(path), std::filesystem::path(path).parent_path().string(),
                          fuel, bound);
}

}  // namespace cwb
