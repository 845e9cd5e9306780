// ar-iet: command-line front end over the ariet library.
//
// exit 0 ok, 1 domain error or failed check, 2 usage / malformed input.
// Errors are JSON objects on stderr; results go to stdout (or --out files).

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ariet/analysis.hpp"
#include "ariet/config.hpp"
#include "ariet/error.hpp"
#include "ariet/gasket.hpp"
#include "ariet/iet.hpp"
#include "ariet/induction.hpp"
#include "ariet/json_io.hpp"
#include "ariet/svg.hpp"
#include "ariet/towers.hpp"
#include "ariet/words.hpp"

using namespace ariet;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::uint64_t parse_count(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw ParseError("expected a positive integer, got '" + text + "'");
  Integer v{text};
  if (v <= 0 || !v.fits_ulong_p()) throw ParseError("integer out of range: " + text);
  return v.get_ui();
}

// Shared by every subcommand that needs an AR9 map.
struct MapArgs {
  std::string triple;
  std::string prefix;
  std::string order = "first";
  std::string gaps;
  std::string origin = "0";

  void attach(CLI::App* app) {
    app->add_option("--triple", triple, "length triple a,b,c (p/q entries)");
    app->add_option("--prefix", prefix, "directing prefix as digits 1/2/3; triple reconstructed from the seed");
    app->add_option("--order", order, "first|second|third, optionally reversed-");
    app->add_option("--gaps", gaps, "two gaps g1,g2 between the omegas");
    app->add_option("--origin", origin, "left end of the leftmost omega");
  }

  Triple resolve(const RunConfig& cfg) const {
    if (!triple.empty() && !prefix.empty()) throw Usage("--triple and --prefix are exclusive");
    if (!triple.empty()) return parse_triple(triple);
    if (!prefix.empty()) return reconstruct_triple(parse_prefix(prefix), cfg.seed_triple);
    return cfg.seed_triple;
  }

  Ar9Map build(const RunConfig& cfg) const {
    std::pair<Rational, Rational> g{Rational(0), Rational(0)};
    if (!gaps.empty()) {
      auto parts = split(gaps, ',');
      if (parts.size() != 2) throw ParseError("--gaps expects two values");
      g = {parse_rational(parts[0]), parse_rational(parts[1])};
    }
    return build_ar9(resolve(cfg), parse_order(order), g, parse_rational(origin));
  }
};

// Deterministic uniform fractions in [0, 1) from raw generator bits; the
// standard distributions are implementation defined.
Rational unit_fraction(std::mt19937_64& rng) {
  return make_rational(Integer(static_cast<unsigned long>(rng() >> 33)), Integer(1ul << 31));
}

Rational sample_point(const Ar9Map& m, std::mt19937_64& rng) {
  return point_at(m, m.space().measure() * unit_fraction(rng));
}

class Output {
 public:
  explicit Output(const RunConfig& cfg) : dir_(cfg.output_dir) {}

  void emit(const std::string& text, const std::string& name) const {
    if (name.empty()) {
      std::cout << text;
      return;
    }
    std::filesystem::path path = std::filesystem::path(dir_) / name;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
  }

  void emit(const Json& doc, const std::string& name) const { emit(doc.dump(2) + "\n", name); }

 private:
  std::string dir_;
};

PartialQuotients pq_from(const std::string& prefix, const std::string& ks, const std::string& rules) {
  if (!ks.empty()) {
    std::vector<std::uint64_t> k;
    for (const std::string& s : split(ks, ',')) k.push_back(parse_count(s));
    std::vector<MultiplicativeRule> r(k.size(), MultiplicativeRule::Im);
    if (!rules.empty()) {
      if (rules.size() != k.size()) throw ParseError("--rules needs one digit per partial quotient");
      for (std::size_t i = 0; i < rules.size(); ++i) {
        if (rules[i] != '1' && rules[i] != '2') throw ParseError("rules are digits 1 (I) or 2 (II)");
        r[i] = rules[i] == '1' ? MultiplicativeRule::Im : MultiplicativeRule::IIm;
      }
    }
    return make_partial_quotients(std::move(k), std::move(r));
  }
  if (prefix.empty()) throw Usage("give --prefix or --ks");
  return partial_quotients(parse_prefix(prefix));
}

// A3 words are A, B, C; A9 words and their A6 projections are keyed 1..9.
std::string letter_key(Alphabet alphabet, Letter i) {
  if (alphabet == Alphabet::A3) return std::string(1, "ABC"[i]);
  return std::to_string(i + 1);
}

// ---- subcommands -----------------------------------------------------------

int run_gasket(const RunConfig& cfg, const std::string& triple, std::size_t steps, const Output& out,
               const std::string& file) {
  const Triple t = triple.empty() ? cfg.seed_triple : parse_triple(triple);
  const GasketRun run = directing_prefix(t, steps ? steps : cfg.max_steps);
  Json body = to_json(run);
  body["exit_reason"] = run.exit == GasketRun::Exit::Exhausted ? std::string("Exhausted")
                                                                 : "NotInGasket@" + std::to_string(run.exit_step);
  // blocks are read up to the last I or II; a trailing III run stays open
  DirectingPrefix closed = run.prefix;
  std::size_t open = 0;
  while (!closed.empty() && closed.back() == DirectingSymbol::III) {
    closed.pop_back();
    ++open;
  }
  body["partial_quotients"] = to_json(partial_quotients(closed));
  body["open_iii_run"] = open;
  out.emit(document("gasket", body), file);
  return 0;
}

int run_words(const RunConfig& cfg, const std::string& prefix_text, const std::string& alphabet_text,
              std::optional<std::size_t> multiplicative, std::size_t complexity, const Output& out,
              const std::string& file) {
  const DirectingPrefix prefix = parse_prefix(prefix_text);
  const Alphabet alphabet = parse_alphabet(alphabet_text);
  std::vector<Word> words;
  if (multiplicative) {
    const PartialQuotients pq = partial_quotients(prefix);
    if (alphabet == Alphabet::A6)
      for (const Word& w : multiplicative_stage_words(pq, Alphabet::A9, *multiplicative, cfg.word_cap))
        words.push_back(project(w, Alphabet::A6));
    else
      words = multiplicative_stage_words(pq, alphabet, *multiplicative, cfg.word_cap);
  } else if (alphabet == Alphabet::A6) {
    for (const Word& w : stage_words(prefix, Alphabet::A9, cfg.word_cap)) words.push_back(project(w, Alphabet::A6));
  } else {
    words = stage_words(prefix, alphabet, cfg.word_cap);
  }
  Json body = {{"prefix", to_digits(prefix)}, {"alphabet", std::string(alphabet_name(alphabet))}};
  if (alphabet == Alphabet::A6) body["projected_from"] = "a9";
  if (multiplicative) body["multiplicative_index"] = *multiplicative;
  for (Letter i = 0; i < words.size(); ++i) body[letter_key(alphabet, i)] = to_string(words[i]);
  const HeightVector h = heights_by_matrix(prefix).back();
  body["heights"] = {{"a", h.a.get_str()}, {"b", h.b.get_str()}, {"c", h.c.get_str()}};
  if (complexity > 0) {
    Json counts = Json::array();
    for (std::size_t n = 1; n <= complexity; ++n) {
      auto p = stabilized_complexity(prefix, n, cfg.word_cap);
      counts.push_back({{"n", n}, {"count", p ? Json(*p) : Json(nullptr)}});
    }
    body["complexity"] = counts;
  }
  out.emit(document("words", body), file);
  return 0;
}

int run_orbit(const RunConfig& cfg, const MapArgs& margs, const std::string& point, std::size_t length,
              const std::string& partition, bool csv, const Output& out, const std::string& file) {
  const Ar9Map m = margs.build(cfg);
  std::mt19937_64 rng(cfg.random_seed);
  const Rational x = point.empty() ? sample_point(m, rng) : parse_rational(point);
  const std::size_t n = length ? length : cfg.orbit_length;
  if (csv) {
    out.emit(frequency_csv(birkhoff_frequencies(m, x, n)), file);
    return 0;
  }
  if (partition != "nine" && partition != "three") throw ParseError("--partition is nine or three");
  const Word w = trajectory(m, x, n, partition == "nine" ? Partition::Nine : Partition::Three);
  Json body = {{"map", to_json(m)}, {"point", to_exact_string(x)}, {"length", n}, {"partition", partition},
               {"word", to_string(w)}};
  if (partition == "nine") body["frequencies"] = to_json(birkhoff_frequencies(m, x, n));
  out.emit(document("orbit", body), file);
  return 0;
}

int run_induct(const RunConfig& cfg, const MapArgs& margs, std::size_t steps, bool verify, const Output& out,
               const std::string& file) {
  const Ar9Map m0 = margs.build(cfg);
  const std::vector<InductionStage> stages = iterate_induction(m0, steps, cfg.return_time_cap);
  Json list = Json::array();
  bool ok = true;
  for (std::size_t k = 0; k < stages.size(); ++k) {
    Json s = to_json(stages[k]);
    if (verify) {
      const InductionReport r = verify_induction(k == 0 ? m0 : stages[k - 1].map, cfg.return_time_cap);
      ok = ok && r.pass();
      s["verification"] = to_json(r);
    }
    list.push_back(std::move(s));
  }
  Json body = {{"initial", to_json(m0)}, {"stages", list}};
  if (verify) body["pass"] = ok;
  out.emit(document("induct", body), file);
  return ok ? 0 : 1;
}

int run_towers(const RunConfig& cfg, const MapArgs& margs, std::size_t stage, const Output& out,
               const std::string& file) {
  const Ar9Map m0 = margs.build(cfg);
  const auto stages = iterate_induction(m0, stage, cfg.return_time_cap);
  const TowerFamily f = towers_at_stage(m0, stages, stage);
  const CheckReport pc = partition_check(f), ac = adjacency_check(f);
  const ComponentCounts cc = level_component_counts(f);
  Json body = {{"family", to_json(f)},
               {"partition", to_json(pc)},
               {"adjacency", to_json(ac)},
               {"components", to_json(cc)}};
  out.emit(document("towers", body), file);
  return pc.pass && ac.pass && cc.within_bounds() ? 0 : 1;
}

std::vector<std::string> read_prefix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read prefix file " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); }),
               line.end());
    if (!line.empty()) out.push_back(line);
  }
  if (out.empty()) throw ParseError("prefix file " + path + " has no prefixes");
  return out;
}

// Partition / adjacency / component / induction / coding checks on one prefix.
Json check_prefix(const RunConfig& cfg, const std::string& text, std::size_t depth_wanted,
                  const std::string& gaps_text, bool& all_pass) {
  const DirectingPrefix prefix = parse_prefix(text);
  const Triple t = reconstruct_triple(prefix, cfg.seed_triple);
  const std::size_t depth = std::min(depth_wanted, prefix.size());
  std::pair<Rational, Rational> gaps{Rational(0), Rational(0)};
  if (!gaps_text.empty()) {
    auto parts = split(gaps_text, ',');
    if (parts.size() != 2) throw ParseError("--gaps expects two values");
    gaps = {parse_rational(parts[0]), parse_rational(parts[1])};
  }
  CheckReport partition, adjacency, components, induction, coding;
  std::mt19937_64 rng(cfg.random_seed);
  const std::size_t word_depth = std::min<std::size_t>(depth, 6);
  std::vector<Word> expected;
  {
    const DirectingPrefix head(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(word_depth));
    expected = stage_words(head, Alphabet::A9, cfg.word_cap);
  }
  for (OrderTag order : all_orders()) {
    const Ar9Map m0 = build_ar9(t, order, gaps);
    const auto stages = iterate_induction(m0, depth, cfg.return_time_cap);
    for (std::size_t k = 0; k < depth; ++k) {
      const InductionReport r = verify_induction(k == 0 ? m0 : stages[k - 1].map, cfg.return_time_cap);
      if (!r.pass()) induction.fail(to_string(order) + " step " + std::to_string(k + 1) + ": " + r.detail);
    }
    for (std::size_t k = 0; k <= depth; ++k) {
      const TowerFamily f = towers_at_stage(m0, stages, k);
      const std::string where = to_string(order) + " stage " + std::to_string(k) + ": ";
      if (CheckReport r = partition_check(f); !r.pass) partition.fail(where + r.detail);
      if (CheckReport r = adjacency_check(f); !r.pass) adjacency.fail(where + r.detail);
      if (ComponentCounts c = level_component_counts(f); !c.within_bounds())
        components.fail(where + "component counts " + std::to_string(c.a) + "/" + std::to_string(c.b) + "/" +
                        std::to_string(c.c));
      if (k == word_depth)
        for (Letter i = 0; i < 9; ++i)
          if (f.codings[i] != expected[i])
            coding.fail(where + "tower " + std::to_string(i + 1) + " reads " + to_string(f.codings[i]));
    }
    for (int s = 0; s < 5; ++s) {
      const Rational x = sample_point(m0, rng);
      if (project(trajectory(m0, x, 2000, Partition::Nine), Alphabet::A3) != trajectory(m0, x, 2000, Partition::Three))
        coding.fail(to_string(order) + ": projected coding differs at " + to_exact_string(x));
    }
  }
  const bool pass = partition.pass && adjacency.pass && components.pass && induction.pass && coding.pass;
  all_pass = all_pass && pass;
  return {{"prefix", text},
          {"triple", to_json(t)},
          {"depth", depth},
          {"partition", to_json(partition)},
          {"adjacency", to_json(adjacency)},
          {"components", to_json(components)},
          {"induction", to_json(induction)},
          {"coding", to_json(coding)},
          {"pass", pass}};
}

int run_check(const RunConfig& cfg, bool all, const std::string& prefix_file, const std::string& prefix,
              std::size_t depth, const std::string& gaps, const Output& out, const std::string& file) {
  std::vector<std::string> prefixes;
  if (!prefix_file.empty()) prefixes = read_prefix_file(prefix_file);
  if (!prefix.empty()) prefixes.push_back(prefix);
  if (prefixes.empty()) throw Usage("check needs --prefix-file or --prefix");
  if (!all) throw Usage("only --all is implemented: it runs every check");
  bool all_pass = true;
  Json results = Json::array();
  for (const std::string& p : prefixes) results.push_back(check_prefix(cfg, p, depth, gaps, all_pass));
  out.emit(document("check", {{"depth", depth}, {"results", results}, {"pass", all_pass}}), file);
  return all_pass ? 0 : 1;
}

struct ExperimentArgs {
  std::string kind = "two-measure";
  std::string prefix;
  std::string ks;
  std::string rules;
  std::vector<std::string> thetas;
  std::string point;
  std::size_t length = 0;
  std::size_t blocks = 0;
  std::size_t count = 1000000;
  std::string csv_stem;
};

int experiment_two_measure(const RunConfig& cfg, const ExperimentArgs& a, const Output& out,
                           const std::string& file) {
  PartialQuotients pq;
  if (a.ks.empty() && a.prefix.empty()) {
    std::vector<std::uint64_t> ks;
    for (int n = 1; n <= 8; ++n) ks.push_back(std::uint64_t{1} << n);
    pq = make_partial_quotients(ks, std::vector<MultiplicativeRule>(ks.size(), MultiplicativeRule::Im));
  } else {
    pq = pq_from(a.prefix, a.ks, a.rules);
  }
  const std::size_t blocks = a.blocks ? a.blocks : pq.size();
  if (blocks > pq.size()) throw Usage("--blocks exceeds the number of partial quotients");
  const DirectingPrefix prefix = expand(pq);
  const Ar9Map m0 = build_ar9(reconstruct_triple(prefix, cfg.seed_triple), {});
  const std::size_t depth = pq.times[blocks];
  const auto stages = iterate_induction(m0, depth, cfg.return_time_cap);
  std::size_t rules_i = 0;
  for (std::size_t n = 1; n <= blocks; ++n) rules_i += pq.rule(n) == MultiplicativeRule::Im;
  const std::size_t n = a.length ? a.length : cfg.orbit_length;
  const TwoMeasureResult r = two_measure_experiment(m0, stages[depth - 1].map, depth, rules_i, n);
  const bool pass = r.distance >= cfg.l1_threshold;
  Json body = {{"partial_quotients", to_json(pq)},
               {"depth", depth},
               {"orbit_length", n},
               {"first_tower", r.first_tower + 1},
               {"second_tower", r.second_tower + 1},
               {"first", to_json(r.first)},
               {"second", to_json(r.second)},
               {"l1_distance", to_exact_string(r.distance)},
               {"l1_decimal", decimal(r.distance)},
               {"threshold", to_exact_string(cfg.l1_threshold)},
               {"pass", pass}};
  if (!a.csv_stem.empty()) {
    out.emit(frequency_csv(r.first), a.csv_stem + "-first.csv");
    out.emit(frequency_csv(r.second), a.csv_stem + "-second.csv");
  }
  out.emit(document("experiment.two-measure", body), file);
  return 0;
}

int experiment_control(const RunConfig& cfg, const ExperimentArgs& a, const Output& out, const std::string& file) {
  const DirectingPrefix prefix = parse_prefix(a.prefix.empty() ? std::string(25, '1') : a.prefix);
  const Ar9Map m0 = build_ar9(reconstruct_triple(prefix, cfg.seed_triple), {});
  std::mt19937_64 rng(cfg.random_seed);
  const Rational x = sample_point(m0, rng), y = sample_point(m0, rng);
  const std::size_t n = a.length ? a.length : cfg.orbit_length;
  const FrequencyVector u = birkhoff_frequencies(m0, x, n), v = birkhoff_frequencies(m0, y, n);
  const Rational d = l1_distance(u, v);
  if (!a.csv_stem.empty()) {
    out.emit(frequency_csv(u), a.csv_stem + "-first.csv");
    out.emit(frequency_csv(v), a.csv_stem + "-second.csv");
  }
  out.emit(document("experiment.control", {{"prefix", to_digits(prefix)},
                                           {"orbit_length", n},
                                           {"first", to_json(u)},
                                           {"second", to_json(v)},
                                           {"l1_distance", to_exact_string(d)},
                                           {"l1_decimal", decimal(d)},
                                           {"threshold", to_exact_string(cfg.control_l1_threshold)},
                                           {"pass", d <= cfg.control_l1_threshold}}),
           file);
  return 0;
}

int run_experiment(const RunConfig& cfg, const ExperimentArgs& a, const MapArgs& margs, const Output& out,
                   const std::string& file) {
  if (a.kind == "two-measure") return experiment_two_measure(cfg, a, out, file);
  if (a.kind == "control") return experiment_control(cfg, a, out, file);
  if (a.kind == "conditions") {
    const PartialQuotients pq = pq_from(a.prefix, a.ks, a.rules);
    Json body = {{"partial_quotients", to_json(pq)},
                 {"report", to_json(condition_report(pq, cfg.thresholds()))},
                 {"tourab", to_json(tourab_patterns(pq))}};
    out.emit(document("experiment.conditions", body), file);
    return 0;
  }
  if (a.kind == "eigen") {
    const PartialQuotients pq = pq_from(a.prefix, a.ks, a.rules);
    if (a.thetas.empty()) throw Usage("eigen needs at least one --theta");
    Json scans = Json::array();
    for (const std::string& th : a.thetas) scans.push_back(to_json(eigenvalue_scan(pq, parse_rational(th), cfg.thresholds())));
    out.emit(document("experiment.eigen", {{"partial_quotients", to_json(pq)}, {"scans", scans}}), file);
    return 0;
  }
  if (a.kind == "square-sum") {
    // sum of 1/k_n for k_n = n^2, n = 1..count
    std::vector<std::uint64_t> ks(a.count);
    for (std::size_t n = 1; n <= a.count; ++n) ks[n - 1] = static_cast<std::uint64_t>(n) * n;
    const Fraction f = reciprocal_sum(ks);
    const Rational bound(17, 10);
    out.emit(document("experiment.square-sum", {{"count", a.count},
                                                {"approx", f.approx()},
                                                {"bound", to_exact_string(bound)},
                                                {"within_bound", f.at_most(bound)}}),
             file);
    return 0;
  }
  if (a.kind == "preimage") {
    const Ar9Map m = margs.build(cfg);
    std::mt19937_64 rng(cfg.random_seed);
    const Rational x = a.point.empty() ? sample_point(m, rng) : parse_rational(a.point);
    const std::size_t n = a.length ? a.length : cfg.refinement_depth;
    const Word target = trajectory(m, x, n, Partition::Three);
    const PreimageReport r = preimage_clusters(m, target);
    out.emit(document("experiment.preimage", {{"point", to_exact_string(x)},
                                              {"target", to_string(target)},
                                              {"report", to_json(r)}}),
             file);
    return 0;
  }
  throw Usage("unknown experiment kind '" + a.kind + "'");
}

int run_render(const RunConfig& cfg, const MapArgs& margs, const std::string& what, std::size_t stage,
               const Output& out, const std::string& file) {
  const Ar9Map m0 = margs.build(cfg);
  std::string svg;
  if (what == "layout") {
    svg = svg_layout(m0);
  } else if (what == "induction") {
    const InductionStage s = induce_step(m0, cfg.return_time_cap);
    svg = svg_induction(m0, s);
  } else if (what == "towers") {
    const auto stages = iterate_induction(m0, stage, cfg.return_time_cap);
    svg = svg_towers(towers_at_stage(m0, stages, stage));
  } else if (what == "circle") {
    svg = svg_circle(m0.order().reversed ? build_ar6_canonical(m0.triple()) : glue_to_ar6(m0));
  } else {
    throw Usage("render needs one of --layout, --induction, --towers, --circle");
  }
  out.emit(svg, file);
  return 0;
}

void report_error(std::string_view kind, std::string_view message, int code) {
  std::cerr << error_document(kind, message, code).dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Arnoux-Rauzy interval exchanges: gasket, words, orbits, induction, towers"};
  app.require_subcommand(1);
  std::string config_path, out_file;
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--out", out_file, "write the result under output_dir instead of stdout");

  std::string g_triple;
  std::size_t g_steps = 0;
  auto* gasket = app.add_subcommand("gasket", "directing prefix of a length triple");
  gasket->add_option("--triple", g_triple, "a,b,c");
  gasket->add_option("--steps", g_steps, "maximum number of steps");

  std::string w_prefix, w_alphabet = "a3";
  std::optional<std::size_t> w_mult;
  std::size_t w_complexity = 0;
  auto* words = app.add_subcommand("words", "stage words of a directing prefix");
  words->add_option("--prefix", w_prefix, "digits 1/2/3")->required();
  words->add_option("--alphabet", w_alphabet, "a3|a6|a9");
  words->add_option("--multiplicative", w_mult, "build the words at multiplicative time m_n by block rules");
  words->add_option("--complexity", w_complexity, "also report factor complexity for n = 1..N");

  MapArgs o_map;
  std::string o_point, o_partition = "nine";
  std::size_t o_length = 0;
  bool o_csv = false;
  auto* orbit = app.add_subcommand("orbit", "exact orbit and coding of one point");
  o_map.attach(orbit);
  orbit->add_option("--point", o_point, "starting point p/q (default: sampled from random_seed)");
  orbit->add_option("--length", o_length, "number of steps (default: orbit_length)");
  orbit->add_option("--partition", o_partition, "nine|three");
  orbit->add_flag("--csv", o_csv, "letter frequencies as CSV");

  MapArgs i_map;
  std::size_t i_steps = 1;
  bool i_verify = false;
  auto* induct = app.add_subcommand("induct", "iterate the first-return induction");
  i_map.attach(induct);
  induct->add_option("--steps", i_steps, "number of induction steps");
  induct->add_flag("--verify", i_verify, "recheck every step independently");

  MapArgs t_map;
  std::size_t t_stage = 1;
  auto* towers = app.add_subcommand("towers", "towers over the stage-k pieces");
  t_map.attach(towers);
  towers->add_option("--stage", t_stage, "stage k");

  bool c_all = false;
  std::string c_file, c_prefix, c_gaps;
  std::size_t c_depth = 6;
  auto* check = app.add_subcommand("check", "structural checks over a list of prefixes");
  check->add_flag("--all", c_all, "partition, adjacency, component, induction and coding checks");
  check->add_option("--prefix-file", c_file, "one digit prefix per line, '#' comments");
  check->add_option("--prefix", c_prefix, "a single prefix");
  check->add_option("--depth", c_depth, "induction depth");
  check->add_option("--gaps", c_gaps, "gaps g1,g2 between the omegas");

  ExperimentArgs e;
  MapArgs e_map;
  auto* experiment = app.add_subcommand("experiment", "finite experiments on ergodic properties");
  experiment->add_option("--kind", e.kind, "two-measure|control|conditions|eigen|square-sum|preimage");
  e_map.attach(experiment);
  experiment->add_option("--ks", e.ks, "partial quotients k1,k2,...");
  experiment->add_option("--rules", e.rules, "closing rule per block, digits 1 or 2");
  experiment->add_option("--theta", e.thetas, "candidate eigenvalue p/q (repeatable)");
  experiment->add_option("--point", e.point, "starting point for preimage");
  experiment->add_option("--length", e.length, "orbit or target length");
  experiment->add_option("--blocks", e.blocks, "number of blocks N for the depth m_N");
  experiment->add_option("--count", e.count, "terms for square-sum");
  experiment->add_option("--csv", e.csv_stem, "also write <stem>-first.csv and <stem>-second.csv");

  MapArgs r_map;
  bool r_layout = false, r_induction = false, r_towers = false, r_circle = false;
  std::size_t r_stage = 1;
  auto* render = app.add_subcommand("render", "SVG figures");
  r_map.attach(render);
  render->add_flag("--layout", r_layout, "domain and image rows of the nine pieces");
  render->add_flag("--induction", r_induction, "one induction step with the induction set dashed");
  render->add_flag("--towers", r_towers, "towers at --stage");
  render->add_flag("--circle", r_circle, "six-arc circle exchange");
  render->add_option("--stage", r_stage, "stage for --towers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);
    report_error("UsageError", err.what(), 2);
    return 2;
  }

  try {
    const RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    const Output out(cfg);
    if (*gasket) return run_gasket(cfg, g_triple, g_steps, out, out_file);
    if (*words) return run_words(cfg, w_prefix, w_alphabet, w_mult, w_complexity, out, out_file);
    if (*orbit) return run_orbit(cfg, o_map, o_point, o_length, o_partition, o_csv, out, out_file);
    if (*induct) return run_induct(cfg, i_map, i_steps, i_verify, out, out_file);
    if (*towers) return run_towers(cfg, t_map, t_stage, out, out_file);
    if (*check) return run_check(cfg, c_all, c_file, c_prefix, c_depth, c_gaps, out, out_file);
    if (*experiment) {
      e.prefix = e_map.prefix;
      return run_experiment(cfg, e, e_map, out, out_file);
    }
    if (*render) {
      const int chosen = r_layout + r_induction + r_towers + r_circle;
      if (chosen != 1) throw Usage("render needs exactly one of --layout, --induction, --towers, --circle");
      const char* what = r_layout ? "layout" : r_induction ? "induction" : r_towers ? "towers" : "circle";
      return run_render(cfg, r_map, what, r_stage, out, out_file);
    }
  } catch (const Usage& err) {
    report_error("UsageError", err.what(), 2);
    return 2;
  } catch (const ParseError& err) {
    report_error("ParseError", err.what(), 2);
    return 2;
  } catch (const DomainError& err) {
    report_error(err.kind(), err.what(), 1);
    return 1;
  } catch (const std::exception& err) {
    report_error("RuntimeError", err.what(), 1);
    return 1;
  }
  return 2;
}
