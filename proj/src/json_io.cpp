#include "ariet/json_io.hpp"

#include <cstdio>
#include <sstream>

namespace ariet {

std::string schema_tag(std::string_view name) { return "ar-iet." + std::string(name) + "/1"; }

std::string decimal(const Rational& r, int digits) {
  // Exact rounding to `digits` places: floor(r * 10^d + 1/2).
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = r < 0;
  Rational scaled = abs(r) * Rational(scale) + Rational(1, 2);
  Integer n = floor_of(scaled);
  Integer whole = n / scale;
  Integer frac = n % scale;
  std::string fs = frac.get_str();
  fs.insert(0, static_cast<std::size_t>(digits) - fs.size(), '0');
  return (negative && n != 0 ? "-" : "") + whole.get_str() + (digits > 0 ? "." + fs : "");
}

Json to_json(const Rational& r) { return to_exact_string(r); }

Json to_json(const Triple& t) { return Json::array({to_json(t.a), to_json(t.b), to_json(t.c)}); }

Json to_json(const Interval& iv) { return Json::array({to_json(iv.lo), to_json(iv.hi)}); }

Json to_json(const IntervalSet& s) {
  Json out = Json::array();
  for (const Interval& iv : s.parts()) out.push_back(to_json(iv));
  return out;
}

Json to_json(const PartialQuotients& pq) {
  Json rules = Json::array();
  for (auto r : pq.rules) rules.push_back(r == MultiplicativeRule::Im ? "I_m" : "II_m");
  return {{"ks", pq.ks}, {"rules", rules}, {"times", pq.times}};
}

Json to_json(const GasketRun& run) {
  Json triples = Json::array();
  for (const Triple& t : run.triples) triples.push_back(to_json(t));
  Json exit = {{"kind", run.exit == GasketRun::Exit::Exhausted ? "Exhausted" : "NotInGasket"}};
  if (run.exit == GasketRun::Exit::NotInGasket) {
    exit["at_step"] = run.exit_step;
    exit["reason"] = run.exit_reason;
  }
  return {{"prefix", to_digits(run.prefix)}, {"length", run.prefix.size()}, {"triples", triples}, {"exit", exit}};
}

Json to_json(const Ar9Map& m) {
  static const char* names[3] = {"omega", "omega_prime", "omega_second"};
  Json omegas = Json::object();
  for (int w = 0; w < 3; ++w) omegas[names[w]] = to_json(m.omegas()[w]);
  Json pieces = Json::array();
  for (Letter i = 0; i < 9; ++i)
    pieces.push_back({{"letter", i + 1},
                      {"domain", to_json(m.piece(i))},
                      {"image", to_json(m.image(i))},
                      {"offset", to_json(m.offset(i))}});
  return {{"triple", to_json(m.triple())}, {"order", to_string(m.order())}, {"omegas", omegas}, {"pieces", pieces}};
}

Json to_json(const Ar6Map& m) {
  Json arcs = Json::array();
  for (const Ar6Arc& arc : m.arcs()) {
    Json segs = Json::array();
    for (const Interval& s : arc.segments) segs.push_back(to_json(s));
    arcs.push_back({{"label", to_string(Word{Alphabet::A6, {arc.label}})},
                    {"start", to_json(arc.start())},
                    {"length", to_json(arc.length())},
                    {"segments", segs},
                    {"offset", to_json(arc.offset)}});
  }
  return {{"triple", to_json(m.triple())}, {"circumference", to_json(m.circumference())}, {"arcs", arcs}};
}

Json to_json(const InductionStage& stage) {
  Json returns = Json::array();
  for (Letter i = 0; i < 9; ++i)
    returns.push_back({{"letter", i + 1}, {"time", stage.return_time[i]}, {"word", to_string(stage.return_word[i])}});
  return {{"k", stage.k},
          {"symbol", std::string(symbol_name(stage.symbol))},
          {"predicted_order", to_string(stage.predicted)},
          {"map", to_json(stage.map)},
          {"returns", returns}};
}

Json to_json(const InductionReport& r) {
  return {{"pass", r.pass()},
          {"triple_matches", r.triple_matches},
          {"order_matches", r.order_matches},
          {"lengths_match", r.lengths_match},
          {"images_match", r.images_match},
          {"words_match", r.words_match},
          {"detail", r.detail}};
}

namespace {

Json tower_json(const Tower& t, bool nine_letter) {
  Json levels = Json::array();
  for (const IntervalSet& level : t.levels) levels.push_back(to_json(level));
  const std::string label = nine_letter ? std::to_string(t.label + 1) : std::string(1, "abc"[t.label]);
  return {{"label", label}, {"height", t.height()}, {"levels", levels}};
}

}  // namespace

Json to_json(const TowerFamily& f) {
  Json nine = Json::array(), three = Json::array();
  for (Letter i = 0; i < 9; ++i) {
    Json t = tower_json(f.nine[i], true);
    t["coding"] = to_string(f.codings[i]);
    nine.push_back(std::move(t));
  }
  for (const Tower& t : f.three) three.push_back(tower_json(t, false));
  return {{"stage", f.stage}, {"order", to_string(f.order)}, {"space", to_json(f.space)}, {"nine", nine}, {"three", three}};
}

Json to_json(const CheckReport& r) { return {{"pass", r.pass}, {"detail", r.detail}}; }

Json to_json(const ComponentCounts& c) {
  return {{"a", c.a}, {"b", c.b}, {"c", c.c}, {"within_bounds", c.within_bounds()}};
}

Json to_json(const XiTerm& t) {
  Json j = {{"n", t.n}, {"branch", t.branch}, {"value", to_json(t.value)}};
  if (t.branch == 2) j["l"] = t.l;
  return j;
}

Json to_json(const TwmReport& r) {
  return {{"n_i", r.n_i},
          {"k_n_i_plus_2", r.k_after2},
          {"max_first_half", r.max_first_half},
          {"max_second_half", r.max_second_half},
          {"bounded_evidence", r.bounded_evidence},
          {"sum_inv_k_n_i_plus_1", to_json(r.inv_k_after1_sum)},
          {"sum_inv_k_n_i", to_json(r.inv_k_at_sum)},
          {"tail_inv_k_n_i_plus_1", to_json(r.inv_k_after1_tail)},
          {"tail_inv_k_n_i", to_json(r.inv_k_at_tail)},
          {"pattern", r.pattern},
          {"prefix_only", true}};
}

Json to_json(const ConditionReport& r) {
  Json xi = Json::array(), partial = Json::array();
  for (const XiTerm& t : r.xi) xi.push_back(to_json(t));
  for (const Rational& s : r.xi_partial) partial.push_back(to_json(s));
  return {{"xi", xi},
          {"xi_partial_sums", partial},
          {"sum_inv_k", to_json(r.inv_k_sum)},
          {"tail_inv_k", to_json(r.inv_k_tail)},
          {"flags",
           {{"mtours_evidence", r.mtours_evidence},
            {"nue_evidence", r.nue_evidence},
            {"bqp_bound", r.bqp_bound},
            {"twm_pattern", r.twm.pattern},
            {"prefix_only", true}}},
          {"twm", to_json(r.twm)}};
}

Json to_json(const TourabPatterns& p) { return {{"pattern_i", p.pattern_i}, {"pattern_ii", p.pattern_ii}}; }

Json to_json(const EigenScan& s) {
  Json values = Json::array();
  for (const Rational& v : s.values) values.push_back(to_json(v));
  Json j = {{"theta", to_json(s.theta)},
            {"floor", to_json(s.floor)},
            {"values", values},
            {"exceedances", s.exceedances},
            {"verdict", s.survives() ? "survives_prefix" : "rejected"}};
  if (s.rejected_at) j["rejected_at_n"] = *s.rejected_at;
  return j;
}

Json to_json(const FrequencyVector& f) {
  Json freq = Json::array();
  for (Letter i = 0; i < 9; ++i) freq.push_back(to_json(f.frequency(i)));
  return {{"start", to_json(f.start)}, {"length", f.length}, {"counts", f.counts}, {"frequencies", freq}};
}

Json to_json(const PreimageReport& r) {
  return {{"depth", r.depth},
          {"clusters", r.clusters},
          {"witness", to_json(r.witness)},
          {"counts_by_length", r.counts_by_length}};
}

Json to_json(const RunConfig& c) {
  return {{"seed_triple", to_json(c.seed_triple)},
          {"max_steps", c.max_steps},
          {"word_cap", c.word_cap},
          {"return_time_cap", c.return_time_cap},
          {"refinement_depth", c.refinement_depth},
          {"orbit_length", c.orbit_length},
          {"l1_threshold", to_json(c.l1_threshold)},
          {"control_l1_threshold", to_json(c.control_l1_threshold)},
          {"xi_sum_threshold", to_json(c.xi_sum_threshold)},
          {"xi_trend_fraction", to_json(c.xi_trend_fraction)},
          {"nue_tail_threshold", to_json(c.nue_tail_threshold)},
          {"eigen_recurrences", c.eigen_recurrences},
          {"output_dir", c.output_dir},
          {"random_seed", c.random_seed}};
}

Json document(std::string_view schema, Json body) {
  Json out = {{"schema", schema_tag(schema)}};
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

Json error_document(std::string_view kind, std::string_view message, int exit_code) {
  return document("error", {{"error", kind}, {"message", message}, {"exit_code", exit_code}});
}

std::string frequency_csv(const FrequencyVector& f) {
  std::ostringstream out;
  out << "letter,count,frequency,decimal\n";
  for (Letter i = 0; i < 9; ++i)
    out << (i + 1) << "," << f.counts[i] << "," << to_exact_string(f.frequency(i)) << ","
        << decimal(f.frequency(i)) << "\n";
  return out.str();
}

}  // namespace ariet
