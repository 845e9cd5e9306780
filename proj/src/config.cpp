#include "ariet/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "ariet/error.hpp"

namespace ariet {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::uint64_t parse_count(const std::string& key, const std::string& value, bool positive) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw ParseError("config key '" + key + "' expects a nonnegative integer, got '" + value + "'");
  if (positive && out == 0) throw ParseError("config key '" + key + "' must be positive");
  return out;
}

Rational parse_positive_rational(const std::string& key, const std::string& value) {
  Rational r = parse_rational(value);
  if (r <= 0) throw ParseError("config key '" + key + "' must be positive");
  return r;
}

}  // namespace

Thresholds RunConfig::thresholds() const {
  Thresholds th;
  th.xi_sum = xi_sum_threshold;
  th.xi_trend_fraction = xi_trend_fraction;
  th.nue_tail = nue_tail_threshold;
  th.eigen_recurrences = eigen_recurrences;
  return th;
}

RunConfig parse_config(std::istream& in) {
  RunConfig c;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (value.empty()) throw ParseError("config line " + std::to_string(lineno) + ": empty value for '" + key + "'");

    if (key == "seed_triple") {
      c.seed_triple = parse_triple(value);
      if (!c.seed_triple.admissible()) throw ParseError("config seed_triple must satisfy a > b > c > 0");
    } else if (key == "max_steps") c.max_steps = parse_count(key, value, true);
    else if (key == "word_cap") c.word_cap = parse_count(key, value, true);
    else if (key == "return_time_cap") c.return_time_cap = parse_count(key, value, true);
    else if (key == "refinement_depth") c.refinement_depth = parse_count(key, value, true);
    else if (key == "orbit_length") c.orbit_length = parse_count(key, value, true);
    else if (key == "l1_threshold") c.l1_threshold = parse_positive_rational(key, value);
    else if (key == "control_l1_threshold") c.control_l1_threshold = parse_positive_rational(key, value);
    else if (key == "xi_sum_threshold") c.xi_sum_threshold = parse_positive_rational(key, value);
    else if (key == "xi_trend_fraction") c.xi_trend_fraction = parse_positive_rational(key, value);
    else if (key == "nue_tail_threshold") c.nue_tail_threshold = parse_positive_rational(key, value);
    else if (key == "eigen_recurrences") c.eigen_recurrences = parse_count(key, value, true);
    else if (key == "output_dir") c.output_dir = value;
    else if (key == "random_seed") c.random_seed = parse_count(key, value, false);
    else throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path.string() + "'");
  return parse_config(in);
}

std::string to_config_text(const RunConfig& c) {
  const auto t = to_strings(c.seed_triple);
  std::map<std::string, std::string> kv{
      {"seed_triple", t[0] + "," + t[1] + "," + t[2]},
      {"max_steps", std::to_string(c.max_steps)},
      {"word_cap", std::to_string(c.word_cap)},
      {"return_time_cap", std::to_string(c.return_time_cap)},
      {"refinement_depth", std::to_string(c.refinement_depth)},
      {"orbit_length", std::to_string(c.orbit_length)},
      {"l1_threshold", to_exact_string(c.l1_threshold)},
      {"control_l1_threshold", to_exact_string(c.control_l1_threshold)},
      {"xi_sum_threshold", to_exact_string(c.xi_sum_threshold)},
      {"xi_trend_fraction", to_exact_string(c.xi_trend_fraction)},
      {"nue_tail_threshold", to_exact_string(c.nue_tail_threshold)},
      {"eigen_recurrences", std::to_string(c.eigen_recurrences)},
      {"output_dir", c.output_dir},
      {"random_seed", std::to_string(c.random_seed)},
  };
  std::ostringstream out;
  for (const auto& [k, v] : kv) out << k << "=" << v << "\n";
  return out.str();
}

}  // namespace ariet
