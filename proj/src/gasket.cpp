#include "ariet/gasket.hpp"

#include <algorithm>

#include "ariet/error.hpp"

namespace ariet {

Triple default_seed() { return Triple{4, 2, 1}; }

StepResult ar_step(const Triple& t) {
  if (!t.admissible()) {
    throw Inadmissible("triple is not strictly decreasing and positive");
  }
  Rational d = t.a - t.b - t.c;
  if (d <= 0) throw NotInGasket(1, "a-b-c <= 0");
  if (d == t.b || d == t.c) throw NotInGasket(1, "a-b-c ties with b or c");
  if (d > t.b) return {Triple{d, t.b, t.c}, DirectingSymbol::III};
  if (d > t.c) return {Triple{t.b, d, t.c}, DirectingSymbol::II};
  return {Triple{t.b, t.c, d}, DirectingSymbol::I};
}

GasketRun directing_prefix(const Triple& t, std::size_t max_steps) {
  if (!t.admissible()) throw Inadmissible("triple is not strictly decreasing and positive");
  GasketRun run;
  run.triples.push_back(t);
  for (std::size_t step = 1; step <= max_steps; ++step) {
    try {
      StepResult r = ar_step(run.triples.back());
      run.prefix.push_back(r.symbol);
      run.triples.push_back(std::move(r.next));
    } catch (const NotInGasket& e) {
      run.exit = GasketRun::Exit::NotInGasket;
      run.exit_step = step;
      run.exit_reason = e.reason();
      return run;
    }
  }
  run.exit = GasketRun::Exit::Exhausted;
  return run;
}

Triple reconstruct_triple(const DirectingPrefix& prefix, const Triple& seed) {
  if (!seed.admissible()) throw InvalidSeed("seed triple is not admissible");
  if (prefix.size() > kReconstructionCap) {
    throw Overflow("reconstruction prefix longer than " + std::to_string(kReconstructionCap));
  }
  Triple t = seed;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    Rational sum = t.a + t.b + t.c;
    switch (*it) {
      case DirectingSymbol::III: t = Triple{sum, t.b, t.c}; break;
      case DirectingSymbol::II: t = Triple{sum, t.a, t.c}; break;
      case DirectingSymbol::I: t = Triple{sum, t.a, t.b}; break;
    }
  }
  return t;
}

PartialQuotients make_partial_quotients(std::vector<std::uint64_t> ks,
                                        std::vector<MultiplicativeRule> rules) {
  if (ks.size() != rules.size()) throw std::invalid_argument("ks and rules differ in length");
  PartialQuotients pq;
  pq.times.push_back(0);
  for (std::uint64_t k : ks) {
    if (k == 0) throw std::invalid_argument("partial quotients are positive");
    pq.times.push_back(pq.times.back() + k);
  }
  pq.ks = std::move(ks);
  pq.rules = std::move(rules);
  return pq;
}

PartialQuotients partial_quotients(const DirectingPrefix& prefix) {
  std::vector<std::uint64_t> ks;
  std::vector<MultiplicativeRule> rules;
  std::uint64_t run = 0;
  for (DirectingSymbol s : prefix) {
    ++run;
    if (s == DirectingSymbol::III) continue;
    ks.push_back(run);
    rules.push_back(s == DirectingSymbol::I ? MultiplicativeRule::Im : MultiplicativeRule::IIm);
    run = 0;
  }
  if (run != 0) {
    throw IncompletePrefix("trailing run of " + std::to_string(run) + " III not closed by I or II");
  }
  return make_partial_quotients(std::move(ks), std::move(rules));
}

DirectingPrefix expand(const PartialQuotients& pq) {
  DirectingPrefix out;
  for (std::size_t i = 0; i < pq.ks.size(); ++i) {
    out.insert(out.end(), pq.ks[i] - 1, DirectingSymbol::III);
    out.push_back(pq.rules[i] == MultiplicativeRule::Im ? DirectingSymbol::I : DirectingSymbol::II);
  }
  return out;
}

std::array<Rational, 3> omega_lengths(const Triple& t) {
  return {t.a + t.b, t.b + t.c, t.a + t.c};
}

std::string to_digits(const DirectingPrefix& prefix) {
  std::string out;
  out.reserve(prefix.size());
  for (DirectingSymbol s : prefix) out.push_back(static_cast<char>('0' + static_cast<int>(s)));
  return out;
}

DirectingPrefix parse_prefix(std::string_view digits) {
  DirectingPrefix out;
  for (char ch : digits) {
    switch (ch) {
      case '1': out.push_back(DirectingSymbol::I); break;
      case '2': out.push_back(DirectingSymbol::II); break;
      case '3': out.push_back(DirectingSymbol::III); break;
      default: throw ParseError(std::string("directing prefix digit '") + ch + "' not in {1,2,3}");
    }
  }
  return out;
}

std::string_view symbol_name(DirectingSymbol s) {
  switch (s) {
    case DirectingSymbol::I: return "I";
    case DirectingSymbol::II: return "II";
    case DirectingSymbol::III: return "III";
  }
  return "?";
}

Triple parse_triple(std::string_view text) {
  std::array<Rational, 3> v;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t comma = text.find(',', start);
    if ((i < 2) == (comma == std::string_view::npos)) {
      throw ParseError("triple must have exactly three comma-separated entries");
    }
    v[i] = parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    start = comma + 1;
  }
  return Triple{v[0], v[1], v[2]};
}

std::array<std::string, 3> to_strings(const Triple& t) {
  return {to_exact_string(t.a), to_exact_string(t.b), to_exact_string(t.c)};
}

}  // namespace ariet
