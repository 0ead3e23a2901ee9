#include "cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hldecomp/errors.hpp"
#include "hldecomp/weyl_characters.hpp"

namespace hldecomp::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::int64_t parse_int(const std::string& raw) {
  std::size_t pos = 0;
  std::string s = raw;
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw InputError("'" + raw + "' is not an integer");
  }
  if (pos != s.size()) throw InputError("'" + raw + "' is not an integer");
  return v;
}

// Rethrows InputError-like failures with the offending flag in front.
template <typename Fn>
auto for_flag(const std::string& flag, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw InputError(flag + ": " + e.what());
  }
}

const char* command_name(Command c) {
  switch (c) {
    case Command::Decompose:
      return "decompose";
    case Command::Oracle:
      return "oracle";
    case Command::Crosscheck:
      return "crosscheck";
    case Command::HlInfo:
      return "hl-info";
    case Command::Character:
      return "character";
  }
  return "?";
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  if (text.empty()) throw InputError("empty list");
  std::vector<std::int64_t> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_int(part));
  return out;
}

DrinfeldWord parse_word(int n, const std::string& text) {
  std::vector<WordFactor> factors;
  if (!text.empty()) {
    for (const auto& part : split(text, ',')) {
      const auto colon = part.find(':');
      if (colon == std::string::npos) throw InputError("factor '" + part + "' is not i:m");
      factors.push_back({static_cast<int>(parse_int(part.substr(0, colon))),
                         parse_int(part.substr(colon + 1))});
    }
  }
  return DrinfeldWord(n, std::move(factors));
}

IntervalJ parse_interval(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("interval '" + text + "' is not LO:HI");
  IntervalJ J{static_cast<int>(parse_int(text.substr(0, colon))),
              static_cast<int>(parse_int(text.substr(colon + 1)))};
  if (J.lo > J.hi) throw InputError("interval '" + text + "' has LO > HI");
  return J;
}

XiTuple parse_xi(int n, const std::string& text) {
  RawXi raw;
  for (const auto& part : split(text, ',')) {
    const auto dash = part.find('-');
    const auto colon = part.find(':');
    if (dash == std::string::npos || colon == std::string::npos || dash > colon)
      throw InputError("entry '" + part + "' is not i-j:v");
    const PositiveRoot alpha{static_cast<int>(parse_int(part.substr(0, dash))),
                             static_cast<int>(parse_int(part.substr(dash + 1, colon - dash - 1)))};
    if (raw.count(alpha)) throw InputError("entry '" + part + "' is repeated");
    raw[alpha] = parse_int(part.substr(colon + 1));
  }
  return normalize_xi(raw, n);
}

ParseResult parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Graded decompositions of prime representations in the Hernandez-Leclerc category",
               "hldecomp"};
  std::string command, pi, kappa, interval, xi, lambda, gamma, mode, format = "plain", cache;
  int n = 0;
  int power = 0;
  bool relaxed = false;
  app.add_option("command", command, "decompose | oracle | crosscheck | hl-info | character")
      ->required()
      ->check(CLI::IsMember({"decompose", "oracle", "crosscheck", "hl-info", "character"}));
  app.add_option("--n", n, "rank n of sl_{n+1}")->required()->check(CLI::PositiveNumber);
  app.add_option("--pi", pi, "word \"i1:m1,i2:m2,...\" of fundamental l-weights");
  app.add_option("--kappa", kappa, "height function \"k1,k2,...,kn\"");
  app.add_option("--interval", interval, "interval J as LO:HI (with --kappa)");
  app.add_option("--xi", xi, "xi tuple \"i-j:v,...\" over every positive root");
  app.add_option("--lambda", lambda, "dominant weight \"l1,...,ln\"");
  app.add_option("--gamma", gamma, "restrict to gamma = \"r1,...,rn\"");
  app.add_option("--mode", mode, "oracle mode")->check(CLI::IsMember({"pair", "full"}));
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"plain", "json", "latex"}));
  app.add_option("--cache", cache, "result cache directory (HLDECOMP_CACHE overrides)");
  app.add_flag("--relaxed-empty-groups", relaxed,
               "drop capacity inequalities of groups without variables");
  app.add_option("--power", power, "character: decompose the N-th tensor power")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {std::nullopt, 0, app.help()};
  } catch (const CLI::ParseError& e) {
    return {std::nullopt, 2, std::string("error: ") + e.what()};
  }

  auto given = [&](const char* flag) { return app.count(flag) > 0; };
  JobSpec job;
  job.n = n;
  job.relaxed_empty_groups = relaxed;
  if (command == "decompose") job.command = Command::Decompose;
  if (command == "oracle") job.command = Command::Oracle;
  if (command == "crosscheck") job.command = Command::Crosscheck;
  if (command == "hl-info") job.command = Command::HlInfo;
  if (command == "character") job.command = Command::Character;

  try {
    job.format = parse_report_format(format);
    if (given("--pi") && (given("--kappa") || given("--interval")))
      throw InputError("--pi: give either --pi or --kappa/--interval, not both");
    if (given("--kappa") != given("--interval"))
      throw InputError(given("--kappa") ? "--interval: required with --kappa"
                                        : "--kappa: required with --interval");
    if (given("--pi")) job.word = for_flag("--pi", [&] { return parse_word(n, pi); });
    if (given("--kappa")) {
      job.kappa = for_flag("--kappa", [&] {
        auto values = parse_int_list(kappa);
        if (static_cast<int>(values.size()) != n)
          throw InputError("expected " + std::to_string(n) + " values");
        return HeightFunction(std::move(values));
      });
      job.interval = for_flag("--interval", [&] {
        auto J = parse_interval(interval);
        if (J.lo < 1 || J.hi > n) throw InputError("interval must lie inside [1, n]");
        return J;
      });
      job.word = for_flag("--kappa", [&] { return pi_from_interval(*job.kappa, *job.interval); });
    }
    if (given("--xi")) job.xi = for_flag("--xi", [&] { return parse_xi(n, xi); });
    if (given("--lambda")) {
      job.lambda = for_flag("--lambda", [&] {
        Weight w(parse_int_list(lambda));
        if (w.rank() != n) throw InputError("expected " + std::to_string(n) + " values");
        if (!w.is_dominant()) throw NonDominantError("weight " + w.to_string() + " is not dominant");
        return w;
      });
    }
    if (given("--gamma")) {
      job.gamma = for_flag("--gamma", [&] {
        RootLatticeElement g(parse_int_list(gamma));
        if (g.rank() != n) throw InputError("expected " + std::to_string(n) + " values");
        return g;
      });
    }
    if (given("--power")) job.power = power;

    const bool has_word = job.word.has_value();
    auto need_word = [&] {
      if (!has_word) throw InputError("--pi: a word is required (--pi or --kappa/--interval)");
      for_flag(given("--pi") ? "--pi" : "--kappa", [&] { require_valid(*job.word); });
    };
    switch (job.command) {
      case Command::Decompose:
      case Command::Crosscheck:
        need_word();
        if (given("--xi")) throw InputError("--xi: not accepted by " + command);
        if (given("--lambda")) throw InputError("--lambda: not accepted by " + command);
        break;
      case Command::Oracle: {
        const bool full = given("--mode") ? mode == "full" : given("--xi");
        job.mode = full ? OracleMode::FullXi : OracleMode::Pair;
        if (full) {
          if (has_word) throw InputError("--pi: full mode takes --xi and --lambda, not a word");
          if (!job.xi) throw InputError("--xi: required in full mode");
          if (!job.lambda) throw InputError("--lambda: required in full mode");
        } else {
          if (given("--xi")) throw InputError("--xi: not accepted in pair mode");
          if (given("--lambda")) throw InputError("--lambda: pair mode takes the weight of the word");
          need_word();
        }
        break;
      }
      case Command::HlInfo:
        need_word();
        break;
      case Command::Character:
        if (!job.lambda) throw InputError("--lambda: required by character");
        break;
    }
    if (job.gamma) {
      const Weight top = job.lambda && job.command != Command::Decompose ? *job.lambda
                         : job.word                                      ? weight_of(*job.word)
                                                                         : Weight::zero(n);
      const auto mu = weight_minus_gamma(top, *job.gamma);
      if (!mu.is_dominant())
        throw InputError("--gamma: weight - gamma = " + mu.to_string() + " is not dominant");
    }
    if (const char* env = std::getenv("HLDECOMP_CACHE"); env && *env) job.cache_dir = env;
    else if (given("--cache")) job.cache_dir = cache;
  } catch (const Error& e) {
    return {std::nullopt, 2, std::string("error: ") + e.what()};
  }
  return {std::move(job), 0, {}};
}

std::string cache_key(const JobSpec& job) {
  std::ostringstream key;
  key << "hldecomp-cache-v1;" << command_name(job.command) << ";n=" << job.n;
  if (job.word) {
    auto factors = job.word->factors();
    std::sort(factors.begin(), factors.end());
    key << ";pi=" << DrinfeldWord(job.n, factors).to_string();
  }
  if (job.xi) key << ";xi=" << job.xi->to_string();
  if (job.lambda) key << ";lambda=" << job.lambda->to_string();
  key << ";gamma=" << (job.gamma ? job.gamma->to_string() : std::string("all"));
  key << ";mode=" << to_string(job.mode);
  key << ";relaxed=" << (job.relaxed_empty_groups ? 1 : 0);
  return key.str();
}

namespace {

GradedDecomposition compute_polytope(const JobSpec& job) {
  MultiplicityOptions options;
  if (job.relaxed_empty_groups) options.policy = EmptyGroupPolicy::Relax;
  return graded_decomposition(*job.word, options, job.gamma);
}

GradedDecomposition compute_oracle(const JobSpec& job) {
  const auto input = job.mode == OracleMode::FullXi ? OracleInput::from_xi(*job.xi, *job.lambda)
                                                    : OracleInput::from_word(*job.word);
  return oracle_decomposition(input, job.gamma);
}

template <typename Compute>
GradedDecomposition cached(const JobSpec& job, std::ostream& err, Compute&& compute) {
  if (!job.cache_dir) return compute(job);
  const auto key = cache_key(job);
  if (auto hit = cache_lookup(*job.cache_dir, key, err)) return *hit;
  auto dec = compute(job);
  cache_store(*job.cache_dir, key, dec, err);
  return dec;
}

std::string describe_difference(const GradedDecomposition& a, const GradedDecomposition& b) {
  if (a.domain != b.domain) return "the dominant gamma domains differ";
  for (const auto& g : a.domain) {
    const auto pa = a.at(g), pb = b.at(g);
    if (!(pa == pb))
      return "gamma = " + g.to_string() + ": polytope " + pa.to_plain() + ", oracle " +
             pb.to_plain();
  }
  return {};
}

int run_crosscheck(const JobSpec& job, std::ostream& out, std::ostream& err) {
  JobSpec poly_job = job;
  poly_job.command = Command::Decompose;
  JobSpec oracle_job = job;
  oracle_job.command = Command::Oracle;
  oracle_job.mode = OracleMode::Pair;
  const auto a = cached(poly_job, err, compute_polytope);
  const auto b = cached(oracle_job, err, compute_oracle);
  const auto diff = describe_difference(a, b);
  if (!diff.empty()) {
    out << "crosscheck FAILED for pi = " << job.word->to_string() << ": " << diff << '\n';
    return 1;
  }
  out << "crosscheck ok for pi = " << job.word->to_string() << ": " << a.domain.size()
      << " dominant gammas, " << a.entries.size() << " nonzero, total dimension "
      << total_dimension(a).get_str() << '\n';
  return 0;
}

int run_hl_info(const JobSpec& job, std::ostream& out) {
  const HeightInterval hi = job.kappa ? HeightInterval{*job.kappa, *job.interval}
                                      : pi_to_height_interval(*job.word);
  const auto marked = marked_vertices(hi.kappa, hi.interval);
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  const Weight kappa_values(hi.kappa.values());
  if (job.format == ReportFormat::Json) {
    std::ostringstream os;
    os << "{\"n\": " << job.n << ", \"kappa\": [";
    for (int i = 1; i <= job.n; ++i) os << (i > 1 ? "," : "") << hi.kappa(i);
    os << "], \"interval\": [" << hi.interval.lo << "," << hi.interval.hi << "], \"sinks\": ["
       << join(marked.sinks) << "], \"sources\": [" << join(marked.sources) << "], \"pi\": [";
    const auto& f = job.word->factors();
    for (std::size_t j = 0; j < f.size(); ++j)
      os << (j ? "," : "") << "[" << f[j].node << "," << f[j].exponent << "]";
    os << "], \"weight\": [";
    const auto w = weight_of(*job.word);
    for (int i = 1; i <= job.n; ++i) os << (i > 1 ? "," : "") << w[i];
    os << "]}\n";
    out << os.str();
    return 0;
  }
  out << "kappa = " << kappa_values.to_string() << ", J = [" << hi.interval.lo << ","
      << hi.interval.hi << "]\n";
  out << "sinks: " << join(marked.sinks) << '\n';
  out << "sources: " << join(marked.sources) << '\n';
  out << "pi = " << job.word->to_string() << '\n';
  out << "weight = " << weight_of(*job.word).to_string() << '\n';
  return 0;
}

int run_character(const JobSpec& job, std::ostream& out) {
  if (job.power) {
    const auto dec = tensor_power_decompose(*job.lambda, *job.power);
    out << "V" << job.lambda->to_string() << "^(x)" << *job.power << " =\n";
    for (auto it = dec.rbegin(); it != dec.rend(); ++it)
      out << "  " << it->second.get_str() << " x V" << it->first.to_string() << "  (dim "
          << weyl_dim(it->first).get_str() << ")\n";
    return 0;
  }
  const auto table = weight_multiplicities(*job.lambda);
  out << "V" << job.lambda->to_string() << ": dim " << table.total().get_str() << ", "
      << table.weights.size() << " weights\n";
  for (auto it = table.weights.rbegin(); it != table.weights.rend(); ++it)
    out << "  " << it->first.to_string() << "  " << it->second.get_str() << '\n';
  return 0;
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    switch (job.command) {
      case Command::Decompose:
        out << report(cached(job, err, compute_polytope), job.format);
        return 0;
      case Command::Oracle:
        out << report(cached(job, err, compute_oracle), job.format);
        return 0;
      case Command::Crosscheck:
        return run_crosscheck(job, out, err);
      case Command::HlInfo:
        return run_hl_info(job, out);
      case Command::Character:
        return run_character(job, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidWordError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NonDominantError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const FlatEdgeError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto parsed = parse_args(args);
  if (!parsed.job) {
    (parsed.exit_code == 0 ? out : err) << parsed.message << '\n';
    return parsed.exit_code;
  }
  return run(*parsed.job, out, err);
}

}  // namespace hldecomp::cli
