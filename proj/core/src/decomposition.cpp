#include "hldecomp/decomposition.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hldecomp/errors.hpp"
#include "parallel.hpp"

namespace hldecomp {

using json = nlohmann::ordered_json;

std::string_view to_string(DecompositionSource s) {
  switch (s) {
    case DecompositionSource::Polytope:
      return "polytope";
    case DecompositionSource::OraclePair:
      return "oracle-pair";
    case DecompositionSource::OracleFull:
      return "oracle-full";
  }
  return "unknown";
}

namespace {

DecompositionSource source_from_string(std::string_view s) {
  for (auto src : {DecompositionSource::Polytope, DecompositionSource::OraclePair,
                   DecompositionSource::OracleFull})
    if (to_string(src) == s) return src;
  throw InputError("unknown decomposition source '" + std::string(s) + "'");
}

}  // namespace

QPolynomial GradedDecomposition::at(const RootLatticeElement& gamma) const {
  for (const auto& e : entries)
    if (e.gamma == gamma) return e.poly;
  return {};
}

bool GradedDecomposition::checked(const RootLatticeElement& gamma) const {
  return std::find(domain.begin(), domain.end(), gamma) != domain.end();
}

std::vector<DecompositionEntry> make_entries(
    const Weight& lambda, const std::vector<std::pair<RootLatticeElement, QPolynomial>>& polys) {
  std::vector<DecompositionEntry> out;
  for (const auto& [gamma, poly] : polys) {
    if (poly.is_zero()) continue;
    auto mu = weight_minus_gamma(lambda, gamma);
    auto dim = weyl_dim(mu);
    out.push_back({gamma, std::move(mu), std::move(dim), poly});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return gamma_less(a.gamma, b.gamma);
  });
  return out;
}

GradedDecomposition graded_decomposition(const DrinfeldWord& word,
                                         const MultiplicityOptions& options,
                                         const std::optional<RootLatticeElement>& only_gamma) {
  require_valid(word);
  GradedDecomposition dec;
  dec.n = word.rank();
  dec.weight = weight_of(word);
  dec.word = word;
  dec.source = DecompositionSource::Polytope;
  if (only_gamma) {
    if (only_gamma->rank() != dec.n) throw InputError("gamma rank does not match the word");
    if (!weight_minus_gamma(dec.weight, *only_gamma).is_dominant())
      throw NonDominantError("wt(pi) - gamma = " +
                             weight_minus_gamma(dec.weight, *only_gamma).to_string() +
                             " is not dominant");
    dec.domain = {*only_gamma};
  } else {
    dec.domain = enumerate_dominant_gammas(dec.weight);
  }

  std::vector<std::pair<RootLatticeElement, QPolynomial>> polys(dec.domain.size());
  detail::parallel_for(dec.domain.size(), [&](std::size_t g) {
    polys[g] = {dec.domain[g], multiplicity(word, dec.domain[g], options)};
  });
  dec.entries = make_entries(dec.weight, polys);
  return dec;
}

BigInt total_dimension(const GradedDecomposition& dec) {
  BigInt total = 0;
  for (const auto& e : dec.entries) total += e.poly.at_one() * e.dim;
  return total;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "plain") return ReportFormat::Plain;
  if (name == "json") return ReportFormat::Json;
  if (name == "latex") return ReportFormat::Latex;
  throw InputError("unknown report format '" + std::string(name) + "'");
}

namespace {

json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw InputError("malformed integer in JSON");
    return v;
  }
  throw InputError("expected an integer in JSON");
}

std::vector<std::int64_t> int_vector(const json& j, std::size_t n, const char* field) {
  if (!j.is_array() || j.size() != n)
    throw InputError(std::string("JSON field '") + field + "' must be an array of length " +
                     std::to_string(n));
  return j.get<std::vector<std::int64_t>>();
}

std::string describe_header(const GradedDecomposition& dec) {
  std::ostringstream os;
  switch (dec.source) {
    case DecompositionSource::Polytope:
    case DecompositionSource::OraclePair:
      os << "L(pi) for pi = " << (dec.word ? dec.word->to_string() : std::string("?"));
      break;
    case DecompositionSource::OracleFull:
      os << "M(xi, lambda) for xi = " << (dec.xi ? dec.xi->to_string() : std::string("?"));
      break;
  }
  os << ", n = " << dec.n << ", weight = " << dec.weight.to_string();
  return os.str();
}

std::string report_plain(const GradedDecomposition& dec) {
  std::vector<std::vector<std::string>> rows{{"lambda-gamma", "gamma", "dim", "multiplicity"}};
  for (const auto& e : dec.entries)
    rows.push_back({e.mu_weight.to_string(), e.gamma.to_string(), e.dim.get_str(),
                    e.poly.to_plain()});
  std::vector<std::size_t> width(4, 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], r[c].size());

  std::ostringstream os;
  os << describe_header(dec) << '\n';
  os << "source: " << to_string(dec.source) << "; dominant gammas checked: " << dec.domain.size()
     << "; nonzero: " << dec.entries.size() << '\n';
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < 4; ++c) {
      os << r[c];
      if (c + 1 < 4) os << std::string(width[c] - r[c].size() + 2, ' ');
    }
    os << '\n';
  }
  os << "total dimension: " << total_dimension(dec).get_str() << '\n';
  return os.str();
}

std::string latex_tuple(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string report_latex(const GradedDecomposition& dec) {
  std::ostringstream os;
  os << "% " << describe_header(dec) << '\n';
  os << "\\begin{tabular}{llrl}\n";
  os << "$\\lambda-\\gamma$ & $\\gamma$ & $\\dim V(\\lambda-\\gamma)$ & "
        "$[M:V(\\lambda-\\gamma)]_q$ \\\\\n\\hline\n";
  for (const auto& e : dec.entries) {
    // The plain rendering rides along as a comment so the table stays greppable.
    os << "% " << e.poly.to_plain() << '\n';
    os << '$' << latex_tuple(e.mu_weight.coords()) << "$ & $" << latex_tuple(e.gamma.coeffs())
       << "$ & " << e.dim.get_str() << " & $" << e.poly.to_latex() << "$ \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

}  // namespace

std::string to_json(const GradedDecomposition& dec) {
  json j;
  j["n"] = dec.n;
  if (dec.word) {
    json pi = json::array();
    for (const auto& f : dec.word->factors()) pi.push_back({f.node, f.exponent});
    j["pi"] = std::move(pi);
  }
  if (dec.xi) {
    json xi = json::object();
    for (const auto& alpha : positive_roots(Rank(dec.n)))
      xi[std::to_string(alpha.lo) + "-" + std::to_string(alpha.hi)] = (*dec.xi)[alpha];
    j["xi"] = std::move(xi);
  }
  j["weight"] = dec.weight.coords();
  j["source"] = std::string(to_string(dec.source));
  json domain = json::array();
  for (const auto& g : dec.domain) domain.push_back(g.coeffs());
  j["domain"] = std::move(domain);
  json entries = json::array();
  for (const auto& e : dec.entries) {
    json poly = json::object();
    for (const auto& [p, c] : e.poly.coeffs()) poly[std::to_string(p)] = big_to_json(c);
    entries.push_back({{"gamma", e.gamma.coeffs()},
                       {"mu_weight", e.mu_weight.coords()},
                       {"dim", big_to_json(e.dim)},
                       {"poly", std::move(poly)}});
  }
  j["entries"] = std::move(entries);

  // One field per line and one entry per line keeps diffs of reports readable.
  std::string out = "{\n";
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + json(key).dump() + ": ";
    if (key == "entries" && !value.empty()) {
      out += "[\n";
      for (std::size_t e = 0; e < value.size(); ++e)
        out += "    " + value[e].dump() + (e + 1 < value.size() ? ",\n" : "\n");
      out += "  ]";
    } else {
      out += value.dump();
    }
  }
  return out + "\n}\n";
}

GradedDecomposition decomposition_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  try {
    GradedDecomposition dec;
    dec.n = j.at("n").get<int>();
    if (dec.n < 1) throw InputError("JSON field 'n' must be positive");
    const auto n = static_cast<std::size_t>(dec.n);
    if (j.contains("pi")) {
      std::vector<WordFactor> factors;
      for (const auto& f : j.at("pi")) {
        if (!f.is_array() || f.size() != 2) throw InputError("JSON 'pi' entries must be [i, m]");
        factors.push_back({f[0].get<int>(), f[1].get<std::int64_t>()});
      }
      dec.word = DrinfeldWord(dec.n, std::move(factors));
    }
    if (j.contains("xi")) {
      RawXi raw;
      for (const auto& [key, value] : j.at("xi").items()) {
        const auto dash = key.find('-');
        if (dash == std::string::npos) throw InputError("JSON 'xi' key '" + key + "' is not lo-hi");
        raw[{std::stoi(key.substr(0, dash)), std::stoi(key.substr(dash + 1))}] =
            value.get<std::int64_t>();
      }
      dec.xi = normalize_xi(raw, dec.n);
    }
    dec.weight = Weight(int_vector(j.at("weight"), n, "weight"));
    dec.source = source_from_string(j.value("source", std::string("polytope")));
    if (j.contains("domain"))
      for (const auto& g : j.at("domain"))
        dec.domain.emplace_back(int_vector(g, n, "domain"));
    for (const auto& e : j.at("entries")) {
      DecompositionEntry entry{RootLatticeElement(int_vector(e.at("gamma"), n, "gamma")),
                               Weight(int_vector(e.at("mu_weight"), n, "mu_weight")),
                               big_from_json(e.at("dim")),
                               {}};
      for (const auto& [p, c] : e.at("poly").items())
        entry.poly.add(std::stoll(p), big_from_json(c));
      dec.entries.push_back(std::move(entry));
    }
    return dec;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed decomposition JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw InputError(std::string("malformed decomposition JSON: ") + e.what());
  }
}

std::string report(const GradedDecomposition& dec, ReportFormat format) {
  switch (format) {
    case ReportFormat::Plain:
      return report_plain(dec);
    case ReportFormat::Json:
      return to_json(dec);
    case ReportFormat::Latex:
      return report_latex(dec);
  }
  throw InputError("unknown report format");
}

}  // namespace hldecomp
