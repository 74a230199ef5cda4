#include "hilbk3/classify.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#ifndef HILBK3_DEFAULT_DATA_FILE
#define HILBK3_DEFAULT_DATA_FILE ""
#endif

namespace hilbk3 {

namespace {

using nlohmann::json;

json int_json(const Int& x) { return to_string(x); }
json rat_json(const Rat& q) { return to_string(q); }

Int int_from(const json& j) {
  Int x;
  if (!j.is_string() || mpz_set_str(x.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0)
    throw std::invalid_argument("report json: bad integer literal");
  return x;
}

Rat rat_from(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("report json: bad rational literal");
  return parse_rat(j.get<std::string>());
}

json vector_json(const MukaiVector& v) {
  return json{{"r", int_json(v.r)}, {"m", int_json(v.m)}, {"s", int_json(v.s)}};
}

MukaiVector vector_from(const json& j) {
  return MukaiVector{int_from(j.at("r")), int_from(j.at("m")), int_from(j.at("s"))};
}

template <typename Mat>
json matrix_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(int_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename Mat>
Mat matrix_from(const json& j) {
  Mat m;
  if (static_cast<Eigen::Index>(j.size()) != m.rows())
    throw std::invalid_argument("report json: bad matrix shape");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const json& row = j.at(i);
    if (static_cast<Eigen::Index>(row.size()) != m.cols())
      throw std::invalid_argument("report json: bad matrix shape");
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(i, c) = int_from(row.at(c));
  }
  return m;
}

json pell_json(const PellPair& p) {
  return json{{"a", int_json(p.a)}, {"b", int_json(p.b)}, {"sign", p.sign == -1 ? "-1" : "1"}};
}

PellPair pell_from(const json& j) {
  return PellPair{int_from(j.at("a")), int_from(j.at("b")),
                  j.at("sign").get<std::string>() == "-1" ? -1 : +1};
}

json candidate_json(const WallCandidate& c) {
  json j = vector_json(c.w);
  j["all_lambda"] = c.all_lambda;
  j["lambda0"] = rat_json(c.lambda0);
  j["self_pairing"] = int_json(c.self_pairing);
  j["vn_pairing"] = int_json(c.vn_pairing);
  return j;
}

WallCandidate candidate_from(const json& j) {
  return WallCandidate{vector_from(j), j.at("all_lambda").get<bool>(), rat_from(j.at("lambda0")),
                       int_from(j.at("self_pairing")), int_from(j.at("vn_pairing"))};
}

json candidates_json(const std::vector<WallCandidate>& cs) {
  json arr = json::array();
  for (const auto& c : cs) arr.push_back(candidate_json(c));
  return arr;
}

std::vector<WallCandidate> candidates_from(const json& j) {
  std::vector<WallCandidate> cs;
  for (const auto& e : j) cs.push_back(candidate_from(e));
  return cs;
}

std::string flopping_verdict_name(FloppingVerdict v) {
  return v == FloppingVerdict::ExcludedOnPath ? "excluded-on-path" : "inconclusive";
}

json report_json(const ClassificationReport& rep) {
  json j;
  j["schema_version"] = "1";
  j["kind"] = "classification";
  j["t"] = int_json(rep.t);
  j["n"] = int_json(rep.n);
  j["degree"] = int_json(2 * rep.t);
  j["verdict"] = verdict_name(rep.verdict);
  if (rep.verdict == Verdict::NoInvolutionSquare) j["reason"] = "square";
  if (rep.verdict == Verdict::NoInvolutionNegPellUnsolvable) j["reason"] = "neg-pell-unsolvable";
  if (rep.verdict != Verdict::NaturalCoveringInvolution)
    j["pell_d"] = int_json(rep.t * (rep.n - 1));
  if (rep.pell) j["pell"] = pell_json(*rep.pell);
  if (rep.pell_positive) j["pell_positive"] = pell_json(*rep.pell_positive);
  if (rep.ns_matrix) j["ns_matrix"] = matrix_json(*rep.ns_matrix);
  if (rep.mukai_matrix) j["mukai_matrix"] = matrix_json(*rep.mukai_matrix);
  if (rep.stability)
    j["stability"] = json{{"x", rat_json(rep.stability->x)},
                          {"y", rat_json(rep.stability->y)},
                          {"lambda0", rat_json(rep.stability->lambda0)}};
  if (rep.discriminant) {
    json d{{"modulus", int_json(rep.discriminant->modulus)},
           {"multiplier", int_json(rep.discriminant->multiplier)},
           {"e1_coeff", int_json(rep.discriminant->e1_coeff)}};
    d["glue_class"] = rep.discriminant->glue_class ? int_json(*rep.discriminant->glue_class)
                                                   : json(nullptr);
    j["discriminant"] = std::move(d);
  }
  if (!rep.checks.empty()) j["checks"] = rep.checks;
  if (rep.wall_report) {
    const WallScanReport& w = *rep.wall_report;
    j["wall_scan"] = json{{"bound", int_json(w.bound)},
                          {"brill_noether", candidates_json(w.brill_noether)},
                          {"hilbert_chow", candidates_json(w.hilbert_chow)},
                          {"li_gieseker_uhlenbeck", candidates_json(w.li_gieseker_uhlenbeck)},
                          {"totally_semistable", candidates_json(w.totally_semistable)},
                          {"all_empty", w.all_empty()}};
  }
  if (rep.positivity) {
    json s{{"bound", int_json(rep.positivity->bound)}};
    s["witness"] = rep.positivity->witness ? vector_json(*rep.positivity->witness) : json(nullptr);
    j["spherical_positivity"] = std::move(s);
  }
  if (rep.aux) {
    json a{{"bound", int_json(rep.aux->bound)}};
    a["witness"] = rep.aux->witness ? json{{"x", int_json(rep.aux->witness->first)},
                                           {"y", int_json(rep.aux->witness->second)}}
                                    : json(nullptr);
    j["aux_equation"] = std::move(a);
  }
  if (!rep.flopping.empty()) {
    json arr = json::array();
    for (const auto& f : rep.flopping) {
      arr.push_back(json{{"p", int_json(f.p_val)},
                         {"k", int_json(f.k)},
                         {"discriminant", int_json(f.discriminant)},
                         {"verdict", flopping_verdict_name(f.verdict)},
                         {"search_bound", int_json(f.search_bound)},
                         {"hits", candidates_json(f.hits)}});
    }
    j["flopping"] = std::move(arr);
  }
  if (rep.biregularity) {
    j["biregularity"] = biregularity_name(*rep.biregularity);
    if (!rep.biregularity_source.empty()) j["biregularity_source"] = rep.biregularity_source;
  }
  if (rep.known_description) j["known_description"] = *rep.known_description;
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

ClassificationReport report_from(const json& j) {
  ClassificationReport rep;
  rep.t = int_from(j.at("t"));
  rep.n = int_from(j.at("n"));
  const std::string v = j.at("verdict").get<std::string>();
  if (v == "natural-covering-involution") {
    rep.verdict = Verdict::NaturalCoveringInvolution;
  } else if (v == "derived-natural-involution") {
    rep.verdict = Verdict::DerivedNaturalInvolution;
  } else if (v == "no-involution") {
    rep.verdict = j.at("reason").get<std::string>() == "square"
                      ? Verdict::NoInvolutionSquare
                      : Verdict::NoInvolutionNegPellUnsolvable;
  } else {
    throw std::invalid_argument("report json: unknown verdict " + v);
  }
  if (j.contains("pell")) rep.pell = pell_from(j.at("pell"));
  if (j.contains("pell_positive")) rep.pell_positive = pell_from(j.at("pell_positive"));
  if (j.contains("ns_matrix")) rep.ns_matrix = matrix_from<Mat2>(j.at("ns_matrix"));
  if (j.contains("mukai_matrix")) rep.mukai_matrix = matrix_from<Mat3>(j.at("mukai_matrix"));
  if (j.contains("stability")) {
    const json& s = j.at("stability");
    rep.stability =
        StabilityParams{rat_from(s.at("x")), rat_from(s.at("y")), rat_from(s.at("lambda0"))};
  }
  if (j.contains("discriminant")) {
    const json& d = j.at("discriminant");
    DiscriminantAction da{int_from(d.at("modulus")), int_from(d.at("multiplier")),
                          int_from(d.at("e1_coeff")), std::nullopt};
    if (!d.at("glue_class").is_null()) da.glue_class = int_from(d.at("glue_class"));
    rep.discriminant = da;
  }
  if (j.contains("checks"))
    rep.checks = j.at("checks").get<std::map<std::string, bool>>();
  if (j.contains("wall_scan")) {
    const json& w = j.at("wall_scan");
    WallScanReport r;
    r.bound = int_from(w.at("bound"));
    r.brill_noether = candidates_from(w.at("brill_noether"));
    r.hilbert_chow = candidates_from(w.at("hilbert_chow"));
    r.li_gieseker_uhlenbeck = candidates_from(w.at("li_gieseker_uhlenbeck"));
    r.totally_semistable = candidates_from(w.at("totally_semistable"));
    rep.wall_report = std::move(r);
  }
  if (j.contains("spherical_positivity")) {
    const json& s = j.at("spherical_positivity");
    PositivityScanResult r{int_from(s.at("bound")), std::nullopt};
    if (!s.at("witness").is_null()) r.witness = vector_from(s.at("witness"));
    rep.positivity = std::move(r);
  }
  if (j.contains("aux_equation")) {
    const json& a = j.at("aux_equation");
    AuxScanResult r{int_from(a.at("bound")), std::nullopt};
    if (!a.at("witness").is_null())
      r.witness = std::make_pair(int_from(a.at("witness").at("x")),
                                 int_from(a.at("witness").at("y")));
    rep.aux = std::move(r);
  }
  if (j.contains("flopping")) {
    for (const auto& f : j.at("flopping")) {
      FloppingReport fr{int_from(f.at("p")),
                        int_from(f.at("k")),
                        int_from(f.at("discriminant")),
                        f.at("verdict").get<std::string>() == "excluded-on-path"
                            ? FloppingVerdict::ExcludedOnPath
                            : FloppingVerdict::Inconclusive,
                        int_from(f.at("search_bound")),
                        candidates_from(f.at("hits"))};
      rep.flopping.push_back(std::move(fr));
    }
  }
  if (j.contains("biregularity")) {
    const std::string b = j.at("biregularity").get<std::string>();
    if (b == "known-biregular")
      rep.biregularity = Biregularity::KnownBiregular;
    else if (b == "birational-certified-on-path")
      rep.biregularity = Biregularity::BirationalCertifiedOnPath;
    else if (b == "requires-external-case-list")
      rep.biregularity = Biregularity::RequiresExternalCaseList;
    else
      throw std::invalid_argument("report json: unknown biregularity " + b);
    if (j.contains("biregularity_source"))
      rep.biregularity_source = j.at("biregularity_source").get<std::string>();
  }
  if (j.contains("known_description"))
    rep.known_description = j.at("known_description").get<std::string>();
  if (j.contains("notes")) rep.notes = j.at("notes").get<std::vector<std::string>>();
  return rep;
}

std::string nice_verdict(const ClassificationReport& rep) {
  switch (rep.verdict) {
    case Verdict::NaturalCoveringInvolution: return "natural covering involution";
    case Verdict::DerivedNaturalInvolution: return "derived-natural involution";
    case Verdict::NoInvolutionSquare: return "no involution (t(n-1) is a perfect square)";
    case Verdict::NoInvolutionNegPellUnsolvable:
      return "no involution (X^2 - t(n-1)Y^2 = -1 unsolvable)";
  }
  return {};
}

std::string nice_biregularity(Biregularity b) {
  switch (b) {
    case Biregularity::KnownBiregular: return "known biregular";
    case Biregularity::BirationalCertifiedOnPath:
      return "birational, certified on the scanned path";
    case Biregularity::RequiresExternalCaseList: return "requires external case list";
  }
  return {};
}

template <typename Mat>
void print_matrix(std::ostream& os, const Mat& m, const char* indent) {
  // column-aligned, entries right-justified
  std::vector<std::vector<std::string>> cells(m.rows());
  std::vector<size_t> width(m.cols(), 0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      cells[i].push_back(to_string(m(i, j)));
      width[j] = std::max(width[j], cells[i].back().size());
    }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << indent << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      os << " " << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
    os << " ]\n";
  }
}

void print_candidates(std::ostream& os, const char* label,
                      const std::vector<WallCandidate>& cs) {
  os << "  " << label << ": " << cs.size() << "\n";
  for (const auto& c : cs) {
    os << "    w = (" << c.w.r << ", " << c.w.m << ", " << c.w.s << "), lambda0 = "
       << (c.all_lambda ? std::string("all") : to_string(c.lambda0))
       << ", <w,w> = " << c.self_pairing << ", <w,v_n> = " << c.vn_pairing << "\n";
  }
}

std::string report_text(const ClassificationReport& rep) {
  std::ostringstream os;
  os << "degree " << 2 * rep.t << " K3 surface (t = " << rep.t << "), Hilbert scheme of "
     << rep.n << " points\n";
  os << "verdict: " << nice_verdict(rep) << "\n";
  if (rep.verdict != Verdict::NaturalCoveringInvolution)
    os << "criterion: D = t(n-1) = " << rep.t * (rep.n - 1) << "\n";
  if (rep.pell)
    os << "fundamental solution of X^2 - D Y^2 = -1: (a, b) = (" << rep.pell->a << ", "
       << rep.pell->b << ")\n";
  if (rep.pell_positive)
    os << "fundamental solution of X^2 - D Y^2 = +1: (" << rep.pell_positive->a << ", "
       << rep.pell_positive->b << ")\n";
  if (rep.ns_matrix) {
    os << "involution on NS, basis (theta(0,-H,0), theta(1,0,n-1)):\n";
    print_matrix(os, *rep.ns_matrix, "  ");
  }
  if (rep.mukai_matrix) {
    os << "extension to the Mukai lattice, basis ((1,0,0), (0,H,0), (0,0,1)):\n";
    print_matrix(os, *rep.mukai_matrix, "  ");
  }
  if (rep.stability)
    os << "fixed stability parameters: omega = (" << to_string(rep.stability->x)
       << ") H, beta = (" << to_string(rep.stability->y)
       << ") H, lambda0 = " << to_string(rep.stability->lambda0) << "\n";
  if (rep.discriminant) {
    os << "discriminant action: multiplier " << rep.discriminant->multiplier << " mod "
       << rep.discriminant->modulus << ", glue class ";
    if (rep.discriminant->glue_class)
      os << *rep.discriminant->glue_class << " mod " << 2 * rep.t;
    else
      os << "undefined";
    os << "\n";
  }
  if (!rep.checks.empty()) {
    long passed = 0;
    for (const auto& [name, ok] : rep.checks) passed += ok ? 1 : 0;
    os << "checks: " << passed << "/" << rep.checks.size() << " passed";
    if (passed != static_cast<long>(rep.checks.size())) {
      os << " (failing:";
      for (const auto& [name, ok] : rep.checks)
        if (!ok) os << " " << name;
      os << ")";
    }
    os << "\n";
  }
  if (rep.wall_report) {
    os << "wall scan, |r|,|m|,|s| <= " << rep.wall_report->bound << ": "
       << (rep.wall_report->all_empty() ? "no witnesses" : "WITNESSES FOUND") << "\n";
    if (!rep.wall_report->all_empty()) {
      print_candidates(os, "brill-noether (-2,0)", rep.wall_report->brill_noether);
      print_candidates(os, "hilbert-chow (0,1)", rep.wall_report->hilbert_chow);
      print_candidates(os, "li-gieseker-uhlenbeck (0,2)", rep.wall_report->li_gieseker_uhlenbeck);
      print_candidates(os, "totally semistable (-2,k<0)", rep.wall_report->totally_semistable);
    }
  }
  if (rep.positivity) {
    os << "spherical positivity scan, r <= " << rep.positivity->bound << ": ";
    if (rep.positivity->witness)
      os << "WITNESS (" << rep.positivity->witness->r << ", " << rep.positivity->witness->m
         << ", " << rep.positivity->witness->s << ")\n";
    else
      os << "no witness\n";
  }
  if (rep.aux) {
    os << "auxiliary equation (n-1)X^2 - tY^2 = 1, X,Y <= " << rep.aux->bound << ": ";
    if (rep.aux->witness)
      os << "WITNESS (" << rep.aux->witness->first << ", " << rep.aux->witness->second << ")\n";
    else
      os << "no witness\n";
  }
  for (const auto& f : rep.flopping) {
    os << "flopping profile <w,w> = " << 2 * f.p_val << ", <w,v_n> = " << f.k
       << " (discriminant " << f.discriminant << "): ";
    if (f.verdict == FloppingVerdict::ExcludedOnPath)
      os << "excluded on path\n";
    else {
      os << "inconclusive; direct search |r| <= " << f.search_bound << " found " << f.hits.size()
         << " on-path class(es)\n";
      for (const auto& c : f.hits)
        os << "    w = (" << c.w.r << ", " << c.w.m << ", " << c.w.s << "), lambda0 = "
           << (c.all_lambda ? std::string("all") : to_string(c.lambda0)) << "\n";
    }
  }
  if (rep.biregularity) {
    os << "biregularity: " << nice_biregularity(*rep.biregularity);
    if (!rep.biregularity_source.empty()) os << " (" << rep.biregularity_source << ")";
    os << "\n";
  }
  if (rep.known_description) os << "known example: " << *rep.known_description << "\n";
  for (const auto& note : rep.notes) os << "note: " << note << "\n";
  return os.str();
}

json sweep_json(const SweepResult& result) {
  json j;
  j["schema_version"] = "1";
  j["kind"] = "sweep";
  json cells = json::array();
  for (const auto& cell : result.cells) {
    if (cell.report) {
      cells.push_back(report_json(*cell.report));
    } else {
      cells.push_back(
          json{{"t", int_json(cell.t)}, {"n", int_json(cell.n)}, {"error", cell.error}});
    }
  }
  j["cells"] = std::move(cells);
  json counts = json::object();
  for (const auto& [name, count] : result.verdict_counts) counts[name] = std::to_string(count);
  j["summary"] = json{{"cells", std::to_string(result.cells.size())},
                      {"errors", std::to_string(result.error_count)},
                      {"verdicts", std::move(counts)}};
  return j;
}

std::string sweep_text(const SweepResult& result) {
  std::ostringstream os;
  for (const auto& cell : result.cells) {
    os << "t = " << cell.t << ", n = " << cell.n << ": ";
    if (!cell.report) {
      os << "ERROR: " << cell.error << "\n";
      continue;
    }
    const ClassificationReport& rep = *cell.report;
    os << nice_verdict(rep);
    if (rep.pell) os << ", (a, b) = (" << rep.pell->a << ", " << rep.pell->b << ")";
    os << "\n";
  }
  os << "summary: " << result.cells.size() << " cell(s)";
  for (const auto& [name, count] : result.verdict_counts) os << ", " << name << ": " << count;
  if (result.error_count > 0) os << ", errors: " << result.error_count;
  os << "\n";
  return os.str();
}

}  // namespace

std::string render(const ClassificationReport& report, RenderFormat format) {
  if (format == RenderFormat::Json) return report_json(report).dump(2) + "\n";
  return report_text(report);
}

std::string render(const SweepResult& result, RenderFormat format) {
  if (format == RenderFormat::Json) return sweep_json(result).dump(2) + "\n";
  return sweep_text(result);
}

ClassificationReport parse_report_json(const std::string& text) {
  return report_from(json::parse(text));
}

std::vector<KnownExample> load_known_examples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open known-examples file: " + path);
  json j = json::parse(in);
  std::vector<KnownExample> table;
  for (const auto& e : j.at("examples")) {
    table.push_back(KnownExample{int_from(e.at("t")), int_from(e.at("n")),
                                 e.at("name").get<std::string>(),
                                 e.at("autoequivalence").get<std::string>(),
                                 e.at("description").get<std::string>()});
  }
  return table;
}

std::optional<KnownExample> known_examples_lookup(const Int& t, const Int& n,
                                                  const std::vector<KnownExample>& table) {
  for (const auto& e : table)
    if (e.t == t && e.n == n) return e;
  return std::nullopt;
}

std::string default_known_examples_file() { return HILBK3_DEFAULT_DATA_FILE; }

std::vector<std::pair<Int, Int>> parse_flop_profiles(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open flop-profiles file: " + path);
  std::vector<std::pair<Int, Int>> profiles;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string ps, ks, rest;
    if (!(ls >> ps)) continue;  // blank line
    if (!(ls >> ks) || (ls >> rest))
      throw std::invalid_argument("flop-profiles line " + std::to_string(lineno) +
                                  ": expected exactly two integers");
    Int pv, k;
    if (mpz_set_str(pv.get_mpz_t(), ps.c_str(), 10) != 0 ||
        mpz_set_str(k.get_mpz_t(), ks.c_str(), 10) != 0)
      throw std::invalid_argument("flop-profiles line " + std::to_string(lineno) +
                                  ": bad integer");
    profiles.emplace_back(std::move(pv), std::move(k));
  }
  return profiles;
}

}  // namespace hilbk3
