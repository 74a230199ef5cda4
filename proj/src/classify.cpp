#include "hilbk3/classify.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

namespace hilbk3 {

namespace {

// the known-examples table is tiny; cache per path so sweeps do not reread it
const std::vector<KnownExample>* known_examples_cached(const std::string& path,
                                                       std::string* error) {
  static std::mutex mu;
  static std::unordered_map<std::string, std::vector<KnownExample>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(path);
  if (it == cache.end()) {
    try {
      it = cache.emplace(path, load_known_examples(path)).first;
    } catch (const std::exception& e) {
      if (error) *error = e.what();
      return nullptr;
    }
  }
  return &it->second;
}

void run_check(std::map<std::string, bool>& checks, std::vector<std::string>& failed,
               const std::string& name, bool pass) {
  checks[name] = pass;
  if (!pass) failed.push_back(name);
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NaturalCoveringInvolution: return "natural-covering-involution";
    case Verdict::DerivedNaturalInvolution: return "derived-natural-involution";
    case Verdict::NoInvolutionSquare:
    case Verdict::NoInvolutionNegPellUnsolvable: return "no-involution";
  }
  throw std::logic_error("verdict_name: bad enum");
}

std::string biregularity_name(Biregularity b) {
  switch (b) {
    case Biregularity::KnownBiregular: return "known-biregular";
    case Biregularity::BirationalCertifiedOnPath: return "birational-certified-on-path";
    case Biregularity::RequiresExternalCaseList: return "requires-external-case-list";
  }
  throw std::logic_error("biregularity_name: bad enum");
}

bool ClassificationReport::operator==(const ClassificationReport& o) const {
  return t == o.t && n == o.n && verdict == o.verdict && pell == o.pell &&
         pell_positive == o.pell_positive && ns_matrix == o.ns_matrix &&
         mukai_matrix == o.mukai_matrix && stability == o.stability &&
         discriminant == o.discriminant && checks == o.checks && wall_report == o.wall_report &&
         positivity == o.positivity && aux == o.aux && flopping == o.flopping &&
         biregularity == o.biregularity && biregularity_source == o.biregularity_source &&
         known_description == o.known_description && notes == o.notes;
}

ClassificationReport classify(const Int& t, const Int& n, const ClassifyOptions& options) {
  if (t < 1) throw std::invalid_argument("classify: t must be >= 1");
  if (n < 2) throw std::invalid_argument("classify: n must be >= 2");

  ClassificationReport rep;
  rep.t = t;
  rep.n = n;

  const std::string table_path =
      options.known_examples_file ? *options.known_examples_file : default_known_examples_file();
  std::string table_error;
  const std::vector<KnownExample>* table = known_examples_cached(table_path, &table_error);
  if (!table) rep.notes.push_back("known-examples table unavailable (" + table_error + ")");

  if (t == 1) {
    // degree 2: the double cover S -> P^2 induces the natural covering
    // involution, which generates Aut(S^[n])
    rep.verdict = Verdict::NaturalCoveringInvolution;
    rep.biregularity = Biregularity::KnownBiregular;
    rep.biregularity_source = "natural covering involution";
    rep.notes.push_back(
        "degree 2: further birational automorphisms, if any, act by -1 on the "
        "discriminant group and are not classified here");
    if (table) {
      if (auto ex = known_examples_lookup(t, n, *table)) rep.known_description = ex->description;
    }
    return rep;
  }

  const Int D = t * (n - 1);
  const NegPellResult neg = solve_neg_pell(D);
  if (neg.status == NegPellStatus::SquareD) {
    rep.verdict = Verdict::NoInvolutionSquare;
    return rep;
  }
  if (neg.status == NegPellStatus::Unsolvable) {
    rep.verdict = Verdict::NoInvolutionNegPellUnsolvable;
    return rep;
  }

  rep.verdict = Verdict::DerivedNaturalInvolution;
  const PellPair p = *neg.pair;
  rep.pell = p;
  const PellPair pos = solve_pos_pell(D);
  rep.pell_positive = pos;

  std::vector<std::string> failed;
  run_check(rep.checks, failed, "neg_pell_equation", p.a * p.a - D * p.b * p.b == -1);
  run_check(rep.checks, failed, "pos_pell_remark_identity",
            pos.a == 2 * p.a * p.a + 1 && pos.b == 2 * p.a * p.b);

  const Surface surf(t);
  const NsGram g = ns_gram(t, n);
  const Mat2 M = ns_involution(t, n, p);
  const Mat3 tau = mukai_extension(t, n, p);
  rep.ns_matrix = M;
  rep.mukai_matrix = tau;

  run_check(rep.checks, failed, "ns_involution_squares_to_identity", verify_involution(M));
  run_check(rep.checks, failed, "ns_isometry", verify_isometry(M, g.gram));
  run_check(rep.checks, failed, "ns_determinant_minus_one", M.determinant() == -1);
  run_check(rep.checks, failed, "mukai_involution_squares_to_identity", verify_involution(tau));
  run_check(rep.checks, failed, "mukai_isometry", verify_isometry(tau, mukai_gram(surf)));
  run_check(rep.checks, failed, "mukai_determinant_minus_one", tau.determinant() == -1);
  const MukaiVector vn = ideal_sheaf_vector(n);
  run_check(rep.checks, failed, "fixes_ideal_sheaf_vector",
            from_vec3((tau * to_vec3(vn)).eval()) == vn);
  run_check(rep.checks, failed, "restriction_consistency", restriction_consistent(tau, M, n));

  const DiscriminantAction da = discriminant_action(M, g);
  rep.discriminant = da;
  run_check(rep.checks, failed, "discriminant_multiplier_trivial",
            da.multiplier == mod_floor(1, da.modulus));
  run_check(rep.checks, failed, "discriminant_glue_zero", da.glue_class && *da.glue_class == 0);

  const StabilityParams params = canonical_params(t, n, p);
  rep.stability = params;
  run_check(rep.checks, failed, "charge_invariance_at_canonical",
            charge_invariance(tau, surf, params));
  run_check(rep.checks, failed, "charge_imaginary_positive_on_vn",
            central_charge(surf, params, vn).im_coeff > 0);

  if (!failed.empty()) {
    std::ostringstream why;
    why << "classify: inconsistency for t=" << t << ", n=" << n
        << ": existence criterion holds but verification failed:";
    for (const auto& name : failed) why << " " << name;
    throw std::logic_error(why.str());
  }

  rep.positivity = PositivityScanResult{options.positivity_bound,
                                        spherical_positivity_scan(t, n, p, options.positivity_bound)};
  rep.checks["spherical_positivity_no_witness"] = !rep.positivity->witness.has_value();

  rep.wall_report = scan_walls(t, n, p, options.scan_bound, options.workers);
  rep.checks["wall_scan_all_empty"] = rep.wall_report->all_empty();

  if (n >= 3) {
    rep.aux = AuxScanResult{options.aux_bound, aux_equation_scan(t, n, options.aux_bound)};
    rep.checks["aux_equation_no_witness"] = !rep.aux->witness.has_value();
  }

  for (const auto& [pv, k] : options.flop_profiles)
    rep.flopping.push_back(flopping_obstruction(t, n, p, pv, k, options.flop_search_bound));

  if (t == 2 && n == 2) {
    rep.biregularity = Biregularity::KnownBiregular;
    rep.biregularity_source = "Beauville involution";
  } else {
    bool flops_open = false;
    for (const auto& fr : rep.flopping)
      if (fr.verdict == FloppingVerdict::Inconclusive && !fr.hits.empty()) flops_open = true;
    rep.biregularity = (rep.wall_report->all_empty() && !flops_open)
                           ? Biregularity::BirationalCertifiedOnPath
                           : Biregularity::RequiresExternalCaseList;
  }

  if (table) {
    if (auto ex = known_examples_lookup(t, n, *table)) rep.known_description = ex->description;
  }
  rep.notes.push_back(
      "the inducing autoequivalence is the shifted Fourier-Mukai transform of a universal "
      "family of the fine moduli space M_H(t b^2, -a b H, a^2)");
  return rep;
}

SweepResult batch_sweep(const Int& t_lo, const Int& t_hi, const Int& n_lo, const Int& n_hi,
                        const ClassifyOptions& options) {
  if (t_lo > t_hi || n_lo > n_hi) throw std::invalid_argument("batch_sweep: empty range");
  if (t_lo < 1 || n_lo < 2) throw std::invalid_argument("batch_sweep: need t >= 1 and n >= 2");

  SweepResult result;
  for (Int t = t_lo; t <= t_hi; ++t) {
    for (Int n = n_lo; n <= n_hi; ++n) {
      SweepCell cell;
      cell.t = t;
      cell.n = n;
      try {
        cell.report = classify(t, n, options);
        ++result.verdict_counts[verdict_name(cell.report->verdict)];
      } catch (const std::exception& e) {
        cell.error = e.what();
        ++result.error_count;
      }
      result.cells.push_back(std::move(cell));
    }
  }
  return result;
}

}  // namespace hilbk3
