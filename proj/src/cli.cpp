#include "fcyc/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <ctime>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fcyc/bounds.hpp"
#include "fcyc/census.hpp"
#include "fcyc/genfun.hpp"
#include "fcyc/io.hpp"
#include "fcyc/witness.hpp"

namespace fcyc {

namespace {

using json = nlohmann::ordered_json;

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json coeffs_json(const QPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  if (p.is_zero()) a.push_back("0");
  return a;
}

std::string decimal(const Rational& r, int digits = 6) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << r.get_d();
  return s.str();
}

void append_ledger(const std::string& path, unsigned n, std::uint32_t q, std::uint64_t count,
                   const std::string& method, const std::string& seed) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::app);
  if (!f) throw std::invalid_argument("cannot open ledger " + path);
  std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  f << n << ',' << q << ',' << count << ',' << method << ',' << seed << ',' << stamp << '\n';
}


}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-field tools for f-cyclic and uncyclic matrices", "fcyc"};
  app.require_subcommand(1);
  bool as_json = false;

  // isfcyclic
  auto* isf = app.add_subcommand("isfcyclic", "One-sided Monte Carlo f-cyclicity test (IsfCyclic) with witness certificate");
  std::string isf_matrix, isf_eps = "1/100";
  std::uint64_t isf_seed = 1;
  bool isf_factor = false, isf_check = false;
  isf->add_option("--matrix", isf_matrix, "Matrix file")->required();
  isf->add_option("--epsilon", isf_eps, "Failure bound in (0,1), decimal or fraction")->capture_default_str();
  isf->add_option("--seed", isf_seed, "Random seed")->capture_default_str();
  isf->add_flag("--factor", isf_factor, "Factor the certificate polynomial");
  isf->add_flag("--check", isf_check, "Re-check loop invariants on every pass");
  isf->add_flag("--json", as_json, "JSON output");

  // unc-poly
  auto* up = app.add_subcommand("unc-poly", "unc(n,q), the number of uncyclic matrices in M(n,q), as an integer polynomial in q");
  unsigned up_n = 0, up_jobs = 1;
  bool up_bulk = false;
  up->add_option("--n", up_n, "Dimension")->required();
  up->add_option("--jobs", up_jobs, "Worker threads")->capture_default_str();
  up->add_flag("--bulk", up_bulk, "One polynomial per line for 1 <= k <= n");
  up->add_flag("--json", as_json, "JSON output");

  // census
  auto* cen = app.add_subcommand("census", "Exhaustive classification of M(n,q): uncyclic count and per-type class sizes");
  unsigned cen_n = 0, cen_jobs = 1;
  std::string cen_q, cen_ledger;
  bool cen_types = false, cen_no_timing = false;
  std::uint64_t cen_budget = default_census_budget();
  cen->add_option("--n", cen_n, "Dimension")->required();
  cen->add_option("--q", cen_q, "Field: q, p^k or p^k/c0,...,1")->required();
  cen->add_flag("--types", cen_types, "Count matrices per conjugacy type");
  cen->add_option("--jobs", cen_jobs, "Worker threads")->capture_default_str();
  cen->add_option("--budget", cen_budget, "Largest q^(n^2) allowed (env FCYC_CENSUS_BUDGET)")->capture_default_str();
  cen->add_flag("--no-timing", cen_no_timing, "Omit wall time");
  cen->add_option("--ledger", cen_ledger, "Append a CSV row to this file");
  cen->add_flag("--json", as_json, "JSON output");

  // density
  auto* den = app.add_subcommand("density", "Monte Carlo density of uncyclic matrices with a Wilson interval");
  unsigned den_n = 0, den_jobs = 1;
  std::string den_q, den_ledger;
  std::uint64_t den_samples = 100000, den_seed = 1;
  double den_alpha = 0.05;
  den->add_option("--n", den_n, "Dimension")->required();
  den->add_option("--q", den_q, "Field")->required();
  den->add_option("--samples", den_samples, "Number of random matrices")->capture_default_str();
  den->add_option("--seed", den_seed, "Random seed")->capture_default_str();
  den->add_option("--alpha", den_alpha, "One minus the interval confidence")->capture_default_str();
  den->add_option("--jobs", den_jobs, "Worker threads")->capture_default_str();
  den->add_option("--ledger", den_ledger, "Append a CSV row to this file");
  den->add_flag("--json", as_json, "JSON output");

  // bounds
  auto* bnd = app.add_subcommand("bounds", "Lower and upper bounds for unc(n,q) compared with the exact value");
  unsigned bnd_n = 0, bnd_m = kDefaultTruncation;
  std::string bnd_q;
  bnd->add_option("--n", bnd_n, "Dimension, at least 3")->required();
  bnd->add_option("--q", bnd_q, "Field order")->required();
  bnd->add_option("--m", bnd_m, "Truncation for infinite products")->capture_default_str();
  bnd->add_flag("--json", as_json, "JSON output");

  // conjecture
  auto* con = app.add_subcommand("conjecture", "Certify unc(n,q) <= q^(n^2-n-1) (1 + 1/(2q))^n for all q >= 2");
  unsigned con_max = 0, con_jobs = 1;
  con->add_option("--max-n", con_max, "Check 1 <= n <= max-n")->required();
  con->add_option("--jobs", con_jobs, "Worker threads for unc(n,q)")->capture_default_str();
  con->add_flag("--json", as_json, "JSON output");

  // type
  auto* typ = app.add_subcommand("type", "Conjugacy type of a matrix: irreducibles with partitions");
  std::string typ_matrix;
  std::uint64_t typ_seed = 1;
  typ->add_option("--matrix", typ_matrix, "Matrix file")->required();
  typ->add_option("--seed", typ_seed, "Seed for factorization")->capture_default_str();
  typ->add_flag("--json", as_json, "JSON output");

  // factor
  auto* fac = app.add_subcommand("factor", "Factorization of a polynomial over GF(q) into monic irreducibles");
  std::string fac_field, fac_poly;
  std::uint64_t fac_seed = 1;
  fac->add_option("--field", fac_field, "Field")->required();
  fac->add_option("--poly", fac_poly, "Coefficient encodings c0,c1,... ascending")->required();
  fac->add_option("--seed", fac_seed, "Random seed")->capture_default_str();
  fac->add_flag("--json", as_json, "JSON output");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (isf->parsed()) {
      Mat x = read_matrix_file(isf_matrix);
      Rational eps = parse_rational(isf_eps);
      Rng rng = derive_rng(isf_seed, 0);
      IsfResult r = is_f_cyclic(x, eps, rng, {isf_check, isf_factor});
      if (as_json) {
        json j;
        j["verdict"] = r.verdict;
        j["u"] = r.cert ? json(vec_text(r.cert->u)) : json(nullptr);
        j["a"] = r.cert ? json(r.cert->a.to_text()) : json(nullptr);
        if (r.cert_factors) {
          json fs = json::array();
          for (const auto& [h, e] : r.cert_factors->factors) fs.push_back({{"h", h.to_text()}, {"e", e}});
          j["a_factors"] = fs;
        }
        j["iterations"] = r.iterations_used;
        j["vectors_tested"] = r.vectors_tested;
        j["budget"] = r.budget;
        j["epsilon"] = to_string(eps);
        j["seed"] = isf_seed;
        out << j.dump() << '\n';
      } else {
        out << (r.verdict ? "True" : "False");
        if (r.cert) out << " u=" << vec_text(r.cert->u) << " a=" << r.cert->a.to_string();
        out << " (vectors " << r.vectors_tested << "/" << r.budget << ", seed " << isf_seed << ")\n";
      }
    } else if (up->parsed()) {
      auto polys = unc_polys(up_n, up_jobs);
      for (const auto& p : polys)
        if (!p.is_integral()) throw VerificationFailure("unc polynomial has non-integer coefficients");
      const unsigned from = up_bulk ? 1 : up_n;
      for (unsigned k = from; k <= up_n; ++k) {
        if (as_json) {
          json j;
          if (up_bulk) j["n"] = k;
          j["var"] = "q";
          j["coeffs"] = coeffs_json(polys[k]);
          out << j.dump() << '\n';
        } else {
          out << "unc(" << k << ",q) = " << polys[k].to_string() << '\n';
        }
      }
    } else if (cen->parsed()) {
      Field f = Field::parse(cen_q);
      CensusResult r = census(cen_n, f, {cen_types, cen_jobs, cen_budget});
      append_ledger(cen_ledger, cen_n, f.q(), r.uncyclic_count, "census", "");
      if (as_json) {
        json j;
        j["n"] = cen_n;
        j["q"] = f.q();
        j["field"] = f.to_string();
        j["total"] = std::to_string(r.total);
        j["uncyclic_count"] = std::to_string(r.uncyclic_count);
        if (cen_types) {
          json ts = json::array();
          for (const auto& [t, c] : r.per_type) ts.push_back({{"type", t.to_string()}, {"count", std::to_string(c)}});
          j["types"] = ts;
        }
        if (!cen_no_timing) j["wall_time"] = r.wall_time;
        out << j.dump() << '\n';
      } else {
        out << "M(" << cen_n << "," << f.q() << "): " << r.uncyclic_count << " uncyclic of " << r.total << '\n';
        for (const auto& [t, c] : r.per_type) out << "  " << t.to_string() << "  " << c << '\n';
        if (!cen_no_timing) out << "wall time " << r.wall_time << " s\n";
      }
    } else if (den->parsed()) {
      Field f = Field::parse(den_q);
      DensityEstimate d = mc_density(den_n, f, den_samples, den_alpha, den_seed, den_jobs);
      append_ledger(den_ledger, den_n, f.q(), d.hits, "density", std::to_string(den_seed));
      if (as_json) {
        json j;
        j["n"] = den_n;
        j["q"] = f.q();
        j["samples"] = d.samples;
        j["hits"] = d.hits;
        j["estimate"] = d.estimate;
        j["interval"] = {d.lo, d.hi};
        j["confidence"] = d.confidence;
        j["seed"] = d.seed;
        out << j.dump() << '\n';
      } else {
        out << d.hits << "/" << d.samples << " uncyclic, estimate " << d.estimate << ", "
            << d.confidence * 100 << "% interval [" << d.lo << ", " << d.hi << "], seed " << d.seed << '\n';
      }
    } else if (bnd->parsed()) {
      Integer q(bnd_q, 10);
      if (bnd_n < 3) throw std::invalid_argument("--n must be at least 3");
      BoundReport r = bound_report(bnd_n, q, unc_poly(bnd_n));
      if (as_json) {
        json j;
        j["n"] = bnd_n;
        j["q"] = bnd_q;
        j["lower"] = to_string(r.lower);
        j["lower_approx"] = decimal(r.lower);
        j["upper"] = to_string(r.upper);
        j["upper_approx"] = decimal(r.upper);
        j["upper_rule"] = r.upper_rule;
        j["actual"] = to_string(*r.actual);
        j["lower_holds"] = *r.lower_holds;
        j["upper_holds"] = *r.upper_holds;
        out << j.dump() << '\n';
      } else {
        out << "lower  " << decimal(r.lower) << (*r.lower_holds ? "  <" : "  NOT <") << '\n'
            << "actual " << to_string(*r.actual) << '\n'
            << "upper  " << decimal(r.upper) << (*r.upper_holds ? "  >" : "  NOT >") << "  (" << r.upper_rule << ")\n";
      }
    } else if (con->parsed()) {
      auto polys = unc_polys(con_max, con_jobs);
      bool all = true;
      for (unsigned k = 1; k <= con_max; ++k) {
        ConjectureResult c = conjecture_check(k, polys[k]);
        all = all && c.cert.holds;
        if (as_json) {
          json j;
          j["n"] = k;
          j["holds"] = c.cert.holds;
          j["tail_start"] = to_string(c.cert.tail_start);
          j["tail_method"] = c.cert.tail_method;
          j["counterexample"] = c.cert.counterexample ? json(to_string(*c.cert.counterexample)) : json(nullptr);
          out << j.dump() << '\n';
        } else {
          out << "n=" << k << " " << (c.cert.holds ? "holds" : "FAILS") << ": ";
          if (c.cert.counterexample)
            out << "fails at q = " << *c.cert.counterexample << '\n';
          else if (c.cert.tail_start > c.cert.q0)
            out << "exact check for " << c.cert.q0 << " <= q < " << c.cert.tail_start << ", "
                << c.cert.tail_method << " beyond\n";
          else
            out << c.cert.tail_method << " for q >= " << c.cert.q0 << '\n';
        }
      }
      if (!all) return kExitFailure;
    } else if (typ->parsed()) {
      Mat x = read_matrix_file(typ_matrix);
      Rng rng = derive_rng(typ_seed, 0);
      MatrixType t = matrix_type(x, rng);
      if (as_json) {
        json es = json::array();
        for (const auto& e : t.entries) es.push_back({{"h", e.h.to_text()}, {"lambda", e.lambda.parts()}});
        json j;
        j["type"] = es;
        j["uncyclic"] = t.is_uncyclic();
        out << j.dump() << '\n';
      } else {
        out << t.to_string() << (t.is_uncyclic() ? "  uncyclic" : "  f-cyclic") << '\n';
      }
    } else if (fac->parsed()) {
      Field f = Field::parse(fac_field);
      Poly p = parse_poly(f, fac_poly);
      Rng rng = derive_rng(fac_seed, 0);
      Factorization r = factor(p, rng);
      if (as_json) {
        json fs = json::array();
        for (const auto& [h, e] : r.factors) fs.push_back({{"h", h.to_text()}, {"e", e}});
        json j;
        j["field"] = f.to_string();
        j["factors"] = fs;
        out << j.dump() << '\n';
      } else {
        out << r.to_string() << '\n';
      }
    }
  } catch (const BudgetError& e) {
    err << "fcyc: " << e.what() << '\n';
    return kExitFailure;
  } catch (const VerificationFailure& e) {
    err << "fcyc: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::logic_error& e) {
    // invalid_argument and domain_error derive from logic_error: input problems
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e)) {
      err << "fcyc: " << e.what() << '\n';
      return kExitUsage;
    }
    err << "fcyc: verification failed: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace fcyc
