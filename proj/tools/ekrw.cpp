// ekrw: command-line workbench over the ekrw core library.  Every
// subcommand is a thin adapter: it parses arguments, calls the library,
// and prints a JSON report (CSV for the table commands on request).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ekrw/canonical.hpp"
#include "ekrw/constructions.hpp"
#include "ekrw/counting.hpp"
#include "ekrw/family_io.hpp"
#include "ekrw/forbidden.hpp"
#include "ekrw/graphfam.hpp"
#include "ekrw/numbers.hpp"
#include "ekrw/search.hpp"
#include "ekrw/subsets.hpp"
#include "ekrw/thresholds.hpp"
#include "ekrw/verify.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitUsage = 2;
constexpr int kExitPropertyFailure = 3;

std::string big_str(const ekrw::BigCount& v) { return v.get_str(); }
std::string rat_str(const ekrw::Rational& v) { return v.get_str(); }

json set_json(const ekrw::ElementSet& s) {
  json arr = json::array();
  for (int e : s.elements()) arr.push_back(e);
  return arr;
}

struct Report {
  std::string command;
  json parameters = json::object();
  json results = json::object();
  std::optional<std::uint64_t> seed;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  void print() const {
    json out;
    out["command"] = command;
    out["parameters"] = parameters;
    out["results"] = results;
    json prov;
    prov["version"] = kVersion;
    if (seed) prov["seed"] = *seed;
    prov["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    out["provenance"] = prov;
    std::cout << out.dump(2) << '\n';
  }
};

int default_threads() {
  if (const char* env = std::getenv("EKRW_THREADS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (...) {
    }
  }
  return 1;
}

ekrw::SetFamily best_construction_seed(const ekrw::SearchProblem& prob) {
  using ekrw::FamilySpec;
  std::optional<ekrw::SetFamily> best;
  auto consider = [&](const ekrw::SetFamily& fam) {
    if (!ekrw::is_d_wise_t_intersecting(fam, prob.d, prob.t).ok) return;
    if (prob.require_nontrivial && !ekrw::is_nontrivial(fam, prob.t)) return;
    if (!best || fam.size() > best->size()) best = fam;
  };
  if (prob.t == 1) {
    consider(*ekrw::mkd_argmax(prob.n, prob.k, prob.d).family);
    consider(*ekrw::tkd_argmax(prob.n, prob.k, prob.d).family);
  } else if (prob.k > prob.t + prob.d - 1) {
    consider(ekrw::build(FamilySpec::a(prob.n, prob.k, prob.t + prob.d - 1)));
    consider(ekrw::build(FamilySpec::h(prob.n, prob.k, prob.t + prob.d - 1)));
  }
  // All k-subsets of [k+1]: d of them always share k+1-d >= t elements.
  std::vector<ekrw::ElementSet> slab;
  for (int i = 1; i <= prob.k + 1; ++i) {
    ekrw::ElementSet s = ekrw::ElementSet::prefix(prob.n, prob.k + 1);
    s.remove(i);
    slab.push_back(s);
  }
  consider(ekrw::SetFamily::from_members(prob.n, prob.k, std::move(slab)));
  if (!best) throw std::runtime_error("no valid constructive seed found");
  return *best;
}

void write_checkpoint(const std::string& path, const ekrw::SearchProblem& prob,
                      const ekrw::SearchResult& snapshot) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write checkpoint " + path);
  out << "# ekrw search checkpoint\n";
  out << "problem n=" << prob.n << " k=" << prob.k << " d=" << prob.d
      << " t=" << prob.t << " nontrivial=" << (prob.require_nontrivial ? 1 : 0)
      << "\n";
  out << "nodes " << snapshot.nodes << "\n";
  ekrw::write_family(snapshot.witness, out);
}

ekrw::SetFamily read_checkpoint_incumbent(const std::string& path,
                                          const ekrw::SearchProblem& prob) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open checkpoint " + path);
  std::string line;
  bool seen_problem = false;
  std::ostringstream family_text;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) continue;
    if (line.rfind("problem ", 0) == 0) {
      std::ostringstream expect;
      expect << "problem n=" << prob.n << " k=" << prob.k << " d=" << prob.d
             << " t=" << prob.t << " nontrivial="
             << (prob.require_nontrivial ? 1 : 0);
      if (line != expect.str())
        throw std::runtime_error("checkpoint problem line does not match");
      seen_problem = true;
      continue;
    }
    if (line.rfind("nodes ", 0) == 0) continue;
    family_text << line << '\n';
  }
  if (!seen_problem) throw std::runtime_error("checkpoint missing problem line");
  std::istringstream family_in(family_text.str());
  return ekrw::read_family(family_in).family;
}

// --------------------------------------------------------------------------
// Subcommand handlers (each returns the process exit code)
// --------------------------------------------------------------------------

int run_construct(const std::string& spec_text, const std::string& out_path,
                  Report& report) {
  ekrw::FamilySpec spec = ekrw::FamilySpec::parse(spec_text);
  ekrw::SetFamily fam = ekrw::build(spec);
  report.parameters["spec"] = spec.to_string();
  report.results["size"] = fam.size();
  if (!out_path.empty()) {
    ekrw::write_family(fam, std::filesystem::path(out_path));
    report.results["out"] = out_path;
  }
  report.print();
  return 0;
}

int run_count(const std::string& spec_text, const std::string& bound_name,
              long n, long k, long t, long l, Report& report) {
  if (!spec_text.empty()) {
    ekrw::FamilySpec spec = ekrw::FamilySpec::parse(spec_text);
    report.parameters["spec"] = spec.to_string();
    report.results["count"] = big_str(ekrw::count_construction(spec));
  } else if (!bound_name.empty()) {
    ekrw::BoundId id = ekrw::bound_id_from_string(bound_name);
    ekrw::BoundParams params{n, k, t, l};
    report.parameters["bound"] = bound_name;
    report.parameters["n"] = n;
    report.parameters["k"] = k;
    report.parameters["t"] = t;
    report.parameters["l"] = l;
    report.results["count"] = big_str(ekrw::bound_value(id, params));
  } else {
    throw CLI::ValidationError("count", "either --spec or --bound is required");
  }
  report.print();
  return 0;
}

int run_verify(const std::string& family_path, int dwise, int t, bool nontrivial,
               bool lemma, const std::string& iso_path, Report& report) {
  ekrw::ReadResult read = ekrw::read_family(family_path);
  for (const std::string& w : read.warnings) std::cerr << "warning: " << w << '\n';
  const ekrw::SetFamily& fam = read.family;
  report.parameters["family"] = family_path;
  bool all_ok = true;

  if (dwise > 0) {
    report.parameters["dwise"] = dwise;
    report.parameters["t"] = t;
    ekrw::CheckResult check = ekrw::is_d_wise_t_intersecting(fam, dwise, t);
    report.results["d_wise_t_intersecting"] = check.ok;
    if (!check.ok) {
      all_ok = false;
      json w;
      w["intersection_size"] = check.witness->intersection_size;
      w["sets"] = json::array();
      for (const auto& s : check.witness->sets) w["sets"].push_back(set_json(s));
      report.results["violation"] = w;
    }
    if (lemma && check.ok) {
      bool nontriv = ekrw::is_nontrivial(fam, t);
      if (!nontriv) {
        report.results["lemma"] = "hypothesis fails: family is trivial";
        all_ok = false;
      } else {
        ekrw::CheckResult lem = ekrw::check_m_wise_lemma(fam, dwise, t);
        report.results["lemma"] = lem.ok;
        if (!lem.ok) all_ok = false;
      }
    }
  }
  if (nontrivial) {
    bool ok = ekrw::is_nontrivial(fam, t > 0 ? t : 1);
    report.results["nontrivial"] = ok;
    if (!ok) all_ok = false;
  }
  if (!iso_path.empty()) {
    ekrw::SetFamily other = ekrw::read_family(iso_path).family;
    auto witness = ekrw::are_isomorphic(fam, other);
    report.parameters["iso"] = iso_path;
    report.results["isomorphic"] = witness.has_value();
    if (witness)
      report.results["witness_permutation"] = *witness;
    else
      all_ok = false;
  }
  report.print();
  return all_ok ? 0 : kExitPropertyFailure;
}

int run_search(ekrw::SearchProblem prob, bool oracle, bool seed_construction,
               int threads, const std::string& witness_out,
               const std::string& checkpoint_path, const std::string& resume_path,
               Report& report) {
  report.parameters["n"] = prob.n;
  report.parameters["k"] = prob.k;
  report.parameters["d"] = prob.d;
  report.parameters["t"] = prob.t;
  report.parameters["nontrivial"] = prob.require_nontrivial;
  report.parameters["threads"] = threads;

  ekrw::BnbOptions options;
  options.threads = threads;
  if (seed_construction) options.seed_family = best_construction_seed(prob);
  if (!resume_path.empty())
    options.seed_family = read_checkpoint_incumbent(resume_path, prob);
  if (!checkpoint_path.empty())
    options.checkpoint_sink = [&](const ekrw::SearchResult& snapshot) {
      write_checkpoint(checkpoint_path, prob, snapshot);
    };

  ekrw::SearchResult result = ekrw::branch_and_bound_max(prob, options);
  if (oracle) {
    ekrw::SearchResult reference = ekrw::brute_force_max(prob);
    report.results["oracle_best_size"] = reference.best_size;
    if (reference.best_size != result.best_size) {
      report.results["error"] = "branch and bound disagrees with the oracle";
      report.print();
      return kExitPropertyFailure;
    }
  }
  report.results["best_size"] = result.best_size;
  report.results["status"] = result.status == ekrw::SearchStatus::Optimal
                                 ? "optimal"
                                 : "budget_exhausted";
  report.results["nodes"] = result.nodes;
  if (!witness_out.empty()) {
    ekrw::write_family(result.witness, std::filesystem::path(witness_out));
    report.results["witness_file"] = witness_out;
  }
  json hist = json::array();
  for (auto& [size, node] : result.incumbent_history)
    hist.push_back({{"size", size}, {"node", node}});
  report.results["incumbent_history"] = hist;
  if (!checkpoint_path.empty()) write_checkpoint(checkpoint_path, prob, result);
  report.print();
  return 0;
}

int run_extremal(long n, long k, long d, const std::string& format, Report& report) {
  ekrw::ExtremalReport rep = ekrw::extremal_report(n, k, d);
  report.parameters["n"] = n;
  report.parameters["k"] = k;
  report.parameters["d"] = d;
  if (format == "csv") {
    std::cout << "n,k,d,A,H,m,r_m,t,r_t,max\n";
    std::cout << n << ',' << k << ',' << d << ',' << big_str(rep.a_count) << ','
              << big_str(rep.h_count) << ',' << big_str(rep.m_count) << ','
              << rep.m_r << ',' << big_str(rep.t_count) << ',' << rep.t_r << ','
              << big_str(rep.best()) << '\n';
    return 0;
  }
  report.results["A"] = big_str(rep.a_count);
  report.results["H"] = big_str(rep.h_count);
  report.results["m"] = big_str(rep.m_count);
  report.results["r_m"] = rep.m_r;
  report.results["t"] = big_str(rep.t_count);
  report.results["r_t"] = rep.t_r;
  report.results["max"] = big_str(rep.best());
  report.print();
  return 0;
}

int run_thresholds(long n, long k, long d, long t, const std::string& format,
                   Report& report) {
  ekrw::RangeClassification cls = ekrw::classify_range(n, k, d, t);
  report.parameters["n"] = n;
  report.parameters["k"] = k;
  report.parameters["d"] = d;
  report.parameters["t"] = t;
  if (format == "csv") {
    std::cout << "theorem,applies,threshold,window_hi,bound\n";
    for (ekrw::TheoremRange id : ekrw::kAllTheoremRanges) {
      const ekrw::TheoremStatus& st = cls[id];
      std::cout << ekrw::theorem_range_id(id) << ',' << (st.applies ? 1 : 0) << ','
                << rat_str(st.threshold) << ','
                << (st.window_hi ? rat_str(*st.window_hi) : "") << ','
                << (st.bound ? big_str(*st.bound) : "") << '\n';
    }
    return 0;
  }
  for (ekrw::TheoremRange id : ekrw::kAllTheoremRanges) {
    const ekrw::TheoremStatus& st = cls[id];
    json entry;
    entry["applies"] = st.applies;
    entry["threshold"] = rat_str(st.threshold);
    if (st.window_hi) entry["window_hi"] = rat_str(*st.window_hi);
    if (st.bound) entry["bound"] = big_str(*st.bound);
    entry["bound_expr"] = st.bound_expr;
    report.results[ekrw::theorem_range_id(id)] = entry;
  }
  report.print();
  return 0;
}

int run_beta(int t, int d, const std::string& tol_text, Report& report) {
  ekrw::Rational tol = ekrw::parse_rational(tol_text);
  ekrw::BetaBracket bracket = ekrw::beta(t, d, tol);
  report.parameters["t"] = t;
  report.parameters["d"] = d;
  report.parameters["tol"] = tol_text;
  report.results["lo"] = rat_str(bracket.lo);
  report.results["hi"] = rat_str(bracket.hi);
  report.results["lo_decimal"] = mpq_get_d(bracket.lo.get_mpq_t());
  report.results["hi_decimal"] = mpq_get_d(bracket.hi.get_mpq_t());
  report.print();
  return 0;
}

int run_forbidden_cert(long k, long l, std::optional<long> n, Report& report) {
  report.parameters["k"] = k;
  report.parameters["l"] = l;
  auto cert = ekrw::kmw_certificate(k, l);
  if (!cert) {
    report.results["certificate"] = nullptr;
    report.results["reason"] = "condition fails: k-l divides l!";
    report.print();
    return kExitPropertyFailure;
  }
  json c;
  c["p"] = cert->p;
  c["a"] = cert->a;
  c["degree"] = cert->degree;
  c["residues"] = cert->residues;
  if (n) {
    report.parameters["n"] = *n;
    c["bound"] = big_str(cert->bound(*n));
  }
  report.results["certificate"] = c;
  report.print();
  return 0;
}

int run_forbidden_guarantee(long k, Report& report) {
  ekrw::SmallLReport rep = ekrw::small_l_guarantee(k);
  report.parameters["k"] = k;
  if (rep.guarded) {
    report.results["guard"] = "bound undefined for k < 16";
    report.print();
    return 0;
  }
  report.results["max_l"] = rep.max_l;
  report.results["certified"] = rep.certified;
  report.results["failures"] = rep.failures;
  report.print();
  return rep.failures.empty() ? 0 : kExitPropertyFailure;
}

int run_graphs(bool verify_mode, int n, int s, const std::string& parts_text,
               int t, const std::string& mode, long pairs, std::uint64_t seed,
               int threads, bool mutate, Report& report) {
  std::vector<int> parts;
  if (!parts_text.empty()) {
    std::istringstream in(parts_text);
    std::string tok;
    while (std::getline(in, tok, ',')) parts.push_back(std::stoi(tok));
  } else {
    parts = {s};
  }
  report.parameters["n"] = n;
  report.parameters["parts"] = parts;
  report.parameters["t"] = t;

  if (!verify_mode) {
    ekrw::GraphFamilyCount count =
        parts.size() == 1 ? ekrw::count_kst_family(n, parts[0], t)
                          : ekrw::count_multipartite_family(n, parts, t);
    report.results["count"] = big_str(count.count);
    report.results["ekr_count"] = big_str(count.ekr_count);
    report.results["exceeds"] = count.exceeds;
    report.results["condition_holds"] = count.condition_holds;
    report.print();
    return 0;
  }

  ekrw::GraphFamilyParams params{n, parts, t, -1};
  if (mutate) params.min_degree = params.r_size() - 2;
  ekrw::VerifyOptions options;
  options.sample_pairs = pairs;
  options.seed = seed;
  options.threads = threads;
  report.seed = seed;
  report.parameters["mode"] = mode;
  ekrw::IntersectReport rep = ekrw::verify_intersecting(
      params,
      mode == "sampled" ? ekrw::VerifyMode::Sampled : ekrw::VerifyMode::ExhaustiveCore,
      options);
  report.results["intersecting"] = rep.ok;
  report.results["pairs_checked"] = rep.pairs_checked;
  report.print();
  return rep.ok ? 0 : kExitPropertyFailure;
}

int run_mu(const std::string& spec_text, const std::string& family_path,
           const std::string& p_text, Report& report) {
  ekrw::Rational p = ekrw::parse_rational(p_text);
  report.parameters["p"] = p_text;
  ekrw::SetFamily fam = [&]() {
    if (!spec_text.empty()) {
      report.parameters["spec"] = spec_text;
      return ekrw::build(ekrw::FamilySpec::parse(spec_text));
    }
    report.parameters["family"] = family_path;
    return ekrw::read_family(family_path).family;
  }();
  report.results["mu_p"] = rat_str(ekrw::mu_p(fam, p));
  report.results["mu_p_decimal"] = mpq_get_d(ekrw::mu_p(fam, p).get_mpq_t());
  report.print();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ekrw: intersecting-family constructions, counts, verification, and search"};
  app.require_subcommand(1);
  int threads = default_threads();
  app.add_option("--threads", threads, "worker threads (default 1 or EKRW_THREADS)");

  // construct
  auto* construct = app.add_subcommand("construct", "materialize a named family");
  std::string c_spec, c_out;
  construct->add_option("--spec", c_spec, "family spec, e.g. M(11,7,3,3)")->required();
  construct->add_option("--out", c_out, "family file to write");

  // count
  auto* count = app.add_subcommand("count", "closed-form counts and bound values");
  std::string n_spec, n_bound;
  long cn = 0, ck = 0, ct = 0, cl = 0;
  count->add_option("--spec", n_spec, "family spec");
  count->add_option("--bound", n_bound, "bound id: HM, EKR, FranklUB, KMW");
  count->add_option("--n", cn);
  count->add_option("--k", ck);
  count->add_option("--t", ct);
  count->add_option("--l", cl);

  // verify
  auto* verify = app.add_subcommand("verify", "check intersection properties");
  std::string v_family, v_iso;
  int v_d = 0, v_t = 1;
  bool v_nontrivial = false, v_lemma = false;
  verify->add_option("--family", v_family)->required();
  verify->add_option("--dwise", v_d, "check d-wise t-intersection");
  verify->add_option("--t", v_t);
  verify->add_flag("--nontrivial", v_nontrivial);
  verify->add_flag("--lemma", v_lemma, "also check the m-wise intersection lemma");
  verify->add_option("--iso", v_iso, "second family for isomorphism check");

  // search
  auto* search = app.add_subcommand("search", "exact maximum subfamily search");
  ekrw::SearchProblem prob;
  bool s_nontrivial = false, s_oracle = false, s_seed = false;
  long s_budget = 0;
  std::string s_witness, s_checkpoint, s_resume;
  search->add_option("--n", prob.n)->required();
  search->add_option("--k", prob.k)->required();
  search->add_option("--d", prob.d)->required();
  search->add_option("--t", prob.t)->required();
  search->add_flag("--nontrivial", s_nontrivial);
  search->add_flag("--oracle", s_oracle, "cross-check against brute force");
  search->add_flag("--seed-construction", s_seed, "seed the incumbent from the best construction");
  search->add_option("--budget", s_budget, "node budget");
  search->add_option("--witness-out", s_witness);
  search->add_option("--checkpoint", s_checkpoint, "periodic incumbent checkpoint file");
  search->add_option("--resume", s_resume, "resume incumbent from a checkpoint");

  // extremal
  auto* extremal = app.add_subcommand("extremal", "A/H/m/t counts table");
  long en = 0, ek = 0, ed = 0;
  std::string e_format = "json";
  extremal->add_option("--n", en)->required();
  extremal->add_option("--k", ek)->required();
  extremal->add_option("--d", ed)->required();
  extremal->add_option("--format", e_format)->check(CLI::IsMember({"json", "csv"}));

  // thresholds
  auto* thresholds = app.add_subcommand("thresholds", "theorem range classification");
  long tn = 0, tk = 0, td = 0, tt = 0;
  std::string t_format = "json";
  thresholds->add_option("--n", tn)->required();
  thresholds->add_option("--k", tk)->required();
  thresholds->add_option("--d", td)->required();
  thresholds->add_option("--t", tt)->required();
  thresholds->add_option("--format", t_format)->check(CLI::IsMember({"json", "csv"}));

  // beta
  auto* beta = app.add_subcommand("beta", "bracket the density threshold root");
  int bt = 0, bd = 0;
  std::string b_tol = "1e-9";
  beta->add_option("--t", bt)->required();
  beta->add_option("--d", bd)->required();
  beta->add_option("--tol", b_tol);

  // forbidden
  auto* forbidden = app.add_subcommand("forbidden", "missing-intersection certificates");
  auto* cert = forbidden->add_subcommand("cert", "certificate for (k,l)");
  long fk = 0, fl = 0, fn = -1;
  cert->add_option("--k", fk)->required();
  cert->add_option("--l", fl)->required();
  cert->add_option("--n", fn, "also evaluate the bound C(n,k-l-1)");
  auto* guarantee = forbidden->add_subcommand("guarantee", "check all l below log k / log log k");
  long gk = 0;
  guarantee->add_option("--k", gk)->required();
  forbidden->require_subcommand(1);

  // graphs
  auto* graphs = app.add_subcommand("graphs", "K_{s,t}-intersecting graph families");
  auto* gcount = graphs->add_subcommand("count", "closed-form family count");
  auto* gverify = graphs->add_subcommand("verify", "verify the intersecting property");
  int gn = 0, gs = 0, gt = 0;
  std::string g_parts, g_mode = "exhaustive";
  long g_pairs = 1000;
  std::uint64_t g_seed = 0;
  bool g_mutate = false;
  for (auto* sub : {gcount, gverify}) {
    sub->add_option("--n", gn)->required();
    sub->add_option("--s", gs);
    sub->add_option("--parts", g_parts, "comma-separated part sizes");
    sub->add_option("--t", gt)->required();
  }
  gverify->add_option("--mode", g_mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  gverify->add_option("--pairs", g_pairs);
  gverify->add_option("--seed", g_seed);
  gverify->add_flag("--mutate", g_mutate, "lower the degree threshold by one (expected to fail)");
  graphs->require_subcommand(1);

  // mu
  auto* mu = app.add_subcommand("mu", "exact product measure of a family");
  std::string m_spec, m_family, m_p;
  mu->add_option("--spec", m_spec);
  mu->add_option("--family", m_family);
  mu->add_option("--p", m_p, "rational in (0,1), e.g. 1/3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    json err;
    err["error"] = e.what();
    std::cout << err.dump(2) << '\n';
    return kExitUsage;
  }

  Report report;
  try {
    if (*construct) {
      report.command = "construct";
      return run_construct(c_spec, c_out, report);
    }
    if (*count) {
      report.command = "count";
      return run_count(n_spec, n_bound, cn, ck, ct, cl, report);
    }
    if (*verify) {
      report.command = "verify";
      return run_verify(v_family, v_d, v_t, v_nontrivial, v_lemma, v_iso, report);
    }
    if (*search) {
      report.command = "search";
      prob.require_nontrivial = s_nontrivial;
      if (s_budget > 0) prob.node_budget = s_budget;
      return run_search(prob, s_oracle, s_seed, threads, s_witness, s_checkpoint,
                        s_resume, report);
    }
    if (*extremal) {
      report.command = "extremal";
      return run_extremal(en, ek, ed, e_format, report);
    }
    if (*thresholds) {
      report.command = "thresholds";
      return run_thresholds(tn, tk, td, tt, t_format, report);
    }
    if (*beta) {
      report.command = "beta";
      return run_beta(bt, bd, b_tol, report);
    }
    if (*forbidden) {
      if (*cert) {
        report.command = "forbidden cert";
        return run_forbidden_cert(fk, fl, fn >= 0 ? std::optional<long>(fn) : std::nullopt,
                                  report);
      }
      report.command = "forbidden guarantee";
      return run_forbidden_guarantee(gk, report);
    }
    if (*graphs) {
      const bool verify_graphs = gverify->parsed();
      report.command = verify_graphs ? "graphs verify" : "graphs count";
      return run_graphs(verify_graphs, gn, gs, g_parts, gt, g_mode, g_pairs, g_seed,
                        threads, g_mutate, report);
    }
    if (*mu) {
      report.command = "mu";
      if (m_spec.empty() && m_family.empty())
        throw CLI::ValidationError("mu", "either --spec or --family is required");
      return run_mu(m_spec, m_family, m_p, report);
    }
  } catch (const CLI::Error& e) {
    json err;
    err["error"] = e.what();
    std::cout << err.dump(2) << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    std::cout << err.dump(2) << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
