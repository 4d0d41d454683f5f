// symjet command-line front end.
//
// Subcommands wire the library together for batch runs: dimension tables,
// spanning certificates, jet completion, the quartic obstruction scan, and
// restriction-morphism rank checks. Reports are printed to stdout as JSON
// (and optionally persisted via --out); a fixed config plus seed yields
// byte-identical bytes. Timing fields are opt-in (--timings) so the
// determinism contract holds by default.
//
// Exit codes: 0 success/certified/expected outcome, 1 I/O or parse error,
// 2 inconclusive or unexpected-but-possible outcome, 3 precondition
// violation, 4 violation of an invariant the mathematics guarantees
// (always an implementation bug, never bad luck).

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symjet/completion.hpp"
#include "symjet/json_io.hpp"
#include "symjet/lagrangian.hpp"
#include "symjet/spanning.hpp"

namespace {

using symjet::BigInt;
using symjet::Json;
using symjet::Rational;

constexpr const char* kVersion = "1.0.0";

// Config-level misuse (missing --seed and similar): maps to exit 1 like any
// other unusable invocation.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  int code = 0;
  Json report;
};

Json big_json(const BigInt& x) {
  if (mpz_fits_slong_p(x.get_mpz_t()) && mpz_sizeinbase(x.get_mpz_t(), 2) <= 53)
    return static_cast<long long>(x.get_si());
  return x.get_str();
}

Json report_head(const std::string& command, const Json& config) {
  Json j;
  j["tool"] = "symjet";
  j["version"] = kVersion;
  j["monomial_order"] = "grlex";
  j["command"] = command;
  j["config"] = config;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(symjet::fnv1a64(command + " " + config.dump())));
  j["config_hash"] = buf;
  return j;
}

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t seed, bool ephemeral) {
  if (seed_opt->count() > 0) return seed;
  if (!ephemeral) throw UsageError("--seed is required (pass --ephemeral for a throwaway run)");
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

Json rank_report_json(const symjet::RankReport& rep) {
  Json j;
  j["rows"] = rep.rows;
  j["cols"] = rep.cols;
  j["target_rank"] = rep.target_rank;
  j["primes"] = rep.primes;
  j["ranks"] = rep.ranks;
  j["maximal"] = rep.maximal;
  j["certified_mod"] = rep.certified_mod;
  j["exact_rank"] = rep.exact_rank;
  j["verdict"] = rep.verdict;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symjet: exact symplectic jet completion and spanning certificates"};
  app.set_version_flag("--version", std::string("symjet ") + kVersion);
  app.require_subcommand(1);
  app.footer("Environment: SYMJET_THREADS caps worker threads for parallel scans.");

  std::function<Outcome()> runner;

  // --- nm ------------------------------------------------------------------
  auto* nm = app.add_subcommand("nm", "Dimension table N(n,d) and M(2n,d)");
  int nm_nmax = 6, nm_dmax = 12;
  nm->add_option("--nmax", nm_nmax, "largest variable count")->capture_default_str()->check(CLI::PositiveNumber);
  nm->add_option("--dmax", nm_dmax, "largest degree")->capture_default_str()->check(CLI::PositiveNumber);
  nm->callback([&]() {
    runner = [&]() {
      Json config;
      config["nmax"] = nm_nmax;
      config["dmax"] = nm_dmax;
      Json rep = report_head("nm", config);
      Json table = Json::array();
      for (int n = 1; n <= nm_nmax; ++n)
        for (int d = 1; d <= nm_dmax; ++d) {
          symjet::Dims dm = symjet::dims(n, d);
          Json row;
          row["n"] = n;
          row["d"] = d;
          row["N"] = big_json(dm.big_n);
          if (dm.m) row["M"] = big_json(*dm.m);
          table.push_back(std::move(row));
        }
      rep["table"] = std::move(table);
      return Outcome{0, std::move(rep)};
    };
  });

  // --- span ----------------------------------------------------------------
  auto* span = app.add_subcommand("span", "Certify that a random Lagrangian family spans degree d");
  int sp_dim = 6, sp_degree = 3, sp_primes = 8;
  std::uint64_t sp_seed = 0, sp_max_coeff = 20000;
  bool sp_slow = false, sp_ephemeral = false;
  span->add_option("--dim", sp_dim, "ambient dimension 2n")->capture_default_str()->check(CLI::Range(2, 64));
  span->add_option("--degree", sp_degree, "degree to span")->capture_default_str()->check(CLI::PositiveNumber);
  span->add_option("--max-coeff", sp_max_coeff, "frame entries drawn from [1, max-coeff]")->capture_default_str();
  span->add_option("--prime-count", sp_primes, "modular certificates to attempt")->capture_default_str()->check(CLI::PositiveNumber);
  auto* sp_seed_opt = span->add_option("--seed", sp_seed, "RNG seed (required)");
  span->add_flag("--ephemeral", sp_ephemeral, "allow a random seed");
  span->add_flag("--slow", sp_slow, "enable long certificates (degree >= 10)");
  span->callback([&]() {
    runner = [&]() {
      if (sp_dim % 2 != 0) throw symjet::OddDimension("--dim must be even");
      if (sp_degree >= 10 && !sp_slow)
        throw symjet::Error("degree >= 10 is a long-running certificate: pass --slow");
      std::uint64_t seed = resolve_seed(sp_seed_opt, sp_seed, sp_ephemeral);
      Json config;
      config["dim"] = sp_dim;
      config["degree"] = sp_degree;
      config["max_coeff"] = sp_max_coeff;
      config["prime_count"] = sp_primes;
      config["seed"] = seed;
      Json rep = report_head("span", config);

      int count = symjet::small_m(sp_dim, sp_degree);
      symjet::NormalFamily fam =
          symjet::random_normal_family(sp_dim / 2, count, sp_max_coeff, seed);
      symjet::SampledFamily sampled =
          symjet::simplex_sampled_family(fam.frames(), sp_degree);
      symjet::SpanReport sr = symjet::certify_span(sampled, sp_degree, sp_primes);

      rep["family_count"] = count;
      rep["family_retries"] = fam.retries;
      rep["rows"] = sr.rows;
      rep["cols"] = sr.cols;
      rep["target_rank"] = sr.target_rank;
      rep["primes"] = sr.primes;
      rep["ranks"] = sr.ranks;
      rep["certified"] = sr.certified;
      rep["verdict"] = sr.verdict;
      if (!sr.failure_kind.empty()) rep["failure_kind"] = sr.failure_kind;
      return Outcome{sr.certified ? 0 : 2, std::move(rep)};
    };
  });

  // --- complete --------------------------------------------------------------
  auto* complete = app.add_subcommand("complete", "Complete a symplectic d-jet to an exact polynomial symplectomorphism");
  std::string co_in, co_strategy = "naive", co_factored_out;
  std::uint64_t co_seed = 0, co_max_coeff = 20;
  int co_primes = 8;
  bool co_ephemeral = false;
  complete->add_option("--in", co_in, "input jet JSON")->required();
  complete->add_option("--strategy", co_strategy, "completion strategy")
      ->capture_default_str()
      ->check(CLI::IsMember({"naive", "grouped"}));
  complete->add_option("--factored-out", co_factored_out, "also write the factored map to this file");
  complete->add_option("--max-coeff", co_max_coeff, "family entries drawn from [1, max-coeff] (grouped)")->capture_default_str();
  complete->add_option("--prime-count", co_primes, "modular certificates per level (grouped)")->capture_default_str()->check(CLI::PositiveNumber);
  auto* co_seed_opt = complete->add_option("--seed", co_seed, "RNG seed (required for grouped)");
  complete->add_flag("--ephemeral", co_ephemeral, "allow a random seed");
  complete->callback([&]() {
    runner = [&]() {
      symjet::Jet jet = symjet::jet_from_json(symjet::read_json_file(co_in));
      Json config;
      config["in"] = co_in;
      config["strategy"] = co_strategy;
      std::optional<symjet::GroupedFamilies> fams;
      if (co_strategy == "grouped") {
        std::uint64_t seed = resolve_seed(co_seed_opt, co_seed, co_ephemeral);
        config["max_coeff"] = co_max_coeff;
        config["prime_count"] = co_primes;
        config["seed"] = seed;
        fams = symjet::make_grouped_families(jet.map.nvars, jet.order, co_max_coeff, seed, co_primes);
      }
      Json rep = report_head("complete", config);
      rep["dim"] = jet.map.nvars;
      rep["order"] = jet.order;

      symjet::FactoredMap fm = fams ? symjet::complete_jet_grouped(jet, *fams)
                                    : symjet::complete_jet_naive(jet);
      symjet::CompletionReport v = symjet::verify_completion(fm, jet, jet.order);

      Json ver;
      ver["jet_matches"] = v.jet_matches;
      ver["factors_symplectic"] = v.factors_symplectic;
      ver["pass"] = v.pass;
      ver["factor_count"] = v.factor_count;
      ver["degree_bound"] = big_json(v.degree_bound);
      if (!v.first_mismatch.empty()) ver["first_mismatch"] = v.first_mismatch;
      rep["verification"] = std::move(ver);
      if (fams) {
        rep["family_retries"] = fams->retries;
        Json levels = Json::array();
        for (const auto& [deg, lb] : fams->levels) {
          Json l;
          l["potential_degree"] = deg;
          l["frame_count"] = lb.frame_count;
          l["primes"] = lb.primes;
          l["ranks"] = lb.ranks;
          levels.push_back(std::move(l));
        }
        rep["levels"] = std::move(levels);
        if (jet.order >= 2) {
          BigInt cap;
          mpz_ui_pow_ui(cap.get_mpz_t(), static_cast<unsigned long>(jet.order),
                        static_cast<unsigned long>(symjet::max_frames(jet.map.nvars, jet.order)));
          rep["degree_cap"] = big_json(cap);
        }
      }
      rep["factored"] = symjet::factored_json(fm);
      if (!co_factored_out.empty()) symjet::write_json_file(co_factored_out, symjet::factored_json(fm));
      return Outcome{v.pass ? 0 : 2, std::move(rep)};
    };
  });

  // --- todd ------------------------------------------------------------------
  auto* todd = app.add_subcommand("todd", "Scan random 7-families in dimension 4 for the quartic rank bound");
  int td_trials = 1000;
  std::uint64_t td_seed = 0, td_max_coeff = 20;
  bool td_ephemeral = false;
  todd->add_option("--trials", td_trials, "number of random families")->capture_default_str()->check(CLI::PositiveNumber);
  todd->add_option("--max-coeff", td_max_coeff, "frame entries drawn from [1, max-coeff]")->capture_default_str();
  auto* td_seed_opt = todd->add_option("--seed", td_seed, "RNG seed (required)");
  todd->add_flag("--ephemeral", td_ephemeral, "allow a random seed");
  todd->callback([&]() {
    runner = [&]() {
      std::uint64_t seed = resolve_seed(td_seed_opt, td_seed, td_ephemeral);
      Json config;
      config["trials"] = td_trials;
      config["max_coeff"] = td_max_coeff;
      config["seed"] = seed;
      Json rep = report_head("todd", config);

      symjet::ToddStats st = symjet::todd_scan(td_trials, td_max_coeff, seed);
      rep["trials"] = st.trials;
      rep["max_rank"] = st.max_rank;
      Json hist;
      for (const auto& [rank, cnt] : st.histogram) hist[std::to_string(rank)] = cnt;
      rep["histogram"] = std::move(hist);
      rep["counterexample_seeds"] = st.counterexample_seeds;
      rep["verdict"] = st.max_rank <= 34 ? "BOUNDED_BY_34" : "RANK_BOUND_VIOLATED";
      return Outcome{st.max_rank <= 34 ? 0 : 4, std::move(rep)};
    };
  });

  // --- quartic ------------------------------------------------------------------
  auto* quartic = app.add_subcommand("quartic", "Construct the quartic through 7 disjoint involutive lines");
  std::string qu_in;
  std::uint64_t qu_seed = 0, qu_max_coeff = 20;
  bool qu_ephemeral = false;
  quartic->add_option("--in", qu_in, "lines JSON (array of {p,q}); omit to generate from --seed");
  quartic->add_option("--max-coeff", qu_max_coeff, "generator entries drawn from [1, max-coeff]")->capture_default_str();
  auto* qu_seed_opt = quartic->add_option("--seed", qu_seed, "RNG seed (required without --in)");
  quartic->add_flag("--ephemeral", qu_ephemeral, "allow a random seed");
  quartic->callback([&]() {
    runner = [&]() {
      Json config;
      std::vector<symjet::ProjLine> lines;
      if (!qu_in.empty()) {
        config["in"] = qu_in;
        lines = symjet::lines_from_json(symjet::read_json_file(qu_in));
      } else {
        std::uint64_t seed = resolve_seed(qu_seed_opt, qu_seed, qu_ephemeral);
        config["max_coeff"] = qu_max_coeff;
        config["seed"] = seed;
        lines = symjet::random_disjoint_involutive_lines(7, qu_max_coeff, seed);
      }
      Json rep = report_head("quartic", config);
      if (lines.size() != 7) throw symjet::Error("the quartic construction needs exactly 7 lines");

      symjet::HomPoly q = symjet::quartic_from_contact(lines);
      symjet::IntMatrix rm = symjet::restriction_matrix(lines, {}, 4);
      std::vector<Rational> coef = q.dense_coeffs();
      bool in_kernel = true;
      for (int r = 0; r < rm.rows() && in_kernel; ++r) {
        Rational dot(0);
        for (int c = 0; c < rm.cols(); ++c) dot += Rational(rm.at(r, c)) * coef[static_cast<std::size_t>(c)];
        in_kernel = dot == 0;
      }
      rep["lines"] = symjet::lines_json(lines);
      rep["quartic"] = symjet::hompoly_json(q);
      rep["in_restriction_kernel"] = in_kernel;
      return Outcome{in_kernel ? 0 : 4, std::move(rep)};
    };
  });

  // --- restrict -----------------------------------------------------------------
  auto* restrict_cmd = app.add_subcommand("restrict", "Rank of the degree-d restriction to r random disjoint involutive lines");
  int re_r = 6, re_d = 4, re_primes = 5;
  std::uint64_t re_seed = 0, re_max_coeff = 20;
  bool re_ephemeral = false;
  std::string re_emit;
  restrict_cmd->add_option("--r", re_r, "number of lines")->capture_default_str()->check(CLI::PositiveNumber);
  restrict_cmd->add_option("--d", re_d, "degree of forms")->capture_default_str()->check(CLI::PositiveNumber);
  restrict_cmd->add_option("--max-coeff", re_max_coeff, "generator entries drawn from [1, max-coeff]")->capture_default_str();
  restrict_cmd->add_option("--prime-count", re_primes, "modular certificates to attempt")->capture_default_str()->check(CLI::PositiveNumber);
  restrict_cmd->add_option("--emit-matrix", re_emit, "write the restriction matrix as a triplet dump");
  auto* re_seed_opt = restrict_cmd->add_option("--seed", re_seed, "RNG seed (required)");
  restrict_cmd->add_flag("--ephemeral", re_ephemeral, "allow a random seed");
  restrict_cmd->callback([&]() {
    runner = [&]() {
      std::uint64_t seed = resolve_seed(re_seed_opt, re_seed, re_ephemeral);
      Json config;
      config["r"] = re_r;
      config["d"] = re_d;
      config["max_coeff"] = re_max_coeff;
      config["prime_count"] = re_primes;
      config["seed"] = seed;
      Json rep = report_head("restrict", config);

      std::vector<symjet::ProjLine> lines =
          symjet::random_disjoint_involutive_lines(re_r, re_max_coeff, seed);
      symjet::RankReport rr = symjet::check_maximal_rank(lines, {}, re_d, re_primes);
      if (!re_emit.empty())
        symjet::write_text_file(re_emit, symjet::triplet_dump(symjet::restriction_matrix(lines, {}, re_d)));

      rep["report"] = rank_report_json(rr);
      // Seven disjoint involutive lines always lie on a quartic, so (7,4) can
      // never be maximal; observing it would expose a bug.
      const bool todd_pair = (re_r == 7 && re_d == 4);
      rep["expected_verdict"] = todd_pair ? "NOT_MAXIMAL" : "MAXIMAL";
      int code;
      if (rr.maximal)
        code = todd_pair ? 4 : 0;
      else
        code = todd_pair ? 0 : 2;
      return Outcome{code, std::move(rep)};
    };
  });

  // --- hdcheck ------------------------------------------------------------------
  auto* hd = app.add_subcommand("hdcheck", "Bijectivity of the square restriction system for degree d");
  int hd_d = 6, hd_primes = 5;
  std::uint64_t hd_seed = 0, hd_max_coeff = 20;
  bool hd_ephemeral = false;
  hd->add_option("--d", hd_d, "degree of forms")->capture_default_str()->check(CLI::PositiveNumber);
  hd->add_option("--max-coeff", hd_max_coeff, "generator entries drawn from [1, max-coeff]")->capture_default_str();
  hd->add_option("--prime-count", hd_primes, "modular certificates to attempt")->capture_default_str()->check(CLI::PositiveNumber);
  auto* hd_seed_opt = hd->add_option("--seed", hd_seed, "RNG seed (required)");
  hd->add_flag("--ephemeral", hd_ephemeral, "allow a random seed");
  hd->callback([&]() {
    runner = [&]() {
      std::uint64_t seed = resolve_seed(hd_seed_opt, hd_seed, hd_ephemeral);
      Json config;
      config["d"] = hd_d;
      config["max_coeff"] = hd_max_coeff;
      config["prime_count"] = hd_primes;
      config["seed"] = seed;
      Json rep = report_head("hdcheck", config);

      symjet::HdParameters hp = symjet::hd_parameters(hd_d);
      symjet::RankReport rr = symjet::hd_check(hd_d, hd_max_coeff, seed, hd_primes);
      rep["d"] = hd_d;
      rep["lines"] = hp.r;
      rep["extra_points"] = hp.q;
      rep["report"] = rank_report_json(rr);
      rep["verdict"] = rr.maximal ? "BIJECTIVE" : "SINGULAR";
      // d = 4 is the Todd case: the square system is provably singular there.
      const bool expect_singular = (hd_d == 4);
      rep["expected_verdict"] = expect_singular ? "SINGULAR" : "BIJECTIVE";
      int code;
      if (rr.maximal)
        code = expect_singular ? 4 : 0;
      else
        code = expect_singular ? 0 : 2;
      return Outcome{code, std::move(rep)};
    };
  });

  // Shared output options live per subcommand so --help stays local.
  std::string out_path;
  bool timings = false;
  for (CLI::App* sub : {nm, span, complete, todd, quartic, restrict_cmd, hd}) {
    sub->add_option("--out", out_path, "also write the report JSON to this file");
    sub->add_flag("--timings", timings, "embed wall-clock timings (breaks byte determinism)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    auto start = std::chrono::steady_clock::now();
    Outcome out = runner();
    if (timings) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      out.report["wall_ms"] = static_cast<long long>(ms);
    }
    std::string text = out.report.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) symjet::write_text_file(out_path, text);
    return out.code;
  } catch (const symjet::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const symjet::SolutionSpaceTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const symjet::FamilyNotSpanning& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const symjet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
