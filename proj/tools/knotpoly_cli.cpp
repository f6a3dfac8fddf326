#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "knotpoly/burau.hpp"
#include "knotpoly/harness.hpp"
#include "knotpoly/homfly.hpp"
#include "knotpoly/io.hpp"
#include "knotpoly/kauffman.hpp"
#include "knotpoly/satellite.hpp"

using namespace knotpoly;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Pattern read_pattern(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return pattern_from_json(arg);
  if (arg.size() > 5 && arg.ends_with(".json")) return pattern_from_json(read_file(arg));
  return Pattern(BraidWord::parse(arg));
}

ReportFormat parse_format(const std::string& f) {
  if (f == "json") return ReportFormat::kJson;
  if (f == "md" || f == "markdown") return ReportFormat::kMarkdown;
  throw ParseError("unknown format '" + f + "' (use json or md)");
}

int finish(const ExperimentReport& r, const std::string& format, bool timing) {
  std::cout << render_report(r, parse_format(format), timing);
  return r.verdict() == Verdict::kPass ? kExitPass : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact HOMFLY, Dubrovnik and Alexander polynomials of closed braids and their cables"};
  app.require_subcommand(1);

  std::string braid;
  std::string other;
  bool json = false;

  auto* homfly_cmd = app.add_subcommand("homfly", "HOMFLY polynomial of a closed braid");
  bool oracle = false;
  std::size_t oracle_budget = 14;
  homfly_cmd->add_option("--braid", braid, "braid word \"m: g1 g2 ...\"")->required();
  homfly_cmd->add_flag("--oracle", oracle, "use the skein-tree oracle instead of the Hecke engine");
  homfly_cmd->add_option("--max-crossings", oracle_budget, "oracle crossing budget");
  homfly_cmd->add_flag("--json", json, "print {v, z, c} terms");

  auto* dub_cmd = app.add_subcommand("dubrovnik", "Dubrovnik polynomial of a closed braid");
  std::size_t max_crossings = kDefaultDubrovnikBudget;
  bool to_f = false;
  dub_cmd->add_option("--braid", braid, "braid word")->required();
  dub_cmd->add_option("--max-crossings", max_crossings, "crossing budget");
  dub_cmd->add_flag("--to-kauffman-f", to_f, "print the Kauffman polynomial F instead");
  dub_cmd->add_flag("--json", json, "print {v, z, c} terms");

  auto* cable_cmd = app.add_subcommand("cable", "0-framed satellite of a closed braid");
  std::string pattern;
  bool emit_braid = false;
  int max_z = -1;
  cable_cmd->add_option("--braid", braid, "companion braid word")->required();
  cable_cmd->add_option("--pattern", pattern, "pattern braid word, JSON object or .json file")->required();
  cable_cmd->add_flag("--emit-braid", emit_braid, "print the satellite braid word instead of its HOMFLY");
  cable_cmd->add_option("--max-z", max_z, "keep z-degrees up to this value only");
  cable_cmd->add_flag("--json", json, "JSON output");

  auto* alex_cmd = app.add_subcommand("alexander", "Alexander polynomial via the reduced Burau representation");
  alex_cmd->add_option("--braid", braid, "braid word")->required();
  alex_cmd->add_flag("--json", json, "print {t, c} terms");

  auto* exp_cmd = app.add_subcommand("experiment", "cable coefficient-polynomial run from a JSON config");
  std::string config_path;
  std::string format = "json";
  int jobs = 0;
  bool no_timing = false;
  exp_cmd->add_option("--config", config_path, "config file")->required();
  exp_cmd->add_option("--format", format, "json or md");
  exp_cmd->add_option("--jobs", jobs, "worker threads (overrides the config)");
  exp_cmd->add_flag("--no-timing", no_timing, "omit wall-clock fields");

  auto* cor_cmd = app.add_subcommand("verify-corollary", "(q,1)-cables of an unknot family have trivial coefficients");
  int p_max = 1;
  int n_coeff = 0;
  int family = 1;
  cor_cmd->add_option("--p-max", p_max, "largest cable index q")->required();
  cor_cmd->add_option("--N", n_coeff, "largest coefficient index j");
  cor_cmd->add_option("--family", family, "family size");
  cor_cmd->add_option("--format", format, "json or md");
  cor_cmd->add_option("--jobs", jobs, "worker threads");
  cor_cmd->add_flag("--no-timing", no_timing, "omit wall-clock fields");

  auto* mom_cmd = app.add_subcommand("verify-moments", "check that equal moments force equal coefficient polynomials");
  mom_cmd->add_option("--braid", braid, "first knot")->required();
  mom_cmd->add_option("--other", other, "second knot")->required();
  mom_cmd->add_option("--format", format, "json or md");
  mom_cmd->add_flag("--no-timing", no_timing, "omit wall-clock fields");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*homfly_cmd) {
      const BraidWord b = BraidWord::parse(braid);
      const TwoVarPoly p = oracle ? homfly_oracle(b, oracle_budget) : homfly(b);
      std::cout << (json ? poly_to_json(p) : p.to_string()) << "\n";
    } else if (*dub_cmd) {
      const BraidWord b = BraidWord::parse(braid);
      TwoVarPoly d = dubrovnik(b, max_crossings);
      if (to_f) d = kauffman_F_from_D(d);
      std::cout << (json ? poly_to_json(d) : d.to_string()) << "\n";
    } else if (*cable_cmd) {
      const BraidWord word = cable(BraidWord::parse(braid), read_pattern(pattern));
      if (emit_braid) {
        std::cout << (json ? braid_to_json(word) : word.to_string()) << "\n";
      } else {
        const TwoVarPoly p = max_z >= 0 ? homfly_truncated(word, max_z) : homfly(word);
        std::cout << (json ? poly_to_json(p) : p.to_string()) << "\n";
      }
    } else if (*alex_cmd) {
      const LaurentPoly a = alexander(BraidWord::parse(braid));
      std::cout << (json ? poly_to_json(a, 't') : a.to_string('t')) << "\n";
    } else if (*exp_cmd) {
      ExperimentConfig cfg = config_from_json(read_file(config_path));
      if (jobs > 0) cfg.jobs = jobs;
      if (cfg.strands() < 3)
        std::cerr << "warning: base braid has " << cfg.strands()
                  << " strands; commutators of pure braids are trivial below 3\n";
      return finish(verify_cable_coefficients(cfg), format, !no_timing);
    } else if (*cor_cmd) {
      return finish(verify_trivial_cables(p_max, n_coeff, family, std::max(jobs, 1)), format, !no_timing);
    } else if (*mom_cmd) {
      return finish(verify_moment_determination(BraidWord::parse(braid), BraidWord::parse(other)), format, !no_timing);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitPass;
}
