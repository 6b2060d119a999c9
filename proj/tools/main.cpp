// sigma16: batch verification runs over the spinor tenfold computations.
// Every subcommand executes a fixed list of claims, prints a one-line verdict
// per claim, and can emit the full JSON report. Exit status: 0 all claims
// pass, 1 at least one refuted, 2 pass/inconclusive mix, 64 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinten/claims.hpp"
#include "spinten/serialize.hpp"

namespace {

std::vector<mpz_class> parse_prime_list(const std::string& text) {
  std::vector<mpz_class> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    if (item.empty()) throw CLI::ValidationError("--primes", "empty entry in prime list");
    mpz_class p;
    if (p.set_str(item, 10) != 0)
      throw CLI::ValidationError("--primes", "not a decimal integer: " + item);
    out.push_back(p);
    pos = comma + 1;
  }
  return out;
}

void print_summary(const spinten::RunReport& report) {
  for (const auto& c : report.claims)
    std::printf("%-24s %-13s %s (%s ms)\n", c.id.c_str(), c.status.c_str(), c.detail.c_str(),
                c.wall_clock_ms.c_str());
  std::printf("overall: %s (%s ms)\n", report.status.c_str(), report.wall_clock_ms.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigma16: exact verification runs for the spinor tenfold, its Z-models, "
               "and the attached quadratic-form classifications"};
  app.require_subcommand(1);

  std::string field_text, primes_text, out_path, plane_path;
  spinten::RunConfig cfg;
  bool json_stdout = false;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", field_text,
                    "coefficient field: Q, a prime p, or p:2 for F_{p^2}");
    sub->add_option("--seed", cfg.seed, "random seed (reports are deterministic in it)")
        ->capture_default_str();
    sub->add_option("--trials", cfg.trials, "override per-claim trial counts");
    sub->add_option("--primes", primes_text, "comma-separated primes (audit grid, duality)");
    sub->add_option("--out", out_path, "write the JSON report to this file");
    sub->add_option("--jobs", cfg.jobs, "parallelism bound (execution is sequential)")
        ->capture_default_str();
    sub->add_flag("--json", json_stdout, "print the JSON report on stdout instead of a summary");
  };

  for (const auto& name : spinten::known_subcommands()) {
    CLI::App* sub = app.add_subcommand(name, "");
    add_common(sub);
    if (name == "verify-plane")
      sub->add_option("candidate", plane_path, "JSON file with 6 x 16 rational entries")
          ->required();
  }
  app.get_subcommand("derive")->description("derive the quadric system and its quartic relation");
  app.get_subcommand("count")->description("exhaustive point counts and slice degrees");
  app.get_subcommand("audit-z-models")->description("Z-model emptiness, dual sections, dimensions");
  app.get_subcommand("forms")->description("Hilbert symbols, reciprocity, form classifications");
  app.get_subcommand("f2-lemma")->description("F_2 four-independence maximum and secant bound");
  app.get_subcommand("verify-plane")->description("verify a candidate 12-rational-point plane");
  app.get_subcommand("duality-test")->description("tangent hyperplane transport onto the dual");
  app.get_subcommand("all")->description("every acceptance claim in a single report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (!field_text.empty()) {
      cfg.field = spinten::FieldSpec::parse(field_text);
      cfg.field_given = true;
    }
    if (!primes_text.empty()) cfg.primes = parse_prime_list(primes_text);
    cfg.plane_file = plane_path;

    const auto report = spinten::run(cfg);
    const auto text = spinten::report_to_json(report);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "sigma16: cannot write " << out_path << "\n";
        return 64;
      }
      out << text;
    }
    if (json_stdout)
      std::cout << text;
    else
      print_summary(report);
    return spinten::exit_code(report);
  } catch (const std::invalid_argument& e) {
    std::cerr << "sigma16: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "sigma16: internal error: " << e.what() << "\n";
    return 70;
  }
}
