#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

std::vector<std::string> env_tokens() {
  std::vector<std::string> out;
  if (const char* caps = std::getenv("TAYLOR_EDGES_CAPS")) {
    std::istringstream in(caps);
    for (std::string t; in >> t;) out.push_back(t);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using taylor::cli::Format;
  taylor::cli::RunConfig config;

  CLI::App app{"Colored edges, absorption and CSP reductions for small finite algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string arities;
  std::string format = "text";
  auto last = CLI::MultiOptionPolicy::TakeLast;
  app.add_option("--arities", arities, "Cyclic arities for edge computation, e.g. 3,5")->multi_option_policy(last);
  app.add_option("--closure-cap", config.closure_cap, "Closure size cap")
      ->check(CLI::PositiveNumber)
      ->multi_option_policy(last);
  app.add_option("--subset-cap", config.subset_cap, "Largest algebra for subset-wide checks")
      ->check(CLI::PositiveNumber)
      ->multi_option_policy(last);
  app.add_option("--search-limit", config.search_limit, "Brute-force search space limit")
      ->check(CLI::PositiveNumber)
      ->multi_option_policy(last);
  app.add_option("--catalog-cap", config.catalog_cap, "Largest member of the HS-closed catalog")
      ->check(CLI::PositiveNumber)
      ->multi_option_policy(last);
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->multi_option_policy(last);
  app.add_option("--seed", config.seed, "Seed recorded in reports")->multi_option_policy(last);
  app.add_option("--out", config.out, "Write the report to this path")->multi_option_policy(last);

  auto* analyze = app.add_subcommand("analyze", "Validation, Taylor report, edges, components and absorption");
  analyze->add_option("algebra", config.inputs, "Algebra file")->required();
  auto* edges = app.add_subcommand("edges", "Edge digraphs");
  edges->add_option("algebra", config.inputs, "Algebra file")->required();
  bool dot = false;
  edges->add_flag("--dot", dot, "Emit DOT");
  auto* verify = app.add_subcommand("verify", "Edge Axioms and theorems over the HS-closed catalog of the inputs");
  verify->add_option("algebras", config.inputs, "Algebra files")->required();
  auto* csp = app.add_subcommand("csp", "Constraint satisfaction instances");
  csp->require_subcommand(1);
  auto* minimize = csp->add_subcommand("minimize", "(k,l)-minimization");
  minimize->add_option("instance", config.inputs, "Instance file")->required();
  minimize->add_option("-k", config.k, "Projection size")->check(CLI::PositiveNumber);
  minimize->add_option("-l", config.l, "Scope size")->check(CLI::PositiveNumber);
  auto* solve = csp->add_subcommand("solve", "Brute-force solving");
  solve->add_option("instance", config.inputs, "Instance file")->required();
  solve->add_flag("--all", config.all_solutions, "List every solution");
  app.add_subcommand("catalog", "Emit the built-in algebras");

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  const auto env = env_tokens();
  for (auto it = env.rbegin(); it != env.rend(); ++it) args.push_back(*it);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return taylor::cli::kUsage;
  }

  for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
  if (config.command == "csp") config.command = minimize->parsed() ? "csp-minimize" : "csp-solve";
  config.format = format == "json" ? Format::Json : format == "dot" ? Format::Dot : Format::Text;
  if (dot) config.format = Format::Dot;
  if (!arities.empty()) {
    std::istringstream in(arities);
    for (std::string item; std::getline(in, item, ',');) {
      try {
        const int a = std::stoi(item);
        if (a < 2) throw std::invalid_argument("");
        config.arities.push_back(static_cast<unsigned>(a));
      } catch (const std::exception&) {
        std::cerr << "usage error: --arities expects integers >= 2, got '" << item << "'\n";
        return taylor::cli::kUsage;
      }
    }
  }
  if (config.k > config.l) {
    std::cerr << "usage error: -k must not exceed -l\n";
    return taylor::cli::kUsage;
  }
  return taylor::cli::execute(config, std::cout, std::cerr);
}
