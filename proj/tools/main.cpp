#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "normalcone/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Normal-cone perturbation toolkit"};
  app.set_version_flag("--version", std::string(normalcone::version()));
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Execute a session script and print its report");
  std::string path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<int> trunc;
  std::string format = "json";
  bool fail_fast = false;
  run->add_option("script", path, "Script file, or - for stdin")->required();
  run->add_option("--seed", seed, "Seed for every randomized command");
  run->add_option("--trials", trials, "Trial count for every randomized command")->check(CLI::Range(1, 100000));
  run->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  run->add_option("--trunc-override", trunc, "Replace the ring's trunc cap")->check(CLI::Range(2, 1000));
  run->add_flag("--fail-fast", fail_fast, "Stop after the first failing command");

  CLI11_PARSE(app, argc, argv);

  std::stringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "normalcone: cannot read " << path << "\n";
      return static_cast<int>(normalcone::ExitCode::ScriptError);
    }
    text << in.rdbuf();
  }

  normalcone::RunOptions opt;
  opt.seed = seed;
  opt.trials = trials;
  opt.trunc_override = trunc;
  opt.format = format == "text" ? normalcone::ReportFormat::Text : normalcone::ReportFormat::Json;
  opt.fail_fast = fail_fast;
  const auto result = normalcone::run_script(text.str(), opt);
  std::cout << result.report;
  return static_cast<int>(result.exit_code);
}
