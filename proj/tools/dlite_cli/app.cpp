#include "dlite_cli/app.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <optional>

#include "dlite/distribution.hpp"
#include "dlite_cli/compare.hpp"
#include "dlite_cli/figures.hpp"
#include "dlite_cli/verify.hpp"

namespace dlite::cli {
namespace {

oracle::DimRange parse_dims(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) throw UsageError("--dims expects LO..HI, got '" + text + "'");
  auto parse = [&text](std::string_view part) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      throw UsageError("--dims expects LO..HI, got '" + text + "'");
    }
    return value;
  };
  const std::string_view view(text);
  return {parse(view.substr(0, sep)), parse(view.substr(sep + 2))};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"DLITE information measure: figure data, pairwise comparison and property verification", "dlite"};
  app.require_subcommand(1);

  std::string figure;
  std::optional<std::int64_t> steps;
  std::string out_path;
  auto* figure_cmd = app.add_subcommand("figure", "Emit CSV data for one of the reference figures");
  figure_cmd->add_option("name", figure, "Figure name")->required()->check(CLI::IsMember(figure_names()));
  figure_cmd->add_option("--steps", steps, "Grid points per axis (>= 2)");
  figure_cmd->add_option("--out", out_path, "Output CSV path (default: standard output)");

  std::string input_path;
  std::string measure_list = "dl,dlite-distance,lit,delta-h,entropy-delta,kl,js";
  auto* compare_cmd = app.add_subcommand("compare", "Evaluate measures on distribution pairs read from a file");
  compare_cmd->add_option("--input", input_path, "Pairs file")->required();
  compare_cmd->add_option("--measures", measure_list, "Comma-separated measures")->capture_default_str();

  VerifyConfig verify_cfg;
  std::string dims = "2..10";
  std::string fault;
  auto* verify_cmd = app.add_subcommand("verify", "Run the randomized property suite");
  verify_cmd->add_option("--trials", verify_cfg.trials, "Cases per property")->capture_default_str();
  verify_cmd->add_option("--seed", verify_cfg.seed, "Base seed")->capture_default_str();
  verify_cmd->add_option("--dims", dims, "Dimension range LO..HI")->capture_default_str();
  verify_cmd->add_option("--inject-fault", fault, "Negative control")->group("")->check(CLI::IsMember({"raw-dl"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*figure_cmd) {
      auto grid = default_grid(*parse_figure(figure), steps);
      grid.output_path = out_path;
      emit_figure(*parse_figure(figure), grid, out);
      return kExitSuccess;
    }

    if (*compare_cmd) {
      const auto measures = parse_measure_list(measure_list);
      std::ifstream in(input_path);
      if (!in) throw UsageError("cannot open " + input_path);
      write_comparison(parse_pairs(in), measures, out);
      return kExitSuccess;
    }

    verify_cfg.dims = parse_dims(dims);
    if (fault == "raw-dl") verify_cfg.fault = Fault::kRawDlDistance;
    const auto report = run_verify(verify_cfg);
    print_report(report, out);
    return report.passed() ? kExitSuccess : kExitPropertyFailure;
  } catch (const ParseError& e) {
    err << "error: " << input_path << ": " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace dlite::cli
