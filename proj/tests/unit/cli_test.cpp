#include <gtest/gtest.h>

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "dlite/baselines.hpp"
#include "dlite/measures.hpp"
#include "dlite_cli/app.hpp"
#include "dlite_cli/compare.hpp"
#include "dlite_cli/figures.hpp"
#include "dlite_cli/format.hpp"
#include "dlite_cli/verify.hpp"

namespace dlite::cli {
namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string figure_csv(Figure f, std::optional<std::int64_t> steps = std::nullopt) {
  std::ostringstream out;
  write_figure(f, default_grid(f, steps), out);
  return out.str();
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    path_ = std::filesystem::temp_directory_path() /
            ("dlite_cli_test_" + std::to_string(counter_++) + "_" + std::to_string(::getpid()) + ".txt");
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

TEST(FormatNumber, ShortestUpToTwelveDigits) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(std::log(2.0)), "0.69314718056");
  EXPECT_EQ(format_number(0.26895093981335156), "0.268950939813");
  EXPECT_EQ(format_number(1e-20), "1e-20");
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
}

TEST(Figures, NamesRoundTrip) {
  for (auto name : figure_names()) {
    const auto f = parse_figure(name);
    ASSERT_TRUE(f.has_value()) << name;
    EXPECT_EQ(figure_name(*f), name);
  }
  EXPECT_FALSE(parse_figure("pie-chart").has_value());
}

TEST(Figures, PqSurfaceDiagonalZeroAndSymmetric) {
  const auto rows = parse_csv(figure_csv(Figure::kPqSurface));
  ASSERT_EQ(rows.front(), (std::vector<std::string>{"p", "q", "dl"}));
  ASSERT_EQ(rows.size(), 1u + 101u * 101u);
  std::map<std::pair<std::string, std::string>, std::string> cell;
  for (std::size_t i = 1; i < rows.size(); ++i) cell[{rows[i][0], rows[i][1]}] = rows[i][2];
  for (const auto& [key, value] : cell) {
    if (key.first == key.second) EXPECT_EQ(value, "0") << key.first;
    EXPECT_EQ(value, cell.at({key.second, key.first}));
  }
}

TEST(Figures, ValuesMatchLibraryCalls) {
  const auto rows = parse_csv(figure_csv(Figure::kCertaintyBinary, 11));
  ASSERT_EQ(rows.front(), (std::vector<std::string>{"p1", "dl", "entropy_delta", "kl_q_p", "js"}));
  ASSERT_EQ(rows.size(), 12u);
  const DiscreteDistribution certain{1.0, 0.0};
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double p1 = (i - 1) / 10.0;
    const DiscreteDistribution p{p1, 1.0 - p1};
    EXPECT_EQ(rows[i][1], format_number(dl_sum(p, certain)));
    EXPECT_EQ(rows[i][2], format_number(entropy_delta(p, certain)));
    EXPECT_EQ(rows[i][3], format_number(kl_divergence(certain, p)));
    EXPECT_EQ(rows[i][4], format_number(js_divergence(p, certain)));
  }
  EXPECT_EQ(rows[1][3], "inf");
}

TEST(Figures, EquiprobableDlIncreasingBelowOne) {
  const auto rows = parse_csv(figure_csv(Figure::kCertaintyEquiprobable));
  ASSERT_EQ(rows.front()[0], "m");
  ASSERT_EQ(rows.front()[2], "dl");
  EXPECT_EQ(rows[1][0], "2");
  EXPECT_EQ(rows.back()[0], "10000");
  double previous = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double dl = std::stod(rows[i][2]);
    EXPECT_GT(dl, previous) << rows[i][0];
    EXPECT_LT(dl, 1.0);
    previous = dl;
  }
}

TEST(Figures, SwapBinaryEndpointHitsBounds) {
  const auto rows = parse_csv(figure_csv(Figure::kSwapBinary));
  ASSERT_EQ(rows[1][0], "0");
  EXPECT_EQ(rows[1][1], "1");
  EXPECT_EQ(rows[1][2], "0");
  EXPECT_EQ(rows[1][4], format_number(std::log(2.0)));
}

TEST(Figures, SwapTernaryAndSurfacesStayInUnitInterval) {
  for (Figure f : {Figure::kSwapTernary, Figure::kSurface3dCertainty, Figure::kSurface3dSwap}) {
    const auto rows = parse_csv(figure_csv(f));
    const auto& header = rows.front();
    const auto dl_col = static_cast<std::size_t>(std::find(header.begin(), header.end(), "dl") - header.begin());
    ASSERT_LT(dl_col, header.size());
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double dl = std::stod(rows[i][dl_col]);
      ASSERT_GE(dl, 0.0);
      ASSERT_LE(dl, 1.0);
    }
  }
  const auto surface = parse_csv(figure_csv(Figure::kSurface3dSwap, 11));
  EXPECT_EQ(surface.size(), 1u + 66u);  // lattice points with p1 + p2 <= 1
}

TEST(Figures, GridValidation) {
  auto grid = default_grid(Figure::kPqSurface, 1);
  std::ostringstream sink;
  EXPECT_THROW(write_figure(Figure::kPqSurface, grid, sink), UsageError);
  grid = default_grid(Figure::kPqSurface);
  grid.ranges[0].stop = 1.5;
  EXPECT_THROW(write_figure(Figure::kPqSurface, grid, sink), UsageError);
  grid = default_grid(Figure::kPqSurface);
  grid.ranges[1].start = grid.ranges[1].stop;
  EXPECT_THROW(write_figure(Figure::kPqSurface, grid, sink), UsageError);
  EXPECT_THROW(write_figure(Figure::kSwapBinary, default_grid(Figure::kPqSurface), sink), UsageError);
}

TEST(Figures, ByteStableAcrossRuns) {
  for (auto name : figure_names()) {
    const auto f = *parse_figure(name);
    EXPECT_EQ(figure_csv(f, 21), figure_csv(f, 21)) << name;
  }
}

TEST(Compare, ParsesRecordsAndComments) {
  std::istringstream in("# header comment\n0 1\n1 0\n\n\n0.5 0.5\n  1   0  \n");
  const auto pairs = parse_pairs(in);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].p, DiscreteDistribution({0.0, 1.0}));
  EXPECT_EQ(pairs[1].q, DiscreteDistribution({1.0, 0.0}));
  EXPECT_EQ(pairs[1].line, 6u);
}

TEST(Compare, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_pairs(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("0.5 0.5\n1 zero\n"), 2u);
  EXPECT_EQ(line_of("0.5 0.5\n1 0\n\n0.2 0.8\n"), 4u);           // incomplete record
  EXPECT_EQ(line_of("0.5 0.5\n1 0\n0.5 0.5\n"), 3u);             // three lines, no separator
  EXPECT_EQ(line_of("0.5 0.5\n1 0 0\n"), 2u);                    // dimension mismatch
  EXPECT_EQ(line_of("\n\n0.5 0.4\n1 0\n"), 3u);                  // does not sum to 1
  EXPECT_EQ(line_of("# nothing\n"), 1u);
}

TEST(Compare, ReportRows) {
  std::istringstream in("0 1\n1 0\n\n0.5 0.5\n1 0\n\n0.3 0.7\n0.3 0.7\n");
  std::ostringstream out;
  write_comparison(parse_pairs(in), parse_measure_list("dl,js,kl"), out);
  const auto rows = parse_csv(out.str());
  ASSERT_EQ(rows.front(), (std::vector<std::string>{"pair", "measure", "value"}));
  ASSERT_EQ(rows.size(), 1u + 9u);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"1", "dl", "1"}));
  EXPECT_EQ(rows[4], (std::vector<std::string>{"2", "dl", "0.268950939813"}));
  EXPECT_EQ(rows[6], (std::vector<std::string>{"2", "kl", "inf"}));
  for (std::size_t i = 7; i <= 9; ++i) EXPECT_EQ(rows[i][2], "0");
}

TEST(Compare, MeasureList) {
  EXPECT_EQ(parse_measure_list("dl").size(), 1u);
  EXPECT_EQ(parse_measure_list("dl,dlite-distance,lit,delta-h,entropy-delta,kl,js"), all_measures());
  EXPECT_THROW(parse_measure_list("dl,,js"), UsageError);
  EXPECT_THROW(parse_measure_list("hellinger"), UsageError);
}

TEST(Verify, PassesOnCleanLibrary) {
  VerifyConfig cfg;
  cfg.trials = 1000;
  const auto report = run_verify(cfg);
  EXPECT_TRUE(report.passed());
  for (const auto& p : report.properties) EXPECT_GT(p.checked, 0) << p.name;
}

TEST(Verify, InjectedFaultFailsTriangleProperty) {
  VerifyConfig cfg;
  cfg.trials = 1000;
  cfg.fault = Fault::kRawDlDistance;
  const auto report = run_verify(cfg);
  EXPECT_FALSE(report.passed());
  for (const auto& p : report.properties) {
    if (p.name == "cube-root-triangle-inequality") {
      EXPECT_GT(p.failures, 0);
    } else {
      EXPECT_EQ(p.failures, 0) << p.name;
    }
  }
}

TEST(Verify, RejectsBadConfiguration) {
  VerifyConfig cfg;
  cfg.trials = 0;
  EXPECT_THROW(run_verify(cfg), UsageError);
  cfg.trials = 10;
  cfg.dims = {1, 4};
  EXPECT_THROW(run_verify(cfg), UsageError);
}

TEST(App, ExitCodes) {
  EXPECT_EQ(run_cli({"verify", "--trials", "200", "--seed", "42"}).code, kExitSuccess);
  EXPECT_EQ(run_cli({"verify", "--trials", "200", "--inject-fault", "raw-dl"}).code, kExitPropertyFailure);
  EXPECT_EQ(run_cli({"verify", "--trials", "0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--dims", "3-4"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"figure", "nope"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"figure", "pq-surface", "--steps", "1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"compare", "--input", "/nonexistent/pairs.txt"}).code, kExitUsage);
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kExitSuccess);
}

TEST(App, FigureToStdoutAndFile) {
  const auto res = run_cli({"figure", "swap-binary", "--steps", "3"});
  ASSERT_EQ(res.code, kExitSuccess);
  EXPECT_EQ(res.out, "p1,dl,entropy_delta,kl_p_q,js\n0,1,0,inf,0.69314718056\n0.5,0,0,0,0\n1,1,0,inf,0.69314718056\n");

  const auto path = (std::filesystem::temp_directory_path() / "dlite_cli_test_fig.csv").string();
  ASSERT_EQ(run_cli({"figure", "swap-binary", "--steps", "3", "--out", path}).code, kExitSuccess);
  std::ifstream in(path, std::ios::binary);
  std::stringstream file;
  file << in.rdbuf();
  EXPECT_EQ(file.str(), res.out);
  std::filesystem::remove(path);

  EXPECT_EQ(run_cli({"figure", "swap-binary", "--out", "/nonexistent-dir/x.csv"}).code, kExitUsage);
}

TEST(App, CompareFromFile) {
  const TempFile input("0 1\n1 0\n\n0.5 0.5\n1 0\n");
  const auto res = run_cli({"compare", "--input", input.path(), "--measures", "dl,dlite-distance"});
  ASSERT_EQ(res.code, kExitSuccess) << res.err;
  EXPECT_EQ(res.out, "pair,measure,value\n1,dl,1\n1,dlite-distance,1\n2,dl,0.268950939813\n2,dlite-distance,0.645492234724\n");

  const TempFile bad("0.5 0.5\n1 0 0\n");
  const auto err = run_cli({"compare", "--input", bad.path()});
  EXPECT_EQ(err.code, kExitUsage);
  EXPECT_NE(err.err.find("line 2"), std::string::npos) << err.err;
}

}  // namespace
}  // namespace dlite::cli
