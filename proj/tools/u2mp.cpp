// u2mp: momentum polytopes of multiplicity free U(2)-manifolds.
//
//   u2mp classify polytope.json
//   u2mp enumerate --max-coord 4 --shape triangles --threads 8
//   u2mp plot polytope.json --overlay reflection,xray,fixpoints
//   u2mp selftest
//
// Exit status: 0 completed, 1 internal invariant violation, 2 input error.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "u2mp/census.hpp"
#include "u2mp/error.hpp"
#include "u2mp/io.hpp"
#include "u2mp/plot.hpp"
#include "u2mp/selftest.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kInput = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw u2mp::InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw u2mp::InputError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Momentum polytopes of multiplicity free U(2)-manifolds"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string output;

  auto* classify = app.add_subcommand("classify", "Analyze one polytope and print a JSON report");
  classify->add_option("input", input, "Polytope document, - for stdin")->capture_default_str();
  classify->add_option("-o,--output", output, "Write the report here instead of stdout");

  u2mp::CensusOptions copt;
  std::string shape = "triangles";
  int threads = 0;
  bool serial = false;
  std::string stream_path;
  auto* enumerate = app.add_subcommand("enumerate", "Census of polytopes on a grid in the chamber");
  enumerate->add_option("--max-coord", copt.max_coord, "Grid half-width")->required()->check(CLI::Range(1, 1000));
  enumerate->add_option("--denominator", copt.denominator, "Grid spacing 1/d")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000));
  enumerate->add_option("--shape", shape, "triangles or all")
      ->capture_default_str()
      ->check(CLI::IsMember({"triangles", "all"}));
  enumerate->add_option("--threads", threads, "Worker threads, 0 for the runtime default")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--serial", serial, "Use the single-threaded reference enumeration");
  enumerate->add_option("--stream", stream_path, "Write one JSON line per polygon here");
  enumerate->add_option("-o,--output", output, "Write the summary here instead of stdout");

  std::vector<std::string> overlays;
  auto* plot = app.add_subcommand("plot", "Draw a polytope as SVG");
  plot->add_option("input", input, "Polytope document, - for stdin")->capture_default_str();
  plot->add_option("--overlay", overlays, "reflection, xray, fixpoints")
      ->delimiter(',')
      ->check(CLI::IsMember({"reflection", "xray", "fixpoints"}));
  plot->add_option("-o,--output", output, "Write the SVG here instead of stdout");

  u2mp::SelftestOptions sopt;
  auto* selftest = app.add_subcommand("selftest", "Run the built-in invariant suites");
  selftest->add_option("--threads", sopt.threads, "Worker threads for the census checks")->check(CLI::NonNegativeNumber);
  selftest->add_option("--samples", sopt.samples, "Random samples per property")->capture_default_str();
  selftest->add_option("--seed", sopt.seed, "Generator seed")->capture_default_str();
  selftest->add_flag("--inject-fault", sopt.inject_fault, "Break one fixture on purpose");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*classify) {
      const auto doc = u2mp::parse_polytope_document(read_input(input));
      write_output(output, u2mp::print_report(u2mp::build_report(doc)));
    } else if (*enumerate) {
      copt.shape = shape == "all" ? u2mp::CensusShape::All : u2mp::CensusShape::Triangles;
      const auto res = serial ? u2mp::census_serial(copt) : u2mp::census_parallel(copt, threads);
      if (!stream_path.empty()) {
        std::string lines;
        for (const auto& it : res.items) lines += u2mp::census_item_json(it) + "\n";
        write_output(stream_path, lines);
      }
      write_output(output, u2mp::census_summary_json(res.summary));
    } else if (*plot) {
      const auto doc = u2mp::parse_polytope_document(read_input(input));
      const auto p = u2mp::convex_hull(doc.vertices);
      u2mp::PlotOverlays ov;
      for (const auto& o : overlays) {
        ov.reflection |= o == "reflection";
        ov.xray |= o == "xray";
        ov.fixpoints |= o == "fixpoints";
      }
      std::string svg;
      try {
        svg = u2mp::plot_svg(p, ov);
      } catch (const std::invalid_argument& e) {
        throw u2mp::InputError(std::string("overlay not available: ") + e.what());
      }
      write_output(output, svg);
    } else if (*selftest) {
      const auto r = u2mp::run_selftest(sopt);
      for (const auto& s : r.suites) {
        std::cout << fmt::format("[{}] {} ({} checks)\n", s.passed() ? "PASS" : "FAIL", s.name, s.checks);
        for (const auto& f : s.failures) std::cout << "    " << f << "\n";
      }
      std::cout << (r.passed() ? "selftest passed\n" : "selftest FAILED\n");
      return r.passed() ? kOk : kInternal;
    }
  } catch (const u2mp::InputError& e) {
    std::cerr << "u2mp: input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::overflow_error& e) {
    std::cerr << "u2mp: input error: coordinates too large: " << e.what() << "\n";
    return kInput;
  } catch (const u2mp::InvariantViolation& e) {
    std::cerr << "u2mp: internal invariant violated: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "u2mp: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
