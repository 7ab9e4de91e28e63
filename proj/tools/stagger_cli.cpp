// Command-line front end for the periodic staggered-grid transforms.
//
//   stagger classify N
//   stagger to-edges --input F --axis A --n-edges N --strategy S [--pin-index I --pin-value V]
//                    [--tol T] --output G
//   stagger to-centers --input F --axis A --output G
//   stagger audit N_MIN N_MAX [--format text|structured]
//
// Exit codes: 0 success, 1 audit failure or I/O error, 2 usage, 3 parse,
// 4 parity/strategy mismatch, 5 inconsistent data.

#include <cstddef>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stagger/stagger.hpp"

namespace {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kUsage = 2,
  kParse = 3,
  kParity = 4,
  kInconsistent = 5,
};

struct ToEdgesArgs {
  std::string input;
  std::string output;
  std::size_t axis = 0;
  std::size_t n_edges = 0;
  std::string strategy;
  std::size_t pin_index = 0;
  double pin_value = 0.0;
  double tolerance = stagger::default_tolerance;
};

int run_to_edges(const ToEdgesArgs& args, bool has_pin_index, bool has_pin_value) {
  stagger::Strategy strategy;
  if (args.strategy == "unique") {
    strategy = stagger::Strategy::unique();
  } else if (args.strategy == "min-norm") {
    strategy = stagger::Strategy::min_norm();
  } else {
    if (!has_pin_index || !has_pin_value) {
      std::cerr << "error: strategy 'pin' needs --pin-index and --pin-value\n";
      return kUsage;
    }
    strategy = stagger::Strategy::pinned(args.pin_index, args.pin_value);
  }
  // The parity gate runs before the input is touched.
  const stagger::PeriodicStagger1D grid(args.n_edges);
  if (strategy.kind == stagger::Completion::unique && !grid.is_odd()) {
    throw stagger::parity_error("strategy 'unique' needs an odd number of edge points, got N = " +
                                std::to_string(args.n_edges));
  }
  if (strategy.kind == stagger::Completion::pinned && grid.is_odd()) {
    throw stagger::parity_error("strategy 'pin' needs an even number of edge points, got N = " +
                                std::to_string(args.n_edges));
  }

  const auto field = stagger::read_field_file(args.input);
  const auto result = stagger::to_edges_along(field, args.axis, args.n_edges, strategy, args.tolerance);
  stagger::write_field_file(args.output, result.field);
  const auto& s = result.summary;
  std::cout << "lines=" << s.lines << " unique=" << s.unique << " family=" << s.family
            << " inconsistent=" << s.inconsistent
            << " max_residual=" << stagger::format_number(s.max_residual) << '\n';
  return kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Center/edge transforms on periodic staggered grids"};
  app.require_subcommand(1);

  std::size_t classify_n = 0;
  auto* classify = app.add_subcommand("classify", "Solvability of the center-to-edge system for N edge points");
  classify->add_option("N", classify_n, "number of edge points including periodic images")->required();

  ToEdgesArgs edges;
  auto* to_edges = app.add_subcommand("to-edges", "Recover edge values from center values along one axis");
  to_edges->add_option("--input", edges.input, "input field file")->required();
  to_edges->add_option("--axis", edges.axis, "periodic axis")->required();
  to_edges->add_option("--n-edges", edges.n_edges, "edge points along the axis, including periodic images")->required();
  to_edges->add_option("--strategy", edges.strategy, "completion for even grids")
      ->required()
      ->check(CLI::IsMember({"unique", "min-norm", "pin"}));
  auto* pin_index = to_edges->add_option("--pin-index", edges.pin_index, "1-based edge to pin");
  auto* pin_value = to_edges->add_option("--pin-value", edges.pin_value, "value of the pinned edge");
  to_edges->add_option("--tol", edges.tolerance, "relative consistency tolerance")->capture_default_str();
  to_edges->add_option("--output", edges.output, "output field file")->required();

  std::string centers_in, centers_out;
  std::size_t centers_axis = 0;
  auto* to_centers = app.add_subcommand("to-centers", "Average edge values to centers along one axis");
  to_centers->add_option("--input", centers_in, "input field file")->required();
  to_centers->add_option("--axis", centers_axis, "staggered axis")->required();
  to_centers->add_option("--output", centers_out, "output field file")->required();

  std::size_t audit_min = 0, audit_max = 0;
  std::string audit_format = "text";
  auto* audit = app.add_subcommand("audit", "Cross-check the recurrence solver against the exact dense oracle");
  audit->add_option("N_MIN", audit_min)->required();
  audit->add_option("N_MAX", audit_max)->required();
  audit->add_option("--format", audit_format)->check(CLI::IsMember({"text", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) {
      std::cout << stagger::render_classify(stagger::classify(stagger::PeriodicStagger1D(classify_n)));
      return kSuccess;
    }
    if (*to_edges) return run_to_edges(edges, pin_index->count() > 0, pin_value->count() > 0);
    if (*to_centers) {
      const auto field = stagger::read_field_file(centers_in);
      stagger::write_field_file(centers_out, stagger::to_centers_along(field, centers_axis));
      return kSuccess;
    }
    if (*audit) {
      const auto report = stagger::run_audit(audit_min, audit_max);
      std::cout << (audit_format == "structured" ? stagger::render_structured(report)
                                                 : stagger::render_text(report));
      return report.pass() ? kSuccess : kFailure;
    }
  } catch (const stagger::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const stagger::parity_error& e) {
    std::cerr << "parity error: " << e.what() << '\n';
    return kParity;
  } catch (const stagger::inconsistent_error& e) {
    std::cerr << "inconsistent: " << e.what() << '\n';
    return kInconsistent;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
