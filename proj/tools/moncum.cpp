#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moncum/cli.hpp"
#include "moncum/selftest.hpp"

namespace {

using moncum::Error;
using moncum::ErrorCode;
using moncum::cli::Json;

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

template <typename T, typename Parser>
T parse_flag(const std::string& text, Parser parser, const std::string& flag) {
  const auto value = parser(text);
  if (!value) throw Error(ErrorCode::MalformedInput, "bad value for " + flag + ": " + text);
  return *value;
}

int fail(std::string_view code, std::string_view message, int status) {
  std::cerr << moncum::cli::error_json(code, message).dump() << '\n';
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact moment/cumulant transforms and convolutions for commutative, free, "
               "Boolean and monotone independence"};
  app.require_subcommand(1);

  std::string kind_text;
  std::string direction_text = "moments-to-cumulants";
  std::string output_text;
  std::size_t order = 0;
  int decimals = -1;

  // transform
  std::string transform_input;
  auto* transform = app.add_subcommand("transform", "Moments <-> cumulants");
  transform->add_option("input", transform_input, "JSON document ('-' for stdin)")->required();
  transform->add_option("--direction", direction_text,
                        "moments-to-cumulants | cumulants-to-moments");
  transform->add_option("--kind", kind_text, "commutative | free | boolean | monotone");
  transform->add_option("--order", order, "Truncation order");
  transform->add_option("--decimals", decimals, "Also emit approximate decimals");

  // convolve
  std::string x_path;
  std::string y_path;
  auto* convolve = app.add_subcommand("convolve", "Convolve two moment sequences");
  convolve->add_option("x", x_path, "First moment document")->required();
  convolve->add_option("y", y_path, "Second moment document")->required();
  convolve->add_option("--kind", kind_text, "commutative | free | boolean | monotone")->required();
  convolve->add_option("--order", order, "Truncation order");
  convolve->add_option("--decimals", decimals, "Also emit approximate decimals");

  // partitions
  int partitions_n = 0;
  std::string family_text = "all";
  std::string mode_text = "count";
  auto* partitions = app.add_subcommand("partitions", "Count or list set partitions of {1..n}");
  partitions->add_option("n", partitions_n, "Ground set size")->required();
  partitions->add_option("--family", family_text,
                         "all | noncrossing | interval | ordered | monotone");
  partitions->add_option("--mode", mode_text, "count | list");
  partitions->add_option("--output", output_text, "json | text");

  // limit
  std::string law_text;
  std::string limit_input;
  std::string lambda_text;
  std::string base_path;
  std::vector<std::uint64_t> steps;
  std::vector<std::size_t> orders;
  auto* limit = app.add_subcommand("limit", "Central limit / small numbers convergence tables");
  limit->add_option("law", law_text, "clt | poisson")->required();
  limit->add_option("input", limit_input, "clt: moment document of one summand");
  limit->add_option("--lambda", lambda_text, "poisson: rate as p/q");
  limit->add_option("--base", base_path, "poisson: explicit triangular-array bases");
  limit->add_option("--steps", steps, "Numbers of summands N (clt: perfect squares)")
      ->delimiter(',')
      ->required();
  limit->add_option("--order", orders, "Moment orders")->delimiter(',')->required();
  limit->add_option("--output", output_text, "json | csv");
  limit->add_option("--decimals", decimals, "Also emit approximate decimals");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), 2);
  }

  using namespace moncum::cli;
  try {
    const std::optional<int> digits = decimals >= 0 ? std::optional<int>(decimals) : std::nullopt;
    const std::optional<std::size_t> order_flag =
        order > 0 ? std::optional<std::size_t>(order) : std::nullopt;

    if (*transform) {
      TransformOptions options;
      options.direction = parse_flag<Direction>(direction_text, parse_direction, "--direction");
      if (!kind_text.empty()) {
        options.kind = parse_flag<moncum::IndependenceKind>(kind_text, moncum::parse_kind, "--kind");
      }
      options.order = order_flag;
      options.decimals = digits;
      std::cout << cmd_transform(read_json(transform_input), options).dump(2) << '\n';
    } else if (*convolve) {
      ConvolveOptions options;
      options.kind = parse_flag<moncum::IndependenceKind>(kind_text, moncum::parse_kind, "--kind");
      options.order = order_flag;
      options.decimals = digits;
      std::cout << cmd_convolve(read_json(x_path), read_json(y_path), options).dump(2) << '\n';
    } else if (*partitions) {
      PartitionsOptions options;
      options.n = partitions_n;
      options.family = parse_flag<moncum::PartitionFamily>(family_text, moncum::parse_family,
                                                           "--family");
      options.mode = parse_flag<CountMode>(mode_text, parse_mode, "--mode");
      options.output = output_text.empty()
                           ? (options.mode == CountMode::Count ? OutputFormat::Json
                                                               : OutputFormat::Text)
                           : parse_flag<OutputFormat>(output_text, parse_output, "--output");
      cmd_partitions(options, std::cout);
    } else if (*limit) {
      LimitOptions options;
      options.law = parse_flag<LimitLaw>(law_text, parse_law, "law");
      if (!limit_input.empty()) options.input = read_json(limit_input);
      if (!lambda_text.empty()) options.lambda = moncum::Rational::parse(lambda_text);
      if (!base_path.empty()) options.bases = read_json(base_path);
      options.steps = steps;
      options.orders = orders;
      options.output = output_text.empty()
                           ? OutputFormat::Json
                           : parse_flag<OutputFormat>(output_text, parse_output, "--output");
      options.decimals = digits;
      cmd_limit(options, std::cout);
    } else if (*selftest) {
      return moncum::run_selftest(std::cout) == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    return fail(moncum::to_string(e.code()), e.what(), 1);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 1);
  }
  return 0;
}
