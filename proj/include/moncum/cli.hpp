#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "moncum/error.hpp"
#include "moncum/limits.hpp"
#include "moncum/partitions.hpp"
#include "moncum/sequences.hpp"

namespace moncum::cli {

using Json = nlohmann::json;

enum class Direction { MomentsToCumulants, CumulantsToMoments };
enum class OutputFormat { Json, Csv, Text };
enum class CountMode { Count, List };
enum class LimitLaw { Clt, Poisson };

std::optional<Direction> parse_direction(std::string_view text);
std::optional<OutputFormat> parse_output(std::string_view text);
std::optional<CountMode> parse_mode(std::string_view text);
std::optional<LimitLaw> parse_law(std::string_view text);

/// Rationals as "p/q" strings or JSON integers. Anything else is MalformedInput.
Rational rational_from_json(const Json& value);
std::vector<Rational> rationals_from_json(const Json& array, std::string_view field);
Json rationals_to_json(std::span<const Rational> values);

/// Reads {"moments": [...]} (an optional "order" cuts it).
MomentSequence moments_from_json(const Json& doc);

struct TransformOptions {
  Direction direction = Direction::MomentsToCumulants;
  std::optional<IndependenceKind> kind;  // falls back to the document's "kind"
  std::optional<std::size_t> order;
  std::optional<int> decimals;
};

Json cmd_transform(const Json& input, const TransformOptions& options);

struct ConvolveOptions {
  IndependenceKind kind = IndependenceKind::Monotone;
  std::optional<std::size_t> order;
  std::optional<int> decimals;
};

Json cmd_convolve(const Json& x, const Json& y, const ConvolveOptions& options);

struct PartitionsOptions {
  int n = 1;
  PartitionFamily family = PartitionFamily::All;
  CountMode mode = CountMode::Count;
  OutputFormat output = OutputFormat::Json;
};

/// Count mode writes one JSON object; list mode streams one canonical form
/// per line (text) or a JSON array.
void cmd_partitions(const PartitionsOptions& options, std::ostream& out);

struct LimitOptions {
  LimitLaw law = LimitLaw::Clt;
  std::optional<Json> input;              // clt: moment document
  std::optional<Rational> lambda;         // poisson
  std::optional<Json> bases;              // poisson: {"bases": [{"N": .., "moments": [..]}]}
  std::vector<std::uint64_t> steps;       // clt: N (perfect squares); poisson: N
  std::vector<std::size_t> orders;
  OutputFormat output = OutputFormat::Json;
  std::optional<int> decimals;
};

ConvergenceTable compute_limit(const LimitOptions& options);
void cmd_limit(const LimitOptions& options, std::ostream& out);

/// {"error": {"code": ..., "message": ...}}
Json error_json(std::string_view code, std::string_view message);

}  // namespace moncum::cli
