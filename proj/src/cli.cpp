#include "moncum/cli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "moncum/convolution.hpp"
#include "moncum/cumulants.hpp"

namespace moncum::cli {

namespace {

Error malformed(const std::string& message) { return Error(ErrorCode::MalformedInput, message); }

bool is_count(const Json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0);
}

IndependenceKind kind_from_json(const Json& doc) {
  if (!doc.contains("kind")) throw malformed("document has no \"kind\"; pass --kind");
  if (!doc["kind"].is_string()) throw malformed("\"kind\" must be a string");
  const auto kind = parse_kind(doc["kind"].get<std::string>());
  if (!kind) throw malformed("unknown kind \"" + doc["kind"].get<std::string>() + "\"");
  return *kind;
}

std::size_t order_from(const Json& doc, std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (doc.contains("order")) {
    if (!is_count(doc["order"])) throw malformed("\"order\" must be a non-negative integer");
    return doc["order"].get<std::size_t>();
  }
  return 0;  // 0 = use everything
}

Json decimals_json(std::span<const Rational> values, int digits) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_decimal(digits));
  return out;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line;
}

bool is_perfect_square(std::uint64_t n, std::uint64_t& root) {
  root = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (root * root > n) --root;
  while ((root + 1) * (root + 1) <= n) ++root;
  return root * root == n;
}

}  // namespace

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "moments-to-cumulants") return Direction::MomentsToCumulants;
  if (text == "cumulants-to-moments") return Direction::CumulantsToMoments;
  return std::nullopt;
}

std::optional<OutputFormat> parse_output(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "text") return OutputFormat::Text;
  return std::nullopt;
}

std::optional<CountMode> parse_mode(std::string_view text) {
  if (text == "count") return CountMode::Count;
  if (text == "list") return CountMode::List;
  return std::nullopt;
}

std::optional<LimitLaw> parse_law(std::string_view text) {
  if (text == "clt") return LimitLaw::Clt;
  if (text == "poisson") return LimitLaw::Poisson;
  return std::nullopt;
}

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) {
    return Rational::parse(value.dump());
  }
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  throw malformed("not an exact rational (use \"p/q\" strings or integers): " + value.dump());
}

std::vector<Rational> rationals_from_json(const Json& array, std::string_view field) {
  if (!array.is_array()) throw malformed("\"" + std::string(field) + "\" must be an array");
  std::vector<Rational> out;
  out.reserve(array.size());
  for (const auto& v : array) out.push_back(rational_from_json(v));
  return out;
}

Json rationals_to_json(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

MomentSequence moments_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("moments")) {
    throw malformed("expected an object with a \"moments\" array");
  }
  MomentSequence m(rationals_from_json(doc["moments"], "moments"));
  const std::size_t order = order_from(doc, std::nullopt);
  return order > 0 ? m.truncated(order) : m;
}

Json cmd_transform(const Json& input, const TransformOptions& options) {
  if (!input.is_object()) throw malformed("input must be a JSON object");
  IndependenceKind kind{};
  if (options.kind) {
    kind = *options.kind;
    if (input.contains("kind") && kind_from_json(input) != kind) {
      throw malformed("--kind conflicts with the document's \"kind\"");
    }
  } else {
    kind = kind_from_json(input);
  }

  Json out;
  out["kind"] = std::string(to_string(kind));
  if (options.direction == Direction::MomentsToCumulants) {
    if (!input.contains("moments")) throw malformed("moments-to-cumulants needs \"moments\"");
    MomentSequence m(rationals_from_json(input["moments"], "moments"));
    const std::size_t order = order_from(input, options.order);
    if (order > 0) m = m.truncated(order);
    const CumulantSequence r = cumulants_from_moments(m, kind);
    out["direction"] = "moments-to-cumulants";
    out["route"] = kind == IndependenceKind::Monotone ? "monotone-chain-inversion"
                                                      : "partition-sum-inversion";
    out["order"] = m.order();
    out["moments"] = rationals_to_json(m.values());
    out["cumulants"] = rationals_to_json(r.values());
    if (options.decimals) {
      out["approximate_decimals"] = {{"moments", decimals_json(m.values(), *options.decimals)},
                                     {"cumulants", decimals_json(r.values(), *options.decimals)}};
    }
    return out;
  }

  if (!input.contains("cumulants")) throw malformed("cumulants-to-moments needs \"cumulants\"");
  CumulantSequence r(kind, rationals_from_json(input["cumulants"], "cumulants"));
  const std::size_t order = order_from(input, options.order);
  if (order > 0) r = r.truncated(order);
  const MomentSequence m = kind == IndependenceKind::Monotone
                               ? moments_from_monotone_cumulants(r, r.order())
                               : moments_from_partition_sum(r, r.order());
  out["direction"] = "cumulants-to-moments";
  out["route"] = kind == IndependenceKind::Monotone ? "monotone-chain-formula" : "partition-sum";
  out["order"] = r.order();
  out["moments"] = rationals_to_json(m.values());
  out["cumulants"] = rationals_to_json(r.values());
  if (options.decimals) {
    out["approximate_decimals"] = {{"moments", decimals_json(m.values(), *options.decimals)},
                                   {"cumulants", decimals_json(r.values(), *options.decimals)}};
  }
  return out;
}

Json cmd_convolve(const Json& x, const Json& y, const ConvolveOptions& options) {
  MomentSequence mx = moments_from_json(x);
  MomentSequence my = moments_from_json(y);
  if (options.order) {
    mx = mx.truncated(*options.order);
    my = my.truncated(*options.order);
  }
  const MomentSequence result = convolve(mx, my, options.kind);
  Json out;
  out["kind"] = std::string(to_string(options.kind));
  out["order"] = result.order();
  out["moments"] = rationals_to_json(result.values());
  out["commutative"] = options.kind != IndependenceKind::Monotone;
  if (result.notes().order_truncated) {
    out["warning"] = "input orders differ (" + std::to_string(mx.order()) + " vs " +
                     std::to_string(my.order()) + "); result truncated to order " +
                     std::to_string(result.order());
  }
  if (options.decimals) {
    out["approximate_decimals"] = {{"moments", decimals_json(result.values(), *options.decimals)}};
  }
  return out;
}

void cmd_partitions(const PartitionsOptions& options, std::ostream& out) {
  check_enumeration_bound(options.family, options.n);
  if (options.mode == CountMode::Count) {
    const Json doc = {{"n", options.n},
                      {"family", std::string(to_string(options.family))},
                      {"count", count_family(options.family, options.n)}};
    if (options.output == OutputFormat::Json) {
      out << doc.dump() << '\n';
    } else {
      out << doc["count"].get<std::uint64_t>() << '\n';
    }
    return;
  }
  if (options.output == OutputFormat::Json) {
    bool first = true;
    out << '[';
    for_each_in_family(options.family, options.n, [&](const std::string& form) {
      out << (first ? "" : ",") << '"' << form << '"';
      first = false;
    });
    out << "]\n";
    return;
  }
  for_each_in_family(options.family, options.n,
                     [&](const std::string& form) { out << form << '\n'; });
}

ConvergenceTable compute_limit(const LimitOptions& options) {
  if (options.steps.empty()) throw malformed("--steps is required");
  if (options.orders.empty()) throw malformed("--order is required");
  if (options.law == LimitLaw::Clt) {
    if (!options.input) throw malformed("clt needs a moment document");
    const MomentSequence x = moments_from_json(*options.input);
    std::vector<std::uint64_t> s_values;
    for (std::uint64_t n : options.steps) {
      std::uint64_t root = 0;
      if (n == 0 || !is_perfect_square(n, root)) {
        throw Error(ErrorCode::Precondition,
                    "clt steps are numbers of summands and must be perfect squares, got " +
                        std::to_string(n));
      }
      s_values.push_back(root);
    }
    return clt_convergence_table(x, s_values, options.orders);
  }

  if (!options.lambda) throw malformed("poisson needs --lambda");
  if (!options.bases) return poisson_convergence_table(*options.lambda, options.steps, options.orders);

  const Json& doc = *options.bases;
  if (!doc.is_object() || !doc.contains("bases") || !doc["bases"].is_array()) {
    throw malformed("base document must be {\"bases\": [{\"N\": n, \"moments\": [...]}, ...]}");
  }
  std::vector<PoissonBase> bases;
  for (const auto& entry : doc["bases"]) {
    if (!entry.is_object() || !entry.contains("N") || !is_count(entry["N"])) {
      throw malformed("each base needs an unsigned integer \"N\"");
    }
    const auto n = entry["N"].get<std::uint64_t>();
    if (std::find(options.steps.begin(), options.steps.end(), n) != options.steps.end()) {
      bases.emplace_back(n, moments_from_json(entry));
    }
  }
  if (bases.size() != options.steps.size()) {
    throw malformed("base document lacks an entry for some requested N");
  }
  return poisson_convergence_table(*options.lambda, bases, options.orders);
}

void cmd_limit(const LimitOptions& options, std::ostream& out) {
  const ConvergenceTable table = compute_limit(options);
  const bool clt = options.law == LimitLaw::Clt;
  const std::string step_name = clt ? "s" : "N";

  if (options.output == OutputFormat::Csv) {
    std::vector<std::string> header{"law", step_name, "summands", "n", "moment", "target",
                                    "difference", "cumulant_scaling"};
    if (options.decimals) {
      header.insert(header.end(), {"moment_approx", "target_approx", "difference_approx"});
    }
    out << csv_row(header) << '\n';
    for (const auto& row : table.rows) {
      std::vector<std::string> cells{table.law,
                                     std::to_string(row.step),
                                     std::to_string(row.summands),
                                     std::to_string(row.n),
                                     row.moment.to_string(),
                                     row.target.to_string(),
                                     row.difference.to_string(),
                                     row.cumulant_scaling_holds ? "true" : "false"};
      if (options.decimals) {
        cells.push_back(row.moment.to_decimal(*options.decimals));
        cells.push_back(row.target.to_decimal(*options.decimals));
        cells.push_back(row.difference.to_decimal(*options.decimals));
      }
      out << csv_row(cells) << '\n';
    }
    return;
  }

  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r = {{step_name, row.step},
              {"summands", row.summands},
              {"n", row.n},
              {"moment", row.moment.to_string()},
              {"target", row.target.to_string()},
              {"difference", row.difference.to_string()},
              {"cumulant_scaling", row.cumulant_scaling_holds}};
    if (options.decimals) {
      r["approximate_decimals"] = {{"moment", row.moment.to_decimal(*options.decimals)},
                                   {"target", row.target.to_decimal(*options.decimals)},
                                   {"difference", row.difference.to_decimal(*options.decimals)}};
    }
    rows.push_back(std::move(r));
  }
  Json doc = {{"law", table.law}, {"rows", std::move(rows)}};
  if (options.lambda && !clt) doc["lambda"] = options.lambda->to_string();
  out << doc.dump(2) << '\n';
}

Json error_json(std::string_view code, std::string_view message) {
  return {{"error", {{"code", std::string(code)}, {"message", std::string(message)}}}};
}

}  // namespace moncum::cli
