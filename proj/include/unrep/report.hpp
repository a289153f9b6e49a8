#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "unrep/cayley.hpp"
#include "unrep/error.hpp"
#include "unrep/semigroup.hpp"

namespace unrep::report {

using Json = nlohmann::ordered_json;

inline constexpr int format_version = 1;

// A semigroup description: generators of a transformation semigroup, or an
// abstract multiplication table.
struct InputDocument {
  enum class Kind { generators, table };

  int version = format_version;
  Kind kind = Kind::generators;
  std::size_t degree = 0;
  std::vector<Transformation> generators;
  std::optional<MulTable> table;
};

// Throws InputError with line/column context for malformed JSON and with the
// offending field path for schema violations.
InputDocument parse_input(std::string_view text);

// The input document as it would be written.
Json echo(const InputDocument& doc);

struct RunOptions {
  bool oracle = false;
  unsigned jobs = 1;
  std::optional<std::size_t> identity;
  std::size_t cap = default_closure_cap;
  std::uint64_t seed = 0;
};

const std::vector<std::string>& commands();

struct RunResult {
  Json report;
  // 0, or theorem_violation when a checked property failed.
  int status = 0;
};

// Throws Error subclasses for bad commands, failed preconditions and
// exceeded capacities.
RunResult run(std::string_view command, const InputDocument& doc,
              const RunOptions& opts);

Json error_document(const Error& e);
Json error_document(ErrorCode code, std::string_view module,
                    std::string_view message);

// Indented JSON with arrays of scalars kept on one line.
std::string render_machine(const Json& doc);

// Human-readable rendering of a report or error document.
std::string render_pretty(const Json& doc);

}  // namespace unrep::report
