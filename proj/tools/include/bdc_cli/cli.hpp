#pragma once

// Report construction behind the `bdc` executable. Every command builds an
// ordered JSON document; text output is rendered from that same document,
// so both forms carry identical content.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bdc/errors.hpp"
#include "json.hpp"

namespace bdc::cli {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::optional<std::string> mark;  // arc id (diagram) or vertex id (graph)
  unsigned threads = 1;
  std::optional<std::uint64_t> seed;
};

Json analyze_report(std::string_view text, const Options& opt);
Json obstruct_report(std::string_view text, const Options& opt);
Json mk1_report(std::string_view text, const Options& opt);
Json plumb_check_report(std::string_view text);
Json plumb_reduce_report(std::string_view text, const Options& opt);
Json plumb_decide_report(std::string_view text);
Json cf_report(std::int64_t p, std::int64_t q);
Json berge_report(std::int64_t i, std::int64_t k);
Json witness_report(std::string_view text);

/// Structural and arithmetic consistency of a report. Empty when valid.
std::vector<std::string> validate_report(const Json& report);

/// Human-readable rendering. Deterministic.
std::string render_text(const Json& report);

/// 0 ok, 2 input, 3 topology, 4 internal or hypothesis.
int exit_code(ErrorCode code) noexcept;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

/// Full command line handling (args exclude the program name).
Outcome run(const std::vector<std::string>& args);

}  // namespace bdc::cli
