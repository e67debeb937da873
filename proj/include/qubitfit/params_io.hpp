#pragma once

// Line-oriented key=value documents used for parameter files and the
// optional qubitfit.conf. '#' starts a comment; blank lines are ignored.
//
//   theta1=1.373
//   theta2=1.770
//   g0=-0.081
//   ...

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qubitfit/circuit.hpp"

namespace qubitfit {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KeyValue {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

/// Splits a document into key/value pairs. Rejects lines without '=' or
/// with an empty key, and duplicate keys.
std::vector<KeyValue> parse_key_values(std::string_view text);

/// Requires theta1, theta2, g0..g3 exactly once each; unknown keys are errors.
CircuitParams parse_params(std::string_view text);

/// Round-trip exact: parse_params(serialize_params(p)) == p.
std::string serialize_params(const CircuitParams& p);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

CircuitParams read_params_file(const std::filesystem::path& path);
void write_params_file(const std::filesystem::path& path, const CircuitParams& p);

}  // namespace qubitfit
