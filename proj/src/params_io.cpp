#include "qubitfit/params_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "qubitfit/numeric_text.hpp"

namespace qubitfit {

namespace {

constexpr std::array<std::string_view, 6> kParamKeys = {"theta1", "theta2", "g0",
                                                        "g1",     "g2",     "g3"};

std::string where(std::size_t line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

std::vector<KeyValue> parse_key_values(std::string_view text) {
  std::vector<KeyValue> out;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(where(line_no) + "expected key=value");
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw ParseError(where(line_no) + "empty key");
    if (!seen.insert(key).second)
      throw ParseError(where(line_no) + "duplicate key '" + key + "'");
    out.push_back({key, std::string(trim(line.substr(eq + 1))), line_no});
  }
  return out;
}

CircuitParams parse_params(std::string_view text) {
  std::array<std::optional<double>, 6> values;
  for (const auto& kv : parse_key_values(text)) {
    const auto it = std::find(kParamKeys.begin(), kParamKeys.end(), kv.key);
    if (it == kParamKeys.end())
      throw ParseError(where(kv.line) + "unknown key '" + kv.key + "'");
    try {
      values[it - kParamKeys.begin()] = parse_double(kv.value);
    } catch (const std::invalid_argument& e) {
      throw ParseError(where(kv.line) + kv.key + ": " + e.what());
    }
  }
  std::array<double, 6> packed{};
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i])
      throw ParseError("missing key '" + std::string(kParamKeys[i]) + "'");
    packed[i] = *values[i];
  }
  return CircuitParams::from_array(packed);
}

std::string serialize_params(const CircuitParams& p) {
  const auto v = p.to_array();
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += kParamKeys[i];
    out += '=';
    out += format_double(v[i]);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

CircuitParams read_params_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_params(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_params_file(const std::filesystem::path& path, const CircuitParams& p) {
  write_text_file(path, serialize_params(p));
}

}  // namespace qubitfit
