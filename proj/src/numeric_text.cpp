#include "qubitfit/numeric_text.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace qubitfit {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text) {
  std::string_view s = trim(text);
  if (s.starts_with('+')) s.remove_prefix(1);
  if (s.empty()) throw std::invalid_argument("empty number");
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("bad number '" + std::string(trim(text)) + "'");
  if (!std::isfinite(v))
    throw std::invalid_argument("non-finite number '" + std::string(trim(text)) + "'");
  return v;
}

}  // namespace qubitfit
