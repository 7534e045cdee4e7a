// Minimal CSV helpers for the plain numeric files this project reads and
// writes (comma-separated, no quoting).
#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <vector>

namespace egfc::detail {

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  // tolerate trailing \r from CRLF files
  if (!out.empty() && !out.back().empty() && out.back().back() == '\r')
    out.back().pop_back();
  return out;
}

inline double parse_cell(const std::string& tok, const std::string& file,
                         std::size_t line_no, std::size_t col) {
  double value = 0.0;
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::runtime_error(file + ":" + std::to_string(line_no) +
                             ": non-numeric cell in column " + std::to_string(col + 1) +
                             " ('" + tok + "')");
  }
  return value;
}

}  // namespace egfc::detail
