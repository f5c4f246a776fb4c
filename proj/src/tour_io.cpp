#include "tourney/tour_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace tourney {

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& msg) {
  throw Error(Errc::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

}  // namespace

Tournament parse_tour(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty() || lines[0].empty()) parse_fail(1, 1, "expected the order n");

  long long n = 0;
  for (std::size_t c = 0; c < lines[0].size(); ++c) {
    const char ch = lines[0][c];
    if (ch < '0' || ch > '9') parse_fail(1, c + 1, "order must be a decimal integer");
    n = n * 10 + (ch - '0');
    if (n > kMaxOrder) throw Error(Errc::OrderTooLarge, "order exceeds 64");
  }
  if (n < 1) parse_fail(1, 1, "order must be at least 1");
  if (lines.size() != static_cast<std::size_t>(n) + 1)
    parse_fail(lines.size() + 1, 1,
               "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));

  std::vector<Row> rows(static_cast<std::size_t>(n), 0);
  for (long long i = 0; i < n; ++i) {
    const auto& line = lines[static_cast<std::size_t>(i) + 1];
    for (std::size_t c = 0; c < line.size(); ++c) {
      const char ch = line[c];
      if (ch != '0' && ch != '1') parse_fail(i + 2, c + 1, "unexpected character");
      if (c >= static_cast<std::size_t>(n)) parse_fail(i + 2, c + 1, "row longer than n");
      if (ch == '1') rows[i] |= Row{1} << c;
    }
    if (line.size() != static_cast<std::size_t>(n)) parse_fail(i + 2, line.size() + 1, "row shorter than n");
  }
  return Tournament::from_rows(static_cast<int>(n), rows);
}

std::string write_tour(const Tournament& t) {
  std::string s = std::to_string(t.order()) + "\n";
  for (int i = 0; i < t.order(); ++i) {
    for (int j = 0; j < t.order(); ++j) s.push_back(t.arc(i, j) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

Tournament read_tour_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_tour(ss.str());
}

void write_tour_file(const std::string& path, const Tournament& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  out << write_tour(t);
}

}  // namespace tourney
