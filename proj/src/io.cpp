#include "fcyc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace fcyc {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::uint32_t to_u32(std::string_view s, std::size_t line) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(line, "not a number '" + std::string(s) + "'");
  return v;
}

}  // namespace

Mat parse_matrix(std::string_view text) {
  std::size_t lineno = 0;
  std::optional<Field> field;
  std::size_t n = 0, row = 0;
  Mat m;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    auto tok = tokens(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (!field) {
      if (tok.size() != 2) fail(lineno, "header must be 'n field'");
      n = to_u32(tok[0], lineno);
      if (n < 1) fail(lineno, "dimension must be at least 1");
      try {
        field = Field::parse(tok[1]);
      } catch (const FieldError& e) {
        fail(lineno, e.what());
      }
      m = Mat(*field, n);
      continue;
    }
    if (row == n) fail(lineno, "more than " + std::to_string(n) + " rows");
    if (tok.size() != n)
      fail(lineno, "expected " + std::to_string(n) + " entries, found " + std::to_string(tok.size()));
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t v = to_u32(tok[j], lineno);
      if (!field->contains(Elem{v})) fail(lineno, "entry " + std::to_string(v) + " outside " + field->to_string());
      m(row, j) = Elem{v};
    }
    ++row;
  }
  if (!field) fail(lineno, "missing header");
  if (row != n) fail(lineno, "expected " + std::to_string(n) + " rows, found " + std::to_string(row));
  return m;
}

Mat read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_matrix(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_matrix(const Mat& x) {
  std::string s = std::to_string(x.n()) + " " + x.field().to_string() + "\n";
  for (std::size_t i = 0; i < x.n(); ++i) {
    for (std::size_t j = 0; j < x.n(); ++j) {
      if (j) s += ' ';
      s += std::to_string(x(i, j).rep);
    }
    s += '\n';
  }
  return s;
}

std::string vec_text(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i].rep);
  }
  return s;
}

}  // namespace fcyc
