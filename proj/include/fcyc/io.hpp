#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "fcyc/matrix.hpp"

namespace fcyc {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix text: a header "n field" (field as accepted by Field::parse), then
/// n rows of n whitespace-separated encodings. Blank lines and lines starting
/// with '#' are skipped. Errors name the offending line.
Mat parse_matrix(std::string_view text);
Mat read_matrix_file(const std::string& path);
std::string format_matrix(const Mat& x);

/// "1,0,1"
std::string vec_text(const Vec& v);

}  // namespace fcyc
