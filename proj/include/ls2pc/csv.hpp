#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ls2pc/matrix.hpp"

namespace ls2pc::csv {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated decimal numbers, one record per line. A first row with
/// any non-numeric field is treated as a header and skipped. Blank lines are
/// ignored. Parsing does not depend on the C locale.
Matrix parse(std::string_view text);
Matrix read(const std::filesystem::path& path);

/// Shortest round-trip representation of each entry.
std::string format(const Matrix& m);
void write(const std::filesystem::path& path, const Matrix& m);

}  // namespace ls2pc::csv
