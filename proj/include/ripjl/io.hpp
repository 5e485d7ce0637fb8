#pragma once

#include <string>

#include "ripjl/common.hpp"

namespace ripjl {

// Delimiter-separated text, one vector per line; spaces, tabs or commas
// separate fields. skip_header drops the first line.
Matrix read_rows(const std::string& path, bool skip_header = false);

// Writes rows at full double precision (17 significant digits).
void write_rows(const std::string& path, const Matrix& rows);

}  // namespace ripjl
