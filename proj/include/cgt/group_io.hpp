#pragma once

#include <iosfwd>
#include <string>

#include "cgt/bsgs.hpp"

namespace cgt {

/// Group file format: line 1 is `degree <n>`; every following nonempty,
/// non-comment line is one generator in 1-based cycle notation. `#` starts a
/// comment. Parse errors carry 1-based line numbers.
PermGroup read_group(std::istream& is);
PermGroup load_group_file(const std::string& path);

void write_group(std::ostream& os, const PermGroup& g);

}  // namespace cgt
