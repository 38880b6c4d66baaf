#pragma once

#include <filesystem>
#include <iosfwd>

#include "grpkit/limits.hpp"
#include "grpkit/perm_group.hpp"

namespace grpkit {

// ".grp" text: "degree <n>" followed by one generator per line in 1-based
// cycle notation. Blank lines and '#' comments are ignored.
// Throws ParseError, or DegreeExceedsCap when n > degree_cap.
PermGroup read_group(std::istream& is, std::uint64_t degree_cap = kDegreeCap);
PermGroup load_group(const std::filesystem::path& path, std::uint64_t degree_cap = kDegreeCap);
void write_group(std::ostream& os, const PermGroup& group);

}  // namespace grpkit
