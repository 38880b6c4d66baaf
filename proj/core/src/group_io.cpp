#include "grpkit/group_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "grpkit/errors.hpp"

namespace grpkit {

namespace {

std::string strip(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

}  // namespace

PermGroup read_group(std::istream& is, std::uint64_t degree_cap) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string s = strip(line);
    if (s.empty()) continue;
    if (!degree) {
      std::istringstream ls(s);
      std::string kw;
      std::uint64_t n = 0;
      if (!(ls >> kw >> n) || kw != "degree" || n == 0) {
        throw ParseError("line " + std::to_string(lineno) + ": expected \"degree <n>\" with n >= 1");
      }
      std::string rest;
      if (ls >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing text after degree");
      if (n > degree_cap) throw DegreeExceedsCap(n, degree_cap);
      degree = static_cast<std::size_t>(n);
      continue;
    }
    try {
      gens.push_back(parse_cycles(s, *degree));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!degree) throw ParseError("missing \"degree <n>\" header");
  return PermGroup(*degree, std::move(gens));
}

PermGroup load_group(const std::filesystem::path& path, std::uint64_t degree_cap) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_group(in, degree_cap);
}

void write_group(std::ostream& os, const PermGroup& group) {
  os << "degree " << group.degree() << '\n';
  for (const auto& g : group.generators()) os << to_cycle_string(g) << '\n';
}

}  // namespace grpkit
