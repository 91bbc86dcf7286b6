#include "ekrw/family_io.hpp"

#include <fstream>
#include <sstream>

namespace ekrw {
namespace {

bool parse_header(const std::string& line, int& n, std::optional<int>& k) {
  std::istringstream in(line);
  std::string ntok, ktok;
  if (!(in >> ntok >> ktok)) return false;
  std::string rest;
  if (in >> rest) return false;
  if (ntok.rfind("n=", 0) != 0 || ktok.rfind("k=", 0) != 0) return false;
  try {
    n = std::stoi(ntok.substr(2));
  } catch (...) {
    return false;
  }
  std::string kval = ktok.substr(2);
  if (kval == "*") {
    k = std::nullopt;
    return true;
  }
  try {
    k = std::stoi(kval);
  } catch (...) {
    return false;
  }
  return true;
}

}  // namespace

ReadResult read_family(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = 0;
  std::optional<int> k;
  // Header may be preceded by comment lines.
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!parse_header(line, n, k))
      throw ParseError(lineno, "malformed header, expected \"n=<int> k=<int|*>\"");
    break;
  }
  if (lineno == 0 || n == 0) throw ParseError(lineno + 1, "missing header");
  if (n < 1 || n > ElementSet::kMaxGround)
    throw ParseError(lineno, "ground size outside [1,128]");
  if (k && (*k < 0 || *k > n))
    throw ParseError(lineno, "declared k outside [0,n]");

  std::vector<ElementSet> members;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') continue;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream ls(line);
    ElementSet s(n);
    int prev = 0;
    int e;
    while (ls >> e) {
      if (e < 1 || e > n)
        throw ParseError(lineno, "element " + std::to_string(e) +
                                     " out of range [1," + std::to_string(n) + "]");
      if (e <= prev)
        throw ParseError(lineno, "elements not strictly increasing");
      s.add(e);
      prev = e;
    }
    if (!ls.eof())
      throw ParseError(lineno, "malformed set line");
    if (k && s.size() != *k)
      throw ParseError(lineno, "set size " + std::to_string(s.size()) +
                                   " does not match declared k=" + std::to_string(*k));
    members.push_back(s);
  }

  SetFamily::BuildStats stats;
  SetFamily family = SetFamily::from_members(n, k, std::move(members), &stats);
  ReadResult result{std::move(family), {}};
  if (stats.reordered)
    result.warnings.push_back("members were not in increasing mask order; re-sorted");
  if (stats.deduplicated)
    result.warnings.push_back("duplicate members removed");
  return result;
}

ReadResult read_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_family(in);
}

void write_family(const SetFamily& family, std::ostream& out) {
  out << "n=" << family.ground_size() << " k=";
  if (family.uniform_size())
    out << *family.uniform_size();
  else
    out << '*';
  out << '\n';
  for (const ElementSet& s : family.members()) {
    if (s.empty())
      throw std::invalid_argument(
          "the empty set is not representable in the family file format");
    bool first = true;
    for (int e : s.elements()) {
      if (!first) out << ' ';
      out << e;
      first = false;
    }
    out << '\n';
  }
}

void write_family(const SetFamily& family, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_family(family, out);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace ekrw
