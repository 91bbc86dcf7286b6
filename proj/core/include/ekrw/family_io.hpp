#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ekrw/set_family.hpp"

namespace ekrw {

/// Raised on malformed family files; message names the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ReadResult {
  SetFamily family;
  std::vector<std::string> warnings;  // re-sorting / de-duplication notices
};

/// Family file format: line 1 is "n=<int> k=<int|*>"; each subsequent
/// nonempty line is one set as strictly increasing space-separated 1-based
/// integers; '#' begins a comment line.  Canonical files list members in
/// increasing mask order.
ReadResult read_family(std::istream& in);
ReadResult read_family(const std::filesystem::path& path);

void write_family(const SetFamily& family, std::ostream& out);
void write_family(const SetFamily& family, const std::filesystem::path& path);

}  // namespace ekrw
