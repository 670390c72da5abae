#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "smoothfano/polytope.hpp"

namespace sfano {

/// Text format:
///
///   fano 1
///   <d> <n>
///   <n lines of d integers separated by single spaces>
///
/// '#' starts a comment that runs to the end of the line; blank lines are
/// ignored. Lines end with LF.
struct FanoFile {
  std::size_t dim = 0;
  std::vector<LatticeVector> rows;

  friend bool operator==(const FanoFile&, const FanoFile&) = default;
};

/// Throws ParseError with the 1-based line and column of the first problem.
FanoFile parse_fano(std::string_view text);
/// Canonical serialization; parse_fano(serialize_fano(x)) == x.
std::string serialize_fano(const FanoFile& file);
std::string serialize_fano(const Polytope& p);

/// Throws std::runtime_error on I/O failure, ParseError on bad content.
FanoFile read_fano_file(const std::filesystem::path& path);
void write_fano_file(const std::filesystem::path& path, const Polytope& p);

}  // namespace sfano
