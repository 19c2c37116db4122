#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "padic/extended_int.hpp"

namespace padic {

// Parses "num/den" or "num" (optional leading '-'). Throws InvalidInput on
// malformed text or a zero denominator.
mpq_class parse_rational(std::string_view text);
// Canonical "num/den" with gcd(num, den) = 1 and den > 0; integers keep "/1".
std::string format_rational(const mpq_class& q);

// Matrix file:
//   {
//     "prime": 5,
//     "dim": 2,
//     "entries": [
//       ["1/1", "1/1"],
//       ["0/1", "1/1"]
//     ]
//   }
// serialize_matrix_file emits exactly this layout, so a canonical file
// round-trips byte for byte.
struct MatrixFile {
  std::int64_t prime = 0;
  std::size_t dim = 0;
  std::vector<std::vector<mpq_class>> entries;
};

// Throws InvalidInput on any schema violation.
MatrixFile parse_matrix_file(std::string_view text);
MatrixFile read_matrix_file(const std::filesystem::path& path);
std::string serialize_matrix_file(const MatrixFile& file);

// Sup-norm exponent of the file's matrix, read off the rational entries
// before any p-adic context exists; -inf for the zero matrix.
NormExponent rational_norm_exponent(const MatrixFile& file);

} // namespace padic
