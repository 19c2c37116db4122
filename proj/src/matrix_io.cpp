#include "padic/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "padic/context.hpp"
#include "padic/errors.hpp"
#include "padic/scalar.hpp"

namespace padic {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  return true;
}

} // namespace

mpq_class parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') {
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InvalidInput("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  const mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw InvalidInput("rational \"" + std::string(text) + "\" has a zero denominator");
  }
  if (text.front() == '-') {
    n = -n;
  }
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const mpq_class& q_in) {
  mpq_class q = q_in;
  q.canonicalize();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

MatrixFile parse_matrix_file(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("matrix file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("prime") || !doc.contains("dim") ||
      !doc.contains("entries")) {
    throw InvalidInput("matrix file needs the fields prime, dim and entries");
  }
  if (!doc["prime"].is_number_integer() || !doc["dim"].is_number_integer()) {
    throw InvalidInput("matrix file: prime and dim must be integers");
  }
  MatrixFile file;
  file.prime = doc["prime"].get<std::int64_t>();
  const auto dim = doc["dim"].get<std::int64_t>();
  if (!is_prime(file.prime)) {
    throw InvalidInput("matrix file: " + std::to_string(file.prime) + " is not prime");
  }
  if (dim < 1) {
    throw InvalidInput("matrix file: dim must be >= 1");
  }
  file.dim = static_cast<std::size_t>(dim);
  const auto& rows = doc["entries"];
  if (!rows.is_array() || rows.size() != file.dim) {
    throw InvalidInput("matrix file: entries must be an array of dim rows");
  }
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != file.dim) {
      throw InvalidInput("matrix file: every row must hold dim entries");
    }
    std::vector<mpq_class> parsed;
    parsed.reserve(file.dim);
    for (const auto& cell : row) {
      if (!cell.is_string()) {
        throw InvalidInput("matrix file: entries must be \"num/den\" strings");
      }
      parsed.push_back(parse_rational(cell.get<std::string>()));
    }
    file.entries.push_back(std::move(parsed));
  }
  return file;
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot open matrix file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_file(buf.str());
}

std::string serialize_matrix_file(const MatrixFile& file) {
  std::ostringstream out;
  out << "{\n  \"prime\": " << file.prime << ",\n  \"dim\": " << file.dim
      << ",\n  \"entries\": [\n";
  for (std::size_t i = 0; i < file.entries.size(); ++i) {
    out << "    [";
    for (std::size_t j = 0; j < file.entries[i].size(); ++j) {
      out << (j ? ", " : "") << '"' << format_rational(file.entries[i][j]) << '"';
    }
    out << "]" << (i + 1 < file.entries.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

NormExponent rational_norm_exponent(const MatrixFile& file) {
  NormExponent e = NormExponent::neg_inf();
  for (const auto& row : file.entries) {
    for (const auto& q : row) {
      if (q == 0) {
        continue;
      }
      mpz_class num = q.get_num();
      mpz_class den = q.get_den();
      const std::int64_t v =
          remove_prime_factors(num, file.prime) - remove_prime_factors(den, file.prime);
      e = max(e, NormExponent(-v));
    }
  }
  return e;
}

} // namespace padic
