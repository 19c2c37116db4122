#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <gmpxx.h>

namespace padic {

// The prime p and the relative working precision N shared by a family of
// scalars and matrices. Holds the table p^0 .. p^N.
class PadicContext {
public:
  // Throws InvalidInput unless prime is prime and precision >= 1.
  PadicContext(std::int64_t prime, int precision);

  std::int64_t prime() const { return prime_; }
  int precision() const { return precision_; }

  // p^N
  const mpz_class& modulus() const { return powers_.back(); }
  // p^e for 0 <= e <= N.
  const mpz_class& power(int e) const { return powers_.at(static_cast<std::size_t>(e)); }

  friend bool operator==(const PadicContext& a, const PadicContext& b) {
    return a.prime_ == b.prime_ && a.precision_ == b.precision_;
  }

private:
  std::int64_t prime_;
  int precision_;
  std::vector<mpz_class> powers_;
};

using ContextPtr = std::shared_ptr<const PadicContext>;

inline ContextPtr make_context(std::int64_t prime, int precision) {
  return std::make_shared<const PadicContext>(prime, precision);
}

bool same_context(const ContextPtr& a, const ContextPtr& b);

// Deterministic trial-division primality test.
bool is_prime(std::int64_t n);

} // namespace padic
