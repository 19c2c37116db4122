#pragma once

#include <string>

#include <json.hpp>

#include "padic/criterion.hpp"
#include "padic/identities.hpp"

namespace padic {

using Json = nlohmann::ordered_json;

// Literal used for log_p 0 = -inf in every serialized form.
inline constexpr const char* kInfValuationToken = "inf_valuation";
// Literal used for an infinite certificate (exact evaluation).
inline constexpr const char* kExactToken = "exact";

// Finite values become numbers; -inf and +inf become the tokens above.
Json exponent_json(const ExtInt& e);
std::string exponent_text(const ExtInt& e);

// {matrix_id, prime, dim, records[], verdict, witnesses[],
//  engine_metadata{truncation_orders, certified_exponents}}
Json criterion_json(const CriterionReport& report);

// Header "k,v_mu,lhs_exponent,rhs_exponent,pass", one row per record in
// canonical order, trailing newline.
std::string criterion_csv(const CriterionReport& report);

// Per-identity maximum residual exponent and weakest certificate.
struct IdentitySummary {
  std::string identity;
  std::size_t checks = 0;
  NormExponent max_residual = NormExponent::neg_inf();
  ExtInt min_certificate = ExtInt::pos_inf();
  bool holds = true;
};

std::vector<IdentitySummary> summarize_identities(const std::vector<IdentityCheck>& checks);
Json identities_json(const std::vector<IdentityCheck>& checks);
// Header "identity,checks,max_residual_exponent,min_certificate,holds".
std::string identities_csv(const std::vector<IdentityCheck>& checks);

} // namespace padic
