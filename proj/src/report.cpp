#include "padic/report.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace padic {

namespace {

const char* status_name(RecordStatus s) {
  switch (s) {
  case RecordStatus::pass:
    return "pass";
  case RecordStatus::fail:
    return "fail";
  case RecordStatus::undecided:
    return "undecided";
  }
  return "undecided";
}

} // namespace

Json exponent_json(const ExtInt& e) {
  if (e.is_neg_inf()) {
    return kInfValuationToken;
  }
  if (e.is_pos_inf()) {
    return kExactToken;
  }
  return e.value();
}

std::string exponent_text(const ExtInt& e) {
  if (e.is_neg_inf()) {
    return kInfValuationToken;
  }
  if (e.is_pos_inf()) {
    return kExactToken;
  }
  return std::to_string(e.value());
}

Json criterion_json(const CriterionReport& report) {
  Json records = Json::array();
  Json orders = Json::array();
  Json certified = Json::array();
  for (const auto& r : report.records) {
    records.push_back({{"k", r.k},
                       {"v_mu", r.mu_valuation},
                       {"lhs_exponent", exponent_json(r.lhs_exponent)},
                       {"lhs_is_bound", r.lhs_is_bound},
                       {"rhs_exponent", exponent_json(r.rhs_exponent)},
                       {"pass", r.pass()},
                       {"status", status_name(r.status)}});
    orders.push_back(r.truncation_order);
    certified.push_back(exponent_json(r.certified_exponent));
  }
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"k", w.k}, {"v_mu", w.mu_valuation}});
  }
  Json doc;
  doc["matrix_id"] = report.matrix_id;
  doc["prime"] = report.prime;
  doc["dim"] = report.dim;
  doc["records"] = std::move(records);
  doc["verdict"] = report.verdict;
  doc["witnesses"] = std::move(witnesses);
  doc["engine_metadata"] = {{"truncation_orders", std::move(orders)},
                            {"certified_exponents", std::move(certified)},
                            {"undecided_records", report.undecided}};
  return doc;
}

std::string criterion_csv(const CriterionReport& report) {
  std::ostringstream out;
  out << "k,v_mu,lhs_exponent,rhs_exponent,pass\n";
  for (const auto& r : report.records) {
    out << r.k << ',' << r.mu_valuation << ',' << exponent_text(r.lhs_exponent) << ','
        << exponent_text(r.rhs_exponent) << ',' << (r.pass() ? "true" : "false") << '\n';
  }
  return out.str();
}

std::vector<IdentitySummary> summarize_identities(const std::vector<IdentityCheck>& checks) {
  std::vector<IdentitySummary> out;
  for (const auto& c : checks) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const IdentitySummary& s) { return s.identity == c.identity; });
    if (it == out.end()) {
      out.push_back({c.identity});
      it = std::prev(out.end());
    }
    ++it->checks;
    it->max_residual = max(it->max_residual, c.residual.exponent);
    it->min_certificate = min(it->min_certificate, c.residual.certificate);
    it->holds = it->holds && c.residual.holds;
  }
  return out;
}

Json identities_json(const std::vector<IdentityCheck>& checks) {
  Json summary = Json::array();
  for (const auto& s : summarize_identities(checks)) {
    summary.push_back({{"identity", s.identity},
                       {"checks", s.checks},
                       {"max_residual_exponent", exponent_json(s.max_residual)},
                       {"min_certificate", exponent_json(s.min_certificate)},
                       {"holds", s.holds}});
  }
  Json detail = Json::array();
  for (const auto& c : checks) {
    detail.push_back({{"identity", c.identity},
                      {"index", c.index},
                      {"v_mu", exponent_json(c.mu_valuation)},
                      {"residual_exponent", exponent_json(c.residual.exponent)},
                      {"certificate", exponent_json(c.residual.certificate)},
                      {"holds", c.residual.holds}});
  }
  return {{"summary", std::move(summary)}, {"checks", std::move(detail)}};
}

std::string identities_csv(const std::vector<IdentityCheck>& checks) {
  std::ostringstream out;
  out << "identity,checks,max_residual_exponent,min_certificate,holds\n";
  for (const auto& s : summarize_identities(checks)) {
    out << s.identity << ',' << s.checks << ',' << exponent_text(s.max_residual) << ','
        << exponent_text(s.min_certificate) << ',' << (s.holds ? "true" : "false") << '\n';
  }
  return out.str();
}

} // namespace padic
