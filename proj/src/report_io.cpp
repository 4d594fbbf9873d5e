#include "gibsum/report_io.hpp"

#include <sstream>

namespace gibsum {

namespace {

template <typename T>
nlohmann::ordered_json or_null(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string seeds_label(const IdentityDescriptor& desc) {
  if (!desc.fixed_seeds) return "any";
  return to_string(desc.fixed_seeds->g0()) + "," + to_string(desc.fixed_seeds->g1());
}

std::string n_domain_label(const IdentityDescriptor& desc) {
  return desc.min_n ? "n>=" + std::to_string(*desc.min_n) : "any";
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["identity"] = report.identity;
  j["g0"] = to_string(report.g0);
  j["g1"] = to_string(report.g1);
  j["t"] = report.t;
  j["n"] = report.n;
  j["closed"] = or_null(report.closed);
  j["oracle"] = or_null(report.oracle);
  j["match"] = report.match;
  if (report.error) {
    nlohmann::ordered_json err;
    err["kind"] = report.error->kind;
    err["index"] = or_null(report.error->index);
    err["message"] = report.error->message;
    j["error"] = std::move(err);
  } else {
    j["error"] = nullptr;
  }
  return j;
}

std::string tsv_header() { return "identity\tg0\tg1\tt\tn\tclosed\toracle\tmatch\terror"; }

std::string to_tsv_row(const VerificationReport& report) {
  std::ostringstream row;
  row << report.identity << '\t' << to_string(report.g0) << '\t' << to_string(report.g1) << '\t'
      << report.t << '\t' << report.n << '\t' << report.closed.value_or("") << '\t'
      << report.oracle.value_or("") << '\t' << (report.match ? "true" : "false") << '\t'
      << (report.error ? report.error->message : "");
  return row.str();
}

nlohmann::ordered_json to_json(const IdentityDescriptor& desc) {
  nlohmann::ordered_json j;
  j["id"] = desc.id;
  j["operation"] = desc.operation;
  j["kind"] = std::string(to_string(desc.kind));
  j["summand"] = desc.summand;
  j["anchor"] = desc.anchor;
  j["seeds"] = seeds_label(desc);
  j["t"] = desc.fixed_t ? nlohmann::ordered_json(*desc.fixed_t) : nlohmann::ordered_json("any");
  j["n_domain"] = n_domain_label(desc);
  return j;
}

std::string identity_tsv_header() { return "id\toperation\tkind\tsummand\tanchor\tseeds\tt\tn_domain"; }

std::string to_tsv_row(const IdentityDescriptor& desc) {
  std::ostringstream row;
  row << desc.id << '\t' << desc.operation << '\t' << to_string(desc.kind) << '\t'
      << desc.summand << '\t' << desc.anchor << '\t' << seeds_label(desc) << '\t'
      << (desc.fixed_t ? std::to_string(*desc.fixed_t) : "any") << '\t' << n_domain_label(desc);
  return row.str();
}

}  // namespace gibsum
