#include "monicgp/verdict.hpp"

namespace monicgp {

const char* to_string(Status s) {
  switch (s) {
    case Status::Holds:
      return "Holds";
    case Status::Fails:
      return "Fails";
    case Status::UnknownUpTo:
      return "UnknownUpTo";
  }
  return "?";
}

Verdict Verdict::holds(Certificate c, std::string detail) {
  Verdict v;
  v.status = Status::Holds;
  v.certificate = std::move(c);
  v.detail = std::move(detail);
  return v;
}

Verdict Verdict::fails(std::optional<long> witness, std::string detail) {
  Verdict v;
  v.status = Status::Fails;
  v.witness = witness;
  v.detail = std::move(detail);
  return v;
}

Verdict Verdict::unknown(long bound, std::string detail, bool complete) {
  Verdict v;
  v.status = Status::UnknownUpTo;
  v.bound = bound;
  v.detail = std::move(detail);
  v.complete = complete;
  return v;
}

Verdict conjunction(const std::vector<Verdict>& parts, const std::string& detail) {
  for (const auto& p : parts)
    if (p.is_fails()) {
      Verdict v = p;
      if (!detail.empty()) v.detail = detail + ": " + p.detail;
      return v;
    }
  long bound = -1;
  bool any_unknown = false, complete = true;
  for (const auto& p : parts)
    if (p.is_unknown()) {
      any_unknown = true;
      complete = complete && p.complete;
      if (p.bound && (bound < 0 || *p.bound < bound)) bound = *p.bound;
    }
  if (any_unknown) return Verdict::unknown(bound < 0 ? 0 : bound, detail, complete);
  return Verdict::holds({"conjunction", {static_cast<long>(parts.size())}, std::nullopt}, detail);
}

}  // namespace monicgp
