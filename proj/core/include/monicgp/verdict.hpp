#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monicgp/matrix.hpp"

namespace monicgp {

enum class Status { Holds, Fails, UnknownUpTo };
const char* to_string(Status s);

/// Machine-checkable evidence for a Holds verdict.
struct Certificate {
  std::string kind;           // e.g. "isomorphism", "syzygy-period", "projective"
  std::vector<long> data;     // e.g. the syzygy indices (i, j)
  std::optional<Matrix> matrix;
};

/// Three-valued answer to a question that may quantify over infinitely many
/// degrees or over an infinite field.
struct Verdict {
  Status status = Status::UnknownUpTo;
  std::optional<Certificate> certificate;
  std::optional<long> witness;  // degree, vertex, ... depending on the question
  std::string detail;
  std::optional<long> bound;
  /// True when every degree up to `bound` was actually evaluated.
  bool complete = true;

  static Verdict holds(Certificate c, std::string detail = "");
  static Verdict fails(std::optional<long> witness, std::string detail);
  static Verdict unknown(long bound, std::string detail = "", bool complete = true);

  bool is_holds() const { return status == Status::Holds; }
  bool is_fails() const { return status == Status::Fails; }
  bool is_unknown() const { return status == Status::UnknownUpTo; }
  /// Holds, or Unknown with nothing refuted through the bound.
  bool bounded_ok() const { return status == Status::Holds || (is_unknown() && complete); }
  /// Definite in the bounded sense: a witness, a certificate, or a finished bounded check.
  bool bounded_definite() const { return !is_unknown() || complete; }
};

/// Fails beats Unknown beats Holds.
Verdict conjunction(const std::vector<Verdict>& parts, const std::string& detail = "");

}  // namespace monicgp
