#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mzv/real.hpp"

namespace mzv {

struct PslqConfig {
  /// Digits the inputs are trusted to; must be at least 20.
  int precision_digits = 60;
  /// A relation is accepted when |sum v_i x_i| <= 10^-(precision_digits - threshold_slack).
  int threshold_slack = 10;
  /// Largest admissible |v_i|.
  double max_coefficient = 1e6;
  long max_iterations = 100000;
};

enum class PslqStatus {
  found,
  /// Every relation has a coefficient above max_coefficient (norm bound).
  no_relation,
  /// The integer matrices outgrew the available precision before a decision,
  /// or the candidate relation is too tall to be distinguished from chance
  /// (n values with d-digit coefficients need more than n*d accepted digits).
  insufficient_precision,
};

std::string to_string(PslqStatus s);

struct PslqResult {
  PslqStatus status = PslqStatus::no_relation;
  std::vector<Integer> relation;  // empty unless found
  Real residual;                  // |sum relation_i * x_i|
  double norm_bound = 0.0;        // lower bound on the norm of any relation
  long iterations = 0;
};

/// Two-level-free (plain) PSLQ integer relation search over the given values.
///
/// Throws std::invalid_argument when precision_digits < 20 or when the inputs
/// carry error bounds above 10^-precision_digits.
PslqResult integer_relation(const std::vector<BigReal>& values, const PslqConfig& cfg = {});

}  // namespace mzv
