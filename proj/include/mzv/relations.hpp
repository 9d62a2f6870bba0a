#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mzv/numeric.hpp"
#include "mzv/pslq.hpp"

namespace mzv {

/// How the factor pi^(2a) of a basis monomial is represented. Both are
/// rational multiples of pi^(2a); the choice only changes the denominators a
/// relation needs.
enum class PiNormalization {
  even_zeta,   // zeta(2a)
  zeta2_power  // zeta(2)^a
};

std::string to_string(PiNormalization p);

/// A monomial pi^(2a) * prod zeta(factor_i) (a >= 1) of the ideal generated by pi^2.
struct BasisElement {
  std::string label;
  int weight = 0;
  int pi_power = 0;  // a
  PiNormalization normalization = PiNormalization::even_zeta;
  std::vector<Index> factors;
};

/// Algebra generators used to build basis monomials besides zeta(2):
/// all zeta(odd >= 3), plus these extra (depth >= 2) generators.
struct BasisConfig {
  std::vector<Index> extra_generators{Index{3, 5}, Index{3, 7}, Index{3, 3, 5}};
  PiNormalization normalization = PiNormalization::even_zeta;
};

/// Reads {"generators": [[3,5],[3,7],[3,3,5], ...], "pi_factor": "zeta(2a)"|"zeta(2)^a"}
/// (both keys optional) and appends the listed indices to the default extras.
BasisConfig load_basis_config(const std::filesystem::path& file);

/// All monomials pi^(2a) * (product of generators) of exactly this weight with a >= 1.
std::vector<BasisElement> pi2_basis(int weight, const BasisConfig& cfg = {});

BigReal basis_value(const BasisElement& e, Evaluator& ev);

struct CertifyConfig {
  double max_coefficient = 1e6;
  /// Largest |coefficient of the target| accepted: the common denominator of
  /// the rational pi^2-combination it equals.
  long max_denominator = 120;
  /// Acceptance threshold 10^-(precision_digits - threshold_slack).
  int threshold_slack = 10;
};

enum class CertificateStatus {
  certified,              // nontrivial relation with the target in the pi^2 span
  trivial,                // |lhs - rhs| already below the threshold
  not_certified,          // no relation within the coefficient bounds
  insufficient_precision  // PSLQ ran out of precision
};

std::string to_string(CertificateStatus s);

/// Numerical evidence that a target lies in the pi^2 ideal: an integer vector
/// v with |v_0 * target + sum_i v_i * basis_i| <= threshold and v_0 != 0.
struct RelationCertificate {
  std::string target_id;
  int weight = 0;
  CertificateStatus status = CertificateStatus::not_certified;
  /// The target is scale * (lhs - rhs); scale clears denominators that the
  /// identity itself states (e.g. powers of 4), before any relation search.
  Integer scale = 1;
  std::vector<Integer> relation;      // relation[0] multiplies the target
  std::vector<std::string> basis;     // labels, basis[0] == "target"
  std::vector<BasisElement> elements; // basis monomials (without the target)
  Real residual;
  double threshold = 0.0;
  std::string message;

  [[nodiscard]] bool ok() const noexcept {
    return status == CertificateStatus::certified || status == CertificateStatus::trivial;
  }
  /// "target = -1/2*z(2)*z(3) + ..." for certified results.
  [[nodiscard]] std::string expression() const;
};

/// Certifies scale * (lhs - rhs) in the pi^2 ideal at the given weight.
RelationCertificate verify_congruence_mod_pi2(const BigReal& lhs, const BigReal& rhs, int weight, Evaluator& ev,
                                              const CertifyConfig& cfg = {}, const BasisConfig& basis = {},
                                              const std::string& target_id = "target", const Integer& scale = 1);

/// Recomputes the certificate's residual from a fresh lhs - rhs (unscaled) and
/// the basis evaluated by `ev` (typically at higher precision).
Real recheck_residual(const RelationCertificate& cert, const BigReal& difference, Evaluator& ev);

}  // namespace mzv
