#include "mzv/relations.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <stdexcept>

#include <json.hpp>

namespace mzv {

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::certified: return "certified";
    case CertificateStatus::trivial: return "trivial";
    case CertificateStatus::not_certified: return "not certified";
    case CertificateStatus::insufficient_precision: return "insufficient precision";
  }
  return "unknown";
}

std::string to_string(PiNormalization p) { return p == PiNormalization::even_zeta ? "zeta(2a)" : "zeta(2)^a"; }

BasisConfig load_basis_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read basis file " + file.string());
  nlohmann::json doc = nlohmann::json::parse(in);
  BasisConfig cfg;
  if (doc.contains("pi_factor")) {
    const std::string p = doc.at("pi_factor").get<std::string>();
    if (p == to_string(PiNormalization::even_zeta))
      cfg.normalization = PiNormalization::even_zeta;
    else if (p == to_string(PiNormalization::zeta2_power))
      cfg.normalization = PiNormalization::zeta2_power;
    else
      throw std::invalid_argument("pi_factor must be \"zeta(2a)\" or \"zeta(2)^a\"");
  }
  for (const auto& g : doc.value("generators", nlohmann::json::array())) {
    Index k(g.get<std::vector<int>>());
    if (k.empty() || !k.admissible()) throw std::invalid_argument("basis generator must be a nonempty admissible index");
    if (std::find(cfg.extra_generators.begin(), cfg.extra_generators.end(), k) == cfg.extra_generators.end())
      cfg.extra_generators.push_back(k);
  }
  return cfg;
}

namespace {

std::string zeta_label(const Index& k) {
  std::string out = "z(";
  for (std::size_t i = 0; i < k.depth(); ++i) {
    if (i) out += ',';
    out += std::to_string(k[i]);
  }
  return out + ")";
}

std::string monomial_label(int a, PiNormalization norm, const std::vector<Index>& factors) {
  std::string out;
  if (norm == PiNormalization::even_zeta) {
    out = "z(" + std::to_string(2 * a) + ")";
  } else {
    out = "z(2)";
    if (a > 1) out += "^" + std::to_string(a);
  }
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    out += "*" + zeta_label(factors[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

std::vector<BasisElement> pi2_basis(int weight, const BasisConfig& cfg) {
  if (weight < 0) throw std::invalid_argument("weight must be nonnegative");
  // Generators sorted by weight, then canonical index order.
  std::vector<Index> generators;
  for (int s = 3; s <= weight; s += 2) generators.push_back(Index{s});
  for (const auto& g : cfg.extra_generators)
    if (g.weight() <= weight) generators.push_back(g);
  std::sort(generators.begin(), generators.end(), [](const Index& x, const Index& y) {
    return x.weight() != y.weight() ? x.weight() < y.weight() : x < y;
  });

  std::vector<BasisElement> out;
  for (int a = 1; 2 * a <= weight; ++a) {
    std::vector<Index> chosen;
    std::function<void(std::size_t, int)> walk = [&](std::size_t start, int remaining) {
      if (remaining == 0) {
        out.push_back({monomial_label(a, cfg.normalization, chosen), weight, a, cfg.normalization, chosen});
        return;
      }
      for (std::size_t g = start; g < generators.size(); ++g) {
        if (generators[g].weight() > remaining) break;
        chosen.push_back(generators[g]);
        walk(g, remaining - generators[g].weight());
        chosen.pop_back();
      }
    };
    walk(0, weight - 2 * a);
  }
  return out;
}

BigReal basis_value(const BasisElement& e, Evaluator& ev) {
  BigReal value = BigReal::exact(Real(1L, ev.config().working_bits()));
  if (e.normalization == PiNormalization::even_zeta) {
    value *= ev.eval_admissible(Index{2 * e.pi_power});
  } else {
    const BigReal z2 = ev.eval_admissible(Index{2});
    for (int i = 0; i < e.pi_power; ++i) value *= z2;
  }
  for (const auto& f : e.factors) value *= ev.eval_admissible(f);
  return value;
}

std::string RelationCertificate::expression() const {
  const std::string lhs = scale == 1 ? target_id : scale.get_str() + "*[" + target_id + "]";
  if (status == CertificateStatus::trivial) return lhs + " = 0";
  if (status != CertificateStatus::certified || relation.empty()) return "";
  std::string out = lhs + " =";
  bool first = true;
  for (std::size_t i = 1; i < relation.size(); ++i) {
    if (relation[i] == 0) continue;
    Rational c(-relation[i], relation[0]);
    c.canonicalize();
    const Rational mag = abs(c);
    out += first ? (c < 0 ? " -" : " ") : (c < 0 ? " - " : " + ");
    if (mag != 1) out += mag.get_str() + "*";
    out += basis[i];
    first = false;
  }
  if (first) out += " 0";
  return out;
}

RelationCertificate verify_congruence_mod_pi2(const BigReal& lhs, const BigReal& rhs, int weight, Evaluator& ev,
                                              const CertifyConfig& cfg, const BasisConfig& basis_cfg,
                                              const std::string& target_id, const Integer& scale) {
  const int digits = ev.config().precision_digits;
  RelationCertificate cert;
  cert.target_id = target_id;
  cert.weight = weight;
  cert.threshold = std::pow(10.0, -(digits - cfg.threshold_slack));
  cert.basis.push_back("target");
  cert.scale = scale;

  BigReal diff = (lhs - rhs) * Rational(scale);
  cert.residual = diff.value.abs();
  if (abs_upper(diff.value) <= cert.threshold) {
    cert.status = CertificateStatus::trivial;
    cert.relation = {Integer(1)};
    cert.message = "difference below threshold";
    return cert;
  }

  cert.elements = pi2_basis(weight, basis_cfg);
  if (cert.elements.empty()) {
    cert.status = CertificateStatus::not_certified;
    cert.message = "the pi^2 ideal has no basis monomials at weight " + std::to_string(weight);
    return cert;
  }
  std::vector<BigReal> values{diff};
  for (const auto& e : cert.elements) {
    cert.basis.push_back(e.label);
    values.push_back(basis_value(e, ev));
  }

  PslqConfig pc;
  pc.precision_digits = digits;
  pc.threshold_slack = cfg.threshold_slack;
  pc.max_coefficient = cfg.max_coefficient;
  PslqResult r = integer_relation(values, pc);
  if (r.status == PslqStatus::insufficient_precision) {
    cert.status = CertificateStatus::insufficient_precision;
    cert.message = "PSLQ exhausted " + std::to_string(digits) + " digits after " + std::to_string(r.iterations) +
                   " iterations";
    return cert;
  }
  if (r.status == PslqStatus::no_relation) {
    cert.status = CertificateStatus::not_certified;
    cert.message = "no relation with coefficients <= " + std::to_string(static_cast<long long>(cfg.max_coefficient)) +
                   " (norm bound " + std::to_string(r.norm_bound) + ")";
    return cert;
  }
  cert.relation = r.relation;
  cert.residual = r.residual;
  const Integer& lead = cert.relation.front();
  if (lead == 0) {
    cert.status = CertificateStatus::not_certified;
    cert.message = "relation found among basis elements only; target coefficient is zero";
    return cert;
  }
  if (abs(lead) > cfg.max_denominator) {
    cert.status = CertificateStatus::not_certified;
    cert.message = "target coefficient " + lead.get_str() + " exceeds denominator bound " +
                   std::to_string(cfg.max_denominator);
    return cert;
  }
  if (abs_upper(cert.residual) > cert.threshold) {
    cert.status = CertificateStatus::not_certified;
    cert.message = "residual above threshold";
    return cert;
  }
  cert.status = CertificateStatus::certified;
  return cert;
}

Real recheck_residual(const RelationCertificate& cert, const BigReal& difference, Evaluator& ev) {
  const mpfr_prec_t bits = ev.config().working_bits();
  Real sum = difference.value * Real(Rational(cert.relation.at(0) * cert.scale), bits);
  for (std::size_t i = 0; i < cert.elements.size() && i + 1 < cert.relation.size(); ++i) {
    sum += basis_value(cert.elements[i], ev).value * Real(Rational(cert.relation[i + 1]), bits);
  }
  return sum.abs();
}

}  // namespace mzv
