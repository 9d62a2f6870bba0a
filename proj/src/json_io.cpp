#include "mzv/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace mzv {

namespace {

Index index_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("index must be a JSON array of positive integers");
  return Index(j.get<std::vector<int>>());
}

Integer integer_from_string(const std::string& s) {
  Integer z;
  if (z.set_str(s, 10) != 0) throw std::invalid_argument("malformed integer '" + s + "'");
  return z;
}

/// Decimal digits shown in a scientific-notation string such as "-1.2345e+00".
int significant_digits(const std::string& s) {
  int digits = 0;
  for (char c : s) {
    if (c == 'e' || c == 'E') break;
    if (c >= '0' && c <= '9') ++digits;
  }
  return std::max(digits, 1);
}

BigReal parse_decimal(const std::string& s) {
  const int digits = significant_digits(s);
  Real v(s, digits_to_bits(digits + 10));
  // One unit in the last printed place.
  const double mag = v.is_zero() ? 0.0 : std::floor(v.log10_abs());
  return BigReal(std::move(v), std::pow(10.0, mag - (digits - 1)));
}

}  // namespace

Json to_json(const IndexCombination& x) {
  Json terms = Json::array();
  for (const auto& [k, c] : x.terms()) {
    terms.push_back({{"index", k.entries()}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return Json{{"terms", std::move(terms)}};
}

IndexCombination combination_from_json(const Json& j) {
  IndexCombination out;
  for (const auto& t : j.at("terms")) {
    Rational c(integer_from_string(t.at("num").get<std::string>()), integer_from_string(t.at("den").get<std::string>()));
    if (c.get_den() == 0) throw std::invalid_argument("zero denominator");
    c.canonicalize();
    out.add_term(index_from_json(t.at("index")), c);
  }
  return out;
}

Json to_json(const RegPolynomial& p) {
  Json out = Json::object();
  for (int d = 0; d <= p.degree(); ++d) {
    const IndexCombination& c = p.coefficient(d);
    if (!c.is_zero()) out["T^" + std::to_string(d)] = to_json(c);
  }
  return out;
}

RegPolynomial reg_polynomial_from_json(const Json& j) {
  RegPolynomial out;
  for (const auto& [key, value] : j.items()) {
    if (key.rfind("T^", 0) != 0) throw std::invalid_argument("expected keys of the form T^d, got '" + key + "'");
    const int degree = std::stoi(key.substr(2));
    if (degree < 0) throw std::invalid_argument("negative degree");
    out.add(degree, combination_from_json(value));
  }
  return out;
}

Json to_json(const SymbolicSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
  return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

SymbolicSeries symbolic_series_from_json(const Json& j) {
  std::vector<IndexCombination> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(combination_from_json(c));
  if (static_cast<int>(coeffs.size()) != j.at("order").get<int>())
    throw std::invalid_argument("series order does not match coefficient count");
  return SymbolicSeries(std::move(coeffs));
}

Json to_json(const NumericSeries& s, int digits) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(c.to_string(digits));
  return Json{{"order", s.order()}, {"digits", digits}, {"coeffs", std::move(coeffs)}};
}

NumericSeries numeric_series_from_json(const Json& j) {
  std::vector<BigReal> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_decimal(c.get<std::string>()));
  if (static_cast<int>(coeffs.size()) != j.at("order").get<int>())
    throw std::invalid_argument("series order does not match coefficient count");
  return NumericSeries(std::move(coeffs));
}

Json to_json(const PslqResult& r, int digits) {
  Json relation = Json::array();
  for (const auto& v : r.relation) relation.push_back(v.get_str());
  return Json{{"status", to_string(r.status)},
              {"relation", std::move(relation)},
              {"residual", r.residual.is_zero() ? std::string("0") : r.residual.to_string(6)},
              {"norm_bound", r.norm_bound},
              {"iterations", r.iterations},
              {"digits", digits}};
}

Json to_json(const RelationCertificate& c) {
  Json relation = Json::array();
  for (const auto& v : c.relation) relation.push_back(v.get_str());
  Json elements = Json::array();
  for (const auto& e : c.elements) {
    Json factors = Json::array();
    for (const auto& f : e.factors) factors.push_back(f.entries());
    elements.push_back({{"label", e.label},
                        {"pi_power", e.pi_power},
                        {"pi_factor", to_string(e.normalization)},
                        {"factors", std::move(factors)}});
  }
  return Json{{"target_id", c.target_id},
              {"weight", c.weight},
              {"status", to_string(c.status)},
              {"scale", c.scale.get_str()},
              {"relation", std::move(relation)},
              {"basis", c.basis},
              {"elements", std::move(elements)},
              {"residual", c.residual.is_zero() ? std::string("0") : c.residual.to_string(6)},
              {"threshold", c.threshold},
              {"expression", c.expression()},
              {"message", c.message}};
}

RelationCertificate certificate_from_json(const Json& j) {
  RelationCertificate c;
  c.target_id = j.at("target_id").get<std::string>();
  c.weight = j.at("weight").get<int>();
  const std::string status = j.at("status").get<std::string>();
  bool known = false;
  for (auto s : {CertificateStatus::certified, CertificateStatus::trivial, CertificateStatus::not_certified,
                 CertificateStatus::insufficient_precision}) {
    if (to_string(s) == status) {
      c.status = s;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("unknown certificate status '" + status + "'");
  c.scale = integer_from_string(j.at("scale").get<std::string>());
  for (const auto& v : j.at("relation")) c.relation.push_back(integer_from_string(v.get<std::string>()));
  c.basis = j.at("basis").get<std::vector<std::string>>();
  for (const auto& e : j.at("elements")) {
    BasisElement be;
    be.label = e.at("label").get<std::string>();
    be.pi_power = e.at("pi_power").get<int>();
    be.normalization = e.at("pi_factor").get<std::string>() == to_string(PiNormalization::zeta2_power)
                           ? PiNormalization::zeta2_power
                           : PiNormalization::even_zeta;
    be.weight = 2 * be.pi_power;
    for (const auto& f : e.at("factors")) {
      be.factors.push_back(index_from_json(f));
      be.weight += be.factors.back().weight();
    }
    c.elements.push_back(std::move(be));
  }
  const std::string residual = j.at("residual").get<std::string>();
  c.residual = residual == "0" ? Real::zero(64) : Real(residual, 64);
  c.threshold = j.at("threshold").get<double>();
  c.message = j.at("message").get<std::string>();
  return c;
}

Json to_json(const SuiteReport& r) {
  Json out = Json::array();
  for (const auto& c : r.cases) {
    out.push_back({{"case", c.id},
                   {"status", c.passed ? "pass" : "fail"},
                   {"residual", c.residual},
                   {"certificate", c.certificate ? to_json(*c.certificate) : Json(nullptr)},
                   {"detail", c.detail}});
  }
  return out;
}

SuiteReport report_from_json(const Json& j, const std::string& suite) {
  SuiteReport r;
  r.suite = suite;
  for (const auto& c : j) {
    CaseResult cr;
    cr.id = c.at("case").get<std::string>();
    const std::string status = c.at("status").get<std::string>();
    if (status != "pass" && status != "fail") throw std::invalid_argument("unknown case status '" + status + "'");
    cr.passed = status == "pass";
    cr.residual = c.at("residual").get<std::string>();
    if (!c.at("certificate").is_null()) cr.certificate = certificate_from_json(c.at("certificate"));
    cr.detail = c.at("detail").get<std::string>();
    r.cases.push_back(std::move(cr));
  }
  return r;
}

}  // namespace mzv
