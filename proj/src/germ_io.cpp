#include "holdercurve/germ_io.hpp"

#include <fstream>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>

#include "holdercurve/errors.hpp"

namespace holdercurve {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ParseError(where + ": unknown key '" + key + "'");
  }
}

std::int64_t positive_integer(const json& obj, const char* key,
                              const std::string& where) {
  if (!obj.contains(key)) {
    throw ParseError(where + ": missing required field '" + key + "'");
  }
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw ParseError(where + "." + key + ": expected an integer");
  }
  const auto value = v.get<std::int64_t>();
  if (value < 1) {
    throw ValidationError(where + "." + key + ": must be a positive integer, got " +
                          std::to_string(value));
  }
  return value;
}

BigRational rational_field(const json& v, const std::string& where) {
  if (v.is_number_integer()) return BigRational(v.get<std::int64_t>());
  if (!v.is_string()) {
    throw ParseError(where + ": expected a rational string \"p/q\"");
  }
  try {
    return BigRational::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

CyclotomicNumber parse_coeff(const json& v, int declared, int order,
                             const std::string& where) {
  if (!v.is_object() || v.size() != 1) {
    throw ParseError(where +
                     ": coeff must be {\"rational\": ...} or {\"cyclotomic\": ...}");
  }
  if (v.contains("rational")) {
    return CyclotomicNumber::rational(order, rational_field(v.at("rational"), where + ".rational"));
  }
  if (!v.contains("cyclotomic")) {
    throw ParseError(where + ": unknown coefficient kind '" + v.begin().key() + "'");
  }
  const auto& parts = v.at("cyclotomic");
  if (!parts.is_array()) throw ParseError(where + ".cyclotomic: expected an array");
  const std::int64_t step = order / declared;
  auto sum = CyclotomicNumber::zero(order);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string at = where + ".cyclotomic[" + std::to_string(i) + "]";
    const auto& part = parts[i];
    if (!part.is_array() || part.size() != 2 || !part[1].is_number_integer()) {
      throw ParseError(at + ": expected [\"p/q\", k]");
    }
    const BigRational c = rational_field(part[0], at);
    std::int64_t k = part[1].get<std::int64_t>() % declared;
    if (k < 0) k += declared;
    sum = sum + CyclotomicNumber::rational(order, c) *
                    CyclotomicNumber::root_of_unity(order, k * step);
  }
  return sum;
}

}  // namespace

CurveGerm parse_germ(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("germ: expected a JSON object");
  check_keys(doc, "germ", {"zeta_order", "branches", "name", "comment"});
  if (!doc.contains("branches") || !doc.at("branches").is_array()) {
    throw ParseError("germ: missing 'branches' array");
  }
  const auto& branches = doc.at("branches");
  if (branches.empty()) throw ValidationError("germ: 'branches' is empty");

  std::int64_t mult_lcm = 1;
  std::vector<std::int64_t> mults;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    const std::string where = "branches[" + std::to_string(b) + "]";
    if (!branches[b].is_object()) throw ParseError(where + ": expected an object");
    mults.push_back(positive_integer(branches[b], "n", where));
    mult_lcm = std::lcm(mult_lcm, mults.back());
    if (mult_lcm > kMaxFieldOrder) {
      throw ValidationError("lcm of branch multiplicities exceeds " +
                            std::to_string(kMaxFieldOrder));
    }
  }
  std::int64_t declared = mult_lcm;
  if (doc.contains("zeta_order")) {
    declared = positive_integer(doc, "zeta_order", "germ");
  }
  const std::int64_t order = std::lcm(declared, mult_lcm);
  if (order > kMaxFieldOrder) {
    throw ValidationError("cyclotomic field order " + std::to_string(order) +
                          " exceeds " + std::to_string(kMaxFieldOrder));
  }

  std::vector<PuiseuxBranch> parsed;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    const std::string where = "branches[" + std::to_string(b) + "]";
    const auto& br = branches[b];
    check_keys(br, where, {"n", "truncation", "terms", "label", "comment"});
    const std::int64_t truncation = positive_integer(br, "truncation", where);
    std::vector<PuiseuxTerm> terms;
    if (br.contains("terms")) {
      const auto& jt = br.at("terms");
      if (!jt.is_array()) throw ParseError(where + ".terms: expected an array");
      for (std::size_t t = 0; t < jt.size(); ++t) {
        const std::string at = where + ".terms[" + std::to_string(t) + "]";
        if (!jt[t].is_object()) throw ParseError(at + ": expected an object");
        check_keys(jt[t], at, {"exp", "coeff"});
        const std::int64_t exp = positive_integer(jt[t], "exp", at);
        if (!jt[t].contains("coeff")) throw ParseError(at + ": missing 'coeff'");
        auto coeff = parse_coeff(jt[t].at("coeff"), static_cast<int>(declared),
                                 static_cast<int>(order), at + ".coeff");
        if (coeff.is_zero()) {
          throw ValidationError(at + ": zero coefficient listed for t^" +
                                std::to_string(exp));
        }
        terms.push_back({exp, std::move(coeff)});
      }
    }
    try {
      parsed.emplace_back(mults[b], std::move(terms), truncation,
                          static_cast<int>(order));
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  return CurveGerm(std::move(parsed));
}

CurveGerm load_germ(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read germ file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_germ(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  } catch (const TruncationError& e) {
    throw TruncationError(path.string() + ": " + e.what(), e.lower_bound(),
                          e.branch_pair());
  }
}

nlohmann::json coeff_to_json(const CyclotomicNumber& coeff) {
  const auto c = coeff.coeffs();
  bool rational = true;
  for (std::size_t j = 1; j < c.size(); ++j) rational = rational && c[j].is_zero();
  if (rational) return json{{"rational", c[0].str()}};
  json parts = json::array();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!c[j].is_zero()) parts.push_back(json::array({c[j].str(), j}));
  }
  return json{{"cyclotomic", parts}};
}

nlohmann::json branch_to_json(const PuiseuxBranch& branch) {
  json terms = json::array();
  for (const auto& t : branch.terms()) {
    terms.push_back({{"exp", t.exponent}, {"coeff", coeff_to_json(t.coeff)}});
  }
  return json{{"n", branch.multiplicity()},
              {"truncation", branch.truncation()},
              {"terms", terms}};
}

nlohmann::json germ_to_json(const CurveGerm& germ) {
  json branches = json::array();
  for (const auto& b : germ.branches()) branches.push_back(branch_to_json(b));
  return json{{"zeta_order", germ.field_order()}, {"branches", branches}};
}

}  // namespace holdercurve
