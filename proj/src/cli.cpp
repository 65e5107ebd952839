#include "holdercurve/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "holdercurve/contact.hpp"
#include "holdercurve/errors.hpp"
#include "holdercurve/germ_io.hpp"
#include "holdercurve/holder.hpp"
#include "holdercurve/invariants.hpp"

namespace holdercurve::cli {

namespace {

using nlohmann::json;

// Thrown for requests the tool cannot serve (wrong arity, missing option).
class UnsupportedRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
json int_list(const std::vector<T>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v);
  return out;
}

json pairs_json(const std::vector<CharacteristicPair>& pairs) {
  json out = json::array();
  for (const auto& p : pairs) out.push_back(json::array({p.m, p.n}));
  return out;
}

std::string join(const std::vector<std::int64_t>& values) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i];
  os << ")";
  return os.str();
}

RadiusGrid request_grid(const AnalysisOptions& options) {
  return parse_grid(options.grid.empty() ? "0.1,1e-4,16" : options.grid,
                    options.min_radius);
}

void write_csv(const AnalysisOptions& options, const ContactEstimate& est) {
  if (!options.csv) return;
  std::ofstream csv(*options.csv);
  if (!csv) {
    throw UnsupportedRequest("cannot write CSV to '" + options.csv->string() + "'");
  }
  csv << "r,gap\n" << std::setprecision(17);
  for (const auto& [r, gap] : est.samples) csv << r << "," << gap << "\n";
}

json estimate_json(const ContactEstimate& est) {
  json gaps = json::array();
  for (const auto& [r, gap] : est.samples) gaps.push_back(json::array({r, gap}));
  return json{{"slope", est.slope},
              {"r_squared", est.r_squared},
              {"window", json::array({est.r_min, est.r_max})},
              {"gaps", gaps}};
}

void print_estimate(std::ostream& out, const char* label,
                    const ContactEstimate& est) {
  out << label << std::fixed << std::setprecision(4) << est.slope
      << "  (r^2 = " << std::setprecision(5) << est.r_squared << ", window ["
      << std::scientific << std::setprecision(2) << est.r_min << ", "
      << est.r_max << "])" << std::defaultfloat << "\n";
}

int cmd_invariants(const AnalysisRequest& req, std::ostream& out) {
  const CurveGerm germ = load_germ(req.inputs[0]);
  json branches = json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < germ.size(); ++i) {
    const CharacteristicData data = characteristic_data(germ[i]);
    const PuiseuxBranch model = lipschitz_normal_form(germ[i]);
    branches.push_back({{"index", i},
                        {"multiplicity", multiplicity(germ[i])},
                        {"beta", int_list(data.beta)},
                        {"e", int_list(data.e)},
                        {"pairs", pairs_json(data.pairs)},
                        {"genus", data.genus()},
                        {"normal_form", branch_to_json(model)}});
    text << "branch " << i << ": multiplicity " << germ[i].multiplicity()
         << ", beta " << join(data.beta) << ", e " << join(data.e)
         << ", genus " << data.genus() << ", pairs";
    if (data.pairs.empty()) text << " none";
    for (const auto& p : data.pairs) text << " (" << p.m << "," << p.n << ")";
    text << "\n";
  }
  if (req.options.json) {
    out << json{{"command", "invariants"},
                {"field_order", germ.field_order()},
                {"branches", branches}}
               .dump(2)
        << "\n";
  } else {
    out << text.str();
  }
  return kExitOk;
}

int cmd_contact(const AnalysisRequest& req, std::ostream& out) {
  const CurveGerm germ = load_germ(req.inputs[0]);
  const ContactReport report = contact_report(germ);
  const std::size_t r = report.branch_count;
  if (req.options.json) {
    json contact = json::array();
    json inter = json::array();
    for (std::size_t i = 0; i < r; ++i) {
      json crow = json::array();
      json irow = json::array();
      for (std::size_t j = 0; j < r; ++j) {
        crow.push_back(report.contact[i][j] ? json(report.contact[i][j]->str()) : json());
        irow.push_back(report.intersection[i][j] ? json(*report.intersection[i][j]) : json());
      }
      contact.push_back(crow);
      inter.push_back(irow);
    }
    out << json{{"command", "contact"},
                {"branch_count", r},
                {"contact", contact},
                {"intersection", inter}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << r << " branch" << (r == 1 ? "" : "es") << "\n";
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      out << "branches " << i << "," << j << ": contact "
          << report.contact[i][j]->str() << ", intersection multiplicity "
          << *report.intersection[i][j] << "\n";
    }
  }
  return kExitOk;
}

int cmd_classify(const AnalysisRequest& req, std::ostream& out) {
  const CurveGerm g1 = load_germ(req.inputs[0]);
  const CurveGerm g2 = load_germ(req.inputs[1]);
  const HolderVerdict v =
      classify(g1, g2, ClassifyOptions{req.options.permutation_cap});
  if (req.options.json) {
    json doc{{"command", "classify"},
             {"status", to_string(v.status)},
             {"branch_counts", json::array({g1.size(), g2.size()})},
             {"statement", v.statement()}};
    if (v.matching) doc["sigma"] = *v.matching;
    if (v.k0) {
      doc["k0"] = v.k0->str();
      doc["alpha0"] = *v.alpha0_expression();
      doc["alpha0_decimal"] = *v.alpha0();
    }
    json obs = json::array();
    for (const auto& o : v.obstructions) {
      obs.push_back({{"kind", to_string(o.kind)},
                     {"value", o.value.str()},
                     {"witness", o.witness}});
    }
    doc["obstructions"] = obs;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "status: " << to_string(v.status) << "\n";
  if (v.matching) {
    out << "sigma:";
    for (auto s : *v.matching) out << " " << s;
    out << "\n";
  }
  if (v.k0) {
    out << "k0 = " << v.k0->str() << ", alpha0 = " << *v.alpha0_expression()
        << " = " << std::setprecision(8) << *v.alpha0() << "\n";
    out << "obstructions:\n";
    for (const auto& o : v.obstructions) {
      out << "  " << to_string(o.kind) << " " << o.value.str() << "  ["
          << o.witness << "]\n";
    }
  }
  out << v.statement() << "\n";
  return kExitOk;
}

int cmd_estimate(const AnalysisRequest& req, std::ostream& out) {
  const CurveGerm g1 = load_germ(req.inputs[0]);
  const CurveGerm g2 = load_germ(req.inputs[1]);
  const RadiusGrid grid = request_grid(req.options);
  const auto a = sample_germ(g1, grid, req.options.angles);
  const auto b = sample_germ(g2, grid, req.options.angles);
  const ContactEstimate est = estimate_contact(a, b, grid);
  write_csv(req.options, est);
  if (req.options.json) {
    json doc = estimate_json(est);
    doc["command"] = "estimate";
    doc["angles"] = req.options.angles;
    doc["grid_count"] = grid.size();
    out << doc.dump(2) << "\n";
  } else {
    print_estimate(out, "estimated contact: ", est);
  }
  return kExitOk;
}

int cmd_check_prop1(const AnalysisRequest& req, std::ostream& out) {
  if (!req.options.beta) throw UnsupportedRequest("check-prop1 needs --beta");
  const CurveGerm g1 = load_germ(req.inputs[0]);
  const CurveGerm g2 = load_germ(req.inputs[1]);
  const RadiusGrid grid = request_grid(req.options);
  const auto a = sample_germ(g1, grid, req.options.angles);
  const auto b = sample_germ(g2, grid, req.options.angles);
  const Proposition1Report rep =
      check_proposition1(a, b, *req.options.beta, grid, req.options.tolerance);
  write_csv(req.options, rep.mapped);
  if (req.options.json) {
    out << json{{"command", "check-prop1"},
                {"beta", rep.beta},
                {"alpha", rep.alpha},
                {"tolerance", rep.tolerance},
                {"contact", estimate_json(rep.original)},
                {"mapped_contact", estimate_json(rep.mapped)},
                {"lower_bound_holds", rep.lower_bound_holds},
                {"upper_bound_holds", rep.upper_bound_holds},
                {"pass", rep.passed()}}
               .dump(2)
        << "\n";
  } else {
    print_estimate(out, "contact:        ", rep.original);
    print_estimate(out, "mapped contact: ", rep.mapped);
    out << "alpha = " << rep.alpha << ", tolerance = " << rep.tolerance << "\n"
        << "alpha^2 c' <= c (1+tol): " << (rep.lower_bound_holds ? "yes" : "no") << "\n"
        << "c <= c'/alpha^2 (1+tol): " << (rep.upper_bound_holds ? "yes" : "no") << "\n"
        << (rep.passed() ? "PASS" : "FAIL") << "\n";
  }
  return kExitOk;
}

int cmd_proof_arcs(const AnalysisRequest& req, std::ostream& out) {
  if (!req.options.index) throw UnsupportedRequest("proof-arcs needs --index");
  const CurveGerm germ = load_germ(req.inputs[0]);
  if (req.options.branch >= germ.size()) {
    throw ValidationError("branch index " + std::to_string(req.options.branch) +
                          " out of range for a germ with " +
                          std::to_string(germ.size()) + " branch(es)");
  }
  const PuiseuxBranch& branch = germ[req.options.branch];
  const CharacteristicData data = characteristic_data(branch);
  const std::size_t j = *req.options.index;
  if (j < 1 || j > data.genus()) {
    throw ValidationError("characteristic index " + std::to_string(j) +
                          " outside 1.." + std::to_string(data.genus()));
  }
  const RadiusGrid grid = request_grid(req.options);
  const auto arcs = proof_arcs(branch, j, grid);
  const ContactEstimate c12 = estimate_contact(arcs[0], arcs[1], grid);
  const ContactEstimate c13 = estimate_contact(arcs[0], arcs[2], grid);
  const ContactEstimate c14 = estimate_contact(arcs[0], arcs[3], grid);
  write_csv(req.options, c13);
  const BigRational expected(BigInt(data.beta[j]), BigInt(data.beta[0]));
  if (req.options.json) {
    json arcs_json = json::array();
    for (const auto& arc : arcs) {
      arcs_json.push_back({{"label", arc.meta.label},
                           {"conjugate", arc.meta.conjugate},
                           {"angle", arc.meta.angle}});
    }
    out << json{{"command", "proof-arcs"},
                {"branch", req.options.branch},
                {"index", j},
                {"beta_j", data.beta[j]},
                {"expected_exponent", expected.str()},
                {"arcs", arcs_json},
                {"sigma1_sigma2", estimate_json(c12)},
                {"sigma1_sigma3", estimate_json(c13)},
                {"sigma1_sigma4", estimate_json(c14)}}
               .dump(2)
        << "\n";
  } else {
    out << "beta_" << j << "/n = " << expected.str() << " ("
        << expected.to_double() << ")\n";
    print_estimate(out, "Sigma1 vs Sigma2: ", c12);
    print_estimate(out, "Sigma1 vs Sigma3: ", c13);
    print_estimate(out, "Sigma1 vs Sigma4: ", c14);
  }
  return kExitOk;
}

int emit_error(const AnalysisOptions& options, const char* kind, int code,
               const std::string& message, std::ostream& out, std::ostream& err,
               const TruncationError* truncation = nullptr) {
  if (options.json) {
    json doc{{"error_kind", kind}, {"message", message}, {"exit_code", code}};
    if (truncation && truncation->lower_bound()) {
      doc["lower_bound"] = *truncation->lower_bound();
    }
    if (truncation && truncation->branch_pair()) {
      doc["branch_pair"] = json::array(
          {truncation->branch_pair()->first, truncation->branch_pair()->second});
    }
    out << doc.dump(2) << "\n";
  } else {
    err << "error (" << kind << "): " << message << "\n";
  }
  return code;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "invariants") return Command::Invariants;
  if (name == "contact") return Command::Contact;
  if (name == "classify") return Command::Classify;
  if (name == "estimate") return Command::Estimate;
  if (name == "check-prop1") return Command::CheckProp1;
  if (name == "proof-arcs") return Command::ProofArcs;
  return std::nullopt;
}

const char* command_name(Command command) {
  switch (command) {
    case Command::Invariants:
      return "invariants";
    case Command::Contact:
      return "contact";
    case Command::Classify:
      return "classify";
    case Command::Estimate:
      return "estimate";
    case Command::CheckProp1:
      return "check-prop1";
    case Command::ProofArcs:
      return "proof-arcs";
  }
  return "unknown";
}

std::size_t command_arity(Command command) {
  switch (command) {
    case Command::Classify:
    case Command::Estimate:
    case Command::CheckProp1:
      return 2;
    default:
      return 1;
  }
}

RadiusGrid parse_grid(std::string_view text, double min_radius) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(current);
  if (parts.size() != 3) {
    throw ValidationError("--grid expects r_max,r_min,count, got '" +
                          std::string(text) + "'");
  }
  double r_max = 0.0;
  double r_min = 0.0;
  long long count = 0;
  try {
    std::size_t used = 0;
    r_max = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("trailing");
    r_min = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("trailing");
    count = std::stoll(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ValidationError("--grid has a malformed number: '" + std::string(text) + "'");
  }
  if (count < 8) throw ValidationError("--grid needs at least 8 points");
  if (r_min < min_radius) {
    throw ValidationError("--grid r_min " + parts[1] + " is below the radius floor " +
                          std::to_string(min_radius));
  }
  return RadiusGrid::geometric(r_max, r_min, static_cast<std::size_t>(count));
}

int run(const AnalysisRequest& request, std::ostream& out, std::ostream& err) {
  const auto& options = request.options;
  try {
    const std::size_t arity = command_arity(request.command);
    if (request.inputs.size() != arity) {
      throw UnsupportedRequest(std::string(command_name(request.command)) +
                               " takes " + std::to_string(arity) +
                               " germ file(s), got " +
                               std::to_string(request.inputs.size()));
    }
    switch (request.command) {
      case Command::Invariants:
        return cmd_invariants(request, out);
      case Command::Contact:
        return cmd_contact(request, out);
      case Command::Classify:
        return cmd_classify(request, out);
      case Command::Estimate:
        return cmd_estimate(request, out);
      case Command::CheckProp1:
        return cmd_check_prop1(request, out);
      case Command::ProofArcs:
        return cmd_proof_arcs(request, out);
    }
    throw UnsupportedRequest("unknown command");
  } catch (const ParseError& e) {
    return emit_error(options, "parse_error", kExitInvalidInput, e.what(), out, err);
  } catch (const ValidationError& e) {
    return emit_error(options, "validation_error", kExitInvalidInput, e.what(), out, err);
  } catch (const TruncationError& e) {
    return emit_error(options, "truncation_exceeded", kExitTruncation, e.what(),
                      out, err, &e);
  } catch (const CapExceededError& e) {
    return emit_error(options, "cap_exceeded", kExitUnsupported, e.what(), out, err);
  } catch (const UnsupportedRequest& e) {
    return emit_error(options, "unsupported_request", kExitUnsupported, e.what(), out, err);
  } catch (const NumericError& e) {
    return emit_error(options, "numeric_failure", kExitUnsupported, e.what(), out, err);
  } catch (const std::exception& e) {
    return emit_error(options, "internal_error", kExitUnsupported, e.what(), out, err);
  }
}

int report_usage_error(const std::string& message, bool json_mode,
                       std::ostream& out, std::ostream& err) {
  AnalysisOptions options;
  options.json = json_mode;
  return emit_error(options, "usage_error", kExitUnsupported, message, out, err);
}

}  // namespace holdercurve::cli
