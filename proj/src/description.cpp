#include "relfreq/description.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "relfreq/kofn.hpp"

namespace relfreq {

Family parse_family(std::string_view text) {
  if (text == "kofn-g") return Family::kofn_g;
  if (text == "lincon-f") return Family::lincon_f;
  if (text == "ladder") return Family::ladder;
  if (text == "custom-matrices") return Family::custom_matrices;
  throw ParseError("unknown family '" + std::string(text) + "'");
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kofn_g: return "kofn-g";
    case Family::lincon_f: return "lincon-f";
    case Family::ladder: return "ladder";
    case Family::custom_matrices: return "custom-matrices";
  }
  return "unknown";
}

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

Rational rational_field(const json& value, const std::string& field) {
  try {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
  } catch (const ParseError& e) {
    field_error(field, e.what());
  }
  field_error(field, "expected a rational string such as \"3/4\" or \"0.75\"");
}

std::vector<Rational> rational_list(const json& value, const std::string& field) {
  if (!value.is_array()) field_error(field, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < value.size(); ++i)
    out.push_back(rational_field(value[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

template <class T>
T integer_field(const json& value, const std::string& field) {
  if (!value.is_number_integer()) field_error(field, "expected an integer");
  return value.get<T>();
}

std::string string_field(const json& value, const std::string& field) {
  if (!value.is_string()) field_error(field, "expected a string");
  return value.get<std::string>();
}

}  // namespace

SystemDescription parse_description(const json& root) {
  if (!root.is_object()) throw ParseError("configuration must be a JSON object");
  SystemDescription d;
  if (!root.contains("family")) field_error("family", "missing");
  try {
    d.family = parse_family(string_field(root["family"], "family"));
  } catch (const ParseError& e) {
    field_error("family", e.what());
  }
  if (root.contains("k")) d.k = integer_field<int>(root["k"], "k");
  if (root.contains("n")) d.n = integer_field<std::size_t>(root["n"], "n");
  if (root.contains("terminal")) {
    try {
      d.terminal = parse_terminal(string_field(root["terminal"], "terminal"));
    } catch (const ParseError& e) {
      field_error("terminal", e.what());
    }
  }
  if (root.contains("rate_convention")) {
    const auto text = string_field(root["rate_convention"], "rate_convention");
    if (text == "explicit")
      d.rates = RateConvention::explicit_rates;
    else if (text == "steady-state-mu")
      d.rates = RateConvention::steady_state_mu;
    else
      field_error("rate_convention", "expected explicit|steady-state-mu");
  }
  if (root.contains("components")) {
    const json& list = root["components"];
    if (!list.is_array()) field_error("components", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "components[" + std::to_string(i) + "]";
      const json& c = list[i];
      if (!c.is_object()) field_error(where, "expected an object");
      ComponentEntry e;
      e.id = c.contains("id") ? string_field(c["id"], where + ".id") : "c" + std::to_string(i + 1);
      if (!c.contains("p")) field_error(where + ".p", "missing");
      e.p = rational_field(c["p"], where + ".p");
      if (c.contains("lambda")) e.lambda = rational_field(c["lambda"], where + ".lambda");
      if (c.contains("mu")) e.mu = rational_field(c["mu"], where + ".mu");
      d.components.push_back(std::move(e));
    }
  }
  if (d.family == Family::custom_matrices) {
    if (!root.contains("left")) field_error("left", "missing");
    if (!root.contains("right")) field_error("right", "missing");
    d.custom.left = rational_list(root["left"], "left");
    d.custom.right = rational_list(root["right"], "right");
    if (root.contains("affine")) {
      const json& a = root["affine"];
      if (!a.is_object()) field_error("affine", "expected an object");
      if (a.contains("offset")) d.custom.affine.offset = rational_field(a["offset"], "affine.offset");
      if (a.contains("sign")) d.custom.affine.sign = integer_field<int>(a["sign"], "affine.sign");
    }
    if (!root.contains("matrices") || !root["matrices"].is_array()) field_error("matrices", "expected an array");
    const json& ms = root["matrices"];
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const std::string where = "matrices[" + std::to_string(i) + "]";
      if (!ms[i].is_array()) field_error(where, "expected an array of rows");
      std::vector<std::vector<std::string>> rows;
      for (std::size_t r = 0; r < ms[i].size(); ++r) {
        const std::string rw = where + "[" + std::to_string(r) + "]";
        if (!ms[i][r].is_array()) field_error(rw, "expected an array");
        std::vector<std::string> row;
        for (std::size_t c = 0; c < ms[i][r].size(); ++c) {
          const json& cell = ms[i][r][c];
          if (cell.is_number_integer())
            row.push_back(std::to_string(cell.get<long>()));
          else
            row.push_back(string_field(cell, rw + "[" + std::to_string(c) + "]"));
        }
        rows.push_back(std::move(row));
      }
      d.custom.matrices.push_back(std::move(rows));
    }
  }
  return d;
}

SystemDescription parse_description_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_description(root);
}

SystemDescription load_description(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open configuration '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_description_text(buffer.str());
}

nlohmann::ordered_json description_to_json(const SystemDescription& d) {
  nlohmann::ordered_json out;
  out["family"] = to_string(d.family);
  if (d.k) out["k"] = *d.k;
  if (d.n) out["n"] = *d.n;
  if (d.family == Family::ladder) out["terminal"] = to_string(d.terminal);
  out["rate_convention"] = d.rates == RateConvention::explicit_rates ? "explicit" : "steady-state-mu";
  auto& list = out["components"] = nlohmann::ordered_json::array();
  for (const auto& c : d.components) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["p"] = to_rational_string(c.p);
    if (c.lambda) e["lambda"] = to_rational_string(*c.lambda);
    if (c.mu) e["mu"] = to_rational_string(*c.mu);
    list.push_back(std::move(e));
  }
  if (d.family == Family::custom_matrices) {
    auto rationals = [](const std::vector<Rational>& v) {
      auto a = nlohmann::ordered_json::array();
      for (const auto& r : v) a.push_back(to_rational_string(r));
      return a;
    };
    out["left"] = rationals(d.custom.left);
    out["right"] = rationals(d.custom.right);
    out["affine"] = {{"offset", to_rational_string(d.custom.affine.offset)}, {"sign", d.custom.affine.sign}};
    out["matrices"] = d.custom.matrices;
  }
  return out;
}

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

bool is_number_prefix_of_exponent(const std::string& factor) {
  // "1e" or "2.5E" followed by a sign belongs to a scientific literal.
  if (factor.size() < 2) return false;
  const char last = factor.back();
  if (last != 'e' && last != 'E') return false;
  for (std::size_t i = 0; i + 1 < factor.size(); ++i) {
    const char c = factor[i];
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.') return false;
  }
  return true;
}

}  // namespace

MultilinearPoly parse_polynomial(std::string_view text, const std::vector<std::string>& labels) {
  MultilinearPoly out;
  std::vector<std::pair<int, std::string>> terms;
  int sign = 1;
  std::string current;
  bool seen_content = false;
  bool dangling_operator = false;
  for (char ch : text) {
    if ((ch == '+' || ch == '-')) {
      std::string last_factor = current.substr(current.find_last_of('*') == std::string::npos
                                                   ? 0
                                                   : current.find_last_of('*') + 1);
      if (is_number_prefix_of_exponent(trim(last_factor)) && !current.empty() &&
          !std::isspace(static_cast<unsigned char>(current.back()))) {
        current += ch;
        continue;
      }
      dangling_operator = true;
      if (seen_content) {
        terms.emplace_back(sign, current);
        current.clear();
        seen_content = false;
        sign = ch == '-' ? -1 : 1;
      } else {
        sign *= ch == '-' ? -1 : 1;
      }
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(ch))) seen_content = true, dangling_operator = false;
    current += ch;
  }
  if (dangling_operator) throw ParseError("polynomial '" + std::string(text) + "' ends with an operator");
  if (seen_content) terms.emplace_back(sign, current);
  if (terms.empty()) throw ParseError("empty polynomial '" + std::string(text) + "'");

  for (const auto& [term_sign, body] : terms) {
    Rational coeff(term_sign);
    MultilinearPoly::Monomial ids;
    std::stringstream factors(body);
    std::string factor;
    while (std::getline(factors, factor, '*')) {
      factor = trim(factor);
      if (factor.empty()) throw ParseError("empty factor in polynomial '" + std::string(text) + "'");
      const bool numeric = std::isdigit(static_cast<unsigned char>(factor.front())) || factor.front() == '.';
      if (numeric) {
        coeff *= parse_rational(factor);
        continue;
      }
      auto it = std::find(labels.begin(), labels.end(), factor);
      if (it == labels.end()) throw ValidationError("polynomial references unknown component '" + factor + "'");
      ids.push_back(ComponentId{static_cast<std::uint32_t>(it - labels.begin())});
    }
    out += MultilinearPoly::monomial(std::move(ids), coeff);
  }
  return out;
}

namespace {

Component to_component(const ComponentEntry& e, RateConvention rates) {
  if (rates == RateConvention::steady_state_mu) return Component::steady_state(e.id, e.p, e.mu.value_or(Rational(1)));
  if (!e.lambda) throw ValidationError("component '" + e.id + "': explicit rate convention needs lambda");
  return Component::with_rates(e.id, e.p, *e.lambda, e.mu.value_or(Rational(0)));
}

}  // namespace

PreparedSystem prepare(const SystemDescription& d) {
  if (d.components.empty()) throw ValidationError("component list is empty");
  std::vector<Component> components;
  components.reserve(d.components.size());
  for (const auto& e : d.components) components.push_back(to_component(e, d.rates));

  PreparedSystem out;
  out.meta.family = std::string(to_string(d.family));
  out.meta.unit = d.rates == RateConvention::steady_state_mu ? RateUnit::per_mu : RateUnit::absolute;

  switch (d.family) {
    case Family::kofn_g:
    case Family::lincon_f: {
      if (!d.k) throw ValidationError("k-out-of-n families need k");
      if (d.n && *d.n != components.size())
        throw ValidationError("n = " + std::to_string(*d.n) + " but " + std::to_string(components.size()) +
                              " components given");
      KofnSpec spec{*d.k, components, d.family == Family::kofn_g ? KofnFamily::good : KofnFamily::lincon_fail};
      out.system = build_kofn(spec);
      out.meta.n = components.size();
      break;
    }
    case Family::ladder: {
      if (components.size() % 5 != 0)
        throw ValidationError("ladder components must come in cells of five (a, b, c, S, T)");
      const std::size_t cells = components.size() / 5;
      if (d.n && *d.n + 1 != cells)
        throw ValidationError("n = " + std::to_string(*d.n) + " needs " + std::to_string(5 * (*d.n + 1)) +
                              " components");
      LadderSpec spec;
      spec.terminal = d.terminal;
      for (std::size_t i = 0; i < cells; ++i)
        spec.cells.push_back(LadderCell{components[5 * i], components[5 * i + 1], components[5 * i + 2],
                                        components[5 * i + 3], components[5 * i + 4]});
      out.system = build_ladder(spec);
      out.meta.n = cells - 1;
      break;
    }
    case Family::custom_matrices: {
      std::vector<std::string> labels;
      for (const auto& c : components) labels.push_back(c.label);
      const ComponentValues rates = failure_rates_of(components);
      const std::size_t dim = d.custom.right.size();
      TransferSystem sys;
      sys.left = d.custom.left;
      sys.right = d.custom.right;
      sys.affine = d.custom.affine;
      for (std::size_t i = 0; i < d.custom.matrices.size(); ++i) {
        const auto& rows = d.custom.matrices[i];
        if (rows.size() != dim) throw DimensionError("matrix " + std::to_string(i + 1) + " has wrong row count");
        PolyMatrix m(dim);
        for (std::size_t r = 0; r < dim; ++r) {
          if (rows[r].size() != dim)
            throw DimensionError("matrix " + std::to_string(i + 1) + " row " + std::to_string(r + 1) +
                                 " has wrong length");
          for (std::size_t c = 0; c < dim; ++c) m(r, c) = parse_polynomial(rows[r][c], labels);
        }
        sys.matrices.push_back(MatrixPair::derive(std::move(m), rates));
      }
      sys.validate();
      out.system = ComponentSystem{std::move(sys), std::move(components)};
      out.meta.n = d.custom.matrices.size();
      break;
    }
  }
  return out;
}

ReliabilityReport solve(const SystemDescription& d, Mode mode) {
  const PreparedSystem prepared = prepare(d);
  return evaluate(prepared.system, mode, prepared.meta);
}

namespace {

nlohmann::ordered_json quantity(const Scalar& value, std::string_view per) {
  nlohmann::ordered_json q;
  if (value.is_exact())
    q["rational"] = to_rational_string(value.rational());
  else
    q["rational"] = nullptr;
  q["decimal"] = value.decimal();
  q["per"] = per;
  return q;
}

}  // namespace

nlohmann::ordered_json report_to_json(const ReliabilityReport& report) {
  nlohmann::ordered_json out;
  out["family"] = report.family;
  out["n"] = report.n;
  out["mode"] = to_string(report.mode());
  out["availability"] = quantity(report.availability, "absolute");
  out["unavailability"] = quantity(report.unavailability, "absolute");
  out["frequency"] = quantity(report.frequency, to_string(report.unit));
  out["rate"] = quantity(report.rate, to_string(report.unit));
  return out;
}

Scalar read_report_quantity(const nlohmann::json& q) {
  if (q.contains("rational") && q["rational"].is_string()) return Scalar(parse_rational(q["rational"].get<std::string>()));
  return Scalar(std::stod(q.at("decimal").get<std::string>()));
}

}  // namespace relfreq
