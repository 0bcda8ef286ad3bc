#include "apolar/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "apolar/errors.hpp"

namespace apolar::io {

using ordered_json = nlohmann::ordered_json;

std::string serialize(const Form& f) {
  ordered_json j;
  j["space"] = f.space() == Space::OnV ? "V" : "V*";
  j["nvars"] = f.nvars();
  j["degree"] = f.degree();
  auto terms = ordered_json::array();
  for (const auto& [idx, coef] : f.terms()) {
    ordered_json t;
    t["exp"] = std::vector<unsigned>(idx.exponents().begin(), idx.exponents().end());
    t["coef"] = to_string(coef);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

namespace {

Rational coefficient_from_json(const ordered_json& c) {
  if (c.is_string()) return parse_rational(c.get<std::string>());
  if (c.is_number_integer()) return Rational(c.get<long>());
  throw InputError("coefficients must be rational strings or integers");
}

}  // namespace

Form parse_form(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("form is not valid JSON: ") + e.what());
  }
  // Bundles produced by `vsp plant` carry the form under "form".
  if (j.is_object() && j.contains("form") && !j.contains("terms")) j = j["form"];
  try {
    const auto space_text = j.at("space").get<std::string>();
    Space space;
    if (space_text == "V") {
      space = Space::OnV;
    } else if (space_text == "V*") {
      space = Space::OnDual;
    } else {
      throw InputError("space must be \"V\" or \"V*\"");
    }
    const long nvars = j.at("nvars").get<long>();
    const long degree = j.at("degree").get<long>();
    if (nvars < 1 || degree < 0) throw InputError("nvars must be >= 1 and degree >= 0");
    Form::Terms terms;
    for (const auto& t : j.at("terms")) {
      std::vector<unsigned> exps;
      for (const auto& e : t.at("exp")) {
        if (!e.is_number_integer() || e.get<long>() < 0) throw InputError("exponents must be non-negative integers");
        exps.push_back(e.get<unsigned>());
      }
      MultiIndex idx(std::move(exps));
      if (terms.count(idx)) throw InputError("duplicate exponent row " + idx.to_string());
      terms.emplace(std::move(idx), coefficient_from_json(t.at("coef")));
    }
    return Form(space, static_cast<std::size_t>(nvars), static_cast<unsigned>(degree), std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed form: ") + e.what());
  }
}

PointVec parse_point(std::string_view text, PointRole role) {
  PointVec p;
  p.role = role;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    p.coords.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return p;
}

std::string format_point(const PointVec& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ',';
    out += to_string(p.coords[i]);
  }
  return out;
}

namespace {

std::vector<PointVec> same_length(std::vector<PointVec> pts) {
  for (const auto& p : pts) {
    if (p.size() != pts.front().size()) throw InputError("points of different lengths");
  }
  return pts;
}

}  // namespace

std::vector<PointVec> parse_points(std::string_view text, PointRole role) {
  // Accept the `vsp plant` bundle as well: {"points": ["1,0,2", ...], ...}.
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    ordered_json j;
    try {
      j = ordered_json::parse(text);
      std::vector<PointVec> pts;
      for (const auto& p : j.at("points")) pts.push_back(parse_point(p.get<std::string>(), role));
      return same_length(std::move(pts));
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed points bundle: ") + e.what());
    }
  }
  std::vector<PointVec> pts;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    pts.push_back(parse_point(line, role));
  }
  return same_length(std::move(pts));
}

namespace {

// Bundles produced by `vsp plant` carry the representation under "rep".
ordered_json representation_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("representation is not valid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("rep") && !j.contains("entries")) j = j["rep"];
  if (!j.is_object() || !j.contains("m") || !j.contains("entries")) {
    throw InputError("representation needs \"m\" and \"entries\"");
  }
  return j;
}

}  // namespace

std::string serialize(const Representation& r) {
  ordered_json j;
  j["m"] = r.degree();
  auto entries = ordered_json::array();
  for (const auto& e : r.entries()) {
    ordered_json h = ordered_json::array();
    for (const auto& c : e.h.coords) h.push_back(to_string(c));
    entries.push_back({{"H", std::move(h)}, {"alpha", to_string(e.alpha)}});
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

Representation parse_representation(std::string_view text, PointRole role) {
  const auto j = representation_json(text);
  try {
    const long m = j.at("m").get<long>();
    if (m < 0) throw InputError("representation degree must be non-negative");
    std::vector<RepresentationEntry> entries;
    for (const auto& e : j.at("entries")) {
      RepresentationEntry entry;
      entry.h.role = role;
      for (const auto& c : e.at("H")) entry.h.coords.push_back(coefficient_from_json(c));
      entry.alpha = coefficient_from_json(e.at("alpha"));
      entries.push_back(std::move(entry));
    }
    return Representation(static_cast<unsigned>(m), std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed representation: ") + e.what());
  }
}

std::string serialize(const numeric::Decomposition& d) {
  ordered_json j;
  j["m"] = d.m;
  auto entries = ordered_json::array();
  for (const auto& t : d.terms) entries.push_back({{"H", t.h}, {"alpha", t.alpha}});
  j["entries"] = std::move(entries);
  return j.dump();
}

numeric::Decomposition parse_decomposition(std::string_view text) {
  const auto j = representation_json(text);
  auto number = [](const ordered_json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_rational(v.get<std::string>()).get_d();
    throw InputError("representation entries must be numbers or rational strings");
  };
  try {
    numeric::Decomposition d;
    d.m = j.at("m").get<unsigned>();
    for (const auto& e : j.at("entries")) {
      numeric::Term t;
      for (const auto& c : e.at("H")) t.h.push_back(number(c));
      t.alpha = number(e.at("alpha"));
      d.terms.push_back(std::move(t));
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed representation: ") + e.what());
  }
}

bool is_numeric_representation(std::string_view text) {
  const auto j = representation_json(text);
  for (const auto& e : j.at("entries")) {
    if (e.contains("alpha") && e["alpha"].is_number_float()) return true;
    if (e.contains("H")) {
      for (const auto& c : e["H"]) {
        if (c.is_number_float()) return true;
      }
    }
  }
  return false;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace apolar::io
