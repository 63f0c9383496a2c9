#include "vpart/formula_io.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "vpart/error.hpp"

namespace vpart {
namespace {

using nlohmann::json;

json vec_json(Vec2 v) { return json::array({v.x, v.y}); }

Vec2 vec_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw Error(Errc::InvalidInput, "expected an integer pair, got " + j.dump());
  }
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw Error(Errc::InvalidInput, std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

std::int64_t int_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer()) throw Error(Errc::InvalidInput, std::string("field \"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> int_list(const json& j) {
  if (!j.is_array()) throw Error(Errc::InvalidInput, "expected an integer list");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(Errc::InvalidInput, "expected an integer list");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

BigRational rational_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return BigRational(static_cast<long>(j.get<std::int64_t>()));
  throw Error(Errc::InvalidInput, "expected a rational string, got " + j.dump());
}

std::vector<Vec2> columns_from(const json& j) {
  if (!j.is_array()) throw Error(Errc::InvalidInput, "columns must be a list of integer pairs");
  std::vector<Vec2> cols;
  for (const auto& c : j) cols.push_back(vec_from(c));
  return cols;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

std::string rational_text(const BigRational& q) { return to_string(q); }

std::string linear_text(std::int64_t a1, std::int64_t a2) {
  std::string out;
  auto add = [&out](std::int64_t a, const char* var) {
    if (a == 0) return;
    if (!out.empty()) out += " + ";
    if (a != 1) out += std::to_string(a) + "*";
    out += var;
  };
  add(a1, "n1");
  add(a2, "n2");
  return out.empty() ? "0" : out;
}

std::string periodic_text(const PeriodicTerm& term) {
  const PairReduction& r = term.reduction;
  const auto& values = term.table.values;
  const std::string form = linear_text(r.a1, r.a2);
  std::ostringstream out;
  if (r.modulus == 2 && values.size() == 2 && values[1] == -values[0]) {
    const BigRational& v = values[0];
    out << "+ (-1)^(" << form << ")";
    if (v.get_num() == 1) {
      out << "/" << v.get_den().get_str();
    } else {
      out << "*(" << rational_text(v) << ")";
    }
  } else if (r.residues.size() == 1) {
    // sigma_{L + c}({c}; Y) = -{c^-1 L / Y} + (Y - 1)/(2Y)
    const std::int64_t inv = mod_inverse(r.residues[0], r.modulus);
    out << "- {(" << linear_text(mul_mod(inv, r.a1, r.modulus), mul_mod(inv, r.a2, r.modulus)) << ")/" << r.modulus
        << "} + " << rational_text(make_rational(r.modulus - 1, 2 * r.modulus));
  } else {
    out << "+ S[(" << form << ") mod " << r.modulus << "], S = [";
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << rational_text(values[i]);
    out << "]";
  }
  out << "    [pair (" << r.i + 1 << "," << r.j + 1 << ")]";
  return out.str();
}

}  // namespace

std::string render_polynomial(const BivarPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, BigRational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.total() != b.first.total()) return a.first.total() > b.first.total();
    return a.first.x > b.first.x;
  });
  std::string out;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    const BigRational mag = negative ? BigRational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string vars;
    auto var = [&vars](int e, const char* name) {
      if (e == 0) return;
      if (!vars.empty()) vars += "*";
      vars += name;
      if (e > 1) vars += "^" + std::to_string(e);
    };
    var(m.x, "n1");
    var(m.y, "n2");
    if (vars.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += to_string(mag) + "*" + vars;
    }
  }
  return out;
}

std::string formula_to_json(const QuasiPolynomial& q, int indent) {
  json doc;
  doc["columns"] = json::array();
  for (Vec2 c : q.matrix().columns()) doc["columns"].push_back(vec_json(c));
  doc["chambers"] = json::array();
  for (const ChamberFormula& f : q.chambers()) {
    json ch;
    ch["index"] = f.chamber.index + 1;
    ch["lower_ray"] = vec_json(f.chamber.lower_ray);
    ch["upper_ray"] = vec_json(f.chamber.upper_ray);
    ch["polynomial"] = json::array();
    for (const auto& [m, c] : f.polynomial.terms()) ch["polynomial"].push_back(json::array({m.x, m.y, to_string(c)}));
    ch["periodic"] = json::array();
    for (const PeriodicTerm& t : f.periodic) {
      const PairReduction& r = t.reduction;
      json p;
      p["pair"] = json::array({r.i + 1, r.j + 1});
      p["aux"] = r.m + 1;
      p["f"] = r.f;
      p["g"] = r.g;
      p["modulus"] = r.modulus;
      p["residues"] = r.residues;
      p["linear_form"] = json::array({r.a1, r.a2});
      p["shift"] = r.shift;
      p["table"] = json::array();
      for (const auto& v : t.table.values) p["table"].push_back(to_string(v));
      ch["periodic"].push_back(std::move(p));
    }
    doc["chambers"].push_back(std::move(ch));
  }
  return doc.dump(indent);
}

QuasiPolynomial formula_from_json(std::string_view text) {
  const json doc = parse_document(text);
  ColumnMatrix m = build_matrix(columns_from(field(doc, "columns")));
  const json& chs = field(doc, "chambers");
  if (!chs.is_array()) throw Error(Errc::InvalidInput, "chambers must be a list");

  std::vector<ChamberFormula> formulas;
  for (const json& ch : chs) {
    ChamberFormula f;
    const std::int64_t index = int_field(ch, "index");
    if (index < 1 || static_cast<std::size_t>(index) >= m.size()) throw Error(Errc::InvalidInput, "chamber index out of range");
    f.chamber = {static_cast<std::size_t>(index - 1), vec_from(field(ch, "lower_ray")), vec_from(field(ch, "upper_ray"))};
    const json& poly = field(ch, "polynomial");
    if (!poly.is_array()) throw Error(Errc::InvalidInput, "polynomial must be a list");
    for (const json& term : poly) {
      if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() || !term[1].is_number_integer()) {
        throw Error(Errc::InvalidInput, "polynomial term must be [i, j, \"p/q\"]");
      }
      Monomial mono{term[0].get<int>(), term[1].get<int>()};
      if (mono.x < 0 || mono.y < 0) throw Error(Errc::InvalidInput, "negative exponent");
      f.polynomial += BivarPoly::term(mono, rational_from(term[2]));
    }
    const json& periodic = field(ch, "periodic");
    if (!periodic.is_array()) throw Error(Errc::InvalidInput, "periodic must be a list");
    for (const json& p : periodic) {
      PeriodicTerm t;
      PairReduction& r = t.reduction;
      auto pair = int_list(field(p, "pair"));
      if (pair.size() != 2 || pair[0] < 1 || pair[1] < 1) throw Error(Errc::InvalidInput, "pair must be two 1-based indices");
      r.i = static_cast<std::size_t>(pair[0] - 1);
      r.j = static_cast<std::size_t>(pair[1] - 1);
      r.m = p.contains("aux") ? static_cast<std::size_t>(int_field(p, "aux") - 1) : 0;
      r.f = p.contains("f") ? int_field(p, "f") : 0;
      r.g = p.contains("g") ? int_field(p, "g") : 0;
      r.modulus = int_field(p, "modulus");
      if (r.modulus < 1) throw Error(Errc::InvalidInput, "modulus must be positive");
      r.residues = p.contains("residues") ? int_list(p.at("residues")) : std::vector<std::int64_t>{};
      auto form = int_list(field(p, "linear_form"));
      if (form.size() != 2) throw Error(Errc::InvalidInput, "linear_form must have two entries");
      r.a1 = form[0];
      r.a2 = form[1];
      r.shift = int_field(p, "shift");
      t.table.modulus = r.modulus;
      const json& table = field(p, "table");
      if (!table.is_array() || table.size() != static_cast<std::size_t>(r.modulus)) {
        throw Error(Errc::InvalidInput, "table must have one entry per residue");
      }
      for (const json& v : table) t.table.values.push_back(rational_from(v));
      f.periodic.push_back(std::move(t));
    }
    formulas.push_back(std::move(f));
  }
  std::sort(formulas.begin(), formulas.end(),
            [](const ChamberFormula& a, const ChamberFormula& b) { return a.chamber.index < b.chamber.index; });
  for (std::size_t k = 0; k < formulas.size(); ++k) {
    if (formulas[k].chamber.index != k) throw Error(Errc::InvalidInput, "chambers must cover every index once");
  }
  try {
    return QuasiPolynomial(std::move(m), std::move(formulas));
  } catch (const Error& e) {
    throw Error(Errc::InvalidInput, e.what());
  }
}

std::string render_text(const QuasiPolynomial& q) {
  std::ostringstream out;
  out << "columns:";
  for (Vec2 c : q.matrix().columns()) out << " (" << c.x << "," << c.y << ")";
  out << "\n";
  for (const ChamberFormula& f : q.chambers()) {
    const Chamber& ch = f.chamber;
    out << "chamber " << ch.index + 1 << ": between (" << ch.lower_ray.x << "," << ch.lower_ray.y << ") and ("
        << ch.upper_ray.x << "," << ch.upper_ray.y << ")\n";
    out << "  t(n) = " << render_polynomial(f.polynomial) << "\n";
    for (const PeriodicTerm& t : f.periodic) out << "         " << periodic_text(t) << "\n";
  }
  return out.str();
}

ColumnMatrix parse_matrix_json(std::string_view text) {
  const json doc = parse_document(text);
  if (doc.is_array()) return build_matrix(columns_from(doc));
  if (doc.is_object() && doc.contains("columns")) return build_matrix(columns_from(doc.at("columns")));
  if (doc.is_object() && doc.contains("rows")) {
    const json& rows = doc.at("rows");
    if (!rows.is_array() || rows.size() != 2) throw Error(Errc::InvalidInput, "rows must hold exactly two rows");
    auto top = int_list(rows[0]);
    auto bottom = int_list(rows[1]);
    if (top.size() != bottom.size()) throw Error(Errc::InvalidInput, "rows differ in length");
    std::vector<Vec2> cols;
    for (std::size_t i = 0; i < top.size(); ++i) cols.push_back({top[i], bottom[i]});
    return build_matrix(cols);
  }
  throw Error(Errc::InvalidInput, "matrix JSON needs \"columns\" or \"rows\"");
}

}  // namespace vpart
