#include "equidim_cli/input.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "equidim/errors.hpp"

namespace equidim::cli {

namespace {

const std::set<std::string> kTopKeys = {"ambient_dim", "torus_rank", "torsion_moduli", "weights",
                                        "quotient_congruences", "options"};
const std::set<std::string> kOptionKeys = {"sweep_bound", "wide_bound", "degree_cap", "max_candidates"};

void check_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& at) {
  if (!obj.is_object()) throw InputError("expected an object", at.empty() ? "/" : at);
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) throw InputError("unknown member \"" + k + "\"", at + "/" + k);
}

// JSON integers, or decimal strings for values beyond 64 bits.
Integer integer_at(const Json& v, const std::string& at) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                                           : Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) == 0) return out;
  }
  throw InputError("expected an integer", at);
}

long small_at(const Json& v, const std::string& at, long lo, long hi) {
  Integer x = integer_at(v, at);
  if (x < lo || x > hi)
    throw InputError("expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]", at);
  return x.get_si();
}

const Json& array_at(const Json& v, const std::string& at) {
  if (!v.is_array()) throw InputError("expected an array", at);
  return v;
}

IntVector vector_at(const Json& v, const std::string& at) {
  IntVector out;
  for (std::size_t i = 0; i < array_at(v, at).size(); ++i) out.push_back(integer_at(v[i], at + "/" + std::to_string(i)));
  return out;
}

const Json& required(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing member \"") + key + "\"", std::string("/") + key);
  return *it;
}

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

}  // namespace

InputSpec parse_input(const Json& doc) {
  check_keys(doc, kTopKeys, "");
  InputSpec spec;
  auto& a = spec.action;
  a.ambient_dim = static_cast<std::size_t>(small_at(required(doc, "ambient_dim"), "/ambient_dim", 0, 64));
  a.group.free_rank = static_cast<std::size_t>(small_at(required(doc, "torus_rank"), "/torus_rank", 0, 64));
  if (doc.contains("torsion_moduli")) a.group.torsion = vector_at(doc["torsion_moduli"], "/torsion_moduli");

  const Json& w = array_at(required(doc, "weights"), "/weights");
  for (std::size_t i = 0; i < w.size(); ++i) a.weights.push_back(vector_at(w[i], "/weights/" + std::to_string(i)));

  if (doc.contains("quotient_congruences")) {
    const Json& c = array_at(doc["quotient_congruences"], "/quotient_congruences");
    for (std::size_t k = 0; k < c.size(); ++k) {
      const std::string at = "/quotient_congruences/" + std::to_string(k);
      check_keys(c[k], {"coeffs", "modulus"}, at);
      if (!c[k].contains("coeffs")) throw InputError("missing member \"coeffs\"", at + "/coeffs");
      Congruence g;
      g.coeffs = vector_at(c[k]["coeffs"], at + "/coeffs");
      g.modulus = c[k].contains("modulus") ? integer_at(c[k]["modulus"], at + "/modulus") : Integer(0);
      a.congruences.push_back(std::move(g));
    }
  }

  if (doc.contains("options")) {
    const Json& o = doc["options"];
    check_keys(o, kOptionKeys, "/options");
    auto& opt = spec.options;
    if (o.contains("sweep_bound")) opt.sweep_bound = static_cast<int>(small_at(o["sweep_bound"], "/options/sweep_bound", 0, 64));
    if (o.contains("wide_bound")) opt.wide_bound = static_cast<int>(small_at(o["wide_bound"], "/options/wide_bound", 0, 64));
    if (o.contains("degree_cap")) opt.degree_cap = static_cast<int>(small_at(o["degree_cap"], "/options/degree_cap", 0, 64));
    if (o.contains("max_candidates"))
      opt.caps.max_candidates =
          static_cast<std::uint64_t>(small_at(o["max_candidates"], "/options/max_candidates", 1, 1L << 40));
  }
  if (spec.options.wide_bound < spec.options.sweep_bound)
    throw InputError("wide_bound must be at least sweep_bound", "/options/wide_bound");
  a.normalize();
  return spec;
}

InputSpec parse_input_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what(), "");
  }
  return parse_input(doc);
}

InputSpec read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path, "");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str());
}

Json echo(const InputSpec& spec) {
  const auto& a = spec.action;
  Json doc;
  doc["ambient_dim"] = a.ambient_dim;
  doc["torus_rank"] = a.group.free_rank;
  doc["torsion_moduli"] = vector_json(a.group.torsion);
  doc["weights"] = Json::array();
  for (const auto& w : a.weights) doc["weights"].push_back(vector_json(w));
  doc["quotient_congruences"] = Json::array();
  for (const auto& c : a.congruences)
    doc["quotient_congruences"].push_back({{"coeffs", vector_json(c.coeffs)}, {"modulus", integer_json(c.modulus)}});
  const auto& o = spec.options;
  doc["options"] = {{"sweep_bound", o.sweep_bound},
                    {"wide_bound", o.wide_bound},
                    {"degree_cap", o.degree_cap},
                    {"max_candidates", o.caps.max_candidates}};
  return doc;
}

bool operator==(const InputSpec& x, const InputSpec& y) {
  const auto& a = x.action;
  const auto& b = y.action;
  if (a.ambient_dim != b.ambient_dim || !(a.group == b.group) || a.weights != b.weights) return false;
  if (a.congruences.size() != b.congruences.size()) return false;
  for (std::size_t k = 0; k < a.congruences.size(); ++k)
    if (a.congruences[k].coeffs != b.congruences[k].coeffs || a.congruences[k].modulus != b.congruences[k].modulus)
      return false;
  const auto& p = x.options;
  const auto& q = y.options;
  return p.sweep_bound == q.sweep_bound && p.wide_bound == q.wide_bound && p.degree_cap == q.degree_cap &&
         p.caps.max_candidates == q.caps.max_candidates;
}

Character parse_character(const std::string& csv, const CharacterGroup& g, const std::string& flag) {
  Character chi;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    Integer x;
    if (item.empty() || x.set_str(item, 10) != 0) throw InputError("not an integer list: \"" + csv + "\"", flag);
    chi.push_back(x);
  }
  if (chi.size() != g.dimension())
    throw InputError("character needs " + std::to_string(g.dimension()) + " coordinates", flag);
  return g.reduce(chi);
}

}  // namespace equidim::cli
