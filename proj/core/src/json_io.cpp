#include "mtz/json_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "mtz/errors.hpp"
#include "toml_subset.hpp"

namespace mtz {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::ParseError, (path.empty() ? std::string("<root>") : path) + ": " + msg);
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ParseError, std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path, "missing key '" + key + "'");
  return *it;
}

long long as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<long long>();
}

IVec as_ivec(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of integers");
  IVec v;
  for (size_t i = 0; i < j.size(); ++i) v.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

std::vector<IVec> as_ivecs(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of arrays");
  std::vector<IVec> v;
  for (size_t i = 0; i < j.size(); ++i) v.push_back(as_ivec(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

std::vector<Cone> as_cones(const json& j, const std::string& path) {
  std::vector<Cone> cones;
  for (const IVec& c : as_ivecs(j, path)) {
    Cone cone;
    for (long long x : c) {
      if (x < 0) schema_error(path, "negative ray index");
      cone.push_back(size_t(x));
    }
    cones.push_back(cone);
  }
  return cones;
}

Int as_bigint(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (!j.is_string()) schema_error(path, "expected a decimal integer string");
  const std::string s = j.get<std::string>();
  size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size()) schema_error(path, "expected a decimal integer string");
  for (size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') schema_error(path, "expected a decimal integer string");
  return Int(s);
}

json ll_json(const LL& a) {
  json o = json::object();
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) o[std::to_string(it->first)] = it->second.str();
  return o;
}

LL ll_of(const json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object of exponent strings");
  LL a;
  for (const auto& [k, v] : j.items()) {
    long e = 0;
    try {
      size_t used = 0;
      e = std::stol(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      schema_error(path, "exponent key '" + k + "' is not an integer");
    }
    a.add_term(e, as_bigint(v, path + "." + k));
  }
  return a;
}

json fan_json(const std::string& name, size_t rank, const std::vector<IVec>& rays, const std::vector<Cone>& cones) {
  json o;
  o["name"] = name;
  o["rank"] = rank;
  o["rays"] = rays;
  o["max_cones"] = cones;
  return o;
}

RawFan raw_fan_of(const json& j) {
  RawFan f;
  if (j.contains("name")) {
    if (!j["name"].is_string()) schema_error("name", "expected a string");
    f.name = j["name"].get<std::string>();
  }
  long long rank = as_int(field(j, "rank", ""), "rank");
  if (rank < 0) schema_error("rank", "must be nonnegative");
  f.rank = size_t(rank);
  f.rays = as_ivecs(field(j, "rays", ""), "rays");
  f.max_cones = as_cones(field(j, "max_cones", ""), "max_cones");
  return f;
}

}  // namespace

std::string to_json(const LL& a) { return ll_json(a).dump(); }
LL ll_from_json(const std::string& text) { return ll_of(parse(text), ""); }

std::string to_json(const GradedSeries& s) {
  json o;
  o["t_vars"] = s.t_vars();
  json terms = json::array();
  for (const auto& [m, c] : s.terms()) {
    json t;
    t["t"] = m.t;
    t["z"] = m.z;
    t["coeff"] = ll_json(c);
    terms.push_back(t);
  }
  o["terms"] = terms;
  o["trunc"] = s.trunc();
  if (s.box()) o["box"] = *s.box();
  return o.dump();
}

GradedSeries series_from_json(const std::string& text) {
  const json j = parse(text);
  const json& vars = field(j, "t_vars", "");
  if (!vars.is_array()) schema_error("t_vars", "expected an array of names");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) schema_error("t_vars", "expected an array of names");
    names.push_back(v.get<std::string>());
  }
  const long long trunc = as_int(field(j, "trunc", ""), "trunc");
  const json& terms = field(j, "terms", "");
  if (!terms.is_array()) schema_error("terms", "expected an array");
  size_t num_z = 0;
  if (!terms.empty()) num_z = as_ivec(field(terms[0], "z", "terms[0]"), "terms[0].z").size();
  std::optional<std::vector<int>> box;
  if (j.contains("box")) {
    IVec b = as_ivec(j["box"], "box");
    box = std::vector<int>(b.begin(), b.end());
  }
  GradedSeries s(names.size(), num_z, int(trunc), box);
  s.set_t_vars(names);
  for (size_t i = 0; i < terms.size(); ++i) {
    const std::string p = "terms[" + std::to_string(i) + "]";
    IVec t = as_ivec(field(terms[i], "t", p), p + ".t");
    IVec z = as_ivec(field(terms[i], "z", p), p + ".z");
    if (t.size() != names.size() || z.size() != num_z) schema_error(p, "exponent vector has the wrong length");
    GradedMonomial m{std::vector<int>(t.begin(), t.end()), std::vector<long>(z.begin(), z.end())};
    if (!s.admits(m)) schema_error(p, "monomial exceeds the truncation");
    s.add_term(m, ll_of(field(terms[i], "coeff", p), p + ".coeff"));
  }
  return s;
}

std::string to_json(const CharFunction& f) {
  json o;
  o["rank"] = f.rank();
  json sup = json::array();
  for (const auto& [m, v] : f.support()) {
    json e;
    e["m"] = m;
    e["value"] = ll_json(v);
    sup.push_back(e);
  }
  o["support"] = sup;
  return o.dump();
}

CharFunction char_function_from_json(const std::string& text) {
  const json j = parse(text);
  const long long rank = as_int(field(j, "rank", ""), "rank");
  if (rank < 0) schema_error("rank", "must be nonnegative");
  CharFunction f{size_t(rank)};
  const json& sup = field(j, "support", "");
  if (!sup.is_array()) schema_error("support", "expected an array");
  for (size_t i = 0; i < sup.size(); ++i) {
    const std::string p = "support[" + std::to_string(i) + "]";
    IVec m = as_ivec(field(sup[i], "m", p), p + ".m");
    if (m.size() != size_t(rank)) schema_error(p + ".m", "wrong rank");
    f.add(m, ll_of(field(sup[i], "value", p), p + ".value"));
  }
  return f;
}

std::string to_json(const Sublattice& s) {
  json o;
  o["generators"] = s.generators();
  return o.dump();
}

Sublattice sublattice_from_json(const std::string& text) {
  const json j = parse(text);
  auto gens = as_ivecs(field(j, "generators", ""), "generators");
  size_t n = 0;
  if (j.contains("rank")) n = size_t(as_int(j["rank"], "rank"));
  else if (!gens.empty()) n = gens[0].size();
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].size() != n) schema_error("generators[" + std::to_string(i) + "]", "wrong rank");
  return Sublattice(n, gens);
}

std::string to_json(const ZetaSeries& z) {
  json o;
  o["fan"] = z.fan;
  json coeffs = json::array();
  for (const auto& [d, c] : z.coeffs) {
    json e;
    e["d"] = d;
    e["coeff"] = ll_json(c);
    coeffs.push_back(e);
  }
  o["coeffs"] = coeffs;
  o["Dmax"] = z.dmax;
  return o.dump();
}

std::string count_to_json(const std::string& fan, const IVec& d, int q, const Int& count) {
  json o;
  o["fan"] = fan;
  o["d"] = d;
  o["q"] = q;
  o["count"] = count.str();
  return o.dump();
}

std::string to_json(const RawFan& f) { return fan_json(f.name, f.rank, f.rays, f.max_cones).dump(); }

RawFan fan_from_json(const std::string& text) { return raw_fan_of(parse(text)); }

RawFan fan_from_toml(const std::string& text) { return fan_from_json(detail::toml_subset_to_json(text)); }

RawFan read_fan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  const bool toml = path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0;
  try {
    return toml ? fan_from_toml(ss.str()) : fan_from_json(ss.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ":" + e.message());
  }
}

RawConeFan cone_fan_from_json(const std::string& text) {
  const json j = parse(text);
  RawFan f = raw_fan_of(j);
  RawConeFan c{f.name, f.rank, f.rays, f.max_cones, {}};
  if (j.contains("support")) c.support_generators = as_ivecs(j["support"], "support");
  return c;
}

std::string to_json(const RawConeFan& f) {
  json o = fan_json(f.name, f.rank, f.rays, f.max_cones);
  if (!f.support_generators.empty()) o["support"] = f.support_generators;
  return o.dump();
}

}  // namespace mtz
