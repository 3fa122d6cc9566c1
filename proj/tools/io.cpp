#include "io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace stablerep::cli {

namespace {

std::string location(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

Json parse_with_location(const std::string& text, const std::string& name) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(name + ":" + location(text, e.byte) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<int>();
}

double as_double(const Json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  return j.get<double>();
}

std::vector<double> as_doubles(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_double(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<double> optional_doubles(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  const auto it = j.find(key);
  return it == j.end() ? std::vector<double>{} : as_doubles(*it, where + "." + key);
}

// Library validation failures inside a file are input errors.
template <class F>
auto validated(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_with_location(buf.str(), path.string());
}

Json parse_json_text(const std::string& text, const std::string& what) { return parse_with_location(text, what); }

Permutation parse_permutation(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected a list of cycles");
  std::vector<std::vector<Point>> cycles;
  for (std::size_t c = 0; c < j.size(); ++c) {
    const std::string at = where + "[" + std::to_string(c) + "]";
    if (!j[c].is_array()) throw InputError(at + ": expected a cycle (array of points)");
    std::vector<Point> cycle;
    for (std::size_t i = 0; i < j[c].size(); ++i) cycle.push_back(as_int(j[c][i], at + "[" + std::to_string(i) + "]"));
    cycles.push_back(std::move(cycle));
  }
  return validated(where, [&] { return Permutation::from_cycles(cycles); });
}

Partition parse_partition(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of parts");
  std::vector<int> parts;
  for (std::size_t i = 0; i < j.size(); ++i) parts.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  return validated(where, [&] { return Partition(parts); });
}

ThomaParams parse_params(const Json& j, const std::string& where) {
  auto alpha = optional_doubles(j, "alpha", where);
  auto beta = optional_doubles(j, "beta", where);
  return validated(where, [&] { return ThomaParams::make(alpha, beta); });
}

CanonicalStateSpec parse_spec(const Json& j, const std::string& where) {
  const int n = as_int(field(j, "n", where), where + ".n");
  Partition lambda = parse_partition(field(j, "lambda", where), where + ".lambda");
  ThomaParams params = parse_params(j, where);
  return validated(where, [&] { return CanonicalStateSpec::make(n, std::move(lambda), std::move(params)); });
}

std::map<int, double> parse_values(const Json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object {\"2\": v2, ...}");
  std::map<int, double> out;
  for (const auto& [key, value] : j.items()) {
    int k = 0;
    std::size_t used = 0;
    try {
      k = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || used == 0) throw InputError(where + ": key \"" + key + "\" is not a cycle length");
    out[k] = as_double(value, where + "." + key);
  }
  return out;
}

StateFunction parse_state(const Json& j, const std::string& where, int max_level) {
  const int level = as_int(field(j, "level", where), where + ".level");
  if (level < 0) throw InputError(where + ".level: must be nonnegative");
  if (level > max_level)
    throw InfeasibleError(where + ": level " + std::to_string(level) + " exceeds the cap " + std::to_string(max_level) +
                          " (see --allow-large-level)");
  const Json& values = field(j, "values", where);
  if (!values.is_array()) throw InputError(where + ".values: expected an array");
  StateFunction f(level);
  std::vector<bool> seen(f.size(), false);
  const auto& group = SymmetricGroup::of(level);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string at = where + ".values[" + std::to_string(i) + "]";
    const Permutation p = parse_permutation(field(values[i], "perm", at), at + ".perm");
    if (p.level() > level) throw InputError(at + ": " + p.to_string() + " is outside S_" + std::to_string(level));
    const Json& v = field(values[i], "value", at);
    Complex z;
    if (v.is_array()) {
      if (v.size() != 2) throw InputError(at + ".value: expected [re, im]");
      z = {as_double(v[0], at + ".value[0]"), as_double(v[1], at + ".value[1]")};
    } else {
      z = as_double(v, at + ".value");
    }
    const std::size_t idx = group.index_of(p);
    if (seen[idx]) throw InputError(at + ": duplicate entry for " + p.to_string());
    seen[idx] = true;
    f.at(idx) = z;
  }
  return f;
}

Json to_json(const Permutation& p) {
  Json out = Json::array();
  for (const auto& c : p.cycles()) out.push_back(c);
  return out;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const CycleType& c) { return Json(c.lengths); }

Json to_json(Complex z) {
  if (z.imag() == 0.0) return z.real();
  return Json::array({z.real(), z.imag()});
}

Json to_json(const ThomaParams& p) { return Json{{"alpha", p.alpha()}, {"beta", p.beta()}}; }

Json to_json(const ClassInvariant& inv) {
  return Json{{"n", inv.n}, {"lambda", to_json(inv.lambda)}, {"alpha", inv.alpha}, {"beta", inv.beta}};
}

Json state_to_json(const StateFunction& f) {
  const auto& group = SymmetricGroup::of(f.level());
  Json values = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.at(i) != Complex{}) values.push_back(Json{{"perm", to_json(group.element(i))}, {"value", to_json(f.at(i))}});
  return Json{{"level", f.level()}, {"values", std::move(values)}};
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace stablerep::cli
