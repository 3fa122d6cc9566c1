#pragma once

// File formats of the command line tool.
//
//   permutation  list of cycles, e.g. [[1,2],[5,6]]; [] is the identity
//   partition    weakly decreasing array, e.g. [2,1]
//   state        {"level": K, "values": [{"perm": [[1,2]], "value": x}, ...]}
//                value is a number or [re, im]; unlisted elements are 0
//   spec         {"n": 2, "lambda": [1,1], "alpha": [...], "beta": [...]}
//   params       {"alpha": [...], "beta": [...]}
//   values       {"2": v2, "3": v3, ...}

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "stablerep/fourier.hpp"
#include "stablerep/stable_states.hpp"

namespace stablerep::cli {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input; exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Job exceeding the size guards; exit status 3.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a file; syntax errors report path:line:column.
Json read_json_file(const std::filesystem::path& path);

/// Parses command-line JSON text (e.g. a --perm argument).
Json parse_json_text(const std::string& text, const std::string& what);

Permutation parse_permutation(const Json& j, const std::string& where);
Partition parse_partition(const Json& j, const std::string& where);
ThomaParams parse_params(const Json& j, const std::string& where);
CanonicalStateSpec parse_spec(const Json& j, const std::string& where);
std::map<int, double> parse_values(const Json& j, const std::string& where);
/// Levels above max_level raise InfeasibleError.
StateFunction parse_state(const Json& j, const std::string& where, int max_level);

Json to_json(const Permutation& p);
Json to_json(const Partition& p);
Json to_json(const CycleType& c);
/// A number when the imaginary part is zero, else [re, im].
Json to_json(Complex z);
Json to_json(const ThomaParams& p);
Json to_json(const ClassInvariant& inv);
/// State schema listing the nonzero entries in group index order.
Json state_to_json(const StateFunction& f);

std::string hex64(std::uint64_t v);

}  // namespace stablerep::cli
