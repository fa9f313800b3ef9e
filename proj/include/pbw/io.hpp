#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pbw/errors.hpp"
#include "pbw/params.hpp"

namespace pbw {

using json = nlohmann::json;

// A schema or validator failure, anchored to the offending input location.
struct ProblemFileError : InputError {
  std::string pointer;
  std::size_t line = 0;
  ProblemFileError(const std::string& msg, std::string ptr, std::size_t ln);
};

struct ProblemFile {
  ProblemData data;
  ParameterTriple params;
  // Present when the file gave α in H⊗V⊗H; params then holds the normalization
  // and beta_tilde the β of the file.
  std::optional<AlphaTilde> alpha_tilde;
  std::optional<std::vector<Vec>> beta_tilde;
  std::vector<std::string> notes;
};

// Throws ProblemFileError (schema, shape, validator failures) or InputError.
// With validate = false the Hopf/action/parameter validators are skipped.
ProblemFile parse_problem(const json& j, bool validate = true);
ProblemFile parse_problem_text(const std::string& text, bool validate = true);
ProblemFile load_problem(const std::string& path, bool validate = true);

// Always writes the explicit Hopf form, so parse(serialize(x)) reproduces x.
json serialize_problem(const ProblemFile& f);

// Line (1-based) of every JSON pointer in a document; parse failures of the
// locator itself leave the map empty.
std::map<std::string, std::size_t> json_pointer_lines(const std::string& text);

json scalar_json(const Scalar& s);
json vec_json(const Vec& v);

}  // namespace pbw
