#pragma once

// JSON file formats: algebra files (bialgebra or Lie algebra), element files
// and the scalar / digest helpers shared by the command-line tool.

#include "twd/bialgebra.hpp"
#include "twd/lie.hpp"
#include "twd/ug.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace twd::io {

using json = nlohmann::json;

inline constexpr const char* kAlgebraSchema = "twd.algebra/1";
inline constexpr const char* kElementSchema = "twd.element/1";

using Algebra = std::variant<Bialgebra, LieAlgebra>;

/// Scalars are strings "p/q" (or "p").
json scalar_json(const Q& q);
Q scalar_from(const json& j);

/// Throws FormatError on any schema violation.
Algebra parse_algebra(const std::string& text);
json algebra_json(const Algebra& a);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string emit_algebra(const Algebra& a);

/// An element of some tensor power, before it is tied to an algebra. Each
/// slot is a JSON value: an index array (a word of basis indices), or a
/// string of basis names joined by "*" ("1" for the empty word in U(g)).
struct RawElement {
    int degree = 0;
    std::vector<std::pair<std::vector<json>, Q>> terms;
};

RawElement parse_element(const std::string& text);
json element_json(const UTensor& t);
std::string emit_element(const UTensor& t);
json element_json(const Tensor& t);

/// For a bialgebra every slot names exactly one basis element.
Tensor to_tensor(const Bialgebra& b, const RawElement& e);
/// For g ⊂ U(g) every slot names exactly one basis element.
Tensor to_lie_tensor(const LieAlgebra& g, const RawElement& e);
/// Words over the basis of g.
UTensor to_words(const std::vector<std::string>& names, const RawElement& e);

/// Reads a file, or standard input for "-". Throws FormatError when the file
/// cannot be read.
std::string read_input(const std::string& path);

/// Lower-case hex SHA-256.
std::string sha256_hex(const std::string& bytes);

/// Sparse coordinate list [[i, "c"], ...].
json sparse_json(const Vec<Q>& v);
/// Sparse triples [[i, j, k, "c"], ...] of a bilinear table.
json table_json(const BilinearTable& t, Index dim);
json tensor_json(const Tensor& t, const std::vector<std::string>& names);

} // namespace twd::io
