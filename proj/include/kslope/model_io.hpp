#pragma once

// Model documents: JSON syntax, top-level "kind" of "table", "mixed-table"
// or "toric". Rationals travel as "p/q" strings or bare integers.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "kslope/tables.hpp"
#include "kslope/toric.hpp"

namespace kslope {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using ModelDocument = std::variant<IntersectionTable, MixedTable, toric::ToricModel>;

ModelDocument parse_model(std::string_view bytes);
/// Pretty-printed JSON; parse_model(serialize_model(m)) == m.
std::string serialize_model(const ModelDocument& model);
std::string model_label(const ModelDocument& model);

ModelDocument load_model_file(const std::filesystem::path& path);

} // namespace kslope
