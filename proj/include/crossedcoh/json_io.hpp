#pragma once

#include "crossedcoh/crossed_module.hpp"
#include "crossedcoh/gamma_module.hpp"
#include "crossedcoh/hypercoh.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace ccoh {

using nlohmann::json;

/// Strict parsers: unknown fields are rejected with the offending location.
FiniteGroup parse_group(const json& j, const std::string& where = "group");
json serialize_group(const FiniteGroup& g);

GammaGroup parse_gamma_group(const json& j, const std::string& where = "gamma-group");
json serialize_gamma_group(const GammaGroup& g);

struct CrossedModuleDoc {
    CrossedModule cm;
    std::optional<Braiding> braiding;
};

CrossedModuleDoc parse_crossed_module(const json& j, const std::string& where = "crossed-module");
json serialize_crossed_module(const CrossedModuleDoc& doc);

GammaModule parse_gamma_module(const json& j, const std::string& where = "module");
json serialize_gamma_module(const GammaModule& m);

std::vector<Elt> parse_psi(const json& j, const FiniteGroup& gamma, const FiniteGroup& g,
                           const std::string& where = "psi");
Cochain1 parse_cochain1(const json& j, const CrossedModule& cm, const std::string& where = "cocycle");
json serialize_cochain1(const Cochain1& c);

enum class DocKind { group, gamma_group, crossed_module, module, unknown };
DocKind detect_kind(const json& j);

json load_json_file(const std::string& path);

}  // namespace ccoh
