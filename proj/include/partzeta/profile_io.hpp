#pragma once

#include <string>

#include "partzeta/modular.hpp"
#include "json.hpp"

namespace pz {

/// {"weight", "level", "sign", "lambda": [decimal strings], "source"}; every
/// decimal carries max(40, digits for the working precision) significant digits.
nlohmann::json profile_to_json(const LProfile& prof);

/// Parses the same layout. Shape errors throw DomainError; the invariants are
/// not checked here, call LProfile::validate.
LProfile profile_from_json(const nlohmann::json& doc);

LProfile load_profile(const std::string& path);
void save_profile(const std::string& path, const LProfile& prof);

}  // namespace pz
