#include "partzeta/profile_io.hpp"

#include <algorithm>
#include <fstream>

namespace pz {

nlohmann::json profile_to_json(const LProfile& prof) {
  const unsigned digits = std::max(40u, decimal_digits_for_bits(WorkingPrecision::current_bits()));
  nlohmann::json lam = nlohmann::json::array();
  for (const auto& v : prof.lambda) lam.push_back(format_decimal(v, digits));
  return {{"weight", prof.weight}, {"level", prof.level}, {"sign", prof.sign}, {"lambda", lam}, {"source", prof.source}};
}

LProfile profile_from_json(const nlohmann::json& doc) {
  try {
    LProfile p;
    p.weight = doc.at("weight").get<unsigned>();
    p.level = doc.at("level").get<unsigned long>();
    p.sign = doc.at("sign").get<int>();
    for (const auto& v : doc.at("lambda")) {
      if (!v.is_string()) throw DomainError("LProfile JSON: lambda entries must be decimal strings");
      p.lambda.push_back(parse_hp(v.get<std::string>()));
    }
    p.source = doc.value("source", std::string("file"));
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("LProfile JSON: ") + e.what());
  }
}

LProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open profile file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("profile file " + path + " is not valid JSON: " + e.what());
  }
  return profile_from_json(doc);
}

void save_profile(const std::string& path, const LProfile& prof) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write profile file " + path);
  out << profile_to_json(prof).dump(2) << "\n";
}

}  // namespace pz
