#pragma once

#include <json.hpp>

#include <fstream>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacder::testing {

// Validator for the JSON Schema keywords the committed output schema uses:
// $ref (local), type, enum, pattern, minimum, required, properties,
// additionalProperties, items and oneOf. Unknown keywords are ignored.
class SchemaValidator {
 public:
  explicit SchemaValidator(nlohmann::json root) : root_(std::move(root)) {}

  static SchemaValidator from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schema " + path);
    return SchemaValidator(nlohmann::json::parse(in));
  }

  const nlohmann::json& definition(const std::string& name) const {
    return root_.at("$defs").at(name);
  }

  std::vector<std::string> validate(const nlohmann::json& value, const std::string& def_name) const {
    std::vector<std::string> errors;
    check(value, definition(def_name), "$", errors);
    return errors;
  }

 private:
  const nlohmann::json& resolve(const nlohmann::json& schema) const {
    if (!schema.contains("$ref")) return schema;
    const std::string ref = schema["$ref"];
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref " + ref);
    return resolve(root_.at("$defs").at(ref.substr(prefix.size())));
  }

  static bool has_type(const nlohmann::json& v, const std::string& type) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "boolean") return v.is_boolean();
    if (type == "null") return v.is_null();
    if (type == "integer") return v.is_number_integer();
    if (type == "number") return v.is_number();
    return false;
  }

  void check(const nlohmann::json& v, const nlohmann::json& raw, const std::string& path,
             std::vector<std::string>& errors) const {
    const nlohmann::json& s = resolve(raw);
    if (s.contains("oneOf")) {
      int matches = 0;
      for (const auto& alt : s["oneOf"]) {
        std::vector<std::string> sub;
        check(v, alt, path, sub);
        if (sub.empty()) ++matches;
      }
      if (matches != 1) errors.push_back(path + ": matched " + std::to_string(matches) + " oneOf branches");
    }
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (const auto& t : s["type"]) ok = ok || has_type(v, t);
      } else {
        ok = has_type(v, s["type"]);
      }
      if (!ok) {
        errors.push_back(path + ": expected type " + s["type"].dump());
        return;
      }
    }
    if (s.contains("enum")) {
      bool found = false;
      for (const auto& e : s["enum"]) found = found || e == v;
      if (!found) errors.push_back(path + ": value " + v.dump() + " not in enum");
    }
    if (s.contains("pattern") && v.is_string()) {
      if (!std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>()))) {
        errors.push_back(path + ": '" + v.get<std::string>() + "' does not match pattern");
      }
    }
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>()) {
      errors.push_back(path + ": below minimum");
    }
    if (v.is_object()) {
      if (s.contains("required")) {
        for (const auto& key : s["required"]) {
          if (!v.contains(key.get<std::string>())) errors.push_back(path + ": missing '" + key.get<std::string>() + "'");
        }
      }
      const nlohmann::json empty = nlohmann::json::object();
      const nlohmann::json& props = s.contains("properties") ? s["properties"] : empty;
      for (const auto& [key, inner] : v.items()) {
        if (props.contains(key)) {
          check(inner, props[key], path + "." + key, errors);
        } else if (s.contains("additionalProperties")) {
          const auto& extra = s["additionalProperties"];
          if (extra.is_boolean() && !extra.get<bool>()) errors.push_back(path + ": unexpected '" + key + "'");
          else if (extra.is_object()) check(inner, extra, path + "." + key, errors);
        }
      }
    }
    if (v.is_array() && s.contains("items")) {
      for (std::size_t i = 0; i < v.size(); ++i) check(v[i], s["items"], path + "[" + std::to_string(i) + "]", errors);
    }
  }

  nlohmann::json root_;
};

}  // namespace jacder::testing
