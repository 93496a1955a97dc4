#ifndef RETRACTLAB_TESTS_JSON_SCHEMA_HPP
#define RETRACTLAB_TESTS_JSON_SCHEMA_HPP

#include <json.hpp>

#include <string>

namespace retractlab::testing {

/// Minimal structural JSON-schema checker covering the subset the shipped
/// schemas use: type, properties, required, items, enum,
/// additionalProperties (boolean), nullable unions via ["x","null"].
inline bool validate_schema(const nlohmann::json& value, const nlohmann::json& schema,
                            std::string& error, const std::string& path = "$") {
    using nlohmann::json;

    auto type_matches = [&](const std::string& type) {
        if (type == "object") return value.is_object();
        if (type == "array") return value.is_array();
        if (type == "string") return value.is_string();
        if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
        if (type == "number") return value.is_number();
        if (type == "boolean") return value.is_boolean();
        if (type == "null") return value.is_null();
        return false;
    };

    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(t.get<std::string>());
        } else if (t.is_array()) {
            for (const json& alt : t) ok = ok || type_matches(alt.get<std::string>());
        }
        if (!ok) {
            error = path + ": expected type " + t.dump() + ", got " + value.dump();
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& allowed : schema["enum"]) ok = ok || allowed == value;
        if (!ok) {
            error = path + ": value " + value.dump() + " not in enum";
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const auto& key : schema["required"]) {
                if (!value.contains(key.get<std::string>())) {
                    error = path + ": missing required key " + key.dump();
                    return false;
                }
            }
        }
        if (schema.contains("properties")) {
            for (auto it = value.begin(); it != value.end(); ++it) {
                if (schema["properties"].contains(it.key())) {
                    if (!validate_schema(it.value(), schema["properties"][it.key()], error,
                                         path + "." + it.key())) {
                        return false;
                    }
                } else if (schema.value("additionalProperties", true) == false) {
                    error = path + ": unexpected key " + it.key();
                    return false;
                }
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        std::size_t i = 0;
        for (const auto& element : value) {
            if (!validate_schema(element, schema["items"], error,
                                 path + "[" + std::to_string(i) + "]")) {
                return false;
            }
            ++i;
        }
    }
    return true;
}

} // namespace retractlab::testing

#endif
