#ifndef TRGEO_TESTS_SCHEMA_CHECK_HPP
#define TRGEO_TESTS_SCHEMA_CHECK_HPP

// Minimal structural validator for the subset of JSON Schema the shipped
// schemas use: type (possibly a list, including "null"), required,
// properties, items, enum, minItems/maxItems, minimum/maximum.

#include <json.hpp>

#include <string>

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    return false;
}

// Returns an empty string when valid, else a path-prefixed complaint.
inline std::string validate(const json& value, const json& schema,
                            const std::string& path = "$") {
    if (schema.contains("type")) {
        const json& t = schema.at("type");
        bool ok = false;
        if (t.is_string())
            ok = type_matches(value, t.get<std::string>());
        else
            for (const json& alt : t) ok = ok || type_matches(value, alt.get<std::string>());
        if (!ok) return path + ": type mismatch";
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const json& alt : schema.at("enum")) ok = ok || (alt == value);
        if (!ok) return path + ": not in enum";
    }
    if (value.is_null()) return ""; // nullable fields carry no structure
    if (schema.contains("required") && value.is_object())
        for (const json& key : schema.at("required"))
            if (!value.contains(key.get<std::string>()))
                return path + ": missing required '" + key.get<std::string>() + "'";
    if (schema.contains("properties") && value.is_object())
        for (const auto& [key, sub] : schema.at("properties").items())
            if (value.contains(key)) {
                const std::string err = validate(value.at(key), sub, path + "." + key);
                if (!err.empty()) return err;
            }
    if (value.is_array()) {
        if (schema.contains("minItems") &&
            value.size() < schema.at("minItems").get<std::size_t>())
            return path + ": too few items";
        if (schema.contains("maxItems") &&
            value.size() > schema.at("maxItems").get<std::size_t>())
            return path + ": too many items";
        if (schema.contains("items")) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                const std::string err = validate(value[i], schema.at("items"),
                                                 path + "[" + std::to_string(i) + "]");
                if (!err.empty()) return err;
            }
        }
    }
    if (value.is_number()) {
        if (schema.contains("minimum") && value.get<double>() < schema.at("minimum").get<double>())
            return path + ": below minimum";
        if (schema.contains("maximum") && value.get<double>() > schema.at("maximum").get<double>())
            return path + ": above maximum";
    }
    return "";
}

} // namespace schema_check

#endif
