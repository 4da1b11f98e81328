#include "lie4/report.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace lie4 {

Json make_report(const std::string& command) {
    Json j;
    j["command"] = command;
    j["inputs"] = Json::object();
    j["outputs"] = Json::object();
    j["status"] = "ok";
    return j;
}

void write_json(const Json& j, const std::string& path) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream os(p);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << j.dump(2) << '\n';
}

namespace {

bool type_matches(const Json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

std::string validate(const Json& doc, const Json& schema, const std::string& where) {
    if (schema.contains("type")) {
        const std::string t = schema["type"].get<std::string>();
        if (!type_matches(doc, t))
            return where + ": expected " + t + ", got " + std::string(doc.type_name());
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& v : schema["enum"])
            if (v == doc) ok = true;
        if (!ok) return where + ": value not in enum";
    }
    if (doc.is_object()) {
        if (schema.contains("required"))
            for (const auto& k : schema["required"])
                if (!doc.contains(k.get<std::string>()))
                    return where + ": missing required key '" + k.get<std::string>() + "'";
        if (schema.contains("properties")) {
            for (auto it = schema["properties"].begin(); it != schema["properties"].end();
                 ++it) {
                if (!doc.contains(it.key())) continue;
                std::string err = validate(doc[it.key()], it.value(), where + "." + it.key());
                if (!err.empty()) return err;
            }
            if (schema.value("additionalProperties", true) == false) {
                for (auto it = doc.begin(); it != doc.end(); ++it)
                    if (!schema["properties"].contains(it.key()))
                        return where + ": unexpected key '" + it.key() + "'";
            }
        }
    }
    if (doc.is_array() && schema.contains("items")) {
        for (std::size_t i = 0; i < doc.size(); ++i) {
            std::string err =
                validate(doc[i], schema["items"], where + "[" + std::to_string(i) + "]");
            if (!err.empty()) return err;
        }
    }
    return "";
}

} // namespace

std::string validate_against_schema(const Json& doc, const Json& schema) {
    return validate(doc, schema, "$");
}

} // namespace lie4
