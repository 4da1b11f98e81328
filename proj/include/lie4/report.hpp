#ifndef LIE4_REPORT_HPP
#define LIE4_REPORT_HPP

#include <string>

#include <json.hpp>

namespace lie4 {

using Json = nlohmann::json;

// Skeleton report; callers fill inputs/outputs.
Json make_report(const std::string& command);

void write_json(const Json& j, const std::string& path);

// Structural validation against the committed schema subset: type,
// required, properties, enum, additionalProperties. Returns an empty
// string on success, else a diagnostic.
std::string validate_against_schema(const Json& doc, const Json& schema);

} // namespace lie4

#endif
