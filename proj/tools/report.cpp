#include "report.hpp"

namespace cubicdet::report {

json labels(const std::vector<std::size_t>& indices) {
    json out = json::array();
    for (auto i : indices) out.push_back(line_label(i));
    return out;
}

json make_report(const std::string& command) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command;
    return out;
}

std::string dump(const json& report) { return report.dump(2); }

json parse_report(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("report is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("schema_version") || !j["schema_version"].is_string())
        throw SchemaError("report has no schema_version");
    const auto version = j["schema_version"].get<std::string>();
    int major = -1;
    try {
        major = std::stoi(version.substr(0, version.find('.')));
    } catch (const std::exception&) {
        throw SchemaError("malformed schema_version " + version);
    }
    if (major != kSchemaMajor) throw SchemaError("unsupported schema major version " + version);
    return j;
}

}  // namespace cubicdet::report
