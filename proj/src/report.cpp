#include "altsum/report.hpp"

#include <sstream>

#include "altsum/errors.hpp"

namespace altsum {

using nlohmann::json;

json Report::to_json() const {
    json doc;
    doc["command"] = command;
    doc["inputs_digest"] = inputs_digest;
    if (lhs) doc["lhs"] = *lhs;
    if (rhs) doc["rhs"] = *rhs;
    if (value) doc["value"] = *value;
    doc["verdict"] = verdict;
    doc["witness"] = witness;
    doc["details"] = details;
    doc["term_count"] = term_count;
    doc["notes"] = notes;
    if (elapsed_ms) doc["elapsed_ms"] = *elapsed_ms;
    doc["exit_code"] = exit_code;
    return doc;
}

Report Report::from_json(const json& doc) {
    try {
        Report r;
        r.command = doc.at("command").get<std::string>();
        r.inputs_digest = doc.at("inputs_digest").get<std::string>();
        if (doc.contains("lhs")) r.lhs = doc["lhs"].get<std::string>();
        if (doc.contains("rhs")) r.rhs = doc["rhs"].get<std::string>();
        if (doc.contains("value")) r.value = doc["value"].get<std::string>();
        r.verdict = doc.at("verdict").get<bool>();
        r.witness = doc.at("witness");
        r.details = doc.at("details");
        r.term_count = doc.at("term_count").get<std::uint64_t>();
        r.notes = doc.at("notes").get<std::vector<std::string>>();
        if (doc.contains("elapsed_ms")) r.elapsed_ms = doc["elapsed_ms"].get<double>();
        r.exit_code = doc.at("exit_code").get<int>();
        return r;
    } catch (const json::exception& e) {
        throw InputError(std::string("not a report: ") + e.what());
    }
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "command:  " << command << '\n';
    os << "inputs:   fnv1a64:" << inputs_digest << '\n';
    if (value) os << "value:    " << *value << '\n';
    if (lhs) os << "lhs:      " << *lhs << '\n';
    if (rhs) os << "rhs:      " << *rhs << '\n';
    os << "verdict:  " << (verdict ? "true" : "false") << '\n';
    os << "terms:    " << term_count << '\n';
    if (!witness.is_null()) os << "witness:  " << witness.dump() << '\n';
    for (const auto& [key, v] : details.items())
        os << "detail:   " << key << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    for (const auto& note : notes) os << "note:     " << note << '\n';
    if (elapsed_ms) os << "elapsed:  " << *elapsed_ms << " ms\n";
    return os.str();
}

} // namespace altsum
