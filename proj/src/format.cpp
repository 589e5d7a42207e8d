#include "nearmiss/format.hpp"

namespace nearmiss {

std::optional<OutputFormat> parse_output_format(std::string_view name) {
    if (name == "tsv") return OutputFormat::tsv;
    if (name == "jsonl") return OutputFormat::jsonl;
    return std::nullopt;
}

void write_triplet(std::ostream& os, const Triplet& t, OutputFormat format) {
    if (format == OutputFormat::tsv) {
        os << t.n << '\t' << t.x << '\t' << t.y << '\t' << t.z << '\n';
        return;
    }
    nlohmann::ordered_json row;
    row["n"] = std::to_string(t.n);
    row["x"] = t.x.to_string();
    row["y"] = t.y.to_string();
    row["z"] = t.z.to_string();
    os << row.dump() << '\n';
}

void write_hit(std::ostream& os, const SearchHit& hit, OutputFormat format) {
    if (format == OutputFormat::tsv) {
        os << hit.x << '\t' << hit.y << '\t' << hit.z << '\t' << hit.delta << '\n';
        return;
    }
    nlohmann::ordered_json row;
    row["x"] = hit.x.to_string();
    row["y"] = hit.y.to_string();
    row["z"] = hit.z.to_string();
    row["delta"] = hit.delta.to_string();
    os << row.dump() << '\n';
}

nlohmann::ordered_json to_json(const IdentityCheck& check) {
    nlohmann::ordered_json out;
    out["name"] = check.name;
    out["left"] = check.left.to_string();
    out["right"] = check.right.to_string();
    out["equal"] = check.equal;
    return out;
}

nlohmann::ordered_json to_json(const ExpansionTable& table) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (int slot : ExpansionTable::kSlots) {
        auto it = table.entries.find(slot);
        if (it == table.entries.end()) continue;
        nlohmann::ordered_json entry;
        entry["slot"] = slot;
        entry["coeff"] = it->second.coeff.to_string();
        entry["alternating"] = it->second.alternating;
        out.push_back(std::move(entry));
    }
    return out;
}

nlohmann::ordered_json to_json(const IdentityReport& report) {
    nlohmann::ordered_json out;
    out["coefficient_identities"] = nlohmann::ordered_json::array();
    for (const IdentityCheck& c : report.five) out["coefficient_identities"].push_back(to_json(c));
    out["root_identities"] = nlohmann::ordered_json::array();
    for (const IdentityCheck& c : report.roots) out["root_identities"].push_back(to_json(c));
    nlohmann::ordered_json tables;
    tables["lhs"] = to_json(report.lhs_table);
    tables["rhs"] = to_json(report.rhs_table);
    tables["equal"] = report.expansions_equal;
    if (!report.expansion_error.empty()) tables["error"] = report.expansion_error;
    out["expansion_tables"] = std::move(tables);
    out["all_passed"] = report.all_passed();
    return out;
}

} // namespace nearmiss
