#pragma once

// Wire formats. Every number is written as a full decimal string.
//
//   triplet TSV:   n <TAB> x <TAB> y <TAB> z
//   triplet JSONL: {"n":"0","x":"22","y":"23","z":"717"}
//   hit TSV:       x <TAB> y <TAB> z <TAB> delta
//   hit JSONL:     {"x":"1","y":"2","z":"3","delta":"8"}
//
// Neither format has a header line.

#include "nearmiss/identities.hpp"
#include "nearmiss/search.hpp"
#include "nearmiss/sequences.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string_view>

namespace nearmiss {

enum class OutputFormat {
    tsv,
    jsonl,
};

std::optional<OutputFormat> parse_output_format(std::string_view name);

void write_triplet(std::ostream& os, const Triplet& t, OutputFormat format);
void write_hit(std::ostream& os, const SearchHit& hit, OutputFormat format);

nlohmann::ordered_json to_json(const IdentityCheck& check);
nlohmann::ordered_json to_json(const ExpansionTable& table);
nlohmann::ordered_json to_json(const IdentityReport& report);

} // namespace nearmiss
