#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "specseq/cosimplicial.hpp"

namespace specseq {

using json = nlohmann::ordered_json;

/// On-disk complex document: the cosimplicial chain complex plus optional
/// extra payloads that ride along untouched (an involution given per
/// level/degree as sparse entries, and a structure map for internal
/// operations).
struct ComplexDoc {
    Cosimplicial cx;
    std::optional<json> involution;
    std::optional<json> structure_map;
};

/// Canonical JSON form: fixed key order, sparse matrix entries as sorted
/// [degree-indexed] triplets. serialize(parse(serialize(x))) is byte-identical
/// to serialize(x).
json to_json(const ComplexDoc& doc);
json to_json(const Cosimplicial& cx);

ComplexDoc parse_complex(const json& j);

/// Canonical textual rendering (two-space indent, trailing newline).
std::string dump_complex(const ComplexDoc& doc);

ComplexDoc load_complex_file(const std::string& path);
void save_complex_file(const ComplexDoc& doc, const std::string& path);

}  // namespace specseq
