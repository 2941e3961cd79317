#pragma once

#include "wordgap/finite_group.hpp"

#include <string>
#include <vector>

namespace wordgap {

struct CorpusEntry {
    std::string file;
    FiniteGroup group;
};

// One group file. Schema: {"name": str, "kind": "permutation"|"cayley"|
// "named", ...} with exactly the fields of its kind: degree + generators
// (0-based permutations), table (0-based Cayley, identity first), or
// constructor (a named spec). Violations name the file and field.
FiniteGroup group_from_json_file(const std::string& path);

// Every *.json group file under dir (manifest.json excluded), ordered by
// (order, name).
std::vector<CorpusEntry> ingest(const std::string& dir);

// Named spec, or a path to a .json group file.
FiniteGroup load_group(const std::string& spec);

// Compares manifest.json {"count", "files": [{"file","name","order"}...]}
// against the ingested directory.
bool manifest_matches(const std::string& dir, std::string* detail = nullptr);

}  // namespace wordgap
