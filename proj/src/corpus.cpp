#include "wordgap/corpus.hpp"

#include "wordgap/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace wordgap {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& file, const std::string& field,
                               const std::string& detail) {
    throw ContractError("group file '" + file + "', field '" + field + "': " + detail);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ContractError("cannot open group file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ContractError("group file '" + path + "' is not valid JSON: " + std::string(e.what()));
    }
    return j;
}

}  // namespace

FiniteGroup group_from_json_file(const std::string& path) {
    const json j = load_json(path);
    if (!j.is_object()) schema_error(path, "<root>", "expected an object");
    if (!j.contains("name") || !j["name"].is_string()) schema_error(path, "name", "missing string");
    if (!j.contains("kind") || !j["kind"].is_string()) schema_error(path, "kind", "missing string");
    const std::string name = j["name"], kind = j["kind"];

    if (kind == "permutation") {
        if (!j.contains("degree") || !j["degree"].is_number_integer())
            schema_error(path, "degree", "missing integer");
        if (!j.contains("generators") || !j["generators"].is_array())
            schema_error(path, "generators", "missing array");
        const int degree = j["degree"];
        std::vector<std::vector<int>> gens;
        for (std::size_t k = 0; k < j["generators"].size(); ++k) {
            const json& g = j["generators"][k];
            if (!g.is_array())
                schema_error(path, "generators[" + std::to_string(k) + "]", "expected an array");
            std::vector<int> perm;
            for (const json& v : g) {
                if (!v.is_number_integer())
                    schema_error(path, "generators[" + std::to_string(k) + "]",
                                 "expected integer entries");
                perm.push_back(v.get<int>());
            }
            gens.push_back(std::move(perm));
        }
        try {
            return FiniteGroup::from_generators(degree, std::move(gens), name);
        } catch (const ContractError& e) {
            schema_error(path, "generators", e.what());
        }
    }
    if (kind == "cayley") {
        if (!j.contains("table") || !j["table"].is_array())
            schema_error(path, "table", "missing array");
        std::vector<std::vector<int>> table;
        for (const json& row : j["table"]) {
            if (!row.is_array()) schema_error(path, "table", "expected rows of integers");
            std::vector<int> r;
            for (const json& v : row) r.push_back(v.get<int>());
            table.push_back(std::move(r));
        }
        try {
            return FiniteGroup::from_table(table, name);
        } catch (const ContractError& e) {
            schema_error(path, "table", e.what());
        }
    }
    if (kind == "named") {
        if (!j.contains("constructor") || !j["constructor"].is_string())
            schema_error(path, "constructor", "missing string");
        try {
            FiniteGroup G = FiniteGroup::named(j["constructor"].get<std::string>());
            G.set_name(name);
            return G;
        } catch (const ContractError& e) {
            schema_error(path, "constructor", e.what());
        }
    }
    schema_error(path, "kind", "expected permutation, cayley or named");
}

std::vector<CorpusEntry> ingest(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw ContractError("'" + dir + "' is not a directory");
    std::vector<std::string> files;
    for (const auto& de : fs::directory_iterator(dir)) {
        if (!de.is_regular_file()) continue;
        const std::string fname = de.path().filename().string();
        if (fname == "manifest.json" || de.path().extension() != ".json") continue;
        files.push_back(de.path().string());
    }
    std::sort(files.begin(), files.end());
    std::vector<CorpusEntry> out;
    for (const std::string& f : files) out.push_back({f, group_from_json_file(f)});
    std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
        if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
        return a.group.name() < b.group.name();
    });
    return out;
}

FiniteGroup load_group(const std::string& spec) {
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
        return group_from_json_file(spec);
    return FiniteGroup::named(spec);
}

bool manifest_matches(const std::string& dir, std::string* detail) {
    namespace fs = std::filesystem;
    const std::string mpath = (fs::path(dir) / "manifest.json").string();
    const nlohmann::json m = load_json(mpath);
    const std::vector<CorpusEntry> entries = ingest(dir);
    if (!m.contains("count") || m["count"].get<std::size_t>() != entries.size()) {
        if (detail)
            *detail = "manifest count " + m["count"].dump() + " vs " +
                      std::to_string(entries.size()) + " ingested groups";
        return false;
    }
    std::size_t matched = 0;
    for (const nlohmann::json& f : m["files"]) {
        const std::string fname = f["file"].get<std::string>();
        bool found = false;
        for (const CorpusEntry& e : entries) {
            if (fs::path(e.file).filename().string() != fname) continue;
            found = true;
            if (e.group.order() != f["order"].get<int>() ||
                e.group.name() != f["name"].get<std::string>()) {
                if (detail) *detail = "mismatch for " + fname;
                return false;
            }
            break;
        }
        if (!found) {
            if (detail) *detail = "manifest file " + fname + " not ingested";
            return false;
        }
        ++matched;
    }
    if (matched != entries.size()) {
        if (detail)
            *detail = "manifest lists " + std::to_string(matched) + " of " +
                      std::to_string(entries.size()) + " files";
        return false;
    }
    return true;
}

}  // namespace wordgap
