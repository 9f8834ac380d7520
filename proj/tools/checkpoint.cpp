#include "checkpoint.hpp"

#include <charrel/version.hpp>

#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace charrel::cli {

namespace {

using json = nlohmann::ordered_json;

json record_json(const SweepRecord& r) {
    json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["quotient_dim"] = r.quotient_dim;
    j["complement"] = r.complement;
    j["elapsed_ms"] = r.elapsed_ms;
    j["engine_version"] = kEngineVersion;
    return j;
}

// strict field extraction; returns false on any shape problem
bool parse_record(const std::string& line, SweepRecord& out, std::string& version) {
    const json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) return false;
    if (!j.contains("n") || !j["n"].is_number_unsigned()) return false;
    if (!j.contains("k") || !j["k"].is_number_unsigned()) return false;
    if (!j.contains("quotient_dim") || !j["quotient_dim"].is_number_unsigned()) return false;
    if (!j.contains("complement") || !j["complement"].is_array()) return false;
    if (!j.contains("elapsed_ms") || !j["elapsed_ms"].is_number_unsigned()) return false;
    if (!j.contains("engine_version") || !j["engine_version"].is_string()) return false;
    out.n = j["n"].get<unsigned>();
    out.k = j["k"].get<unsigned>();
    out.quotient_dim = j["quotient_dim"].get<unsigned>();
    out.complement.clear();
    for (const json& e : j["complement"]) {
        if (!e.is_number_unsigned()) return false;
        out.complement.push_back(e.get<unsigned>());
    }
    out.elapsed_ms = j["elapsed_ms"].get<std::uint64_t>();
    version = j["engine_version"].get<std::string>();
    return true;
}

}  // namespace

CheckpointStore::CheckpointStore(std::string path) : path_(std::move(path)) {}

std::vector<std::string> CheckpointStore::load() {
    std::vector<std::string> warnings;
    records_.clear();
    std::ifstream in(path_);
    if (!in) return warnings;  // fresh file: nothing to resume

    std::set<std::pair<unsigned, unsigned>> seen;
    std::string line;
    std::size_t lineno = 0;
    bool dirty = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        SweepRecord rec;
        std::string version;
        if (!parse_record(line, rec, version)) {
            // a crash mid-append can only damage the tail; cut there and keep
            // everything already accepted
            std::ostringstream os;
            os << "checkpoint: line " << lineno << " is corrupt; truncating from there";
            if (in.peek() != std::char_traits<char>::eof())
                os << " (later lines are discarded too)";
            warnings.push_back(os.str());
            dirty = true;
            break;
        }
        if (version != kEngineVersion) {
            warnings.push_back("checkpoint: line " + std::to_string(lineno) +
                               " was written by engine " + version +
                               "; recomputing that pair");
            dirty = true;
            continue;
        }
        if (!seen.emplace(rec.n, rec.k).second) {
            warnings.push_back("checkpoint: duplicate record for (n, k) = (" +
                               std::to_string(rec.n) + ", " + std::to_string(rec.k) +
                               "); keeping the first");
            dirty = true;
            continue;
        }
        records_.push_back(std::move(rec));
    }
    // rewrite once when anything was dropped, so the next resume starts clean
    if (dirty) persist();
    return warnings;
}

void CheckpointStore::append(const SweepRecord& rec) {
    records_.push_back(rec);
    persist();
}

void CheckpointStore::persist() const {
    const std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("checkpoint: cannot write " + tmp);
        for (const SweepRecord& r : records_) out << record_json(r).dump() << '\n';
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) throw std::runtime_error("checkpoint: rename to " + path_ + " failed: " + ec.message());
}

}  // namespace charrel::cli
