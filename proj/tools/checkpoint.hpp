#pragma once

#include <charrel/obstruct.hpp>

#include <string>
#include <vector>

// Crash-safe sweep checkpointing. The file is line-delimited json, one record
// per completed (n, k); every write goes through a temp file and an atomic
// rename so the file parses at every instant. Loading tolerates a corrupt
// trailing line (a crash mid-write) by truncating it with a warning — it
// never aborts a resume.

namespace charrel::cli {

class CheckpointStore {
public:
    explicit CheckpointStore(std::string path);

    // Reads the file (absent is fine) and returns human-readable warnings:
    // corrupt tail truncated, duplicate (n, k) ignored first-wins, records
    // from a different engine version dropped for recomputation.
    std::vector<std::string> load();

    const std::vector<SweepRecord>& records() const { return records_; }

    // Record one completed pair and persist the whole store atomically.
    void append(const SweepRecord& rec);

private:
    void persist() const;

    std::string path_;
    std::vector<SweepRecord> records_;
};

}  // namespace charrel::cli
