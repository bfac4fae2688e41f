#pragma once

#include <cstddef>
#include <limits>
#include <string>

#include <json.hpp>

#include "eulerian/quad_search.hpp"

namespace eulerian {

// Drives the quadruple search against the filesystem: JSONL hit stream,
// checkpoint/resume, and a parallel worker pool whose output order is
// identical to the sequential one.
struct RunnerConfig {
    SearchBounds bounds;
    std::string out_path;        // JSONL hits, appended on resume
    std::string checkpoint_path; // empty: no checkpointing
    bool resume = false;
    int jobs = 1;
    // Stop (checkpointed, resumable) after this many work units.
    std::size_t max_units = std::numeric_limits<std::size_t>::max();
};

struct RunnerStats {
    std::size_t total_units = 0;
    std::size_t units_done = 0;
    std::size_t full_hits = 0;
    std::size_t near_miss_hits = 0;
    bool completed = false; // all units processed
};

// Canonical fingerprint of the bounds; resume refuses a mismatch.
std::string bounds_fingerprint(const SearchBounds& bounds);

nlohmann::ordered_json hit_to_json(const SearchHit& hit);

RunnerStats run_search(const RunnerConfig& config);

} // namespace eulerian
