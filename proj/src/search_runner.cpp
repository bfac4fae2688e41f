#include "eulerian/search_runner.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <set>
#include <stdexcept>
#include <vector>

namespace eulerian {

namespace {

std::string fnv1a64(const std::string& data) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

} // namespace

std::string bounds_fingerprint(const SearchBounds& b) {
    std::string canon = "x=" + b.x_height_max.get_str() + ";m=" + b.m_height_max.get_str() +
                        ";k=" + b.k_range.lo.get_str() + ":" + b.k_range.hi.get_str() +
                        ";u=" + b.u_range.lo.get_str() + ":" + b.u_range.hi.get_str();
    return fnv1a64(canon);
}

nlohmann::ordered_json hit_to_json(const SearchHit& hit) {
    nlohmann::ordered_json j;
    j["class"] = hit.cls == HitClass::full ? "full" : "near5";
    j["params"] = {{"e", hit.params.e.get_str()},
                   {"f", hit.params.f.get_str()},
                   {"g", hit.params.g.get_str()},
                   {"h", hit.params.h.get_str()}};
    j["k_point"] = {{"K", hit.k_point.K().str()}, {"J", hit.k_point.J().str()}};
    j["u_point"] = {{"U", hit.u_point.K().str()},
                    {"V", hit.u_point.J().str()},
                    {"scale", hit.u_scale.get_str()}};
    nlohmann::ordered_json roots = nlohmann::ordered_json::array();
    for (const Rat& r : hit.roots)
        roots.push_back(r.str());
    j["roots"] = std::move(roots);
    nlohmann::ordered_json squares = nlohmann::ordered_json::array();
    for (const Rat& r : hit.roots)
        squares.push_back(sq(r).str());
    j["squares"] = std::move(squares);
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (const PairReport& pr : hit.pairs) {
        nlohmann::ordered_json p;
        p["i"] = pr.i;
        p["j"] = pr.j;
        p["value"] = pr.value.str();
        p["square"] = pr.square;
        if (pr.root)
            p["root"] = pr.root->str();
        pairs.push_back(std::move(p));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

namespace {

struct Checkpoint {
    std::string fingerprint;
    std::size_t units_done = 0;
    std::set<std::string> seen;
};

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read checkpoint " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    Checkpoint ck;
    ck.fingerprint = j.at("config_hash").get<std::string>();
    ck.units_done = j.at("units_done").get<std::size_t>();
    for (const auto& k : j.at("seen"))
        ck.seen.insert(k.get<std::string>());
    return ck;
}

void store_checkpoint(const std::string& path, const Checkpoint& ck, std::size_t total_units) {
    nlohmann::ordered_json j;
    j["config_hash"] = ck.fingerprint;
    j["units_done"] = ck.units_done;
    j["total_units"] = total_units;
    j["seen"] = nlohmann::ordered_json::array();
    for (const std::string& k : ck.seen)
        j["seen"].push_back(k);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << j.dump() << '\n';
    }
    std::rename(tmp.c_str(), path.c_str());
}

} // namespace

RunnerStats run_search(const RunnerConfig& config) {
    const std::vector<TripleParams> units = enumerate_units(config.bounds);
    const std::string fingerprint = bounds_fingerprint(config.bounds);

    Checkpoint ck;
    ck.fingerprint = fingerprint;
    if (config.resume) {
        if (config.checkpoint_path.empty())
            throw std::invalid_argument("resume requested without a checkpoint path");
        ck = load_checkpoint(config.checkpoint_path);
        if (ck.fingerprint != fingerprint)
            throw std::runtime_error("checkpoint was written for different bounds");
        if (ck.units_done > units.size())
            throw std::runtime_error("checkpoint is ahead of the configured grid");
    }

    std::ofstream out(config.out_path, config.resume ? std::ios::app : std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + config.out_path);

    RunnerStats stats;
    stats.total_units = units.size();
    stats.units_done = ck.units_done;

    std::size_t stop = units.size();
    if (config.max_units < stop - ck.units_done)
        stop = ck.units_done + config.max_units;

    const int jobs = std::max(1, config.jobs);
    const std::size_t window = static_cast<std::size_t>(jobs) * 2;
    std::vector<std::future<std::vector<SearchHit>>> pending;
    std::size_t next_launch = ck.units_done;

    auto launch = [&](std::size_t idx) {
        pending.push_back(std::async(std::launch::async, [&units, &config, idx] {
            return search_unit(units[idx], config.bounds);
        }));
    };

    while (next_launch < stop && pending.size() < window)
        launch(next_launch++);

    std::size_t next_consume = ck.units_done;
    std::size_t pending_head = 0;
    while (next_consume < stop) {
        std::vector<SearchHit> hits = pending[pending_head++].get();
        for (const SearchHit& hit : hits) {
            if (!ck.seen.insert(hit_key(hit)).second)
                continue;
            out << hit_to_json(hit).dump() << '\n';
            if (hit.cls == HitClass::full)
                ++stats.full_hits;
            else
                ++stats.near_miss_hits;
        }
        ++next_consume;
        ck.units_done = next_consume;
        if (next_launch < stop)
            launch(next_launch++);
        if (!config.checkpoint_path.empty())
            store_checkpoint(config.checkpoint_path, ck, units.size());
    }

    out.flush();
    stats.units_done = ck.units_done;
    stats.completed = ck.units_done == units.size();
    return stats;
}

} // namespace eulerian
