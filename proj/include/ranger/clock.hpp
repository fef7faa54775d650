#pragma once

#include <chrono>
#include <fstream>
#include <string>
#include <unordered_map>

#include "ranger/common.hpp"

namespace ranger {

// Policies consume an injected monotonic time source so that every
// latency-sensitive code path can also be driven deterministically.
// A clock provides now_ms(), and is notified after each processed range
// (the real clock ignores this; the simulated one advances by the modeled
// cost).

struct steady_clock_source {
    double now_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now().time_since_epoch())
            .count();
    }
    void on_range(range_id) {}
};

// Per-range processing costs in milliseconds. File format, one entry per
// line: `<range-id>\t<ms>`, with `*\t<ms>` setting the default.
struct cost_model {
    std::unordered_map<range_id, double> per_range;
    double default_ms = 1.0;

    double cost(range_id r) const {
        auto it = per_range.find(r);
        return it == per_range.end() ? default_ms : it->second;
    }

    static cost_model from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw io_error("cannot open cost model: " + path);
        cost_model m;
        std::string line;
        size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            size_t tab = line.find('\t');
            if (tab == std::string::npos) {
                throw parse_error("cost model line " + std::to_string(line_no) +
                                  ": expected range<TAB>ms");
            }
            try {
                double ms = std::stod(line.substr(tab + 1));
                if (line.substr(0, tab) == "*") {
                    m.default_ms = ms;
                } else {
                    m.per_range[static_cast<range_id>(
                        std::stoul(line.substr(0, tab)))] = ms;
                }
            } catch (const std::exception&) {
                throw parse_error("cost model line " + std::to_string(line_no) +
                                  ": bad value");
            }
        }
        return m;
    }
};

struct simulated_clock {
    cost_model model;
    double now = 0.0;

    double now_ms() const { return now; }
    void on_range(range_id r) { now += model.cost(r); }
};

}  // namespace ranger
