#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace ranger {

// Go/no-go termination policies, evaluated before each document range.
// fixed(n) processes the first n ranges of the ordering; the others watch
// the measured per-query elapsed time against the latency budget B.
enum class policy_kind { fixed, overshoot, undershoot, predictive, reactive };

struct policy_state {
    policy_kind kind = policy_kind::fixed;
    uint32_t fixed_n = std::numeric_limits<uint32_t>::max();
    double budget_ms = std::numeric_limits<double>::infinity();  // B
    double alpha = 1.0;        // predictive safety multiplier
    double beta = 1.5;         // reactive feedback aggressiveness (> 1)
    double q_tolerance = 0.01; // SLA tolerance (0.01 for a P99 target)
    double t_max_ms = 5.0;     // absolute per-range cost cap (undershoot)
};

// `completed` is the number of ranges finished so far, `elapsed_ms` the
// time they took. Returns true to continue into the next range.
//
//   overshoot:   continue while t_i < B
//   undershoot:  continue while t_i + t_max < B
//   predictive:  continue while t_i + alpha * (t_i / i) < B
//
// The predictive estimate needs at least one completed range, so the first
// range is always processed.
inline bool decide(const policy_state& p, uint32_t completed, double elapsed_ms) {
    switch (p.kind) {
        case policy_kind::fixed:
            return completed < p.fixed_n;
        case policy_kind::overshoot:
            return elapsed_ms < p.budget_ms;
        case policy_kind::undershoot:
            return elapsed_ms + p.t_max_ms < p.budget_ms;
        case policy_kind::predictive:
        case policy_kind::reactive:
            if (completed == 0) return true;
            return elapsed_ms + p.alpha * (elapsed_ms / completed) < p.budget_ms;
    }
    return true;
}

// Post-query feedback for the reactive policy: a miss scales alpha up by
// beta, a within-budget query relaxes it by (1/beta)^Q, so one miss is paid
// back by roughly 1/Q compliant queries.
inline double reactive_update(double alpha, double beta, double q_tolerance,
                              double elapsed_ms, double budget_ms) {
    if (elapsed_ms > budget_ms) return alpha * beta;
    return alpha * std::pow(1.0 / beta, q_tolerance);
}

// Parses "fixed:N" | "overshoot" | "undershoot" | "predictive" | "reactive".
inline policy_kind parse_policy_kind(const std::string& s, uint32_t* fixed_n) {
    if (s.rfind("fixed", 0) == 0) {
        if (s.size() > 5) {
            if (s[5] != ':') throw std::invalid_argument("unknown policy: " + s);
            try {
                *fixed_n = static_cast<uint32_t>(std::stoul(s.substr(6)));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad fixed policy count: " + s);
            }
        } else {
            *fixed_n = std::numeric_limits<uint32_t>::max();
        }
        return policy_kind::fixed;
    }
    if (s == "overshoot") return policy_kind::overshoot;
    if (s == "undershoot") return policy_kind::undershoot;
    if (s == "predictive") return policy_kind::predictive;
    if (s == "reactive") return policy_kind::reactive;
    throw std::invalid_argument("unknown policy: " + s);
}

}  // namespace ranger
