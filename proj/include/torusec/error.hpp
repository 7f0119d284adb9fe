#pragma once

#include <stdexcept>
#include <string>

namespace torusec {

enum class Errc {
    invalid_parameters,
    degenerate_dimension,
    not_adjacent_planes,
    not_in_plane,
    same_edge,
    color_out_of_range,
    start_not_in_colors,
    stale_component,
    conflict_with_existing,
    boundary_conflict,
    overlapping_domains,
    precondition_violated,
    all_lists_identical,
    improper_precoloring,
    budget_exceeded,
    hypothesis_not_met,
    unsupported_girth,
    claim_violated,
    not_distance4_matching,
    odd_cycle_length,
    neighborhood_disturbed,
    construction_not_found,
    internal_assertion,
    parse_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Internal consistency checks that stay on in release builds; cheap, boundary-level.
#define TORUSEC_CHECK(cond, code, msg) \
    do { \
        if (!(cond)) ::torusec::fail((code), (msg)); \
    } while (0)

#define TORUSEC_ASSERT(cond, msg) TORUSEC_CHECK(cond, ::torusec::Errc::internal_assertion, (msg))

} // namespace torusec
