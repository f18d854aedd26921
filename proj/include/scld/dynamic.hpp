#ifndef SCLD_DYNAMIC_HPP
#define SCLD_DYNAMIC_HPP

// Two-stage tracing: a list-decoding screen narrows the users to a candidate
// set W, the candidates receive fresh fingerprints from a separable code,
// and the same coalition is traced exactly in the second stage.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scld/code.hpp"

namespace scld {

struct DynamicSessionConfig {
    std::size_t users = 0;
    std::size_t t = 0;
    Code stage1;
    /// Largest residual of a size-t coalition of stage1 (oracle-measured).
    std::size_t list_size = 0;
    /// log L / log M.
    double alpha = 0;
    std::uint64_t seed = 0;
};

/// Fresh t-separable code with exactly w codewords (w >= 1).
Code stage2_code(std::size_t w, std::size_t t, std::uint64_t seed);

/// Random stage-1 code with M codewords whose size-t residuals stay small.
/// Throws std::runtime_error after a bounded number of failed attempts.
DynamicSessionConfig plan_session(std::size_t M, std::size_t t, std::uint64_t seed);
/// Uses the given stage-1 code as is.
DynamicSessionConfig plan_session(Code stage1, std::size_t t, std::uint64_t seed);

struct DynamicTranscript {
    CoalitionIndexSet planted;
    EvidenceVector evidence1;
    CoalitionIndexSet candidates;
    std::string stage2_provenance;
    std::size_t stage2_length = 0;
    /// assignment[k] is the user receiving stage-2 codeword k.
    std::vector<std::size_t> assignment;
    EvidenceVector evidence2;
    CoalitionIndexSet traced;
    std::uint64_t subsets_tested = 0;
    bool success = false;
    std::string failure;
    double stage1_seconds = 0;
    double stage2_seconds = 0;
};

DynamicTranscript run_two_stage(const DynamicSessionConfig& config, const CoalitionIndexSet& planted,
                                std::uint64_t seed);

/// Uniform coalition size in 1..t, then uniform members.
CoalitionIndexSet random_coalition(std::size_t users, std::size_t t, std::uint64_t seed);

struct DynamicSummary {
    std::size_t trials = 0;
    std::size_t recovered = 0;
    double mean_candidates = 0;
    std::size_t max_candidates = 0;
    double stage1_seconds = 0;
    double stage2_seconds = 0;
};

/// Runs `trials` seeded sessions (in parallel; results in trial order).
std::vector<DynamicTranscript> simulate(const DynamicSessionConfig& config, std::size_t trials, std::uint64_t seed);
DynamicSummary summarize(const std::vector<DynamicTranscript>& transcripts);

/// One JSON line; timings are left out so equal seeds give equal bytes.
std::string to_json(const DynamicTranscript& tr, std::size_t trial);
std::string to_json(const DynamicSummary& s, const DynamicSessionConfig& config, bool with_timings);

}  // namespace scld

#endif  // SCLD_DYNAMIC_HPP
