#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "uquat/action.hpp"

namespace uquat::bench {

// Timing comparison of the two transform pipelines for one algebra:
// per-element sandwich product versus a precomputed matrix times coordinates.
struct Result {
    Algebra alg;
    std::size_t batch = 0;
    int iterations = 0;
    double sandwich_ns_per_op = 0.0;
    double matrix_ns_per_op = 0.0;
    double max_divergence = 0.0;  // sup difference between the pipelines
    bool agree = false;           // max_divergence <= 1e-10
    double checksum = 0.0;        // keeps the timed loops observable
};

// Runs `iterations` timed passes over a batch of random vectors per algebra
// and reports the best per-op time of each pipeline.
std::vector<Result> run(int iterations, std::size_t batch, std::uint64_t seed = 42);

}  // namespace uquat::bench
