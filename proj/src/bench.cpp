#include "uquat/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "uquat/checks.hpp"

namespace uquat::bench {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ns(Clock::time_point t0, Clock::time_point t1) {
    return std::chrono::duration<double, std::nano>(t1 - t0).count();
}

}  // namespace

std::vector<Result> run(int iterations, std::size_t batch, std::uint64_t seed) {
    std::vector<Result> results;
    for (Algebra alg : all_algebras) {
        checks::Rng rng(seed + static_cast<std::uint64_t>(alg));
        const UnitElement q = rng.unit(alg);
        const ExtQuaternion raw = q.value();
        const Mat4 m = matrix_of(q);

        std::vector<Minquat> inputs;
        inputs.reserve(batch);
        for (std::size_t i = 0; i < batch; ++i) inputs.push_back(rng.minquat(alg, 1.0));

        Result r;
        r.alg = alg;
        r.batch = batch;
        r.iterations = iterations;

        double best_sandwich = 0.0;
        double best_matrix = 0.0;
        for (int it = 0; it < iterations; ++it) {
            double sum = 0.0;
            const auto t0 = Clock::now();
            for (const Minquat& v : inputs) sum += sandwich(raw, v).v0;
            const auto t1 = Clock::now();
            double msum = 0.0;
            for (const Minquat& v : inputs) msum += (m * v.coords())[0];
            const auto t2 = Clock::now();

            const double ns_sandwich = elapsed_ns(t0, t1) / static_cast<double>(batch);
            const double ns_matrix = elapsed_ns(t1, t2) / static_cast<double>(batch);
            if (it == 0 || ns_sandwich < best_sandwich) best_sandwich = ns_sandwich;
            if (it == 0 || ns_matrix < best_matrix) best_matrix = ns_matrix;
            r.checksum = sum - msum;
        }
        r.sandwich_ns_per_op = best_sandwich;
        r.matrix_ns_per_op = best_matrix;

        const std::size_t probe = std::min<std::size_t>(batch, 1000);
        for (std::size_t i = 0; i < probe; ++i) {
            const Minquat direct = sandwich(raw, inputs[i]);
            const auto via_matrix = m * inputs[i].coords();
            const auto d = direct.coords();
            for (int c = 0; c < 4; ++c)
                r.max_divergence = std::max(r.max_divergence, std::abs(d[c] - via_matrix[c]));
        }
        r.agree = r.max_divergence <= 1e-10;
        results.push_back(r);
    }
    return results;
}

}  // namespace uquat::bench
