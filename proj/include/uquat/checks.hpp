#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "uquat/spaceform.hpp"

namespace uquat::checks {

// Deterministic random source. Doubles are drawn straight from the engine
// bits so streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double unit_interval();  // [0, 1)
    double uniform(double lo, double hi);

    Quaternion box(double scale);  // all four components uniform in [-scale, scale]
    Quaternion unit_vector();
    Quaternion unit_quaternion();

    RingScalar ring(Algebra alg, double scale);
    ExtQuaternion ext(Algebra alg, double scale);

    UnitElement rotor(Algebra alg);
    UnitElement translator(Algebra alg);
    UnitElement unit(Algebra alg);  // rotor * translator

    Minquat minquat(Algebra alg, double scale);
    SpaceFormPoint point(Algebra alg);

private:
    std::mt19937_64 gen_;
};

struct Options {
    std::uint64_t seed = 42;
    std::size_t samples = 1000;
    double tolerance_scale = 1.0;
    std::vector<Algebra> algebras{all_algebras.begin(), all_algebras.end()};
};

struct SuiteResult {
    std::string name;
    std::size_t samples = 0;
    double max_error = 0.0;
    double tolerance = 0.0;
    double seconds = 0.0;
    bool pass = false;
};

struct Report {
    std::vector<SuiteResult> suites;

    bool all_pass() const;
};

// Runs every invariant suite of every module and reports the worst observed
// error per suite against its tolerance (scaled by opt.tolerance_scale).
Report run_all(const Options& opt);

}  // namespace uquat::checks
