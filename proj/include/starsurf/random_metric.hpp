#pragma once

#include "starsurf/exact_scalar.hpp"
#include "starsurf/geometry.hpp"

#include <cstdint>
#include <string>

namespace starsurf {

// Seeded generator of exact-backend metrics with invertible constant
// body.  P in {0, 2} supports graded-symmetric even metrics; P = 1
// does not (the odd-odd diagonal of a graded-symmetric even metric
// vanishes identically, so its body row is zero), and the generator
// falls back to an asymmetric metric of the shape the worked examples
// use.
struct RandomMetricOptions {
    int P = 0;
    int N = 3;
    bool symmetric = true;
    std::uint64_t seed = 0;
    bool hbar_terms = true;
};

Mat<ExactScalar> random_exact_metric(const RandomMetricOptions& opt);

// .surf source for the same metric (exact backend, polynomial entries)
std::string random_metric_source(const RandomMetricOptions& opt);

} // namespace starsurf
