#pragma once

#include <cstdint>
#include <iosfwd>

#include "dicut/lp.hpp"
#include "dicut/stepfn.hpp"

namespace dicut {

struct SearchOptions {
    int jobs = 1;
    int family_limit = 5;
    std::ostream* ledger = nullptr;  // one "<fingerprint> <lower> <upper>" line per candidate
    RatioOptions ratio;
};

struct SearchResult {
    StepFunction best;
    RatioCertificate certificate;
    std::uint64_t candidates = 0;
};

// Certifies every member of the discretized family and returns the maximizer
// of the certified lower bound; ties go to the lexicographically smallest
// interval-value vector. Candidates fan out across `jobs` threads and reduce
// in index order, so reruns are bit-identical.
SearchResult exhaustive_best(int n, const SearchOptions& opts = {});

// Coordinate ascent over the interval values of an antisymmetric step
// function on a 1/grid lattice; each move updates an interval and its mirror
// and is kept only if the certified lower bound strictly improves.
// A labeled heuristic companion to the exhaustive search.
SearchResult local_refine(const StepFunction& f0, int grid, int rounds,
                          const SearchOptions& opts = {});

}  // namespace dicut
