#include "dicut/search.hpp"

#include <atomic>
#include <optional>
#include <ostream>
#include <thread>

#include "dicut/errors.hpp"

namespace dicut {

namespace {

void ledger_line(std::ostream* out, const RatioCertificate& c) {
    if (out) *out << c.fingerprint << ' ' << rat_str(c.lower) << ' ' << rat_str(c.upper) << '\n';
}

}  // namespace

SearchResult exhaustive_best(int n, const SearchOptions& opts) {
    StepFamily family(n, opts.family_limit);
    const std::uint64_t count = family.size();
    std::vector<std::optional<RatioCertificate>> certs(count);

    int jobs = std::max(1, opts.jobs);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::uint64_t i = next.fetch_add(1);
            if (i >= count) return;
            certs[i] = approximation_ratio(family.at(i), opts.ratio);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // index order is lexicographic on the interval values, so keeping the
    // first maximum applies the tie-break
    std::uint64_t best = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        ledger_line(opts.ledger, *certs[i]);
        if (certs[i]->lower > certs[best]->lower) best = i;
    }
    return {family.at(best), *certs[best], count};
}

SearchResult local_refine(const StepFunction& f0, int grid, int rounds,
                          const SearchOptions& opts) {
    if (grid < 1 || rounds < 0) throw std::domain_error("bad grid or round count");
    if (!is_antisymmetric(f0, Rat(0)))
        throw std::invalid_argument("local refinement needs an antisymmetric start");

    // mutable antisymmetric state: full partition, interval values, and
    // explicit point values frozen from f0 (already mirrored)
    std::vector<Rat> breaks;
    std::vector<Rat> values;
    for (const auto& pc : f0.pieces()) {
        breaks.push_back(pc.lo);
        values.push_back(pc.value);
    }
    breaks.push_back(Rat(1));
    std::vector<std::optional<Rat>> points(breaks.size());
    for (std::size_t i = 0; i < breaks.size(); ++i) points[i] = f0.evaluate(breaks[i]);

    auto build = [&]() {
        return StepFunction::from_partition(breaks, values, points);
    };
    auto certified = [&](const StepFunction& f) {
        RatioCertificate c = approximation_ratio(f, opts.ratio);
        ledger_line(opts.ledger, c);
        return c;
    };

    StepFunction best_fn = build();
    RatioCertificate best = certified(best_fn);
    std::uint64_t candidates = 1;

    const Rat half = frac(1, 2);
    for (int round = 0; round < rounds; ++round) {
        bool improved = false;
        for (std::size_t i = 0; i < values.size(); ++i) {
            // move each lower-half interval together with its mirror; the
            // middle interval (if any) is pinned to 1/2 by antisymmetry
            if (!(breaks[i + 1] <= half)) continue;
            std::size_t mirror = values.size() - 1 - i;
            Rat saved = values[i];
            for (int k = 0; k <= grid; ++k) {
                Rat v = frac(k, grid);
                if (v == saved) continue;
                values[i] = v;
                values[mirror] = 1 - v;
                ++candidates;
                RatioCertificate c = certified(build());
                if (c.lower > best.lower) {
                    best = c;
                    best_fn = build();
                    saved = v;
                    improved = true;
                } else {
                    values[i] = saved;
                    values[mirror] = 1 - saved;
                }
            }
        }
        if (!improved) break;
    }
    return {best_fn, best, candidates};
}

}  // namespace dicut
