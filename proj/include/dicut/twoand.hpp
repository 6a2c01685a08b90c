#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dicut/graph.hpp"
#include "dicut/rational.hpp"
#include "dicut/stepfn.hpp"

namespace dicut {

struct Literal {
    int var;        // 0-based
    bool positive;
    bool operator==(const Literal&) const = default;
};

inline Literal negate(Literal l) { return {l.var, !l.positive}; }

struct Clause {
    Literal a;
    Literal b;
    Rat weight;
};

// Weighted conjunction clauses over pairs of literals on distinct variables.
class TwoAndInstance {
public:
    TwoAndInstance() = default;
    TwoAndInstance(int variable_count, std::vector<Clause> clauses);

    int variable_count() const { return variable_count_; }
    const std::vector<Clause>& clauses() const { return clauses_; }
    Rat total_weight() const;

private:
    int variable_count_ = 0;
    std::vector<Clause> clauses_;
};

using Assignment = std::vector<char>;  // truth value per variable

Rat assignment_weight(const TwoAndInstance& inst, const Assignment& a);

// Positive-occurrence weight over total occurrence weight; 1/2 when the
// variable never occurs (same convention as isolated graph vertices).
Rat variable_bias(const TwoAndInstance& inst, int var);
std::vector<Rat> variable_biases(const TwoAndInstance& inst);

struct OptAssignment {
    Assignment assignment;
    Rat weight;
};

OptAssignment brute_force_best_assignment(const TwoAndInstance& inst,
                                          int limit = brute_force_limit());

// Clause y AND z of weight w becomes edges (y, not z) and (z, not y), each of
// weight w/2, on the 2V literal vertices. Literal l maps to vertex
// 2*var + (positive ? 0 : 1).
struct Reduction {
    WeightedDigraph graph;
    int vertex_of(Literal l) const { return 2 * l.var + (l.positive ? 0 : 1); }
    Literal literal_of(int vertex) const { return {vertex / 2, vertex % 2 == 0}; }
};

Reduction reduce_to_dicut(const TwoAndInstance& inst);

// Sum over clauses of w * P(both literals true) under independent per-variable
// selection with probability f(variable bias). Equals the expected cut weight
// of the reduction for antisymmetric f.
Rat oblivious_expected_assignment(const TwoAndInstance& inst, const StepFunction& f);

// consistent=true draws each variable's literal-vertex pair as complements
// (the dependent rounding of the reduction graph); consistent=false draws each
// variable directly. Marginals agree, so both sample the same distribution of
// assignments.
Assignment sample_assignment(const TwoAndInstance& inst, const StepFunction& f,
                             std::uint64_t seed, bool consistent);

// A cut of the reduction graph. Independent mode selects every literal vertex
// independently (the cut may select both x and not-x); consistent mode forces
// complementary choices so the cut is a valid assignment.
Cut sample_reduction_cut(const TwoAndInstance& inst, const StepFunction& f, std::uint64_t seed,
                         bool consistent);

// Text format "twoand v1 <variable_count>"; clause lines "<lit> <lit> <w>"
// with 1-based signed literals ("+2 -5 1/3").
TwoAndInstance read_twoand(std::istream& in);
TwoAndInstance parse_twoand(const std::string& text);
void write_twoand(std::ostream& out, const TwoAndInstance& inst);
TwoAndInstance load_twoand_file(const std::string& path);

}  // namespace dicut
