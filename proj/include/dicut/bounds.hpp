#pragma once

#include "dicut/graph.hpp"
#include "dicut/rational.hpp"
#include "dicut/stepfn.hpp"

namespace dicut {

// Parameters of the adversarial gadget pair: c > 1 (so c-1 and c^2-1 are
// positive) and the selection probability alpha at bias c/(c+1).
struct GadgetParams {
    Rat c;
    Rat alpha;
    int copies_g1 = 1;
    int copies_g2 = 3;
};

// Six-vertex gadget with biases {c/(c+1), 1/2, 1/(c+1)} and optimal cut
// 2c^2; construction validates both and throws on mismatch.
WeightedDigraph build_g1(const Rat& c);

// Four-vertex gadget with the same bias set and optimal cut 2c.
WeightedDigraph build_g2(const Rat& c);

// k1 copies of G1 and k2 of G2; optimal cut k1*2c^2 + k2*2c by disjoint-union
// additivity.
WeightedDigraph build_combined(const Rat& c, int k1, int k2);
Rat combined_opt(const Rat& c, int k1, int k2);

// Closed-form ratio of one G1 plus three G2 under an antisymmetric selection
// with probability alpha at bias c/(c+1) and 1/2 at bias 1/2. At c = 5/4 this
// is (213 + 372a - 288a^2)/680, maximized at a = 31/48 with value 533/1088.
Rat combined_ratio_formula(const Rat& c, const Rat& alpha);
// alpha maximizing the formula (vertex of the parabola, clamped to [0,1]).
Rat combined_ratio_argmax(const Rat& c);

// Antisymmetric three-step function with value alpha on the interval holding
// bias c/(c+1): the evaluation partner of the closed form.
StepFunction gadget_step_function(const Rat& c, const Rat& alpha);

// Two vertices, 2/3 one way and 1/3 back; f_{1/3} achieves exactly 3/8 here.
WeightedDigraph tight_example_38();
// The three-vertex greedy trap with weights 2, 3, 3+eps.
WeightedDigraph tight_example_25(const Rat& eps);
// Directed cycle on 2k unit edges.
WeightedDigraph even_cycle(int k);

// 2 f(1/2) (1 - f(1/2)) = 1/2 - 2 delta^2 for delta = f(1/2) - 1/2.
Rat even_cycle_ratio(const StepFunction& f);

// min(ratio of f on the combined gadget, even-cycle ratio); strictly below
// 1/2 for every selection function, antisymmetric or not.
Rat nonsymmetric_bound(const StepFunction& f, const Rat& c, int k1, int k2);

}  // namespace dicut
