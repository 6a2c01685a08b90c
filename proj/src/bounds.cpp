#include "dicut/bounds.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dicut {

namespace {

void validate_gadget(const WeightedDigraph& g, const Rat& c, const Rat& stated_opt,
                     const char* name) {
    BiasProfile bp = biases(g);
    Rat hi = c / (c + 1), half = frac(1, 2), lo = 1 / (c + 1);
    for (const Rat& b : bp.bias)
        if (b != hi && b != half && b != lo)
            throw std::logic_error(std::string(name) + " bias " + rat_str(b) +
                                   " outside the stated bias set");
    OptResult opt = brute_force_opt(g);
    if (opt.weight != stated_opt)
        throw std::logic_error(std::string(name) + " optimal cut " + rat_str(opt.weight) +
                               " != stated " + rat_str(stated_opt));
}

}  // namespace

WeightedDigraph build_g1(const Rat& c) {
    if (!(c > 1)) throw std::domain_error("gadgets need c > 1");
    Rat c2 = c * c - 1;
    // vertices A A' B B' C C'
    enum { A, Ap, B, Bp, C, Cp };
    WeightedDigraph g(6, {
                             {A, Ap, Rat(1)},
                             {A, Bp, c2},
                             {B, Cp, c2},
                             {C, Cp, Rat(1)},
                             {Ap, A, c},
                             {Bp, B, c2},
                             {Cp, C, c},
                         });
    validate_gadget(g, c, 2 * c * c, "G1");
    return g;
}

WeightedDigraph build_g2(const Rat& c) {
    if (!(c > 1)) throw std::domain_error("gadgets need c > 1");
    Rat c1 = c - 1;
    enum { D, E, Ep, Fp };
    WeightedDigraph g(4, {
                             {D, Ep, c},
                             {E, Fp, c},
                             {Ep, E, c1},
                             {Ep, D, Rat(1)},
                             {Fp, E, Rat(1)},
                         });
    validate_gadget(g, c, 2 * c, "G2");
    return g;
}

WeightedDigraph build_combined(const Rat& c, int k1, int k2) {
    if (k1 < 0 || k2 < 0 || k1 + k2 == 0)
        throw std::domain_error("combined gadget needs at least one copy");
    std::vector<WeightedDigraph> parts;
    if (k1 > 0) parts.insert(parts.end(), k1, build_g1(c));
    if (k2 > 0) parts.insert(parts.end(), k2, build_g2(c));
    return disjoint_union(parts, std::vector<Rat>(parts.size(), Rat(1)));
}

Rat combined_opt(const Rat& c, int k1, int k2) { return k1 * 2 * c * c + k2 * 2 * c; }

Rat combined_ratio_formula(const Rat& c, const Rat& alpha) {
    if (!(c > 1)) throw std::domain_error("formula needs c > 1");
    Rat quarter = frac(1, 4);
    Rat num = 2 * alpha * (1 - alpha) * (1 + c) + (alpha + quarter) * (c * c - 1) + 3 +
              3 * (alpha + quarter) * (c - 1);
    return num / (2 * c * c + 6 * c);
}

Rat combined_ratio_argmax(const Rat& c) {
    // numerator is -2(1+c) a^2 + (2(1+c) + (c^2-1) + 3(c-1)) a + const
    Rat a2 = -2 * (1 + c);
    Rat a1 = 2 * (1 + c) + (c * c - 1) + 3 * (c - 1);
    Rat vertex = a1 / (-2 * a2);
    return std::min(Rat(1), std::max(Rat(0), vertex));
}

StepFunction gadget_step_function(const Rat& c, const Rat& alpha) {
    if (alpha < 0 || alpha > 1) throw std::domain_error("alpha outside [0,1]");
    Rat half = frac(1, 2);
    Rat hi = c / (c + 1);
    Rat upper_cut = (half + hi) / 2;
    Rat lower_cut = 1 - upper_cut;
    return StepFunction::from_partition(
        {Rat(0), lower_cut, upper_cut, Rat(1)}, {1 - alpha, half, alpha},
        {std::nullopt, half, half, std::nullopt});
}

WeightedDigraph tight_example_38() {
    return WeightedDigraph(2, {{0, 1, frac(2, 3)}, {1, 0, frac(1, 3)}});
}

WeightedDigraph tight_example_25(const Rat& eps) {
    if (!(eps > 0)) throw std::domain_error("eps must be positive");
    enum { X, Y, Z };
    return WeightedDigraph(3, {{X, Z, Rat(2)}, {X, Y, Rat(3)}, {Y, X, Rat(3) + eps}});
}

WeightedDigraph even_cycle(int k) {
    if (k < 2) throw std::domain_error("even cycle needs k >= 2");
    std::vector<Edge> es;
    int n = 2 * k;
    for (int v = 0; v < n; ++v) es.push_back({v, (v + 1) % n, Rat(1)});
    return WeightedDigraph(n, std::move(es));
}

Rat even_cycle_ratio(const StepFunction& f) {
    Rat p = f.evaluate(frac(1, 2));
    return 2 * p * (1 - p);
}

Rat nonsymmetric_bound(const StepFunction& f, const Rat& c, int k1, int k2) {
    WeightedDigraph g = build_combined(c, k1, k2);
    Rat gadget_ratio = expected_cut_weight(g, f) / combined_opt(c, k1, k2);
    return std::min(gadget_ratio, even_cycle_ratio(f));
}

}  // namespace dicut
