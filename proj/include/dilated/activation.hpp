#pragma once

// Spreading activation: decaying energy diffused from seed resources over
// the node graph induced by the triples (subject -> object per triple,
// predicates acting as labels only).
//
// e_0 puts 1/|seeds| on each seed. Each step moves energy along edges,
// split by (out-)degree and scaled by `decay`; iteration stops after
// `max_steps` updates or as soon as the freshest vector's maximum falls
// below `epsilon`. The result is the accumulated activation sum over all
// computed vectors, e_0 included: energy that flowed through a resource
// counts, not just where it ends up.
//
// Determinism: per-node incoming contributions are summed smallest-first,
// so the output is bitwise reproducible and invariant under term
// relabeling.

#include <map>
#include <set>
#include <vector>

#include "dilated/dilation.hpp"
#include "dilated/graph.hpp"

namespace dilated {

enum class SpreadDirection { out, undirected };

struct ActivationConfig {
    double decay = 0.85;        // in (0, 1]
    unsigned max_steps = 10;    // >= 1
    double epsilon = 1e-6;      // >= 0
    SpreadDirection direction = SpreadDirection::undirected;

    // Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

// Absent terms carry zero energy.
using EnergyVector = std::map<Term, double>;

double energy_at(const EnergyVector& e, const Term& t);

// All per-step vectors e_0..e_T, in order. Seeds must be non-empty; seeds
// absent from the graph hold their initial energy but cannot propagate it.
std::vector<EnergyVector> spread_trace(const Graph& g, const std::set<Term>& seeds,
                                       const ActivationConfig& cfg);

// Accumulated activation: the per-term sum over spread_trace.
EnergyVector spread(const Graph& g, const std::set<Term>& seeds, const ActivationConfig& cfg);

// Total energy over the resources of the full dilation.
double activation_score(const EnergyVector& energy, const DilatedTriple& dt);

}  // namespace dilated
