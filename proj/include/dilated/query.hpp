#pragma once

// Triple-pattern matching over a dilated graph, with candidates ranked by
// how well each one's dilation matches the requesting process's history:
// either by shared-triple count or by spreading-activation energy.

#include <optional>
#include <set>
#include <vector>

#include "dilated/activation.hpp"
#include "dilated/dilation.hpp"

namespace dilated {

// The history graph H of the requesting process. It may be any graph; it
// need not be a subgraph of the store's base.
struct ProcessContext {
    Graph history;
};

// Each position is a concrete term or a wildcard (nullopt).
class TriplePattern {
public:
    TriplePattern(std::optional<Term> subject, std::optional<Term> predicate,
                  std::optional<Term> object);

    const std::optional<Term>& subject() const { return subject_; }
    const std::optional<Term>& predicate() const { return predicate_; }
    const std::optional<Term>& object() const { return object_; }

    bool all_wildcards() const;
    bool matches(const Triple& t) const;

private:
    std::optional<Term> subject_;
    std::optional<Term> predicate_;
    std::optional<Term> object_;
};

struct RankedBinding {
    Triple triple;
    double score;      // integral for the intersection scorer
    std::size_t rank;  // 1-based

    bool operator==(const RankedBinding&) const = default;
};

class Scorer {
public:
    static Scorer intersection();
    static Scorer activation(ActivationConfig cfg);

    bool is_intersection() const { return !cfg_.has_value(); }
    const ActivationConfig& config() const { return *cfg_; }

private:
    explicit Scorer(std::optional<ActivationConfig> cfg) : cfg_(std::move(cfg)) {}

    std::optional<ActivationConfig> cfg_;
};

// Base triples agreeing with every concrete position. Throws
// std::invalid_argument on an all-wildcard pattern.
std::set<Triple> match_pattern(const DilatedGraph& dg, const TriplePattern& pat);

// |history ∩ full dilation|.
std::size_t intersection_score(const ProcessContext& ctx, const DilatedTriple& dt);

// Every match exactly once, sorted by score descending, ties by the
// serialized-triple lexicographic order, ranks 1..n. The activation scorer
// seeds diffusion over the base graph with resources_of(history); an empty
// seed set scores every candidate zero.
std::vector<RankedBinding> rank_bindings(const DilatedGraph& dg, const TriplePattern& pat,
                                         const ProcessContext& ctx, const Scorer& scorer);

}  // namespace dilated
