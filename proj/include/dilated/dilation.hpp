#pragma once

// Dilated triples: every asserted triple carries a named graph holding the
// triple itself plus supplementary triples that contextualize it. The full
// dilation always contains its core and is always a subset of the base
// graph.
//
// Quad encoding: the full dilation of a core triple lives in a named graph
// g; three default-graph marker quads identify the core in reification
// style:
//
//   g <urn:dilation:subject>   core.subject
//   g <urn:dilation:predicate> core.predicate
//   g <urn:dilation:object>    core.object
//
// The urn:dilation: prefix is reserved; see README for the on-disk contract.

#include <map>
#include <optional>

#include "dilated/graph.hpp"

namespace dilated {

inline constexpr std::string_view kDilationVocabPrefix = "urn:dilation:";
const Term& marker_subject();    // <urn:dilation:subject>
const Term& marker_predicate();  // <urn:dilation:predicate>
const Term& marker_object();     // <urn:dilation:object>

// How much of the base graph a dilation pulls in.
//
// khop(k) keeps the base triples whose subject and object both lie within
// k undirected hops of the core's subject or object, predicates acting as
// edge labels only. k = 0 selects the core triple alone; k = nullopt is
// unbounded and, on a connected base, equals whole_graph.
class DilationPolicy {
public:
    static DilationPolicy khop(unsigned k);
    static DilationPolicy khop_unbounded();
    static DilationPolicy whole_graph();

    bool is_whole_graph() const { return whole_; }
    bool is_khop() const { return !whole_; }
    // Meaningful only for khop; nullopt means unbounded.
    const std::optional<unsigned>& k() const { return k_; }

private:
    DilationPolicy(bool whole, std::optional<unsigned> k) : whole_(whole), k_(k) {}

    bool whole_;
    std::optional<unsigned> k_;
};

class DilatedTriple {
public:
    // supplement must not contain the core; name must be an IRI or blank.
    DilatedTriple(Triple core, Graph supplement, Term name);

    const Triple& core() const { return core_; }
    const Graph& supplement() const { return supplement_; }
    const Term& name() const { return name_; }

    // supplement plus the core itself.
    Graph full() const;
    std::size_t full_size() const { return supplement_.size() + 1; }

    bool operator==(const DilatedTriple&) const = default;

private:
    Triple core_;
    Graph supplement_;
    Term name_;
};

// One dilation per base triple; every full dilation is a subset of base.
class DilatedGraph {
public:
    DilatedGraph() = default;
    // Validates both invariants and throws ValidationError on violation.
    DilatedGraph(Graph base, std::map<Triple, DilatedTriple> entries);

    const Graph& base() const { return base_; }
    const std::map<Triple, DilatedTriple>& entries() const { return entries_; }
    const DilatedTriple& entry(const Triple& core) const;

    bool operator==(const DilatedGraph&) const = default;

private:
    Graph base_;
    std::map<Triple, DilatedTriple> entries_;
};

// Deterministic graph name for a core triple: a blank node labelled with a
// 64-bit FNV-1a hash of the canonical triple serialization.
Term dilation_name(const Triple& core);

// Throws ValidationError when core is not asserted in base.
DilatedTriple dilate(const Graph& base, const Triple& core, const DilationPolicy& policy);
DilatedGraph dilate_all(const Graph& base, const DilationPolicy& policy);

Dataset to_quads(const DilatedGraph& dg);
// Inverse of to_quads; also accepts hand-authored datasets that follow the
// encoding. Throws ValidationError on missing/conflicting markers, a named
// graph that does not contain its own core, or triples outside the base.
DilatedGraph from_quads(const Dataset& d);

}  // namespace dilated
