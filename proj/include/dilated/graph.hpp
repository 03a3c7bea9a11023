#pragma once

// Graphs are duplicate-free sets of triples; a dataset is a default graph
// plus named graphs keyed by an IRI or blank node. Both are plain value
// types: mutation builds new values, shared reads are safe.

#include <map>
#include <set>

#include "dilated/triple.hpp"

namespace dilated {

class Graph {
public:
    Graph() = default;
    explicit Graph(std::set<Triple> triples) : triples_(std::move(triples)) {}

    // Returns false when the triple was already present.
    bool add(Triple t) { return triples_.insert(std::move(t)).second; }
    bool contains(const Triple& t) const { return triples_.count(t) != 0; }

    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    const std::set<Triple>& triples() const { return triples_; }
    auto begin() const { return triples_.begin(); }
    auto end() const { return triples_.end(); }

    bool operator==(const Graph&) const = default;

private:
    std::set<Triple> triples_;
};

Graph graph_intersection(const Graph& a, const Graph& b);
Graph graph_union(const Graph& a, const Graph& b);
bool is_subgraph(const Graph& inner, const Graph& outer);

// Every subject, predicate, and object appearing in g.
std::set<Term> resources_of(const Graph& g);

class Dataset {
public:
    Dataset() = default;

    Graph& default_graph() { return default_; }
    const Graph& default_graph() const { return default_; }

    // Named graphs; the key must be an IRI or blank node.
    const std::map<Term, Graph>& named() const { return named_; }
    Graph& named_graph(const Term& name);
    const Graph* find_named(const Term& name) const;

    void add(const Quad& q);
    std::size_t quad_count() const;

    // Empty named graphs are transient bookkeeping and do not count
    // towards equality (serialization omits them too).
    bool operator==(const Dataset& other) const;

private:
    Graph default_;
    std::map<Term, Graph> named_;
};

// Union of two datasets under dataset-scoped blank nodes: any blank label
// of `b` that is also used in `a` is deterministically renamed (suffix
// `_<k>`, smallest k that is fresh) before the graphs are combined, so the
// two documents never share a blank node.
Dataset merge_datasets(const Dataset& a, const Dataset& b);

}  // namespace dilated
