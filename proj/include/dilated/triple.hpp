#pragma once

// Triples and quads with the positional constraints enforced at
// construction: subject is an IRI or blank node, predicate is an IRI,
// object is any term, graph name (when present) is an IRI or blank node.

#include <compare>
#include <optional>

#include "dilated/term.hpp"

namespace dilated {

class Triple {
public:
    Triple(Term subject, Term predicate, Term object);

    const Term& subject() const { return subject_; }
    const Term& predicate() const { return predicate_; }
    const Term& object() const { return object_; }

    bool operator==(const Triple&) const = default;
    std::strong_ordering operator<=>(const Triple& other) const;

private:
    Term subject_;
    Term predicate_;
    Term object_;
};

class Quad {
public:
    explicit Quad(Triple triple);            // default graph
    Quad(Triple triple, Term graph_name);    // named graph

    const Triple& triple() const { return triple_; }
    const std::optional<Term>& graph() const { return graph_; }

    bool operator==(const Quad&) const = default;
    std::strong_ordering operator<=>(const Quad& other) const;

private:
    Triple triple_;
    std::optional<Term> graph_;
};

}  // namespace dilated
