#pragma once

// RDF terms: IRIs, blank nodes, and literals.
//
// Terms are immutable values. Construction goes through the validating
// factories; an invalid term (empty IRI, malformed blank label, literal
// with both a datatype and a language tag) cannot be built.

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace dilated {

// IRIs are compared as opaque strings; no normalization or resolution.
struct Iri {
    std::string value;

    bool operator==(const Iri&) const = default;
};

// Blank node identity is scoped to one dataset. Labels from separately
// parsed documents are kept apart by merge_datasets().
struct BlankNode {
    std::string label;

    bool operator==(const BlankNode&) const = default;
};

// Literal equality is syntactic on (lexical form, datatype, language);
// "1"^^xsd:integer and "01"^^xsd:integer are distinct terms.
struct Literal {
    std::string lexical;
    std::optional<std::string> datatype;  // absolute IRI
    std::optional<std::string> language;  // only when datatype is absent

    bool operator==(const Literal&) const = default;
};

// Validation predicates shared with the N-Quads reader.
bool is_valid_iri(std::string_view s);
bool is_valid_blank_label(std::string_view s);
bool is_valid_language_tag(std::string_view s);

class Term {
public:
    enum class Kind { iri, blank, literal };

    static Term iri(std::string value);
    static Term blank(std::string label);
    static Term literal(std::string lexical);
    static Term literal_typed(std::string lexical, std::string datatype_iri);
    static Term literal_lang(std::string lexical, std::string language_tag);

    Kind kind() const;
    bool is_iri() const { return kind() == Kind::iri; }
    bool is_blank() const { return kind() == Kind::blank; }
    bool is_literal() const { return kind() == Kind::literal; }

    // True for terms allowed in the subject and graph-name positions.
    bool is_resource() const { return !is_literal(); }

    // Accessors require the matching kind and throw std::logic_error otherwise.
    const std::string& iri_value() const;
    const std::string& blank_label() const;
    const Literal& literal_value() const;

    const std::variant<Iri, BlankNode, Literal>& repr() const { return repr_; }

    bool operator==(const Term&) const = default;
    std::strong_ordering operator<=>(const Term& other) const;

private:
    explicit Term(std::variant<Iri, BlankNode, Literal> repr) : repr_(std::move(repr)) {}

    std::variant<Iri, BlankNode, Literal> repr_;
};

}  // namespace dilated
