#include "dilated/term.hpp"

namespace dilated {

namespace {

bool is_label_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

bool is_alpha(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool is_alnum(char c) {
    return is_alpha(c) || (c >= '0' && c <= '9');
}

template <typename... F>
struct Overload : F... {
    using F::operator()...;
};
template <typename... F>
Overload(F...) -> Overload<F...>;

}  // namespace

bool is_valid_iri(std::string_view s) {
    if (s.empty()) return false;
    for (unsigned char c : s) {
        if (c < 0x21 || c == '<' || c == '>') return false;
    }
    return true;
}

bool is_valid_blank_label(std::string_view s) {
    if (s.empty()) return false;
    if (!is_alnum(s.front())) return false;
    for (char c : s) {
        if (!is_label_char(c)) return false;
    }
    return true;
}

bool is_valid_language_tag(std::string_view s) {
    if (s.empty() || !is_alpha(s.front())) return false;
    bool prev_dash = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '-') {
            if (prev_dash || i == 0 || i + 1 == s.size()) return false;
            prev_dash = true;
        } else if (i == 0 ? is_alpha(c) : is_alnum(c)) {
            prev_dash = false;
        } else {
            return false;
        }
    }
    return true;
}

Term Term::iri(std::string value) {
    if (!is_valid_iri(value)) {
        throw std::invalid_argument("invalid IRI: '" + value + "'");
    }
    return Term(Iri{std::move(value)});
}

Term Term::blank(std::string label) {
    if (!is_valid_blank_label(label)) {
        throw std::invalid_argument("invalid blank node label: '" + label + "'");
    }
    return Term(BlankNode{std::move(label)});
}

Term Term::literal(std::string lexical) {
    return Term(Literal{std::move(lexical), std::nullopt, std::nullopt});
}

Term Term::literal_typed(std::string lexical, std::string datatype_iri) {
    if (!is_valid_iri(datatype_iri)) {
        throw std::invalid_argument("invalid datatype IRI: '" + datatype_iri + "'");
    }
    return Term(Literal{std::move(lexical), std::move(datatype_iri), std::nullopt});
}

Term Term::literal_lang(std::string lexical, std::string language_tag) {
    if (!is_valid_language_tag(language_tag)) {
        throw std::invalid_argument("invalid language tag: '" + language_tag + "'");
    }
    return Term(Literal{std::move(lexical), std::nullopt, std::move(language_tag)});
}

Term::Kind Term::kind() const {
    return std::visit(Overload{[](const Iri&) { return Kind::iri; },
                               [](const BlankNode&) { return Kind::blank; },
                               [](const Literal&) { return Kind::literal; }},
                      repr_);
}

const std::string& Term::iri_value() const {
    if (const auto* p = std::get_if<Iri>(&repr_)) return p->value;
    throw std::logic_error("term is not an IRI");
}

const std::string& Term::blank_label() const {
    if (const auto* p = std::get_if<BlankNode>(&repr_)) return p->label;
    throw std::logic_error("term is not a blank node");
}

const Literal& Term::literal_value() const {
    if (const auto* p = std::get_if<Literal>(&repr_)) return *p;
    throw std::logic_error("term is not a literal");
}

namespace {

std::strong_ordering cmp_opt(const std::optional<std::string>& a,
                             const std::optional<std::string>& b) {
    if (a.has_value() != b.has_value()) {
        return a.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (!a.has_value()) return std::strong_ordering::equal;
    return *a <=> *b;
}

}  // namespace

std::strong_ordering Term::operator<=>(const Term& other) const {
    if (auto c = repr_.index() <=> other.repr_.index(); c != 0) return c;
    switch (kind()) {
        case Kind::iri:
            return std::get<Iri>(repr_).value <=> std::get<Iri>(other.repr_).value;
        case Kind::blank:
            return std::get<BlankNode>(repr_).label <=> std::get<BlankNode>(other.repr_).label;
        case Kind::literal: {
            const auto& la = std::get<Literal>(repr_);
            const auto& lb = std::get<Literal>(other.repr_);
            if (auto c = la.lexical <=> lb.lexical; c != 0) return c;
            if (auto c = cmp_opt(la.datatype, lb.datatype); c != 0) return c;
            return cmp_opt(la.language, lb.language);
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace dilated
