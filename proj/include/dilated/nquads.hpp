#pragma once

// Line-oriented N-Quads subset: the only persistence format of this
// project. One quad per line, `<s> <p> <o> [<g>] .`; terms are `<iri>`,
// `_:label`, `"lexical"`, `"lexical"@lang`, or `"lexical"^^<iri>`.
// Recognized string escapes: \" \\ \n \t \r \uXXXX. `#` comment lines and
// blank lines are skipped. Serialization is canonical: quads sorted by the
// serialized (graph, subject, predicate, object) tuple, `\n` line endings,
// duplicate-free. parse(serialize(d)) == d for every dataset.

#include <string>
#include <string_view>

#include "dilated/errors.hpp"
#include "dilated/graph.hpp"

namespace dilated {

Dataset parse_nquads(std::string_view text);
Dataset parse_nquads_file(const std::string& path);

std::string serialize_nquads(const Dataset& d);

// A single term, the whole string; used for seed files and CLI patterns.
Term parse_term(std::string_view text);

std::string term_to_string(const Term& t);
// `<s> <p> <o>` with single spaces and no terminal dot; also the
// lexicographic tie-break key for rankings.
std::string triple_to_string(const Triple& t);

// Shortest decimal that round-trips the value, capped at 12 significant
// digits. Used for every score/energy printed by the CLI.
std::string format_score(double value);

// Whole-file helpers; throw std::runtime_error on I/O failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace dilated
