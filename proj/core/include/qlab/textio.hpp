#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qlab/quantale.hpp"

namespace qlab {

// ---- quantale files --------------------------------------------------------
//
//   quantale <name>
//   elements: <id> <id> ...
//   order: <a> <= <b>          (one pair per line; reflexive-transitive
//                               closure is taken)
//   unit: <id>
//   tensor:                    (followed by n rows of n entries)
//     <e> <e> ...
//
// '#' starts a comment anywhere; parsing is whitespace-insensitive within
// lines.  An optional `residual:` block (same shape as tensor:) is accepted
// and cross-checked against the derived residual table.

Quantale parse_quantale(std::string_view text);
std::string serialize_quantale(const Quantale& q);

// ---- Q-set files ------------------------------------------------------------
//
//   qset <name> over <quantale-name>
//   elements: a b c
//   hom:                       (n rows of n quantale element names)
//
// Parsing yields the raw pieces; binding against the declared quantale (and
// validating the Q-set axioms) happens in the enriched layer, which owns
// the required machinery.

struct QSetFile {
    std::string name;
    std::string quantale_name;
    std::vector<std::string> elems;
    std::vector<std::string> entries;  // n*n element names, row-major
};

QSetFile parse_qset_file(std::string_view text);

enum class FileKind { quantale, qset };

// Decides by the first keyword of the file; throws parse_error otherwise.
FileKind sniff_kind(std::string_view text);

}  // namespace qlab
