#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hypersquare/certify.hpp"
#include "hypersquare/hypergraph.hpp"

namespace hypersquare {

/// "n N" followed by one "i j k" line per edge, i < j < k. Blank lines and
/// lines starting with '#' are skipped. Throws ParseError with the line
/// number on malformed, out-of-range, unsorted or duplicate triples.
Hypergraph3 read_hypergraph(std::istream& in);

/// Inverse of read_hypergraph; edges in sorted order.
void write_hypergraph(std::ostream& out, const Hypergraph3& h);

/// Space-separated vertex ids; a leading "C" marks a closed sequence.
/// Throws ParseError (line 1) on anything else.
VertexSeq parse_sequence(std::string_view text);

std::string format_sequence(const VertexSeq& s);

}  // namespace hypersquare
