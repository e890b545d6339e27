#pragma once

#include "hlag/hypergraph.hpp"

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hlag {

/// Malformed edge-list input; line() is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Reads the text format:
///
///     # optional comment lines
///     r n m
///     a_1 a_2 ... a_r      (m lines, strictly increasing labels in [n])
///
/// Edges may appear in any order. Blank lines are ignored.
UniformHypergraph parse_edge_list(std::istream& in);
UniformHypergraph parse_edge_list(std::string_view text);

/// Writes `g` with the given comment lines (without the leading '#'), the
/// header and one edge per line in colex order, single-space separated.
void write_edge_list(std::ostream& out, const UniformHypergraph& g,
                     const std::vector<std::string>& comments = {});
std::string to_edge_list(const UniformHypergraph& g, const std::vector<std::string>& comments = {});

} // namespace hlag
