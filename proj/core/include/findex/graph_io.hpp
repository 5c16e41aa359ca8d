#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "findex/graph.hpp"

namespace findex {

/// Input rejected by one of the text readers. line() is 1-based, or 0 when
/// the error is not tied to a line (graph6 input).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Edge-list text: the first non-comment line holds n, each following
/// non-comment line holds "u v" with 0 <= u, v < n. '#' comments run to end
/// of line and blank lines are ignored. Self-loops and repeated edges are
/// errors.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list: "n" then one "u v" line per edge, sorted.
std::string write_edge_list(const Graph& g);

/// graph6 for 0 <= n <= 62 (single-byte order). An optional ">>graph6<<"
/// header and surrounding whitespace are accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

enum class InputFormat { automatic, edge_list, graph6 };

/// Dispatches on fmt. In automatic mode the first non-comment line decides:
/// all digits means edge list, anything else is read as graph6 (graph6
/// never contains ASCII digits).
Graph parse_graph(std::string_view text, InputFormat fmt = InputFormat::automatic);

}  // namespace findex
