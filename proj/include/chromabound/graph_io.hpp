#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "chromabound/graph.hpp"

namespace chromabound {

enum class GraphFormat { Graph6, EdgeList };

// Malformed input. byte_offset points at the offending byte of the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t byte_offset);
    std::size_t byte_offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Graph6: the usual 6-bit packed upper-triangle encoding, optionally preceded
// by the ">>graph6<<" header. Edge list: vertex count followed by one "u v"
// pair per edge, '#' starts a comment.
Graph parse_graph(std::string_view bytes, GraphFormat format);

std::string write_graph(const Graph& g, GraphFormat format);

}  // namespace chromabound
