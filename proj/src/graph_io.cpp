#include "chromabound/graph_io.hpp"

#include <cctype>
#include <charconv>

namespace chromabound {

ParseError::ParseError(const std::string& what, std::size_t byte_offset)
    : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
      offset_(byte_offset) {}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int g6_byte(std::string_view s, std::size_t i) {
    if (i >= s.size()) throw ParseError("graph6: truncated input", s.size());
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", i);
    return c - 63;
}

Graph parse_graph6(std::string_view s) {
    std::size_t base = 0;
    if (s.substr(0, kGraph6Header.size()) == kGraph6Header) base = kGraph6Header.size();
    // Strip one trailing newline; anything else after the payload is an error.
    std::size_t end = s.size();
    while (end > base && (s[end - 1] == '\n' || s[end - 1] == '\r')) --end;
    s = s.substr(0, end);

    std::size_t pos = base;
    long long n;
    int first = g6_byte(s, pos);
    if (first < 63) {
        n = first;
        pos += 1;
    } else {
        // '~' prefix: 18-bit vertex count. The 36-bit form ('~~') is beyond
        // anything this tool works with.
        if (pos + 1 < s.size() && s[pos + 1] == '~')
            throw ParseError("graph6: vertex counts above 258047 not supported", pos);
        n = 0;
        for (int k = 1; k <= 3; ++k) n = (n << 6) | g6_byte(s, pos + k);
        pos += 4;
    }

    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos < nbytes) throw ParseError("graph6: truncated adjacency data", s.size());
    if (s.size() - pos > nbytes) throw ParseError("graph6: trailing data", pos + nbytes);

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = g6_byte(s, pos + static_cast<std::size_t>(bit / 6));
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // Padding bits after the triangle must be zero.
    for (long long b = nbits; b < static_cast<long long>(nbytes) * 6; ++b) {
        int byte = g6_byte(s, pos + static_cast<std::size_t>(b / 6));
        if ((byte >> (5 - b % 6)) & 1)
            throw ParseError("graph6: non-zero padding bit", pos + static_cast<std::size_t>(b / 6));
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    const long long nbits = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<int> bytes(static_cast<std::size_t>((nbits + 5) / 6), 0);
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) bytes[static_cast<std::size_t>(bit / 6)] |= 1 << (5 - bit % 6);
    for (int b : bytes) out.push_back(static_cast<char>(b + 63));
    return out;
}

struct Token {
    long long value;
    std::size_t offset;
};

std::vector<Token> tokenize_numbers(std::string_view s) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == '#') {
            while (i < s.size() && s[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else {
            std::size_t start = i;
            while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '#') ++i;
            long long value = 0;
            auto res = std::from_chars(s.data() + start, s.data() + i, value);
            if (res.ec != std::errc() || res.ptr != s.data() + i)
                throw ParseError("edge list: expected an integer", start);
            tokens.push_back({value, start});
        }
    }
    return tokens;
}

Graph parse_edge_list(std::string_view s) {
    auto tokens = tokenize_numbers(s);
    if (tokens.empty()) throw ParseError("edge list: missing vertex count", 0);
    if (tokens[0].value < 0 || tokens[0].value > 1000000)
        throw ParseError("edge list: implausible vertex count", tokens[0].offset);
    int n = static_cast<int>(tokens[0].value);
    if ((tokens.size() - 1) % 2 != 0)
        throw ParseError("edge list: dangling endpoint", tokens.back().offset);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
        long long u = tokens[i].value, v = tokens[i + 1].value;
        if (u < 0 || u >= n) throw ParseError("edge list: endpoint out of range", tokens[i].offset);
        if (v < 0 || v >= n) throw ParseError("edge list: endpoint out of range", tokens[i + 1].offset);
        if (u == v) throw ParseError("edge list: self-loop", tokens[i].offset);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Graph::from_edges(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what(), 0);
    }
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count());
    out.push_back('\n');
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out.push_back(' ');
        out += std::to_string(v);
        out.push_back('\n');
    }
    return out;
}

}  // namespace

Graph parse_graph(std::string_view bytes, GraphFormat format) {
    switch (format) {
        case GraphFormat::Graph6: return parse_graph6(bytes);
        case GraphFormat::EdgeList: return parse_edge_list(bytes);
    }
    throw std::invalid_argument("parse_graph: unknown format");
}

std::string write_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::Graph6: return write_graph6(g);
        case GraphFormat::EdgeList: return write_edge_list(g);
    }
    throw std::invalid_argument("write_graph: unknown format");
}

}  // namespace chromabound
