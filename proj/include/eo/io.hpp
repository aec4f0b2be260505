#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eo/graph.hpp"

namespace eo {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

class Tokens {
public:
    explicit Tokens(std::string_view line) : rest_(line) {}

    bool next(std::string_view& token) {
        std::size_t begin = rest_.find_first_not_of(" \t\r,");
        if (begin == std::string_view::npos) return false;
        rest_.remove_prefix(begin);
        std::size_t end = rest_.find_first_of(" \t\r,");
        token = rest_.substr(0, end);
        rest_.remove_prefix(end == std::string_view::npos ? rest_.size() : end);
        return true;
    }

private:
    std::string_view rest_;
};

inline std::uint64_t to_index(std::string_view token, std::size_t line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw parse_error(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
}

inline VertexId to_vertex(std::string_view token, std::size_t line, bool one_indexed) {
    std::uint64_t value = to_index(token, line);
    if (one_indexed) {
        if (value == 0) throw parse_error(line, "vertex index 0 in a one-indexed file");
        --value;
    }
    if (value >= kNoVertex) throw parse_error(line, "vertex index " + std::string(token) + " too large");
    return static_cast<VertexId>(value);
}

inline bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace detail

/// Whitespace-separated vertex pairs, one per line. Lines starting with '#'
/// or '%' are comments; tokens after the pair (weights) are ignored.
inline BuildResult parse_edge_list(std::istream& in, bool one_indexed = false) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty() || line[0] == '#' || line[0] == '%' || detail::is_blank(line)) continue;
        detail::Tokens tokens(line);
        std::string_view a, b;
        tokens.next(a);
        if (!tokens.next(b)) throw parse_error(number, "expected two vertex indices");
        pairs.emplace_back(detail::to_vertex(a, number, one_indexed), detail::to_vertex(b, number, one_indexed));
    }
    return build_graph(pairs);
}

/// METIS adjacency format: header "n m [fmt [ncon]]", then one line of
/// 1-indexed neighbors per vertex. Only unweighted graphs are accepted.
inline BuildResult parse_metis(std::istream& in) {
    std::string line;
    std::size_t number = 0;
    auto next_content = [&]() -> bool {
        while (std::getline(in, line)) {
            ++number;
            if (!line.empty() && line[0] == '%') continue;
            return true;
        }
        return false;
    };
    // The header may not be blank; vertex lines may (isolated vertices).
    do {
        if (!next_content()) throw parse_error(number, "missing METIS header");
    } while (detail::is_blank(line));

    detail::Tokens header(line);
    std::string_view tok;
    std::vector<std::uint64_t> fields;
    while (header.next(tok)) fields.push_back(detail::to_index(tok, number));
    if (fields.size() < 2) throw parse_error(number, "header needs vertex and edge counts");
    if (fields.size() >= 3 && fields[2] != 0) {
        throw parse_error(number, "weighted METIS format " + std::to_string(fields[2]) + " not supported");
    }
    const std::uint64_t n = fields[0];
    const std::uint64_t m = fields[1];
    if (n >= kNoVertex) throw parse_error(number, "too many vertices");

    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(2 * m, std::uint64_t{1} << 22)));
    for (std::uint64_t v = 0; v < n; ++v) {
        if (!next_content()) {
            throw parse_error(number, "expected " + std::to_string(n) + " vertex lines, found " +
                                          std::to_string(v));
        }
        detail::Tokens tokens(line);
        while (tokens.next(tok)) {
            VertexId u = detail::to_vertex(tok, number, true);
            if (u >= n) throw parse_error(number, "neighbor " + std::string(tok) + " exceeds n");
            pairs.emplace_back(static_cast<VertexId>(v), u);
        }
    }
    while (next_content()) {
        if (!detail::is_blank(line)) throw parse_error(number, "unexpected data after the last vertex");
    }
    BuildResult built = build_graph(pairs, n);
    if (built.graph.num_edges() != m) {
        throw parse_error(number, "header declares " + std::to_string(m) + " edges, adjacency has " +
                                      std::to_string(built.graph.num_edges()));
    }
    return built;
}

/// Matrix Market coordinate file: every "i j [w]" data line is an edge
/// (1-indexed); the symmetry flag only matters through duplicate collapsing.
inline BuildResult parse_matrix_market(std::istream& in) {
    std::string line;
    std::size_t number = 0;
    bool have_size = false;
    std::uint64_t rows = 0, cols = 0;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty() || line[0] == '%' || detail::is_blank(line)) continue;
        detail::Tokens tokens(line);
        std::string_view a, b, c;
        tokens.next(a);
        if (!tokens.next(b)) throw parse_error(number, "expected at least two fields");
        if (!have_size) {
            if (!tokens.next(c)) throw parse_error(number, "size line needs rows, columns and entries");
            rows = detail::to_index(a, number);
            cols = detail::to_index(b, number);
            detail::to_index(c, number);
            have_size = true;
            continue;
        }
        pairs.emplace_back(detail::to_vertex(a, number, true), detail::to_vertex(b, number, true));
    }
    if (!have_size) throw parse_error(number, "missing Matrix Market size line");
    const std::uint64_t n = std::max(rows, cols);
    if (n >= kNoVertex) throw parse_error(number, "too many vertices");
    for (auto [u, v] : pairs) {
        if (u >= n || v >= n) throw parse_error(number, "entry outside the declared matrix size");
    }
    return build_graph(pairs, n);
}

enum class GraphFormat { edge_list, metis, matrix_market };

inline GraphFormat parse_format_name(std::string_view name) {
    if (name == "el" || name == "txt" || name == "edgelist") return GraphFormat::edge_list;
    if (name == "metis" || name == "graph") return GraphFormat::metis;
    if (name == "mtx" || name == "mm") return GraphFormat::matrix_market;
    throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

/// .graph -> METIS, .mtx -> Matrix Market, anything else -> edge list.
inline GraphFormat format_from_extension(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".graph" || ext == ".metis") return GraphFormat::metis;
    if (ext == ".mtx") return GraphFormat::matrix_market;
    return GraphFormat::edge_list;
}

inline BuildResult parse_graph(std::istream& in, GraphFormat format, bool one_indexed = false) {
    switch (format) {
        case GraphFormat::edge_list: return parse_edge_list(in, one_indexed);
        case GraphFormat::metis: return parse_metis(in);
        case GraphFormat::matrix_market: return parse_matrix_market(in);
    }
    return {};
}

inline BuildResult load_graph(const std::filesystem::path& path, std::optional<GraphFormat> format = {},
                              bool one_indexed = false) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return parse_graph(in, format.value_or(format_from_extension(path)), one_indexed);
}

/// m lines "tail head" in edge-id order.
inline std::string write_orientation(const Orientation& o, const UndirectedGraph& g, bool one_indexed = false) {
    std::string out;
    out.reserve(g.num_edges() * 12);
    const VertexId shift = one_indexed ? 1 : 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        out += std::to_string(tail(g, o, e) + shift);
        out += ' ';
        out += std::to_string(head(g, o, e) + shift);
        out += '\n';
    }
    return out;
}

/// Reads an orientation file written by write_orientation back onto g.
inline Orientation read_orientation(std::istream& in, const UndirectedGraph& g, bool one_indexed = false) {
    Orientation o(g);
    std::string line;
    std::size_t number = 0;
    EdgeId e = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty() || line[0] == '#' || detail::is_blank(line)) continue;
        detail::Tokens tokens(line);
        std::string_view a, b;
        tokens.next(a);
        if (!tokens.next(b)) throw parse_error(number, "expected two vertex indices");
        if (e >= g.num_edges()) throw parse_error(number, "more lines than edges");
        const VertexId from = detail::to_vertex(a, number, one_indexed);
        const VertexId to = detail::to_vertex(b, number, one_indexed);
        const EdgeEnds& ends = g.ends(e);
        if (from == ends.u && to == ends.v) {
            o.direction[e] = 0;
        } else if (from == ends.v && to == ends.u) {
            o.direction[e] = 1;
        } else {
            throw parse_error(number, "line does not match edge " + std::to_string(e));
        }
        ++e;
    }
    if (e != g.num_edges()) throw parse_error(number, "fewer lines than edges");
    o.out_degree = recount_out_degrees(g, o);
    return o;
}

}  // namespace eo
