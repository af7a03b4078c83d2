#include "noderel/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "noderel/errors.hpp"

namespace noderel {

namespace {

struct LineTokens {
    std::vector<std::pair<std::string_view, std::size_t>> tokens;  // token, 1-based column
};

LineTokens tokenize(std::string_view line) {
    LineTokens out;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            out.tokens.emplace_back(line.substr(start, i - start), start + 1);
        }
    }
    return out;
}

std::uint64_t parse_count(std::string_view token, std::size_t line, std::size_t column) {
    std::uint64_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("expected a nonnegative integer, got '" + std::string(token) + "'", line,
                         column);
    }
    return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::vector<Edge> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = tokenize(raw);
        if (line.tokens.empty()) {
            continue;
        }
        if (line.tokens.size() != 2) {
            const auto col = line.tokens.size() > 2 ? line.tokens[2].second : line.tokens[0].second;
            throw ParseError(have_header ? "expected 'u v'" : "expected header 'n m'", line_no, col);
        }
        const auto a = parse_count(line.tokens[0].first, line_no, line.tokens[0].second);
        const auto b = parse_count(line.tokens[1].first, line_no, line.tokens[1].second);
        if (!have_header) {
            n = a;
            m = b;
            have_header = true;
            if (n == 0) {
                throw ParseError("graph order must be at least 1", line_no, line.tokens[0].second);
            }
            continue;
        }
        if (a >= n || b >= n) {
            throw ParseError("endpoint out of range 0.." + std::to_string(n - 1), line_no,
                             (a >= n ? line.tokens[0] : line.tokens[1]).second);
        }
        if (a == b) {
            throw ParseError("self-loop at vertex " + std::to_string(a), line_no,
                             line.tokens[0].second);
        }
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!have_header) {
        throw ParseError("missing header 'n m'", line_no + 1, 1);
    }
    if (edges.size() != m) {
        throw ParseError("header announces " + std::to_string(m) + " edges but " +
                             std::to_string(edges.size()) + " were listed",
                         line_no + 1, 1);
    }
    return Graph::from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw std::runtime_error("cannot open " + file.string());
    }
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

std::string to_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
        }
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
        }
    }
    // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    int bits = 0;
    int acc = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                bits = 0;
                acc = 0;
            }
        }
    }
    if (bits > 0) {
        out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    }
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) {
        text.remove_prefix(10);
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) {
            throw ParseError("graph6 string is truncated", 1, pos + 1);
        }
        const int c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) {
            throw ParseError("invalid graph6 character", 1, pos + 1);
        }
        ++pos;
        return c - 63;
    };
    std::uint64_t n = 0;
    const int first = next();
    if (first < 63) {
        n = static_cast<std::uint64_t>(first);
    } else if (pos < text.size() && text[pos] == 126) {
        ++pos;
        for (int i = 0; i < 6; ++i) {
            n = (n << 6) | static_cast<std::uint64_t>(next());
        }
    } else {
        for (int i = 0; i < 3; ++i) {
            n = (n << 6) | static_cast<std::uint64_t>(next());
        }
    }
    if (n == 0) {
        throw ParseError("graph order must be at least 1", 1, 1);
    }
    std::vector<Edge> edges;
    int bits = 0;
    int acc = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i) {
            if (bits == 0) {
                acc = next();
                bits = 6;
            }
            --bits;
            if ((acc >> bits) & 1) {
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    if (pos != text.size()) {
        throw ParseError("trailing characters after graph6 data", 1, pos + 1);
    }
    return Graph::from_edge_list(n, edges);
}

}  // namespace noderel
