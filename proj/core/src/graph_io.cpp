#include "findex/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <vector>

namespace findex {

namespace {

constexpr int kGraph6MaxOrder = 62;
constexpr char kGraph6Header[] = ">>graph6<<";

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::string_view strip_comment(std::string_view line) {
    auto hash = line.find('#');
    if (hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    return trim(line);
}

// Splits on whitespace.
std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
            ++j;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

bool parse_int(std::string_view tok, long long& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::string at_line(int line) { return " at line " + std::to_string(line); }

// Visits every line with its 1-based number.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    int number = 0;
    while (!text.empty()) {
        ++number;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        fn(number, line);
        if (nl == std::string_view::npos) {
            break;
        }
        text.remove_prefix(nl + 1);
    }
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    long long n = -1;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;

    for_each_line(text, [&](int number, std::string_view raw) {
        std::string_view line = strip_comment(raw);
        if (line.empty()) {
            return;
        }
        auto parts = tokens(line);
        if (n < 0) {
            if (parts.size() != 1 || !parse_int(parts[0], n) || n < 0) {
                throw ParseError(number, "expected vertex count" + at_line(number));
            }
            return;
        }
        long long u = 0;
        long long v = 0;
        if (parts.size() != 2 || !parse_int(parts[0], u) || !parse_int(parts[1], v)) {
            throw ParseError(number, "malformed edge line" + at_line(number));
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError(number, "vertex out of range" + at_line(number));
        }
        if (u == v) {
            throw ParseError(number, "self-loop" + at_line(number));
        }
        const std::pair<int, int> key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (!seen.insert(key).second) {
            throw ParseError(number, "duplicate edge" + at_line(number));
        }
        edges.push_back(Edge{key.first, key.second});
    });

    if (n < 0) {
        throw ParseError(0, "missing vertex count");
    }
    return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
    return out;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) {
        throw std::invalid_argument("graph6 output supports n <= 62");
    }
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int bits = 0;
    int acc = 0;
    // Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
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

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(kGraph6Header)) {
        text.remove_prefix(sizeof(kGraph6Header) - 1);
    }
    if (text.empty()) {
        throw ParseError(0, "empty graph6 string");
    }
    for (char c : text) {
        if (c < 63 || c > 126) {
            throw ParseError(0, "invalid graph6 character '" + std::string(1, c) + "'");
        }
    }
    const int n = text[0] - 63;
    if (n > kGraph6MaxOrder) {
        throw ParseError(0, "graph6 input limited to n <= 62");
    }
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body = (pairs + 5) / 6;
    if (text.size() != 1 + body) {
        throw ParseError(0, "graph6 length " + std::to_string(text.size()) + " does not match n=" +
                                std::to_string(n));
    }
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int chunk = text[1 + bit / 6] - 63;
            if ((chunk >> (5 - bit % 6)) & 1) {
                edges.push_back(Edge{i, j});
            }
        }
    }
    if (bit % 6 != 0) {
        const int chunk = text[1 + bit / 6] - 63;
        if (chunk & ((1 << (6 - bit % 6)) - 1)) {
            throw ParseError(0, "graph6 padding bits must be zero");
        }
    }
    return Graph(n, edges);
}

Graph parse_graph(std::string_view text, InputFormat fmt) {
    if (fmt == InputFormat::edge_list) {
        return parse_edge_list(text);
    }
    if (fmt == InputFormat::graph6) {
        return parse_graph6(text);
    }
    std::string_view first;
    for_each_line(text, [&](int, std::string_view raw) {
        if (first.empty()) {
            first = strip_comment(raw);
        }
    });
    if (first.empty()) {
        throw ParseError(0, "empty input");
    }
    const bool digits = std::all_of(first.begin(), first.end(),
                                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (digits) {
        return parse_edge_list(text);
    }
    return parse_graph6(first);
}

}  // namespace findex
