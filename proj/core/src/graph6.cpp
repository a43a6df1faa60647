#include "planecount/graph6.hpp"

namespace planecount {

namespace {

constexpr int kBias = 63;

int sextet(std::string_view line, std::size_t i) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126)
        throw MalformedGraph6Error("graph6: byte outside printable range", i);
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty())
        throw MalformedGraph6Error("graph6: empty line", 0);

    std::size_t i = 0;
    long long n;
    if (sextet(line, 0) < 63) {
        n = sextet(line, 0);
        i = 1;
    } else {
        // 126 starts the long form; a second 126 would start the 8-byte
        // form, which exceeds anything this toolkit handles.
        if (line.size() < 4)
            throw MalformedGraph6Error("graph6: truncated long-form vertex count", line.size());
        if (static_cast<unsigned char>(line[1]) == 126)
            throw MalformedGraph6Error("graph6: 8-byte vertex counts unsupported", 1);
        n = 0;
        for (i = 1; i < 4; ++i)
            n = (n << 6) | sextet(line, i);
    }

    const long long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - i != body)
        throw MalformedGraph6Error("graph6: body length mismatch (expected " +
                                       std::to_string(body) + " bytes)",
                                   line.size());

    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            std::size_t byte = i + static_cast<std::size_t>(bit / 6);
            int shift = 5 - static_cast<int>(bit % 6);
            if ((sextet(line, byte) >> shift) & 1)
                g.add_edge(row, col);
        }
    }
    // trailing padding must be zero
    for (; bit < static_cast<long long>(body) * 6; ++bit) {
        std::size_t byte = i + static_cast<std::size_t>(bit / 6);
        int shift = 5 - static_cast<int>(bit % 6);
        if ((sextet(line, byte) >> shift) & 1)
            throw MalformedGraph6Error("graph6: nonzero padding bit", byte);
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        throw std::invalid_argument("write_graph6: more than 258047 vertices");
    }

    int acc = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

}  // namespace planecount
