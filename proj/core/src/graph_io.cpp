#include "pinturan/graph_io.hpp"

#include "pinturan/errors.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace pinturan {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

void append_size(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
        return;
    }
    int groups = 3;
    if (n <= 258047) {
        out.push_back(126);
    } else {
        out.append(2, static_cast<char>(126));
        groups = 6;
    }
    for (int k = groups - 1; k >= 0; --k) out.push_back(static_cast<char>(((n >> (6 * k)) & 0x3F) + 63));
}

std::uint64_t read_chunk(std::string_view s, std::size_t pos) {
    const auto c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", 1);
    return c - 63U;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
    std::uint64_t value = 0;
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line);
    return value;
}

} // namespace

std::string to_graph6(const Graph& g) {
    const auto n = g.order();
    std::string out;
    append_size(out, n);
    unsigned acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    auto s = trim(text);
    if (s.substr(0, kGraph6Header.size()) == kGraph6Header) s.remove_prefix(kGraph6Header.size());
    if (s.empty()) throw ParseError("empty graph6 string", 1);

    std::size_t pos = 0;
    std::size_t n = 0;
    if (read_chunk(s, 0) < 63) {
        n = read_chunk(s, 0);
        pos = 1;
    } else {
        int groups = 3;
        pos = 1;
        if (s.size() > 1 && read_chunk(s, 1) == 63) {
            groups = 6;
            pos = 2;
        }
        if (s.size() < pos + groups) throw ParseError("truncated graph6 size field", 1);
        for (int k = 0; k < groups; ++k) n = (n << 6) | read_chunk(s, pos + k);
        pos += groups;
    }

    const std::uint64_t bit_count = n < 2 ? 0 : std::uint64_t{n} * (n - 1) / 2;
    const std::uint64_t expected = (bit_count + 5) / 6;
    if (s.size() - pos != expected)
        throw ParseError("graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                             std::to_string(expected),
                         1);

    Graph g(n);
    std::uint64_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const auto chunk = read_chunk(s, pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1U) g.add_edge(i, j);
        }
    }
    if (bit_count % 6 != 0) {
        const auto last = read_chunk(s, s.size() - 1);
        if (last & ((1U << (6 - bit_count % 6)) - 1)) throw ParseError("non-zero graph6 padding bits", 1);
    }
    return g;
}

Graph parse_edge_list(std::istream& in, std::vector<std::string>* warnings) {
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    std::optional<std::uint64_t> declared_edges;
    std::uint64_t edge_lines = 0;
    Graph g;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tok = tokens(trim(line));
        if (tok.empty()) continue;
        if (!have_header) {
            if (tok[0] == "n") {
                if (tok.size() != 2 && tok.size() != 3) throw ParseError("malformed header, expected 'n <count>'", line_no);
                g = Graph(parse_uint(tok[1], line_no));
                if (tok.size() == 3) declared_edges = parse_uint(tok[2], line_no);
            } else {
                if (tok.size() != 2) throw ParseError("malformed header, expected '<n> <m>'", line_no);
                g = Graph(parse_uint(tok[0], line_no));
                declared_edges = parse_uint(tok[1], line_no);
            }
            have_header = true;
            continue;
        }
        if (tok.size() != 2) throw ParseError("expected 'u v'", line_no);
        const auto u = parse_uint(tok[0], line_no);
        const auto v = parse_uint(tok[1], line_no);
        if (u >= g.order() || v >= g.order())
            throw ParseError("vertex out of range in edge {" + std::to_string(u) + "," + std::to_string(v) + "}", line_no);
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
        ++edge_lines;
        if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)) && warnings)
            warnings->push_back("line " + std::to_string(line_no) + ": duplicate edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "} ignored");
    }
    if (!have_header) throw ParseError("missing header", line_no);
    if (declared_edges && *declared_edges != edge_lines)
        throw ParseError("header declares " + std::to_string(*declared_edges) + " edges, found " +
                             std::to_string(edge_lines),
                         line_no);
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

GraphFormat format_for_path(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    return (ext == ".g6" || ext == ".graph6") ? GraphFormat::Graph6 : GraphFormat::EdgeList;
}

Graph read_graph(const std::filesystem::path& path, GraphFormat format, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    if (format == GraphFormat::Auto) format = format_for_path(path);
    if (format == GraphFormat::EdgeList) return parse_edge_list(in, warnings);
    std::string line;
    while (std::getline(in, line)) {
        if (!trim(line).empty()) return from_graph6(line);
    }
    throw ParseError("no graph6 record in " + path.string(), 1);
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    std::vector<Graph> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        try {
            out.push_back(from_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return out;
}

void write_graph(const std::filesystem::path& path, const Graph& g, GraphFormat format) {
    if (format == GraphFormat::Auto) format = format_for_path(path);
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    if (format == GraphFormat::Graph6)
        out << to_graph6(g) << '\n';
    else
        out << to_edge_list(g);
}

} // namespace pinturan
