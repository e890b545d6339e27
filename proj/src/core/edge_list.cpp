#include "hlag/edge_list.hpp"

#include <charconv>
#include <sstream>
#include <unordered_map>

namespace hlag {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
{
}

namespace {

std::vector<long long> split_integers(std::string_view s, std::size_t line)
{
    std::vector<long long> out;
    std::size_t p = 0;
    while (p < s.size()) {
        while (p < s.size() && (s[p] == ' ' || s[p] == '\t' || s[p] == '\r'))
            ++p;
        if (p == s.size())
            break;
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(s.data() + p, s.data() + s.size(), value);
        const auto used = static_cast<std::size_t>(ptr - (s.data() + p));
        const bool at_separator = p + used == s.size() || s[p + used] == ' ' || s[p + used] == '\t'
                               || s[p + used] == '\r';
        if (ec != std::errc{} || used == 0 || !at_separator)
            throw ParseError(line, "expected integers, got '" + std::string(s) + "'");
        out.push_back(value);
        p += used;
    }
    return out;
}

bool is_blank(std::string_view s)
{
    return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

bool is_comment(std::string_view s)
{
    const auto p = s.find_first_not_of(" \t");
    return p != std::string_view::npos && s[p] == '#';
}

} // namespace

UniformHypergraph parse_edge_list(std::istream& in)
{
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    long long r = 0, n = 0, m = 0;
    std::vector<EdgeMask> edges;
    std::unordered_map<EdgeMask, std::size_t> first_seen;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line) || (!have_header && is_comment(line)))
            continue;
        const auto values = split_integers(line, lineno);
        if (!have_header) {
            if (values.size() != 3)
                throw ParseError(lineno, "header must be 'r n m'");
            r = values[0];
            n = values[1];
            m = values[2];
            if (r < 1)
                throw ParseError(lineno, "rank r must be at least 1");
            if (n < r || n > kMaxVertices)
                throw ParseError(lineno, "vertex count must satisfy r <= n <= 64");
            if (m < 0 || static_cast<std::uint64_t>(m) > binomial(n, r))
                throw ParseError(lineno, "edge count must satisfy 0 <= m <= C(n, r)");
            have_header = true;
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(lineno, "more than the declared " + std::to_string(m) + " edges");
        if (static_cast<long long>(values.size()) != r)
            throw ParseError(lineno, "edge has " + std::to_string(values.size()) + " vertices, expected "
                                         + std::to_string(r));
        EdgeMask e = 0;
        for (std::size_t p = 0; p < values.size(); ++p) {
            if (values[p] < 1 || values[p] > n)
                throw ParseError(lineno, "vertex " + std::to_string(values[p]) + " outside [1, "
                                             + std::to_string(n) + "]");
            if (p > 0 && values[p - 1] >= values[p])
                throw ParseError(lineno, "edge vertices must be strictly increasing");
            e |= vertex_bit(static_cast<Vertex>(values[p]));
        }
        if (const auto [it, fresh] = first_seen.emplace(e, lineno); !fresh)
            throw ParseError(lineno, "duplicate edge (first seen on line " + std::to_string(it->second) + ")");
        edges.push_back(e);
    }
    if (!have_header)
        throw ParseError(lineno, "missing header 'r n m'");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lineno, "declared " + std::to_string(m) + " edges but found "
                                     + std::to_string(edges.size()));
    return UniformHypergraph(static_cast<int>(r), static_cast<int>(n), std::move(edges));
}

UniformHypergraph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const UniformHypergraph& g, const std::vector<std::string>& comments)
{
    for (const auto& c : comments)
        out << "# " << c << '\n';
    out << g.rank() << ' ' << g.order() << ' ' << g.size() << '\n';
    for (EdgeMask e : g.edges()) {
        bool first = true;
        for_each_vertex(e, [&](Vertex v) {
            out << (first ? "" : " ") << v;
            first = false;
        });
        out << '\n';
    }
}

std::string to_edge_list(const UniformHypergraph& g, const std::vector<std::string>& comments)
{
    std::ostringstream os;
    write_edge_list(os, g, comments);
    return os.str();
}

} // namespace hlag
