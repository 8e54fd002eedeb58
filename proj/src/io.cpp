#include "mstbl/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace mstbl {

namespace {

constexpr int kFormatVersion = 1;

void append_cap(std::string& out, Cap c) {
    if (c.is_unbounded())
        out += "unbounded";
    else
        out += std::to_string(c.value());
}

struct LineScanner {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    // Next nonempty line, or empty when exhausted.
    std::string_view next_line() {
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (!line.empty()) return line;
        }
        return {};
    }
};

std::vector<std::string_view> split_fields(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && s[i] == ' ') ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::int64_t parse_int(std::string_view token, int line) {
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "expected an integer, got '" +
                                   std::string(token) + "'");
    return value;
}

Cap parse_cap(std::string_view token, int line) {
    if (token == "unbounded") return Cap::unbounded();
    std::int64_t v = parse_int(token, line);
    if (v < 0) throw ParseError(line, "capacity must be nonnegative");
    return Cap(v);
}

// Expects "key: rest"; returns rest.
std::string_view expect_key(std::string_view line, std::string_view key,
                            int line_no) {
    std::string prefix = std::string(key) + ":";
    if (line.substr(0, prefix.size()) != prefix)
        throw ParseError(line_no, "expected '" + std::string(key) + ":'");
    std::string_view rest = line.substr(prefix.size());
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    return rest;
}

}  // namespace

std::string serialize_instance(const Instance& instance) {
    const Tree& t = instance.tree;
    std::string out;
    out += "format_version: " + std::to_string(kFormatVersion) + "\n";
    out += "root: " + std::to_string(t.root()) + "\n";
    out += "parents:";
    for (Vertex v = 0; v < t.vertex_count(); ++v)
        out += " " + std::to_string(t.parent(v));
    out += "\nvertex_capacities:";
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        out += ' ';
        append_cap(out, instance.capacities.vertex_cap[v]);
    }
    out += "\nedge_capacities:";
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        if (v == t.root()) continue;
        out += ' ';
        append_cap(out, instance.capacities.edge_cap[v]);
    }
    out += "\nsubtree_count: " + std::to_string(instance.subtree_count()) + "\n";
    for (int i = 0; i < instance.subtree_count(); ++i) {
        const Subtree& s = instance.subtrees[i];
        out += "subtree " + std::to_string(i) +
               ": demand " + std::to_string(s.demand) + " vertices";
        for (Vertex v : s.vertices) out += " " + std::to_string(v);
        out += "\n";
    }
    return out;
}

Instance parse_instance(std::string_view text) {
    LineScanner scan{text};

    std::string_view line = scan.next_line();
    if (line.empty()) throw ParseError(scan.line_no, "empty input");
    std::int64_t version =
        parse_int(expect_key(line, "format_version", scan.line_no), scan.line_no);
    if (version != kFormatVersion)
        throw ParseError(scan.line_no,
                         "unsupported format_version " + std::to_string(version));

    line = scan.next_line();
    Vertex root = static_cast<Vertex>(
        parse_int(expect_key(line, "root", scan.line_no), scan.line_no));

    line = scan.next_line();
    auto parent_fields =
        split_fields(expect_key(line, "parents", scan.line_no));
    if (parent_fields.empty())
        throw ParseError(scan.line_no, "parents list is empty");
    std::vector<Vertex> parents;
    parents.reserve(parent_fields.size());
    for (auto f : parent_fields)
        parents.push_back(static_cast<Vertex>(parse_int(f, scan.line_no)));
    Tree tree;
    try {
        tree = build_tree(parents, root);
    } catch (const std::invalid_argument& e) {
        throw ParseError(scan.line_no, e.what());
    }
    const int n = tree.vertex_count();

    line = scan.next_line();
    auto vcap_fields =
        split_fields(expect_key(line, "vertex_capacities", scan.line_no));
    if (static_cast<int>(vcap_fields.size()) != n)
        throw ParseError(scan.line_no, "expected " + std::to_string(n) +
                                           " vertex capacities");
    CapacityVector caps;
    for (auto f : vcap_fields)
        caps.vertex_cap.push_back(parse_cap(f, scan.line_no));

    line = scan.next_line();
    auto ecap_fields =
        split_fields(expect_key(line, "edge_capacities", scan.line_no));
    if (static_cast<int>(ecap_fields.size()) != n - 1)
        throw ParseError(scan.line_no, "expected " + std::to_string(n - 1) +
                                           " edge capacities");
    caps.edge_cap.assign(n, Cap::unbounded());
    std::size_t next_field = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (v == root) continue;
        caps.edge_cap[v] = parse_cap(ecap_fields[next_field++], scan.line_no);
    }

    line = scan.next_line();
    std::int64_t count =
        parse_int(expect_key(line, "subtree_count", scan.line_no), scan.line_no);
    if (count < 0) throw ParseError(scan.line_no, "negative subtree_count");

    std::vector<Subtree> subtrees;
    subtrees.reserve(count);
    for (std::int64_t i = 0; i < count; ++i) {
        line = scan.next_line();
        if (line.empty())
            throw ParseError(scan.line_no, "missing subtree " + std::to_string(i));
        auto fields = split_fields(line);
        if (fields.size() < 5 || fields[0] != "subtree" ||
            fields[1] != std::to_string(i) + ":" || fields[2] != "demand" ||
            fields[4] != "vertices")
            throw ParseError(scan.line_no,
                             "expected 'subtree " + std::to_string(i) +
                                 ": demand <d> vertices <v...>'");
        std::int64_t demand = parse_int(fields[3], scan.line_no);
        std::vector<Vertex> vertices;
        for (std::size_t f = 5; f < fields.size(); ++f)
            vertices.push_back(
                static_cast<Vertex>(parse_int(fields[f], scan.line_no)));
        try {
            subtrees.push_back(make_subtree(tree, std::move(vertices), demand));
        } catch (const std::invalid_argument& e) {
            throw ParseError(scan.line_no,
                             "subtree " + std::to_string(i) + ": " + e.what());
        }
    }
    if (!scan.next_line().empty())
        throw ParseError(scan.line_no, "unexpected trailing content");

    return Instance(std::move(tree), std::move(subtrees), std::move(caps));
}

SimpleGraph parse_simple_graph(std::string_view text) {
    LineScanner scan{text};
    std::string_view line = scan.next_line();
    if (line.empty()) throw ParseError(scan.line_no, "empty graph file");
    auto head = split_fields(line);
    if (head.size() != 1)
        throw ParseError(scan.line_no, "expected the vertex count alone");
    int n = static_cast<int>(parse_int(head[0], scan.line_no));

    std::vector<std::pair<int, int>> edges;
    for (;;) {
        line = scan.next_line();
        if (line.empty()) break;
        auto fields = split_fields(line);
        if (fields.size() != 2)
            throw ParseError(scan.line_no, "expected 'u v'");
        edges.emplace_back(static_cast<int>(parse_int(fields[0], scan.line_no)),
                           static_cast<int>(parse_int(fields[1], scan.line_no)));
    }
    try {
        return SimpleGraph::make(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(scan.line_no, e.what());
    }
}

}  // namespace mstbl
