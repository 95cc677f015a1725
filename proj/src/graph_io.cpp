#include "minforest/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "minforest/errors.hpp"

namespace minforest {

namespace {

struct Token {
    std::string text;
    int col = 0;  // 1-based
};

std::vector<Token> split_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

std::string quote(const std::string& name) {
    std::string out = "\"";
    for (char c : name) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

WeightedDigraph parse_graph(const std::string& document) {
    std::istringstream in(document);
    std::string line;
    int lineno = 0;
    bool have_vertices = false;
    std::vector<std::string> names;
    std::map<std::string, int> index;
    std::vector<Arc> arcs;
    std::map<std::pair<int, int>, int> seen_arcs;  // -> line number

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<Token> tokens = split_line(line);
        if (tokens.empty() || tokens.front().text[0] == '#') continue;
        const Token& head = tokens.front();
        if (head.text == "vertices") {
            if (have_vertices)
                throw ParseError("second vertices line", lineno, head.col);
            if (tokens.size() < 2)
                throw ParseError("vertices line needs at least one name", lineno, head.col);
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const Token& t = tokens[i];
                if (t.text.find('#') != std::string::npos)
                    throw ParseError("vertex name may not contain '#'", lineno, t.col);
                if (index.count(t.text))
                    throw ParseError("duplicate vertex name '" + t.text + "'", lineno, t.col);
                index[t.text] = static_cast<int>(names.size());
                names.push_back(t.text);
            }
            have_vertices = true;
        } else if (head.text == "arc") {
            if (!have_vertices)
                throw ParseError("arc before the vertices line", lineno, head.col);
            if (tokens.size() != 4)
                throw ParseError("arc line needs FROM TO WEIGHT", lineno, head.col);
            auto vertex = [&](const Token& t) {
                auto it = index.find(t.text);
                if (it == index.end())
                    throw ParseError("unknown vertex '" + t.text + "'", lineno, t.col);
                return it->second;
            };
            int from = vertex(tokens[1]);
            int to = vertex(tokens[2]);
            if (from == to) throw ParseError("self-loop arc", lineno, tokens[2].col);
            if (!seen_arcs.emplace(std::make_pair(from, to), lineno).second)
                throw ParseError("duplicate arc", lineno, tokens[1].col);
            auto weight = Rational::parse(tokens[3].text);
            if (!weight)
                throw ParseError("bad weight '" + tokens[3].text + "' (expected p or p/q)",
                                 lineno, tokens[3].col);
            arcs.push_back(Arc{from, to, *weight});
        } else {
            throw ParseError("unknown directive '" + head.text + "'", lineno, head.col);
        }
    }
    if (!have_vertices) throw ParseError("missing vertices line", std::max(lineno, 1), 1);
    try {
        return WeightedDigraph(std::move(names), std::move(arcs));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), lineno, 1);
    }
}

std::string serialize_graph(const WeightedDigraph& graph) {
    std::string out = "vertices";
    for (const std::string& name : graph.names()) {
        out += ' ';
        out += name;
    }
    out += '\n';
    for (const Arc& a : graph.arcs()) {
        out += "arc ";
        out += graph.name(a.from);
        out += ' ';
        out += graph.name(a.to);
        out += ' ';
        out += a.weight.str();
        out += '\n';
    }
    return out;
}

WeightedDigraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string dot_graph(const WeightedDigraph& graph, const std::string& title) {
    std::string out = "digraph " + quote(title) + " {\n";
    for (const std::string& name : graph.names()) out += "  " + quote(name) + ";\n";
    for (const Arc& a : graph.arcs())
        out += "  " + quote(graph.name(a.from)) + " -> " + quote(graph.name(a.to)) +
               " [label=" + quote(a.weight.str()) + "];\n";
    out += "}\n";
    return out;
}

std::string dot_forest(const SpanningForest& forest, const AtomPartition* partition,
                       const std::string& title) {
    const WeightedDigraph& graph = forest.graph();
    std::string out = "digraph " + quote(title) + " {\n";
    VertexSet roots = forest.roots();
    auto node_line = [&](int v) {
        std::string line = "  " + quote(graph.name(v));
        if (roots.contains(v)) line += " [shape=doublecircle]";
        line += ";\n";
        return line;
    };
    if (partition) {
        for (std::size_t i = 0; i < partition->atoms.size(); ++i) {
            out += "  subgraph cluster_" + std::to_string(i) + " {\n";
            std::string label = set_str(graph, partition->atoms[i]);
            if (partition->labeled[i]) label += "*";
            out += "    label=" + quote(label) + ";\n";
            for (int v : partition->atoms[i].elements()) out += "  " + node_line(v);
            out += "  }\n";
        }
    } else {
        for (int v = 0; v < graph.vertex_count(); ++v) out += node_line(v);
    }
    for (int v = 0; v < graph.vertex_count(); ++v) {
        if (!forest.has_out(v)) continue;
        int w = forest.out(v);
        out += "  " + quote(graph.name(v)) + " -> " + quote(graph.name(w)) +
               " [label=" + quote(graph.weight(v, w).str()) + "];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace minforest
