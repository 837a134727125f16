#include "hexfree/io.hpp"

#include <fstream>
#include <sstream>

namespace hexfree {

namespace {

void warn(std::vector<std::string>* warnings, const std::string& msg) {
    if (warnings)
        warnings->push_back(msg);
}

Graph read_dimacs(const std::string& text, std::vector<std::string>* warnings) {
    std::istringstream in(text);
    std::string line;
    int n = -1, declared_m = 0, ln = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++ln;
        if (line.empty() || line[0] == 'c' || line[0] == '\r')
            continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (tag == "p") {
            if (n >= 0)
                throw InputError("dimacs line " + std::to_string(ln) + ": duplicate header");
            std::string kind;
            iss >> kind >> n >> declared_m;
            if (!iss || (kind != "edge" && kind != "edges" && kind != "col") || n < 0)
                throw InputError("dimacs line " + std::to_string(ln) + ": malformed header");
            g = Graph(n);
        } else if (tag == "e") {
            if (n < 0)
                throw InputError("dimacs line " + std::to_string(ln) + ": edge before header");
            int u, v;
            iss >> u >> v;
            if (!iss)
                throw InputError("dimacs line " + std::to_string(ln) + ": malformed edge");
            if (u < 1 || v < 1 || u > n || v > n)
                throw InputError("dimacs line " + std::to_string(ln) + ": vertex out of range");
            if (u == v)
                throw InputError("dimacs line " + std::to_string(ln) + ": loop rejected");
            if (g.adjacent(u - 1, v - 1)) {
                warn(warnings, "dimacs line " + std::to_string(ln) + ": duplicate edge " +
                                   std::to_string(u) + " " + std::to_string(v) + " ignored");
                continue;
            }
            g.add_edge(u - 1, v - 1);
        } else if (tag == "n") {
            continue; // node lines carry weights; unweighted here
        } else {
            throw InputError("dimacs line " + std::to_string(ln) + ": unknown line type '" + tag +
                             "'");
        }
    }
    if (n < 0)
        throw InputError("dimacs: missing 'p edge' header");
    if (g.edge_count() != declared_m)
        warn(warnings, "dimacs: header declares " + std::to_string(declared_m) + " edges, read " +
                           std::to_string(g.edge_count()));
    return g;
}

Graph read_edgelist(const std::string& text, std::vector<std::string>* warnings) {
    std::istringstream in(text);
    std::string line;
    int n = -1, ln = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++ln;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream iss(line);
        if (n < 0) {
            if (!(iss >> n))
                continue; // blank/comment line before the count
            if (n < 0)
                throw InputError("edgelist line " + std::to_string(ln) + ": negative vertex count");
            g = Graph(n);
            continue;
        }
        int u, v;
        if (!(iss >> u))
            continue;
        if (!(iss >> v))
            throw InputError("edgelist line " + std::to_string(ln) + ": expected two endpoints");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edgelist line " + std::to_string(ln) + ": vertex out of range");
        if (u == v)
            throw InputError("edgelist line " + std::to_string(ln) + ": loop rejected");
        if (g.adjacent(u, v)) {
            warn(warnings, "edgelist line " + std::to_string(ln) + ": duplicate edge ignored");
            continue;
        }
        g.add_edge(u, v);
    }
    if (n < 0)
        throw InputError("edgelist: missing vertex count");
    return g;
}

} // namespace

Graph read_graph(const std::string& text, GraphFormat format, std::vector<std::string>* warnings) {
    return format == GraphFormat::dimacs ? read_dimacs(text, warnings)
                                         : read_edgelist(text, warnings);
}

std::string write_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    if (format == GraphFormat::dimacs) {
        out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
        for (auto [u, v] : g.edges())
            out << "e " << u + 1 << " " << v + 1 << "\n";
    } else {
        out << g.vertex_count() << "\n";
        for (auto [u, v] : g.edges())
            out << u << " " << v << "\n";
    }
    return out.str();
}

GraphFormat detect_format(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c' || line[0] == '#')
            continue;
        if (line[0] == 'p' || line[0] == 'e')
            return GraphFormat::dimacs;
        return GraphFormat::edgelist;
    }
    return GraphFormat::edgelist;
}

Graph read_graph_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    return read_graph(text, detect_format(text), warnings);
}

} // namespace hexfree
