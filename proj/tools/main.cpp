#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hexfree/chromatic_index.hpp"
#include "hexfree/coloring.hpp"
#include "hexfree/decomposition.hpp"
#include "hexfree/io.hpp"
#include "hexfree/oracle.hpp"
#include "hexfree/recognition.hpp"

using json = nlohmann::ordered_json;
using namespace hexfree;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load(const std::string& path, std::string* text_out = nullptr) {
    std::string text = slurp(path);
    std::vector<std::string> warnings;
    Graph g = read_graph(text, detect_format(text), &warnings);
    for (const auto& w : warnings)
        std::cerr << "warning: " << w << "\n";
    if (text_out)
        *text_out = text;
    return g;
}

json witness_json(const Witness& w) {
    return json{{"kind", to_string(w.kind)}, {"vertices", w.vertices}};
}

json envelope(const std::string& command, const Graph& g, const Timer& t) {
    json out;
    out["command"] = command;
    out["n"] = g.vertex_count();
    out["m"] = g.edge_count();
    out["timing_ms"] = t.ms();
    return out;
}

int cmd_recognize(const std::string& path, bool as_json) {
    Timer t;
    Graph g = load(path);
    ClassCheck check = in_class(g);
    if (as_json) {
        json out = envelope("recognize", g, t);
        if (!check.in_class)
            out["witness"] = witness_json(*check.witness);
        std::cout << out.dump() << "\n";
    } else if (check.in_class) {
        std::cout << "in class: no forbidden induced subgraph found\n";
    } else {
        std::cout << "not in class: induced " << to_string(check.witness->kind) << " on";
        for (int v : check.witness->vertices)
            std::cout << " " << v;
        std::cout << "\n";
    }
    return check.in_class ? 0 : 1;
}

int cmd_color(const std::string& path, bool as_json, bool force, long long budget) {
    Timer t;
    std::string text;
    Graph g = load(path, &text);

    if (!force) {
        ClassCheck check = in_class(g);
        if (!check.in_class) {
            if (as_json) {
                json out = envelope("color", g, t);
                out["witness"] = witness_json(*check.witness);
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "not in class: induced " << to_string(check.witness->kind)
                          << "; rerun with --force for the exact solver\n";
            }
            return 1;
        }
    }

    ColorOptions opts;
    opts.node_budget = budget;
    Coloring c = force ? exact_color(g, budget) : color_class_graph(g, opts);

    // Mandatory self-check against a fresh parse of the input.
    Graph reread = read_graph(text, detect_format(text));
    if (!is_proper(reread, c))
        throw StructureViolation("self-check failed: coloring does not verify on re-read input");

    if (as_json) {
        json out = envelope("color", g, t);
        out["chromatic_number"] = c.color_count;
        out["coloring"] = c.colors;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "chromatic number: " << c.color_count << "\n";
        std::cout << "coloring:";
        for (int x : c.colors)
            std::cout << " " << x;
        std::cout << "\nverified: proper on re-read input\n";
    }
    return 0;
}

json tree_json(const AtomTree::Node* node) {
    if (node->is_leaf())
        return json{{"leaf", node->vertices}};
    return json{{"cutset", node->cutset},
                {"left", tree_json(node->left.get())},
                {"right", tree_json(node->right.get())}};
}

void print_tree(const AtomTree::Node* node, int depth) {
    std::string pad(2 * depth, ' ');
    if (node->is_leaf()) {
        std::cout << pad << "atom:";
        for (int v : node->vertices)
            std::cout << " " << v;
        std::cout << "\n";
        return;
    }
    std::cout << pad << "cutset:";
    for (int v : node->cutset)
        std::cout << " " << v;
    std::cout << "\n";
    print_tree(node->left.get(), depth + 1);
    print_tree(node->right.get(), depth + 1);
}

int cmd_atoms(const std::string& path, bool as_json) {
    Timer t;
    Graph g = load(path);
    AtomTree tree = decompose(g);
    if (as_json) {
        json out = envelope("atoms", g, t);
        json atoms;
        atoms["tree"] = tree_json(tree.root.get());
        json leaves = json::array(), cutsets = json::array();
        for (const auto* leaf : tree.leaves())
            leaves.push_back(leaf->vertices);
        std::vector<const AtomTree::Node*> stack{tree.root.get()};
        while (!stack.empty()) {
            const auto* node = stack.back();
            stack.pop_back();
            if (!node->is_leaf()) {
                cutsets.push_back(node->cutset);
                stack.push_back(node->right.get());
                stack.push_back(node->left.get());
            }
        }
        atoms["leaves"] = leaves;
        atoms["cutsets"] = cutsets;
        out["atoms"] = atoms;
        std::cout << out.dump() << "\n";
    } else {
        print_tree(tree.root.get(), 0);
        std::cout << tree.leaf_count() << " atom(s)\n";
    }
    return 0;
}

int cmd_structure(const std::string& path, bool as_json) {
    Timer t;
    Graph g = load(path);
    if (!is_connected(g))
        throw InputError("graph is disconnected; split components first");
    ClassCheck check = in_class(g);
    if (!check.in_class) {
        std::cout << "not in class: induced " << to_string(check.witness->kind) << "\n";
        return 1;
    }
    auto hole = find_hole(g, 5);
    if (!hole)
        throw InputError("graph has no induced C5 to classify against");
    C5Structure s = classify_c5(g, *hole);
    json payload;
    payload["c5"] = s.c5;
    payload["X"] = s.X;
    payload["Y"] = s.Y;
    payload["R"] = s.R;
    if (as_json) {
        json out = envelope("structure", g, t);
        out["structure"] = payload;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << payload.dump(2) << "\n";
    }
    return 0;
}

int cmd_chromatic_index(const std::string& path, bool as_json, long long budget) {
    Timer t;
    Graph g = load(path);
    MatchingGate gate = matching_gate(g);
    if (!gate.ok) {
        std::ostringstream msg;
        msg << "rejected: matching of size four:";
        for (auto [u, v] : gate.witness)
            msg << " (" << u << "," << v << ")";
        throw InputError(msg.str());
    }
    ChromaticIndexOptions opts;
    opts.node_budget = budget;
    EdgeColoring ec = chromatic_index(g, opts);
    int delta = max_degree(g);
    if (as_json) {
        json out = envelope("chromatic-index", g, t);
        out["chi_prime"] = ec.color_count;
        out["delta"] = delta;
        json edge_colors = json::array();
        for (size_t i = 0; i < ec.edges.size(); ++i)
            edge_colors.push_back({ec.edges[i].first, ec.edges[i].second, ec.colors[i]});
        out["edge_colors"] = edge_colors;
        out["class"] = (ec.color_count == delta ? 1 : 2);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "chromatic index: " << ec.color_count << " (max degree " << delta
                  << ", class " << (ec.color_count == delta ? 1 : 2) << ")\n";
        for (size_t i = 0; i < ec.edges.size(); ++i)
            std::cout << ec.edges[i].first << " " << ec.edges[i].second << " -> " << ec.colors[i]
                      << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path) {
    Graph g = load(graph_path);
    json doc;
    try {
        doc = json::parse(slurp(coloring_path));
    } catch (const json::exception& e) {
        throw InputError(std::string("bad coloring file: ") + e.what());
    }
    if (doc.is_object() && doc.contains("coloring"))
        doc = doc["coloring"];
    if (!doc.is_array())
        throw InputError("coloring file must be a JSON array (or carry a 'coloring' key)");
    std::vector<int> colors;
    for (const auto& x : doc) {
        if (!x.is_number_integer())
            throw InputError("coloring entries must be integers");
        colors.push_back(x.get<int>());
    }
    if (static_cast<int>(colors.size()) != g.vertex_count())
        throw InputError("coloring has " + std::to_string(colors.size()) + " entries for " +
                         std::to_string(g.vertex_count()) + " vertices");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (colors[v] < 0)
            throw InputError("vertex " + std::to_string(v) + " has a negative color");
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v])
            throw InputError("improper: edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " has both ends colored " + std::to_string(colors[u]));
    Coloring c = make_coloring(colors);
    std::cout << "proper coloring with " << c.color_count << " color(s)\n";
    return 0;
}

int cmd_gen(int n_min, int n_max, uint64_t seed, const std::string& strategy, int count,
            const std::string& out_dir) {
    GenSpec spec;
    spec.n_min = n_min;
    spec.n_max = n_max;
    spec.seed = seed;
    if (strategy == "exhaustive_labeled")
        spec.strategy = GenStrategy::exhaustive_labeled;
    else if (strategy == "random_filtered")
        spec.strategy = GenStrategy::random_filtered;
    else if (strategy == "constructive_c5")
        spec.strategy = GenStrategy::constructive_c5;
    else
        throw InputError("unknown strategy '" + strategy + "'");

    Generator gen(spec);
    int produced = 0;
    for (int i = 0; i < count; ++i) {
        auto g = gen.next();
        if (!g)
            break;
        std::string text = write_graph(*g, GraphFormat::dimacs);
        if (out_dir.empty()) {
            if (produced > 0)
                std::cout << "c ---\n";
            std::cout << text;
        } else {
            std::ostringstream name;
            name << out_dir << "/" << strategy << "_s" << seed << "_" << i << ".col";
            std::ofstream out(name.str());
            if (!out)
                throw InputError("cannot write " + name.str());
            out << text;
        }
        ++produced;
    }
    if (produced == 0)
        throw InputError("generator produced no graphs for this spec");
    if (produced < count)
        std::cerr << "note: produced " << produced << " of " << count << " requested graphs\n";
    return 0;
}

int cmd_oracle(const std::string& what, const std::string& path) {
    Graph g = load(path);
    if (what == "chi")
        std::cout << brute_chromatic(g) << "\n";
    else if (what == "chi-prime")
        std::cout << brute_edge_chromatic(g) << "\n";
    else
        throw InputError("oracle supports 'chi' and 'chi-prime'");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coloring for graphs with none of the six minimal line-graph "
                 "obstructions (claw, 4K1, K5-e, 5-wheel, C5-twin, P5-twin) as induced "
                 "subgraphs, plus the chromatic index of graphs with no matching of size four"};
    app.require_subcommand(1);

    std::string path, coloring_path, strategy = "constructive_c5", out_dir, oracle_what;
    bool as_json = false, force = false;
    long long budget = -1;
    int n_min = 8, n_max = 11, count = 1;
    uint64_t seed = 1;

    auto* rec = app.add_subcommand("recognize", "test class membership, print a witness if not");
    rec->add_option("file", path)->required();
    rec->add_flag("--json", as_json);

    auto* col = app.add_subcommand("color", "optimal coloring for class members");
    col->add_option("file", path)->required();
    col->add_flag("--json", as_json);
    col->add_flag("--force", force, "run the exact solver even outside the class");
    col->add_option("--budget", budget, "exact solver node budget (overrides HEXFREE_NODE_BUDGET)");

    auto* at = app.add_subcommand("atoms", "clique-cutset decomposition tree");
    at->add_option("file", path)->required();
    at->add_flag("--json", as_json);

    auto* st = app.add_subcommand("structure", "X/Y/R partition around the first induced C5");
    st->add_option("file", path)->required();
    st->add_flag("--json", as_json);

    auto* ci = app.add_subcommand("chromatic-index",
                                  "optimal edge coloring when no matching of size four exists");
    ci->add_option("file", path)->required();
    ci->add_flag("--json", as_json);
    ci->add_option("--budget", budget);

    auto* ver = app.add_subcommand("verify", "check a coloring file against a graph");
    ver->add_option("graph", path)->required();
    ver->add_option("coloring", coloring_path)->required();

    auto* gen = app.add_subcommand("gen", "emit class members as DIMACS");
    gen->add_option("--n", n_min, "exact vertex count (sets both bounds)");
    gen->add_option("--n-min", n_min);
    gen->add_option("--n-max", n_max);
    gen->add_option("--seed", seed);
    gen->add_option("--strategy", strategy,
                    "exhaustive_labeled | random_filtered | constructive_c5");
    gen->add_option("--count", count);
    gen->add_option("--out-dir", out_dir);

    auto* orc = app.add_subcommand("oracle", "brute-force chi / chi-prime");
    orc->add_option("what", oracle_what, "chi | chi-prime")->required();
    orc->add_option("file", path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (rec->parsed())
            return cmd_recognize(path, as_json);
        if (col->parsed())
            return cmd_color(path, as_json, force, budget);
        if (at->parsed())
            return cmd_atoms(path, as_json);
        if (st->parsed())
            return cmd_structure(path, as_json);
        if (ci->parsed())
            return cmd_chromatic_index(path, as_json, budget);
        if (ver->parsed())
            return cmd_verify(path, coloring_path);
        if (gen->parsed()) {
            if (gen->count("--n") && !gen->count("--n-max"))
                n_max = n_min;
            return cmd_gen(n_min, n_max, seed, strategy, count, out_dir);
        }
        if (orc->parsed())
            return cmd_oracle(oracle_what, path);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NotInClass& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const StructureViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
