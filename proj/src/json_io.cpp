#include "steinerlab/json_io.hpp"

#include <fstream>

#include "steinerlab/errors.hpp"

namespace steinerlab {

namespace {

nlohmann::json p_to_json(double p) {
    if (p == kInf) return "inf";
    return p;
}

double p_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf" || s == "infinity") return kInf;
        throw ValidationError("unrecognized p value: " + s);
    }
    return j.get<double>();
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw ValidationError(std::string("missing field: ") + key);
    return j.at(key);
}

std::vector<Point> points_from_json(const nlohmann::json& j) {
    std::vector<Point> out;
    for (const auto& row : j) out.push_back(row.get<Point>());
    return out;
}

}  // namespace

nlohmann::json to_json(const Metric& m) {
    nlohmann::json j;
    switch (m.kind) {
        case Metric::Kind::lp:
            j["kind"] = "lp";
            j["p"] = p_to_json(m.p);
            break;
        case Metric::Kind::hamming: j["kind"] = "hamming"; break;
        case Metric::Kind::graph:
            j["kind"] = "graph";
            j["weights"] = m.weights;
            break;
        case Metric::Kind::edit: j["kind"] = "edit"; break;
        case Metric::Kind::ulam: j["kind"] = "ulam"; break;
    }
    return j;
}

Metric metric_from_json(const nlohmann::json& j) {
    const auto kind = field(j, "kind").get<std::string>();
    if (kind == "lp") return Metric::lp(p_from_json(field(j, "p")));
    if (kind == "hamming") return Metric::hamming();
    if (kind == "graph")
        return Metric::graph(field(j, "weights").get<std::vector<std::vector<double>>>());
    if (kind == "edit") return Metric::edit();
    if (kind == "ulam") return Metric::ulam();
    throw ValidationError("unknown metric kind: " + kind);
}

nlohmann::json to_json(const SetSystem& sys) {
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& s : sys.sets) sets.push_back({s[0], s[1], s[2]});
    return {{"n", sys.n}, {"sets", sets}};
}

SetSystem set_system_from_json(const nlohmann::json& j) {
    std::vector<std::array<int, 3>> sets;
    for (const auto& row : field(j, "sets")) {
        if (row.size() != 3) throw ValidationError("set-system sets must have 3 elements");
        sets.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>()});
    }
    return make_set_system(field(j, "n").get<int>(), std::move(sets));
}

nlohmann::json to_json(const EmbeddabilityTuple& t) {
    return {{"alpha_x", t.alpha_x}, {"alpha_p", t.alpha_p}, {"beta_in", t.beta_in},
            {"beta_out", t.beta_out}, {"gamma0", t.gamma0}, {"gamma1", t.gamma1},
            {"gamma2", t.gamma2}, {"tau", t.tau}};
}

EmbeddabilityTuple tuple_from_json(const nlohmann::json& j) {
    EmbeddabilityTuple t;
    t.alpha_x = field(j, "alpha_x").get<double>();
    t.alpha_p = field(j, "alpha_p").get<double>();
    t.beta_in = field(j, "beta_in").get<double>();
    t.beta_out = field(j, "beta_out").get<double>();
    t.gamma0 = field(j, "gamma0").get<double>();
    t.gamma1 = field(j, "gamma1").get<double>();
    t.gamma2 = field(j, "gamma2").get<double>();
    t.tau = field(j, "tau").get<double>();
    return t;
}

nlohmann::json to_json(const DstInstance& inst) {
    return {{"metric", to_json(inst.metric)},
            {"terminals", inst.terminals},
            {"root_index", inst.root_index},
            {"facilities", inst.facilities}};
}

DstInstance dst_instance_from_json(const nlohmann::json& j) {
    DstInstance inst;
    inst.metric = metric_from_json(field(j, "metric"));
    inst.terminals = points_from_json(field(j, "terminals"));
    inst.root_index = field(j, "root_index").get<int>();
    if (j.contains("facilities")) inst.facilities = points_from_json(j.at("facilities"));
    validate_instance(inst);
    return inst;
}

nlohmann::json to_json(const CstInstance& inst) {
    return {{"metric", to_json(inst.metric)},
            {"terminals", inst.terminals},
            {"root_index", inst.root_index}};
}

CstInstance cst_instance_from_json(const nlohmann::json& j) {
    CstInstance inst;
    inst.metric = metric_from_json(field(j, "metric"));
    inst.terminals = points_from_json(field(j, "terminals"));
    inst.root_index = field(j, "root_index").get<int>();
    validate_instance(inst);
    return inst;
}

nlohmann::json to_json(const SimpleGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges) edges.push_back({u + 1, v + 1});
    return {{"n", g.n}, {"edges", edges}};
}

SimpleGraph graph_from_json(const nlohmann::json& j) {
    SimpleGraph g;
    g.n = field(j, "n").get<int>();
    for (const auto& row : field(j, "edges")) {
        if (row.size() != 2) throw ValidationError("graph edges must be pairs");
        g.edges.emplace_back(row[0].get<int>() - 1, row[1].get<int>() - 1);
    }
    validate_graph(g);
    return g;
}

nlohmann::json to_json(const SteinerTree& tree) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& node : tree.nodes) {
        switch (node.kind) {
            case TreeNode::Kind::terminal:
                nodes.push_back({{"kind", "terminal"}, {"index", node.index}});
                break;
            case TreeNode::Kind::facility:
                nodes.push_back({{"kind", "facility"}, {"index", node.index}});
                break;
            case TreeNode::Kind::free_point:
                nodes.push_back({{"kind", "free"}, {"coords", node.coords}});
                break;
        }
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : tree.edges) edges.push_back({a, b});
    return {{"nodes", nodes}, {"edges", edges}, {"cost", tree.cost}};
}

SteinerTree tree_from_json(const nlohmann::json& j) {
    SteinerTree tree;
    for (const auto& node : field(j, "nodes")) {
        const auto kind = field(node, "kind").get<std::string>();
        if (kind == "terminal")
            tree.nodes.push_back(TreeNode::terminal(field(node, "index").get<int>()));
        else if (kind == "facility")
            tree.nodes.push_back(TreeNode::facility(field(node, "index").get<int>()));
        else if (kind == "free")
            tree.nodes.push_back(TreeNode::free_point(field(node, "coords").get<Point>()));
        else
            throw ValidationError("unknown tree node kind: " + kind);
    }
    for (const auto& row : field(j, "edges"))
        tree.edges.emplace_back(row[0].get<int>(), row[1].get<int>());
    tree.cost = j.value("cost", 0.0);
    return tree;
}

nlohmann::json to_json(const LinearCode& code) {
    return {{"q", code.q}, {"K", code.K}, {"N", code.N}};
}

LinearCode code_from_json(const nlohmann::json& j) {
    return make_reed_solomon(field(j, "q").get<int>(), field(j, "K").get<int>(),
                             field(j, "N").get<int>());
}

std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << text;
}

}  // namespace steinerlab
