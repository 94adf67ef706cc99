#include "mergecalc/io.hpp"

#include <map>
#include <set>
#include <sstream>

#include "mergecalc/codec.hpp"
#include "mergecalc/error.hpp"

namespace mergecalc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw MergeError(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* name, const std::string& where) {
    if (!j.is_object() || !j.contains(name)) bad(where + ": missing \"" + name + "\"");
    return j.at(name);
}

long long non_negative(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) bad(where + ": expected a non-negative integer");
    return j.get<long long>();
}

Json path_list(const std::vector<Path>& paths) {
    Json out = Json::array();
    for (const auto& p : paths) out.push_back(p);
    return out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

Json network_to_json(const MergeNetwork& net) {
    Json j;
    Json vertices = Json::array();
    Json labels = Json::array();
    for (std::size_t v = 0; v < net.dag.vertex_count(); ++v) {
        vertices.push_back(v);
        labels.push_back(net.dag.label(static_cast<VertexId>(v)));
    }
    Json edges = Json::array();
    for (const auto& e : net.dag.edges()) edges.push_back({e.id, e.tail, e.head});
    Json groups = Json::array();
    for (const auto& g : net.groups) {
        groups.push_back({{"source", g.source}, {"sink", g.sink}, {"paths", path_list(g.paths)}});
    }
    j["vertices"] = vertices;
    j["labels"] = labels;
    j["edges"] = edges;
    j["groups"] = groups;
    j["mode"] = net.mode == SourceMode::Identical ? "identical" : "distinct";
    if (net.mode == SourceMode::Identical) j["starting_subpaths"] = path_list(net.starting_subpaths);
    return j;
}

MergeNetwork network_from_json(const Json& j) {
    if (!j.is_object()) bad("graph: expected an object");
    MergeNetwork net;
    std::map<long long, VertexId> vid;
    const auto& vertices = field(j, "vertices", "graph");
    if (!vertices.is_array()) bad("vertices: expected an array");
    const Json* labels = j.contains("labels") ? &j.at("labels") : nullptr;
    if (labels && (!labels->is_array() || labels->size() != vertices.size())) bad("labels: must match vertices");
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        const long long id = non_negative(vertices[k], "vertices[" + std::to_string(k) + "]");
        if (vid.count(id)) bad("vertices: duplicate id " + std::to_string(id));
        std::string label = std::to_string(id);
        if (labels) {
            if (!(*labels)[k].is_string()) bad("labels[" + std::to_string(k) + "]: expected a string");
            label = (*labels)[k].get<std::string>();
        }
        vid[id] = net.dag.add_vertex(label);
    }
    auto vertex = [&](const Json& x, const std::string& where) {
        auto it = vid.find(non_negative(x, where));
        if (it == vid.end()) throw MergeError(ErrorKind::UnknownVertex, where + ": unknown vertex " + x.dump());
        return it->second;
    };
    std::map<long long, EdgeId> eid;
    const auto& edges = field(j, "edges", "graph");
    if (!edges.is_array()) bad("edges: expected an array");
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string where = "edges[" + std::to_string(k) + "]";
        const auto& e = edges[k];
        if (!e.is_array() || e.size() != 3) bad(where + ": expected [eid, tail, head]");
        const long long id = non_negative(e[0], where);
        if (eid.count(id)) bad(where + ": duplicate edge id " + std::to_string(id));
        eid[id] = net.dag.add_edge(vertex(e[1], where), vertex(e[2], where));
    }
    auto paths = [&](const Json& list, const std::string& where) {
        if (!list.is_array()) bad(where + ": expected an array of paths");
        std::vector<Path> out;
        for (std::size_t p = 0; p < list.size(); ++p) {
            const std::string pw = where + "[" + std::to_string(p) + "]";
            if (!list[p].is_array()) bad(pw + ": expected an array of edge ids");
            Path path;
            for (const auto& x : list[p]) {
                auto it = eid.find(non_negative(x, pw));
                if (it == eid.end()) bad(pw + ": unknown edge " + x.dump());
                path.push_back(it->second);
            }
            out.push_back(std::move(path));
        }
        return out;
    };
    const auto& groups = field(j, "groups", "graph");
    if (!groups.is_array() || groups.empty()) bad("groups: expected a non-empty array");
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const std::string where = "groups[" + std::to_string(g) + "]";
        PathGroup grp;
        grp.source = vertex(field(groups[g], "source", where), where + ".source");
        grp.sink = vertex(field(groups[g], "sink", where), where + ".sink");
        grp.paths = paths(field(groups[g], "paths", where), where + ".paths");
        net.groups.push_back(std::move(grp));
    }
    const std::string mode = j.contains("mode") ? j.at("mode").get<std::string>() : "distinct";
    if (mode == "identical") {
        net.mode = SourceMode::Identical;
        net.starting_subpaths = paths(field(j, "starting_subpaths", "graph"), "starting_subpaths");
    } else if (mode != "distinct") {
        bad("mode: expected \"distinct\" or \"identical\"");
    }
    check_edge_limit(net.dag);
    validate(net);
    return net;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string network_to_dot(const MergeNetwork& net) {
    std::set<VertexId> heads;
    for (const auto& m : find_mergings(net)) heads.insert(m.head);
    std::vector<std::vector<std::string>> users(net.dag.edge_count());
    for (std::size_t g = 0; g < net.groups.size(); ++g) {
        for (std::size_t p = 0; p < net.groups[g].paths.size(); ++p) {
            for (EdgeId e : net.groups[g].paths[p]) {
                users[static_cast<std::size_t>(e)].push_back(std::to_string(g + 1) + "." + std::to_string(p + 1));
            }
        }
    }
    std::ostringstream out;
    out << "digraph merging {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
    for (std::size_t v = 0; v < net.dag.vertex_count(); ++v) {
        const auto label = dot_escape(net.dag.label(static_cast<VertexId>(v)));
        out << "  v" << v;
        if (heads.count(static_cast<VertexId>(v))) {
            out << " [shape=point, width=0.15, style=filled, fillcolor=black, xlabel=\"" << label << "\"];\n";
        } else {
            out << " [label=\"" << label << "\"];\n";
        }
    }
    for (const auto& e : net.dag.edges()) {
        std::string lab;
        for (const auto& u : users[static_cast<std::size_t>(e.id)]) lab += (lab.empty() ? "" : ",") + u;
        out << "  v" << e.tail << " -> v" << e.head << " [label=\"" << lab << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

Json merging_to_json(const MergeNetwork& net, const MergedSubpath& m) {
    Json parts = Json::array();
    for (const auto& r : m.participants) parts.push_back({r.group, r.path});
    return {{"start_edge", m.start_edge},
            {"run", m.run},
            {"head", m.head},
            {"tail", m.tail},
            {"head_label", net.dag.label(m.head)},
            {"tail_label", net.dag.label(m.tail)},
            {"participants", parts}};
}

Json aa_to_json(const MergeNetwork& net, const AaSequence& seq) {
    Json stations = Json::array();
    for (const auto& s : seq.visits) {
        stations.push_back({{"vertex", s.vertex},
                            {"label", net.dag.label(s.vertex)},
                            {"pair", {s.phi + 1, s.psi + 1}},
                            {"starting", s.starting}});
    }
    const char* term = seq.terminus == AaTerminus::R1 ? "R1" : seq.terminus == AaTerminus::S2 ? "S2" : "R1-identical";
    return {{"kind", seq.kind == AaKind::Phi ? "phi" : "psi"},
            {"start", seq.start_index + 1},
            {"length", seq.length()},
            {"terminus", term},
            {"stations", stations}};
}

Json blocks_to_json(const BlockDecomposition& bd) {
    Json theta = Json::array();
    for (const auto& p : bd.theta) {
        theta.push_back({{"lambda", p.lambda}, {"mu", p.mu}, {"type", p.type == PairType::I ? "I" : "II"}, {"psi", p.psi + 1}});
    }
    return {{"theta", theta}, {"mini_blocks", bd.mini_blocks}, {"medium_blocks", bd.medium_blocks},
            {"x", bd.x},      {"y", bd.y},                     {"z", bd.z}};
}

Json bounds_to_json(const BoundTable& t) {
    return {{"quantity", t.quantity}, {"params", t.params}, {"lower", t.lower}, {"upper", t.upper}, {"formulas", t.formulas}};
}

Json outcome_to_json(const SearchOutcome& out) {
    Json wit = Json::array();
    for (const auto& w : out.witnesses) wit.push_back(w.key);
    Json j = {{"quantity", out.quantity},
              {"params", out.params},
              {"value", out.value},
              {"complete", out.complete},
              {"explored", out.explored},
              {"depth_bound", out.depth_bound},
              {"witnesses", wit},
              {"assumptions", out.assumptions}};
    if (out.count) j["count"] = *out.count;
    return j;
}

Json known_check_to_json(const KnownCheck& c) {
    Json j = {{"entry", c.label},
              {"published", c.published_value},
              {"status", known_status_name(c.status)},
              {"lower", c.lower},
              {"upper", c.upper},
              {"note", c.note}};
    if (c.computed) j["computed"] = *c.computed;
    return j;
}

}  // namespace mergecalc
