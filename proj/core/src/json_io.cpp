#include "raagspace/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace raagspace {

namespace {

std::vector<SignedVertex> signedListFromJson(const DefiningGraph& g, const json& j,
                                             const char* what) {
    if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
    std::vector<SignedVertex> out;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() || !entry[1].is_string())
            throw parse_error(std::string(what) + " entries must be [name, sign] pairs");
        std::string sign = entry[1].get<std::string>();
        if (sign != "+" && sign != "-")
            throw parse_error(std::string(what) + " sign must be \"+\" or \"-\"");
        out.push_back({g.vertexId(entry[0].get<std::string>()), sign == "+"});
    }
    return out;
}

json signedListToJson(const DefiningGraph& g, const std::vector<SignedVertex>& xs) {
    json out = json::array();
    for (SignedVertex s : xs)
        out.push_back(json::array({g.vertexName(s.v), s.positive ? "+" : "-"}));
    return out;
}

json vertexNames(const DefiningGraph& g, const std::vector<VertexId>& vs) {
    json out = json::array();
    for (VertexId v : vs) out.push_back(g.vertexName(v));
    return out;
}

} // namespace

DefiningGraph graphFromJson(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw parse_error("graph json needs a \"vertices\" array");
    std::vector<std::string> names;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw parse_error("vertex names must be strings");
        names.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw parse_error("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw parse_error("edges must be [name, name] pairs");
            edges.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
        }
    }
    return DefiningGraph(std::move(names), edges);
}

json graphToJson(const DefiningGraph& g) {
    json j;
    j["vertices"] = g.vertexNames();
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back(json::array({g.vertexName(a), g.vertexName(b)}));
    j["edges"] = edges;
    return j;
}

json graphInfoToJson(const DefiningGraph& g) {
    json j = graphToJson(g);
    json rel = json::array();
    for (VertexId v = 0; v < g.vertexCount(); ++v) {
        VertexRelations r = g.relations(v);
        json e;
        e["vertex"] = g.vertexName(v);
        e["link"] = vertexNames(g, r.link);
        e["star"] = vertexNames(g, r.star);
        e["leqF"] = vertexNames(g, r.leqF);
        e["leqT"] = vertexNames(g, r.leqT);
        e["foldClass"] = vertexNames(g, r.foldClass);
        e["ul"] = vertexNames(g, r.ul);
        e["uf"] = vertexNames(g, r.uf);
        e["twistDominant"] = r.twistDominant;
        rel.push_back(e);
    }
    j["relations"] = rel;
    j["twistDominant"] = vertexNames(g, g.twistDominantSet());
    j["totalOrder"] = vertexNames(g, g.totalOrder());
    return j;
}

WPartition partitionFromJson(const DefiningGraph& g, const json& j) {
    if (!j.is_object() || !j.contains("sideA") || !j.contains("sideB"))
        throw parse_error("partition json needs \"sideA\" and \"sideB\"");
    auto a = signedListFromJson(g, j["sideA"], "sideA");
    auto b = signedListFromJson(g, j["sideB"], "sideB");
    return WPartition::fromSides(g, std::move(a), std::move(b));
}

json partitionToJson(const DefiningGraph& g, const WPartition& p) {
    json j;
    j["sideA"] = signedListToJson(g, p.sideA());
    j["sideB"] = signedListToJson(g, p.sideB());
    j["link"] = signedListToJson(g, p.linkSet());
    return j;
}

json partitionListToJson(const DefiningGraph& g, const std::vector<WPartition>& ps) {
    json list = json::array();
    for (size_t i = 0; i < ps.size(); ++i) {
        json e = partitionToJson(g, ps[i]);
        e["index"] = "Q" + std::to_string(i);
        e["sing"] = vertexNames(g, ps[i].sing());
        e["max"] = vertexNames(g, ps[i].maxSet());
        list.push_back(e);
    }
    json compat = json::array(), comm = json::array();
    for (size_t i = 0; i < ps.size(); ++i) {
        json crow = json::array(), mrow = json::array();
        for (size_t j = 0; j < ps.size(); ++j) {
            crow.push_back(compatible(g, ps[i], ps[j]));
            mrow.push_back(i != j && commute(g, ps[i], ps[j]));
        }
        compat.push_back(crow);
        comm.push_back(mrow);
    }
    json out;
    out["count"] = ps.size();
    out["partitions"] = list;
    out["compatible"] = compat;
    out["commute"] = comm;
    return out;
}

MetricStructure metricFromJson(const BlowupComplex& b, const json& j) {
    if (!j.is_object() || !j.contains("widths") || !j["widths"].is_object())
        throw parse_error("metric json needs a \"widths\" object");
    MetricStructure m;
    for (const auto& [name, value] : j["widths"].items()) {
        if (!value.is_number()) throw parse_error("widths must be numbers");
        m.setWidth(b.labelFromName(name), value.get<double>());
    }
    if (j.contains("angles")) {
        if (!j["angles"].is_array()) throw parse_error("\"angles\" must be an array");
        for (const auto& e : j["angles"]) {
            if (!e.is_object() || !e.contains("a") || !e.contains("b") || !e.contains("radians") ||
                !e["radians"].is_number())
                throw parse_error("angle entries need \"a\", \"b\" and numeric \"radians\"");
            m.setAngle(b.labelFromName(e["a"].get<std::string>()),
                       b.labelFromName(e["b"].get<std::string>()), e["radians"].get<double>());
        }
    }
    return m;
}

json metricToJson(const BlowupComplex& b, const MetricStructure& f) {
    json widths = json::object();
    for (const auto& [l, w] : f.widths()) widths[b.labelName(l)] = w;
    json angles = json::array();
    for (const auto& [pair, theta] : f.angles()) {
        json e;
        e["a"] = b.labelName(pair.first);
        e["b"] = b.labelName(pair.second);
        e["radians"] = theta;
        angles.push_back(e);
    }
    json out;
    out["widths"] = widths;
    out["angles"] = angles;
    return out;
}

json blowupToJson(const BlowupComplex& b) {
    const DefiningGraph& g = b.graph();
    json out;
    out["graph"] = graphToJson(g);
    json family = json::array();
    for (const auto& p : b.family().members()) family.push_back(partitionToJson(g, p));
    out["family"] = family;

    json vertices = json::array();
    for (const auto& r : b.regions()) {
        json sides = json::object();
        for (size_t i = 0; i < r.sides.size(); ++i)
            sides["Q" + std::to_string(i)] = r.sides[i] == 0 ? "A" : "B";
        vertices.push_back(json{{"sides", sides}});
    }
    out["vertices"] = vertices;

    json edges = json::array();
    for (const auto& e : b.edges()) {
        json je;
        je["from"] = e.from;
        je["to"] = e.to;
        je["label"] = b.labelName(e.label);
        je["oriented"] = e.oriented;
        edges.push_back(je);
    }
    out["edges"] = edges;

    json cubes = json::array();
    for (const auto& c : b.cubes()) {
        json jc;
        json labels = json::array();
        for (Label l : c.labels) labels.push_back(b.labelName(l));
        jc["labels"] = labels;
        jc["corners"] = c.corners;
        cubes.push_back(jc);
    }
    out["cubes"] = cubes;

    json counts;
    counts["vertices"] = b.vertexCount();
    counts["edges"] = b.edges().size();
    int maxDim = 1;
    for (const auto& c : b.cubes()) maxDim = std::max(maxDim, c.dim());
    for (int d = 2; d <= maxDim; ++d)
        counts["cubes" + std::to_string(d)] = b.cubeCountOfDim(d);
    out["counts"] = counts;
    out["euler"] = b.eulerCharacteristic();
    return out;
}

std::string blowupToDot(const BlowupComplex& b) {
    std::ostringstream os;
    os << "digraph blowup {\n";
    os << "  node [shape=circle, fontsize=10];\n";
    for (int v = 0; v < b.vertexCount(); ++v) os << "  " << v << " [label=\"R" << v << "\"];\n";
    for (const auto& e : b.edges()) {
        const bool isVertexLabel = e.label.isVertex();
        os << "  " << e.from << " -> " << e.to << " [label=\"" << b.labelName(e.label) << "\", color=\""
           << (isVertexLabel ? "black" : "blue") << "\"";
        if (!e.oriented) os << ", dir=none";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

json classificationToJson(const BlowupComplex& b, const std::vector<HyperplaneClass>& classes) {
    json out = json::array();
    for (const auto& hc : classes) {
        json e;
        e["label"] = b.labelName(hc.label);
        e["class"] = hc.classification == TwistClass::TwistDominant ? "TwistDominant" : "TwistMinimal";
        json fold = json::array();
        for (Label l : hc.foldClass) fold.push_back(b.labelName(l));
        e["foldClass"] = fold;
        json link = json::array();
        for (Label l : hc.linkSet) link.push_back(b.labelName(l));
        e["link"] = link;
        e["cyclic"] = hc.cyclic;
        out.push_back(e);
    }
    return out;
}

json crossCheckToJson(const BlowupComplex& b, const CrossCheckReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json e;
        e["label"] = b.labelName(row.label);
        e["combinatorial"] =
            row.combinatorial == TwistClass::TwistDominant ? "TwistDominant" : "TwistMinimal";
        e["labelBased"] = row.labelBased == TwistClass::TwistDominant ? "TwistDominant" : "TwistMinimal";
        e["agree"] = row.agree;
        rows.push_back(e);
    }
    json out;
    out["rows"] = rows;
    out["allAgree"] = report.allAgree;
    return out;
}

json shearSystemToJson(const BlowupComplex& b, const ShearSystem& sys) {
    const DefiningGraph& g = b.graph();
    json out;
    json cols = json::array();
    for (auto [h, w] : sys.columns) cols.push_back(json::array({b.labelName(h), g.vertexName(w)}));
    out["columns"] = cols;
    json rows = json::array();
    for (auto [v, w] : sys.rows) rows.push_back(json::array({g.vertexName(v), g.vertexName(w)}));
    out["rows"] = rows;
    out["matrix"] = sys.matrix;
    out["fiberDim"] = sys.fiberDimension;
    json basis = json::array();
    for (const auto& vec : sys.kernelBasis) {
        json row = json::array();
        for (const Rational& q : vec) {
            if (q.den == 1) row.push_back(q.num);
            else row.push_back(q.toDouble());
        }
        basis.push_back(row);
    }
    out["kernelBasis"] = basis;
    return out;
}

json loadJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw parse_error("invalid json in " + path + ": " + e.what());
    }
    return j;
}

} // namespace raagspace
