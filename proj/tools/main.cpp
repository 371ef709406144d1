// Command-line front end: ingest a graph, run the pipeline stages, emit
// deterministic reports.  Exit codes: 0 ok, 2 parse error, 3 semantic error,
// 4 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "raagspace/classify.hpp"
#include "raagspace/json_io.hpp"
#include "raagspace/metric.hpp"
#include "raagspace/shear.hpp"

using namespace raagspace;

namespace {

struct RunConfig {
    std::string inputPath;
    std::string partitionSpec;
    std::string format = "text";
    std::string outPath;
    std::string metricPath;
    long cap = BlowupComplex::kDefaultRegionCap;
    double tol = 1e-9;
    int samples = 5;
    int collapseIndex = 0;
};

void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.outPath.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(cfg.outPath);
    if (!out) throw semantic_error("cannot write to " + cfg.outPath);
    out << payload;
    if (!payload.empty() && payload.back() != '\n') out << '\n';
}

DefiningGraph loadGraph(const RunConfig& cfg) {
    if (cfg.inputPath.empty()) throw parse_error("no --input file given");
    return graphFromJson(loadJsonFile(cfg.inputPath));
}

// Selector: comma-separated indices into the canonical enumeration ("0,2" or
// "Q0,Q2"), "@file.json" with an array of partition objects, or inline json.
PartitionFamily selectFamily(const DefiningGraph& g, const std::string& spec) {
    std::vector<WPartition> members;
    if (spec.empty()) return PartitionFamily(g, members);
    if (spec.front() == '@' || spec.front() == '[') {
        json j;
        if (spec.front() == '@') {
            j = loadJsonFile(spec.substr(1));
        } else {
            try {
                j = json::parse(spec);
            } catch (const std::exception& e) {
                throw parse_error(std::string("invalid inline partition json: ") + e.what());
            }
        }
        if (!j.is_array()) throw parse_error("inline partitions must be a json array");
        for (const auto& e : j) members.push_back(partitionFromJson(g, e));
        return PartitionFamily(g, std::move(members));
    }
    auto all = enumerateAllPartitions(g);
    std::stringstream ss(spec);
    std::string tok;
    std::vector<int> indices;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok.front() == 'Q') tok = tok.substr(1);
        try {
            indices.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw parse_error("bad partition selector token: " + tok);
        }
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (int i : indices) {
        if (i < 0 || i >= static_cast<int>(all.size()))
            throw semantic_error("partition index " + std::to_string(i) + " out of range (have " +
                                 std::to_string(all.size()) + ")");
        members.push_back(all[i]);
    }
    return PartitionFamily(g, std::move(members));
}

std::string countsLine(const BlowupComplex& b) {
    std::ostringstream os;
    os << "vertices=" << b.vertexCount() << " edges=" << b.edges().size()
       << " squares=" << b.cubeCountOfDim(2);
    int maxDim = 2;
    for (const auto& c : b.cubes()) maxDim = std::max(maxDim, c.dim());
    for (int d = 3; d <= maxDim; ++d) os << " cubes" << d << "=" << b.cubeCountOfDim(d);
    os << " euler=" << b.eulerCharacteristic();
    return os.str();
}

int cmdGraphInfo(const RunConfig& cfg) {
    DefiningGraph g = loadGraph(cfg);
    if (cfg.format == "json") {
        emit(cfg, graphInfoToJson(g).dump(2));
        return 0;
    }
    std::ostringstream os;
    os << "vertices=" << g.vertexCount() << " edges=" << g.edges().size() << "\n";
    for (VertexId v = 0; v < g.vertexCount(); ++v) {
        VertexRelations r = g.relations(v);
        os << g.vertexName(v) << ": link={";
        for (size_t i = 0; i < r.link.size(); ++i) os << (i ? "," : "") << g.vertexName(r.link[i]);
        os << "} ul={";
        for (size_t i = 0; i < r.ul.size(); ++i) os << (i ? "," : "") << g.vertexName(r.ul[i]);
        os << "} uf={";
        for (size_t i = 0; i < r.uf.size(); ++i) os << (i ? "," : "") << g.vertexName(r.uf[i]);
        os << "} foldClass={";
        for (size_t i = 0; i < r.foldClass.size(); ++i)
            os << (i ? "," : "") << g.vertexName(r.foldClass[i]);
        os << "} " << (r.twistDominant ? "TwistDominant" : "TwistMinimal") << "\n";
    }
    os << "twistDominant={";
    auto td = g.twistDominantSet();
    for (size_t i = 0; i < td.size(); ++i) os << (i ? "," : "") << g.vertexName(td[i]);
    os << "}\n";
    os << "totalOrder=";
    for (size_t i = 0; i < g.totalOrder().size(); ++i)
        os << (i ? "," : "") << g.vertexName(g.totalOrder()[i]);
    emit(cfg, os.str());
    return 0;
}

int cmdPartitions(const RunConfig& cfg) {
    DefiningGraph g = loadGraph(cfg);
    auto all = enumerateAllPartitions(g);
    if (cfg.format == "json") {
        emit(cfg, partitionListToJson(g, all).dump(2));
        return 0;
    }
    std::ostringstream os;
    os << "count=" << all.size() << "\n";
    auto side = [&](const std::vector<SignedVertex>& xs) {
        std::string s = "{";
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ",";
            s += g.vertexName(xs[i].v);
            s += xs[i].positive ? "" : "^-1";
        }
        return s + "}";
    };
    for (size_t i = 0; i < all.size(); ++i) {
        os << "Q" << i << ": " << side(all[i].sideA()) << " | " << side(all[i].sideB()) << " | lk "
           << side(all[i].linkSet()) << " max={";
        const auto& mx = all[i].maxSet();
        for (size_t k = 0; k < mx.size(); ++k) os << (k ? "," : "") << g.vertexName(mx[k]);
        os << "}\n";
    }
    emit(cfg, os.str());
    return 0;
}

int cmdBlowup(const RunConfig& cfg) {
    DefiningGraph g = loadGraph(cfg);
    BlowupComplex b = BlowupComplex::build(g, selectFamily(g, cfg.partitionSpec), cfg.cap);
    if (cfg.format == "json") emit(cfg, blowupToJson(b).dump(2));
    else if (cfg.format == "dot") emit(cfg, blowupToDot(b));
    else emit(cfg, countsLine(b));
    return 0;
}

int cmdCollapse(const RunConfig& cfg) {
    DefiningGraph g = loadGraph(cfg);
    BlowupComplex b = BlowupComplex::build(g, selectFamily(g, cfg.partitionSpec), cfg.cap);
    auto result = b.collapse(cfg.collapseIndex);
    BlowupComplex rebuilt = BlowupComplex::build(g, result.complex.family(), cfg.cap);
    bool iso = result.complex.isomorphicTo(rebuilt);
    if (cfg.format == "json") {
        json out;
        out["collapsed"] = blowupToJson(result.complex);
        out["vertexMap"] = result.vertexMap;
        out["isomorphicToRebuilt"] = iso;
        emit(cfg, out.dump(2));
    } else if (cfg.format == "dot") {
        emit(cfg, blowupToDot(result.complex));
    } else {
        std::ostringstream os;
        os << countsLine(result.complex) << " isomorphicToRebuilt=" << (iso ? "yes" : "no");
        emit(cfg, os.str());
    }
    return 0;
}

int cmdClassify(const RunConfig& cfg) {
    DefiningGraph g = loadGraph(cfg);
    BlowupComplex b = BlowupComplex::build(g, selectFamily(g, cfg.partitionSpec), cfg.cap);
    auto classes = classifyAll(b);
    auto check = crossCheckClassification(b);
    if (cfg.format == "json") {
        json out;
        out["classification"] = classificationToJson(b, classes);
        out["crossCheck"] = crossCheckToJson(b, check);
        emit(cfg, out.dump(2));
        return 0;
    }
    std::ostringstream os;
    for (const auto& hc : classes) {
        os << b.labelName(hc.label) << ": "
           << (hc.classification == TwistClass::TwistDominant ? "TwistDominant" : "TwistMinimal")
           << (hc.cyclic ? " cyclic" : "") << " foldClass={";
        for (size_t i = 0; i < hc.foldClass.size(); ++i)
            os << (i ? "," : "") << b.labelName(hc.foldClass[i]);
        os << "}\n";
    }
    os << "crossCheck=" << (check.allAgree ? "agree" : "MISMATCH");
    emit(cfg, os.str());
    return 0;
}

int cmdFiber(const RunConfig& cfg) {
    DefiningGraph g = loadGraph(cfg);
    BlowupComplex b = BlowupComplex::build(g, selectFamily(g, cfg.partitionSpec), cfg.cap);
    ShearSystem sys = buildShearSystem(b);
    if (cfg.format == "json") {
        emit(cfg, shearSystemToJson(b, sys).dump(2));
        return 0;
    }
    std::ostringstream os;
    os << "fiberDim=" << sys.fiberDimension << "\n";
    os << "columns=";
    for (size_t i = 0; i < sys.columns.size(); ++i)
        os << (i ? "," : "") << "(" << b.labelName(sys.columns[i].first) << ","
           << g.vertexName(sys.columns[i].second) << ")";
    os << "\nrows=";
    for (size_t i = 0; i < sys.rows.size(); ++i)
        os << (i ? "," : "") << "(" << g.vertexName(sys.rows[i].first) << ","
           << g.vertexName(sys.rows[i].second) << ")";
    os << "\n";
    for (const auto& row : sys.matrix) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
        os << "\n";
    }
    for (const auto& vec : sys.kernelBasis) {
        os << "kernel:";
        for (const auto& q : vec) os << " " << q.str();
        os << "\n";
    }
    emit(cfg, os.str());
    return 0;
}

int cmdStraighten(const RunConfig& cfg) {
    DefiningGraph g = loadGraph(cfg);
    BlowupComplex b = BlowupComplex::build(g, selectFamily(g, cfg.partitionSpec), cfg.cap);
    MetricStructure f = cfg.metricPath.empty()
                            ? MetricStructure::standard(b)
                            : metricFromJson(b, loadJsonFile(cfg.metricPath));
    auto states = straighteningPath(b, f, cfg.samples);
    json samples = json::array();
    std::ostringstream os;
    for (const auto& st : states) {
        double maxOff = 0.0, normDrift = 0.0;
        for (const auto& cg : st.grams) {
            const int n = static_cast<int>(cg.labels.size());
            for (int i = 0; i < n; ++i) {
                double w = f.width(cg.labels[i]);
                normDrift = std::max(normDrift, std::abs(std::sqrt(cg.gram.at(i, i)) - w));
                for (int j = i + 1; j < n; ++j)
                    maxOff = std::max(maxOff, std::abs(cg.gram.at(i, j)));
            }
        }
        bool allowable = checkAllowable(b, st.asMetric(b), cfg.tol).allowable;
        if (cfg.format == "json") {
            json e;
            e["t"] = st.t;
            e["maxOffDiagonal"] = maxOff;
            e["normDrift"] = normDrift;
            e["allowable"] = allowable;
            samples.push_back(e);
        } else {
            os << "t=" << st.t << " maxOffDiagonal=" << maxOff << " normDrift=" << normDrift
               << " allowable=" << (allowable ? "yes" : "no") << "\n";
        }
    }
    if (cfg.format == "json") {
        json out;
        out["metric"] = metricToJson(b, f);
        out["samples"] = samples;
        emit(cfg, out.dump(2));
    } else {
        emit(cfg, os.str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Whitehead partitions, Salvetti blowups, parallelotope metrics and fiber"
                 " dimensions for right-angled Artin groups"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto addCommon = [&](CLI::App* sub, bool partitions) {
        sub->add_option("--input", cfg.inputPath, "graph json file")->required();
        sub->add_option("--format", cfg.format, "text, json or dot")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--out", cfg.outPath, "write output to a file instead of stdout");
        sub->add_option("--cap", cfg.cap, "region enumeration cap");
        sub->add_option("--tol", cfg.tol, "numeric tolerance");
        if (partitions)
            sub->add_option("--partitions", cfg.partitionSpec,
                            "indices into the canonical enumeration (e.g. 0,2 or Q0,Q2), "
                            "@file.json, or inline json");
    };

    auto* graphInfo = app.add_subcommand("graph-info", "vertex relations and orderings");
    addCommon(graphInfo, false);
    auto* partitions = app.add_subcommand("partitions", "enumerate canonical partitions");
    addCommon(partitions, false);
    auto* blowup = app.add_subcommand("blowup", "build a blowup complex");
    addCommon(blowup, true);
    auto* collapse = app.add_subcommand("collapse", "collapse one family member");
    addCommon(collapse, true);
    collapse->add_option("--collapse", cfg.collapseIndex, "family member index to collapse");
    auto* classify = app.add_subcommand("classify", "classify hyperplanes");
    addCommon(classify, true);
    auto* fiber = app.add_subcommand("fiber", "structure equations and fiber dimension");
    addCommon(fiber, true);
    auto* straighten = app.add_subcommand("straighten", "straightening path of a metric");
    addCommon(straighten, true);
    straighten->add_option("--metric", cfg.metricPath, "metric json (default: standard structure)");
    straighten->add_option("--samples", cfg.samples, "number of path samples");

    CLI11_PARSE(app, argc, argv);

    try {
        if (graphInfo->parsed()) return cmdGraphInfo(cfg);
        if (partitions->parsed()) return cmdPartitions(cfg);
        if (blowup->parsed()) return cmdBlowup(cfg);
        if (collapse->parsed()) return cmdCollapse(cfg);
        if (classify->parsed()) return cmdClassify(cfg);
        if (fiber->parsed()) return cmdFiber(cfg);
        if (straighten->parsed()) return cmdStraighten(cfg);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const cap_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 4;
    } catch (const semantic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
