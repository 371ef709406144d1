#include "raagspace/metric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace raagspace {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::string pairName(const BlowupComplex& b, Label x, Label y) {
    return b.labelName(x) + "," + b.labelName(y);
}

std::vector<VertexId> sortedUl(const DefiningGraph& g, VertexId v) {
    auto u = g.ul(v);
    std::sort(u.begin(), u.end());
    return u;
}

bool inSorted(const std::vector<VertexId>& xs, VertexId v) {
    return std::binary_search(xs.begin(), xs.end(), v);
}

} // namespace

bool twistRelated(const BlowupComplex& b, Label a, Label c) {
    VertexId x = b.labelRep(a);
    VertexId y = b.labelRep(c);
    return b.graph().leqT(x, y) || b.graph().leqT(y, x);
}

std::pair<Label, Label> MetricStructure::key(Label a, Label b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

MetricStructure MetricStructure::standard(const BlowupComplex& b) {
    MetricStructure m;
    auto ls = b.labels();
    for (Label l : ls) m.widths_[l] = 1.0;
    for (size_t i = 0; i < ls.size(); ++i)
        for (size_t j = i + 1; j < ls.size(); ++j)
            if (b.labelsCommute(ls[i], ls[j]) && twistRelated(b, ls[i], ls[j]))
                m.angles_[key(ls[i], ls[j])] = kPi / 2;
    return m;
}

MetricStructure MetricStructure::rectilinear(const BlowupComplex& b,
                                             const std::map<Label, double>& widths) {
    MetricStructure m = standard(b);
    for (const auto& [l, w] : widths) m.setWidth(l, w);
    return m;
}

double MetricStructure::width(Label l) const {
    auto it = widths_.find(l);
    if (it == widths_.end()) throw semantic_error("missing width for a label");
    return it->second;
}

void MetricStructure::setWidth(Label l, double w) {
    if (!(w > 0.0)) throw semantic_error("widths must be positive");
    widths_[l] = w;
}

double MetricStructure::angle(Label a, Label b) const {
    auto it = angles_.find(key(a, b));
    if (it == angles_.end()) throw semantic_error("missing twist angle for a label pair");
    return it->second;
}

bool MetricStructure::hasAngle(Label a, Label b) const { return angles_.count(key(a, b)) != 0; }

void MetricStructure::setAngle(Label a, Label b, double radians) {
    if (!(radians > 0.0) || !(radians < kPi))
        throw semantic_error("twist angles must lie strictly between 0 and pi");
    angles_[key(a, b)] = radians;
}

CubeGram completeGram(const BlowupComplex& b, const MetricStructure& f,
                      const std::vector<Label>& labelsIn) {
    std::vector<Label> labels = labelsIn;
    std::sort(labels.begin(), labels.end());
    const int n = static_cast<int>(labels.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!b.labelsCommute(labels[i], labels[j]))
                throw semantic_error("gram completion needs pairwise commuting labels");

    std::vector<VertexId> rep(n);
    std::vector<std::vector<VertexId>> ul(n);
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) {
        rep[i] = b.labelRep(labels[i]);
        ul[i] = sortedUl(b.graph(), rep[i]);
        w[i] = f.width(labels[i]);
    }

    Matrix g(n, n);
    std::vector<char> done(static_cast<size_t>(n) * n, 0);
    std::function<double(int, int)> val = [&](int i, int j) -> double {
        if (i > j) std::swap(i, j);
        if (done[static_cast<size_t>(i) * n + j]) return g.at(i, j);
        double out;
        if (i == j) {
            out = w[i] * w[i];
        } else if (twistRelated(b, labels[i], labels[j])) {
            if (!f.hasAngle(labels[i], labels[j]))
                throw semantic_error("missing angle between " + pairName(b, labels[i], labels[j]));
            out = w[i] * w[j] * std::cos(f.angle(labels[i], labels[j]));
        } else {
            std::vector<int> span;
            for (int k = 0; k < n; ++k)
                if (k != i && k != j && inSorted(ul[i], rep[k]) && inSorted(ul[j], rep[k]))
                    span.push_back(k);
            if (span.empty()) {
                out = 0.0;
            } else {
                const int m = static_cast<int>(span.size());
                Matrix gs(m, m);
                std::vector<double> u(m), z(m);
                for (int p = 0; p < m; ++p) {
                    u[p] = val(i, span[p]);
                    z[p] = val(j, span[p]);
                    for (int q = 0; q < m; ++q) gs.at(p, q) = val(span[p], span[q]);
                }
                std::vector<double> c = solveSpd(gs, u);
                out = dot(c, z);
            }
        }
        g.at(i, j) = g.at(j, i) = out;
        done[static_cast<size_t>(i) * n + j] = 1;
        return out;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) val(i, j);

    if (!cholesky(g, 1e-12))
        throw semantic_error("completed Gram matrix is not positive definite (degenerate parallelotope)");
    return {CubeRef{n, -1}, labels, g};
}

CubeGram completeGram(const BlowupComplex& b, const MetricStructure& f, CubeRef cube) {
    std::vector<Label> labels;
    if (cube.dim == 1) labels.push_back(b.edges().at(cube.index).label);
    else labels = b.cubes().at(cube.index).labels;
    CubeGram out = completeGram(b, f, labels);
    out.cube = cube;
    return out;
}

std::vector<CubeRef> maximalCells(const BlowupComplex& b) {
    std::vector<bool> edgeFace(b.edges().size(), false);
    std::vector<bool> cubeFace(b.cubes().size(), false);
    for (int c = 0; c < static_cast<int>(b.cubes().size()); ++c) {
        for (int d = 0; d < b.cubes()[c].dim(); ++d) {
            for (int side = 0; side < 2; ++side) {
                CubeRef f = b.cubeFacet(c, d, side);
                if (f.dim == 1) edgeFace[f.index] = true;
                else cubeFace[f.index] = true;
            }
        }
    }
    std::vector<CubeRef> out;
    for (int c = 0; c < static_cast<int>(b.cubes().size()); ++c)
        if (!cubeFace[c]) out.push_back({b.cubes()[c].dim(), c});
    for (int e = 0; e < static_cast<int>(b.edges().size()); ++e)
        if (!edgeFace[e]) out.push_back({1, e});
    std::sort(out.begin(), out.end(), [](const CubeRef& x, const CubeRef& y) {
        if (x.dim != y.dim) return x.dim > y.dim;
        return x.index < y.index;
    });
    return out;
}

Matrix realizeEdges(const Matrix& gram, double pivotTol) {
    auto l = cholesky(gram, pivotTol);
    if (!l) throw semantic_error("Gram matrix is not positive definite within tolerance");
    return transpose(*l);  // columns are edge vectors
}

namespace {

// orthogonal projection of column x onto the span of the given columns of e
std::vector<double> projectOnto(const Matrix& e, const std::vector<int>& span,
                                const std::vector<double>& x) {
    const int m = static_cast<int>(span.size());
    std::vector<double> out(x.size(), 0.0);
    if (m == 0) return out;
    Matrix gs(m, m);
    std::vector<double> rhs(m);
    for (int p = 0; p < m; ++p) {
        auto cp = e.column(span[p]);
        rhs[p] = dot(cp, x);
        for (int q = p; q < m; ++q) {
            double v = dot(cp, e.column(span[q]));
            gs.at(p, q) = gs.at(q, p) = v;
        }
    }
    std::vector<double> c = solveSpd(gs, rhs);
    for (int p = 0; p < m; ++p) {
        auto cp = e.column(span[p]);
        for (size_t r = 0; r < out.size(); ++r) out[r] += c[p] * cp[r];
    }
    return out;
}

} // namespace

std::vector<std::string> orthogonalityViolations(const BlowupComplex& b,
                                                 const std::vector<Label>& labels,
                                                 const Matrix& gram, double tol) {
    std::vector<std::string> out;
    const int n = static_cast<int>(labels.size());
    Matrix e;
    try {
        e = realizeEdges(gram);
    } catch (const semantic_error& err) {
        out.push_back(std::string(err.what()) + " on cube {" +
                      [&] {
                          std::string s;
                          for (Label l : labels) s += (s.empty() ? "" : " ") + b.labelName(l);
                          return s;
                      }() + "}");
        return out;
    }
    std::vector<VertexId> rep(n);
    std::vector<std::vector<VertexId>> ul(n);
    for (int i = 0; i < n; ++i) {
        rep[i] = b.labelRep(labels[i]);
        ul[i] = sortedUl(b.graph(), rep[i]);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (twistRelated(b, labels[i], labels[j])) continue;
            std::vector<int> shared;
            for (int k = 0; k < n; ++k)
                if (k != i && k != j && inSorted(ul[i], rep[k]) && inSorted(ul[j], rep[k]))
                    shared.push_back(k);
            auto residuals = [&](int base) {
                std::vector<std::vector<double>> rs;
                for (int k = 0; k < n; ++k) {
                    if (!(k == base || inSorted(ul[base], rep[k]))) continue;
                    auto col = e.column(k);
                    auto p = projectOnto(e, shared, col);
                    for (size_t r = 0; r < col.size(); ++r) col[r] -= p[r];
                    rs.push_back(std::move(col));
                }
                return rs;
            };
            for (const auto& u : residuals(i))
                for (const auto& v : residuals(j))
                    if (std::abs(dot(u, v)) > tol) {
                        std::ostringstream msg;
                        msg << "orthogonality fails for pair (" << pairName(b, labels[i], labels[j])
                            << "), residual inner product " << std::abs(dot(u, v));
                        out.push_back(msg.str());
                    }
        }
    }
    return out;
}

AllowabilityReport checkAllowable(const BlowupComplex& b, const MetricStructure& f, double tol) {
    AllowabilityReport report;
    auto addViolation = [&](const std::string& s) { report.violations.push_back(s); };

    // every occurring label needs a width
    for (const auto& h : b.hyperplanes())
        if (!f.hasWidth(h.label)) addViolation("missing width for label " + b.labelName(h.label));
    if (!report.violations.empty()) {
        report.allowable = false;
        return report;
    }

    // angle coherence along twist-dominant maxima
    for (const auto& [pair, theta] : f.angles()) {
        for (auto [a, other] : {std::make_pair(pair.first, pair.second),
                                std::make_pair(pair.second, pair.first)}) {
            Label vertexOfA = Label::vertexLabel(b.labelRep(a));
            if (a == vertexOfA) continue;
            if (b.labelMax(a).size() != 1 || !b.graph().twistDominant(b.labelRep(a))) continue;
            if (!f.hasAngle(vertexOfA, other)) {
                addViolation("missing companion angle (" + pairName(b, vertexOfA, other) + ")");
                continue;
            }
            if (std::abs(theta - f.angle(vertexOfA, other)) > tol)
                addViolation("angle (" + pairName(b, a, other) + ") disagrees with (" +
                             pairName(b, vertexOfA, other) + ") along a twist-dominant axis");
        }
    }

    // per-cell realization and orthogonality; face agreement across cells
    std::map<std::pair<Label, Label>, double> seenPair;
    for (CubeRef cell : maximalCells(b)) {
        if (cell.dim < 1) continue;
        CubeGram cg;
        try {
            cg = completeGram(b, f, cell);
        } catch (const semantic_error& err) {
            addViolation(err.what());
            continue;
        }
        auto viol = orthogonalityViolations(b, cg.labels, cg.gram, tol);
        report.violations.insert(report.violations.end(), viol.begin(), viol.end());
        const int n = static_cast<int>(cg.labels.size());
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                auto key = cg.labels[i] < cg.labels[j]
                               ? std::make_pair(cg.labels[i], cg.labels[j])
                               : std::make_pair(cg.labels[j], cg.labels[i]);
                auto [it, inserted] = seenPair.insert({key, cg.gram.at(i, j)});
                if (!inserted && std::abs(it->second - cg.gram.at(i, j)) > tol)
                    addViolation("faces disagree on pair (" + pairName(b, key.first, key.second) + ")");
            }
        }
    }
    report.allowable = report.violations.empty();
    return report;
}

MetricStructure rotate(const BlowupComplex& b, const MetricStructure& f, Label a, VertexId w,
                       double newAngle) {
    const DefiningGraph& g = b.graph();
    VertexId v = b.labelRep(a);
    {
        auto u = g.ul(v);
        if (std::find(u.begin(), u.end(), w) == u.end())
            throw semantic_error("rotation direction " + g.vertexName(w) + " is not in UL(max " +
                                 b.labelName(a) + ")");
    }
    if (!(newAngle > 0.0) || !(newAngle < kPi)) throw semantic_error("degenerate rotation angle");

    std::vector<Label> targets;
    if (g.twistDominant(v)) {
        // comparable rotations for every hyperplane with the same maximum
        for (const auto& h : b.hyperplanes())
            if (b.labelMax(h.label) == std::vector<VertexId>{v}) targets.push_back(h.label);
    } else {
        targets.push_back(a);
    }
    std::vector<Label> splitters;
    for (const auto& h : b.hyperplanes())
        if (b.labelSplits(h.label, w)) splitters.push_back(h.label);

    MetricStructure out = f;
    for (Label t : targets)
        for (Label s : splitters) out.setAngle(t, s, newAngle);
    auto report = checkAllowable(b, out);
    if (!report.allowable)
        throw semantic_error("rotation yields a non-allowable structure: " + report.violations.front());
    return out;
}

Matrix straighteningBasis(const BlowupComplex& b, const std::vector<Label>& labels,
                          const Matrix& edges) {
    const int n = static_cast<int>(labels.size());
    std::vector<VertexId> rep(n);
    std::vector<std::vector<VertexId>> ul(n);
    for (int i = 0; i < n; ++i) {
        rep[i] = b.labelRep(labels[i]);
        ul[i] = sortedUl(b.graph(), rep[i]);
    }
    Matrix basis(edges.rows, n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> later;
        for (int k = 0; k < n; ++k)
            if (k != i && inSorted(ul[i], rep[k]) && b.labelPrec(labels[i], labels[k]))
                later.push_back(k);
        auto col = edges.column(i);
        auto p = projectOnto(edges, later, col);
        for (size_t r = 0; r < col.size(); ++r) col[r] -= p[r];
        double len = norm(col);
        if (!(len > 1e-12)) throw semantic_error("degenerate edge system while straightening");
        for (int r = 0; r < edges.rows; ++r) basis.at(r, i) = col[r] / len;
    }
    return basis;
}

StraighteningState straighten(const BlowupComplex& b, const MetricStructure& f, double t) {
    if (t < 0.0 || t > 1.0) throw semantic_error("straightening parameter must lie in [0,1]");
    auto pre = checkAllowable(b, f);
    if (!pre.allowable)
        throw semantic_error("cannot straighten a non-allowable structure: " + pre.violations.front());

    StraighteningState state;
    state.base = f;
    state.t = t;
    for (CubeRef cell : maximalCells(b)) {
        if (cell.dim < 1) continue;
        CubeGram cg = completeGram(b, f, cell);
        const int n = static_cast<int>(cg.labels.size());
        Matrix e = realizeEdges(cg.gram);
        Matrix basis = straighteningBasis(b, cg.labels, e);
        std::vector<VertexId> rep(n);
        std::vector<std::vector<VertexId>> ul(n);
        for (int i = 0; i < n; ++i) {
            rep[i] = b.labelRep(cg.labels[i]);
            ul[i] = sortedUl(b.graph(), rep[i]);
        }
        Matrix et(e.rows, n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> later;
            for (int k = 0; k < n; ++k)
                if (k != i && inSorted(ul[i], rep[k]) && b.labelPrec(cg.labels[i], cg.labels[k]))
                    later.push_back(k);
            // coordinates of e_i in the frame {b_k : k in later} + {b_i}
            const int m = static_cast<int>(later.size());
            Matrix frame(e.rows, m + 1);
            for (int p = 0; p < m; ++p)
                for (int r = 0; r < e.rows; ++r) frame.at(r, p) = basis.at(r, later[p]);
            for (int r = 0; r < e.rows; ++r) frame.at(r, m) = basis.at(r, i);
            Matrix gs(m + 1, m + 1);
            std::vector<double> rhs(m + 1);
            auto ei = e.column(i);
            for (int p = 0; p <= m; ++p) {
                rhs[p] = dot(frame.column(p), ei);
                for (int q = p; q <= m; ++q) {
                    double v = dot(frame.column(p), frame.column(q));
                    gs.at(p, q) = gs.at(q, p) = v;
                }
            }
            std::vector<double> c = solveSpd(gs, rhs);
            std::vector<double> interp(e.rows, 0.0);
            for (int r = 0; r < e.rows; ++r) {
                interp[r] = c[m] * basis.at(r, i);
                for (int p = 0; p < m; ++p) interp[r] += t * c[p] * basis.at(r, later[p]);
            }
            double scale = norm(ei) / norm(interp);
            for (int r = 0; r < e.rows; ++r) et.at(r, i) = scale * interp[r];
        }
        Matrix gt = matmul(transpose(et), et);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double avg = 0.5 * (gt.at(i, j) + gt.at(j, i));
                gt.at(i, j) = gt.at(j, i) = avg;
            }
        state.grams.push_back({cell, cg.labels, gt});
    }
    return state;
}

MetricStructure StraighteningState::asMetric(const BlowupComplex& b) const {
    MetricStructure m;
    for (const auto& [l, w] : base.widths()) m.setWidth(l, w);
    std::map<std::pair<Label, Label>, double> cosines;
    for (const auto& cg : grams) {
        const int n = static_cast<int>(cg.labels.size());
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (!twistRelated(b, cg.labels[i], cg.labels[j])) continue;
                double c = cg.gram.at(i, j) /
                           (base.width(cg.labels[i]) * base.width(cg.labels[j]));
                auto key = cg.labels[i] < cg.labels[j]
                               ? std::make_pair(cg.labels[i], cg.labels[j])
                               : std::make_pair(cg.labels[j], cg.labels[i]);
                auto [it, inserted] = cosines.insert({key, c});
                if (!inserted && std::abs(it->second - c) > 1e-9)
                    throw semantic_error("inconsistent straightening across shared faces");
            }
        }
    }
    for (const auto& [key, c] : cosines) {
        double clamped = std::min(1.0 - 1e-15, std::max(-1.0 + 1e-15, c));
        m.setAngle(key.first, key.second, std::acos(clamped));
    }
    return m;
}

std::vector<StraighteningState> straighteningPath(const BlowupComplex& b,
                                                  const MetricStructure& f, int samples) {
    if (samples < 2) throw semantic_error("a straightening path needs at least two samples");
    std::vector<StraighteningState> out;
    for (int i = 0; i < samples; ++i)
        out.push_back(straighten(b, f, static_cast<double>(i) / (samples - 1)));
    return out;
}

} // namespace raagspace
