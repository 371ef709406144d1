#include "raagspace/shear.hpp"

#include <algorithm>
#include <cmath>

namespace raagspace {

std::vector<Label> twistMinimalHyperplanes(const BlowupComplex& b) {
    std::vector<Label> out;
    for (const auto& hc : classifyAll(b))
        if (hc.classification == TwistClass::TwistMinimal) out.push_back(hc.label);
    std::sort(out.begin(), out.end(), [&](Label x, Label y) { return b.labelPrec(x, y); });
    return out;
}

std::map<Label, int> shearSpaceDims(const BlowupComplex& b) {
    std::map<Label, int> out;
    for (Label l : twistMinimalHyperplanes(b))
        out[l] = static_cast<int>(b.graph().ul(b.labelRep(l)).size());
    return out;
}

namespace {

// reduced row echelon form over the rationals; returns pivot column list
std::vector<int> rref(std::vector<std::vector<Rational>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m.front().size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].isZero()) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        Rational inv = Rational(1) / m[r][c];
        for (int j = 0; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].isZero()) continue;
            Rational f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

ShearSystem buildShearSystem(const BlowupComplex& b) {
    const DefiningGraph& g = b.graph();
    ShearSystem sys;
    std::vector<Label> hmin = twistMinimalHyperplanes(b);
    for (Label h : hmin)
        for (VertexId w : g.ul(b.labelRep(h))) sys.columns.push_back({h, w});

    std::vector<VertexId> vmin;
    for (VertexId v : g.totalOrder())
        if (!g.twistDominant(v)) vmin.push_back(v);
    for (VertexId v : vmin)
        for (VertexId w : g.ul(v)) sys.rows.push_back({v, w});

    sys.matrix.assign(sys.rows.size(), std::vector<int>(sys.columns.size(), 0));
    for (size_t r = 0; r < sys.rows.size(); ++r)
        for (size_t c = 0; c < sys.columns.size(); ++c)
            if (sys.columns[c].second == sys.rows[r].second &&
                b.labelSplits(sys.columns[c].first, sys.rows[r].first))
                sys.matrix[r][c] = 1;

    const int cols = static_cast<int>(sys.columns.size());
    std::vector<std::vector<Rational>> work;
    for (const auto& row : sys.matrix) {
        std::vector<Rational> qrow(cols);
        for (int c = 0; c < cols; ++c) qrow[c] = Rational(row[c]);
        work.push_back(std::move(qrow));
    }
    std::vector<int> pivots = rref(work);
    sys.rank = static_cast<int>(pivots.size());
    sys.fiberDimension = cols - sys.rank;

    std::vector<bool> isPivot(cols, false);
    for (int c : pivots) isPivot[c] = true;
    for (int freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        std::vector<Rational> vec(cols, Rational(0));
        vec[freeCol] = Rational(1);
        for (size_t p = 0; p < pivots.size(); ++p) vec[pivots[p]] = -work[p][freeCol];
        sys.kernelBasis.push_back(std::move(vec));
    }
    return sys;
}

int fiberDimension(const BlowupComplex& b) { return buildShearSystem(b).fiberDimension; }

ShearDecomposition decomposeShear(const BlowupComplex& b, VertexId v, Label a,
                                  const std::map<VertexId, double>& shear) {
    const DefiningGraph& g = b.graph();
    bool below = false;
    for (VertexId m : b.labelMax(a))
        if (g.leqF(v, m)) { below = true; break; }
    if (!below)
        throw semantic_error(g.vertexName(v) + " is not below max(" + b.labelName(a) +
                             ") in the fold order");
    auto ulA = g.ul(b.labelRep(a));
    auto ulV = g.ul(v);
    auto ufV = g.uf(v);
    ShearDecomposition out;
    for (const auto& [w, value] : shear) {
        if (std::find(ulA.begin(), ulA.end(), w) == ulA.end())
            throw semantic_error("shear coordinate " + g.vertexName(w) + " is not in UL(max " +
                                 b.labelName(a) + ")");
        if (std::find(ulV.begin(), ulV.end(), w) != ulV.end()) out.ulPart[w] = value;
        else if (std::find(ufV.begin(), ufV.end(), w) != ufV.end()) out.ufPart[w] = value;
        else
            throw semantic_error("shear coordinate " + g.vertexName(w) +
                                 " escapes UL(v) and UF(v) (invariant violation)");
    }
    return out;
}

bool isZeroSum(const BlowupComplex& b, const ShearAssignment& shear, double tol) {
    const DefiningGraph& g = b.graph();
    std::vector<Label> hmin = twistMinimalHyperplanes(b);
    for (const auto& [label, coords] : shear.byLabel) {
        if (std::find(hmin.begin(), hmin.end(), label) == hmin.end())
            throw semantic_error("shear assigned to a label that is not twist-minimal: " +
                                 b.labelName(label));
        auto ul = g.ul(b.labelRep(label));
        for (const auto& [w, value] : coords) {
            (void)value;
            if (std::find(ul.begin(), ul.end(), w) == ul.end())
                throw semantic_error("shear coordinate " + g.vertexName(w) + " is not in UL(max " +
                                     b.labelName(label) + ")");
        }
    }
    for (VertexId v : g.totalOrder()) {
        if (g.twistDominant(v)) continue;
        for (VertexId w : g.ul(v)) {
            double sum = 0.0;
            for (Label h : hmin) {
                if (!b.labelSplits(h, v)) continue;
                auto it = shear.byLabel.find(h);
                if (it == shear.byLabel.end()) continue;
                auto jt = it->second.find(w);
                if (jt != it->second.end()) sum += jt->second;
            }
            if (std::abs(sum) > tol) return false;
        }
    }
    return true;
}

} // namespace raagspace
