#ifndef RAAGSPACE_METRIC_HPP
#define RAAGSPACE_METRIC_HPP

#include <map>
#include <string>
#include <vector>

#include "raagspace/blowup.hpp"
#include "raagspace/linalg.hpp"

namespace raagspace {

/// max(A) <=_t max(B) or the other way around, through representatives.
bool twistRelated(const BlowupComplex& b, Label a, Label c);

/*
 * An allowable parallelotope structure, stored by its generating data: one
 * positive width per label and one angle in (0, pi) per commuting
 * twist-related label pair.  Everything else about the metric -- the full
 * Gram matrix of any cube -- is derived, never stored.
 */
class MetricStructure {
public:
    /// Widths 1 and right angles everywhere.
    static MetricStructure standard(const BlowupComplex& b);
    /// Right angles with prescribed widths.
    static MetricStructure rectilinear(const BlowupComplex& b, const std::map<Label, double>& widths);

    double width(Label l) const;
    bool hasWidth(Label l) const { return widths_.count(l) != 0; }
    void setWidth(Label l, double w);

    double angle(Label a, Label b) const;
    bool hasAngle(Label a, Label b) const;
    void setAngle(Label a, Label b, double radians);

    const std::map<Label, double>& widths() const { return widths_; }
    const std::map<std::pair<Label, Label>, double>& angles() const { return angles_; }

private:
    static std::pair<Label, Label> key(Label a, Label b);
    std::map<Label, double> widths_;
    std::map<std::pair<Label, Label>, double> angles_;
};

struct CubeGram {
    CubeRef cube;
    std::vector<Label> labels;
    Matrix gram;  // symmetric, diagonal = squared widths
};

/// Inner products of the edge vectors of a cube: twist-related pairs come
/// straight from the stored angles, the rest from projecting onto the span
/// of the common upper-link directions (a right angle when that span is
/// trivial).  Throws on missing data or a non-positive-definite result.
CubeGram completeGram(const BlowupComplex& b, const MetricStructure& f,
                      const std::vector<Label>& labels);
CubeGram completeGram(const BlowupComplex& b, const MetricStructure& f, CubeRef cube);

/// Cells not properly contained in a larger cell, largest first.
std::vector<CubeRef> maximalCells(const BlowupComplex& b);

/// Edge-vector realization E with E^T E = gram (columns are edges).
Matrix realizeEdges(const Matrix& gram, double pivotTol = 1e-12);

/// Orthogonality violations of one cube against an explicit Gram matrix:
/// for every non-twist-related pair the parts of the two upper-star spans
/// orthogonal to the shared span must be orthogonal to each other.
std::vector<std::string> orthogonalityViolations(const BlowupComplex& b,
                                                 const std::vector<Label>& labels,
                                                 const Matrix& gram, double tol);

struct AllowabilityReport {
    bool allowable = true;
    std::vector<std::string> violations;
};

/// Full allowability check: every maximal cell realizes with the required
/// orthogonality, shared faces agree, and angles along a twist-dominant axis
/// coincide with the generator's.  Violations are reported, not thrown.
AllowabilityReport checkAllowable(const BlowupComplex& b, const MetricStructure& f,
                                  double tol = 1e-9);

/// Rotate the hyperplane of label a toward w in UL(max a): every label
/// splitting w now meets a at newAngle.  When max(a) is a twist-dominant
/// vertex the same rotation is applied to every label with that maximum.
/// Widths never change.  Throws on an illegal direction or a degenerate result.
MetricStructure rotate(const BlowupComplex& b, const MetricStructure& f, Label a,
                       VertexId w, double newAngle);

/// Orthonormal straightening frame of one cube: column i is the unit normal
/// of the span of the later upper-star edges inside its extension by edge i.
Matrix straighteningBasis(const BlowupComplex& b, const std::vector<Label>& labels,
                          const Matrix& edges);

/*
 * One point on the straightening path: per maximal cell, the Gram matrix of
 * the interpolated edge vectors.  Norms are preserved in t, t = 1 is the
 * base structure and t = 0 an orthotope.
 */
struct StraighteningState {
    MetricStructure base;
    double t = 1.0;
    std::vector<CubeGram> grams;  // one per maximal cell, in maximalCells order

    /// Re-expressed as a metric structure (widths of the base, angles read
    /// off the interpolated Grams).
    MetricStructure asMetric(const BlowupComplex& b) const;
};

StraighteningState straighten(const BlowupComplex& b, const MetricStructure& f, double t);
std::vector<StraighteningState> straighteningPath(const BlowupComplex& b,
                                                  const MetricStructure& f, int samples);

} // namespace raagspace

#endif
