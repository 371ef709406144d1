#ifndef RAAGSPACE_SHEAR_HPP
#define RAAGSPACE_SHEAR_HPP

#include <map>
#include <vector>

#include "raagspace/blowup.hpp"
#include "raagspace/classify.hpp"
#include "raagspace/rational.hpp"

namespace raagspace {

/*
 * A shear assignment gives each twist-minimal hyperplane a displacement
 * vector indexed by the upper-link directions of its maximum.  Hyperplanes
 * with twist-dominant maxima carry no shear and must be omitted.
 */
struct ShearAssignment {
    std::map<Label, std::map<VertexId, double>> byLabel;
};

/*
 * The structure equations: one linear constraint per pair (twist-minimal
 * vertex v, direction w in UL(v)), summing the w-coordinates of the shears
 * of all twist-minimal hyperplanes splitting v.  The kernel of the matrix
 * parametrizes the fiber of the forgetful projection from marked skewed
 * complexes to outer space.
 */
struct ShearSystem {
    std::vector<std::pair<Label, VertexId>> columns;    // (hyperplane, direction)
    std::vector<std::pair<VertexId, VertexId>> rows;    // (vertex, direction)
    std::vector<std::vector<int>> matrix;               // entries in {0,1}
    int rank = 0;
    int fiberDimension = 0;
    std::vector<std::vector<Rational>> kernelBasis;     // exact, one vector per basis element
};

/// Labels whose hyperplane is twist-minimal, in the label precedence order.
std::vector<Label> twistMinimalHyperplanes(const BlowupComplex& b);

/// Ambient shear dimension |UL(max H)| per twist-minimal hyperplane.
std::map<Label, int> shearSpaceDims(const BlowupComplex& b);

ShearSystem buildShearSystem(const BlowupComplex& b);

int fiberDimension(const BlowupComplex& b);

/// Split a shear vector on H_A into its UL(v) and UF(v) parts as seen from
/// a vertex v below max(A) in the fold order.
struct ShearDecomposition {
    std::map<VertexId, double> ulPart;  // constrained part
    std::map<VertexId, double> ufPart;  // unconstrained part
};
ShearDecomposition decomposeShear(const BlowupComplex& b, VertexId v, Label a,
                                  const std::map<VertexId, double>& shear);

/// Does a concrete assignment satisfy every structure equation (within tol)?
bool isZeroSum(const BlowupComplex& b, const ShearAssignment& shear, double tol = 1e-9);

} // namespace raagspace

#endif
