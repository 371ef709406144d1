#ifndef RAAGSPACE_CLASSIFY_HPP
#define RAAGSPACE_CLASSIFY_HPP

#include <vector>

#include "raagspace/blowup.hpp"

namespace raagspace {

enum class TwistClass { TwistDominant, TwistMinimal };

struct HyperplaneClass {
    Label label;
    std::vector<Label> linkSet;    // hyperplanes meeting this one
    std::vector<Label> foldClass;  // hyperplanes with the same link, self included
    bool cyclic = false;
    TwistClass classification = TwistClass::TwistMinimal;
};

/// Hyperplanes crossing the one labeled l, read off the cubes of the complex.
std::vector<Label> hyperplaneLink(const BlowupComplex& b, Label l);

/// Labels whose hyperplane has the same link as l's.
std::vector<Label> hyperplaneFoldClass(const BlowupComplex& b, Label l);

/*
 * A hyperplane is cyclic when the union of the carriers over its fold class
 * is a product of the hyperplane with a polygon boundary.  The finite test:
 * the dual edges of the class tile into disjoint simple cycles, one per dual
 * edge of the hyperplane, each crossing every class member once, and cells
 * of the carrier union transport along the cycles.
 */
bool isCyclic(const BlowupComplex& b, Label l);

/// Twist-dominant when cyclic and some other hyperplane K has
/// lk(K) u [K] contained in lk(l) u [l]; twist-minimal otherwise.
TwistClass classifyHyperplane(const BlowupComplex& b, Label l);

std::vector<HyperplaneClass> classifyAll(const BlowupComplex& b);

/// Independent criterion on labels: some A in a different fold class with
/// max(A) <=_t max(B).
TwistClass labelBasedClass(const BlowupComplex& b, Label l);

struct CrossCheckEntry {
    Label label;
    TwistClass combinatorial = TwistClass::TwistMinimal;
    TwistClass labelBased = TwistClass::TwistMinimal;
    bool agree = true;
};

struct CrossCheckReport {
    std::vector<CrossCheckEntry> rows;
    bool allAgree = true;
};

/// Per-hyperplane comparison of the two classification routes.
CrossCheckReport crossCheckClassification(const BlowupComplex& b);

} // namespace raagspace

#endif
