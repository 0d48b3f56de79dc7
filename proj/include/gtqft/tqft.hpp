#pragma once

#include "gtqft/finite_group.hpp"
#include "gtqft/hom_enum.hpp"
#include "gtqft/presentation.hpp"
#include "gtqft/rational.hpp"

#include <string>
#include <vector>

namespace gtqft {

/// A based cospan of presentations X -> M <- Y: the computational stand-in
/// for a homotopy cobordism from slice X to slice Y through spacetime M.
/// Both legs must be injective on objects with disjoint images in M.
struct Cospan {
  PresentationPtr left;  // X
  PresentationPtr right; // Y
  PresentationPtr apex;  // M
  PresentationMap in_left;  // X -> M
  PresentationMap in_right; // Y -> M
  std::string label;
};

std::vector<std::string> validate(const Cospan& c);

/// Cylinder cospan on PX: M doubles the objects, copies the generators and
/// relations at level 0 and adds one free rung per object from level 0 to
/// level 1. The right leg conjugates every generator through its rungs.
Cospan identity_cospan(PresentationPtr px);

/// Pushout composition along the shared boundary (c1.right must equal
/// c2.left structurally). Throws BoundaryMismatchError otherwise, and
/// InvariantViolationError if the glueing merges left- and right-boundary
/// images, which signals an invalid input cospan.
Cospan compose(const Cospan& c1, const Cospan& c2);

/// Componentwise disjoint union.
Cospan tensor(const Cospan& c1, const Cospan& c2);

/// Same cospan with one extra free basepoint on the apex at object `at`.
Cospan with_extra_basepoint(const Cospan& c, int at, const std::string& label);

/// Counting matrix over raw hom bases: entry (g, f) is the number of homs h
/// of the apex restricting to f on the left leg and to g on the right leg.
struct RawMatrix {
  std::vector<GroupoidHom> col_basis; // homs of X
  std::vector<GroupoidHom> row_basis; // homs of Y
  RationalMatrix entries;
};

RawMatrix raw_counting_matrix(const Cospan& c, const FiniteGroup& G, const EnumOptions& opts = {});

/// Raw matrix scaled by |G|^-(#objects(M) - #objects(X)). Invariant under
/// adding basepoints to the apex.
RawMatrix normalized_counting_matrix(const Cospan& c, const FiniteGroup& G,
                                     const EnumOptions& opts = {});

/// The functor's matrix on natural-transformation class bases: entry
/// ([g], [f]) scales the count of apex homs restricting exactly to the
/// canonical representative of [f] on the left and landing in [g] (up to
/// natural isomorphism) on the right.
struct ClassMatrix {
  std::vector<NatClass> col_basis; // classes of X
  std::vector<NatClass> row_basis; // classes of Y
  RationalMatrix entries;
};

ClassMatrix class_matrix(const Cospan& c, const FiniteGroup& G, const EnumOptions& opts = {});

/// State-space basis assigned to a single presentation: its hom classes.
struct ObjectSpace {
  std::vector<NatClass> basis;
  int dimension() const { return static_cast<int>(basis.size()); }
};

ObjectSpace object_space(const GroupoidPresentation& p, const FiniteGroup& G,
                         const EnumOptions& opts = {});

} // namespace gtqft
