#pragma once

#include "gtqft/presentation.hpp"
#include "gtqft/tqft.hpp"

namespace gtqft {

/// One object with n free loops x1..xn (punctured-disk / wedge boundary).
PresentationPtr free_loops(int n, const std::string& object_id = "o");

/// One object, one free loop.
PresentationPtr circle();

/// One object, two free loops.
PresentationPtr figure_eight();

/// The empty presentation.
PresentationPtr empty_presentation();

/// Merger cospan: two circles flowing into one. Its class matrix counts
/// conjugating elements carrying the product of the two inputs onto the
/// output class.
Cospan pair_of_pants();

/// Two tubes merging into one inside a solid cylinder, boundaries taken as
/// complements: the left boundary is a twice-punctured disk plus two free
/// basepoints, the right a punctured disk plus one. The class matrix is
/// |G| times the indicator of [g1] = [f1 f2].
Cospan three_strand_tube();

/// Cylinder on n free loops with the left leg twisted by the braid
/// automorphism s_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
Cospan artin_braid_generator(int n, int i, bool inverse = false);

enum class LoopKind { band, permutation };

/// Cylinder twisted by loop-braid automorphisms: band s_i: x_i -> x_{i+1},
/// x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}; permutation r_i swaps x_i, x_{i+1}.
Cospan loop_braid_generator(int n, int i, LoopKind kind, bool inverse = false);

/// Free-group automorphism underlying a braid generator, as a map on the
/// n-loop wedge (exposed for word-level relation checks).
PresentationMap artin_automorphism(PresentationPtr wedge, int i, bool inverse = false);
PresentationMap loop_braid_automorphism(PresentationPtr wedge, int i, LoopKind kind,
                                        bool inverse = false);

} // namespace gtqft
