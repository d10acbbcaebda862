#pragma once

#include "ydlab/involution.hpp"

namespace ydlab {

// The ground field itself as a one-dimensional bimonad.
BimonadPtr preset_trivial();

// The four-dimensional Hopf algebra on basis {1, g, x, gx} with g grouplike,
// g^2 = 1, x skew-primitive (comult x = x (x) 1 + g (x) x), x^2 = 0,
// xg = -gx; antipode S(x) = -gx; lambda is the flip-braided interchange.
BimonadPtr preset_sweedler();

// The group algebra of the two-element group on basis {1, t}, t^2 = 1,
// t grouplike; antipode is the identity; lambda flip-braided.
BimonadPtr preset_cyclic2();

// The bimonad automorphism diag(1, 1, c, c) of the Sweedler algebra (c != 0).
LinMap sweedler_phi(const Scalar& c);

// The grouplike basis element g as a column.
LinMap sweedler_grouplike_g();

// Endo-object with carrier k: action by counit, coaction by unit.
GradedYDObject unit_object(BimonadPtr b, const std::string& name);

// Endo-object on the Sweedler algebra: adjoint action h.x = h1 x S(h2) with
// the regular coaction comult; graded (id, id).
GradedYDObject sweedler_adjoint_object(BimonadPtr h4);

// Endo-object on the cyclic-2 algebra: trivial (counit) action with the
// regular coaction comult; graded (id, id).
GradedYDObject cyclic2_crossed_object(BimonadPtr qz2);

// The pair (counit, unit) in involution for the component (a, a).
InvolutionPair pair_counit_unit(BimonadPtr b, const LinMap& a);

// The Sweedler pair (counit, g) in involution for the component
// (S^2, id) = (phi(-1), id).
InvolutionPair sweedler_pair_counit_g(BimonadPtr h4);

}  // namespace ydlab
