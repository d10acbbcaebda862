#pragma once

#include "ydlab/ydcat.hpp"

namespace ydlab {

// A convolution-invertible algebra map f: F' -> k, stored as a 1 x n' row.
struct Character {
    BimonadPtr owner;
    LinMap row;
    LinMap conv_inverse;
};

// A coalgebra map g: k -> F' (grouplike element), stored as an n' x 1 column,
// convolution-invertible.
struct GrouplikeElement {
    BimonadPtr owner;
    LinMap col;
    LinMap conv_inverse;
};

// Validates the algebra-map laws (f.mult = f (x) f, f.unit = 1) and computes
// the convolution inverse; cross-checks f^-1 = f.S when an antipode exists.
// Throws Error(PreconditionFailed) on an invalid candidate.
Character make_character(BimonadPtr owner, const LinMap& row);

// Validates the coalgebra-map laws (comult.g = g (x) g, counit.g = 1) and
// computes the convolution inverse; cross-checks g^-1 = S.g.
GrouplikeElement make_grouplike(BimonadPtr owner, const LinMap& col);

// Convolution u * v = post . (u (x) v) . pre over b, where pre is comult on
// each n-dimensional domain leg (identity on trivial legs) and post is mult
// on each n-dimensional codomain leg.  Legs must be n or 1 dimensional.
LinMap convolution(const Bimonad& b, const LinMap& u, const LinMap& v);

// The convolution unit of the given shape: unit.counit, counit, or unit.
LinMap convolution_unit(const Bimonad& b, int cod, int dom);

// Exact solve of u * x = unit; verifies x * u = unit as well.  Throws
// Error(NotInvertible) when no two-sided inverse exists.
LinMap convolution_inverse(const Bimonad& b, const LinMap& u);

// A pair in involution (f, g) over F' corresponding to the component
// (alpha, beta), with fusion j: Aut(F) -> Aut(F') and beta~ = j(beta).
struct InvolutionPair {
    BimonadPtr source;  // F
    BimonadPtr target;  // F'
    Character f;
    GrouplikeElement g;
    LinMap alpha;   // in Aut(F')
    LinMap beta;    // in Aut(F)
    AutMap fusion;  // Aut(F) -> Aut(F')

    LinMap beta_tilde() const { return fusion.fwd(beta); }
    // Rank-one convolution factors g^-1 f and g f^-1 as maps F' -> F'.
    LinMap ginv_f() const { return compose(g.conv_inverse, f.row); }
    LinMap g_finv() const { return compose(g.col, f.conv_inverse); }
};

// Verifies the defining condition in all three equivalent displayed forms:
// alpha = g^-1 f * beta~ * g f^-1;  alpha * g^-1 f = g^-1 f * beta~;
// g f^-1 * alpha = beta~ * g f^-1.
VerificationReport check_involution_pair(const InvolutionPair& p);

// The two helper identities relating the decorated lambda'_{beta~} to
// lambda'-family members of convolution products, for lambda' of tau-induced
// form; adds a note when that form cannot be certified.
VerificationReport lambda_helper_identities(const InvolutionPair& p, const LinMap& tau);

// The category isomorphism of a verified pair: sends an object of component
// (alpha, beta) to one of component (id, id); carrier unchanged.
GradedYDObject iso_forward(const InvolutionPair& p, const GradedYDObject& obj);

// Inverse direction: (id, id) component to (alpha, beta).
GradedYDObject iso_backward(const InvolutionPair& p, const GradedYDObject& obj);

// Builds a graded object from braiding-like data tau_fx: F (x) X -> X (x) F
// and tau_xf: X (x) F -> F (x) X and a verified pair; checks the inverse law,
// the hexagon, and the three naturality conditions first, throwing
// Error(PreconditionFailed) naming the first violated one.  The result is
// verified at grading (alpha, beta).
GradedYDObject yd_from_tau_pair(const InvolutionPair& p, const LinMap& tau_fx,
                                const LinMap& tau_xf, int xdim, const std::string& name);

}  // namespace ydlab
