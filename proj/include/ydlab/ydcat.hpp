#pragma once

#include <utility>
#include <vector>

#include "ydlab/bimonad.hpp"

namespace ydlab {

// A fusion map realized on matrices: a bijection between finite working
// subsets of the automorphism groups of two bimonads, looked up by exact
// matrix equality.  The identity variant (for F = F') maps every matrix to
// itself.
class AutMap {
public:
    static AutMap identity();
    static AutMap table(std::vector<LinMap> source_elems, std::vector<LinMap> target_elems);

    LinMap fwd(const LinMap& a) const;  // throws GroupMismatch if a is absent
    LinMap bwd(const LinMap& b) const;
    AutMap inverted() const;
    // Composite: first *this, then next.
    AutMap then(const AutMap& next) const;
    bool is_identity() const { return identity_; }

private:
    AutMap() = default;
    bool identity_ = true;
    std::vector<LinMap> src_;
    std::vector<LinMap> dst_;
};

// A graded generalized Yetter-Drinfel'd object between bimonads
// F = source (dim n) and F' = target (dim n'), with carrier X of dim m:
//   psi: F' (x) X -> X (x) F   (m*n rows, n'*m cols)
//   phi: X (x) F -> F' (x) X   (n'*m rows, m*n cols)
// graded by (alpha in Aut(F'), beta in Aut(F)).
struct GradedYDObject {
    std::string name;
    BimonadPtr source;
    BimonadPtr target;
    int xdim = 1;
    LinMap psi;
    LinMap phi;
    LinMap alpha;
    LinMap beta;
};

// The five defining identities (two monadic, two comonadic, the twisted
// compatibility) plus validation of the grading automorphisms.
VerificationReport verify_yd(const GradedYDObject& obj);

// Endo-case constructor from a module action (act: F (x) X -> X) and a
// comodule coaction (coact: X -> F (x) X); validates the (co)module axioms
// first (throws Error(PreconditionFailed) naming the violated one) and sets
// grading (id, id).
GradedYDObject build_yd_from_action_coaction(BimonadPtr f, const std::string& name, int xdim,
                                             const LinMap& act, const LinMap& coact);

// All (alpha, beta) pairs in the pool for which the twisted compatibility
// holds for obj's psi/phi.  The distributive laws must already hold (throws
// Error(PreconditionFailed) otherwise); the grading stored on obj is ignored.
std::vector<std::pair<LinMap, LinMap>> classify_grading(
    const GradedYDObject& obj, const std::vector<std::pair<LinMap, LinMap>>& pool);

enum class TwistMode { Source, Target };

// Twisted psi.  Source mode (aut in Aut(F)):
//   psi^a = (id (x) a^-1) . psi . (j(a) (x) id);
// target mode (aut in Aut(F')):
//   psi^b = (id (x) j^-1(b^-1)) . psi . (b (x) id).
// Throws Error(GroupMismatch) when aut is not an automorphism of the
// respective bimonad.
LinMap twist_psi(const GradedYDObject& obj, TwistMode mode, const LinMap& aut, const AutMap& j);

// Composite of x: F' -> F'' over y: F -> F', with fusions j: Aut(F)->Aut(F')
// and jp: Aut(F')->Aut(F'').  Carrier X (x) Y (X's index slowest); grading is
// the transitive product of the gradings.
GradedYDObject compose_yd(const GradedYDObject& x, const GradedYDObject& y, const AutMap& j,
                          const AutMap& jp);

// A pair-group element realized on matrices: left in Aut(F'), right in Aut(F).
struct MatPair {
    LinMap left;
    LinMap right;
};

// (a,b)*(c,d) = (ac, d . j^-1(c^-1) . b . j^-1(c)) with j: Aut(F) -> Aut(F').
MatPair mat_pair_product(const MatPair& p, const MatPair& q, const AutMap& j);
MatPair mat_pair_inverse(const MatPair& p, const AutMap& j);
// Cross-index product with j: Aut(F)->Aut(F') and jp: Aut(F')->Aut(F'').
MatPair mat_transitive_product(const MatPair& p, const MatPair& q, const AutMap& j,
                               const AutMap& jp);
// a * p * a^-1 inside one pair group.
MatPair mat_conjugate_grading(const MatPair& a, const MatPair& p, const AutMap& j);
// Projection (a,b) -> ((a, j(b)), (jp^-1(a), b)); here j: Aut(F)->Aut(F') and
// jp: Aut(F')->Aut(F''), with (a,b) in Aut(F'') x Aut(F).
std::pair<MatPair, MatPair> mat_project_pi(const MatPair& p, const AutMap& j, const AutMap& jp);

// The twisting functor Phi_{(a,b)} ((a,b) in Aut(F') x Aut(F)) applied to an
// object of the hom-category F -> F'; carrier unchanged, grading conjugated.
GradedYDObject apply_phi(const MatPair& pair, const GradedYDObject& obj, const AutMap& j);

// Monoidality of the twisting functors on a composable pair x: F'->F'',
// y: F->F': Phi_{(a,b)}(x . y) = Phi_{pi1(a,b)}(x) . Phi_{pi2(a,b)}(y), with
// (a,b) in Aut(F'') x Aut(F) and the composite fusion j02 = j then jp.
VerificationReport verify_phi_monoidal(const MatPair& pair, const GradedYDObject& x,
                                       const GradedYDObject& y, const AutMap& j, const AutMap& jp);

// A 2-cell between objects of the same graded component: a map on carriers
// commuting with both psi and phi.
VerificationReport verify_morphism(const GradedYDObject& src, const GradedYDObject& dst,
                                   const LinMap& map);

// The forgetful restriction: keeps only objects graded (id, id).
std::vector<GradedYDObject> underlying_restriction(const std::vector<GradedYDObject>& objs);

// For an endo-object built from a module action and comodule coaction over
// the symmetric (flip) braiding: evaluates both displayed forms of the
// twisted compatibility — the braided form and the coaction-after-action
// form — and reports each plus whether the two agree.
VerificationReport verify_braided_ab_equivalence(const Bimonad& f, int xdim, const LinMap& act,
                                                 const LinMap& coact, const LinMap& alpha,
                                                 const LinMap& beta);

}  // namespace ydlab
