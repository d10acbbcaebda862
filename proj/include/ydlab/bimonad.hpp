#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ydlab/report.hpp"

namespace ydlab {

// A finite-dimensional bialgebra with a mixed distributive-law map lambda,
// given by structure constants.  `lambda` is the neutral member of the
// lambda-family; other members are derived from it and an automorphism.
struct Bimonad {
    std::string name;
    int dim = 1;
    LinMap mult;     // n^2 -> n
    LinMap unit;     // 1 -> n
    LinMap comult;   // n -> n^2
    LinMap counit;   // n -> 1
    LinMap lambda;   // n^2 -> n^2
    std::optional<LinMap> antipode;  // n -> n

    Bimonad(std::string name_, int dim_, LinMap mult_, LinMap unit_, LinMap comult_,
            LinMap counit_, LinMap lambda_, std::optional<LinMap> antipode_ = std::nullopt);

    LinMap id() const { return LinMap::identity(dim); }

    // Member of the lambda-family attached to an automorphism a:
    // lambda_a = (a (x) id) . lambda . (id (x) a^-1).
    LinMap lambda_for(const LinMap& a) const;
};

using BimonadPtr = std::shared_ptr<const Bimonad>;

// All bialgebra axioms, the lambda compatibilities, both distributive laws
// for (F, lambda), and (when present) the antipode law.
VerificationReport verify_bimonad(const Bimonad& b);

// lambda_a = (mult (x) id) . (a (x) flip) . (comult (x) id), the canonical
// choice when the base category is braided (flip is the Vec braiding).
LinMap braided_lambda(const Bimonad& b, const LinMap& alpha);

// lambda_a = (mult (x) id) . (a (x) tau) . (comult (x) id) for a general
// interchange tau; checks first that (F, tau) satisfies both distributive
// laws (throws Error(PreconditionFailed) otherwise).
LinMap lambda_from_tau(const Bimonad& b, const LinMap& tau, const LinMap& alpha);

// Checks that m is invertible, an algebra map, a coalgebra map, and
// lambda-compatible: (m^-1 (x) id) . lambda . (m (x) id) =
// (id (x) m) . lambda . (id (x) m^-1).
VerificationReport verify_zero_automorphism(const Bimonad& b, const LinMap& m);

struct ZeroAutomorphism {
    LinMap map;
    LinMap inverse;
};

// Closure of gens and their inverses under composition, deduplicated by exact
// equality.  Every generator must pass verify_zero_automorphism.  Throws
// Error(ClosureTooLarge) past `cap` elements.
std::vector<ZeroAutomorphism> group_closure(const Bimonad& b, const std::vector<LinMap>& gens,
                                            size_t cap = 10000);

// A finite working subset of the automorphism group together with the
// attached lambda-family members.
struct LambdaFamily {
    const Bimonad* owner = nullptr;
    std::vector<LinMap> automorphisms;
    std::vector<LinMap> lambdas;  // parallel to automorphisms

    const LinMap& lambda_of(const LinMap& aut) const;  // throws GroupMismatch if absent
    bool contains(const LinMap& aut) const;
};

// Builds the family over the given automorphisms with lambda_a derived from
// b.lambda; the set must contain the identity.
LambdaFamily build_lambda_family(const Bimonad& b, const std::vector<LinMap>& auts);

// The family-coherence identities relating lambda_a, lambda_b, lambda_{ab}
// and slid factors, checked for every applicable pair in the working set.
// The set must be closed under the products the identities mention.
VerificationReport verify_lambda_consequences(const Bimonad& b, const LambdaFamily& fam);

}  // namespace ydlab
