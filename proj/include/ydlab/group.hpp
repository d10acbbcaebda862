#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ydlab/report.hpp"

namespace ydlab {

// A finite group given by an explicit multiplication table over element
// indices 0..order-1.  Construction verifies associativity, the two-sided
// unit, and computes two-sided inverses.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::string name, std::vector<std::vector<int>> table, int unit);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);    // Z_n, unit 0, a*b = a+b mod n
    static FiniteGroup symmetric3();     // S_3 as permutations of {0,1,2}
    static FiniteGroup dihedral4();      // D_4, symmetries of the square

    const std::string& name() const { return name_; }
    int order() const { return order_; }
    int unit() const { return unit_; }
    int mul(int a, int b) const;
    int inv(int a) const;
    const std::vector<std::vector<int>>& table() const { return table_; }

    bool same_structure(const FiniteGroup& other) const {
        return order_ == other.order_ && unit_ == other.unit_ && table_ == other.table_;
    }

private:
    FiniteGroup() = default;
    std::string name_;
    int order_ = 1;
    int unit_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A chosen isomorphism between two finite groups.  Construction verifies
// bijectivity, unit preservation and the homomorphism law exhaustively;
// non-isomorphic inputs therefore cannot produce a FusionMap (the caller maps
// that refusal to the trivial/empty hom, ErrorKind::EmptyHom).
class FusionMap {
public:
    static FusionMap make(GroupPtr source, GroupPtr target, std::vector<int> images);
    static FusionMap identity(GroupPtr g);
    // The inner automorphism x -> g x g^-1 of `group`, as a fusion map.
    static FusionMap inner(GroupPtr group, int g);

    const GroupPtr& source() const { return source_; }
    const GroupPtr& target() const { return target_; }
    int fwd(int a) const;
    int bwd(int a) const;
    const std::vector<int>& images() const { return images_; }

    FusionMap inverted() const;
    // Composite: first apply *this, then `next` (source of `next` must match
    // target of *this).
    FusionMap then(const FusionMap& next) const;

private:
    FusionMap() = default;
    GroupPtr source_;
    GroupPtr target_;
    std::vector<int> images_;
    std::vector<int> preimages_;
};

// Element of a pair group G' x G: left component lives in G', right in G.
struct GradedPair {
    int left = 0;
    int right = 0;
    bool operator==(const GradedPair&) const = default;
};

// Product in the pair group G' x G twisted by the fusion map j: G -> G':
//   (a,b)*(c,d) = (ac, d . j^-1(c^-1) . b . j^-1(c)).
GradedPair pair_product(const GradedPair& p, const GradedPair& q, const FusionMap& j);

// Two-sided inverse for pair_product: (a,b)^-1 = (a^-1, j^-1(a) b^-1 j^-1(a^-1)).
GradedPair pair_inverse(const GradedPair& p, const FusionMap& j);

// Cross-index product (G'' x G') x (G' x G) -> G'' x G with fusions
// j: G -> G' and j': G' -> G'':  (a,b)*(c,d) = (a . j'(c), d . j^-1(c^-1 b c)).
GradedPair transitive_product(const GradedPair& p, const GradedPair& q, const FusionMap& j,
                              const FusionMap& jp);

// Projection G'' x G -> (G'' x G') x (G' x G):  (a,b) -> ((a, j(b)), (j'^-1(a), b)).
std::pair<GradedPair, GradedPair> project_pi(const GradedPair& p, const FusionMap& j,
                                             const FusionMap& jp);

// Conjugation inside one pair group: a * p * a^-1, expanded to the closed
// formula (a c a^-1, j^-1(a) b^-1 d j^-1(c^-1) b j^-1(c a^-1)) for
// a = (a,b), p = (c,d).
GradedPair conjugate_grading(const GradedPair& a, const GradedPair& p, const FusionMap& j);

// A chain of up to four groups G0 -> G1 -> G2 -> G3 with fusion maps between
// consecutive members; shorter chains are extended by repeating the last
// group with identity fusions, so all cross-index formulas are available.
class GradedGroupSystem {
public:
    GradedGroupSystem(std::string name, std::vector<GroupPtr> groups,
                      std::vector<FusionMap> fusions);

    const std::string& name() const { return name_; }
    const GroupPtr& group(int i) const { return groups_.at(i); }
    // Composite fusion G_i -> G_k for any 0 <= i, k <= 3 (identity when i == k).
    FusionMap fusion(int i, int k) const;

private:
    std::string name_;
    std::vector<GroupPtr> groups_;   // always padded to 4
    std::vector<FusionMap> fusions_; // 3 consecutive maps
};

// Checks the transitive-system axioms on the chain: associativity of the
// transitive product, unit laws, conjugation compatibility, coassociativity
// and counitality of the projections, and the antipode rule.  Exhaustive when
// every group has order <= 12; otherwise >= 1000 seeded samples per axiom.
VerificationReport verify_system_axioms(const GradedGroupSystem& sys, unsigned long seed);

}  // namespace ydlab
