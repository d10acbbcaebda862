#include "ydlab/group.hpp"

#include <array>
#include <random>

namespace ydlab {

namespace {

// Composition index table for a list of permutations (apply b first, then a).
std::vector<std::vector<int>> permutation_table(const std::vector<std::array<int, 4>>& perms,
                                                int points) {
    auto find = [&](const std::array<int, 4>& p) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        throw Error(ErrorKind::IntegrityError, "permutation set not closed");
    };
    std::vector<std::vector<int>> table(perms.size(), std::vector<int>(perms.size()));
    for (size_t a = 0; a < perms.size(); ++a)
        for (size_t b = 0; b < perms.size(); ++b) {
            std::array<int, 4> c{0, 1, 2, 3};
            for (int i = 0; i < points; ++i) c[i] = perms[a][perms[b][i]];
            table[a][b] = find(c);
        }
    return table;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::vector<int>> table,
                                    int unit) {
    FiniteGroup g;
    g.name_ = std::move(name);
    g.order_ = static_cast<int>(table.size());
    g.unit_ = unit;
    g.table_ = std::move(table);
    if (g.order_ < 1) throw Error(ErrorKind::MalformedInput, "group table must be non-empty");
    if (unit < 0 || unit >= g.order_)
        throw Error(ErrorKind::MalformedInput, "unit index out of range");
    for (const auto& row : g.table_) {
        if (static_cast<int>(row.size()) != g.order_)
            throw Error(ErrorKind::MalformedInput, "group table must be square");
        for (int v : row)
            if (v < 0 || v >= g.order_)
                throw Error(ErrorKind::MalformedInput, "group table entry out of range");
    }
    for (int a = 0; a < g.order_; ++a)
        if (g.table_[g.unit_][a] != a || g.table_[a][g.unit_] != a)
            throw Error(ErrorKind::MalformedInput,
                        "unit law fails at element " + std::to_string(a) + " of group " + g.name_);
    for (int a = 0; a < g.order_; ++a)
        for (int b = 0; b < g.order_; ++b)
            for (int c = 0; c < g.order_; ++c)
                if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]])
                    throw Error(ErrorKind::MalformedInput,
                                "associativity fails at (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + ") of group " +
                                    g.name_);
    g.inverse_.assign(g.order_, -1);
    for (int a = 0; a < g.order_; ++a) {
        for (int b = 0; b < g.order_; ++b)
            if (g.table_[a][b] == g.unit_ && g.table_[b][a] == g.unit_) {
                g.inverse_[a] = b;
                break;
            }
        if (g.inverse_[a] < 0)
            throw Error(ErrorKind::MalformedInput,
                        "element " + std::to_string(a) + " of group " + g.name_ +
                            " has no two-sided inverse");
    }
    return g;
}

FiniteGroup FiniteGroup::trivial() { return from_table("1", {{0}}, 0); }

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw Error(ErrorKind::MalformedInput, "cyclic group order must be positive");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return from_table("Z" + std::to_string(n), std::move(table), 0);
}

FiniteGroup FiniteGroup::symmetric3() {
    // All permutations of {0,1,2}; index 0 is the identity.
    std::vector<std::array<int, 4>> perms = {{0, 1, 2, 3}, {1, 2, 0, 3}, {2, 0, 1, 3},
                                             {0, 2, 1, 3}, {2, 1, 0, 3}, {1, 0, 2, 3}};
    return from_table("S3", permutation_table(perms, 3), 0);
}

FiniteGroup FiniteGroup::dihedral4() {
    // Rotations r^k: i -> i+k mod 4, followed by the four reflections
    // s r^k with s: i -> -i mod 4.
    std::vector<std::array<int, 4>> perms;
    for (int k = 0; k < 4; ++k) perms.push_back({k % 4, (1 + k) % 4, (2 + k) % 4, (3 + k) % 4});
    for (int k = 0; k < 4; ++k)
        perms.push_back({(4 - k) % 4, (4 - k + 3) % 4, (4 - k + 2) % 4, (4 - k + 1) % 4});
    return from_table("D4", permutation_table(perms, 4), 0);
}

int FiniteGroup::mul(int a, int b) const {
    if (a < 0 || a >= order_ || b < 0 || b >= order_)
        throw Error(ErrorKind::GroupMismatch, "element index out of range in group " + name_);
    return table_[a][b];
}

int FiniteGroup::inv(int a) const {
    if (a < 0 || a >= order_)
        throw Error(ErrorKind::GroupMismatch, "element index out of range in group " + name_);
    return inverse_[a];
}

FusionMap FusionMap::make(GroupPtr source, GroupPtr target, std::vector<int> images) {
    if (!source || !target) throw Error(ErrorKind::MalformedInput, "fusion map needs both groups");
    if (source->order() != target->order() ||
        static_cast<int>(images.size()) != source->order())
        throw Error(ErrorKind::EmptyHom, "groups " + source->name() + " and " + target->name() +
                                             " admit no isomorphism of the given shape");
    FusionMap j;
    j.source_ = std::move(source);
    j.target_ = std::move(target);
    j.images_ = std::move(images);
    j.preimages_.assign(j.images_.size(), -1);
    for (size_t a = 0; a < j.images_.size(); ++a) {
        int v = j.images_[a];
        if (v < 0 || v >= j.target_->order() || j.preimages_[v] != -1)
            throw Error(ErrorKind::EmptyHom, "fusion map images are not a bijection");
        j.preimages_[v] = static_cast<int>(a);
    }
    if (j.images_[j.source_->unit()] != j.target_->unit())
        throw Error(ErrorKind::EmptyHom, "fusion map does not preserve the unit");
    for (int a = 0; a < j.source_->order(); ++a)
        for (int b = 0; b < j.source_->order(); ++b)
            if (j.images_[j.source_->mul(a, b)] != j.target_->mul(j.images_[a], j.images_[b]))
                throw Error(ErrorKind::EmptyHom,
                            "fusion map is not a homomorphism at (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
    return j;
}

FusionMap FusionMap::identity(GroupPtr g) {
    std::vector<int> images(g->order());
    for (int a = 0; a < g->order(); ++a) images[a] = a;
    return make(g, g, std::move(images));
}

FusionMap FusionMap::inner(GroupPtr group, int g) {
    std::vector<int> images(group->order());
    for (int a = 0; a < group->order(); ++a)
        images[a] = group->mul(group->mul(g, a), group->inv(g));
    return make(group, group, std::move(images));
}

int FusionMap::fwd(int a) const {
    if (a < 0 || a >= static_cast<int>(images_.size()))
        throw Error(ErrorKind::GroupMismatch, "fusion map argument out of range");
    return images_[a];
}

int FusionMap::bwd(int a) const {
    if (a < 0 || a >= static_cast<int>(preimages_.size()))
        throw Error(ErrorKind::GroupMismatch, "fusion map argument out of range");
    return preimages_[a];
}

FusionMap FusionMap::inverted() const {
    FusionMap j;
    j.source_ = target_;
    j.target_ = source_;
    j.images_ = preimages_;
    j.preimages_ = images_;
    return j;
}

FusionMap FusionMap::then(const FusionMap& next) const {
    if (!target_->same_structure(*next.source_))
        throw Error(ErrorKind::GroupMismatch, "fusion maps are not composable");
    std::vector<int> images(images_.size());
    for (size_t a = 0; a < images_.size(); ++a) images[a] = next.images_[images_[a]];
    FusionMap j;
    j.source_ = source_;
    j.target_ = next.target_;
    j.images_ = std::move(images);
    j.preimages_.assign(j.images_.size(), -1);
    for (size_t a = 0; a < j.images_.size(); ++a) j.preimages_[j.images_[a]] = static_cast<int>(a);
    return j;
}

GradedPair pair_product(const GradedPair& p, const GradedPair& q, const FusionMap& j) {
    const FiniteGroup& gp = *j.target();  // G'
    const FiniteGroup& g = *j.source();   // G
    int left = gp.mul(p.left, q.left);
    int conj = g.mul(g.mul(j.bwd(gp.inv(q.left)), p.right), j.bwd(q.left));
    int right = g.mul(q.right, conj);
    return {left, right};
}

GradedPair pair_inverse(const GradedPair& p, const FusionMap& j) {
    const FiniteGroup& gp = *j.target();
    const FiniteGroup& g = *j.source();
    int left = gp.inv(p.left);
    int right = g.mul(g.mul(j.bwd(p.left), g.inv(p.right)), j.bwd(gp.inv(p.left)));
    return {left, right};
}

GradedPair transitive_product(const GradedPair& p, const GradedPair& q, const FusionMap& j,
                              const FusionMap& jp) {
    if (!j.target()->same_structure(*jp.source()))
        throw Error(ErrorKind::GroupMismatch, "transitive product: middle groups do not match");
    const FiniteGroup& gm = *jp.source();   // G'
    const FiniteGroup& gtop = *jp.target(); // G''
    const FiniteGroup& g = *j.source();     // G
    int left = gtop.mul(p.left, jp.fwd(q.left));
    int mid = gm.mul(gm.mul(gm.inv(q.left), p.right), q.left);
    int right = g.mul(q.right, j.bwd(mid));
    return {left, right};
}

std::pair<GradedPair, GradedPair> project_pi(const GradedPair& p, const FusionMap& j,
                                             const FusionMap& jp) {
    GradedPair first{p.left, j.fwd(p.right)};
    GradedPair second{jp.bwd(p.left), p.right};
    return {first, second};
}

GradedPair conjugate_grading(const GradedPair& a, const GradedPair& p, const FusionMap& j) {
    const FiniteGroup& gp = *j.target();
    const FiniteGroup& g = *j.source();
    int left = gp.mul(gp.mul(a.left, p.left), gp.inv(a.left));
    int right = g.mul(j.bwd(a.left),
                      g.mul(g.inv(a.right),
                            g.mul(p.right,
                                  g.mul(j.bwd(gp.inv(p.left)),
                                        g.mul(a.right,
                                              j.bwd(gp.mul(p.left, gp.inv(a.left))))))));
    return {left, right};
}

GradedGroupSystem::GradedGroupSystem(std::string name, std::vector<GroupPtr> groups,
                                     std::vector<FusionMap> fusions)
    : name_(std::move(name)), groups_(std::move(groups)), fusions_(std::move(fusions)) {
    if (groups_.empty() || groups_.size() > 4)
        throw Error(ErrorKind::MalformedInput, "a system needs between 1 and 4 groups");
    if (fusions_.size() + 1 != groups_.size())
        throw Error(ErrorKind::MalformedInput, "a chain of k groups needs k-1 fusion maps");
    for (size_t i = 0; i < fusions_.size(); ++i)
        if (!fusions_[i].source()->same_structure(*groups_[i]) ||
            !fusions_[i].target()->same_structure(*groups_[i + 1]))
            throw Error(ErrorKind::GroupMismatch,
                        "fusion map " + std::to_string(i) + " does not connect the chain");
    while (groups_.size() < 4) {
        fusions_.push_back(FusionMap::identity(groups_.back()));
        groups_.push_back(groups_.back());
    }
}

FusionMap GradedGroupSystem::fusion(int i, int k) const {
    if (i < 0 || i > 3 || k < 0 || k > 3)
        throw Error(ErrorKind::GroupMismatch, "chain index out of range");
    if (i == k) return FusionMap::identity(groups_[i]);
    if (i < k) {
        FusionMap j = fusions_[i];
        for (int t = i + 1; t < k; ++t) j = j.then(fusions_[t]);
        return j;
    }
    return fusion(k, i).inverted();
}

namespace {

// Uniformly samples pair-group elements; exhausts the full product space when
// `exhaustive` is set.
struct PairSpace {
    int left_order;
    int right_order;
    long size() const { return static_cast<long>(left_order) * right_order; }
    GradedPair unpack(long flat) const {
        return {static_cast<int>(flat / right_order), static_cast<int>(flat % right_order)};
    }
};

std::string pair_str(const GradedPair& p) {
    return "(" + std::to_string(p.left) + "," + std::to_string(p.right) + ")";
}

}  // namespace

VerificationReport verify_system_axioms(const GradedGroupSystem& sys, unsigned long seed) {
    VerificationReport rep;
    rep.subject = "group-system " + sys.name();
    rep.seed = seed;

    const FiniteGroup& g0 = *sys.group(0);
    const FiniteGroup& g1 = *sys.group(1);
    const FiniteGroup& g2 = *sys.group(2);
    const FiniteGroup& g3 = *sys.group(3);
    for (int i = 0; i < 4; ++i)
        if (sys.group(i)->order() > 24)
            throw Error(ErrorKind::ClosureTooLarge, "group order above 24 is not supported");

    bool exhaustive = true;
    for (int i = 0; i < 4; ++i) exhaustive = exhaustive && sys.group(i)->order() <= 12;

    // All cross-index fusions, computed once (construction re-verifies the
    // homomorphism law, so it must stay out of the sampling loops).
    std::vector<std::vector<FusionMap>> fus_table;
    for (int i = 0; i < 4; ++i) {
        std::vector<FusionMap> row;
        for (int k = 0; k < 4; ++k) row.push_back(sys.fusion(i, k));
        fus_table.push_back(std::move(row));
    }
    auto fus = [&](int i, int k) -> const FusionMap& { return fus_table[i][k]; };

    std::mt19937_64 rng(seed);
    const long samples = 1000;
    rep.note(exhaustive ? "mode: exhaustive" : "mode: sampled (1000 per axiom)");

    // Iterates over tuples of pair-group elements, exhaustively or sampled.
    auto for_tuples = [&](const std::vector<PairSpace>& spaces, auto&& body) {
        std::vector<GradedPair> tuple(spaces.size());
        if (exhaustive) {
            long total = 1;
            for (const auto& s : spaces) total *= s.size();
            for (long flat = 0; flat < total; ++flat) {
                long rest = flat;
                for (size_t i = 0; i < spaces.size(); ++i) {
                    tuple[i] = spaces[i].unpack(rest % spaces[i].size());
                    rest /= spaces[i].size();
                }
                if (!body(tuple)) return;
            }
        } else {
            for (long s = 0; s < samples; ++s) {
                for (size_t i = 0; i < spaces.size(); ++i)
                    tuple[i] = spaces[i].unpack(
                        static_cast<long>(rng() % static_cast<unsigned long>(spaces[i].size())));
                if (!body(tuple)) return;
            }
        }
    };

    auto check_tuples = [&](const std::string& label, const std::vector<PairSpace>& spaces,
                            auto&& predicate) {
        bool ok = true;
        std::string witness;
        for_tuples(spaces, [&](const std::vector<GradedPair>& t) {
            if (!predicate(t)) {
                ok = false;
                witness = "at";
                for (const auto& p : t) witness += " " + pair_str(p);
                return false;
            }
            return true;
        });
        rep.require(label, ok, witness);
    };

    PairSpace s10{g1.order(), g0.order()};
    PairSpace s21{g2.order(), g1.order()};
    PairSpace s32{g3.order(), g2.order()};
    PairSpace s20{g2.order(), g0.order()};
    PairSpace s30{g3.order(), g0.order()};

    // Associativity of the transitive product along the chain.
    check_tuples("transitive-associativity", {s32, s21, s10}, [&](const auto& t) {
        const GradedPair &p = t[0], &q = t[1], &r = t[2];
        GradedPair pq = transitive_product(p, q, fus(1, 2), fus(2, 3));
        GradedPair left = transitive_product(pq, r, fus(0, 1), fus(1, 3));
        GradedPair qr = transitive_product(q, r, fus(0, 1), fus(1, 2));
        GradedPair right = transitive_product(p, qr, fus(0, 2), fus(2, 3));
        return left == right;
    });

    // Unit laws: e * a = a = a * e across indices.
    check_tuples("unit-laws", {s10}, [&](const auto& t) {
        const GradedPair& a = t[0];
        GradedPair e{g1.unit(), g1.unit()};
        GradedPair left = transitive_product(e, a, fus(0, 1), fus(1, 1));
        GradedPair e0{g0.unit(), g0.unit()};
        GradedPair right = transitive_product(a, e0, fus(0, 0), fus(0, 1));
        return left == a && right == a;
    });

    // Pair-group axioms for G1 x G0 under the fused product.
    check_tuples("pair-group-associativity", {s10, s10, s10}, [&](const auto& t) {
        const FusionMap j = fus(0, 1);
        return pair_product(pair_product(t[0], t[1], j), t[2], j) ==
               pair_product(t[0], pair_product(t[1], t[2], j), j);
    });
    check_tuples("pair-group-unit-and-inverse", {s10}, [&](const auto& t) {
        const FusionMap j = fus(0, 1);
        GradedPair e{g1.unit(), g0.unit()};
        GradedPair inv = pair_inverse(t[0], j);
        return pair_product(e, t[0], j) == t[0] && pair_product(t[0], e, j) == t[0] &&
               pair_product(t[0], inv, j) == e && pair_product(inv, t[0], j) == e;
    });

    // Conjugation compatibility: w (b*a) w^-1 = (w1 b) * (a w2^-1).
    check_tuples("conjugation-compatibility", {s10, s21, s20}, [&](const auto& t) {
        const GradedPair &a = t[0], &b = t[1], &w = t[2];
        GradedPair ba = transitive_product(b, a, fus(0, 1), fus(1, 2));
        GradedPair lhs = pair_product(
            w, pair_product(ba, pair_inverse(w, fus(0, 2)), fus(0, 2)),
            fus(0, 2));
        auto [w1, w2] = project_pi(w, fus(0, 1), fus(1, 2));
        GradedPair leftf = pair_product(w1, b, fus(1, 2));
        GradedPair rightf = pair_product(a, pair_inverse(w2, fus(0, 1)), fus(0, 1));
        GradedPair rhs = transitive_product(leftf, rightf, fus(0, 1), fus(1, 2));
        return lhs == rhs;
    });

    // Coassociativity of the projections on G3 x G0.
    check_tuples("projection-coassociativity", {s30}, [&](const auto& t) {
        const GradedPair& w = t[0];
        auto split = [&](const GradedPair& p, int lo, int mid, int hi) {
            GradedPair first{p.left, fus(lo, mid).fwd(p.right)};
            GradedPair second{fus(mid, hi).bwd(p.left), p.right};
            return std::pair{first, second};
        };
        auto [a1, a2] = split(w, 0, 1, 3);
        auto [a11, a12] = split(a1, 1, 2, 3);
        auto [b1, b2] = split(w, 0, 2, 3);
        auto [b21, b22] = split(b2, 0, 1, 2);
        return a11 == b1 && a12 == b21 && a2 == b22;
    });

    // Counit law: w1 * e = w = e * w2.
    check_tuples("projection-counit", {s20}, [&](const auto& t) {
        const GradedPair& w = t[0];
        auto [w1, w2] = project_pi(w, fus(0, 1), fus(1, 2));
        GradedPair e10{g1.unit(), g0.unit()};
        GradedPair e21{g2.unit(), g1.unit()};
        return transitive_product(w1, e10, fus(0, 1), fus(1, 2)) == w &&
               transitive_product(e21, w2, fus(0, 1), fus(1, 2)) == w;
    });

    // Antipode rule: w1^-1 * w2 = e = w1 * w2^-1.
    check_tuples("projection-antipode", {s20}, [&](const auto& t) {
        const GradedPair& w = t[0];
        auto [w1, w2] = project_pi(w, fus(0, 1), fus(1, 2));
        GradedPair e{g2.unit(), g0.unit()};
        GradedPair lhs = transitive_product(pair_inverse(w1, fus(1, 2)), w2,
                                            fus(0, 1), fus(1, 2));
        GradedPair rhs = transitive_product(w1, pair_inverse(w2, fus(0, 1)),
                                            fus(0, 1), fus(1, 2));
        return lhs == e && rhs == e;
    });

    // The projection is a homomorphism into the product of pair groups.
    check_tuples("projection-homomorphism", {s20, s20}, [&](const auto& t) {
        auto p = project_pi(pair_product(t[0], t[1], fus(0, 2)), fus(0, 1),
                            fus(1, 2));
        auto a = project_pi(t[0], fus(0, 1), fus(1, 2));
        auto b = project_pi(t[1], fus(0, 1), fus(1, 2));
        return p.first == pair_product(a.first, b.first, fus(1, 2)) &&
               p.second == pair_product(a.second, b.second, fus(0, 1));
    });

    return rep;
}

}  // namespace ydlab
