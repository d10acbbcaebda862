#include "ydlab/presets.hpp"

namespace ydlab {

namespace {

// Sets column `col` of `m` to the basis vector e_idx scaled by `c`.
void set_col(LinMap& m, int col, int idx, const Scalar& c) { m.at(idx, col) += c; }

LinMap braided_lambda_raw(int n, const LinMap& mult, const LinMap& comult) {
    LinMap i = LinMap::identity(n);
    return compose(kron(mult, i), compose(kron(i, LinMap::flip(n, n)), kron(comult, i)));
}

}  // namespace

BimonadPtr preset_trivial() {
    LinMap one = LinMap::identity(1);
    return std::make_shared<Bimonad>("trivial", 1, one, one, one, one, one, one);
}

BimonadPtr preset_sweedler() {
    const int n = 4;  // basis 1, g, x, gx
    LinMap mult(n, n * n);
    auto prod = [&](int i, int j, int idx, int sign) {
        if (idx >= 0) set_col(mult, i * n + j, idx, Scalar(sign));
    };
    for (int j = 0; j < n; ++j) prod(0, j, j, 1);  // 1 . y = y
    for (int i = 1; i < n; ++i) prod(i, 0, i, 1);  // y . 1 = y
    prod(1, 1, 0, 1);   // g g = 1
    prod(1, 2, 3, 1);   // g x = gx
    prod(1, 3, 2, 1);   // g gx = x
    prod(2, 1, 3, -1);  // x g = -gx
    prod(2, 2, -1, 0);  // x x = 0
    prod(2, 3, -1, 0);  // x gx = 0
    prod(3, 1, 2, -1);  // gx g = -x
    prod(3, 2, -1, 0);  // gx x = 0
    prod(3, 3, -1, 0);  // gx gx = 0

    LinMap unit(n, 1);
    unit.at(0, 0) = 1;

    LinMap comult(n * n, n);
    comult.at(0 * n + 0, 0) = 1;  // 1  -> 1 (x) 1
    comult.at(1 * n + 1, 1) = 1;  // g  -> g (x) g
    comult.at(2 * n + 0, 2) = 1;  // x  -> x (x) 1 + g (x) x
    comult.at(1 * n + 2, 2) = 1;
    comult.at(3 * n + 1, 3) = 1;  // gx -> gx (x) g + 1 (x) gx
    comult.at(0 * n + 3, 3) = 1;

    LinMap counit(1, n);
    counit.at(0, 0) = 1;
    counit.at(0, 1) = 1;

    LinMap antipode(n, n);
    antipode.at(0, 0) = 1;   // S(1) = 1
    antipode.at(1, 1) = 1;   // S(g) = g
    antipode.at(3, 2) = -1;  // S(x) = -gx
    antipode.at(2, 3) = 1;   // S(gx) = x

    LinMap lambda = braided_lambda_raw(n, mult, comult);
    return std::make_shared<Bimonad>("sweedler", n, mult, unit, comult, counit, lambda, antipode);
}

BimonadPtr preset_cyclic2() {
    const int n = 2;  // basis 1, t
    LinMap mult(n, n * n);
    mult.at(0, 0 * n + 0) = 1;
    mult.at(1, 0 * n + 1) = 1;
    mult.at(1, 1 * n + 0) = 1;
    mult.at(0, 1 * n + 1) = 1;
    LinMap unit(n, 1);
    unit.at(0, 0) = 1;
    LinMap comult(n * n, n);
    comult.at(0 * n + 0, 0) = 1;
    comult.at(1 * n + 1, 1) = 1;
    LinMap counit(1, n);
    counit.at(0, 0) = 1;
    counit.at(0, 1) = 1;
    LinMap antipode = LinMap::identity(n);
    LinMap lambda = braided_lambda_raw(n, mult, comult);
    return std::make_shared<Bimonad>("cyclic2", n, mult, unit, comult, counit, lambda, antipode);
}

LinMap sweedler_phi(const Scalar& c) {
    if (c == 0) throw Error(ErrorKind::NotInvertible, "phi_c needs c != 0");
    LinMap m = LinMap::identity(4);
    m.at(2, 2) = c;
    m.at(3, 3) = c;
    return m;
}

LinMap sweedler_grouplike_g() {
    LinMap g(4, 1);
    g.at(1, 0) = 1;
    return g;
}

GradedYDObject unit_object(BimonadPtr b, const std::string& name) {
    return build_yd_from_action_coaction(b, name, 1, b->counit, b->unit);
}

GradedYDObject sweedler_adjoint_object(BimonadPtr h4) {
    const int n = h4->dim;
    LinMap i = LinMap::identity(n);
    LinMap act = compose(
        h4->mult,
        compose(kron(h4->mult, i),
                compose(kron(i, kron(i, *h4->antipode)),
                        compose(kron(i, LinMap::flip(n, n)), kron(h4->comult, i)))));
    return build_yd_from_action_coaction(h4, "adjoint", n, act, h4->comult);
}

GradedYDObject cyclic2_crossed_object(BimonadPtr qz2) {
    const int n = qz2->dim;
    LinMap act = kron(qz2->counit, LinMap::identity(n));
    return build_yd_from_action_coaction(qz2, "crossed", n, act, qz2->comult);
}

InvolutionPair pair_counit_unit(BimonadPtr b, const LinMap& a) {
    InvolutionPair p{b,
                     b,
                     make_character(b, b->counit),
                     make_grouplike(b, b->unit),
                     a,
                     a,
                     AutMap::identity()};
    return p;
}

InvolutionPair sweedler_pair_counit_g(BimonadPtr h4) {
    InvolutionPair p{h4,
                     h4,
                     make_character(h4, h4->counit),
                     make_grouplike(h4, sweedler_grouplike_g()),
                     sweedler_phi(Scalar(-1)),
                     LinMap::identity(4),
                     AutMap::identity()};
    return p;
}

}  // namespace ydlab
