#include "ydlab/bimonad.hpp"

#include <deque>

namespace ydlab {

Bimonad::Bimonad(std::string name_, int dim_, LinMap mult_, LinMap unit_, LinMap comult_,
                 LinMap counit_, LinMap lambda_, std::optional<LinMap> antipode_)
    : name(std::move(name_)),
      dim(dim_),
      mult(std::move(mult_)),
      unit(std::move(unit_)),
      comult(std::move(comult_)),
      counit(std::move(counit_)),
      lambda(std::move(lambda_)),
      antipode(std::move(antipode_)) {
    int n = dim;
    auto shape = [&](const LinMap& m, int cod, int dom, const char* what) {
        if (m.cod() != cod || m.dom() != dom)
            throw Error(ErrorKind::MalformedInput, std::string(what) + " of bimonad " + name +
                                                       " has the wrong shape");
    };
    if (n < 1) throw Error(ErrorKind::MalformedInput, "bimonad dimension must be positive");
    shape(mult, n, n * n, "mult");
    shape(unit, n, 1, "unit");
    shape(comult, n * n, n, "comult");
    shape(counit, 1, n, "counit");
    shape(lambda, n * n, n * n, "lambda");
    if (antipode) shape(*antipode, n, n, "antipode");
}

LinMap Bimonad::lambda_for(const LinMap& a) const {
    if (a.cod() != dim || a.dom() != dim)
        throw Error(ErrorKind::DimensionMismatch, "automorphism has the wrong shape");
    LinMap i = id();
    return compose(kron(a, i), compose(lambda, kron(i, a.inverse())));
}

namespace {

// Monadic distributive-law identities for a candidate psi: Fp (x) X -> X (x) F.
void check_monadic(VerificationReport& rep, const Bimonad& fp, const Bimonad& f, int xdim,
                   const LinMap& psi, const std::string& prefix) {
    LinMap ix = LinMap::identity(xdim);
    LinMap in = LinMap::identity(f.dim);
    LinMap inp = LinMap::identity(fp.dim);
    rep.require_eq(prefix + "monadic-mult",
                   compose(kron(ix, f.mult), compose(kron(psi, in), kron(inp, psi))),
                   compose(psi, kron(fp.mult, ix)));
    rep.require_eq(prefix + "monadic-unit", compose(psi, kron(fp.unit, ix)), kron(ix, f.unit));
}

// Comonadic distributive-law identities for a candidate phi: X (x) F -> Fp (x) X.
void check_comonadic(VerificationReport& rep, const Bimonad& fp, const Bimonad& f, int xdim,
                     const LinMap& phi, const std::string& prefix) {
    LinMap ix = LinMap::identity(xdim);
    LinMap in = LinMap::identity(f.dim);
    LinMap inp = LinMap::identity(fp.dim);
    rep.require_eq(prefix + "comonadic-comult",
                   compose(kron(inp, phi), compose(kron(phi, in), kron(ix, f.comult))),
                   compose(kron(fp.comult, ix), phi));
    rep.require_eq(prefix + "comonadic-counit", compose(kron(fp.counit, ix), phi),
                   kron(ix, f.counit));
}

}  // namespace

VerificationReport verify_bimonad(const Bimonad& b) {
    VerificationReport rep;
    rep.subject = "bimonad " + b.name;
    int n = b.dim;
    LinMap i = LinMap::identity(n);

    rep.require_eq("mu-associativity", compose(b.mult, kron(b.mult, i)),
                   compose(b.mult, kron(i, b.mult)));
    rep.require_eq("eta-unit-left", compose(b.mult, kron(b.unit, i)), i);
    rep.require_eq("eta-unit-right", compose(b.mult, kron(i, b.unit)), i);
    rep.require_eq("delta-coassociativity", compose(kron(b.comult, i), b.comult),
                   compose(kron(i, b.comult), b.comult));
    rep.require_eq("epsilon-counit-left", compose(kron(b.counit, i), b.comult), i);
    rep.require_eq("epsilon-counit-right", compose(kron(i, b.counit), b.comult), i);

    // The four bialgebra-type compatibilities, with lambda interchanging the
    // middle legs of comult-after-mult.
    rep.require_eq("mult-comult-lambda", compose(b.comult, b.mult),
                   compose(kron(i, b.mult), compose(kron(b.lambda, i), kron(i, b.comult))));
    rep.require_eq("counit-multiplicative", compose(b.counit, b.mult), kron(b.counit, b.counit));
    rep.require_eq("unit-comultiplicative", compose(b.comult, b.unit), kron(b.unit, b.unit));
    rep.require_eq("counit-unit", compose(b.counit, b.unit), LinMap::identity(1));

    // (F, lambda) must be a valid interchange in both directions.
    check_monadic(rep, b, b, n, b.lambda, "lambda-");
    check_comonadic(rep, b, b, n, b.lambda, "lambda-");

    if (b.antipode) {
        LinMap eta_eps = compose(b.unit, b.counit);
        rep.require_eq("antipode-left", compose(b.mult, compose(kron(*b.antipode, i), b.comult)),
                       eta_eps);
        rep.require_eq("antipode-right", compose(b.mult, compose(kron(i, *b.antipode), b.comult)),
                       eta_eps);
    }
    return rep;
}

LinMap braided_lambda(const Bimonad& b, const LinMap& alpha) {
    LinMap i = LinMap::identity(b.dim);
    return compose(kron(b.mult, i),
                   compose(kron(alpha, LinMap::flip(b.dim, b.dim)), kron(b.comult, i)));
}

LinMap lambda_from_tau(const Bimonad& b, const LinMap& tau, const LinMap& alpha) {
    VerificationReport pre;
    pre.subject = "tau";
    check_monadic(pre, b, b, b.dim, tau, "");
    check_comonadic(pre, b, b, b.dim, tau, "");
    if (!pre.passed()) {
        for (const auto& c : pre.checks)
            if (!c.passed)
                throw Error(ErrorKind::PreconditionFailed,
                            "tau violates the " + c.label + " identity");
    }
    LinMap i = LinMap::identity(b.dim);
    return compose(kron(b.mult, i), compose(kron(alpha, tau), kron(b.comult, i)));
}

VerificationReport verify_zero_automorphism(const Bimonad& b, const LinMap& m) {
    VerificationReport rep;
    rep.subject = "automorphism candidate on " + b.name;
    if (m.cod() != b.dim || m.dom() != b.dim)
        throw Error(ErrorKind::MalformedInput, "candidate must be a square dim x dim map");
    LinMap i = LinMap::identity(b.dim);
    std::optional<LinMap> minv;
    try {
        minv = m.inverse();
        rep.require("invertible", true);
    } catch (const Error&) {
        rep.require("invertible", false, "matrix is singular");
        return rep;
    }
    rep.require_eq("algebra-map-mult", compose(m, b.mult), compose(b.mult, kron(m, m)));
    rep.require_eq("algebra-map-unit", compose(m, b.unit), b.unit);
    rep.require_eq("coalgebra-map-comult", compose(b.comult, m), compose(kron(m, m), b.comult));
    rep.require_eq("coalgebra-map-counit", compose(b.counit, m), b.counit);
    rep.require_eq("lambda-compatibility",
                   compose(kron(*minv, i), compose(b.lambda, kron(m, i))),
                   compose(kron(i, m), compose(b.lambda, kron(i, *minv))));
    return rep;
}

std::vector<ZeroAutomorphism> group_closure(const Bimonad& b, const std::vector<LinMap>& gens,
                                            size_t cap) {
    for (const auto& g : gens)
        if (!verify_zero_automorphism(b, g).passed())
            throw Error(ErrorKind::PreconditionFailed,
                        "a generator is not a bimonad automorphism");
    std::vector<LinMap> elems;
    auto add = [&](const LinMap& m) {
        for (const auto& e : elems)
            if (e == m) return false;
        if (elems.size() >= cap)
            throw Error(ErrorKind::ClosureTooLarge,
                        "closure exceeds cap of " + std::to_string(cap) + " elements");
        elems.push_back(m);
        return true;
    };
    add(LinMap::identity(b.dim));
    std::deque<LinMap> frontier;
    for (const auto& g : gens) {
        if (add(g)) frontier.push_back(g);
        LinMap gi = g.inverse();
        if (add(gi)) frontier.push_back(gi);
    }
    while (!frontier.empty()) {
        LinMap cur = frontier.front();
        frontier.pop_front();
        for (size_t i = 0; i < elems.size(); ++i) {
            LinMap left = compose(cur, elems[i]);
            if (add(left)) frontier.push_back(left);
            LinMap right = compose(elems[i], cur);
            if (add(right)) frontier.push_back(right);
        }
    }
    std::vector<ZeroAutomorphism> out;
    out.reserve(elems.size());
    for (auto& e : elems) {
        LinMap inv = e.inverse();
        out.push_back({std::move(e), std::move(inv)});
    }
    return out;
}

const LinMap& LambdaFamily::lambda_of(const LinMap& aut) const {
    for (size_t i = 0; i < automorphisms.size(); ++i)
        if (automorphisms[i] == aut) return lambdas[i];
    throw Error(ErrorKind::GroupMismatch, "automorphism is not in the working set");
}

bool LambdaFamily::contains(const LinMap& aut) const {
    for (const auto& a : automorphisms)
        if (a == aut) return true;
    return false;
}

LambdaFamily build_lambda_family(const Bimonad& b, const std::vector<LinMap>& auts) {
    LambdaFamily fam;
    fam.owner = &b;
    bool has_id = false;
    for (const auto& a : auts) {
        fam.automorphisms.push_back(a);
        fam.lambdas.push_back(b.lambda_for(a));
        if (a.is_identity()) has_id = true;
    }
    if (!has_id) {
        fam.automorphisms.push_back(LinMap::identity(b.dim));
        fam.lambdas.push_back(b.lambda);
    }
    return fam;
}

VerificationReport verify_lambda_consequences(const Bimonad& b, const LambdaFamily& fam) {
    VerificationReport rep;
    rep.subject = "lambda-family on " + b.name;
    if (fam.owner != &b)
        throw Error(ErrorKind::PreconditionFailed, "family does not belong to this bimonad");
    const size_t k = fam.automorphisms.size();
    std::vector<LinMap> inv;
    inv.reserve(k);
    for (const auto& a : fam.automorphisms) inv.push_back(a.inverse());
    // Closure precondition: every product the identities mention must carry a
    // family member.
    for (size_t x = 0; x < k; ++x)
        for (size_t y = 0; y < k; ++y) {
            if (!fam.contains(compose(fam.automorphisms[x], fam.automorphisms[y])) ||
                !fam.contains(compose(inv[x], fam.automorphisms[y])))
                throw Error(ErrorKind::PreconditionFailed,
                            "working set is not closed under the required products");
        }

    LinMap i = LinMap::identity(b.dim);
    const LinMap& l = fam.lambda_of(i);

    // Each identity is checked for every (a, b) pair in the working set; the
    // first failing pair is recorded on the check.
    auto check_pairs = [&](const std::string& label, auto&& lhs_of, auto&& rhs_of) {
        Check c;
        c.label = label;
        for (size_t x = 0; x < k && c.passed; ++x)
            for (size_t y = 0; y < k && c.passed; ++y) {
                auto diff = LinMap::first_difference(lhs_of(x, y), rhs_of(x, y));
                if (diff) {
                    c.passed = false;
                    c.counterexample = *diff;
                    c.note = "pair (" + std::to_string(x) + "," + std::to_string(y) + ")";
                }
            }
        rep.checks.push_back(std::move(c));
    };

    auto A = [&](size_t x) -> const LinMap& { return fam.automorphisms[x]; };
    auto L = [&](size_t x) -> const LinMap& { return fam.lambdas[x]; };
    auto Lof = [&](const LinMap& m) -> const LinMap& { return fam.lambda_of(m); };

    // Defining rule of the family: lambda_{ba} from lambda with a on the
    // outer-left/inner-right legs and b on the inner-left/outer-right legs.
    check_pairs(
        "family-product-rule",
        [&](size_t x, size_t y) { return Lof(compose(A(y), A(x))); },
        [&](size_t x, size_t y) {
            return compose(kron(A(x), inv[y]), compose(l, kron(A(y), inv[x])));
        });
    check_pairs(
        "left-form", [&](size_t x, size_t) { return L(x); },
        [&](size_t x, size_t) { return compose(kron(A(x), i), compose(l, kron(i, inv[x]))); });
    check_pairs(
        "right-form", [&](size_t x, size_t) { return L(x); },
        [&](size_t x, size_t) { return compose(kron(i, inv[x]), compose(l, kron(A(x), i))); });
    check_pairs(
        "product-left-form",
        [&](size_t x, size_t y) { return Lof(compose(A(x), A(y))); },
        [&](size_t x, size_t y) { return compose(kron(A(x), i), compose(L(y), kron(i, inv[x]))); });
    check_pairs(
        "product-right-form",
        [&](size_t x, size_t y) { return Lof(compose(A(x), A(y))); },
        [&](size_t x, size_t y) { return compose(kron(i, inv[y]), compose(L(x), kron(A(y), i))); });
    check_pairs(
        "exchange-left",
        [&](size_t x, size_t y) { return compose(kron(i, A(y)), Lof(compose(A(x), A(y)))); },
        [&](size_t x, size_t y) { return compose(L(x), kron(A(y), i)); });
    check_pairs(
        "exchange-right",
        [&](size_t x, size_t y) { return compose(Lof(compose(A(x), A(y))), kron(i, A(x))); },
        [&](size_t x, size_t y) { return compose(kron(A(x), i), L(y)); });
    check_pairs(
        "slide-left", [&](size_t x, size_t) { return compose(l, kron(A(x), i)); },
        [&](size_t x, size_t) { return compose(kron(i, A(x)), L(x)); });
    check_pairs(
        "slide-inverse-left", [&](size_t x, size_t) { return compose(L(x), kron(inv[x], i)); },
        [&](size_t x, size_t) { return compose(kron(i, inv[x]), l); });
    check_pairs(
        "slide-inverse-right", [&](size_t x, size_t) { return compose(l, kron(i, inv[x])); },
        [&](size_t x, size_t) { return compose(kron(inv[x], i), L(x)); });
    check_pairs(
        "mixed-slide",
        [&](size_t x, size_t y) { return compose(L(x), kron(compose(inv[x], A(y)), i)); },
        [&](size_t x, size_t y) { return compose(kron(i, compose(inv[x], A(y))), L(y)); });

    return rep;
}

}  // namespace ydlab
