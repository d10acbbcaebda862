#include "ydlab.h"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>

#include "ydlab/workspace.hpp"

using namespace ydlab;

struct ydlab_session {
    Workspace ws;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

struct Args {
    std::string command;
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;

    bool json() const { return flags.count("json") != 0; }
    std::string get(const std::string& key, const std::string& fallback = "") const {
        auto it = flags.find(key);
        return it == flags.end() ? fallback : it->second;
    }
    std::string require(const std::string& key) const {
        auto it = flags.find(key);
        if (it == flags.end())
            throw Error(ErrorKind::MalformedInput, "missing required flag --" + key);
        return it->second;
    }
};

Args parse_args(int argc, const char* const* argv) {
    if (argc < 1) throw Error(ErrorKind::UnknownCommand, "no command given");
    Args a;
    a.command = argv[0];
    for (int i = 1; i < argc; ++i) {
        std::string tok = argv[i];
        if (tok.rfind("--", 0) == 0) {
            std::string key = tok.substr(2);
            if (key == "json") {
                a.flags[key] = "true";
            } else {
                if (i + 1 >= argc)
                    throw Error(ErrorKind::MalformedInput, "flag --" + key + " needs a value");
                a.flags[key] = argv[++i];
            }
        } else {
            a.positional.push_back(tok);
        }
    }
    return a;
}

const GradedYDObject& object_arg(const Workspace& ws, const Args& a,
                                 const std::string& key = "object") {
    if (a.flags.count(key)) return ws.object(a.get(key));
    if (key == "object" && !a.positional.empty()) return ws.object(a.positional[0]);
    throw Error(ErrorKind::MalformedInput, "missing required flag --" + key);
}

BimonadPtr bimonad_arg(const Workspace& ws, const Args& a) {
    if (a.flags.count("bimonad")) return ws.bimonad(a.get("bimonad"));
    if (!a.positional.empty()) return ws.bimonad(a.positional[0]);
    if (ws.bimonads.size() == 1) return ws.bimonads.begin()->second;
    throw Error(ErrorKind::MalformedInput, "specify a bimonad name");
}

void write_object_file(const Workspace& ws, const GradedYDObject& o, const std::string& path) {
    nlohmann::json j;
    j["name"] = o.name;
    j["source"] = o.source->name;
    j["target"] = o.target->name;
    j["xdim"] = o.xdim;
    auto mat = [](const LinMap& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : m.to_rows()) rows.push_back(row);
        return rows;
    };
    j["psi"] = mat(o.psi);
    j["phi"] = mat(o.phi);
    j["alpha"] = ws.aut_name_of(o.alpha, o.target->name);
    j["beta"] = ws.aut_name_of(o.beta, o.source->name);
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::MalformedInput, "cannot write " + path);
    out << j.dump(2) << "\n";
}

VerificationReport cmd_group_axioms(const Workspace& ws, const Args& a) {
    unsigned long seed = std::stoul(a.get("seed", "0"));
    if (a.flags.count("system")) {
        auto it = ws.systems.find(a.get("system"));
        if (it == ws.systems.end())
            throw Error(ErrorKind::MalformedInput, "unknown system '" + a.get("system") + "'");
        return verify_system_axioms(it->second, seed);
    }
    std::string gname = a.flags.count("group") ? a.get("group")
                        : !a.positional.empty()
                            ? a.positional[0]
                            : throw Error(ErrorKind::MalformedInput, "specify --group or --system");
    GradedGroupSystem sys(gname + "_chain", {ws.group(gname)}, {});
    return verify_system_axioms(sys, seed);
}

VerificationReport cmd_verify_yd(const Workspace& ws, const Args& a) {
    GradedYDObject o = object_arg(ws, a);
    if (a.flags.count("alpha")) o.alpha = ws.aut_matrix(a.get("alpha"), *o.target);
    if (a.flags.count("beta")) o.beta = ws.aut_matrix(a.get("beta"), *o.source);
    return verify_yd(o);
}

VerificationReport cmd_classify(const Workspace& ws, const Args& a) {
    const GradedYDObject& o = object_arg(ws, a);
    std::vector<std::pair<std::string, LinMap>> left{{"id", LinMap::identity(o.target->dim)}};
    std::vector<std::pair<std::string, LinMap>> right{{"id", LinMap::identity(o.source->dim)}};
    for (const auto& [n, aut] : ws.automorphisms) {
        if (aut.bimonad == o.target->name) left.emplace_back(n, aut.matrix);
        if (aut.bimonad == o.source->name) right.emplace_back(n, aut.matrix);
    }
    std::vector<std::pair<LinMap, LinMap>> pool;
    for (const auto& [ln, lm] : left)
        for (const auto& [rn, rm] : right) pool.emplace_back(lm, rm);
    auto hits = classify_grading(o, pool);
    VerificationReport rep;
    rep.subject = "grading classification of " + o.name;
    rep.require("classification-complete", true,
                std::to_string(hits.size()) + " of " + std::to_string(pool.size()) +
                    " gradings pass");
    for (const auto& [am, bm] : hits)
        rep.note("passes at (" + ws.aut_name_of(am, o.target->name) + ", " +
                 ws.aut_name_of(bm, o.source->name) + ")");
    return rep;
}

VerificationReport cmd_compose(const Workspace& ws, const Args& a) {
    const GradedYDObject& x = object_arg(ws, a, "left");
    const GradedYDObject& y = object_arg(ws, a, "right");
    AutMap j = AutMap::identity();
    GradedYDObject out = compose_yd(x, y, j, j);
    VerificationReport rep = verify_yd(out);
    rep.subject = "composite " + out.name;
    MatPair expected = mat_transitive_product({x.alpha, x.beta}, {y.alpha, y.beta}, j, j);
    rep.require_eq("grading-transitive-product-left", out.alpha, expected.left);
    rep.require_eq("grading-transitive-product-right", out.beta, expected.right);
    rep.note("fusion maps: identity (explicit argument recorded)");
    if (a.flags.count("out")) write_object_file(ws, out, a.get("out"));
    return rep;
}

VerificationReport cmd_twist(const Workspace& ws, const Args& a) {
    const GradedYDObject& o = object_arg(ws, a);
    std::string mode_s = a.require("mode");
    TwistMode mode;
    BimonadPtr which;
    if (mode_s == "source") {
        mode = TwistMode::Source;
        which = o.source;
    } else if (mode_s == "target") {
        mode = TwistMode::Target;
        which = o.target;
    } else {
        throw Error(ErrorKind::MalformedInput, "--mode must be source or target");
    }
    LinMap aut = ws.aut_matrix(a.require("aut"), *which);
    LinMap psi2 = twist_psi(o, mode, aut, AutMap::identity());
    VerificationReport rep;
    rep.subject = "twist of " + o.name + " (" + mode_s + " mode)";
    LinMap im = LinMap::identity(o.xdim);
    LinMap in = LinMap::identity(o.source->dim);
    LinMap inp = LinMap::identity(o.target->dim);
    rep.require_eq("monadic-mult",
                   compose(kron(im, o.source->mult), compose(kron(psi2, in), kron(inp, psi2))),
                   compose(psi2, kron(o.target->mult, im)));
    rep.require_eq("monadic-unit", compose(psi2, kron(o.target->unit, im)),
                   kron(im, o.source->unit));
    rep.note("fusion map: identity (explicit argument recorded)");
    return rep;
}

VerificationReport cmd_phi_laws(const Workspace& ws, const Args& a) {
    const GradedYDObject& x = object_arg(ws, a);
    MatPair pair{ws.aut_matrix(a.get("alpha", "id"), *x.target),
                 ws.aut_matrix(a.get("beta", "id"), *x.source)};
    AutMap j = AutMap::identity();
    VerificationReport rep;
    rep.subject = "twisting-functor laws on " + x.name;
    MatPair neutral{LinMap::identity(x.target->dim), LinMap::identity(x.source->dim)};
    GradedYDObject fixed = apply_phi(neutral, x, j);
    rep.require_eq("identity-functor-psi", fixed.psi, x.psi);
    rep.require_eq("identity-functor-phi", fixed.phi, x.phi);
    GradedYDObject image = apply_phi(pair, x, j);
    rep.merge(verify_yd(image), "image");
    GradedYDObject back = apply_phi(mat_pair_inverse(pair, j), image, j);
    rep.require_eq("invertibility-psi", back.psi, x.psi);
    rep.require_eq("invertibility-phi", back.phi, x.phi);
    rep.require_eq("invertibility-grading-left", back.alpha, x.alpha);
    rep.require_eq("invertibility-grading-right", back.beta, x.beta);
    MatPair conj = mat_conjugate_grading(pair, {x.alpha, x.beta}, j);
    rep.require_eq("grading-conjugation-left", image.alpha, conj.left);
    rep.require_eq("grading-conjugation-right", image.beta, conj.right);
    if (a.flags.count("object2")) {
        const GradedYDObject& y = ws.object(a.get("object2"));
        rep.merge(verify_phi_monoidal(pair, x, y, j, j), "monoidality");
    }
    return rep;
}

VerificationReport cmd_iso(const Workspace& ws, const Args& a) {
    const InvolutionPair& p = ws.pair(a.require("pair"));
    const GradedYDObject& o = object_arg(ws, a);
    std::string dir = a.require("direction");
    GradedYDObject out;
    if (dir == "forward")
        out = iso_forward(p, o);
    else if (dir == "backward")
        out = iso_backward(p, o);
    else
        throw Error(ErrorKind::MalformedInput, "--direction must be forward or backward");
    VerificationReport rep = verify_yd(out);
    rep.subject = "iso " + dir + " image of " + o.name;
    rep.note("output grading: (" + ws.aut_name_of(out.alpha, out.target->name) + ", " +
             ws.aut_name_of(out.beta, out.source->name) + ")");
    if (a.flags.count("out")) write_object_file(ws, out, a.get("out"));
    return rep;
}

VerificationReport cmd_tau_build(const Workspace& ws, const Args& a) {
    const InvolutionPair& p = ws.pair(a.require("pair"));
    int n = p.target->dim;
    LinMap fl = LinMap::flip(n, n);
    GradedYDObject out = yd_from_tau_pair(p, fl, fl, n, a.get("name", "tau_object"));
    VerificationReport rep = verify_yd(out);
    rep.subject = "tau-built object " + out.name;
    rep.note("tau: flip braiding on both legs");
    if (a.flags.count("out")) write_object_file(ws, out, a.get("out"));
    return rep;
}

int dispatch(ydlab_session* s, int argc, const char* const* argv, char** report_out) {
    Args a = parse_args(argc, argv);
    const Workspace& ws = s->ws;
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    if (a.command == "verify-bimonad") {
        rep = verify_bimonad(*bimonad_arg(ws, a));
    } else if (a.command == "verify-aut") {
        std::string n = a.flags.count("aut") ? a.get("aut")
                        : !a.positional.empty()
                            ? a.positional[0]
                            : throw Error(ErrorKind::MalformedInput, "specify an automorphism");
        if (n == "id") {
            BimonadPtr b = bimonad_arg(ws, a);
            rep = verify_zero_automorphism(*b, LinMap::identity(b->dim));
        } else {
            const NamedAut& aut = ws.automorphism(n);
            rep = verify_zero_automorphism(*ws.bimonad(aut.bimonad), aut.matrix);
        }
    } else if (a.command == "group-axioms") {
        rep = cmd_group_axioms(ws, a);
    } else if (a.command == "verify-yd") {
        rep = cmd_verify_yd(ws, a);
    } else if (a.command == "classify") {
        rep = cmd_classify(ws, a);
    } else if (a.command == "compose") {
        rep = cmd_compose(ws, a);
    } else if (a.command == "twist") {
        rep = cmd_twist(ws, a);
    } else if (a.command == "phi-laws") {
        rep = cmd_phi_laws(ws, a);
    } else if (a.command == "involution-check") {
        std::string n = a.flags.count("pair")
                            ? a.get("pair")
                            : !a.positional.empty()
                                  ? a.positional[0]
                                  : throw Error(ErrorKind::MalformedInput, "specify a pair");
        rep = check_involution_pair(ws.pair(n));
    } else if (a.command == "iso") {
        rep = cmd_iso(ws, a);
    } else if (a.command == "tau-build") {
        rep = cmd_tau_build(ws, a);
    } else if (a.command == "export-workspace") {
        export_workspace(ws, a.require("dir"));
        rep.subject = "export of workspace " + ws.name;
        rep.require("exported", true, "written to " + a.get("dir"));
    } else {
        throw Error(ErrorKind::UnknownCommand, "unknown command '" + a.command + "'");
    }
    if (a.flags.count("seed") && !rep.seed) rep.seed = std::stoul(a.get("seed"));
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (report_out) *report_out = dup_string(a.json() ? rep.to_json_text() : rep.to_text());
    return rep.passed() ? YDLAB_OK : YDLAB_CHECK_FAILED;
}

int status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedInput:
        case ErrorKind::UnknownCommand:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::EmptyHom:
        case ErrorKind::ClosureTooLarge:
            return YDLAB_INPUT_ERROR;
        default:
            return YDLAB_CHECK_FAILED;
    }
}

}  // namespace

extern "C" {

int ydlab_session_open(const char* workspace, ydlab_session** out, char** err) {
    if (!out) return YDLAB_INPUT_ERROR;
    *out = nullptr;
    std::string choice;
    if (workspace && *workspace) {
        choice = workspace;
    } else if (const char* env = std::getenv("YDLAB_WORKSPACE"); env && *env) {
        choice = env;
    } else {
        choice = "sweedler";
    }
    try {
        auto* s = new ydlab_session;
        if (choice == "trivial" || choice == "sweedler" || choice == "cyclic2")
            s->ws = builtin_workspace(choice);
        else
            s->ws = load_workspace(choice);
        *out = s;
        return YDLAB_OK;
    } catch (const Error& e) {
        if (err) *err = dup_string(e.what());
        return YDLAB_INPUT_ERROR;
    } catch (const std::exception& e) {
        if (err) *err = dup_string(e.what());
        return YDLAB_INPUT_ERROR;
    }
}

int ydlab_session_run(ydlab_session* s, int argc, const char* const* argv, char** report_out) {
    if (!s) return YDLAB_INPUT_ERROR;
    try {
        return dispatch(s, argc, argv, report_out);
    } catch (const Error& e) {
        if (report_out) *report_out = dup_string(std::string("error: ") + e.what() + "\n");
        return status_of(e.kind());
    } catch (const std::exception& e) {
        if (report_out) *report_out = dup_string(std::string("error: ") + e.what() + "\n");
        return YDLAB_INPUT_ERROR;
    }
}

void ydlab_session_free(ydlab_session* s) { delete s; }

void ydlab_free_string(char* s) { std::free(s); }

const char* ydlab_version(void) { return "0.1.0"; }

}  // extern "C"
