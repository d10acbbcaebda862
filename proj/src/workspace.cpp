#include "ydlab/workspace.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>

namespace ydlab {

using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::MalformedInput, path + ": " + e.what());
    }
    return j;
}

LinMap parse_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw Error(ErrorKind::MalformedInput, where + ": matrix must be a nonempty 2-D array");
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty())
            throw Error(ErrorKind::MalformedInput, where + ": matrix rows must be arrays");
        std::vector<std::string> r;
        for (const auto& cell : row) {
            if (cell.is_string())
                r.push_back(cell.get<std::string>());
            else if (cell.is_number_integer())
                r.push_back(std::to_string(cell.get<long long>()));
            else
                throw Error(ErrorKind::MalformedInput,
                            where + ": matrix entries must be strings like \"p/q\"");
        }
        rows.push_back(std::move(r));
    }
    return LinMap::from_rows(rows);
}

json matrix_json(const LinMap& m) {
    json rows = json::array();
    for (const auto& row : m.to_rows()) rows.push_back(row);
    return rows;
}

template <typename T>
const T& named(const std::map<std::string, T>& reg, const std::string& n, const char* kind) {
    auto it = reg.find(n);
    if (it == reg.end())
        throw Error(ErrorKind::MalformedInput, std::string("unknown ") + kind + " '" + n + "'");
    return it->second;
}

void add_stock_groups(Workspace& ws) {
    ws.groups.emplace("trivial", std::make_shared<FiniteGroup>(FiniteGroup::trivial()));
    ws.groups.emplace("z2", std::make_shared<FiniteGroup>(FiniteGroup::cyclic(2)));
    ws.groups.emplace("z6", std::make_shared<FiniteGroup>(FiniteGroup::cyclic(6)));
    ws.groups.emplace("s3", std::make_shared<FiniteGroup>(FiniteGroup::symmetric3()));
    ws.groups.emplace("d4", std::make_shared<FiniteGroup>(FiniteGroup::dihedral4()));
    ws.fusions.emplace("s3_inner", FusionMap::inner(ws.groups.at("s3"), 1));
    ws.fusions.emplace("d4_inner", FusionMap::inner(ws.groups.at("d4"), 1));
    ws.systems.emplace("z6_chain",
                       GradedGroupSystem("z6_chain", {ws.groups.at("z6")}, {}));
    ws.systems.emplace("s3_chain",
                       GradedGroupSystem("s3_chain", {ws.groups.at("s3"), ws.groups.at("s3")},
                                         {ws.fusions.at("s3_inner")}));
    ws.systems.emplace("d4_chain",
                       GradedGroupSystem("d4_chain", {ws.groups.at("d4"), ws.groups.at("d4")},
                                         {ws.fusions.at("d4_inner")}));
}

void verify_all(const Workspace& ws) {
    auto fail = [](const std::string& what, const VerificationReport& rep) {
        for (const auto& c : rep.checks)
            if (!c.passed)
                throw Error(ErrorKind::IntegrityError, what + " fails " + c.label);
    };
    for (const auto& [n, b] : ws.bimonads) fail("bimonad " + n, verify_bimonad(*b));
    for (const auto& [n, a] : ws.automorphisms)
        fail("automorphism " + n,
             verify_zero_automorphism(*ws.bimonad(a.bimonad), a.matrix));
    for (const auto& [n, o] : ws.objects) fail("object " + n, verify_yd(o));
    for (const auto& [n, p] : ws.pairs) fail("pair " + n, check_involution_pair(p));
}

}  // namespace

BimonadPtr Workspace::bimonad(const std::string& n) const {
    return named(bimonads, n, "bimonad");
}

const NamedAut& Workspace::automorphism(const std::string& n) const {
    return named(automorphisms, n, "automorphism");
}

LinMap Workspace::aut_matrix(const std::string& n, const Bimonad& b) const {
    if (n == "id") return LinMap::identity(b.dim);
    const NamedAut& a = automorphism(n);
    if (a.bimonad != b.name)
        throw Error(ErrorKind::MalformedInput,
                    "automorphism '" + n + "' belongs to bimonad " + a.bimonad + ", not " +
                        b.name);
    return a.matrix;
}

GroupPtr Workspace::group(const std::string& n) const { return named(groups, n, "group"); }

const GradedYDObject& Workspace::object(const std::string& n) const {
    return named(objects, n, "object");
}

const InvolutionPair& Workspace::pair(const std::string& n) const {
    return named(pairs, n, "pair");
}

std::string Workspace::aut_name_of(const LinMap& m, const std::string& bimonad_name) const {
    if (m.is_identity()) return "id";
    for (const auto& [n, a] : automorphisms)
        if (a.bimonad == bimonad_name && a.matrix == m) return n;
    throw Error(ErrorKind::MalformedInput,
                "no registered automorphism name for a matrix over " + bimonad_name);
}

Workspace builtin_workspace(const std::string& name) {
    Workspace ws;
    ws.name = name;
    add_stock_groups(ws);
    if (name == "trivial") {
        BimonadPtr k = preset_trivial();
        ws.bimonads.emplace(k->name, k);
        ws.objects.emplace("unit", unit_object(k, "unit"));
        ws.pairs.emplace("eps_eta", pair_counit_unit(k, LinMap::identity(1)));
    } else if (name == "sweedler") {
        BimonadPtr h4 = preset_sweedler();
        ws.bimonads.emplace(h4->name, h4);
        ws.automorphisms.emplace("phi_neg1", NamedAut{h4->name, sweedler_phi(Scalar(-1))});
        ws.automorphisms.emplace("phi_2", NamedAut{h4->name, sweedler_phi(Scalar(2))});
        ws.automorphisms.emplace("phi_half", NamedAut{h4->name, sweedler_phi(Scalar(1) / 2)});
        ws.automorphisms.emplace("phi_neg3", NamedAut{h4->name, sweedler_phi(Scalar(-3))});
        ws.objects.emplace("adjoint", sweedler_adjoint_object(h4));
        ws.objects.emplace("unit", unit_object(h4, "unit"));
        ws.pairs.emplace("eps_eta", pair_counit_unit(h4, LinMap::identity(4)));
        ws.pairs.emplace("eps_eta_phi", pair_counit_unit(h4, sweedler_phi(Scalar(-1))));
        ws.pairs.emplace("eps_g", sweedler_pair_counit_g(h4));
        GradedYDObject anti = iso_backward(ws.pairs.at("eps_g"), ws.objects.at("adjoint"));
        anti.name = "anti";
        ws.objects.emplace("anti", std::move(anti));
    } else if (name == "cyclic2") {
        BimonadPtr q = preset_cyclic2();
        ws.bimonads.emplace(q->name, q);
        ws.objects.emplace("crossed", cyclic2_crossed_object(q));
        ws.objects.emplace("unit", unit_object(q, "unit"));
        ws.pairs.emplace("eps_eta", pair_counit_unit(q, LinMap::identity(2)));
    } else {
        throw Error(ErrorKind::MalformedInput, "unknown builtin workspace '" + name + "'");
    }
    verify_all(ws);
    return ws;
}

Workspace load_workspace(const std::string& manifest_path) {
    namespace fs = std::filesystem;
    json man = read_json_file(manifest_path);
    fs::path base = fs::path(manifest_path).parent_path();
    Workspace ws;
    ws.name = man.value("name", "workspace");
    add_stock_groups(ws);
    auto paths_of = [&](const char* key) {
        std::vector<std::string> out;
        if (man.contains(key))
            for (const auto& p : man.at(key)) out.push_back((base / p.get<std::string>()).string());
        return out;
    };
    for (const auto& path : paths_of("bimonads")) {
        json j = read_json_file(path);
        try {
            std::string n = j.at("name").get<std::string>();
            int dim = j.at("dim").get<int>();
            LinMap mult = parse_matrix(j.at("mult"), path);
            LinMap unit = parse_matrix(j.at("unit"), path);
            LinMap comult = parse_matrix(j.at("comult"), path);
            LinMap counit = parse_matrix(j.at("counit"), path);
            LinMap lambda;
            if (j.contains("lambda")) {
                lambda = parse_matrix(j.at("lambda"), path);
            } else if (j.value("braided", false)) {
                LinMap i = LinMap::identity(dim);
                lambda = compose(kron(mult, i),
                                 compose(kron(i, LinMap::flip(dim, dim)), kron(comult, i)));
            } else {
                throw Error(ErrorKind::MalformedInput,
                            path + ": needs \"lambda\" or \"braided\": true");
            }
            std::optional<LinMap> antipode;
            if (j.contains("antipode")) antipode = parse_matrix(j.at("antipode"), path);
            ws.bimonads.emplace(
                n, std::make_shared<Bimonad>(n, dim, mult, unit, comult, counit, lambda,
                                             antipode));
        } catch (const json::exception& e) {
            throw Error(ErrorKind::MalformedInput, path + ": " + e.what());
        }
    }
    for (const auto& path : paths_of("automorphisms")) {
        json j = read_json_file(path);
        try {
            ws.automorphisms.emplace(
                j.at("name").get<std::string>(),
                NamedAut{j.at("bimonad").get<std::string>(), parse_matrix(j.at("matrix"), path)});
        } catch (const json::exception& e) {
            throw Error(ErrorKind::MalformedInput, path + ": " + e.what());
        }
    }
    for (const auto& path : paths_of("groups")) {
        json j = read_json_file(path);
        try {
            ws.groups.emplace(j.at("name").get<std::string>(),
                              std::make_shared<FiniteGroup>(FiniteGroup::from_table(
                                  j.at("name").get<std::string>(),
                                  j.at("table").get<std::vector<std::vector<int>>>(),
                                  j.at("unit").get<int>())));
        } catch (const json::exception& e) {
            throw Error(ErrorKind::MalformedInput, path + ": " + e.what());
        }
    }
    for (const auto& path : paths_of("fusions")) {
        json j = read_json_file(path);
        try {
            ws.fusions.emplace(
                j.at("name").get<std::string>(),
                FusionMap::make(ws.group(j.at("source").get<std::string>()),
                                ws.group(j.at("target").get<std::string>()),
                                j.at("images").get<std::vector<int>>()));
        } catch (const json::exception& e) {
            throw Error(ErrorKind::MalformedInput, path + ": " + e.what());
        }
    }
    for (const auto& path : paths_of("objects")) {
        json j = read_json_file(path);
        try {
            GradedYDObject o;
            o.name = j.at("name").get<std::string>();
            o.source = ws.bimonad(j.at("source").get<std::string>());
            o.target = ws.bimonad(j.at("target").get<std::string>());
            o.xdim = j.at("xdim").get<int>();
            o.psi = parse_matrix(j.at("psi"), path);
            o.phi = parse_matrix(j.at("phi"), path);
            o.alpha = ws.aut_matrix(j.at("alpha").get<std::string>(), *o.target);
            o.beta = ws.aut_matrix(j.at("beta").get<std::string>(), *o.source);
            ws.objects.emplace(o.name, std::move(o));
        } catch (const json::exception& e) {
            throw Error(ErrorKind::MalformedInput, path + ": " + e.what());
        }
    }
    for (const auto& path : paths_of("pairs")) {
        json j = read_json_file(path);
        try {
            std::string fusion = j.value("fusion", "identity");
            if (fusion != "identity")
                throw Error(ErrorKind::MalformedInput,
                            path + ": only the identity fusion is supported in pair files");
            BimonadPtr src = ws.bimonad(j.at("bimonad_source").get<std::string>());
            BimonadPtr tgt = ws.bimonad(j.at("bimonad_target").get<std::string>());
            InvolutionPair p{src,
                             tgt,
                             make_character(tgt, parse_matrix(j.at("f"), path)),
                             make_grouplike(tgt, parse_matrix(j.at("g"), path)),
                             ws.aut_matrix(j.at("alpha").get<std::string>(), *tgt),
                             ws.aut_matrix(j.at("beta").get<std::string>(), *src),
                             AutMap::identity()};
            ws.pairs.emplace(j.at("name").get<std::string>(), std::move(p));
        } catch (const json::exception& e) {
            throw Error(ErrorKind::MalformedInput, path + ": " + e.what());
        }
    }
    if (man.contains("systems")) {
        for (const auto& s : man.at("systems")) {
            try {
                std::vector<GroupPtr> gs;
                for (const auto& g : s.at("groups")) gs.push_back(ws.group(g.get<std::string>()));
                std::vector<FusionMap> fs;
                if (s.contains("fusions"))
                    for (const auto& f : s.at("fusions"))
                        fs.push_back(named(ws.fusions, f.get<std::string>(), "fusion"));
                std::string n = s.at("name").get<std::string>();
                ws.systems.emplace(n, GradedGroupSystem(n, gs, fs));
            } catch (const json::exception& e) {
                throw Error(ErrorKind::MalformedInput,
                            manifest_path + ": bad system entry: " + e.what());
            }
        }
    }
    verify_all(ws);
    return ws;
}

void export_workspace(const Workspace& ws, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    json man;
    man["name"] = ws.name;
    auto write_file = [&](const std::string& rel, const json& j) {
        std::ofstream out(fs::path(dir) / rel);
        if (!out) throw Error(ErrorKind::MalformedInput, "cannot write to " + dir + "/" + rel);
        out << j.dump(2) << "\n";
    };
    for (const auto& [n, b] : ws.bimonads) {
        json j;
        j["name"] = n;
        j["dim"] = b->dim;
        j["mult"] = matrix_json(b->mult);
        j["unit"] = matrix_json(b->unit);
        j["comult"] = matrix_json(b->comult);
        j["counit"] = matrix_json(b->counit);
        j["lambda"] = matrix_json(b->lambda);
        if (b->antipode) j["antipode"] = matrix_json(*b->antipode);
        std::string rel = "bimonad_" + n + ".json";
        write_file(rel, j);
        man["bimonads"].push_back(rel);
    }
    for (const auto& [n, a] : ws.automorphisms) {
        json j{{"name", n}, {"bimonad", a.bimonad}, {"matrix", matrix_json(a.matrix)}};
        std::string rel = "automorphism_" + n + ".json";
        write_file(rel, j);
        man["automorphisms"].push_back(rel);
    }
    for (const auto& [n, o] : ws.objects) {
        json j;
        j["name"] = n;
        j["source"] = o.source->name;
        j["target"] = o.target->name;
        j["xdim"] = o.xdim;
        j["psi"] = matrix_json(o.psi);
        j["phi"] = matrix_json(o.phi);
        j["alpha"] = ws.aut_name_of(o.alpha, o.target->name);
        j["beta"] = ws.aut_name_of(o.beta, o.source->name);
        std::string rel = "object_" + n + ".json";
        write_file(rel, j);
        man["objects"].push_back(rel);
    }
    for (const auto& [n, p] : ws.pairs) {
        json j;
        j["name"] = n;
        j["bimonad_source"] = p.source->name;
        j["bimonad_target"] = p.target->name;
        j["f"] = matrix_json(p.f.row);
        j["g"] = matrix_json(p.g.col);
        j["alpha"] = ws.aut_name_of(p.alpha, p.target->name);
        j["beta"] = ws.aut_name_of(p.beta, p.source->name);
        j["fusion"] = "identity";
        std::string rel = "pair_" + n + ".json";
        write_file(rel, j);
        man["pairs"].push_back(rel);
    }
    write_file("manifest.json", man);
}

}  // namespace ydlab
