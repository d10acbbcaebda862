#pragma once

#include <map>

#include "ydlab/group.hpp"
#include "ydlab/involution.hpp"
#include "ydlab/presets.hpp"

namespace ydlab {

// A named automorphism tied to a bimonad in the registry.
struct NamedAut {
    std::string bimonad;
    LinMap matrix;
};

// Registries of named components.  Every cross-reference resolves by name and
// every invariant is verified eagerly at load time.
struct Workspace {
    std::string name;
    std::map<std::string, BimonadPtr> bimonads;
    std::map<std::string, NamedAut> automorphisms;
    std::map<std::string, GroupPtr> groups;
    std::map<std::string, FusionMap> fusions;
    std::map<std::string, GradedYDObject> objects;
    std::map<std::string, InvolutionPair> pairs;
    std::map<std::string, GradedGroupSystem> systems;

    BimonadPtr bimonad(const std::string& n) const;
    const NamedAut& automorphism(const std::string& n) const;
    // Automorphism matrix for `n` over the given bimonad; "id" always works.
    LinMap aut_matrix(const std::string& n, const Bimonad& b) const;
    GroupPtr group(const std::string& n) const;
    const GradedYDObject& object(const std::string& n) const;
    const InvolutionPair& pair(const std::string& n) const;
    // Name of a registered automorphism equal to the matrix, or its entries.
    std::string aut_name_of(const LinMap& m, const std::string& bimonad_name) const;
};

// Built-in workspaces: "trivial", "sweedler", "cyclic2".  Each also carries
// the stock finite groups (trivial, z2, z6, s3, d4) for the group-axiom
// commands.  Throws Error(MalformedInput) for other names.
Workspace builtin_workspace(const std::string& name);

// Loads a manifest (JSON listing component file paths relative to the
// manifest) and verifies everything eagerly; fails atomically with a message
// naming the offending file and identity.
Workspace load_workspace(const std::string& manifest_path);

// Writes the workspace as a manifest plus one JSON file per component.
void export_workspace(const Workspace& ws, const std::string& dir);

}  // namespace ydlab
