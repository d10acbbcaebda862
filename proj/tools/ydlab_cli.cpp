// Command-line front end: thin wrapper over the public C API.  The only
// argument handled here is --workspace (and the YDLAB_WORKSPACE environment
// fallback inside the library); everything else is passed through.
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "ydlab.h"

namespace {

void usage(std::FILE* to) {
    std::fprintf(to,
                 "usage: ydlab <command> [--workspace NAME_OR_MANIFEST] [--json] [--seed N] "
                 "[args]\n"
                 "commands: verify-bimonad verify-aut group-axioms verify-yd classify compose\n"
                 "          twist phi-laws involution-check iso tau-build export-workspace\n"
                 "workspaces: trivial, sweedler, cyclic2, or a manifest.json path\n");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        usage(stderr);
        return YDLAB_INPUT_ERROR;
    }
    std::string first = argv[1];
    if (first == "--help" || first == "-h" || first == "help") {
        usage(stdout);
        return YDLAB_OK;
    }
    if (first == "--version") {
        std::printf("ydlab %s\n", ydlab_version());
        return YDLAB_OK;
    }

    const char* workspace = nullptr;
    std::vector<const char*> pass;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--workspace") == 0) {
            if (i + 1 >= argc) {
                std::fprintf(stderr, "error: --workspace needs a value\n");
                return YDLAB_INPUT_ERROR;
            }
            workspace = argv[++i];
        } else {
            pass.push_back(argv[i]);
        }
    }

    ydlab_session* session = nullptr;
    char* err = nullptr;
    if (ydlab_session_open(workspace, &session, &err) != YDLAB_OK) {
        std::fprintf(stderr, "error: %s\n", err ? err : "cannot open workspace");
        ydlab_free_string(err);
        return YDLAB_INPUT_ERROR;
    }

    char* report = nullptr;
    int status = ydlab_session_run(session, static_cast<int>(pass.size()), pass.data(), &report);
    if (report) {
        std::fputs(report, stdout);
        ydlab_free_string(report);
    }
    ydlab_session_free(session);
    return status;
}
