/* Public C interface of the ydlab exact-arithmetic verification library.
 *
 * A session wraps one loaded workspace (a named built-in such as "trivial",
 * "sweedler" or "cyclic2", or the path of a manifest.json).  Commands are
 * dispatched through ydlab_session_run with CLI-style argument vectors; the
 * report text (human-readable, or JSON with --json) is returned through an
 * out-parameter that the caller releases with ydlab_free_string.
 */
#ifndef YDLAB_H
#define YDLAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ydlab_session ydlab_session;

/* Exit statuses returned by ydlab_session_run. */
#define YDLAB_OK 0          /* all checks passed */
#define YDLAB_CHECK_FAILED 1 /* a mathematical check failed; report names it */
#define YDLAB_INPUT_ERROR 2 /* unknown command, bad flag, or malformed input */

/* Opens a session over the given workspace; NULL selects the YDLAB_WORKSPACE
 * environment variable, falling back to the built-in "sweedler" workspace.
 * Returns 0 on success; otherwise returns YDLAB_INPUT_ERROR and (when err is
 * non-NULL) stores a message the caller must free with ydlab_free_string. */
int ydlab_session_open(const char* workspace, ydlab_session** out, char** err);

/* Runs one command (argv[0] is the command name, e.g. "verify-bimonad").
 * Stores the report text in *report_out when non-NULL (caller frees). */
int ydlab_session_run(ydlab_session* s, int argc, const char* const* argv, char** report_out);

void ydlab_session_free(ydlab_session* s);
void ydlab_free_string(char* s);
const char* ydlab_version(void);

#ifdef __cplusplus
}
#endif

#endif /* YDLAB_H */
