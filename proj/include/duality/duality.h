#ifndef DUALITY_DUALITY_H
#define DUALITY_DUALITY_H

/* C interface to the duality engine. All analysis runs through two
 * calls: parse a problem description, then run a command on it. Every
 * string returned through an out-parameter is heap-allocated and must
 * be released with dua_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dua_problem dua_problem;

enum dua_status {
    DUA_OK = 0,
    DUA_PARSE_ERROR = 1,      /* malformed problem text */
    DUA_REJECTED = 2,         /* input fails a precondition of the analysis */
    DUA_INVALID_ARGUMENT = 3, /* bad command name or options */
    DUA_INTERNAL_ERROR = 4
};

/* Engine version string; static storage, do not free. */
const char* dua_version(void);

/* Parses a problem description. On success stores a handle in *out and
 * returns DUA_OK. On failure returns DUA_PARSE_ERROR and, if err is
 * non-null, stores a message in *err. */
int dua_problem_parse(const char* text, dua_problem** out, char** err);

void dua_problem_free(dua_problem* problem);

/* Runs a command ("resolve", "dualize", "be-check", "ext", "purity",
 * "cm-check", "noetherian", "membership", "residue", "bezoutian",
 * "oracle-xcheck") with a JSON options object (may be null or empty for
 * defaults). On success stores the JSON report in *report_json. On
 * failure stores a JSON object {"code": ..., "reason": ...} in *err if
 * err is non-null. */
int dua_run(const dua_problem* problem, const char* command,
            const char* options_json, char** report_json, char** err);

void dua_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* DUALITY_DUALITY_H */
