#ifndef W2BLOCKS_H
#define W2BLOCKS_H

/* C interface to the weight-2 block library.
 *
 * Partitions on this interface are literals: comma-separated weakly
 * decreasing positive integers ("3,1"), with "" for the empty partition.
 * Cores use the same syntax.  Every function that produces text allocates
 * the result; release it with w2b_string_free.  On failure the out
 * parameters are untouched and w2b_last_error() describes the problem for
 * the calling thread.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum w2b_status {
  W2B_OK = 0,
  W2B_ERR_INVALID_ARGUMENT = 1,
  W2B_ERR_NOT_FOUND = 2,
  W2B_ERR_UNSUPPORTED = 3,
  W2B_ERR_VERIFICATION = 4,
  W2B_ERR_INTERNAL = 5
} w2b_status;

const char* w2b_status_name(w2b_status s);

/* Message from the most recent failing call on this thread. */
const char* w2b_last_error(void);

void w2b_string_free(char* s);

/* ---------- partition operations ----------
 * format is "text" or "json"; NULL means "text".
 */

/* e-core and e-weight.  text: "[2,1] weight 3"; json: {"core":[2,1],"weight":3} */
w2b_status w2b_partition_core(const char* partition, int e, const char* format,
                              char** out);
w2b_status w2b_partition_weight(const char* partition, int e, int* out_weight);
/* (-1)^(number of e-hooks with odd leg removed on the way to the core) */
w2b_status w2b_partition_sign(const char* partition, int e, int* out_sign);
/* Output "[2,1,1]" is both the text and the JSON rendering. */
w2b_status w2b_partition_conjugate(const char* partition, char** out);

/* ---------- block handles ----------
 * A handle wraps one weight-2 block: e >= 2 and an e-core.  Opening fails
 * with W2B_ERR_INVALID_ARGUMENT if core is not an e-core.  Handles are
 * immutable and may be shared across threads; close them once.
 */

typedef struct w2b_block w2b_block;

w2b_status w2b_block_open(int e, const char* core, w2b_block** out);
/* Open the block containing the given partition; W2B_ERR_UNSUPPORTED if its
 * e-weight is not 2. */
w2b_status w2b_block_open_of(const char* partition, int e, w2b_block** out);
void w2b_block_close(w2b_block* b);

/* {"e":2,"core":[],"weight":2} */
w2b_status w2b_block_info(const w2b_block* b, char** out_json);

/* Members in descending lexicographic order.  formats: json, text */
w2b_status w2b_block_partitions(const w2b_block* b, const char* format, char** out);

/* Abacus label of a member, e.g. {"a":1,"b":1,"partial":1,"eps":1}; the
 * colour field appears only for labels of class 0.  The partition must lie
 * in the block (W2B_ERR_NOT_FOUND otherwise). */
w2b_status w2b_block_label(const w2b_block* b, const char* partition, char** out_json);

/* Mullineux image of a regular member, as a partition literal in brackets. */
w2b_status w2b_block_mullineux(const w2b_block* b, const char* partition, char** out);

/* kind: "d"       integer decomposition matrix
 *       "dv"      v-decomposition matrix
 *       "inverse" inverse decomposition matrix
 *       "cartan"  Cartan matrix
 *       "ac"      Alvis-Curtis matrix (columns indexed by the conjugate block)
 * p: only meaningful for kind "d"; -1 selects the closed formula (default
 * path), 0 the generic sum-formula reconstruction, an odd prime the
 * characteristic-p reconstruction.  p = 2 is unsupported.
 * formats: json, csv, text */
w2b_status w2b_block_matrix(const w2b_block* b, const char* kind, long long p,
                            const char* format, char** out);

/* Edges pair partitions of opposite sign.  formats: json, text, dot */
w2b_status w2b_block_ext_quiver(const w2b_block* b, const char* format, char** out);

/* Radical layers of the Weyl module labelled by a member: layer k lists the
 * columns whose v-decomposition entry is v^k.  formats: json, text */
w2b_status w2b_block_layers(const w2b_block* b, const char* partition,
                            const char* format, char** out);

/* The e+1 dominance classes ("d0b", "d0w", "d1", ...).  formats: json, text */
w2b_status w2b_block_richards(const w2b_block* b, const char* format, char** out);

/* [2:k]-pairs with this block on the large side; for k = 1 the exceptional
 * triples are included.  formats: json, text */
w2b_status w2b_block_pairs(const w2b_block* b, const char* format, char** out);

/* Shortest chain of [2:k]-pairs from this block up to a Rouquier block.
 * formats: json, text */
w2b_status w2b_block_chain(const w2b_block* b, const char* format, char** out);

/* ---------- verification sweep ----------
 * config_json: optional JSON object with any of e_range, max_core_size,
 * p_values, checks, threads; NULL or "" selects the default sweep.  The
 * report is always written on a completed sweep.  Returns W2B_OK when every
 * check passes and W2B_ERR_VERIFICATION when some check fails; other codes
 * mean the sweep never ran.  formats: json, text */
w2b_status w2b_verify(const char* config_json, const char* format, char** out_report,
                      int* out_all_passed);

#ifdef __cplusplus
}
#endif

#endif /* W2BLOCKS_H */
