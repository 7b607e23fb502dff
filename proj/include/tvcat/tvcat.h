/* SPDX-License-Identifier: Apache-2.0 */
#ifndef TVCAT_TVCAT_H
#define TVCAT_TVCAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(TVCAT_BUILDING_LIBRARY)
#define TVCAT_API __attribute__((visibility("default")))
#else
#define TVCAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tvcat_status {
  TVCAT_OK = 0,
  TVCAT_CHECK_FAILED = 1,     /* the report carries a witness */
  TVCAT_ERR_FORMAT = 2,       /* unreadable file, malformed JSON, unknown label */
  TVCAT_ERR_GUARD = 3,        /* a size guard refused the computation */
  TVCAT_ERR_ARGUMENT = 4,     /* precondition violated */
  TVCAT_ERR_NOT_SEPARATED = 5,
  TVCAT_ERR_NOT_TRANSITIVE = 6,
  TVCAT_ERR_INTERNAL = 7
} tvcat_status;

typedef struct tvcat_quantale tvcat_quantale;
typedef struct tvcat_theory tvcat_theory;
typedef struct tvcat_category tvcat_category;

typedef struct tvcat_options {
  uint64_t seed;
  uint64_t guard;   /* 0 selects the default (TVCAT_GUARD_SIZE or 2000000) */
  int max_word_len; /* bound for word monads given without one */
} tvcat_options;

TVCAT_API void tvcat_options_init(tvcat_options* opts);

/* Message of the last error on this thread; empty after success. */
TVCAT_API const char* tvcat_last_error(void);
/* Every char* returned through an out-parameter is released with this. */
TVCAT_API void tvcat_string_free(char* s);
TVCAT_API const char* tvcat_version(void);

/* Renders a JSON report as indented text. */
TVCAT_API tvcat_status tvcat_report_to_text(const char* report_json, char** out);

/* Quantales: a builtin name ("two", "luk3", "godel3", "trunc3", "powerset2")
   or a path to a quantale file. */
TVCAT_API tvcat_status tvcat_quantale_load(const char* name_or_path, tvcat_quantale** out);
TVCAT_API void tvcat_quantale_free(tvcat_quantale* q);
TVCAT_API tvcat_status tvcat_quantale_to_json(const tvcat_quantale* q, char** out);
/* Quantale laws and the injectivity condition. */
TVCAT_API tvcat_status tvcat_quantale_check(const tvcat_quantale* q, char** report);
/* Every commutative quantale on the n-chain, tested for the condition. */
TVCAT_API tvcat_status tvcat_quantale_search_cond2(size_t n, const tvcat_options* opts, char** report);

/* Monad laws and Beck-Chevalley samples. `monad` is a spec string such as
   "word:2" or a JSON monad fragment. */
TVCAT_API tvcat_status tvcat_monad_check(const char* monad, size_t carrier, const tvcat_options* opts,
                                         char** report);

TVCAT_API tvcat_status tvcat_theory_new(const tvcat_quantale* q, const char* monad, const tvcat_options* opts,
                                        tvcat_theory** out);
TVCAT_API void tvcat_theory_free(tvcat_theory* th);
TVCAT_API tvcat_status tvcat_theory_check_assumptions(const tvcat_theory* th, const tvcat_options* opts,
                                                      char** report);

TVCAT_API tvcat_status tvcat_category_load(const char* path, const tvcat_options* opts, tvcat_category** out);
TVCAT_API void tvcat_category_free(tvcat_category* c);
TVCAT_API size_t tvcat_category_size(const tvcat_category* c);
TVCAT_API tvcat_status tvcat_category_to_json(const tvcat_category* c, char** out);
/* Named checks: category, separated, exponentiable, frame_criterion,
   reflection, assumptions, yoneda, px_category, px_separated, px_injective,
   injective, representable, calculus, injective_implies_exponentiable. */
TVCAT_API tvcat_status tvcat_category_check(const tvcat_category* c, const char* check, const tvcat_options* opts,
                                            char** report);
TVCAT_API tvcat_status tvcat_category_product(const tvcat_category* x, const tvcat_category* y, tvcat_category** out);
TVCAT_API tvcat_status tvcat_category_tensor(const tvcat_category* x, const tvcat_category* y, tvcat_category** out);
TVCAT_API tvcat_status tvcat_category_coproduct(const tvcat_category* x, const tvcat_category* y,
                                                tvcat_category** out);
/* The separated reflection; the report checks eta and idempotence. */
TVCAT_API tvcat_status tvcat_category_reflect(const tvcat_category* x, tvcat_category** out, char** report);
TVCAT_API tvcat_status tvcat_category_dual(const tvcat_category* x, tvcat_category** out);

/* Exponential <X,Y> in the category of (T,V)-categories. TVCAT_CHECK_FAILED
   when the graph structure is not transitive; the report names the triple. */
TVCAT_API tvcat_status tvcat_exp_build(const tvcat_category* x, const tvcat_category* y, const tvcat_options* opts,
                                       tvcat_category** out, char** report);
/* Exponentiability of X, with the frame criterion when V is a frame. */
TVCAT_API tvcat_status tvcat_exp_criterion(const tvcat_category* x, char** report);
/* f : C x X -> Y given as a JSON object {"c;x": "y", ...} is curried into
   C -> <X,Y>. With f_json NULL the universal property is checked for every
   functor C x X -> Y, uniqueness included. */
TVCAT_API tvcat_status tvcat_exp_curry(const tvcat_category* c, const tvcat_category* x, const tvcat_category* y,
                                       const char* f_json, const tvcat_options* opts, char** report);

TVCAT_API tvcat_status tvcat_psh_build(const tvcat_category* x, const tvcat_options* opts, tvcat_category** out,
                                       char** report);
TVCAT_API tvcat_status tvcat_psh_yoneda(const tvcat_category* x, const tvcat_options* opts, char** report);
TVCAT_API tvcat_status tvcat_psh_injective(const tvcat_category* x, const tvcat_options* opts, char** report);
/* Weak factorization of f : Z x X -> Y ({"z;x": "y"}) through the weak
   exponential. With f_json NULL every functor Z x X -> Y is factored. */
TVCAT_API tvcat_status tvcat_psh_weak_exp(const tvcat_category* z, const tvcat_category* x, const tvcat_category* y,
                                          const char* f_json, const tvcat_options* opts, char** report);

/* Runs the gallery manifest. */
TVCAT_API tvcat_status tvcat_gallery_run(const char* manifest, const tvcat_options* opts, char** report);

/* Re-evaluates the witness tuple of a failure report. Any of q, th, c may be
   NULL when the law does not need it. */
TVCAT_API tvcat_status tvcat_replay(const char* report_json, const tvcat_quantale* q, const tvcat_theory* th,
                                    const tvcat_category* c, char** report);

#ifdef __cplusplus
}
#endif

#endif
