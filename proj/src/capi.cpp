#include "rslink/rslink.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "rslink/equiv.hpp"
#include "rslink/gs.hpp"
#include "rslink/mgs.hpp"
#include "rslink/montecarlo.hpp"
#include "rslink/textio.hpp"
#include "rslink/virs.hpp"
#include "rslink/wb.hpp"

using namespace rslink;

struct rsl_field {
  Field f;
};
struct rsl_code {
  CodeSpec spec;
};
struct rsl_word {
  Word w;
};
struct rsl_outcome {
  DecodeOutcome o;
  std::string failure;
};
struct rsl_bipoly {
  BiPoly q;
};
struct rsl_matrix {
  Mat m;
};
struct rsl_text {
  WordText t;
};

namespace {

thread_local std::string g_last_error;

rsl_status fail(rsl_status st, const char* msg) {
  g_last_error = msg;
  return st;
}

rsl_status map_errc(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return RSL_ERR_INVALID_ARGUMENT;
    case Errc::division_by_zero: return RSL_ERR_DIVISION_BY_ZERO;
    case Errc::field_mismatch: return RSL_ERR_FIELD_MISMATCH;
    case Errc::parse_error: return RSL_ERR_PARSE;
  }
  return RSL_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <class F>
rsl_status guarded(F&& body) {
  try {
    body();
    return RSL_OK;
  } catch (const Error& e) {
    return fail(map_errc(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RSL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RSL_ERR_INTERNAL, e.what());
  }
}

#define RSL_REQUIRE(cond)                                                   \
  do {                                                                      \
    if (!(cond)) return fail(RSL_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rsl_outcome* wrap(DecodeOutcome o) {
  auto* h = new rsl_outcome{std::move(o), {}};
  h->failure = h->o.success ? "" : to_string(h->o.failure);
  return h;
}

}  // namespace

extern "C" {

const char* rsl_version(void) { return "1.0.0"; }

const char* rsl_last_error(void) { return g_last_error.c_str(); }

const char* rsl_status_string(rsl_status status) {
  switch (status) {
    case RSL_OK: return "ok";
    case RSL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RSL_ERR_DIVISION_BY_ZERO: return "division by zero";
    case RSL_ERR_FIELD_MISMATCH: return "field mismatch";
    case RSL_ERR_PARSE: return "parse error";
    case RSL_ERR_NO_SOLUTION: return "no solution";
    case RSL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void rsl_string_free(char* s) { std::free(s); }

rsl_status rsl_field_new(uint32_t q, uint32_t alpha, rsl_field** out) {
  RSL_REQUIRE(out);
  return guarded([&] {
    *out = new rsl_field{Field(q, alpha ? std::optional<std::uint32_t>(alpha) : std::nullopt)};
  });
}

void rsl_field_free(rsl_field* f) { delete f; }
uint32_t rsl_field_q(const rsl_field* f) { return f ? f->f.q() : 0; }
uint32_t rsl_field_primitive(const rsl_field* f) { return f ? f->f.primitive_residue() : 0; }

rsl_status rsl_field_inverse(const rsl_field* f, uint32_t a, uint32_t* out) {
  RSL_REQUIRE(f && out);
  return guarded([&] { *out = f->f.elem(a).inverse().value(); });
}

rsl_status rsl_code_new(const rsl_field* f, size_t n, size_t k, const uint32_t* locators,
                        rsl_code** out) {
  RSL_REQUIRE(f && out);
  return guarded([&] {
    if (locators)
      *out = new rsl_code{CodeSpec(f->f, k, std::vector<std::uint32_t>(locators, locators + n))};
    else
      *out = new rsl_code{CodeSpec(f->f, n, k)};
  });
}

void rsl_code_free(rsl_code* c) { delete c; }
size_t rsl_code_n(const rsl_code* c) { return c ? c->spec.n() : 0; }
size_t rsl_code_k(const rsl_code* c) { return c ? c->spec.k() : 0; }
const uint32_t* rsl_code_locators(const rsl_code* c) {
  return c ? c->spec.locators().data() : nullptr;
}

rsl_status rsl_word_new(const rsl_field* f, const uint32_t* symbols, size_t len, rsl_word** out) {
  RSL_REQUIRE(f && out && (symbols || len == 0));
  return guarded([&] {
    Word w{f->f, std::vector<std::uint32_t>(symbols, symbols + len), WordRole::received};
    for (auto v : w.symbols)
      if (v >= f->f.q()) throw Error(Errc::invalid_argument, "symbol is not a residue");
    *out = new rsl_word{std::move(w)};
  });
}

void rsl_word_free(rsl_word* w) { delete w; }
size_t rsl_word_length(const rsl_word* w) { return w ? w->w.size() : 0; }
const uint32_t* rsl_word_data(const rsl_word* w) { return w ? w->w.symbols.data() : nullptr; }

rsl_status rsl_encode(const rsl_code* c, const uint32_t* f, size_t f_len, rsl_word** out) {
  RSL_REQUIRE(c && out && (f || f_len == 0));
  return guarded([&] {
    const UniPoly p(c->spec.field(), std::vector<std::uint32_t>(f, f + f_len));
    *out = new rsl_word{encode(c->spec, p)};
  });
}

rsl_status rsl_corrupt(const rsl_word* c, const rsl_word* e, rsl_word** out) {
  RSL_REQUIRE(c && e && out);
  return guarded([&] { *out = new rsl_word{corrupt(c->w, e->w)}; });
}

rsl_status rsl_power_word(const rsl_word* w, unsigned i, rsl_word** out) {
  RSL_REQUIRE(w && out);
  return guarded([&] { *out = new rsl_word{power_word(w->w, i)}; });
}

rsl_status rsl_random_error(const rsl_field* f, size_t n, size_t weight, uint64_t seed,
                            rsl_word** out) {
  RSL_REQUIRE(f && out);
  return guarded([&] { *out = new rsl_word{random_error(f->f, n, weight, seed)}; });
}

rsl_status rsl_hamming_distance(const rsl_word* a, const rsl_word* b, size_t* out) {
  RSL_REQUIRE(a && b && out);
  return guarded([&] { *out = hamming_distance(a->w, b->w); });
}

rsl_status rsl_text_parse(const char* text, rsl_text** out) {
  RSL_REQUIRE(text && out);
  return guarded([&] { *out = new rsl_text{parse_word_text(text)}; });
}

void rsl_text_free(rsl_text* t) { delete t; }
uint32_t rsl_text_q(const rsl_text* t) { return t ? t->t.q : 0; }
size_t rsl_text_length(const rsl_text* t) { return t ? t->t.values.size() : 0; }
const uint32_t* rsl_text_values(const rsl_text* t) { return t ? t->t.values.data() : nullptr; }

const char* rsl_text_meta(const rsl_text* t, const char* key) {
  if (!t || !key) return nullptr;
  const auto it = t->t.meta.find(key);
  return it == t->t.meta.end() ? nullptr : it->second.c_str();
}

rsl_status rsl_text_format(uint32_t q, const uint32_t* values, size_t len, const char* meta,
                           char** out) {
  RSL_REQUIRE(out && (values || len == 0));
  return guarded([&] {
    WordText w;
    w.q = q;
    w.values.assign(values, values + len);
    if (meta) {
      // Round-trip through the parser's meta syntax.
      const WordText parsed = parse_word_text(std::string("# rslink ") + meta + "\n2\n");
      w.meta = parsed.meta;
    }
    *out = dup_string(format_word_text(w));
  });
}

rsl_status rsl_wb_radius(size_t n, size_t k, size_t* out) {
  RSL_REQUIRE(out);
  return guarded([&] { *out = wb_radius(n, k); });
}

rsl_status rsl_virs_radius(size_t n, size_t k, size_t s, size_t* out) {
  RSL_REQUIRE(out);
  return guarded([&] { *out = virs_radius(n, k, s); });
}

rsl_status rsl_decode(const rsl_code* c, const rsl_word* r, rsl_method method, size_t s,
                      rsl_outcome** out) {
  RSL_REQUIRE(c && r && out);
  return guarded([&] {
    switch (method) {
      case RSL_METHOD_WB: *out = wrap(wb_decode(c->spec, r->w)); return;
      case RSL_METHOD_VIRS: *out = wrap(virs_decode(c->spec, r->w, s)); return;
      case RSL_METHOD_MGS: *out = wrap(mgs_decode(c->spec, r->w, s)); return;
    }
    throw Error(Errc::invalid_argument, "unknown decoding method");
  });
}

rsl_status rsl_decode_gs(const rsl_code* c, const rsl_word* r, size_t s, size_t tau,
                         rsl_outcome** out) {
  RSL_REQUIRE(c && r && out);
  return guarded([&] {
    const GsParams p{c->spec.n(), c->spec.k(), 1, s, tau};
    *out = wrap(gs_decode(c->spec, r->w, p));
  });
}

void rsl_outcome_free(rsl_outcome* o) { delete o; }
int rsl_outcome_success(const rsl_outcome* o) { return o && o->o.success ? 1 : 0; }
const char* rsl_outcome_failure(const rsl_outcome* o) { return o ? o->failure.c_str() : ""; }
size_t rsl_outcome_radius(const rsl_outcome* o) { return o ? o->o.radius : 0; }
size_t rsl_outcome_nullspace_dim(const rsl_outcome* o) { return o ? o->o.nullspace_dim : 0; }

const uint32_t* rsl_outcome_info(const rsl_outcome* o, size_t* len) {
  if (len) *len = o ? o->o.info.coeffs().size() : 0;
  return o ? o->o.info.coeffs().data() : nullptr;
}

const uint32_t* rsl_outcome_locator(const rsl_outcome* o, size_t* len) {
  if (len) *len = o ? o->o.locator.coeffs().size() : 0;
  return o ? o->o.locator.coeffs().data() : nullptr;
}

const uint32_t* rsl_outcome_corrected(const rsl_outcome* o, size_t* len) {
  if (len) *len = o ? o->o.corrected.symbols.size() : 0;
  return o ? o->o.corrected.symbols.data() : nullptr;
}

const size_t* rsl_outcome_error_positions(const rsl_outcome* o, size_t* len) {
  if (len) *len = o ? o->o.error_positions.size() : 0;
  return o ? o->o.error_positions.data() : nullptr;
}

rsl_status rsl_gs_count(size_t n, size_t k, size_t ell, size_t s, size_t tau, int* valid,
                        size_t* unknowns, size_t* constraints) {
  return guarded([&] {
    const GsCount c = gs_params_valid({n, k, ell, s, tau});
    if (valid) *valid = c.valid ? 1 : 0;
    if (unknowns) *unknowns = c.unknowns;
    if (constraints) *constraints = c.constraints;
  });
}

rsl_status rsl_gs_interpolate(const rsl_code* c, const rsl_word* r, size_t ell, size_t s,
                              size_t tau, rsl_bipoly** out) {
  RSL_REQUIRE(c && r && out);
  return guarded([&] {
    *out = new rsl_bipoly{gs_interpolate(c->spec, r->w, {c->spec.n(), c->spec.k(), ell, s, tau})};
  });
}

rsl_status rsl_key_equation_check(const rsl_bipoly* q, const rsl_code* c, const rsl_word* r,
                                  size_t ell, size_t s, size_t tau, int* holds) {
  RSL_REQUIRE(q && c && r && holds);
  return guarded([&] {
    *holds = key_equation_check(q->q, c->spec, r->w, {c->spec.n(), c->spec.k(), ell, s, tau}) ? 1 : 0;
  });
}

rsl_status rsl_mgs_interpolate(const rsl_code* c, const rsl_word* r, size_t s, rsl_bipoly** out) {
  RSL_REQUIRE(c && r && out);
  *out = nullptr;
  const rsl_status st = guarded([&] {
    auto q = mgs_interpolate(c->spec, r->w, s);
    if (q) *out = new rsl_bipoly{std::move(*q)};
  });
  if (st == RSL_OK && !*out) return fail(RSL_ERR_NO_SOLUTION, "interpolation system has no usable solution");
  return st;
}

void rsl_bipoly_free(rsl_bipoly* q) { delete q; }

int rsl_bipoly_ydeg(const rsl_bipoly* q) {
  return !q || q->q.is_zero() ? -1 : q->q.ydeg();
}

const uint32_t* rsl_bipoly_component(const rsl_bipoly* q, size_t t, size_t* len) {
  if (!q || t >= q->q.components().size()) {
    if (len) *len = 0;
    return nullptr;
  }
  const auto c = q->q.components()[t].coeffs();
  if (len) *len = c.size();
  return c.data();
}

rsl_status rsl_multiplicity_at(const rsl_bipoly* q, uint32_t x0, uint32_t y0, unsigned* out) {
  RSL_REQUIRE(q && out);
  return guarded([&] {
    const Field& f = q->q.field();
    *out = multiplicity_at(q->q, f.elem(x0).value(), f.elem(y0).value());
  });
}

rsl_status rsl_build_matrix(const rsl_code* c, const rsl_word* r, rsl_matrix_kind kind, size_t s,
                            size_t tau, rsl_matrix** out) {
  RSL_REQUIRE(c && r && out);
  return guarded([&] {
    switch (kind) {
      case RSL_MATRIX_WB: *out = new rsl_matrix{wb_build(c->spec, r->w).matrix}; return;
      case RSL_MATRIX_A: *out = new rsl_matrix{build_A(c->spec, r->w, s, tau)}; return;
      case RSL_MATRIX_BBAR: *out = new rsl_matrix{build_Bbar(c->spec, r->w, s, tau).matrix}; return;
      case RSL_MATRIX_B: *out = new rsl_matrix{build_B(c->spec, r->w, s, tau)}; return;
    }
    throw Error(Errc::invalid_argument, "unknown matrix kind");
  });
}

void rsl_matrix_free(rsl_matrix* m) { delete m; }
size_t rsl_matrix_rows(const rsl_matrix* m) { return m ? m->m.rows() : 0; }
size_t rsl_matrix_cols(const rsl_matrix* m) { return m ? m->m.cols() : 0; }
const uint32_t* rsl_matrix_data(const rsl_matrix* m) {
  return m && m->m.rows() ? m->m.row(0).data() : nullptr;
}
size_t rsl_matrix_rank(const rsl_matrix* m) { return m ? rank(m->m) : 0; }

rsl_status rsl_equivalence(const rsl_code* c, const rsl_word* r, size_t s, size_t tau,
                           rsl_equiv_result* out) {
  RSL_REQUIRE(c && r && out);
  return guarded([&] {
    const Mat a = build_A(c->spec, r->w, s, tau);
    const MgsSystem bbar = build_Bbar(c->spec, r->w, s, tau);
    const auto d = scaling_map(s, c->spec.field());
    if (!d.invertible()) throw Error(Errc::invalid_argument, "scaling map is singular: q divides some C(s, t)");
    const auto rep = nullspace_equivalence(a, bbar.matrix, d, bbar.params.block_lengths());
    out->equivalent = rep.equivalent ? 1 : 0;
    out->row_spaces_equal = rep.row_spaces_equal ? 1 : 0;
    out->dim_a = rep.dim_a;
    out->dim_bbar = rep.dim_bbar;
    out->rank_a = rep.rank_a;
    out->rank_bbar = rep.rank_bbar;
  });
}

rsl_status rsl_montecarlo(const rsl_mc_config* cfg, char** csv_out) {
  RSL_REQUIRE(cfg && csv_out && (cfg->weights || cfg->num_weights == 0));
  return guarded([&] {
    ExperimentConfig c;
    c.q = cfg->q;
    if (cfg->alpha) c.alpha = cfg->alpha;
    c.n = cfg->n;
    c.k = cfg->k;
    c.s = cfg->s;
    c.weights.assign(cfg->weights, cfg->weights + cfg->num_weights);
    c.trials = cfg->trials;
    c.seed = cfg->seed;
    for (auto m : {Method::wb, Method::virs, Method::mgs})
      if (cfg->methods & RSL_METHOD_BIT(static_cast<unsigned>(m))) c.methods.push_back(m);
    c.threads = cfg->threads;
    *csv_out = dup_string(run_montecarlo(c));
  });
}

}  // extern "C"
