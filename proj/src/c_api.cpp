#include "steenrod/steenrod_c.h"

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "steenrod/barratt_eccles.hpp"
#include "steenrod/ops.hpp"
#include "steenrod/parallel.hpp"
#include "steenrod/space_io.hpp"

using namespace steenrod;

struct st_element {
  std::vector<std::pair<std::string, std::int64_t>> terms;
  std::string text;
};

struct st_space {
  Space space;
  std::string geometry;
};

struct st_class {
  CohomologyClass value;
};

namespace {

thread_local std::string g_error;

st_status fail(st_status status, const std::string& message) {
  g_error = message;
  return status;
}

template <class F>
st_status guarded(F&& body) {
  try {
    g_error.clear();
    return body();
  } catch (const ValidationError& e) {
    return fail(ST_ERR_VALIDATION, e.what());
  } catch (const NotCocycleError& e) {
    return fail(ST_ERR_NOT_COCYCLE, e.what());
  } catch (const std::out_of_range& e) {
    return fail(ST_ERR_RANGE, e.what());
  } catch (const std::overflow_error& e) {
    return fail(ST_ERR_OVERFLOW, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(ST_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ST_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ST_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ST_ERR_INTERNAL, "unknown error");
  }
}

template <class Key>
st_element* make_element(const FreeModule<Key>& x) {
  auto e = std::make_unique<st_element>();
  for (const auto& [k, c] : x) e->terms.emplace_back(to_string(k), c);
  e->text = render_compact(x);
  return e.release();
}

#define ST_REQUIRE(cond, what) \
  if (!(cond)) return fail(ST_ERR_ARGUMENT, what)

}  // namespace

extern "C" {

const char* st_version(void) { return "1.0.0"; }

const char* st_last_error(void) { return g_error.c_str(); }

const char* st_status_name(st_status status) {
  switch (status) {
    case ST_OK: return "ok";
    case ST_ERR_ARGUMENT: return "invalid argument";
    case ST_ERR_VALIDATION: return "validation failed";
    case ST_ERR_NOT_COCYCLE: return "not a cocycle";
    case ST_ERR_RANGE: return "out of range";
    case ST_ERR_OVERFLOW: return "integer overflow";
    case ST_ERR_IO: return "i/o error";
    case ST_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void st_set_threads(int threads) { set_thread_count(threads); }

st_status st_psi(const char* family, int r, int n, st_element** out) {
  return guarded([&] {
    ST_REQUIRE(family && out, "st_psi: null argument");
    ST_REQUIRE(r >= 1 && n >= 0, "st_psi: need r >= 1 and n >= 0");
    const std::string f = family;
    if (f == "surjection") *out = make_element(psi_sj(r, n));
    else if (f == "barratt-eccles") *out = make_element(psi_be(r, n));
    else return fail(ST_ERR_ARGUMENT, "unknown family '" + f + "' (expected barratt-eccles or surjection)");
    return ST_OK;
  });
}

size_t st_element_size(const st_element* e) { return e ? e->terms.size() : 0; }

st_status st_element_term(const st_element* e, size_t index, int64_t* coefficient, const char** key) {
  ST_REQUIRE(e && coefficient && key, "st_element_term: null argument");
  if (index >= e->terms.size()) return fail(ST_ERR_RANGE, "st_element_term: index out of range");
  *coefficient = e->terms[index].second;
  *key = e->terms[index].first.c_str();
  return ST_OK;
}

const char* st_element_text(const st_element* e) { return e ? e->text.c_str() : ""; }

void st_element_free(st_element* e) { delete e; }

st_status st_cup(const char* geometry, int n, int64_t prime, int r, int i, const char* chain,
                 const char* const* cochains, size_t count, int64_t* value) {
  return guarded([&] {
    ST_REQUIRE(geometry && chain && value && (cochains || count == 0), "st_cup: null argument");
    ST_REQUIRE(r >= 1 && static_cast<int>(count) == r, "st_cup: need exactly r cochains");
    const auto ctx = OperationContext::make(parse_geometry(geometry), n, prime);
    if (ctx.geometry == Geometry::simplicial) {
      std::vector<SimplexCochain> cs;
      for (size_t k = 0; k < count; ++k) cs.push_back(parse_simplex_chain(cochains[k], ctx.ring));
      *value = cup_r_i<Simplex>(ctx, r, i, cs, parse_simplex_chain(chain, ctx.ring));
    } else {
      std::vector<CubeCochain> cs;
      for (size_t k = 0; k < count; ++k) cs.push_back(parse_cube_chain(cochains[k], ctx.ring));
      *value = cup_r_i<Cube>(ctx, r, i, cs, parse_cube_chain(chain, ctx.ring));
    }
    return ST_OK;
  });
}

st_status st_space_builtin(const char* name, st_space** out) {
  return guarded([&] {
    ST_REQUIRE(name && out, "st_space_builtin: null argument");
    Space s = builtin_space(name);
    const std::string g = to_string(s.geometry());
    *out = new st_space{std::move(s), g};
    return ST_OK;
  });
}

st_status st_space_from_json(const char* text, st_space** out) {
  return guarded([&] {
    ST_REQUIRE(text && out, "st_space_from_json: null argument");
    Space s = parse_space_json(text);
    const std::string g = to_string(s.geometry());
    *out = new st_space{std::move(s), g};
    return ST_OK;
  });
}

void st_space_free(st_space* s) { delete s; }

int st_space_dimension(const st_space* s) { return s ? s->space.dimension() : -1; }

const char* st_space_geometry(const st_space* s) { return s ? s->geometry.c_str() : ""; }

size_t st_space_cell_count(const st_space* s, int degree) { return s ? s->space.cell_count(degree) : 0; }

const char* st_space_cell_name(const st_space* s, int degree, size_t index) {
  if (!s || index >= s->space.cell_count(degree)) return nullptr;
  return s->space.cell_name(degree, static_cast<int>(index)).c_str();
}

st_status st_cohomology_rank(const st_space* s, int64_t prime, int degree, size_t* rank) {
  return guarded([&] {
    ST_REQUIRE(s && rank, "st_cohomology_rank: null argument");
    *rank = CohomologyBasis(s->space, prime, degree).rank();
    return ST_OK;
  });
}

st_status st_class_basis(const st_space* s, int64_t prime, int degree, size_t index, st_class** out) {
  return guarded([&] {
    ST_REQUIRE(s && out, "st_class_basis: null argument");
    *out = new st_class{basis_class(s->space, prime, degree, index)};
    return ST_OK;
  });
}

st_status st_steenrod(const st_space* s, const st_class* in, int power, int bockstein, st_class** out) {
  return guarded([&] {
    ST_REQUIRE(s && in && out, "st_steenrod: null argument");
    *out = new st_class{steenrod_on_class(s->space, in->value.prime, power, bockstein != 0, in->value)};
    return ST_OK;
  });
}

st_status st_cup_classes(const st_space* s, const st_class* a, const st_class* b, st_class** out) {
  return guarded([&] {
    ST_REQUIRE(s && a && b && out, "st_cup_classes: null argument");
    *out = new st_class{cup_classes(s->space, a->value, b->value)};
    return ST_OK;
  });
}

int st_class_degree(const st_class* c) { return c ? c->value.degree : 0; }
int64_t st_class_prime(const st_class* c) { return c ? c->value.prime : 0; }
size_t st_class_rank(const st_class* c) { return c ? c->value.coordinates.size() : 0; }
const int64_t* st_class_coordinates(const st_class* c) { return c ? c->value.coordinates.data() : nullptr; }
size_t st_class_representative_size(const st_class* c) { return c ? c->value.representative.size() : 0; }
const int64_t* st_class_representative(const st_class* c) { return c ? c->value.representative.data() : nullptr; }
void st_class_free(st_class* c) { delete c; }

st_status st_cache_load(const char* dir, size_t* entries) {
  return guarded([&] {
    ST_REQUIRE(dir, "st_cache_load: null argument");
    const size_t n = psi_cache_load(dir);
    if (entries) *entries = n;
    return ST_OK;
  });
}

st_status st_cache_save(const char* dir, size_t* entries) {
  return guarded([&] {
    ST_REQUIRE(dir, "st_cache_save: null argument");
    const size_t n = psi_cache_save(dir);
    if (entries) *entries = n;
    return ST_OK;
  });
}

}  // extern "C"
