#include "unrep/unrep.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "unrep/engine.hpp"
#include "unrep/report.hpp"

struct unrep_semigroup {
  unrep::TransSemigroup s;
};

struct unrep_list {
  std::vector<unrep::UnrepMap> maps;
};

namespace {

thread_local std::string last_error;

unrep_status record(unrep_status st, std::string msg) {
  last_error = std::move(msg);
  return st;
}

// Runs f, mapping exceptions to status codes.
template <class F>
unrep_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const unrep::Error& e) {
    return record(static_cast<unrep_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(UNREP_E_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return record(UNREP_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) {
    std::memcpy(p, s.c_str(), s.size() + 1);
  }
  return p;
}

unrep::Strategy to_strategy(unrep_strategy s) {
  switch (s) {
    case UNREP_STRATEGY_AUTO: return unrep::Strategy::automatic;
    case UNREP_STRATEGY_BACKTRACK: return unrep::Strategy::backtrack;
    case UNREP_STRATEGY_MONOID: return unrep::Strategy::monoid;
    case UNREP_STRATEGY_IDEMPOTENT: return unrep::Strategy::idempotent;
    case UNREP_STRATEGY_BRUTEFORCE: return unrep::Strategy::bruteforce;
  }
  throw unrep::InputError("cli", "unknown strategy");
}

}  // namespace

extern "C" {

void unrep_options_init(unrep_options* opts) {
  if (opts) {
    *opts = unrep_options{0, 1, -1, 0, 0, 0};
  }
}

const char* unrep_last_error(void) { return last_error.c_str(); }

const char* unrep_status_string(unrep_status s) {
  switch (s) {
    case UNREP_OK: return "ok";
    case UNREP_E_INPUT: return "input";
    case UNREP_E_CAPACITY: return "capacity";
    case UNREP_E_THEOREM: return "theorem_violation";
    case UNREP_E_INTERNAL: return "internal";
  }
  return "unknown";
}

unrep_status unrep_semigroup_from_generators(const uint32_t* gens, size_t count,
                                             size_t degree, size_t cap,
                                             unrep_semigroup** out) {
  return guarded([&] {
    if (!out || (!gens && count > 0)) {
      return record(UNREP_E_INPUT, "null argument");
    }
    std::vector<unrep::Transformation> g;
    for (size_t i = 0; i < count; ++i) {
      g.emplace_back(std::vector<unrep::point_t>(gens + i * degree,
                                                 gens + (i + 1) * degree));
    }
    auto s = unrep::closure(g, cap ? cap : unrep::default_closure_cap);
    *out = new unrep_semigroup{std::move(s)};
    return UNREP_OK;
  });
}

unrep_status unrep_semigroup_from_table(const uint32_t* table, size_t order,
                                        unrep_semigroup** out) {
  return guarded([&] {
    if (!out || !table) {
      return record(UNREP_E_INPUT, "null argument");
    }
    std::vector<std::vector<unrep::index_t>> raw(order);
    for (size_t x = 0; x < order; ++x) {
      raw[x].assign(table + x * order, table + (x + 1) * order);
    }
    auto rep = unrep::represent(unrep::validate_table(raw));
    *out = new unrep_semigroup{std::move(rep.semigroup)};
    return UNREP_OK;
  });
}

unrep_status unrep_semigroup_from_json(const char* json, size_t cap,
                                       unrep_semigroup** out) {
  return guarded([&] {
    if (!out || !json) {
      return record(UNREP_E_INPUT, "null argument");
    }
    auto doc = unrep::report::parse_input(json);
    if (doc.table) {
      *out = new unrep_semigroup{unrep::represent(*doc.table).semigroup};
    } else {
      *out = new unrep_semigroup{
          unrep::closure(doc.generators, cap ? cap : unrep::default_closure_cap)};
    }
    return UNREP_OK;
  });
}

void unrep_semigroup_free(unrep_semigroup* s) { delete s; }

size_t unrep_semigroup_size(const unrep_semigroup* s) { return s ? s->s.size() : 0; }

size_t unrep_semigroup_degree(const unrep_semigroup* s) {
  return s ? s->s.degree() : 0;
}

unrep_status unrep_semigroup_element(const unrep_semigroup* s, size_t i,
                                     uint32_t* out) {
  return guarded([&] {
    if (!s || !out) {
      return record(UNREP_E_INPUT, "null argument");
    }
    if (i >= s->s.size()) {
      return record(UNREP_E_INPUT, "element index out of range");
    }
    auto im = s->s.element(static_cast<unrep::index_t>(i)).images();
    std::copy(im.begin(), im.end(), out);
    return UNREP_OK;
  });
}

unrep_status unrep_classify(const unrep_semigroup* s, unrep_classification* out) {
  return guarded([&] {
    if (!s || !out) {
      return record(UNREP_E_INPUT, "null argument");
    }
    auto c = unrep::classify(s->s);
    out->size = c.size;
    out->degree = c.degree;
    out->is_monoid = c.is_monoid;
    out->identity = c.identity ? static_cast<int64_t>(*c.identity) : -1;
    out->is_group = c.is_group;
    out->is_regular = c.is_regular;
    out->is_inverse = c.is_inverse;
    out->is_clifford = c.is_clifford;
    out->is_left_zero = c.is_left_zero;
    out->idempotent_count = c.idempotents.size();
    return UNREP_OK;
  });
}

unrep_status unrep_enumerate(const unrep_semigroup* s, unrep_strategy strategy,
                             unsigned jobs, unrep_list** out) {
  return guarded([&] {
    if (!s || !out) {
      return record(UNREP_E_INPUT, "null argument");
    }
    unrep::EnumerateOptions opts;
    opts.strategy = to_strategy(strategy);
    opts.jobs = jobs ? jobs : 1;
    *out = new unrep_list{unrep::enumerate_unrep_maps(s->s, opts)};
    return UNREP_OK;
  });
}

size_t unrep_list_count(const unrep_list* l) { return l ? l->maps.size() : 0; }

unrep_status unrep_list_phi(const unrep_list* l, size_t k, uint32_t* out) {
  return guarded([&] {
    if (!l || !out) {
      return record(UNREP_E_INPUT, "null argument");
    }
    if (k >= l->maps.size()) {
      return record(UNREP_E_INPUT, "unrepresentation index out of range");
    }
    const auto& phi = l->maps[k].phi();
    std::copy(phi.begin(), phi.end(), out);
    return UNREP_OK;
  });
}

void unrep_list_free(unrep_list* l) { delete l; }

unrep_status unrep_run(const char* command, const char* input_json,
                       const unrep_options* opts, char** out) {
  namespace r = unrep::report;
  if (!out) {
    return record(UNREP_E_INPUT, "null argument");
  }
  *out = nullptr;
  unrep_options o;
  unrep_options_init(&o);
  if (opts) {
    o = *opts;
  }
  r::Json doc;
  unrep_status st = UNREP_OK;
  last_error.clear();
  try {
    if (!command || !input_json) {
      throw unrep::InputError("cli", "null argument");
    }
    r::RunOptions ro;
    ro.oracle = o.oracle != 0;
    ro.jobs = o.jobs ? o.jobs : 1;
    if (o.identity >= 0) {
      ro.identity = static_cast<size_t>(o.identity);
    }
    if (o.cap) {
      ro.cap = o.cap;
    }
    ro.seed = o.seed;
    auto res = r::run(command, r::parse_input(input_json), ro);
    doc = std::move(res.report);
    if (res.status != 0) {
      st = record(static_cast<unrep_status>(res.status),
                  "a checked property failed");
    }
  } catch (const unrep::Error& e) {
    st = record(static_cast<unrep_status>(e.code()), e.what());
    doc = r::error_document(e);
  } catch (const std::bad_alloc&) {
    st = record(UNREP_E_CAPACITY, "out of memory");
    doc = r::error_document(unrep::ErrorCode::capacity, "cli", last_error);
  } catch (const std::exception& e) {
    st = record(UNREP_E_INTERNAL, e.what());
    doc = r::error_document(unrep::ErrorCode::internal, "cli", last_error);
  }
  *out = dup(o.pretty ? r::render_pretty(doc) : r::render_machine(doc));
  return st;
}

void unrep_string_free(char* s) { std::free(s); }

}  // extern "C"
