#include "unrep/report.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "unrep/clifford.hpp"
#include "unrep/engine.hpp"
#include "unrep/heap.hpp"

namespace unrep::report {

namespace {

constexpr const char* kModule = "cli";

// ---------------------------------------------------------------- parsing

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw InputError(kModule, "field '" + field + "': " + what);
}

std::uint32_t as_index(const nlohmann::json& v, const std::string& field,
                       std::size_t bound) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    field_error(field, "expected a non-negative integer");
  }
  auto x = v.get<std::uint64_t>();
  if (x >= bound) {
    field_error(field, "index " + std::to_string(x) + " out of range [0,"
                           + std::to_string(bound) + ")");
  }
  return static_cast<std::uint32_t>(x);
}

// ---------------------------------------------------------------- sections

Json elements_json(const TransSemigroup& s) {
  Json arr = Json::array();
  for (const auto& t : s.elements()) {
    arr.push_back(std::vector<point_t>(t.images().begin(), t.images().end()));
  }
  return arr;
}

Json semigroup_json(const TransSemigroup& s) {
  Json j;
  j["degree"] = s.degree();
  j["size"] = s.size();
  j["generators"] = s.generators();
  j["elements"] = elements_json(s);
  return j;
}

Json classification_json(const ClassificationReport& c) {
  Json j;
  j["size"] = c.size;
  j["degree"] = c.degree;
  j["size_matches_degree"] = c.size_matches_degree;
  j["monoid"] = c.is_monoid;
  j["identity"] = c.identity ? Json(*c.identity) : Json(nullptr);
  j["group"] = c.is_group;
  j["regular"] = c.is_regular;
  j["inverse"] = c.is_inverse;
  j["clifford"] = c.is_clifford;
  j["left_zero"] = c.is_left_zero;
  j["idempotents_commute"] = c.idempotents_commute;
  j["idempotents"] = c.idempotents;
  j["inverses"] = c.is_inverse ? Json(c.inverses) : Json(nullptr);
  return j;
}

Json group_json(const GroupTable& g) {
  Json j;
  j["order"] = g.order();
  j["identity"] = g.identity();
  j["abelian"] = g.is_abelian();
  j["cyclic"] = g.is_cyclic();
  std::vector<std::size_t> orders;
  for (index_t a = 0; a < g.order(); ++a) {
    orders.push_back(g.element_order(a));
  }
  j["element_orders"] = orders;
  j["table"] = g.rows();
  return j;
}

// ---------------------------------------------------------------- context

struct Context {
  const InputDocument& doc;
  const RunOptions& opts;
  TransSemigroup semigroup;
  std::optional<RepresentationResult> representation;
  ClassificationReport classification;
  std::optional<std::vector<UnrepMap>> maps;

  Context(const InputDocument& d, const RunOptions& o, TransSemigroup s,
          std::optional<RepresentationResult> rep)
      : doc(d),
        opts(o),
        semigroup(std::move(s)),
        representation(std::move(rep)),
        classification(classify(semigroup)) {}

  EnumerateOptions enumerate_options() const {
    EnumerateOptions e;
    e.jobs = opts.jobs;
    if (opts.oracle) {
      e.strategy = Strategy::bruteforce;
    }
    return e;
  }

  const std::vector<UnrepMap>& unreps() {
    if (!maps) {
      maps = enumerate_unrep_maps(semigroup, enumerate_options());
    }
    return *maps;
  }

  MulTable abstract_table() const {
    return doc.table ? *doc.table : table_of(semigroup);
  }
};

Context make_context(const InputDocument& doc, const RunOptions& opts) {
  if (doc.kind == InputDocument::Kind::table) {
    auto rep = represent(*doc.table);
    auto s = rep.semigroup;
    return Context(doc, opts, std::move(s), std::move(rep));
  }
  return Context(doc, opts, closure(doc.generators, opts.cap), std::nullopt);
}

Json unreps_json(Context& ctx, bool with_tables) {
  Json j;
  j["strategy"] = to_string(resolve_strategy(ctx.semigroup,
                                             ctx.enumerate_options()));
  const auto& maps = ctx.unreps();
  j["count"] = maps.size();
  Json arr = Json::array();
  for (const auto& m : maps) {
    Json item;
    item["phi"] = std::vector<index_t>(m.phi().begin(), m.phi().end());
    if (with_tables) {
      item["induced_table"] = induced_table(ctx.semigroup, m).induced.rows();
    }
    arr.push_back(std::move(item));
  }
  j["maps"] = std::move(arr);
  return j;
}

std::size_t identity_choice(const Context& ctx, std::size_t heap_size) {
  std::size_t e = ctx.opts.identity.value_or(0);
  if (e >= heap_size) {
    throw InputError(kModule, "identity index " + std::to_string(e)
                                  + " out of range for " + std::to_string(heap_size)
                                  + " unrepresentations");
  }
  return e;
}

HeapCarrier require_heap(Context& ctx) {
  const auto& maps = ctx.unreps();
  if (maps.empty()) {
    throw PreconditionError("heap-torsor",
                            "semigroup has no unrepresentations");
  }
  return HeapCarrier(ctx.semigroup, maps);
}

Json centralizer_theorem_json(const CentralizerVerdict& v) {
  Json j;
  j["holds"] = v.holds();
  j["heap_group_order"] = v.heap_group.order();
  j["centralizer_group_order"] = v.centralizer_group.order();
  j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
  j["translation_is_isomorphism"] = v.translation_is_isomorphism;
  return j;
}

Json duality_json(const DualityVerdict& v) {
  Json j;
  j["holds"] = v.holds();
  j["pseudounit_count"] = v.pseudounit_count;
  j["unit_count"] = v.unit_count;
  j["bijective"] = v.bijective;
  j["anti_homomorphism"] = v.anti_homomorphism;
  j["pairs_checked"] = v.pairs_checked;
  return j;
}

Json decomposition_json(const CliffordDecomposition& d) {
  Json j;
  j["idempotents"] = d.idempotents;
  Json pairs = Json::array();
  for (auto [f, e] : d.order_pairs) {
    pairs.push_back({f, e});
  }
  j["order_pairs"] = std::move(pairs);
  Json comps = Json::array();
  for (std::size_t k = 0; k < d.idempotents.size(); ++k) {
    Json c;
    c["idempotent"] = d.idempotents[k];
    c["elements"] = d.components[k];
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  Json conns = Json::array();
  for (const auto& c : d.connecting) {
    Json item;
    item["lower"] = c.lower;
    item["upper"] = c.upper;
    item["images"] = c.images;
    conns.push_back(std::move(item));
  }
  j["connecting"] = std::move(conns);
  return j;
}

Json sweep_json(const TheoremCSweep& s) {
  Json j;
  j["exhaustive"] = s.exhaustive;
  j["bijections_checked"] = s.bijections_checked;
  j["unreps_found"] = s.unreps_found;
  j["disagreements"] = s.disagreements;
  return j;
}

Json existence_json(const ComponentExistence& e) {
  Json j;
  Json comps = Json::array();
  for (std::size_t k = 0; k < e.idempotents.size(); ++k) {
    Json c;
    c["idempotent"] = e.idempotents[k];
    c["has_underrep"] = static_cast<bool>(e.has_underrep[k]);
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  j["conjunction"] = e.conjunction;
  j["unreps_exist"] = e.unreps_exist;
  j["only_if_holds"] = e.only_if_holds();
  j["matches"] = e.matches();
  return j;
}

// ---------------------------------------------------------------- commands

void cmd_analyze(Context& ctx, Json& out, int&) {
  out["classification"] = classification_json(ctx.classification);
  out["existence_precheck"] = existence_precheck(ctx.semigroup);
}

void cmd_unreps(Context& ctx, Json& out, int&) {
  out["existence_precheck"] = existence_precheck(ctx.semigroup);
  out["unreps"] = unreps_json(ctx, true);
}

void cmd_heap(Context& ctx, Json& out, int& status) {
  out["unreps"] = unreps_json(ctx, false);
  auto heap = require_heap(ctx);
  std::size_t e = identity_choice(ctx, heap.size());
  Json h;
  h["size"] = heap.size();
  bool axioms = heap_axioms_check(heap);
  h["axioms_hold"] = axioms;
  h["identity"] = e;
  h["group"] = group_json(group_from_identity(heap, e));
  bool torsor = heap_torsor_check(heap, e);
  h["torsor"] = torsor;
  out["heap"] = std::move(h);
  if (!axioms || !torsor) {
    status = static_cast<int>(ErrorCode::theorem_violation);
  }
}

void cmd_centralizer(Context& ctx, Json& out, int& status) {
  auto cent = centralizer(ctx.semigroup);
  Json c;
  c["count"] = cent.all_elements.size();
  Json all = Json::array();
  for (const auto& t : cent.all_elements) {
    all.push_back(std::vector<point_t>(t.images().begin(), t.images().end()));
  }
  c["elements"] = std::move(all);
  c["invertible_count"] = cent.invertible.size();
  Json inv = Json::array();
  for (const auto& t : cent.invertible) {
    inv.push_back(std::vector<point_t>(t.images().begin(), t.images().end()));
  }
  c["invertible"] = std::move(inv);
  out["centralizer"] = std::move(c);
  out["unrep_count"] = ctx.unreps().size();
  if (ctx.unreps().empty()) {
    out["theorem"] = Json{{"applicable", false}};
    return;
  }
  auto v = theorem_centralizer_check(ctx.semigroup, ctx.enumerate_options());
  out["theorem"] = centralizer_theorem_json(v);
  if (!v.holds()) {
    status = static_cast<int>(ErrorCode::theorem_violation);
  }
}

void cmd_pseudounits(Context& ctx, Json& out, int& status) {
  auto table = ctx.abstract_table();
  auto p = pseudounits(table);
  Json j;
  j["method"] = table.identity() ? "translation" : "backtrack";
  j["count"] = p.elements.size();
  Json elems = Json::array();
  for (const auto& a : p.elements) {
    elems.push_back(a.alpha);
  }
  j["elements"] = std::move(elems);
  j["group"] = group_json(p.group);
  out["pseudounits"] = std::move(j);
  if (table.identity()) {
    auto v = pseudounit_duality_check(table);
    out["duality"] = duality_json(v);
    if (!v.holds()) {
      status = static_cast<int>(ErrorCode::theorem_violation);
    }
  } else {
    out["duality"] = Json{{"applicable", false}};
  }
}

void cmd_clifford(Context& ctx, Json& out, int& status) {
  if (!ctx.classification.is_clifford) {
    throw InputError("clifford", "semigroup is not Clifford");
  }
  auto d = decompose(ctx.semigroup);
  Json c;
  c["decomposition"] = decomposition_json(d);
  c["unreps"] = unreps_json(ctx, false);
  if (existence_precheck(ctx.semigroup)) {
    auto sweep = theorem_c_sweep(ctx.semigroup, ctx.opts.seed);
    c["theorem_c"] = sweep_json(sweep);
    if (sweep.disagreements != 0) {
      status = static_cast<int>(ErrorCode::theorem_violation);
    }
  } else {
    c["theorem_c"] = Json{{"applicable", false}};
  }
  if (ctx.classification.is_monoid) {
    Json e;
    e["evaluation_unreps"] = clifford_monoid_unreps(ctx.semigroup).size();
    if (ctx.semigroup.degree() <= component_search_degree_limit) {
      auto ex = component_underrep_existence(ctx.semigroup);
      e["components"] = existence_json(ex);
      if (!ex.only_if_holds()) {
        status = static_cast<int>(ErrorCode::theorem_violation);
      }
    }
    c["existence"] = std::move(e);
  } else {
    c["existence"] = Json{{"applicable", false}};
  }
  out["clifford"] = std::move(c);
}

// ---------------------------------------------------------------- check-all

struct Verdict {
  std::string name;
  bool applicable = false;
  bool holds = true;
  Json detail;
};

Verdict skip(std::string name) { return {std::move(name), false, true, nullptr}; }

Verdict verdict(std::string name, bool holds, Json detail = nullptr) {
  return {std::move(name), true, holds, std::move(detail)};
}

std::vector<Verdict> all_verdicts(Context& ctx) {
  const auto& s = ctx.semigroup;
  const auto& c = ctx.classification;
  const auto& maps = ctx.unreps();
  const bool has_unreps = !maps.empty();
  std::vector<Verdict> v;

  v.push_back(verdict("precheck_necessary",
                      !has_unreps || existence_precheck(s),
                      Json{{"unrep_count", maps.size()}}));

  if (ctx.representation && ctx.representation->faithful) {
    const auto& table = *ctx.doc.table;
    std::size_t matches = 0;
    for (const auto& m : maps) {
      auto u = induced_table(s, m);
      if (u.induced == table
          && std::equal(m.phi().begin(), m.phi().end(),
                        ctx.representation->rep_map.begin())) {
        ++matches;
      }
    }
    v.push_back(verdict("representation_round_trip", matches == 1,
                        Json{{"matching_unreps", matches}}));
  } else {
    v.push_back(skip("representation_round_trip"));
  }

  if (ctx.doc.table && is_inverse_table(*ctx.doc.table)) {
    v.push_back(verdict("inverse_implies_faithful",
                        is_faithful(*ctx.doc.table)));
  } else {
    v.push_back(skip("inverse_implies_faithful"));
  }

  if (s.degree() <= default_bruteforce_degree_limit) {
    EnumerateOptions bt;
    bt.strategy = Strategy::backtrack;
    auto brute = enumerate_unrep_maps(s, {Strategy::bruteforce, 1});
    bool same = brute == maps && brute == enumerate_unrep_maps(s, bt);
    v.push_back(verdict("oracle_equivalence", same,
                        Json{{"bruteforce_count", brute.size()}}));
    if (c.is_monoid) {
      EnumerateOptions mo;
      mo.strategy = Strategy::monoid;
      v.push_back(verdict("monoid_determination",
                          enumerate_unrep_maps(s, mo) == brute));
    } else {
      v.push_back(skip("monoid_determination"));
    }
  } else {
    v.push_back(skip("oracle_equivalence"));
    v.push_back(skip("monoid_determination"));
  }

  if (c.is_inverse && has_unreps) {
    std::size_t checks = 0;
    std::size_t disagreements = 0;
    for (const auto& m : maps) {
      auto r = idempotent_forcing_check(s, m);
      checks += r.checks;
      disagreements += r.disagreements;
    }
    EnumerateOptions io;
    io.strategy = Strategy::idempotent;
    bool route = enumerate_unrep_maps(s, io) == maps;
    v.push_back(verdict("idempotent_forcing", disagreements == 0 && route,
                        Json{{"checks", checks},
                             {"disagreements", disagreements},
                             {"forced_route_matches", route}}));
  } else {
    v.push_back(skip("idempotent_forcing"));
  }

  if (c.is_left_zero) {
    bool all_constants = s.size() == s.degree();
    for (const auto& t : s.elements()) {
      all_constants = all_constants && t.rank() == 1;
    }
    bool ok = has_unreps == all_constants;
    if (ok && has_unreps) {
      ok = maps.size() == 1;
      auto t = induced_table(s, maps.front()).induced;
      for (index_t x = 0; x < t.order(); ++x) {
        for (index_t y = 0; y < t.order(); ++y) {
          ok = ok && t(x, y) == x;
        }
      }
    }
    v.push_back(verdict("left_zero_law", ok,
                        Json{{"all_constant_maps", all_constants}}));
  } else {
    v.push_back(skip("left_zero_law"));
  }

  {
    std::optional<Transformation> cycle;
    for (const auto& t : s.elements()) {
      if (is_single_cycle(t)) {
        std::vector<Transformation> g{t};
        if (closure(g) == s) {
          cycle = t;
          break;
        }
      }
    }
    if (cycle) {
      bool ok = maps.size() == s.degree();
      for (point_t z = 0; z < s.degree() && ok; ++z) {
        auto m = cyclic_unrep(*cycle, z);
        ok = verify_action_hom(s, m.phi())
             && std::binary_search(maps.begin(), maps.end(), m);
      }
      v.push_back(verdict("cyclic_construction", ok));
    } else {
      v.push_back(skip("cyclic_construction"));
    }
  }

  if (has_unreps) {
    HeapCarrier heap(s, maps);
    v.push_back(verdict("heap_axioms", heap_axioms_check(heap)));
    bool independent = true;
    if (heap.size() <= isomorphism_order_limit) {
      auto g0 = group_from_identity(heap, 0);
      for (std::size_t e = 1; e < heap.size() && independent; ++e) {
        independent = is_isomorphic(g0, group_from_identity(heap, e)).has_value();
      }
      v.push_back(verdict("identity_independence", independent));
    } else {
      v.push_back(skip("identity_independence"));
    }
    v.push_back(verdict("heap_torsor", heap_torsor_check(heap, 0)));
    auto cv = theorem_centralizer_check(s, ctx.enumerate_options());
    v.push_back(verdict("centralizer_theorem", cv.holds(),
                        centralizer_theorem_json(cv)));
    v.push_back(verdict("count_law",
                        maps.size() == cv.centralizer_group.order()));
  } else {
    for (const char* name : {"heap_axioms", "identity_independence",
                             "heap_torsor", "centralizer_theorem", "count_law"}) {
      v.push_back(skip(name));
    }
  }

  {
    auto table = ctx.abstract_table();
    if (table.identity()) {
      auto d = pseudounit_duality_check(table);
      v.push_back(verdict("pseudounit_duality", d.holds(), duality_json(d)));
      v.push_back(verdict("pseudounit_count_law",
                          d.pseudounit_count == d.unit_count));
    } else {
      v.push_back(skip("pseudounit_duality"));
      v.push_back(skip("pseudounit_count_law"));
    }
  }

  if (c.is_monoid && has_unreps) {
    auto b = beta_square_check(s);
    v.push_back(verdict("beta_square", b.holds(),
                        Json{{"pairs_checked", b.pairs_checked}}));
  } else {
    v.push_back(skip("beta_square"));
  }

  if (c.is_group && has_unreps) {
    auto g = group_torsor_isomorphism(s);
    v.push_back(verdict("group_torsor_isomorphism",
                        g.torsor && g.witness.has_value(),
                        Json{{"witness", g.witness ? Json(*g.witness)
                                                   : Json(nullptr)}}));
  } else {
    v.push_back(skip("group_torsor_isomorphism"));
  }

  if (c.is_clifford) {
    auto d = decompose(s);
    v.push_back(verdict("decomposition_functorial",
                        decomposition_invariants_hold(s, d)));
    if (existence_precheck(s)) {
      auto sweep = theorem_c_sweep(s, ctx.opts.seed);
      bool ok = sweep.disagreements == 0;
      for (const auto& m : maps) {
        auto tv = theorem_c_check(s, d, m.phi());
        ok = ok && tv.action_hom && tv.compatible_family;
      }
      v.push_back(verdict("theorem_c", ok, sweep_json(sweep)));
    } else {
      v.push_back(skip("theorem_c"));
    }
    if (has_unreps) {
      for (const auto& m : maps) {
        for (const auto& comp : d.components) {
          restrict_unrep(s, m, comp);
        }
      }
      v.push_back(verdict("underrep_restriction", true));
    } else {
      v.push_back(skip("underrep_restriction"));
    }
    if (c.is_monoid) {
      auto cm = clifford_monoid_unreps(s);
      bool same = cm.size() == maps.size();
      for (std::size_t i = 0; same && i < cm.size(); ++i) {
        same = cm[i].map == maps[i];
      }
      v.push_back(verdict("clifford_monoid_unreps", same));
      if (s.degree() <= component_search_degree_limit) {
        auto ex = component_underrep_existence(s);
        v.push_back(verdict("component_existence_only_if", ex.only_if_holds(),
                            existence_json(ex)));
      } else {
        v.push_back(skip("component_existence_only_if"));
      }
    } else {
      v.push_back(skip("clifford_monoid_unreps"));
      v.push_back(skip("component_existence_only_if"));
    }
  } else {
    for (const char* name :
         {"decomposition_functorial", "theorem_c", "underrep_restriction",
          "clifford_monoid_unreps", "component_existence_only_if"}) {
      v.push_back(skip(name));
    }
  }
  return v;
}

void cmd_check_all(Context& ctx, Json& out, int& status) {
  out["classification"] = classification_json(ctx.classification);
  out["unrep_count"] = ctx.unreps().size();
  Json arr = Json::array();
  bool all = true;
  for (auto& v : all_verdicts(ctx)) {
    Json j;
    j["name"] = v.name;
    j["applicable"] = v.applicable;
    j["holds"] = v.holds;
    j["detail"] = std::move(v.detail);
    all = all && v.holds;
    arr.push_back(std::move(j));
  }
  out["verdicts"] = std::move(arr);
  out["all_hold"] = all;
  if (!all) {
    status = static_cast<int>(ErrorCode::theorem_violation);
  }
}

using Handler = std::function<void(Context&, Json&, int&)>;

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> h{
      {"analyze", cmd_analyze},         {"unreps", cmd_unreps},
      {"heap", cmd_heap},               {"centralizer", cmd_centralizer},
      {"pseudounits", cmd_pseudounits}, {"clifford", cmd_clifford},
      {"check-all", cmd_check_all},
  };
  return h;
}

// ---------------------------------------------------------------- pretty

bool is_scalar_array(const Json& j) {
  return j.is_array()
         && std::all_of(j.begin(), j.end(),
                        [](const Json& e) { return e.is_primitive(); });
}

bool is_matrix(const Json& j) {
  return j.is_array() && !j.empty()
         && std::all_of(j.begin(), j.end(),
                        [](const Json& e) { return is_scalar_array(e); });
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) {
    return j.get<std::string>();
  }
  if (j.is_boolean()) {
    return j.get<bool>() ? "yes" : "no";
  }
  if (j.is_null()) {
    return "-";
  }
  return j.dump();
}

std::string row_text(const Json& row) {
  std::string out;
  for (const auto& e : row) {
    if (!out.empty()) {
      out += ' ';
    }
    out += scalar_text(e);
  }
  return out;
}

void render(const Json& j, std::ostringstream& os, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n";
      render(value, os, indent + "  ");
    } else if (is_scalar_array(value)) {
      os << indent << key << ": [" << row_text(value) << "]\n";
    } else if (is_matrix(value)) {
      os << indent << key << ":\n";
      std::size_t width = 1;
      for (const auto& row : value) {
        for (const auto& e : row) {
          width = std::max(width, scalar_text(e).size());
        }
      }
      for (const auto& row : value) {
        os << indent << "  ";
        for (const auto& e : row) {
          auto t = scalar_text(e);
          os << std::string(width - t.size() + 1, ' ') << t;
        }
        os << '\n';
      }
    } else if (value.is_array()) {
      os << indent << key << ":\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          os << indent << "  -\n";
          render(item, os, indent + "    ");
        } else {
          os << indent << "  - " << item.dump() << '\n';
        }
      }
    } else {
      os << indent << key << ": " << scalar_text(value) << '\n';
    }
  }
}

void write_machine(const Json& j, std::string& out, std::size_t depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) {
        out += ",\n";
      }
      first = false;
      out += pad + Json(key).dump() + ": ";
      write_machine(value, out, depth + 1);
    }
    out += "\n" + close + "}";
  } else if (j.is_array() && !j.empty() && !is_scalar_array(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) {
        out += ",\n";
      }
      out += pad;
      write_machine(j[i], out, depth + 1);
    }
    out += "\n" + close + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) {
        out += ", ";
      }
      out += j[i].dump();
    }
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

InputDocument parse_input(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InputError(kModule, "malformed JSON at line " + std::to_string(line)
                                  + ", column " + std::to_string(col) + ": "
                                  + e.what());
  }
  if (!j.is_object()) {
    throw InputError(kModule, "input must be a JSON object");
  }
  static const std::set<std::string> known{"version", "degree", "generators",
                                           "table", "labels"};
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) {
      field_error(key, "unknown field");
    }
  }
  InputDocument doc;
  if (j.contains("version")) {
    if (!j["version"].is_number_integer()
        || j["version"].get<std::int64_t>() != format_version) {
      field_error("version", "unsupported format version (expected "
                                 + std::to_string(format_version) + ")");
    }
  }
  const bool has_gens = j.contains("generators");
  const bool has_table = j.contains("table");
  if (has_gens == has_table) {
    throw InputError(kModule,
                     "exactly one of 'generators' and 'table' is required");
  }
  if (has_gens) {
    doc.kind = InputDocument::Kind::generators;
    if (j.contains("labels")) {
      field_error("labels", "labels apply only to table input");
    }
    if (!j.contains("degree")) {
      field_error("degree", "required with 'generators'");
    }
    const auto& d = j["degree"];
    if (!d.is_number_integer() || d.get<std::int64_t>() < 1) {
      field_error("degree", "expected a positive integer");
    }
    doc.degree = d.get<std::size_t>();
    const auto& gens = j["generators"];
    if (!gens.is_array() || gens.empty()) {
      field_error("generators", "expected a nonempty array of image lists");
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::string field = "generators[" + std::to_string(i) + "]";
      if (!gens[i].is_array()) {
        field_error(field, "expected an array");
      }
      if (gens[i].size() != doc.degree) {
        field_error(field, "image list length " + std::to_string(gens[i].size())
                               + " != degree " + std::to_string(doc.degree));
      }
      std::vector<point_t> im;
      for (std::size_t k = 0; k < gens[i].size(); ++k) {
        im.push_back(as_index(gens[i][k], field + "[" + std::to_string(k) + "]",
                              doc.degree));
      }
      doc.generators.emplace_back(std::move(im));
    }
  } else {
    doc.kind = InputDocument::Kind::table;
    const auto& t = j["table"];
    if (!t.is_array() || t.empty()) {
      field_error("table", "expected a nonempty square array");
    }
    const std::size_t n = t.size();
    std::vector<std::vector<index_t>> raw(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::string field = "table[" + std::to_string(x) + "]";
      if (!t[x].is_array() || t[x].size() != n) {
        field_error(field, "expected a row of length " + std::to_string(n));
      }
      for (std::size_t y = 0; y < n; ++y) {
        raw[x].push_back(
            as_index(t[x][y], field + "[" + std::to_string(y) + "]", n));
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      const auto& l = j["labels"];
      if (!l.is_array() || l.size() != n) {
        field_error("labels", "expected " + std::to_string(n) + " strings");
      }
      for (const auto& s : l) {
        if (!s.is_string()) {
          field_error("labels", "expected strings");
        }
        labels.push_back(s.get<std::string>());
      }
    }
    if (j.contains("degree")) {
      const auto& d = j["degree"];
      if (!d.is_number_integer() || d.get<std::int64_t>() != static_cast<std::int64_t>(n)) {
        field_error("degree", "must equal the table order when given");
      }
    }
    doc.degree = n;
    doc.table = validate_table(raw, std::move(labels));
  }
  return doc;
}

Json echo(const InputDocument& doc) {
  Json j;
  j["version"] = doc.version;
  if (doc.kind == InputDocument::Kind::generators) {
    j["degree"] = doc.degree;
    Json gens = Json::array();
    for (const auto& g : doc.generators) {
      gens.push_back(std::vector<point_t>(g.images().begin(), g.images().end()));
    }
    j["generators"] = std::move(gens);
  } else {
    j["table"] = doc.table->rows();
    if (!doc.table->labels().empty()) {
      j["labels"] = doc.table->labels();
    }
  }
  return j;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : handlers()) {
      out.push_back(name);
    }
    return out;
  }();
  return names;
}

RunResult run(std::string_view command, const InputDocument& doc,
              const RunOptions& opts) {
  const auto& hs = handlers();
  auto it = std::find_if(hs.begin(), hs.end(),
                         [&](const auto& h) { return h.first == command; });
  if (it == hs.end()) {
    throw InputError(kModule, "unknown command '" + std::string(command) + "'");
  }
  if (opts.jobs == 0) {
    throw InputError(kModule, "--jobs must be at least 1");
  }
  Context ctx = make_context(doc, opts);
  RunResult r;
  r.report["format"] = "unrep-report";
  r.report["version"] = format_version;
  r.report["command"] = std::string(command);
  r.report["input"] = echo(doc);
  if (ctx.representation) {
    Json rep;
    rep["faithful"] = ctx.representation->faithful;
    rep["rep_map"] = ctx.representation->rep_map;
    r.report["representation"] = std::move(rep);
  }
  r.report["semigroup"] = semigroup_json(ctx.semigroup);
  it->second(ctx, r.report, r.status);
  return r;
}

Json error_document(const Error& e) {
  return error_document(e.code(), e.module(), e.what());
}

Json error_document(ErrorCode code, std::string_view module,
                    std::string_view message) {
  Json err;
  err["code"] = to_string(code);
  err["exit_status"] = static_cast<int>(code);
  err["module"] = std::string(module);
  err["message"] = std::string(message);
  Json doc;
  doc["format"] = "unrep-report";
  doc["version"] = format_version;
  doc["error"] = std::move(err);
  return doc;
}

std::string render_machine(const Json& doc) {
  std::string out;
  write_machine(doc, out, 0);
  out += '\n';
  return out;
}

std::string render_pretty(const Json& doc) {
  std::ostringstream os;
  render(doc, os, "");
  return os.str();
}

}  // namespace unrep::report
