#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <variant>

#include "hclab/hclab.h"
#include "serialize.hpp"

using namespace hclab;

struct hclab_context {
  std::variant<std::shared_ptr<const ExactField>, std::shared_ptr<const FloatField>> field;
};

namespace {

template <class F>
struct ModuleOf {
  std::shared_ptr<const F> field;
  SuperModule<typename F::value_type> module;
};

}  // namespace

struct hclab_module {
  std::variant<ModuleOf<ExactField>, ModuleOf<FloatField>> impl;
};

namespace {

thread_local std::string g_last_error;

hclab_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument:
      return HCLAB_ERR_INVALID_ARGUMENT;
    case ErrorKind::Domain:
      return HCLAB_ERR_DOMAIN;
    case ErrorKind::Guard:
      return HCLAB_ERR_GUARD;
    case ErrorKind::Internal:
      return HCLAB_ERR_INTERNAL;
  }
  return HCLAB_ERR_INTERNAL;
}

template <class Fn>
hclab_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return HCLAB_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("malformed JSON: ") + e.what();
    return HCLAB_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HCLAB_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) fail(ErrorKind::Internal, "out of memory");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) {
  require(out != nullptr, "null output pointer");
  *out = dup_string(j.dump(2));
}

const hclab_context& ctx_ref(const hclab_context* ctx) {
  require(ctx != nullptr, "null context");
  return *ctx;
}

std::vector<int> to_vector(const int* data, size_t n) {
  require(data != nullptr || n == 0, "null array with nonzero length");
  return std::vector<int>(data, data + n);
}

// Runs fn(field) on whichever backend the context holds.
template <class Fn>
auto with_field(const hclab_context* ctx, Fn&& fn) {
  return std::visit([&](const auto& f) { return fn(*f); }, ctx_ref(ctx).field);
}

template <class Build>
hclab_module* make_module(const hclab_context* ctx, Build&& build) {
  return std::visit(
      [&](const auto& fp) {
        using F = std::remove_const_t<typename std::decay_t<decltype(fp)>::element_type>;
        return new hclab_module{ModuleOf<F>{fp, build(*fp)}};
      },
      ctx_ref(ctx).field);
}

bool is_finite_module(const auto& f, const auto& M) {
  return M.n() > 0 && !M.T.empty() && la::equal(f, M.X[0], la::identity(f, M.dim));
}

// Full verification of one module; the returned flag is the overall verdict.
template <class F>
std::pair<Json, bool> verify_module(const F& f, const SuperModule<typename F::value_type>& M) {
  Json j;
  j["dim"] = M.dim;
  Json labels = Json::object();
  for (const auto& [k, v] : M.labels) labels[k] = v;
  j["labels"] = labels;
  const auto rel = verify_relations(f, M);
  j["relations"] = report_json(rel);
  bool ok = rel.all_passed();
  if (!ok) {
    j["certificate"] = {{"skipped", "relations fail"}};
    j["passed"] = false;
    return {j, false};
  }
  try {
    const bool cs = completely_splittable(f, M);
    if (cs) {
      const auto cert = irreducible_certificate(f, M);
      j["certificate"] = certificate_json(cert);
      ok = ok && cert.passed();
    } else {
      j["certificate"] = {{"completely_splittable", false}, {"skipped", "the certificate needs a completely splittable module"}};
    }
    if (!M.T.empty() && M.n() <= 4) {
      auto inter = verify_intertwiners(f, M);
      j["intertwiners"] = report_json(inter);
      ok = ok && inter.all_passed();
      if (cs) {
        auto ph = verify_phi_hat(f, M);
        j["phi_hat"] = report_json(ph);
        ok = ok && ph.all_passed();
      }
    }
    if (is_finite_module(f, M)) {
      auto jm = verify_jm(f, M);
      j["jucys_murphy"] = report_json(jm);
      ok = ok && jm.all_passed();
    }
  } catch (const Error& e) {
    j["error"] = e.what();
    ok = false;
  }
  j["passed"] = ok;
  return {j, ok};
}

Json witness_section(int n, int h) {
  Json j;
  const int critical = h % 2 ? h : h / 2;
  if (n == critical) {
    j["kind"] = "dimension-sum";
    j["detail"] = "the critical rank: every irreducible is completely splittable and the dimension sum falls short";
    return j;
  }
  const int r = n - 1;
  if (is_exceptional_pair(r, h)) {
    j["kind"] = "exceptional";
    j["r"] = r;
    Json eqs = Json::array();
    for (const auto& fe : exceptional_feasibility(r, h)) eqs.push_back({{"equation", fe.equation}, {"solvable", fe.solvable}});
    j["equations"] = eqs;
    j["detail"] = "a semisimple algebra would force an integer solution of the dimension equation; none exists";
    return j;
  }
  const auto w = nonsemisimple_witness(r, h);
  j["kind"] = "crystal";
  j["r"] = r;
  j["lambda"] = w.lambda;
  j["i"] = w.i;
  j["phi"] = w.phi;
  j["rule"] = w.rule;
  j["detail"] = "phi_i(lambda) >= 2, so f_i M(lambda) is indecomposable but not simple";
  return j;
}

}  // namespace

extern "C" {

const char* hclab_last_error(void) { return g_last_error.c_str(); }

void hclab_string_free(char* s) { std::free(s); }

hclab_status hclab_context_create(int k, hclab_mode mode, unsigned prime_hint, hclab_context** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    auto* ctx = new hclab_context{};
    try {
      if (mode == HCLAB_MODE_FLOAT) {
        ctx->field = std::make_shared<const FloatField>(make_float_field(k));
      } else if (mode == HCLAB_MODE_EXACT) {
        std::optional<uint32_t> hint;
        if (prime_hint) hint = prime_hint;
        ctx->field = std::make_shared<const ExactField>(make_exact_field(k, effective_prime_hint(hint)));
      } else {
        fail(ErrorKind::InvalidArgument, "unknown mode");
      }
    } catch (...) {
      delete ctx;
      throw;
    }
    *out = ctx;
  });
}

void hclab_context_destroy(hclab_context* ctx) { delete ctx; }

int hclab_context_h(const hclab_context* ctx) {
  if (!ctx) return 0;
  return with_field(ctx, [](const auto& f) { return f.h(); });
}

hclab_status hclab_field_info(const hclab_context* ctx, char** json) {
  return guarded([&] {
    Json j = with_field(ctx, [](const auto& f) { return field_json(f); });
    j = Json{{"schema", kSchema}, {"field", j}};
    emit(j, json);
  });
}

hclab_status hclab_module_from_weight(const hclab_context* ctx, const int* seq, size_t n, hclab_module** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const Weight w = to_vector(seq, n);
    require(!w.empty(), "empty weight sequence");
    *out = make_module(ctx, [&](const auto& f) { return build_D(f, w); });
  });
}

hclab_status hclab_module_from_partition(const hclab_context* ctx, const int* parts, size_t len, hclab_module** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const Partition xi = to_vector(parts, len);
    *out = make_module(ctx, [&](const auto& f) { return build_D_finite(f, xi); });
  });
}

hclab_status hclab_module_rank2(const hclab_context* ctx, int i, int j, hclab_module** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = make_module(ctx, [&](const auto& f) { return build_V2(f, i, j); });
  });
}

hclab_status hclab_module_load(const hclab_context* ctx, const char* json, hclab_module** out) {
  return guarded([&] {
    require(out != nullptr && json != nullptr, "null argument");
    const Json j = Json::parse(json);
    *out = make_module(ctx, [&](const auto& f) { return module_from_json(f, j); });
  });
}

void hclab_module_destroy(hclab_module* m) { delete m; }

size_t hclab_module_dim(const hclab_module* m) {
  if (!m) return 0;
  return std::visit([](const auto& mo) { return mo.module.dim; }, m->impl);
}

hclab_status hclab_module_json(const hclab_module* m, char** json) {
  return guarded([&] {
    require(m != nullptr, "null module");
    emit(std::visit([](const auto& mo) { return module_json(*mo.field, mo.module); }, m->impl), json);
  });
}

hclab_status hclab_module_weight_spaces(const hclab_module* m, char** json) {
  return guarded([&] {
    require(m != nullptr, "null module");
    Json j = std::visit(
        [](const auto& mo) {
          Json a = Json::array();
          for (const auto& [w, mult] : weight_spaces(*mo.field, mo.module)) a.push_back({{"weight", w}, {"multiplicity", mult}});
          return a;
        },
        m->impl);
    emit(Json{{"schema", kSchema}, {"weights", j}}, json);
  });
}

hclab_status hclab_module_verify(const hclab_module* m, int* passed, char** json) {
  return guarded([&] {
    require(m != nullptr && passed != nullptr, "null argument");
    auto [j, ok] = std::visit([](const auto& mo) { return verify_module(*mo.field, mo.module); }, m->impl);
    *passed = ok ? 1 : 0;
    emit(Json{{"schema", kSchema}, {"report", j}}, json);
  });
}

hclab_status hclab_classify(const hclab_context* ctx, int n, int force, char** json) {
  return guarded([&] {
    const int h = hclab_context_h(ctx);
    Json rows = Json::array();
    for (const auto& e : classify(h, n, force != 0)) rows.push_back(class_entry_json(e));
    emit(Json{{"schema", kSchema}, {"k", with_field(ctx, [](const auto& f) { return f.k(); })}, {"h", h}, {"n", n}, {"classes", rows}},
         json);
  });
}

hclab_status hclab_weights(const hclab_context* ctx, int n, int force, char** json) {
  return guarded([&] {
    const int h = hclab_context_h(ctx);
    Json rows = Json::array();
    if (n > 0) {
      for (const auto& w : enumerate_finite_weights(n, h, force != 0)) {
        Json r = {{"weight", w}, {"xi", phi_map(w, h)}};
        if (h % 2 == 0) r["class"] = split_class(w, h) == SplitClass::P1 ? "P1" : "P2";
        rows.push_back(std::move(r));
      }
    }
    const auto cc = cross_check_classification(h, n, force != 0);
    emit(Json{{"schema", kSchema},
              {"h", h},
              {"n", n},
              {"weights", rows},
              {"cross_check", {{"ok", cc.ok()}, {"classes", cc.classes}, {"mismatches", cc.mismatches}}}},
         json);
  });
}

hclab_status hclab_verify_all(const hclab_context* ctx, int n, int force, int* passed, char** json) {
  return guarded([&] {
    require(passed != nullptr, "null argument");
    if (n > 7 && !force) fail(ErrorKind::Guard, "n > 7 needs the force override");
    bool all = true;
    Json rows = Json::array();
    with_field(ctx, [&](const auto& f) {
      for (const auto& xi : classification_index(n, f.h(), Family::CSP)) {
        auto [j, ok] = verify_module(f, build_D_finite(f, xi));
        all = all && ok;
        rows.push_back(std::move(j));
      }
      return 0;
    });
    *passed = all ? 1 : 0;
    emit(Json{{"schema", kSchema}, {"n", n}, {"passed", all}, {"modules", rows}}, json);
  });
}

hclab_status hclab_crystal(const hclab_context* ctx, const int* parts, size_t len, int i, char** json) {
  return guarded([&] {
    const int h = hclab_context_h(ctx);
    const Partition lam = to_vector(parts, len);
    Json rows = Json::array();
    for (int r = 0; r <= top_residue(h); ++r) {
      if (i >= 0 && r != i) continue;
      const auto sig = signature(lam, r, h);
      auto [e, p] = eps_phi(lam, r, h);
      Json row = {{"i", r},       {"marks", marks_json(marked_nodes(lam, r, h))},
                  {"signature", sig}, {"reduced", reduce_signature(sig)},
                  {"epsilon", e}, {"phi", p}};
      if (auto g = good_node(lam, r, h)) row["good"] = {g->row, g->col};
      if (auto c = cogood_node(lam, r, h)) {
        row["cogood"] = {c->row, c->col};
        row["cogood_result"] = apply_cogood(lam, r, h);
      }
      rows.push_back(std::move(row));
    }
    emit(Json{{"schema", kSchema}, {"h", h}, {"lambda", lam}, {"residues", rows}}, json);
  });
}

hclab_status hclab_semisimple(const hclab_context* ctx, int n, int witness, char** json) {
  return guarded([&] {
    require(n >= 1, "n must be positive");
    const int h = hclab_context_h(ctx);
    const bool ss = is_semisimple(n, h);
    Json j = {{"schema", kSchema}, {"n", n}, {"h", h}, {"semisimple", ss}, {"criterion", h % 2 ? "h > n" : "h > 2n"}};
    if (!ss && witness) j["witness"] = witness_section(n, h);
    const bool conclusive = h % 2 ? h >= n : h >= 2 * n;
    if (conclusive && n <= 7) j["dimension_sum"] = sum_check_json(dimension_sum_check(h, n));
    emit(j, json);
  });
}

hclab_status hclab_sum_check(const hclab_context* ctx, int n, int construct, char** json) {
  return guarded([&] {
    const int h = hclab_context_h(ctx);
    SumCheck s = with_field(ctx, [&](const auto& f) {
      if (!construct) return dimension_sum_check(h, n);
      return dimension_sum_check(h, n, [&](const Partition& xi) { return static_cast<uint64_t>(build_D_finite(f, xi).dim); });
    });
    Json j = sum_check_json(s);
    j["constructed"] = construct != 0;
    emit(Json{{"schema", kSchema}, {"report", j}}, json);
  });
}

}  // extern "C"
