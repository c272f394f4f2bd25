// Command-line front end over the C API. Exit codes: 0 success, 1 verification failure,
// 2 usage or domain error, 3 internal error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hclab/hclab.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  hclab_status status;
  ApiError(hclab_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

void check(hclab_status s) {
  if (s != HCLAB_OK) throw ApiError(s, hclab_last_error());
}

Json take(char* s) {
  std::unique_ptr<char, void (*)(char*)> guard(s, hclab_string_free);
  return Json::parse(s);
}

struct RunConfig {
  int k = 5;
  std::string mode = "exact";
  unsigned prime = 0;
  int n = -1;
  std::string weight, xi, lambda, pair, module_path, out, format = "json";
  int i = -1;
  bool force = false, all = false, witness = false, construct = false;
};

std::vector<int> parse_list(const std::string& s, const char* what) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError(std::string("--") + what + ": '" + tok + "' is not an integer");
    }
  }
  return out;
}

class Context {
 public:
  explicit Context(const RunConfig& cfg) {
    hclab_mode m;
    if (cfg.mode == "exact")
      m = HCLAB_MODE_EXACT;
    else if (cfg.mode == "float")
      m = HCLAB_MODE_FLOAT;
    else
      throw UsageError("--mode must be exact or float");
    check(hclab_context_create(cfg.k, m, cfg.prime, &ctx_));
  }
  ~Context() { hclab_context_destroy(ctx_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  const hclab_context* get() const { return ctx_; }

 private:
  hclab_context* ctx_ = nullptr;
};

using ModulePtr = std::unique_ptr<hclab_module, void (*)(hclab_module*)>;

ModulePtr build_module(const RunConfig& cfg, const Context& ctx) {
  const int chosen = !cfg.weight.empty() + !cfg.xi.empty() + !cfg.pair.empty() + !cfg.module_path.empty();
  if (chosen != 1) throw UsageError("give exactly one of --weight, --xi, --pair, --module");
  hclab_module* m = nullptr;
  if (!cfg.weight.empty()) {
    const auto w = parse_list(cfg.weight, "weight");
    check(hclab_module_from_weight(ctx.get(), w.data(), w.size(), &m));
  } else if (!cfg.xi.empty()) {
    const auto xi = parse_list(cfg.xi, "xi");
    check(hclab_module_from_partition(ctx.get(), xi.data(), xi.size(), &m));
  } else if (!cfg.pair.empty()) {
    const auto p = parse_list(cfg.pair, "pair");
    if (p.size() != 2) throw UsageError("--pair takes two residues i,j");
    check(hclab_module_rank2(ctx.get(), p[0], p[1], &m));
  } else {
    std::ifstream in(cfg.module_path);
    if (!in) throw UsageError("cannot read " + cfg.module_path);
    std::stringstream buf;
    buf << in.rdbuf();
    check(hclab_module_load(ctx.get(), buf.str().c_str(), &m));
  }
  return ModulePtr(m, hclab_module_destroy);
}

std::string join(const Json& a, const char* sep = ",") {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += sep;
    s += a[i].dump();
  }
  return s;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// Tabular commands render text and csv; everything else is json or a short text summary.
std::string render_classes(const Json& rows, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    os << "xi,family,gamma0,count,dim,type,representative\n";
    for (const auto& r : rows)
      os << csv_quote(join(r["xi"])) << ',' << r["family"].get<std::string>() << ',' << r["gamma0"] << ',' << r["count"] << ','
         << r["dim"] << ',' << r["type"].get<std::string>() << ',' << csv_quote(join(r["representative"])) << '\n';
    return os.str();
  }
  for (const auto& r : rows)
    os << "xi=(" << join(r["xi"]) << ")  family=" << r["family"].get<std::string>() << "  gamma0=" << r["gamma0"]
       << "  count=" << r["count"] << "  dim=" << r["dim"] << "  type=" << r["type"].get<std::string>() << "  rep=("
       << join(r["representative"]) << ")\n";
  return os.str();
}

std::string render_relations(const Json& rel) {
  std::ostringstream os;
  for (const auto& v : rel) {
    os << "  " << (v["passed"].get<bool>() ? "ok   " : "FAIL ") << v["relation"].get<std::string>() << " (" << v["checks"]
       << " checks)";
    if (v.contains("witness")) os << "  " << v["witness"].dump();
    os << '\n';
  }
  return os.str();
}

std::string render_verify(const Json& r) {
  std::ostringstream os;
  os << "module dim " << r["dim"] << "  labels " << r["labels"].dump() << "  -> " << (r["passed"].get<bool>() ? "PASS" : "FAIL")
     << '\n';
  for (const char* key : {"relations", "intertwiners", "phi_hat", "jucys_murphy"})
    if (r.contains(key)) os << render_relations(r[key]);
  if (r.contains("certificate")) os << "  certificate " << r["certificate"].dump() << '\n';
  if (r.contains("error")) os << "  error: " << r["error"].get<std::string>() << '\n';
  return os.str();
}

std::string render(const std::string& command, const Json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  if (command == "classify") return render_classes(j["classes"], format);
  if (command == "sum-check") {
    const auto& r = j["report"];
    std::string s = render_classes(r["entries"], format);
    if (format == "text")
      s += "sum=" + r["sum"].dump() + " target=" + r["target"].dump() + " verdict=" + r["verdict"].get<std::string>() +
           (r["conclusive"].get<bool>() ? "" : " (not conclusive)") + "\n";
    return s;
  }
  if (command == "weights") {
    std::ostringstream os;
    if (format == "csv") os << "weight,xi\n";
    for (const auto& r : j["weights"]) {
      if (format == "csv")
        os << csv_quote(join(r["weight"])) << ',' << csv_quote(join(r["xi"])) << '\n';
      else
        os << '(' << join(r["weight"]) << ") -> (" << join(r["xi"]) << ")\n";
    }
    if (format == "text") os << "cross-check " << (j["cross_check"]["ok"].get<bool>() ? "ok" : "FAILED") << '\n';
    return os.str();
  }
  if (format == "csv") throw UsageError("--format csv is only available for classify, weights and sum-check");
  if (command == "verify") {
    if (j.contains("modules")) {
      std::string s;
      for (const auto& m : j["modules"]) s += render_verify(m);
      return s;
    }
    return render_verify(j["report"]);
  }
  if (command == "crystal") {
    std::ostringstream os;
    for (const auto& r : j["residues"]) {
      os << "i=" << r["i"] << "  signature '" << r["signature"].get<std::string>() << "'  reduced '"
         << r["reduced"].get<std::string>() << "'  epsilon=" << r["epsilon"] << "  phi=" << r["phi"];
      if (r.contains("cogood_result")) os << "  cogood -> (" << join(r["cogood_result"]) << ')';
      os << '\n';
    }
    return os.str();
  }
  if (command == "semisimple") {
    std::ostringstream os;
    os << "n=" << j["n"] << " h=" << j["h"] << ": " << (j["semisimple"].get<bool>() ? "semisimple" : "not semisimple") << " ("
       << j["criterion"].get<std::string>() << ")\n";
    if (j.contains("witness")) os << "witness " << j["witness"].dump() << '\n';
    if (j.contains("dimension_sum"))
      os << "dimension sum " << j["dimension_sum"]["sum"] << " vs " << j["dimension_sum"]["target"] << ": "
         << j["dimension_sum"]["verdict"].get<std::string>() << '\n';
    return os.str();
  }
  return j.dump(2) + "\n";
}

void write_out(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

int run(const std::string& command, const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "text" && cfg.format != "csv") throw UsageError("--format must be json, text or csv");
  Context ctx(cfg);
  char* s = nullptr;
  auto need_n = [&] {
    if (cfg.n < 0) throw UsageError(command + " needs --n");
    if (cfg.n > 7 && !cfg.force) throw UsageError("n > 7 needs --force");
  };
  int code = kExitOk;
  Json j;
  if (command == "field-info") {
    check(hclab_field_info(ctx.get(), &s));
    j = take(s);
  } else if (command == "classify") {
    need_n();
    check(hclab_classify(ctx.get(), cfg.n, cfg.force, &s));
    j = take(s);
  } else if (command == "weights") {
    need_n();
    check(hclab_weights(ctx.get(), cfg.n, cfg.force, &s));
    j = take(s);
    if (!j["cross_check"]["ok"].get<bool>()) code = kExitFailed;
  } else if (command == "construct") {
    auto m = build_module(cfg, ctx);
    check(hclab_module_json(m.get(), &s));
    j = take(s);
    if (cfg.format == "text") {
      write_out(cfg, "module dim " + std::to_string(hclab_module_dim(m.get())) + "\n");
      return kExitOk;
    }
  } else if (command == "verify") {
    int passed = 0;
    if (cfg.all) {
      need_n();
      check(hclab_verify_all(ctx.get(), cfg.n, cfg.force, &passed, &s));
    } else {
      auto m = build_module(cfg, ctx);
      check(hclab_module_verify(m.get(), &passed, &s));
    }
    j = take(s);
    code = passed ? kExitOk : kExitFailed;
  } else if (command == "crystal") {
    const auto lam = parse_list(cfg.lambda, "lambda");
    check(hclab_crystal(ctx.get(), lam.data(), lam.size(), cfg.i, &s));
    j = take(s);
  } else if (command == "semisimple") {
    need_n();
    check(hclab_semisimple(ctx.get(), cfg.n, cfg.witness, &s));
    j = take(s);
  } else if (command == "sum-check") {
    need_n();
    check(hclab_sum_check(ctx.get(), cfg.n, cfg.construct, &s));
    j = take(s);
  } else {
    throw UsageError("unknown command " + command);
  }
  write_out(cfg, render(command, j, cfg.format));
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke-Clifford superalgebra toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "order of the root of unity q^2");
    sub->add_option("--mode", cfg.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--prime", cfg.prime, "characteristic hint for exact mode");
    sub->add_option("--format", cfg.format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
    sub->add_option("--out", cfg.out, "write output to PATH");
    sub->add_flag("--force", cfg.force, "lift the n <= 7 guard");
  };
  auto with_n = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "rank"); };
  auto with_label = [&](CLI::App* sub) {
    sub->add_option("--weight", cfg.weight, "weight sequence i1,i2,...");
    sub->add_option("--xi", cfg.xi, "partition p1,p2,...");
    sub->add_option("--pair", cfg.pair, "rank-2 module V(i,j)");
    sub->add_option("--module", cfg.module_path, "module JSON file");
  };

  std::vector<std::pair<std::string, CLI::App*>> subs;
  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    common(sub);
    subs.emplace_back(name, sub);
    return sub;
  };
  add("field-info", "print the field data for --k");
  with_n(add("classify", "irreducible modules of the finite algebra of rank --n"));
  with_n(add("weights", "weights of rank --n with their labels"));
  with_label(add("construct", "build a module and write its matrices"));
  auto* verify = add("verify", "check relations and irreducibility");
  with_label(verify);
  with_n(verify);
  verify->add_flag("--all", cfg.all, "every module of rank --n");
  auto* crystal = add("crystal", "signatures and crystal operators");
  crystal->add_option("--lambda", cfg.lambda, "partition")->required();
  crystal->add_option("--i", cfg.i, "residue (default: all)");
  auto* ss = add("semisimple", "semisimplicity verdict");
  with_n(ss);
  ss->add_flag("--witness", cfg.witness, "include a non-semisimplicity witness");
  auto* sc = add("sum-check", "Wedderburn dimension sum");
  with_n(sc);
  sc->add_flag("--construct", cfg.construct, "use constructed module dimensions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  try {
    return run(command, cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.status == HCLAB_ERR_INTERNAL ? kExitInternal : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
