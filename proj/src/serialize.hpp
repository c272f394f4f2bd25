#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "crystal.hpp"
#include "field.hpp"
#include "oracle.hpp"

namespace hclab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hclab/1";

inline Json scalar_json(const Gf& a) { return a.coeffs(); }
inline Json scalar_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

inline Gf scalar_from_json(const ExactField& f, const Json& j) {
  const auto* arith = f.backend().arith.get();
  if (!j.is_array() || static_cast<int>(j.size()) != arith->e)
    fail(ErrorKind::InvalidArgument, "exact scalar must be a list of " + std::to_string(arith->e) + " coefficients");
  Gf g(arith);
  for (int i = 0; i < arith->e; ++i) {
    const auto v = j[i].get<int64_t>();
    if (v < 0 || v >= static_cast<int64_t>(arith->p)) fail(ErrorKind::InvalidArgument, "coefficient out of range");
    g.set_coeff(i, static_cast<uint32_t>(v));
  }
  return g;
}

inline std::complex<double> scalar_from_json(const FloatField&, const Json& j) {
  if (!j.is_array() || j.size() != 2) fail(ErrorKind::InvalidArgument, "float scalar must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

template <class S>
Json matrix_json(const Matrix<S>& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
la::Mat<F> matrix_from_json(const F& f, const Json& j, size_t dim) {
  if (!j.is_array() || j.size() != dim) fail(ErrorKind::InvalidArgument, "matrix must have " + std::to_string(dim) + " rows");
  auto m = la::zeros(f, dim, dim);
  for (size_t r = 0; r < dim; ++r) {
    if (!j[r].is_array() || j[r].size() != dim) fail(ErrorKind::InvalidArgument, "ragged matrix row");
    for (size_t c = 0; c < dim; ++c) m(r, c) = scalar_from_json(f, j[r][c]);
  }
  return m;
}

template <class F>
Json field_json(const F& f) {
  Json j;
  j["k"] = f.k();
  j["h"] = f.h();
  j["parity"] = f.h_even() ? "even" : "odd";
  if constexpr (F::exact) {
    const auto& a = *f.backend().arith;
    j["mode"] = "exact";
    j["p"] = a.p;
    j["e"] = a.e;
    j["modulus"] = a.modulus();
  } else {
    j["mode"] = "float";
    j["tolerance"] = f.backend().tol;
  }
  j["index_set"] = f.index_set();
  j["q"] = scalar_json(f.q());
  j["eps"] = scalar_json(f.eps());
  Json qv = Json::array(), bp = Json::array(), bm = Json::array();
  for (int i : f.index_set()) {
    qv.push_back(scalar_json(f.qval(i)));
    bp.push_back(scalar_json(f.bplus(i)));
    bm.push_back(scalar_json(f.bminus(i)));
  }
  j["qval"] = qv;
  j["bplus"] = bp;
  j["bminus"] = bm;
  Json adj = Json::array();
  for (int a : f.index_set())
    for (int b : f.index_set())
      if (a < b) adj.push_back({{"i", a}, {"j", b}, {"adjacent", f.adjacent(a, b)}, {"omega", scalar_json(f.omega(a, b))}});
  j["omega"] = adj;
  Json sq = Json::array();
  for (const auto& [rad, root] : f.sqrt_table()) sq.push_back({{"radicand", scalar_json(rad)}, {"root", scalar_json(root)}});
  j["sqrt_table"] = sq;
  return j;
}

template <class F>
Json module_json(const F& f, const SuperModule<typename F::value_type>& M) {
  Json j;
  j["schema"] = kSchema;
  j["field"] = {{"k", f.k()}, {"mode", F::exact ? "exact" : "float"}};
  if constexpr (F::exact) {
    j["field"]["p"] = f.backend().arith->p;
    j["field"]["e"] = f.backend().arith->e;
  }
  j["dim"] = M.dim;
  j["n"] = M.n();
  Json labels = Json::object();
  for (const auto& [k, v] : M.labels) labels[k] = v;
  j["labels"] = labels;
  j["grading"] = M.grading;
  auto list = [](const std::vector<Matrix<typename F::value_type>>& ms) {
    Json a = Json::array();
    for (const auto& m : ms) a.push_back(matrix_json(m));
    return a;
  };
  j["X"] = list(M.X);
  j["Xinv"] = list(M.Xinv);
  j["C"] = list(M.C);
  j["T"] = list(M.T);
  return j;
}

template <class F>
SuperModule<typename F::value_type> module_from_json(const F& f, const Json& j) {
  if (!j.is_object() || j.value("schema", "") != kSchema) fail(ErrorKind::InvalidArgument, "not a module file of schema hclab/1");
  const auto& fld = j.at("field");
  if (fld.at("k").get<int>() != f.k() || fld.at("mode").get<std::string>() != (F::exact ? "exact" : "float"))
    fail(ErrorKind::InvalidArgument, "module file was written for a different field");
  if constexpr (F::exact) {
    if (fld.at("p").get<uint32_t>() != f.backend().arith->p || fld.at("e").get<int>() != f.backend().arith->e)
      fail(ErrorKind::InvalidArgument, "module file was written over a different finite field");
  }
  SuperModule<typename F::value_type> M;
  M.dim = j.at("dim").get<size_t>();
  M.grading = j.at("grading").get<std::vector<uint8_t>>();
  if (M.grading.size() != M.dim) fail(ErrorKind::InvalidArgument, "grading length does not match dim");
  for (const auto& [k, v] : j.at("labels").items()) M.labels[k] = v.template get<std::vector<int>>();
  auto read = [&](const char* key, std::vector<Matrix<typename F::value_type>>& out) {
    for (const auto& m : j.at(key)) out.push_back(matrix_from_json(f, m, M.dim));
  };
  read("X", M.X);
  read("Xinv", M.Xinv);
  read("C", M.C);
  read("T", M.T);
  return M;
}

inline Json report_json(const RelationReport& r) {
  Json a = Json::array();
  for (const auto& v : r.relations) {
    Json e = {{"relation", v.name}, {"passed", v.passed}, {"checks", v.checks}};
    if (!v.passed) e["witness"] = {{"indices", v.indices}, {"row", v.row}, {"col", v.col}, {"identity", v.detail}};
    a.push_back(std::move(e));
  }
  return a;
}

inline Json certificate_json(const Certificate& c) {
  Json j = {{"passed", c.passed()},
            {"completely_splittable", c.completely_splittable},
            {"supercommutant_dim", c.commutant_dim},
            {"a_commutant", c.a},
            {"b_weight_spaces_generate", c.b},
            {"c_basis_vectors_generate", c.c},
            {"argument", Certificate::kArgument}};
  if (!c.b_failure.empty()) j["b_failure"] = c.b_failure;
  if (!c.c_failure.empty()) j["c_failure"] = c.c_failure;
  return j;
}

inline const char* family_name(Family f) {
  switch (f) {
    case Family::RP:
      return "RP";
    case Family::DRP:
      return "DRP";
    case Family::CSP:
      return "CSP";
    case Family::CSP1:
      return "CSP1";
    case Family::CSP2:
      return "CSP2";
  }
  return "?";
}

inline Json class_entry_json(const ClassEntry& e) {
  return {{"xi", e.xi},       {"family", family_name(e.family)}, {"gamma0", e.gamma0}, {"count", e.count},
          {"dim", e.dim},     {"type", e.type_q ? "Q" : "M"},     {"representative", e.representative}};
}

inline Json sum_check_json(const SumCheck& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) entries.push_back(class_entry_json(e));
  return {{"h", s.h},           {"n", s.n},
          {"entries", entries}, {"sum", s.sum},
          {"target", s.target}, {"verdict", to_string(s.verdict)},
          {"conclusive", s.conclusive}, {"note", s.note}};
}

inline Json marks_json(const std::vector<NodeMark>& marks) {
  Json a = Json::array();
  for (const auto& m : marks)
    a.push_back({{"cell", {m.cell.row, m.cell.col}},
                 {"residue", m.residue},
                 {"kind", m.kind == NodeMark::Kind::Addable ? "addable" : "removable"},
                 {"paired", m.paired}});
  return a;
}

}  // namespace hclab
