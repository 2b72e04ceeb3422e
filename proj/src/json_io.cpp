#include "djqla/json_io.hpp"

#include "djqla/errors.hpp"

namespace djqla {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

std::vector<int> to_base(std::vector<int> v, int base) {
  for (auto& x : v) x += base;
  return v;
}

json scalar_grid(const std::vector<Scalar>& flat, int d) {
  json rows = json::array();
  for (int i = 0; i < d; ++i) {
    json row = json::array();
    for (int j = 0; j < d; ++j) row.push_back(flat[static_cast<size_t>(i * d + j)].to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Scalar> parse_grid(const json& rows, int d, const char* what) {
  if (!rows.is_array() || rows.size() != static_cast<size_t>(d)) {
    throw ParseError(std::string(what) + " must be a " + std::to_string(d) + "x" + std::to_string(d) + " array");
  }
  std::vector<Scalar> out;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<size_t>(d)) {
      throw ParseError(std::string(what) + " rows must have length " + std::to_string(d));
    }
    for (const auto& v : row) out.push_back(scalar_from_json(v));
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------------ scalars

json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("scalar must be a string or an integer");
}

// ---------------------------------------------------------------- ParamSpec

json to_json(const ParamSpec& spec) {
  return json{{"dim", spec.dim}, {"parity", spec.parity}, {"q", spec.q.to_string()}, {"p", scalar_grid(spec.p, spec.dim)}};
}

ParamSpec param_spec_from_json(const json& j) {
  const int d = get<int>(j, "dim");
  if (d < 1) throw InvalidSpec("dim must be >= 1");
  std::vector<int> parity = j.contains("parity") ? get<std::vector<int>>(j, "parity") : std::vector<int>(d, 0);
  Scalar q = j.contains("q") ? scalar_from_json(j.at("q")) : Scalar::var(q_symbol());
  ParamSpec spec = ParamSpec::trivial_p(d, std::move(parity), std::move(q));
  if (j.contains("p")) {
    const json& p = j.at("p");
    if (p.is_string() && p.get<std::string>() == "symbolic") {
      for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) spec.set_p(a, b, Scalar::var(p_symbol(a + 1, b + 1)));
    } else {
      spec.p = parse_grid(p, d, "p");
    }
  }
  spec.validate();
  return spec;
}

// ----------------------------------------------------------------- operators

json to_json(const Operator2& m) {
  json entries = json::array();
  const ScalarMatrix& mat = m.matrix();
  for (size_t r = 0; r < mat.size(); ++r)
    for (size_t c = 0; c < mat.size(); ++c) {
      if (!mat(r, c).is_zero()) entries.push_back(json::array({r, c, mat(r, c).to_string()}));
    }
  return json{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

Operator2 operator_from_json(const json& j) {
  const int d = get<int>(j, "dim");
  if (d < 1) throw ParseError("operator dim must be >= 1");
  Operator2 m(d);
  const size_t n = static_cast<size_t>(d * d);
  for (const auto& e : field(j, "entries")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("operator entries are [row, col, value]");
    size_t r = e[0].get<size_t>();
    size_t c = e[1].get<size_t>();
    if (r >= n || c >= n) throw ParseError("operator entry index out of range");
    m.at(static_cast<int>(r) / d, static_cast<int>(r) % d, static_cast<int>(c) / d, static_cast<int>(c) % d) =
        scalar_from_json(e[2]);
  }
  return m;
}

json to_json(const IceMatrix& m) {
  std::vector<Scalar> a;
  std::vector<Scalar> b;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      a.push_back(m.a(i, j));
      b.push_back(m.b(i, j));
    }
  return json{{"a", scalar_grid(a, m.dim())}, {"b", scalar_grid(b, m.dim())}};
}

IceMatrix ice_from_json(const json& j) {
  const json& a = field(j, "a");
  if (!a.is_array() || a.empty()) throw ParseError("ice 'a' must be a non-empty square array");
  const int d = static_cast<int>(a.size());
  std::vector<Scalar> av = parse_grid(a, d, "a");
  std::vector<Scalar> bv = parse_grid(field(j, "b"), d, "b");
  IceMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      m.a(i, k) = av[static_cast<size_t>(i * d + k)];
      m.b(i, k) = bv[static_cast<size_t>(i * d + k)];
    }
  for (int i = 0; i < d; ++i) {
    if (!m.b(i, i).is_zero()) throw ParseError("b_ii must be 0; the diagonal lives in a_ii");
  }
  return m;
}

json to_json(const StructureConstants& C) {
  json entries = json::array();
  const int d = C.dim();
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (!C.at(k, i, j).is_zero()) {
          entries.push_back(json{{"indices", {k + 1, i + 1, j + 1}}, {"value", C.at(k, i, j).to_string()}});
        }
      }
  return json{{"dim", d}, {"entries", std::move(entries)}};
}

StructureConstants structure_constants_from_json(const json& j) {
  const int d = get<int>(j, "dim");
  StructureConstants C(d);
  for (const auto& e : field(j, "entries")) {
    auto idx = get<std::vector<int>>(e, "indices");
    if (idx.size() != 3) throw ParseError("bracket indices are [k, i, j]");
    for (int v : idx) {
      if (v < 1 || v > d) throw ParseError("bracket index out of range 1.." + std::to_string(d));
    }
    C.at(idx[0] - 1, idx[1] - 1, idx[2] - 1) = scalar_from_json(field(e, "value"));
  }
  return C;
}

// ----------------------------------------------------------------- residuals

json to_json(const ResidualTensor& r) {
  json comps = json::array();
  for (const auto& c : r.nonzero_components()) {
    comps.push_back(json{{"indices", c.indices}, {"value", c.value.to_string()}});
  }
  return json{{"name", r.name()},
              {"extents", r.extents()},
              {"label_base", r.label_base()},
              {"zero", comps.empty()},
              {"nonzero_components", std::move(comps)}};
}

ResidualTensor residual_from_json(const json& j) {
  const int base = j.contains("label_base") ? get<int>(j, "label_base") : 1;
  ResidualTensor r(get<std::string>(j, "name"), get<std::vector<int>>(j, "extents"), base);
  for (const auto& c : field(j, "nonzero_components")) {
    auto idx = get<std::vector<int>>(c, "indices");
    if (idx.size() != r.extents().size()) throw ParseError("residual index rank mismatch");
    for (size_t n = 0; n < idx.size(); ++n) {
      idx[n] -= base;
      if (idx[n] < 0 || idx[n] >= r.extents()[n]) throw ParseError("residual index out of range");
    }
    r.at(std::span<const int>(idx)) = scalar_from_json(field(c, "value"));
  }
  if (j.contains("zero") && get<bool>(j, "zero") != r.is_zero()) throw ParseError("'zero' disagrees with components");
  return r;
}

// ------------------------------------------------------------------ elements

json to_json(const Element& e) {
  json out = json::array();
  for (const auto& [w, c] : e) out.push_back(json{{"word", to_base(w, 1)}, {"coeff", c.to_string()}});
  return out;
}

Element element_from_json(const json& j, int dim) {
  if (!j.is_array()) throw ParseError("element must be a list of {word, coeff}");
  Element e;
  for (const auto& t : j) {
    auto w = get<std::vector<int>>(t, "word");
    for (auto& x : w) {
      if (x < 1 || x > dim) throw ParseError("word letter out of range 1.." + std::to_string(dim));
      --x;
    }
    Scalar c = t.contains("coeff") ? scalar_from_json(t.at("coeff")) : Scalar(1);
    add_term(e, w, c);
  }
  return e;
}

json to_json(const StandardForm& f) {
  return json{{"spec", to_json(f.spec)}, {"perm", to_base(f.perm, 1)}, {"scale", f.scale.to_string()}};
}

StandardForm standard_form_from_json(const json& j) {
  StandardForm f;
  f.spec = param_spec_from_json(field(j, "spec"));
  f.perm = to_base(get<std::vector<int>>(j, "perm"), -1);
  f.scale = scalar_from_json(field(j, "scale"));
  return f;
}

// ------------------------------------------------------------------- reports

json to_json(const EquivalenceReport& r) {
  return json{{"extended", to_json(r.extended)}, {"braid", to_json(r.braid)}, {"jacobi", to_json(r.jacobi)},
              {"E", to_json(r.e)},              {"F", to_json(r.f)},          {"extended_zero", r.extended_zero()},
              {"systems_zero", r.systems_zero()}, {"consistent", r.consistent()}};
}

json to_json(const AxiomReport& r) {
  return json{{"braided_symmetry", to_json(r.braided_symmetry)},
              {"jacobi", to_json(r.jacobi)},
              {"E", to_json(r.e)},
              {"F", to_json(r.f)},
              {"all_zero", r.all_zero()}};
}

json to_json(const DiamondReport& r) {
  json dis = json::array();
  for (const auto& d : r.disagreements) {
    dis.push_back(json{{"kind", d.kind}, {"word", to_base(d.word, 1)}, {"left", to_json(d.left)}, {"right", to_json(d.right)}});
  }
  return json{{"overlaps_checked", r.overlaps_checked},
              {"relations_checked", r.relations_checked},
              {"confluent", r.confluent()},
              {"disagreements", std::move(dis)}};
}

json to_json(const SweepCell& c) {
  json j{{"dim", c.dim},
         {"parity", c.parity},
         {"p_regime", c.p_regime},
         {"predicted_dim", c.predicted_dim},
         {"computed_dim", c.computed_dim},
         {"match", c.match},
         {"reason", c.reason},
         {"resample_consistent", c.resample_consistent},
         {"antisymmetry", c.antisymmetry},
         {"first_row_relation", c.first_row_relation},
         {"generator_matches", c.generator_matches},
         {"symbolic_verified", c.symbolic_verified}};
  j["generator"] = c.generator ? to_json(*c.generator) : json(nullptr);
  return j;
}

SweepCell sweep_cell_from_json(const json& j) {
  SweepCell c;
  c.dim = get<int>(j, "dim");
  c.parity = get<std::vector<int>>(j, "parity");
  c.p_regime = get<std::string>(j, "p_regime");
  c.predicted_dim = get<int>(j, "predicted_dim");
  c.computed_dim = get<int>(j, "computed_dim");
  c.match = get<bool>(j, "match");
  c.reason = get<std::string>(j, "reason");
  c.resample_consistent = get<bool>(j, "resample_consistent");
  c.antisymmetry = get<bool>(j, "antisymmetry");
  c.first_row_relation = get<bool>(j, "first_row_relation");
  c.generator_matches = get<bool>(j, "generator_matches");
  c.symbolic_verified = get<bool>(j, "symbolic_verified");
  if (j.contains("generator") && !j.at("generator").is_null()) {
    c.generator = structure_constants_from_json(j.at("generator"));
  }
  return c;
}

json to_json(const TargetedSample& t) {
  return json{{"label", t.label},
              {"spec", to_json(t.spec)},
              {"predicted_dim", t.predicted_dim},
              {"linear_dim", t.linear_dim},
              {"computed_dim", t.computed_dim}};
}

TargetedSample targeted_sample_from_json(const json& j) {
  TargetedSample t;
  t.label = get<std::string>(j, "label");
  t.spec = param_spec_from_json(field(j, "spec"));
  t.predicted_dim = get<int>(j, "predicted_dim");
  t.linear_dim = get<int>(j, "linear_dim");
  t.computed_dim = get<int>(j, "computed_dim");
  return t;
}

json to_json(const SweepReport& r) {
  json cells = json::array();
  for (const auto& c : r.cells) cells.push_back(to_json(c));
  json targeted = json::array();
  for (const auto& t : r.targeted) targeted.push_back(to_json(t));
  return json{{"d_max", r.d_max},
              {"seed", r.seed},
              {"mismatches", r.mismatches()},
              {"cells", std::move(cells)},
              {"targeted", std::move(targeted)}};
}

SweepReport sweep_report_from_json(const json& j) {
  SweepReport r;
  r.d_max = get<int>(j, "d_max");
  r.seed = get<std::uint64_t>(j, "seed");
  for (const auto& c : field(j, "cells")) r.cells.push_back(sweep_cell_from_json(c));
  if (j.contains("targeted")) {
    for (const auto& t : j.at("targeted")) r.targeted.push_back(targeted_sample_from_json(t));
  }
  return r;
}

}  // namespace djqla
