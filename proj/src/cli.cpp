#include "djqla/cli.hpp"

#include <set>

#include "djqla/errors.hpp"

namespace djqla {

namespace {

const std::vector<std::pair<Command, std::string>>& command_names() {
  static const std::vector<std::pair<Command, std::string>> names{{Command::verify, "verify"},
                                                                  {Command::classify, "classify"},
                                                                  {Command::equivalence, "equivalence"},
                                                                  {Command::normal_form, "normal-form"},
                                                                  {Command::recognize, "recognize"}};
  return names;
}

const ParamSpec& require_spec(const JobConfig& cfg) {
  if (!cfg.spec) throw ParseError(to_string(cfg.command) + " needs a parameter spec");
  return *cfg.spec;
}

ResidualTensor operator_residual(const std::string& name, const Operator2& m) {
  const int d = m.dim();
  ResidualTensor r(name, {d, d, d, d});
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) r.at({k, l, i, j}) = m.at(k, l, i, j);
  return r;
}

// Values for every symbol left in the parameters and c; q gets a fixed generic value.
SamplePoint generic_point(const ParamSpec& spec, const Scalar& c, std::uint64_t seed) {
  std::set<SymbolId> symbols;
  for (auto s : spec.q.symbols()) symbols.insert(s);
  for (const auto& v : spec.p)
    for (auto s : v.symbols()) symbols.insert(s);
  for (auto s : c.symbols()) symbols.insert(s);
  Sampler sampler(seed);
  SamplePoint point;
  for (auto s : symbols) {
    const auto& qs = Sampler::generic_q_values();
    point[s] = s == q_symbol() ? qs[seed % qs.size()] : sampler.generic_p();
  }
  return point;
}

struct Prepared {
  ParamSpec spec;
  Scalar c;
};

Prepared prepare(const JobConfig& cfg) {
  Prepared p{require_spec(cfg), cfg.c};
  if (p.spec.q_degenerate()) {
    throw DegenerateParameters("q = " + p.spec.q.to_string() + " has q^4 = 1; the checks assume q^4 != 1");
  }
  if (cfg.mode == Mode::sampled) {
    SamplePoint point = generic_point(p.spec, p.c, cfg.seed);
    p.spec = p.spec.substitute(point);
    p.c = p.c.substitute(point);
  }
  return p;
}

StructureConstants bracket_for(const JobConfig& cfg, const Prepared& p) {
  if (cfg.bracket == "zero") return StructureConstants(p.spec.dim);
  if (cfg.bracket == "explicit") {
    if (!cfg.explicit_C) throw ParseError("bracket 'explicit' needs a 'C' object");
    if (cfg.explicit_C->dim() != p.spec.dim) throw DimensionMismatch("bracket dim differs from spec dim");
    return *cfg.explicit_C;
  }
  return build_theorem_C(p.spec.dim, p.c);
}

Report run_verify(const JobConfig& cfg) {
  Prepared p = prepare(cfg);
  const Operator2 rhat = build_rhat(p.spec).to_operator();
  const Operator2 sigma = build_sigma(p.spec).to_operator();
  const Scalar& q = p.spec.q;
  StructureConstants C = bracket_for(cfg, p);

  json body;
  body["spec"] = to_json(p.spec);
  body["mode"] = cfg.mode == Mode::sampled ? "sampled" : "symbolic";
  body["ice"] = check_ice(rhat);
  body["indecomposable"] = check_indecomposable(rhat);
  body["unitary"] = check_unitary(sigma);
  bool skew = true;
  try {
    skew_inverse(rhat);
  } catch (const NotSkewInvertible&) {
    skew = false;
  }
  body["skew_invertible"] = skew;
  ResidualTensor braid_rhat = braid_residual_tensor(rhat);
  ResidualTensor braid_sigma = braid_residual_tensor(sigma);
  ResidualTensor hecke = operator_residual("hecke", hecke_residual(sigma, Scalar(1), -q.pow(-2)));
  body["braid_rhat"] = to_json(braid_rhat);
  body["braid_sigma"] = to_json(braid_sigma);
  body["hecke"] = to_json(hecke);
  body["bracket"] = to_json(C);
  AxiomReport axioms = check_axioms(QLATriple{sigma, C, q});
  body["axioms"] = to_json(axioms);
  bool pass = body["ice"].get<bool>() && skew && braid_rhat.is_zero() && braid_sigma.is_zero() && hecke.is_zero() &&
              axioms.all_zero();
  body["passed"] = pass;
  return Report{"verify", pass ? 0 : 1, body};
}

Report run_classify(const JobConfig& cfg) {
  SweepReport sweep = classify_sweep(cfg.d_max, cfg.seed);
  json body = to_json(sweep);
  bool pass = sweep.mismatches() == 0;
  body["passed"] = pass;
  return Report{"classify", pass ? 0 : 1, body};
}

Report run_equivalence(const JobConfig& cfg) {
  Prepared p = prepare(cfg);
  const Operator2 sigma = build_sigma(p.spec).to_operator();
  StructureConstants C = bracket_for(cfg, p);
  EquivalenceReport rep = check_equivalence(sigma, C);
  json body = to_json(rep);
  body["spec"] = to_json(p.spec);
  body["bracket"] = to_json(C);
  bool pass = rep.extended_zero() && rep.systems_zero() && rep.consistent();
  body["passed"] = pass;
  return Report{"equivalence", pass ? 0 : 1, body};
}

Report run_normal_form(const JobConfig& cfg) {
  Prepared p = prepare(cfg);
  StructureConstants C = bracket_for(cfg, p);
  RewriteSystem rs = build_rules(build_sigma(p.spec), C);
  Reducer red(rs);
  json inputs = json::array();
  json outputs = json::array();
  for (const auto& e : cfg.words) {
    for (const auto& [w, coeff] : e) {
      (void)coeff;
      for (int x : w) {
        if (x < 0 || x >= p.spec.dim) throw ParseError("word letter out of range");
      }
    }
    inputs.push_back(to_json(e));
    outputs.push_back(to_json(red.reduce(e)));
  }
  json body{{"spec", to_json(p.spec)}, {"bracket", to_json(C)}, {"inputs", inputs}, {"normal_forms", outputs},
            {"passed", true}};
  return Report{"normal-form", 0, body};
}

Report run_recognize(const JobConfig& cfg) {
  IceMatrix m = cfg.ice ? *cfg.ice : build_rhat(require_spec(cfg));
  json body;
  body["input"] = to_json(m);
  try {
    StandardForm f = recognize_standard(m);
    body["standard"] = true;
    body["standard_form"] = to_json(f);
    body["passed"] = true;
    return Report{"recognize", 0, body};
  } catch (const NotStandard& e) {
    body["standard"] = false;
    body["reason"] = e.what();
    body["passed"] = false;
    return Report{"recognize", 1, body};
  }
}

std::string error_name(const std::exception& e) {
  std::string what = e.what();
  auto pos = what.find(':');
  return pos == std::string::npos ? "Error" : what.substr(0, pos);
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [cmd, name] : command_names()) {
    if (cmd == c) return name;
  }
  return "verify";
}

Command command_from_string(const std::string& s) {
  for (const auto& [cmd, name] : command_names()) {
    if (name == s) return cmd;
  }
  throw ParseError("unknown command '" + s + "'");
}

JobConfig config_from_json(const json& j, std::optional<Command> command) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  JobConfig cfg;
  try {
    if (command) {
      cfg.command = *command;
    } else if (j.contains("command")) {
      cfg.command = command_from_string(j.at("command").get<std::string>());
    } else {
      throw ParseError("no command given");
    }
    if (j.contains("spec")) cfg.spec = param_spec_from_json(j.at("spec"));
    if (j.contains("c")) cfg.c = scalar_from_json(j.at("c"));
    if (j.contains("bracket")) {
      const json& b = j.at("bracket");
      if (b.is_string()) {
        cfg.bracket = b.get<std::string>();
        if (cfg.bracket != "theorem" && cfg.bracket != "zero" && cfg.bracket != "explicit") {
          throw ParseError("bracket must be 'theorem', 'zero', 'explicit' or an object");
        }
      } else {
        cfg.bracket = "explicit";
        cfg.explicit_C = structure_constants_from_json(b);
      }
    }
    if (j.contains("C")) {
      cfg.bracket = "explicit";
      cfg.explicit_C = structure_constants_from_json(j.at("C"));
    }
    if (j.contains("words")) {
      const int d = cfg.spec ? cfg.spec->dim : 64;
      for (const auto& w : j.at("words")) {
        if (w.is_array() && (w.empty() || w.front().is_number_integer())) {
          cfg.words.push_back(element_from_json(json::array({json{{"word", w}}}), d));
        } else {
          cfg.words.push_back(element_from_json(w, d));
        }
      }
    }
    if (j.contains("ice")) cfg.ice = ice_from_json(j.at("ice"));
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("d_max")) cfg.d_max = j.at("d_max").get<int>();
    if (j.contains("mode")) {
      std::string m = j.at("mode").get<std::string>();
      if (m != "symbolic" && m != "sampled") throw ParseError("mode must be 'symbolic' or 'sampled'");
      cfg.mode = m == "sampled" ? Mode::sampled : Mode::symbolic;
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return cfg;
}

json to_json(const JobConfig& cfg) {
  json j{{"command", to_string(cfg.command)},
         {"c", cfg.c.to_string()},
         {"seed", cfg.seed},
         {"d_max", cfg.d_max},
         {"mode", cfg.mode == Mode::sampled ? "sampled" : "symbolic"}};
  if (cfg.spec) j["spec"] = to_json(*cfg.spec);
  if (cfg.bracket == "explicit" && cfg.explicit_C) {
    j["bracket"] = to_json(*cfg.explicit_C);
  } else {
    j["bracket"] = cfg.bracket;
  }
  if (!cfg.words.empty()) {
    json words = json::array();
    for (const auto& e : cfg.words) words.push_back(to_json(e));
    j["words"] = words;
  }
  if (cfg.ice) j["ice"] = to_json(*cfg.ice);
  return j;
}

json to_json(const Report& r) { return json{{"command", r.command}, {"exit_code", r.exit_code}, {"report", r.body}}; }

Report report_from_json(const json& j) {
  try {
    return Report{j.at("command").get<std::string>(), j.at("exit_code").get<int>(), j.at("report")};
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

Report run(const JobConfig& cfg) {
  const std::string name = to_string(cfg.command);
  try {
    switch (cfg.command) {
      case Command::verify: return run_verify(cfg);
      case Command::classify: return run_classify(cfg);
      case Command::equivalence: return run_equivalence(cfg);
      case Command::normal_form: return run_normal_form(cfg);
      case Command::recognize: return run_recognize(cfg);
    }
  } catch (const GenericityFailure& e) {
    return Report{name, 1, json{{"error", "GenericityFailure"}, {"message", e.what()}, {"passed", false}}};
  } catch (const Error& e) {
    return Report{name, 2, json{{"error", error_name(e)}, {"message", e.what()}, {"passed", false}}};
  }
  return Report{name, 2, json{{"error", "Error"}, {"message", "unknown command"}, {"passed", false}}};
}

}  // namespace djqla
