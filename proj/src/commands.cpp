#include "fpg/commands.hpp"

#include "fpg/samplers.hpp"

namespace fpg {

namespace {

json error_record(const char* kind, const std::exception& e) { return {{"error", kind}, {"message", e.what()}}; }

}  // namespace

// ---- factor ----

json cmd_factor(const json& in, const std::string& mode) {
  RMat g = mat_from_json(in.at("matrix"));
  if (g.rows != g.cols) throw JsonError("matrix must be square");
  check_group_elt(g);
  int r = g.rows - 1;
  json out = {{"mode", mode}, {"rank", r}, {"input", to_json(g)}};
  if (mode == "gauss") {
    try {
      auto G = gauss_decompose(g);
      out["lower"] = to_json(G.lower);
      out["diagonal"] = to_json(G.d);
      out["upper"] = to_json(G.upper);
      out["torus"] = to_json(torus_part(g));
      out["product"] = to_json(RMat(G.lower * diag(G.d) * G.upper));
    } catch (const NotInBigCell& e) {
      json rep = error_record("NotInBigCell", e);
      rep["alpha"] = e.alpha + 1;
      rep["minor"] = to_json(principal_minor(e.alpha, g));
      throw CommandError(kFactorDomain, rep);
    }
  } else if (mode == "bruhat+") {
    auto f = bruhat_factor_pos(g);
    out["u"] = to_json(f.u);
    out["c"] = to_json(f.c);
    out["b"] = to_json(f.b);
    out["product"] = to_json(RMat(f.c * f.b));
  } else if (mode == "bruhat-") {
    auto f = bruhat_factor_neg(g);
    out["b_minus"] = to_json(f.bm);
    out["v"] = to_json(f.v);
    out["c"] = to_json(f.c);
    out["product"] = to_json(RMat(f.bm * f.c));
  } else {
    throw JsonError("unknown factor mode: " + mode);
  }
  (void)r;
  return out;
}

// ---- chart ----

json cmd_chart(const std::string& op, const json& in) {
  if (op == "tau") return {{"tau", to_json(tau(fn_from_json(in.at("point"))))}};
  BSChart ch = chart_from_json(in.at("chart"));
  try {
    if (op == "lusztig") {
      auto eps = rats_from_json(in.at("eps"));
      if (static_cast<int>(eps.size()) != ch.length()) throw JsonError("eps has the wrong length");
      return {{"point", to_json(lusztig_chart(ch, eps))}};
    }
    if (op == "invert") return {{"eps", to_json(invert_lusztig(ch, fn_from_json(in.at("point"))))}};
    if (op == "bs") {
      auto z = rats_from_json(in.at("z"));
      if (static_cast<int>(z.size()) != ch.length()) throw JsonError("z has the wrong length");
      return {{"point", to_json(bs_param(ch, z))}};
    }
    if (op == "coords") return {{"z", to_json(bs_coords(fn_from_json(in.at("point")), ch))}};
  } catch (const OutsideToricChart& e) {
    json rep = error_record("OutsideToricChart", e);
    json v = json::array();
    for (int i : e.vanishing) v.push_back(i + 1);
    rep["vanishing"] = v;
    throw CommandError(kFactorDomain, rep);
  } catch (const ZeroParameter& e) {
    throw CommandError(kFactorDomain, error_record("ZeroParameter", e));
  }
  throw JsonError("unknown chart op: " + op);
}

// ---- groupoid ----

// an arrow of any model, carried with its conversion to Gamma
namespace {
struct AnyArrow {
  std::string model;
  json rec;
  GammaArrow gamma;
};
}  // namespace

static std::vector<Rep> reps_of(const FnPoint& f) { return bar_reps(f.w); }

static AnyArrow read_arrow(const std::string& model, const json& j) {
  if (model == "gamma") return {model, j, gamma_from_json(j)};
  if (model == "c2n") return {model, j, from_C2n(c2n_from_json(j))};
  if (model == "fot") return {model, j, j_inv(fot_from_json(j))};
  if (model == "gdbu") return {model, j, iso_I(gdbu_from_json(j))};
  throw JsonError("unknown model: " + model);
}

static json write_arrow(const std::string& model, const GammaArrow& g) {
  if (model == "gamma") return to_json(g);
  if (model == "c2n") return to_json(to_C2n(g));
  if (model == "fot") return to_json(j_map(g));
  if (model == "gdbu") return to_json(iso_I_inv(g, reps_of(source(g))));
  throw JsonError("unknown model: " + model);
}

static json write_base(const std::string& model, const FnPoint& f) {
  if (model == "c2n") {
    json a = json::array();
    for (const auto& x : flags_of(f)) a.push_back(to_json(x));
    return a;
  }
  return to_json(f);
}

// the operation done natively in the chosen model
static json native_op(const std::string& op, const std::string& model, const json& in) {
  if (op == "unit") {
    FnPoint f = fn_from_json(in.at("point"));
    if (model == "gamma") return to_json(unit(f));
    if (model == "c2n") return to_json(c2n_unit(flags_of(f)));
    if (model == "fot") return to_json(fot_unit(f));
    if (model == "gdbu") return to_json(gdbu_unit(f, reps_of(f)));
    throw JsonError("unknown model: " + model);
  }
  if (op == "mul") {
    const json& arr = in.at("arrows");
    if (!arr.is_array() || arr.size() != 2) throw JsonError("mul takes two arrows");
    auto a = read_arrow(model, arr[0]), b = read_arrow(model, arr[1]);
    if (!composable(a.gamma, b.gamma)) throw NotComposable("target of the first arrow is not the source of the second");
    if (model == "gamma") return to_json(multiply(a.gamma, b.gamma));
    if (model == "c2n") return to_json(c2n_multiply(c2n_from_json(arr[0]), c2n_from_json(arr[1])));
    if (model == "fot") return to_json(fot_multiply(fot_from_json(arr[0]), fot_from_json(arr[1])));
    return to_json(gdbu_multiply(gdbu_from_json(arr[0]), gdbu_from_json(arr[1])));
  }
  const json& j = in.at("arrow");
  if (model == "gamma") {
    auto g = gamma_from_json(j);
    if (op == "source") return to_json(source(g));
    if (op == "target") return to_json(target(g));
    if (op == "inverse") return to_json(inverse(g));
  } else if (model == "c2n") {
    auto a = c2n_from_json(j);
    auto flags = [](const std::vector<FnPoint>& fs) {
      json out = json::array();
      for (const auto& f : fs) out.push_back(to_json(f));
      return out;
    };
    if (op == "source") return flags(c2n_source(a));
    if (op == "target") return flags(c2n_target(a));
    if (op == "inverse") return to_json(c2n_inverse(a));
  } else if (model == "fot") {
    auto a = fot_from_json(j);
    if (op == "source") return to_json(fot_source(a));
    if (op == "target") return to_json(fot_target(a));
    if (op == "inverse") return to_json(fot_inverse(a));
  } else if (model == "gdbu") {
    auto a = gdbu_from_json(j);
    if (op == "source") return to_json(gdbu_source(a));
    if (op == "target") return to_json(gdbu_target(a));
    if (op == "inverse") return to_json(gdbu_inverse(a));
  } else {
    throw JsonError("unknown model: " + model);
  }
  throw JsonError("unknown groupoid op: " + op);
}

// the same operation done in Gamma and carried back
static json via_gamma(const std::string& op, const std::string& model, const json& in) {
  if (op == "unit") return write_arrow(model, unit(fn_from_json(in.at("point"))));
  if (op == "mul") {
    auto a = read_arrow(model, in.at("arrows")[0]), b = read_arrow(model, in.at("arrows")[1]);
    return write_arrow(model, multiply(a.gamma, b.gamma));
  }
  auto a = read_arrow(model, in.at("arrow"));
  if (op == "source") return write_base(model, source(a.gamma));
  if (op == "target") return write_base(model, target(a.gamma));
  if (op == "inverse") return write_arrow(model, inverse(a.gamma));
  throw JsonError("unknown groupoid op: " + op);
}

json cmd_groupoid(const std::string& op, const std::string& model, const json& in, bool cross, const SuiteConfig& c) {
  if (op == "sample") {
    Rng rng(c.seed);
    GammaArrow g, h;
    if (model == "gdbu") {
      std::vector<WeylElt> u;
      for (int i = 0; i < c.n; ++i) {
        WeylElt w = random_weyl(rng, c.rank);
        while (w.is_identity()) w = random_weyl(rng, c.rank);
        u.push_back(w);
      }
      g = sample_gamma_uu(rng, u);
      h = sample_gamma_uu_from(rng, target(g), bar_reps(u));
    } else {
      g = sample_gamma(rng, c.rank, 2 * c.n);
      h = sample_gamma_from(rng, target(g));
    }
    return {{"arrows", {write_arrow(model, g), write_arrow(model, h)}}};
  }
  try {
    json out = {{"op", op}, {"model", model}, {"result", native_op(op, model, in)}};
    if (cross) {
      json other = via_gamma(op, model, in);
      out["cross_model_agrees"] = other == out["result"];
      if (other != out["result"]) {
        out["gamma_result"] = other;
        throw CommandError(kSuiteFailed, out);
      }
    }
    return out;
  } catch (const NotComposable& e) {
    throw CommandError(kNotComposable, error_record("NotComposable", e));
  }
}

// ---- leaf ----

json cmd_leaf(const std::string& op, const std::string& model, const json& in) {
  try {
    if (op == "classify") {
      const json& j = in.at("arrow");
      CellLabel l;
      if (model == "gamma") l = tleaf_of(gamma_from_json(j));
      else if (model == "fot") l = tleaf_of(fot_from_json(j));
      else if (model == "gmn") l = tleaf_of(gmn_from_json(j));
      else if (model == "tFn") l = tleaf_of(tfn_from_json(j));
      else l = tleaf_of(read_arrow(model, j).gamma);
      return {{"label", to_json(l)}};
    }
    if (op == "dim") {
      int r = in.at("rank").get<int>();
      auto ws = weyls_from_json(in.at("w"), r);
      return {{"dim", leaf_dim(ws)}};
    }
    FnPoint p = fn_from_json(in.at("p"));
    TorusElt t = torus_from_json(in.at("t"));
    auto reps = reps_of(p);
    if (op == "same-leaf")
      return {{"same_leaf", same_leaf(p, t, fn_from_json(in.at("p2")), torus_from_json(in.at("t2")), reps)}};
    if (op == "fiber") {
      json a = json::array();
      for (const auto& x : cover_fiber(p, t, reps)) a.push_back(to_json(x));
      return {{"fiber", a}, {"size", a.size()}};
    }
  } catch (const CellMismatch& e) {
    throw CommandError(kLeafDomain, error_record("CellMismatch", e));
  } catch (const NoRationalSqrt& e) {
    json rep = error_record("NoRationalSqrt", e);
    rep["coord"] = e.coord + 1;
    rep["value"] = to_json(e.value);
    throw CommandError(kLeafDomain, rep);
  } catch (const NotInOpenLeaf& e) {
    throw CommandError(kLeafDomain, error_record("NotInOpenLeaf", e));
  }
  throw JsonError("unknown leaf op: " + op);
}

// ---- fixtures: recorded commands with expected output ----

static json run_case(const json& cs, const SuiteConfig& c) {
  std::string cmd = cs.at("command");
  std::string op = cs.value("op", "");
  std::string model = cs.value("model", "gamma");
  const json& in = cs.at("input");
  if (cmd == "factor") return cmd_factor(in, cs.value("mode", "gauss"));
  if (cmd == "chart") return cmd_chart(op, in);
  if (cmd == "groupoid") return cmd_groupoid(op, model, in, false, c);
  if (cmd == "leaf") return cmd_leaf(op, model, in);
  throw JsonError("unknown fixture command: " + cmd);
}

RunReport verify_fixture(const json& in, const SuiteConfig& c) {
  RunReport rep;
  rep.suite = "fixture";
  rep.property = "recorded commands reproduce their expected output";
  rep.cfg = c;
  const json& cases = in.at("cases");
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const json& cs = cases[k];
    json got;
    try {
      got = run_case(cs, c);
    } catch (const CommandError& f) {
      got = f.report;
    } catch (const std::exception& e) {
      got = error_record("exception", e);
    }
    rep.check(got == cs.at("expect"), "case " + std::to_string(k), [&] {
      return json{{"case", k}, {"expected", cs.at("expect")}, {"got", got}};
    });
  }
  return rep;
}

CommandResult run_command(const std::string& command, const std::string& op, const std::string& model,
                          const std::string& mode, bool cross, const SuiteConfig& c, const json& in) {
  try {
    if (command == "factor") return {kOk, cmd_factor(in, in.value("mode", mode))};
    if (command == "chart") return {kOk, cmd_chart(op, in)};
    if (command == "groupoid") return {kOk, cmd_groupoid(op, model, in, cross, c)};
    if (command == "leaf") return {kOk, cmd_leaf(op, model, in)};
    if (command == "verify") {
      auto rep = op == "fixture" ? verify_fixture(in, c) : run_suite(op, c);
      return {rep.ok() ? kOk : kSuiteFailed, rep.to_json()};
    }
    throw JsonError("unknown command: " + command);
  } catch (const CommandError& f) {
    return {f.code, f.report};
  } catch (const json::exception& e) {
    return {kBadInput, error_record("BadInput", e)};
  } catch (const JsonError& e) {
    return {kBadInput, error_record("BadInput", e)};
  } catch (const ConstraintViolated& e) {
    return {kBadInput, error_record("ConstraintViolated", e)};
  } catch (const std::exception& e) {
    return {kBadInput, error_record("error", e)};
  }
}

}  // namespace fpg
