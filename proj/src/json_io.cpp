#include "fpg/json_io.hpp"

namespace fpg {

namespace {

const json& field(const json& j, const char* k) {
  if (!j.is_object() || !j.contains(k)) throw JsonError(std::string("missing field '") + k + "'");
  return j.at(k);
}

void expect_kind(const json& j, const char* kind) {
  if (!j.is_object()) throw JsonError(std::string("expected a ") + kind + " record");
  if (j.contains("kind") && j.at("kind") != kind)
    throw JsonError(std::string("expected kind ") + kind + ", got " + j.at("kind").dump());
}

int rank_of(const json& j) {
  if (j.contains("rank")) return j.at("rank").get<int>();
  // fall back on the size of the first matrix
  for (const char* k : {"c", "reps", "bm", "b"})
    if (j.contains(k)) {
      const json& m = j.at(k);
      if (m.is_array() && !m.empty()) {
        const json& first = m[0][0].is_array() ? m[0] : m;
        return static_cast<int>(first.size()) - 1;
      }
    }
  throw JsonError("cannot infer the rank");
}

json mats(const std::vector<RMat>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(to_json(m));
  return a;
}

}  // namespace

json to_json(const Rat& x) { return x.get_str(); }

json to_json(const RMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const WeylElt& w) {
  json a = json::array();
  for (int i : w.word()) a.push_back(i + 1);
  return a;
}

json to_json(const TorusElt& t) {
  json a = json::array();
  for (const auto& v : t.vals) a.push_back(to_json(v));
  return a;
}

json to_json(const std::vector<WeylElt>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(to_json(w));
  return a;
}

json to_json(const std::vector<RMat>& ms) { return mats(ms); }

json to_json(const FnPoint& p) {
  return {{"kind", "Fn"}, {"rank", p.rank()}, {"n", p.n()}, {"w", to_json(p.w)}, {"c", mats(p.c)}};
}

json to_json(const TFnPoint& p) {
  return {{"kind", "tFn"}, {"rank", p.rank()}, {"n", p.n()}, {"w", to_json(p.w)}, {"c", mats(p.c)}, {"b", to_json(p.b)}};
}

json to_json(const GammaArrow& g) {
  return {{"kind", "gamma"}, {"rank", g.x.rank()}, {"n", g.half()}, {"arity", g.arity()}, {"w", to_json(g.x.w)},
          {"c", mats(g.x.c)},  {"b", to_json(g.x.b)},  {"bm", to_json(g.bm)}};
}

json to_json(const C2nArrow& a) {
  json fl = json::array();
  for (const auto& f : a.f) fl.push_back(to_json(f));
  return {{"kind", "c2n"}, {"rank", a.bm.rows - 1}, {"n", a.half()}, {"flags", fl}, {"bm", to_json(a.bm)}};
}

json to_json(const FoTArrow& a) {
  return {{"kind", "fot"}, {"rank", a.p.rank()}, {"n", a.half()}, {"p", to_json(a.p)}, {"t", to_json(a.t)}};
}

json to_json(const GdbuArrow& a) {
  return {{"kind", "gdbu"}, {"rank", a.b.rows - 1}, {"n", static_cast<int>(a.c.size())}, {"c", mats(a.c)},
          {"b", to_json(a.b)},  {"bm", to_json(a.bm)},  {"cp", mats(a.cp)}};
}

json to_json(const GmnPoint& p) {
  json y = {{"v", to_json(p.y.v)}, {"c", mats(p.y.c)}, {"bm", to_json(p.y.bm)}};
  return {{"kind", "gmn"}, {"rank", p.x.rank()}, {"m", p.m()}, {"n", p.n()}, {"x", to_json(p.x)}, {"y", y}};
}

json to_json(const BSChart& ch) {
  json blocks = json::array();
  for (const auto& b : ch.blocks) {
    json w = json::array();
    for (int i : b) w.push_back(i + 1);
    blocks.push_back(w);
  }
  return {{"kind", "bs-chart"}, {"rank", ch.rank}, {"blocks", blocks}};
}

json to_json(const TorusCoset& c) {
  json basis = json::array();
  for (const auto& v : c.ann.basis) basis.push_back(v);
  return {{"rep", to_json(c.rep)}, {"ann", basis}};
}

json to_json(const LevelPair& l) { return {{"first", to_json(l.first)}, {"second", to_json(l.second)}}; }

json to_json(const CellLabel& l) { return {{"u", to_json(l.u)}, {"v", to_json(l.v)}}; }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw JsonError("rationals are strings \"p/q\": " + j.dump());
  try {
    return parse_rat(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw JsonError(e.what());
  }
}

std::vector<Rat> rats_from_json(const json& j) {
  if (!j.is_array()) throw JsonError("expected an array of rationals");
  std::vector<Rat> out;
  for (const auto& x : j) out.push_back(rat_from_json(x));
  return out;
}

RMat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw JsonError("matrices are arrays of rows");
  int r = static_cast<int>(j.size()), c = static_cast<int>(j[0].size());
  RMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(j[i].size()) != c) throw JsonError("ragged matrix");
    for (int k = 0; k < c; ++k) m(i, k) = rat_from_json(j[i][k]);
  }
  return m;
}

std::vector<RMat> mats_from_json(const json& j) {
  if (!j.is_array()) throw JsonError("expected an array of matrices");
  std::vector<RMat> out;
  for (const auto& m : j) out.push_back(mat_from_json(m));
  return out;
}

WeylElt weyl_from_json(const json& j, int rank) {
  if (!j.is_array()) throw JsonError("Weyl elements are 1-based index words");
  std::vector<int> word;
  for (const auto& x : j) {
    int i = x.get<int>();
    if (i < 1 || i > rank) throw JsonError("simple index out of range: " + std::to_string(i));
    word.push_back(i - 1);
  }
  return WeylElt::from_word(rank, word);
}

std::vector<WeylElt> weyls_from_json(const json& j, int rank) {
  if (!j.is_array()) throw JsonError("expected an array of words");
  std::vector<WeylElt> out;
  for (const auto& w : j) out.push_back(weyl_from_json(w, rank));
  return out;
}

TorusElt torus_from_json(const json& j) {
  try {
    return TorusElt(rats_from_json(j));
  } catch (const std::domain_error& e) {
    throw JsonError(e.what());
  }
}

BSChart chart_from_json(const json& j) {
  BSChart ch;
  ch.rank = field(j, "rank").get<int>();
  if (j.contains("blocks")) {
    for (const auto& b : j.at("blocks")) {
      std::vector<int> word;
      for (const auto& x : b) word.push_back(x.get<int>() - 1);
      if (!is_reduced(ch.rank, word)) throw JsonError("chart block is not a reduced word");
      ch.blocks.push_back(word);
    }
    return ch;
  }
  return BSChart::lex(weyls_from_json(field(j, "w"), ch.rank));
}

FnPoint fn_from_json(const json& j) {
  expect_kind(j, "Fn");
  if (j.contains("reps")) return canonicalize_Fn(mats_from_json(j.at("reps")));
  int r = rank_of(j);
  FnPoint p{weyls_from_json(field(j, "w"), r), mats_from_json(field(j, "c"))};
  if (!(canonicalize_Fn(p.c) == p)) throw JsonError("Fn record is not in canonical form");
  return p;
}

TFnPoint tfn_from_json(const json& j) {
  expect_kind(j, "tFn");
  if (j.contains("reps")) return canonicalize_tFn(mats_from_json(j.at("reps")));
  int r = rank_of(j);
  TFnPoint p{weyls_from_json(field(j, "w"), r), mats_from_json(field(j, "c")), mat_from_json(field(j, "b"))};
  if (!(canonicalize_tFn(p.rep()) == p)) throw JsonError("tFn record is not in canonical form");
  return p;
}

GammaArrow gamma_from_json(const json& j) {
  expect_kind(j, "gamma");
  if (j.contains("reps")) return gamma_from_reps(mats_from_json(j.at("reps")));
  json t = j;
  t["kind"] = "tFn";
  auto g = gamma_from_tfn(tfn_from_json(t));
  if (j.contains("bm") && !(mat_from_json(j.at("bm")) == g.bm)) throw JsonError("stored b_- disagrees with the product");
  return g;
}

C2nArrow c2n_from_json(const json& j) {
  expect_kind(j, "c2n");
  C2nArrow a;
  for (const auto& f : field(j, "flags")) a.f.push_back(fn_from_json(f));
  a.bm = mat_from_json(field(j, "bm"));
  if (!(to_C2n(from_C2n(a)) == a)) throw JsonError("c2n record is not consistent");
  return a;
}

FoTArrow fot_from_json(const json& j) {
  expect_kind(j, "fot");
  FoTArrow a{fn_from_json(field(j, "p")), torus_from_json(field(j, "t"))};
  if (!in_Owe(a.p)) throw JsonError("fot point is not in the open part");
  return a;
}

GdbuArrow gdbu_from_json(const json& j) {
  expect_kind(j, "gdbu");
  GdbuArrow a{mats_from_json(field(j, "c")), mats_from_json(field(j, "cp")), mat_from_json(field(j, "b")),
              mat_from_json(field(j, "bm"))};
  gdbu_check(a);
  return a;
}

GmnPoint gmn_from_json(const json& j) {
  expect_kind(j, "gmn");
  if (j.contains("gs")) return gmn_make(mats_from_json(j.at("gs")), mats_from_json(field(j, "ks")));
  int r = rank_of(j);
  json xj = field(j, "x");
  xj["kind"] = "tFn";
  auto x = tfn_from_json(xj);
  const json& yj = field(j, "y");
  TFnegPoint y{weyls_from_json(field(yj, "v"), r), mats_from_json(field(yj, "c")), mat_from_json(field(yj, "bm"))};
  GmnPoint p{x, y};
  if (!(gmn_make(x.rep(), y.rep()) == p)) throw JsonError("gmn record is not in canonical form");
  return p;
}

}  // namespace fpg
