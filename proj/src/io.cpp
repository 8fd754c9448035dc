#include "gpd/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace gpd {

namespace {

using nlohmann::json;

std::string canon(const json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::InputError, what);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

/* named object-valued section, or an empty object when absent */
json section(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) return json::object();
  if (!it->is_object()) bad(std::string("workspace: '") + key + "' must be an object");
  return *it;
}

const json& field(const json& j, const char* key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) bad(ctx + ": missing field '" + key + "'");
  return *it;
}

std::string str_field(const json& j, const char* key, const std::string& ctx) {
  const json& v = field(j, key, ctx);
  if (!v.is_string()) bad(ctx + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

int int_at(const json& v, const std::string& ctx) {
  if (!v.is_number_integer()) bad(ctx + ": expected an integer");
  return v.get<int>();
}

std::vector<Idx> idx_vec(const json& j, const char* key, size_t want, Idx lo, Idx hi,
                         const std::string& ctx) {
  const json& v = field(j, key, ctx);
  if (!v.is_array() || v.size() != want)
    bad(ctx + ": field '" + key + "' must be an array of " + std::to_string(want));
  std::vector<Idx> out;
  out.reserve(want);
  for (const json& e : v) {
    Idx i = int_at(e, ctx + "." + key);
    if (i < lo || i >= hi) bad(ctx + ": entry " + std::to_string(i) + " of '" + key +
                               "' out of range");
    out.push_back(i);
  }
  return out;
}

std::vector<std::string> name_vec(const json& j, const char* key, const std::string& ctx) {
  const json& v = field(j, key, ctx);
  if (!v.is_array() || v.empty()) bad(ctx + ": field '" + key + "' must be a nonempty array");
  std::vector<std::string> out;
  for (const json& e : v) {
    if (!e.is_string()) bad(ctx + ": entries of '" + key + "' must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

json rat_vec_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const Rational& q : v) a.push_back(format_rational(q));
  return a;
}

std::vector<Rational> rat_vec(const json& j, const char* key, size_t want,
                              const std::string& ctx) {
  const json& v = field(j, key, ctx);
  if (!v.is_array() || v.size() != want)
    bad(ctx + ": field '" + key + "' must be an array of " + std::to_string(want));
  std::vector<Rational> out;
  out.reserve(want);
  for (const json& e : v) {
    if (!e.is_string()) bad(ctx + ": rationals are \"p/q\" strings");
    try {
      out.push_back(parse_rational(e.get<std::string>()));
    } catch (const std::exception& ex) {
      bad(ctx + ": bad rational '" + e.get<std::string>() + "': " + ex.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// groupoid body

json groupoid_body(const Groupoid& g) {
  json j;
  j["id"] = g.id;
  j["names"] = g.names;
  json units = json::array();
  for (Idx u : g.units) units.push_back(u);
  j["units"] = units;
  auto ints = [](const std::vector<Idx>& v) {
    json a = json::array();
    for (Idx i : v) a.push_back(i);
    return a;
  };
  j["src"] = ints(g.src);
  j["rng"] = ints(g.rng);
  j["inv"] = ints(g.inv);
  j["comp"] = ints(g.comp);
  return j;
}

Groupoid groupoid_from_body(const json& j, const std::string& ctx) {
  Groupoid g;
  g.id = str_field(j, "id", ctx);
  g.names = name_vec(j, "names", ctx);
  g.n = static_cast<int>(g.names.size());
  g.units = idx_vec(j, "units", field(j, "units", ctx).size(), 0, g.n, ctx);
  if (g.units.empty()) bad(ctx + ": a groupoid needs at least one unit");
  g.src = idx_vec(j, "src", g.n, 0, g.n, ctx);
  g.rng = idx_vec(j, "rng", g.n, 0, g.n, ctx);
  g.inv = idx_vec(j, "inv", g.n, 0, g.n, ctx);
  g.comp = idx_vec(j, "comp", static_cast<size_t>(g.n) * g.n, kUndef, g.n, ctx);
  g.finalize();
  return g;
}

// ---------------------------------------------------------------------------
// bispace body (tables against known arrow counts)

json bispace_body(const Bispace& x) {
  json j;
  j["id"] = x.id;
  j["points"] = x.points;
  auto ints = [](const std::vector<Idx>& v) {
    json a = json::array();
    for (Idx i : v) a.push_back(i);
    return a;
  };
  j["rx"] = ints(x.rx);
  j["sx"] = ints(x.sx);
  j["lact"] = ints(x.lact_);
  j["ract"] = ints(x.ract_);
  return j;
}

Bispace bispace_from_body(const json& j, const Groupoid& g, const Groupoid& h,
                          const std::string& ctx) {
  Bispace x;
  x.id = str_field(j, "id", ctx);
  x.left_id = g.id;
  x.right_id = h.id;
  x.points = name_vec(j, "points", ctx);
  x.npts = static_cast<int>(x.points.size());
  x.gn = g.n;
  x.hn = h.n;
  x.rx = idx_vec(j, "rx", x.npts, 0, g.n, ctx);
  x.sx = idx_vec(j, "sx", x.npts, 0, h.n, ctx);
  x.lact_ = idx_vec(j, "lact", static_cast<size_t>(g.n) * x.npts, kUndef, x.npts, ctx);
  x.ract_ = idx_vec(j, "ract", static_cast<size_t>(x.npts) * h.n, kUndef, x.npts, ctx);
  return x;
}

// ---------------------------------------------------------------------------
// complex helpers

json cq_json(const CQ& z) { return json::array({format_rational(z.re), format_rational(z.im)}); }

CQ cq_from(const json& j, const std::string& ctx) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    bad(ctx + ": complex rationals are [\"re\", \"im\"] pairs");
  try {
    return CQ{parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())};
  } catch (const std::exception& ex) {
    bad(ctx + ": bad complex value: " + ex.what());
  }
}

json cmat_json(const CMat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(row);
  }
  return rows;
}

CMat cmat_from(const json& j, int rows, int cols, const std::string& ctx) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    bad(ctx + ": expected " + std::to_string(rows) + " matrix rows");
  CMat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      bad(ctx + ": expected " + std::to_string(cols) + " matrix columns");
    for (int c = 0; c < cols; ++c) {
      const json& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        bad(ctx + ": complex entries are [re, im] pairs");
      m(r, c) = CD{e[0].get<double>(), e[1].get<double>()};
    }
  }
  return m;
}

json correspondence_json(const CorrespondenceDoc& d) {
  json j;
  j["kind"] = "correspondence";
  j["id"] = d.id;
  j["left"] = groupoid_body(d.g);
  j["right"] = groupoid_body(d.h);
  j["alpha"] = rat_vec_json(d.alpha.weight);
  j["beta"] = rat_vec_json(d.beta.weight);
  j["bispace"] = bispace_body(d.x);
  j["mass"] = rat_vec_json(d.lam.mass);
  if (!d.functions.empty()) {
    json fns;
    for (const auto& [name, fn] : d.functions) {
      json vals = json::array();
      for (const CQ& z : fn.v) vals.push_back(cq_json(z));
      fns[name] = vals;
    }
    j["functions"] = fns;
  }
  return j;
}

}  // namespace

// ---------------------------------------------------------------------------
// groupoid documents

std::string serialize_groupoid(const Groupoid& g) {
  json j = groupoid_body(g);
  j["kind"] = "groupoid";
  return canon(j);
}

Groupoid parse_groupoid(const std::string& text) {
  json j = parse_text(text);
  if (str_field(j, "kind", "document") != "groupoid")
    bad("document: expected kind 'groupoid'");
  return groupoid_from_body(j, "groupoid");
}

// ---------------------------------------------------------------------------
// correspondence documents

Correspondence CorrespondenceDoc::build() const {
  return build_correspondence(g, alpha, h, beta, x, lam);
}

std::string serialize_correspondence(const CorrespondenceDoc& d) {
  return canon(correspondence_json(d));
}

std::string serialize_correspondence(const Correspondence& c, const std::string& id) {
  CorrespondenceDoc d;
  d.id = id;
  d.g = c.g;
  d.h = c.h;
  d.alpha = c.alpha;
  d.beta = c.beta;
  d.x = c.x;
  d.lam = c.lam;
  return serialize_correspondence(d);
}

CorrespondenceDoc parse_correspondence(const std::string& text) {
  json j = parse_text(text);
  if (str_field(j, "kind", "document") != "correspondence")
    bad("document: expected kind 'correspondence'");
  CorrespondenceDoc d;
  d.id = str_field(j, "id", "correspondence");
  d.g = groupoid_from_body(field(j, "left", "correspondence"), "correspondence.left");
  d.h = groupoid_from_body(field(j, "right", "correspondence"), "correspondence.right");
  d.alpha = HaarSystem{d.g.id, rat_vec(j, "alpha", d.g.n, "correspondence")};
  d.beta = HaarSystem{d.h.id, rat_vec(j, "beta", d.h.n, "correspondence")};
  d.x = bispace_from_body(field(j, "bispace", "correspondence"), d.g, d.h,
                          "correspondence.bispace");
  d.lam = MeasureFamily{d.x.id, rat_vec(j, "mass", d.x.npts, "correspondence")};
  if (j.contains("functions")) {
    const json& fns = j["functions"];
    if (!fns.is_object()) bad("correspondence: 'functions' must be an object");
    for (auto it = fns.begin(); it != fns.end(); ++it) {
      const json& vals = it.value();
      if (!vals.is_array() || static_cast<int>(vals.size()) != d.x.npts)
        bad("correspondence: function '" + it.key() + "' must list one value per point");
      Fn<CQ> f = zero_fn<CQ>(points_carrier(d.x), d.x.npts);
      for (int i = 0; i < d.x.npts; ++i)
        f.v[i] = cq_from(vals[i], "correspondence.functions." + it.key());
      d.functions.emplace_back(it.key(), std::move(f));
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// module documents

std::string serialize_module(const HilbertModuleData& m) {
  json j;
  j["kind"] = "module";
  j["basis"] = m.basis;
  json gram = json::array();
  for (const auto& e : m.gram)
    gram.push_back(json::array({e.x, e.y, e.eta, format_rational(e.value)}));
  j["gram"] = gram;
  json rep = json::array();
  for (const auto& e : m.leftrep)
    rep.push_back(json::array({e.arrow, e.from, e.to, e.coeff}));
  j["leftrep"] = rep;
  return canon(j);
}

HilbertModuleData parse_module(const std::string& text) {
  json j = parse_text(text);
  if (str_field(j, "kind", "document") != "module") bad("document: expected kind 'module'");
  HilbertModuleData m;
  m.basis = name_vec(j, "basis", "module");
  int npts = static_cast<int>(m.basis.size());
  const json& gram = field(j, "gram", "module");
  if (!gram.is_array()) bad("module: 'gram' must be an array");
  for (const json& e : gram) {
    if (!e.is_array() || e.size() != 4 || !e[3].is_string())
      bad("module: gram entries are [x, y, eta, \"value\"]");
    HilbertModuleData::GramEntry ge;
    ge.x = int_at(e[0], "module.gram");
    ge.y = int_at(e[1], "module.gram");
    ge.eta = int_at(e[2], "module.gram");
    if (ge.x < 0 || ge.x >= npts || ge.y < 0 || ge.y >= npts)
      bad("module: gram point out of range");
    ge.value = parse_rational(e[3].get<std::string>());
    m.gram.push_back(ge);
  }
  const json& rep = field(j, "leftrep", "module");
  if (!rep.is_array()) bad("module: 'leftrep' must be an array");
  for (const json& e : rep) {
    if (!e.is_array() || e.size() != 4 || !e[3].is_number())
      bad("module: leftrep entries are [arrow, from, to, coeff]");
    HilbertModuleData::LeftRepEntry le;
    le.arrow = int_at(e[0], "module.leftrep");
    le.from = int_at(e[1], "module.leftrep");
    le.to = int_at(e[2], "module.leftrep");
    if (le.from < 0 || le.from >= npts || le.to < 0 || le.to >= npts)
      bad("module: leftrep point out of range");
    le.coeff = e[3].get<double>();
    m.leftrep.push_back(le);
  }
  return m;
}

// ---------------------------------------------------------------------------
// workspaces

std::string serialize_workspace(const Workspace& w) {
  json j;
  j["kind"] = "workspace";
  if (!w.groupoids.empty()) {
    json s;
    for (const auto& [name, g] : w.groupoids) s[name] = groupoid_body(g);
    j["groupoids"] = s;
  }
  if (!w.haars.empty()) {
    json s;
    for (const auto& [name, h] : w.haars)
      s[name] = json{{"groupoid", h.groupoid}, {"weights", rat_vec_json(h.weights)}};
    j["haars"] = s;
  }
  if (!w.bispaces.empty()) {
    json s;
    for (const auto& [name, b] : w.bispaces) {
      json e = bispace_body(b.x);
      e["left"] = b.left;
      e["right"] = b.right;
      s[name] = e;
    }
    j["bispaces"] = s;
  }
  if (!w.families.empty()) {
    json s;
    for (const auto& [name, f] : w.families)
      s[name] = json{{"bispace", f.bispace}, {"mass", rat_vec_json(f.mass)}};
    j["families"] = s;
  }
  if (!w.correspondences.empty()) {
    json s;
    for (const auto& [name, c] : w.correspondences)
      s[name] = json{{"left_haar", c.left_haar},
                     {"right_haar", c.right_haar},
                     {"bispace", c.bispace},
                     {"family", c.family}};
    j["correspondences"] = s;
  }
  if (!w.repbundles.empty()) {
    json s;
    for (const auto& [name, b] : w.repbundles) {
      json dims = json::array();
      for (int d : b.rep.dims) dims.push_back(d);
      json mats = json::array();
      for (const CMat& m : b.rep.unitary) mats.push_back(cmat_json(m));
      s[name] = json{{"groupoid", b.groupoid}, {"dims", dims}, {"unitaries", mats}};
    }
    j["repbundles"] = s;
  }
  return canon(j);
}

Workspace parse_workspace(const std::string& text) {
  json j = parse_text(text);
  if (str_field(j, "kind", "document") != "workspace")
    bad("document: expected kind 'workspace'");
  Workspace w;

  json groupoids_s = section(j, "groupoids");
  for (auto it = groupoids_s.begin(); it != groupoids_s.end(); ++it)
      w.groupoids.emplace(it.key(), groupoid_from_body(it.value(), "groupoid " + it.key()));

  json haars_s = section(j, "haars");
  for (auto it = haars_s.begin(); it != haars_s.end(); ++it) {
      std::string ctx = "haar " + it.key();
      Workspace::HaarRef h;
      h.groupoid = str_field(it.value(), "groupoid", ctx);
      auto gi = w.groupoids.find(h.groupoid);
      if (gi == w.groupoids.end()) bad(ctx + " references missing groupoid '" + h.groupoid + "'");
      h.weights = rat_vec(it.value(), "weights", gi->second.n, ctx);
      w.haars.emplace(it.key(), std::move(h));
    }

  json bispaces_s = section(j, "bispaces");
  for (auto it = bispaces_s.begin(); it != bispaces_s.end(); ++it) {
      std::string ctx = "bispace " + it.key();
      Workspace::BispaceRef b;
      b.left = str_field(it.value(), "left", ctx);
      b.right = str_field(it.value(), "right", ctx);
      auto gi = w.groupoids.find(b.left);
      auto hi = w.groupoids.find(b.right);
      if (gi == w.groupoids.end()) bad(ctx + " references missing groupoid '" + b.left + "'");
      if (hi == w.groupoids.end()) bad(ctx + " references missing groupoid '" + b.right + "'");
      b.x = bispace_from_body(it.value(), gi->second, hi->second, ctx);
      w.bispaces.emplace(it.key(), std::move(b));
    }

  json families_s = section(j, "families");
  for (auto it = families_s.begin(); it != families_s.end(); ++it) {
      std::string ctx = "family " + it.key();
      Workspace::FamilyRef f;
      f.bispace = str_field(it.value(), "bispace", ctx);
      auto bi = w.bispaces.find(f.bispace);
      if (bi == w.bispaces.end()) bad(ctx + " references missing bispace '" + f.bispace + "'");
      f.mass = rat_vec(it.value(), "mass", bi->second.x.npts, ctx);
      w.families.emplace(it.key(), std::move(f));
    }

  json correspondences_s = section(j, "correspondences");
  for (auto it = correspondences_s.begin(); it != correspondences_s.end(); ++it) {
      std::string ctx = "correspondence " + it.key();
      Workspace::CorrRef c;
      c.left_haar = str_field(it.value(), "left_haar", ctx);
      c.right_haar = str_field(it.value(), "right_haar", ctx);
      c.bispace = str_field(it.value(), "bispace", ctx);
      c.family = str_field(it.value(), "family", ctx);
      if (!w.haars.count(c.left_haar)) bad(ctx + " references missing haar '" + c.left_haar + "'");
      if (!w.haars.count(c.right_haar))
        bad(ctx + " references missing haar '" + c.right_haar + "'");
      if (!w.bispaces.count(c.bispace)) bad(ctx + " references missing bispace '" + c.bispace + "'");
      if (!w.families.count(c.family)) bad(ctx + " references missing family '" + c.family + "'");
      w.correspondences.emplace(it.key(), std::move(c));
    }

  json repbundles_s = section(j, "repbundles");
  for (auto it = repbundles_s.begin(); it != repbundles_s.end(); ++it) {
      std::string ctx = "repbundle " + it.key();
      Workspace::BundleRef b;
      b.groupoid = str_field(it.value(), "groupoid", ctx);
      auto gi = w.groupoids.find(b.groupoid);
      if (gi == w.groupoids.end()) bad(ctx + " references missing groupoid '" + b.groupoid + "'");
      const Groupoid& g = gi->second;
      b.rep.groupoid_id = g.id;
      const json& dims = field(it.value(), "dims", ctx);
      if (!dims.is_array() || dims.size() != g.units.size())
        bad(ctx + ": 'dims' must list one dimension per unit");
      for (const json& d : dims) {
        int k = int_at(d, ctx + ".dims");
        if (k <= 0) bad(ctx + ": dimensions must be positive");
        b.rep.dims.push_back(k);
      }
      const json& mats = field(it.value(), "unitaries", ctx);
      if (!mats.is_array() || static_cast<int>(mats.size()) != g.n)
        bad(ctx + ": 'unitaries' must list one matrix per arrow");
      for (Idx a = 0; a < g.n; ++a)
        b.rep.unitary.push_back(cmat_from(mats[a], b.rep.dims[g.upos(g.rng[a])],
                                          b.rep.dims[g.upos(g.src[a])],
                                          ctx + " arrow " + g.name(a)));
      w.repbundles.emplace(it.key(), std::move(b));
    }

  return w;
}

CorrespondenceDoc Workspace::resolve(const std::string& name) const {
  auto ci = correspondences.find(name);
  if (ci == correspondences.end())
    throw Error(ErrorCode::InputError, "workspace has no correspondence '" + name + "'");
  const CorrRef& c = ci->second;
  const HaarRef& ha = haars.at(c.left_haar);
  const HaarRef& hb = haars.at(c.right_haar);
  const BispaceRef& bx = bispaces.at(c.bispace);
  const FamilyRef& fm = families.at(c.family);
  if (ha.groupoid != bx.left)
    throw Error(ErrorCode::InputError, "correspondence '" + name + "': left haar '" +
                                           c.left_haar + "' is on groupoid '" + ha.groupoid +
                                           "' but the bispace's left side is '" + bx.left + "'");
  if (hb.groupoid != bx.right)
    throw Error(ErrorCode::InputError, "correspondence '" + name + "': right haar '" +
                                           c.right_haar + "' is on groupoid '" + hb.groupoid +
                                           "' but the bispace's right side is '" + bx.right +
                                           "'");
  if (fm.bispace != c.bispace)
    throw Error(ErrorCode::InputError, "correspondence '" + name + "': family '" + c.family +
                                           "' lives on bispace '" + fm.bispace + "', not '" +
                                           c.bispace + "'");
  CorrespondenceDoc d;
  d.id = name;
  d.g = groupoids.at(ha.groupoid);
  d.h = groupoids.at(hb.groupoid);
  d.alpha = HaarSystem{d.g.id, ha.weights};
  d.beta = HaarSystem{d.h.id, hb.weights};
  d.x = bx.x;
  d.lam = MeasureFamily{d.x.id, fm.mass};
  return d;
}

// ---------------------------------------------------------------------------
// misc

std::string document_kind(const std::string& text) {
  json j = parse_text(text);
  return str_field(j, "kind", "document");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InputError, "cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InputError, "cannot write file: " + path);
  out << text;
  if (!out) throw Error(ErrorCode::InputError, "short write: " + path);
}

}  // namespace gpd
