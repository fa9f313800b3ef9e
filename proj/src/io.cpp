#include "pbw/io.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <sstream>

#include "pbw/errors.hpp"
#include "pbw/examples.hpp"

namespace pbw {

ProblemFileError::ProblemFileError(const std::string& msg, std::string ptr, std::size_t ln)
    : InputError((ln ? "line " + std::to_string(ln) + ": " : std::string()) +
                 (ptr.empty() ? std::string() : ptr + ": ") + msg),
      pointer(std::move(ptr)),
      line(ln) {}

// --- pointer → line locator ---------------------------------------------------

namespace {

class Locator {
 public:
  explicit Locator(const std::string& t) : t_(t) {}

  std::map<std::string, std::size_t> run() {
    try {
      value("");
    } catch (const std::runtime_error&) {
    }
    return out_;
  }

 private:
  void ws() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) {
      if (t_[i_] == '\n') ++line_;
      ++i_;
    }
  }
  char peek() {
    if (i_ >= t_.size()) throw std::runtime_error("eof");
    return t_[i_];
  }
  std::string str() {
    std::string s;
    ++i_;
    while (peek() != '"') {
      if (t_[i_] == '\\') ++i_;
      s += t_[i_++];
    }
    ++i_;
    return s;
  }
  static std::string escape(const std::string& k) {
    std::string o;
    for (char c : k) o += c == '~' ? "~0" : c == '/' ? "~1" : std::string(1, c);
    return o;
  }
  void value(const std::string& ptr) {
    ws();
    out_.emplace(ptr, line_);
    char c = peek();
    if (c == '{') {
      ++i_;
      ws();
      if (peek() == '}') { ++i_; return; }
      while (true) {
        ws();
        std::string k = str();
        ws();
        if (peek() != ':') throw std::runtime_error("colon");
        ++i_;
        value(ptr + "/" + escape(k));
        ws();
        if (peek() == ',') { ++i_; continue; }
        ++i_;
        return;
      }
    }
    if (c == '[') {
      ++i_;
      ws();
      if (peek() == ']') { ++i_; return; }
      for (std::size_t idx = 0;; ++idx) {
        value(ptr + "/" + std::to_string(idx));
        ws();
        if (peek() == ',') { ++i_; continue; }
        ++i_;
        return;
      }
    }
    if (c == '"') { str(); return; }
    while (i_ < t_.size() && !std::strchr(",]} \t\r\n", t_[i_])) ++i_;
  }

  const std::string& t_;
  std::size_t i_ = 0, line_ = 1;
  std::map<std::string, std::size_t> out_;
};

}  // namespace

std::map<std::string, std::size_t> json_pointer_lines(const std::string& text) {
  return Locator(text).run();
}

json scalar_json(const Scalar& s) { return s.to_string(); }

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

// --- parsing ------------------------------------------------------------------

namespace {

class Reader {
 public:
  Reader(const std::map<std::string, std::size_t>* lines) : lines_(lines) {}
  Field f;

  [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const {
    throw ProblemFileError(msg, ptr, line_of(ptr));
  }

  std::size_t line_of(std::string ptr) const {
    if (!lines_) return 0;
    while (true) {
      auto it = lines_->find(ptr);
      if (it != lines_->end()) return it->second;
      if (ptr.empty()) return 0;
      ptr = ptr.substr(0, ptr.rfind('/'));
    }
  }

  const json& member(const json& j, const std::string& ptr, const char* key) const {
    if (!j.is_object()) fail(ptr, "expected an object");
    if (!j.contains(key)) fail(ptr, std::string("missing field '") + key + "'");
    return j.at(key);
  }

  std::size_t natural(const json& j, const std::string& ptr) const {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(ptr, "expected a non-negative integer");
    return j.get<std::size_t>();
  }

  Scalar scalar(const json& j, const std::string& ptr) const {
    try {
      if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
      if (j.is_number_integer()) return Scalar::from_int(f, j.get<long>());
    } catch (const Error& e) {
      fail(ptr, e.what());
    }
    fail(ptr, "expected a scalar (string \"a/b\" or integer)");
  }

  const json& array(const json& j, const std::string& ptr, std::optional<std::size_t> n) const {
    if (!j.is_array()) fail(ptr, "expected an array");
    if (n && j.size() != *n)
      fail(ptr, "expected " + std::to_string(*n) + " entries, got " + std::to_string(j.size()));
    return j;
  }

  Vec vec(const json& j, const std::string& ptr, std::size_t n) const {
    array(j, ptr, n);
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(j[i], ptr + "/" + std::to_string(i)));
    return v;
  }

  Rows rows(const json& j, const std::string& ptr, std::size_t r, std::size_t c) const {
    array(j, ptr, r);
    Rows m;
    for (std::size_t i = 0; i < r; ++i) m.push_back(vec(j[i], ptr + "/" + std::to_string(i), c));
    return m;
  }

  std::vector<std::string> labels(const json& j, const std::string& ptr, std::size_t n) const {
    array(j, ptr, n);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (!j[i].is_string()) fail(ptr + "/" + std::to_string(i), "expected a string label");
      out.push_back(j[i].get<std::string>());
    }
    return out;
  }

 private:
  const std::map<std::string, std::size_t>* lines_;
};

HopfAlgebraData parse_hopf(const Reader& rd, const json& j) {
  const std::string P = "/hopf";
  const json& type = rd.member(j, P, "type");
  if (!type.is_string()) rd.fail(P + "/type", "expected a string");
  std::string t = type.get<std::string>();
  HopfAlgebraData h;
  if (t == "group_algebra") {
    if (j.contains("order") && !j.contains("table")) {
      h = cyclic_group_algebra(rd.f, rd.natural(j["order"], P + "/order"));
    } else {
      const json& tab = rd.member(j, P, "table");
      rd.array(tab, P + "/table", std::nullopt);
      std::size_t n = tab.size();
      std::vector<std::vector<std::size_t>> table;
      for (std::size_t i = 0; i < n; ++i) {
        std::string pi = P + "/table/" + std::to_string(i);
        rd.array(tab[i], pi, n);
        std::vector<std::size_t> row;
        for (std::size_t k = 0; k < n; ++k) {
          std::size_t x = rd.natural(tab[i][k], pi + "/" + std::to_string(k));
          if (x >= n) rd.fail(pi + "/" + std::to_string(k), "group element index out of range");
          row.push_back(x);
        }
        table.push_back(std::move(row));
      }
      std::vector<std::string> labels;
      if (j.contains("labels")) labels = rd.labels(j["labels"], P + "/labels", n);
      try {
        h = group_algebra(rd.f, table, labels);
      } catch (const InputError& e) {
        rd.fail(P + "/table", e.what());
      }
    }
  } else if (t == "sweedler_h4") {
    h = sweedler_h4(rd.f);
  } else if (t == "explicit") {
    std::size_t n = rd.natural(rd.member(j, P, "dim"), P + "/dim");
    if (n == 0) rd.fail(P + "/dim", "dimension must be positive");
    h.field = rd.f;
    h.dim = n;
    if (j.contains("labels"))
      h.labels = rd.labels(j["labels"], P + "/labels", n);
    else
      for (std::size_t i = 0; i < n; ++i) h.labels.push_back("b" + std::to_string(i));
    const json& m = rd.array(rd.member(j, P, "mult"), P + "/mult", n);
    for (std::size_t i = 0; i < n; ++i) h.mult.push_back(rd.rows(m[i], P + "/mult/" + std::to_string(i), n, n));
    h.unit = rd.vec(rd.member(j, P, "unit"), P + "/unit", n);
    const json& cm = rd.array(rd.member(j, P, "comult"), P + "/comult", n);
    for (std::size_t i = 0; i < n; ++i) {
      Rows dense = rd.rows(cm[i], P + "/comult/" + std::to_string(i), n, n);
      std::vector<CoTerm> terms;
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t r = 0; r < n; ++r)
          if (!dense[l][r].is_zero()) terms.push_back({dense[l][r], l, r});
      h.comult.push_back(std::move(terms));
    }
    h.counit = rd.vec(rd.member(j, P, "counit"), P + "/counit", n);
    h.antipode = rd.rows(rd.member(j, P, "antipode"), P + "/antipode", n, n);
    if (j.contains("antipode_inv")) {
      h.antipode_inv = rd.rows(j["antipode_inv"], P + "/antipode_inv", n, n);
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        auto c = decompose(h.basis(i), h.antipode);
        if (!c) rd.fail(P + "/antipode", "antipode is not bijective");
        h.antipode_inv.push_back(*c);
      }
    }
  } else {
    rd.fail(P + "/type", "unknown Hopf type '" + t + "' (group_algebra, sweedler_h4, explicit)");
  }
  if (j.contains("hbar")) {
    const json& hb = j["hbar"];
    h.hbar_section.clear();
    h.hbar_basis.clear();
    if (hb.contains("section")) {
      const json& s = rd.array(hb["section"], P + "/hbar/section", h.dim - 1);
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::size_t x = rd.natural(s[i], P + "/hbar/section/" + std::to_string(i));
        if (x >= h.dim) rd.fail(P + "/hbar/section/" + std::to_string(i), "index out of range");
        h.hbar_section.push_back(x);
        h.hbar_basis.push_back(h.basis(x));
      }
    } else if (hb.contains("basis")) {
      h.hbar_basis = rd.rows(hb["basis"], P + "/hbar/basis", h.dim - 1, h.dim);
    } else {
      rd.fail(P + "/hbar", "expected 'section' or 'basis'");
    }
    Rows all = h.hbar_basis;
    all.push_back(h.unit);
    if (rank(all, h.dim) != h.dim) rd.fail(P + "/hbar", "H̄ together with 1_H is not a basis of H");
  } else {
    set_default_hbar(h);
  }
  return h;
}

QuadraticAlgebraData parse_algebra(const Reader& rd, const json& j) {
  const std::string P = "/algebra";
  std::size_t n = rd.natural(rd.member(j, P, "dim_v"), P + "/dim_v");
  if (n == 0) rd.fail(P + "/dim_v", "dim_v must be positive");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = rd.labels(j["labels"], P + "/labels", n);
  std::size_t cutoff = j.contains("cutoff") ? rd.natural(j["cutoff"], P + "/cutoff") : 4;
  if (cutoff < 3) rd.fail(P + "/cutoff", "cutoff must be at least 3");
  const json& r = rd.member(j, P, "relations");
  Rows rel;
  if (r.is_string()) {
    if (r.get<std::string>() != "symmetric") rd.fail(P + "/relations", "expected 'symmetric' or a list of vectors");
    rel = antisymmetric_relations(rd.f, n);
  } else {
    rd.array(r, P + "/relations", std::nullopt);
    for (std::size_t k = 0; k < r.size(); ++k)
      rel.push_back(rd.vec(r[k], P + "/relations/" + std::to_string(k), n * n));
  }
  try {
    return make_quadratic(rd.f, n, std::move(rel), cutoff, labels);
  } catch (const InputError& e) {
    rd.fail(P + "/relations", e.what());
  }
}

void fail_report(const Reader& rd, const std::string& ptr, const char* what, const ValidationReport& r) {
  const AxiomCheck* c = r.first_failure();
  std::ostringstream os;
  os << what << " fails '" << c->name << "'";
  if (!c->witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < c->witness.size(); ++i) os << (i ? "," : "") << c->witness[i];
    os << ")";
  }
  if (!c->detail.empty()) os << ": " << c->detail;
  rd.fail(ptr, os.str());
}

ProblemFile parse_impl(const json& j, bool validate, const std::map<std::string, std::size_t>* lines) {
  Reader rd(lines);
  if (!j.is_object()) rd.fail("", "top level must be an object");
  const json& fj = rd.member(j, "", "field");
  if (!fj.is_string()) rd.fail("/field", "expected \"Q\" or \"Fp:<p>\"");
  try {
    rd.f = Field::parse(fj.get<std::string>());
  } catch (const InputError& e) {
    rd.fail("/field", e.what());
  }
  ProblemFile out;
  out.data.H = parse_hopf(rd, rd.member(j, "", "hopf"));
  out.data.S = parse_algebra(rd, rd.member(j, "", "algebra"));
  const std::size_t nh = out.data.H.dim, nv = out.data.S.dim_v, nr = out.data.S.dim_r();
  const json& act = rd.array(rd.member(j, "", "action"), "/action", nh);
  for (std::size_t h = 0; h < nh; ++h)
    out.data.action.rho.push_back(rd.rows(act[h], "/action/" + std::to_string(h), nv, nv));
  if (validate) {
    auto hr = validate_hopf(out.data.H);
    if (!hr.ok()) fail_report(rd, "/hopf", "Hopf structure", hr);
    auto ar = validate_action(out.data.H, out.data.S, out.data.action);
    if (!ar.ok()) fail_report(rd, "/action", "module-algebra action", ar);
  }

  ParameterTriple& p = out.params;
  p = ParameterTriple::zero(out.data);
  if (j.contains("params")) {
    const json& pj = j["params"];
    const std::string P = "/params";
    if (!pj.is_object()) rd.fail(P, "expected an object");
    if (pj.contains("lambda")) {
      const json& l = rd.array(pj["lambda"], P + "/lambda", nh);
      for (std::size_t h = 0; h < nh; ++h)
        p.lambda[h] = rd.rows(l[h], P + "/lambda/" + std::to_string(h), nv, nh);
    }
    if (pj.contains("beta")) p.beta = rd.rows(pj["beta"], P + "/beta", nr, nh);
    if (pj.contains("alpha") && pj.contains("alpha_tilde"))
      rd.fail(P, "give either 'alpha' or 'alpha_tilde', not both");
    if (pj.contains("alpha")) {
      const json& a = rd.array(pj["alpha"], P + "/alpha", nr);
      for (std::size_t k = 0; k < nr; ++k) p.alpha[k] = rd.rows(a[k], P + "/alpha/" + std::to_string(k), nv, nh);
    }
    if (pj.contains("alpha_tilde")) {
      const json& a = rd.array(pj["alpha_tilde"], P + "/alpha_tilde", nr);
      AlphaTilde at(nr);
      for (std::size_t k = 0; k < nr; ++k) {
        std::string pk = P + "/alpha_tilde/" + std::to_string(k);
        rd.array(a[k], pk, nh);
        for (std::size_t h = 0; h < nh; ++h) at[k].push_back(rd.rows(a[k][h], pk + "/" + std::to_string(h), nv, nh));
      }
      out.alpha_tilde = at;
      out.beta_tilde = p.beta;
    }
  }
  if (validate) {
    auto pr = validate_params(out.data, p);
    if (!pr.ok()) {
      const AxiomCheck* c = pr.first_failure();
      std::string ptr = c->name.rfind("lambda", 0) == 0 ? "/params/lambda"
                        : c->name.rfind("alpha", 0) == 0 ? "/params/alpha"
                                                          : "/params/beta";
      fail_report(rd, ptr, "parameters", pr);
    }
  }
  if (out.alpha_tilde) {
    auto na = normalize_alpha(out.data, *out.alpha_tilde, *out.beta_tilde, p.lambda);
    p.alpha = std::move(na.alpha);
    p.beta = std::move(na.beta);
    out.notes.push_back("alpha was given in H⊗V⊗H and normalized into V⊗H; beta adjusted accordingly");
  }
  return out;
}

}  // namespace

ProblemFile parse_problem(const json& j, bool validate) { return parse_impl(j, validate, nullptr); }

ProblemFile parse_problem_text(const std::string& text, bool validate) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) line += text[i] == '\n';
    throw ProblemFileError(std::string("JSON syntax error: ") + e.what(), "", line);
  }
  auto lines = json_pointer_lines(text);
  return parse_impl(j, validate, &lines);
}

ProblemFile load_problem(const std::string& path, bool validate) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem_text(ss.str(), validate);
}

// --- serialization ------------------------------------------------------------

json serialize_problem(const ProblemFile& f) {
  const auto& H = f.data.H;
  const auto& S = f.data.S;
  const std::size_t nh = H.dim;
  json h;
  h["type"] = "explicit";
  h["dim"] = nh;
  if (!H.labels.empty()) h["labels"] = H.labels;
  json mult = json::array();
  for (std::size_t i = 0; i < nh; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < nh; ++k) row.push_back(vec_json(H.mult[i][k]));
    mult.push_back(row);
  }
  h["mult"] = mult;
  h["unit"] = vec_json(H.unit);
  json cm = json::array();
  for (std::size_t i = 0; i < nh; ++i) {
    json dense = json::array();
    for (std::size_t l = 0; l < nh; ++l) dense.push_back(vec_json(H.coproduct(H.basis(i))[l]));
    cm.push_back(dense);
  }
  h["comult"] = cm;
  h["counit"] = vec_json(H.counit);
  json ap = json::array(), api = json::array();
  for (std::size_t i = 0; i < nh; ++i) {
    ap.push_back(vec_json(H.antipode[i]));
    api.push_back(vec_json(H.antipode_inv[i]));
  }
  h["antipode"] = ap;
  h["antipode_inv"] = api;
  if (!H.hbar_section.empty()) {
    h["hbar"]["section"] = H.hbar_section;
  } else {
    json b = json::array();
    for (const auto& v : H.hbar_basis) b.push_back(vec_json(v));
    h["hbar"]["basis"] = b;
  }

  json a;
  a["dim_v"] = S.dim_v;
  if (!S.labels.empty()) a["labels"] = S.labels;
  a["cutoff"] = S.cutoff;
  json rel = json::array();
  for (const auto& r : S.relation_basis) rel.push_back(vec_json(r));
  a["relations"] = rel;

  json act = json::array();
  for (const auto& m : f.data.action.rho) {
    json mm = json::array();
    for (const auto& row : m) mm.push_back(vec_json(row));
    act.push_back(mm);
  }

  json p;
  json lam = json::array();
  for (const auto& per_h : f.params.lambda) {
    json l = json::array();
    for (const auto& v : per_h) l.push_back(vec_json(v));
    lam.push_back(l);
  }
  p["lambda"] = lam;
  json beta = json::array();
  if (f.alpha_tilde) {
    json at = json::array();
    for (const auto& per_k : *f.alpha_tilde) {
      json k = json::array();
      for (const auto& per_h : per_k) {
        json hh = json::array();
        for (const auto& v : per_h) hh.push_back(vec_json(v));
        k.push_back(hh);
      }
      at.push_back(k);
    }
    p["alpha_tilde"] = at;
    for (const auto& b : *f.beta_tilde) beta.push_back(vec_json(b));
  } else {
    json al = json::array();
    for (const auto& per_k : f.params.alpha) {
      json k = json::array();
      for (const auto& v : per_k) k.push_back(vec_json(v));
      al.push_back(k);
    }
    p["alpha"] = al;
    for (const auto& b : f.params.beta) beta.push_back(vec_json(b));
  }
  p["beta"] = beta;

  json out;
  out["field"] = H.field.name();
  out["hopf"] = h;
  out["algebra"] = a;
  out["action"] = act;
  out["params"] = p;
  return out;
}

}  // namespace pbw
