#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <memory>

#include <CLI11.hpp>

#include "orderlab/algebras.hpp"
#include "orderlab/domainprops.hpp"
#include "orderlab/enumerate.hpp"
#include "orderlab/json_io.hpp"
#include "orderlab/kleisli.hpp"
#include "orderlab/sweeps.hpp"

namespace orderlab::cli {

namespace {

enum class Verdict { pass, fail, absent };

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::absent: return "absent";
  }
  return "?";
}

struct Certificate {
  std::string command;
  Verdict verdict = Verdict::pass;
  Json instance = Json::object();
  Json result = Json::object();
  Json witness;  // null unless the verdict is fail or absent
};

struct Options {
  std::string format = "json";
  bool timing = false;
};

int exit_code(Verdict v) { return v == Verdict::pass ? 0 : 1; }

bool is_flat(const Json& v) {
  for (const auto& x : v) {
    if (x.is_structured()) return false;
  }
  return true;
}

void print_text_value(std::ostream& out, const std::string& indent, const std::string& key, const Json& v) {
  if (v.is_array() && !v.empty() && v.front().is_object()) {
    out << indent << key << ":\n";
    for (const auto& row : v) {
      if (is_flat(row)) {
        out << indent << "  " << row.dump() << "\n";
        continue;
      }
      out << indent << "  -\n";
      for (const auto& [k, x] : row.items()) print_text_value(out, indent + "    ", k, x);
    }
  } else if (v.is_object() && !v.empty()) {
    out << indent << key << ":\n";
    for (const auto& [k, x] : v.items()) print_text_value(out, indent + "  ", k, x);
  } else {
    out << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

void emit(const Certificate& c, const Options& o, double millis, std::ostream& out) {
  Json j{{"command", c.command}, {"verdict", to_string(c.verdict)}, {"instance", c.instance}, {"result", c.result}};
  if (!c.witness.is_null()) j["witness"] = c.witness;
  if (o.timing) j["runtime_ms"] = millis;
  if (o.format == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  out << c.command << ": " << to_string(c.verdict) << "\n";
  for (const auto& [k, v] : j.items()) {
    if (k == "command" || k == "verdict") continue;
    print_text_value(out, "", k, v);
  }
}

void check_cap(int size, const std::string& what) {
  if (size > max_elements()) {
    throw InvalidInput(what + " has " + std::to_string(size) + " elements, above ORDERLAB_MAX_ELEMENTS = " +
                       std::to_string(max_elements()));
  }
}

void check_bound(int bound) {
  if (bound > max_elements()) {
    throw InvalidInput("--max-size " + std::to_string(bound) + " is above ORDERLAB_MAX_ELEMENTS = " +
                       std::to_string(max_elements()));
  }
}

ObjectInput read_object(const std::string& path) {
  auto in = object_from_json(load_json_file(path));
  check_cap(in.poset->size(), "input object");
  return in;
}

Json labels(const Poset& p, const Subset& s) { return subset_to_json(p, s); }

// ---- check ----------------------------------------------------------------

const std::vector<std::string>& check_flags() {
  static const std::vector<std::string> flags{
      "lattice",  "distributive",    "frame",      "coframe",           "continuous",
      "algebraic", "completely-distributive", "totally-algebraic", "bounded-complete",
      "directed-complete", "sober", "t0"};
  return flags;
}

bool flag_value(const Classification& c, const std::string& flag) {
  if (flag == "lattice") return c.lattice;
  if (flag == "distributive") return c.distributive;
  if (flag == "frame") return c.frame;
  if (flag == "coframe") return c.coframe;
  if (flag == "continuous") return c.continuous;
  if (flag == "algebraic") return c.algebraic_domain;
  if (flag == "completely-distributive") return c.completely_distributive;
  if (flag == "totally-algebraic") return c.totally_algebraic;
  if (flag == "bounded-complete") return c.bounded_complete;
  if (flag == "directed-complete") return c.directed_complete;
  if (flag == "sober" || flag == "t0") return true;
  throw InvalidInput("unknown predicate '" + flag + "'");
}

Json classification_json(const Classification& c) {
  Json j = Json::object();
  for (const auto& f : check_flags()) {
    if (f != "sober" && f != "t0") j[f] = flag_value(c, f);
  }
  return j;
}

Json lattice_witness(const Poset& p) {
  if (p.empty()) return Json{{"reason", "empty poset"}};
  const auto ops = lattice_ops(p);
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (!ops.try_meet(a, b)) return Json{{"pair", {p.label(a), p.label(b)}}, {"missing", "meet"}};
      if (!ops.try_join(a, b)) return Json{{"pair", {p.label(a), p.label(b)}}, {"missing", "join"}};
    }
  }
  return Json{{"reason", "no top or bottom"}};
}

Json failure_witness(const PosetRef& p, const std::string& flag) {
  const auto ops = lattice_ops(*p);
  if (flag == "lattice") return lattice_witness(*p);
  if (flag == "distributive" || flag == "frame" || flag == "coframe" || flag == "completely-distributive" ||
      flag == "totally-algebraic") {
    if (!ops.is_lattice) return lattice_witness(*p);
    if (auto w = distributivity_witness(*p)) {
      const auto [x, y, z] = *w;
      return Json{{"triple", {p->label(x), p->label(y), p->label(z)}},
                  {"x_meet_y_join_z", p->label(ops.meet(x, ops.join(y, z)))},
                  {"join_of_meets", p->label(ops.join(ops.meet(x, y), ops.meet(x, z)))}};
    }
    if (flag == "totally-algebraic") {
      const auto tc = totally_compacts(p);
      for (int x = 0; x < p->size(); ++x) {
        auto s = p->sup(tc & p->down(x));
        if (!s || *s != x) return Json{{"element", p->label(x)}, {"reason", "not the join of the totally compact elements below it"}};
      }
    }
    return Json{{"reason", flag + " law fails"}};
  }
  if (flag == "bounded-complete") {
    if (!p->empty() && !p->bottom()) return Json{{"subset", Json::array()}, {"reason", "no least element"}};
    for (int a = 0; a < p->size(); ++a) {
      for (int b = 0; b < p->size(); ++b) {
        Subset s = singleton(p->size(), a) | singleton(p->size(), b);
        if (p->upper_bounds(s).any() && !p->sup(s)) {
          return Json{{"subset", {p->label(a), p->label(b)}}, {"reason", "bounded without a supremum"}};
        }
      }
    }
  }
  return Json{{"reason", flag + " fails"}};
}

Certificate cmd_check(const std::string& flag, const std::string& path) {
  Certificate c;
  c.command = "check " + flag;
  c.instance["input"] = path;
  if (std::find(check_flags().begin(), check_flags().end(), flag) == check_flags().end()) {
    throw InvalidInput("unknown predicate '" + flag + "'");
  }
  if (flag == "t0") {
    const auto space = space_from_json(load_json_file(path));
    check_cap(space.size(), "input space");
    const bool t0 = space.is_t0();
    c.result["t0"] = t0;
    if (!t0) {
      c.verdict = Verdict::fail;
      for (int a = 0; a < space.size(); ++a) {
        for (int b = a + 1; b < space.size(); ++b) {
          if (space.neighbourhood(a) == space.neighbourhood(b)) {
            c.witness = Json{{"points", {space.points()[a], space.points()[b]}}, {"reason", "same open neighbourhoods"}};
            return c;
          }
        }
      }
    }
    return c;
  }
  const auto in = read_object(path);
  c.instance["size"] = in.poset->size();
  if (flag == "sober") {
    const auto space = in.space ? *in.space : alexandrov(*in.poset);
    const bool sober = is_sober(space);
    c.result["sober"] = sober;
    if (!sober) {
      c.verdict = Verdict::fail;
      c.witness = Json{{"reason", "an irreducible closed set without a unique generic point"}};
    }
    return c;
  }
  const auto cl = classify(in.poset);
  c.result = classification_json(cl);
  if (!flag_value(cl, flag)) {
    c.verdict = Verdict::fail;
    c.witness = failure_witness(in.poset, flag);
  }
  return c;
}

// ---- monad ----------------------------------------------------------------

PosetRef read_base_object(const Monad& t, const std::string& path) {
  auto in = read_object(path);
  if (!t.accepts(*in.poset)) {
    throw InvalidInput(std::string("input is not an object of the base category (") + orderlab::to_string(t.base()) + ")");
  }
  return in.poset;
}

Json filters_json(const TObject& tx) {
  Json out = Json::object();
  for (int k = 0; k < tx.size(); ++k) {
    Json opens = Json::array();
    for (int u : members(tx.elements[k])) opens.push_back(labels(*tx.base, tx.opens[u]));
    out[tx.object->label(k)] = opens;
  }
  return out;
}

Certificate cmd_monad(const std::string& name, const std::string& action, const std::string& path) {
  const auto t = monad_by_name(name);
  const auto x = read_base_object(t, path);
  Certificate c;
  c.command = "monad " + name + " " + action;
  c.instance = Json{{"input", path}, {"monad", t.name()}, {"base", orderlab::to_string(t.base())}, {"size", x->size()}};
  if (action == "apply") {
    const auto tx = t.apply(x);
    c.result["size"] = tx->size();
    c.result["poset"] = poset_to_json(*tx->object);
    if (t.is_filter_kind()) c.result["filters"] = filters_json(*tx);
  } else if (action == "unit") {
    const auto tx = t.apply(x);
    c.result["e"] = table_to_json(t.unit(*tx));
  } else if (action == "mult") {
    const auto tx = t.apply(x);
    const auto ttx = t.apply(tx->object);
    c.result["ttx_size"] = ttx->size();
    c.result["m"] = table_to_json(t.mult(*tx, *ttx));
  } else if (action == "kz-verify") {
    const auto lv = make_levels(t, x);
    const auto kz = verify_kz(t, lv);
    c.result = Json{{"enrichment", orderlab::to_string(t.enrichment())},
                    {"cond_i", kz.cond_i},
                    {"cond_ii", kz.cond_ii},
                    {"cond_iii", kz.cond_iii},
                    {"agree", kz.agree()}};
    if (!(kz.cond_i && kz.cond_ii && kz.cond_iii)) {
      c.verdict = Verdict::fail;
      const auto& tt = *lv.t2->object;
      const bool dual = t.enrichment() == Enrichment::dual_pointwise;
      for (int u = 0; u < lv.t1->size(); ++u) {
        const int a = lv.t_e(u);
        const int b = lv.e_t(u);
        if (!(dual ? tt.le(b, a) : tt.le(a, b))) {
          c.witness = Json{{"condition", "i"}, {"element", lv.t1->object->label(u)},
                           {"Te", tt.label(a)}, {"eT", tt.label(b)}};
          break;
        }
      }
      if (c.witness.is_null()) c.witness = Json{{"condition", kz.cond_ii ? "iii" : "ii"}};
    }
  } else if (action == "laws") {
    const auto lv = make_levels(t, x, 2000);
    const auto laws = verify_monad_laws(t, lv);
    c.result = Json{{"left_unit", laws.left_unit}, {"right_unit", laws.right_unit}};
    c.result["associative"] = laws.associative ? Json(*laws.associative) : Json("skipped: TTTX above 2000 elements");
    if (!laws.ok()) {
      c.verdict = Verdict::fail;
      c.witness = Json{{"element", laws.witness}};
    }
  } else {
    throw InvalidInput("unknown monad action '" + action + "'");
  }
  return c;
}

// ---- algebra --------------------------------------------------------------

Certificate cmd_algebra(const std::string& name, const std::string& action, const std::string& path) {
  const auto t = monad_by_name(name);
  const auto x = read_base_object(t, path);
  Certificate c;
  c.command = "algebra " + name + " " + action;
  c.instance = Json{{"input", path}, {"monad", t.name()}, {"size", x->size()}};
  if (action != "find" && action != "split" && action != "algebraic" && action != "algebraic-direct") {
    throw InvalidInput("unknown algebra action '" + action + "'");
  }
  if ((action == "split" || action == "algebraic") && !t.is_kz_expected()) {
    throw InvalidInput("'" + action + "' needs a KZ monad");
  }
  auto a = find_algebra_structure(t, x);
  if (!a) {
    c.verdict = Verdict::absent;
    c.witness = Json{{"reason", t.is_kz_expected() ? "e has no lawful left adjoint" : "no lawful structure map"}};
    return c;
  }
  c.result["structure"] = table_to_json(a->structure);
  if (action == "find") return c;
  if (action == "split") {
    auto s = find_splitting(*a);
    if (!s || !s->valid()) {
      c.verdict = Verdict::absent;
      c.witness = Json{{"reason", s ? "adjoint of the structure map fails the splitting identities"
                                    : "the structure map has no left adjoint"}};
      return c;
    }
    c.result["t"] = table_to_json(s->t);
    return c;
  }
  if (action == "algebraic") {
    const auto cert = is_algebraic_char(*a);
    const char* status = cert.status == AlgebraicCertificate::Status::algebraic       ? "algebraic"
                         : cert.status == AlgebraicCertificate::Status::not_algebraic ? "not algebraic"
                                                                                      : "not split";
    c.result["status"] = status;
    if (cert.inclusion) {
      c.result["equaliser"] = labels(*x, cert.inclusion->image());
      c.result["t_preserves_mono"] = cert.t_preserves_mono;
      c.result["dense"] = cert.dense;
      c.result["surjective"] = cert.surjective;
      c.result["epi_by_probe"] = cert.epi_by_probe;
    }
    if (!cert.verdict()) {
      c.verdict = Verdict::fail;
      c.witness = Json{{"reason", status}};
    }
    return c;
  }
  auto w = is_algebraic_direct(*a);
  if (!w) {
    c.verdict = Verdict::absent;
    c.witness = Json{{"reason", "no free algebra on a base object of size <= " + std::to_string(x->size()) +
                                    " is isomorphic to the input"}};
    return c;
  }
  c.result["y"] = poset_to_json(*w->y);
  c.result["iso"] = table_to_json(w->iso);
  return c;
}

// ---- verify ---------------------------------------------------------------

std::vector<std::string> default_monads(const std::string& law) {
  if (law == "kz-equiv") return {"D", "I", "F", "F1", "F2", "Fc", "adjbounds"};
  if (law == "injectivity") return {"D", "I", "F"};
  if (law == "mt-identity") return {"D", "I", "F", "F1", "F2"};
  if (law == "kar-spl") return {"D", "F"};
  if (law == "char-algebraic") return {"D"};
  return {"D", "I", "F", "F1", "F2", "Fc"};
}

Certificate cmd_verify(const std::string& law, std::vector<std::string> monads, int max_size,
                       std::vector<std::string> classes, int probe) {
  static const std::vector<std::string> laws{"kz-equiv",      "em-adjoint",     "injectivity",
                                             "cauchy",        "kar-spl",        "char-algebraic",
                                             "thm6",          "regcogen",       "mt-identity"};
  if (std::find(laws.begin(), laws.end(), law) == laws.end()) throw InvalidInput("unknown law '" + law + "'");
  check_bound(max_size);
  Certificate c;
  c.command = "verify " + law;
  Json runs = Json::array();
  bool holds = true;
  auto record = [&](SweepReport r) {
    holds = holds && r.holds;
    if (!r.holds && c.witness.is_null()) c.witness = r.detail.value("witness", Json());
    r.detail["holds"] = r.holds;
    runs.push_back(std::move(r.detail));
  };
  if (law == "thm6") {
    const int bound = max_size > 0 ? max_size : 6;
    c.instance["max_size"] = bound;
    record(sweep_filter_splittings(bound));
  } else if (law == "regcogen") {
    if (classes.empty()) classes = {"alat", "adom", "spec"};
    const int bound = max_size > 0 ? max_size : 4;
    c.instance["max_size"] = bound;
    c.instance["classes"] = classes;
    for (const auto& name : classes) record(sweep_regcogen(category_class_by_name(name), bound));
  } else {
    if (monads.empty()) monads = default_monads(law);
    c.instance["monads"] = monads;
    if (max_size > 0) c.instance["max_size"] = max_size;
    for (const auto& name : monads) {
      const auto t = monad_by_name(name);
      const int bound = max_size > 0 ? max_size : default_bound(law, t);
      if (law == "kz-equiv") record(sweep_kz(t, bound));
      if (law == "em-adjoint") record(sweep_em_adjoint(t, bound));
      if (law == "injectivity") record(sweep_injectivity(t, bound));
      if (law == "mt-identity") record(sweep_mt_identity(t, bound));
      if (law == "cauchy") record(sweep_cauchy(t, bound, probe));
      if (law == "kar-spl") record(sweep_kar(t, bound));
      if (law == "char-algebraic") record(sweep_char_algebraic(t, bound));
    }
  }
  c.result["runs"] = runs;
  c.verdict = holds ? Verdict::pass : Verdict::fail;
  if (!holds && c.witness.is_null()) c.witness = Json{{"reason", "see runs"}};
  return c;
}

// ---- search ---------------------------------------------------------------

// expr := or ('->' expr)? ; or := and ('|' and)* ; and := unary ('&' unary)* ;
// unary := '!' unary | '(' expr ')' | name
class Expr {
 public:
  explicit Expr(std::string text) : s_(std::move(text)) {
    root_ = implication();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + s_.substr(i_) + "'");
  }
  bool eval(const Classification& c) const { return root_(c); }

 private:
  using Fn = std::function<bool(const Classification&)>;
  std::string s_;
  std::size_t i_ = 0;
  Fn root_;

  [[noreturn]] void fail(const std::string& what) const { throw InvalidInput("predicate expression: " + what); }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool take(const std::string& tok) {
    skip();
    if (s_.compare(i_, tok.size(), tok) == 0) {
      i_ += tok.size();
      return true;
    }
    return false;
  }
  Fn implication() {
    auto lhs = disjunction();
    if (!take("->")) return lhs;
    auto rhs = implication();
    return [lhs, rhs](const Classification& c) { return !lhs(c) || rhs(c); };
  }
  Fn disjunction() {
    auto f = conjunction();
    while (take("|")) {
      auto g = conjunction();
      f = [f, g](const Classification& c) { return f(c) || g(c); };
    }
    return f;
  }
  Fn conjunction() {
    auto f = unary();
    while (take("&")) {
      auto g = unary();
      f = [f, g](const Classification& c) { return f(c) && g(c); };
    }
    return f;
  }
  Fn unary() {
    if (take("!")) {
      auto f = unary();
      return [f](const Classification& c) { return !f(c); };
    }
    if (take("(")) {
      auto f = implication();
      if (!take(")")) fail("missing ')'");
      return f;
    }
    skip();
    const auto start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-')) {
      if (s_[i_] == '-' && i_ + 1 < s_.size() && s_[i_ + 1] == '>') break;
      ++i_;
    }
    if (start == i_) fail("expected a predicate name at offset " + std::to_string(start));
    const auto name = s_.substr(start, i_ - start);
    flag_value(Classification{}, name);
    return [name](const Classification& c) { return flag_value(c, name); };
  }
};

Certificate cmd_search(const std::string& expr_text, int max_size, bool lattices_only) {
  check_bound(max_size);
  const Expr expr(expr_text);
  Certificate c;
  c.command = "search";
  c.instance = Json{{"expression", expr_text}, {"max_size", max_size}, {"lattices_only", lattices_only}};
  std::size_t examined = 0;
  for (int n = 0; n <= max_size; ++n) {
    const auto objects = lattices_only ? enumerate_lattices(n) : enumerate_posets(n);
    for (const auto& p : objects) {
      ++examined;
      const auto cl = classify(p);
      if (expr.eval(cl)) {
        c.result = Json{{"found", poset_to_json(*p)}, {"size", p->size()}, {"flags", classification_json(cl)},
                        {"examined", examined}};
        return c;
      }
    }
  }
  c.verdict = Verdict::absent;
  c.result["examined"] = examined;
  c.witness = Json{{"reason", "no object of size <= " + std::to_string(max_size) + " satisfies the expression"}};
  return c;
}

// ---- kar / kleisli --------------------------------------------------------

Certificate cmd_kar(const std::string& name, int max_size) {
  check_bound(max_size);
  const auto t = monad_by_name(name);
  if (!t.is_kz_expected()) throw InvalidInput("kar enumeration needs a KZ monad");
  Certificate c;
  c.command = "kar " + name + " enumerate";
  c.instance = Json{{"monad", t.name()}, {"max_size", max_size}};
  Json objects = Json::array();
  for (const auto& k : enumerate_kar(t, max_size)) {
    const auto sk = split_kar(t, k);
    const bool split = sk.splitting && sk.splitting->valid();
    objects.push_back(Json{{"carrier", poset_to_json(*k.x->t1->base)},
                           {"t", table_to_json(k.t)},
                           {"split_size", sk.split.object->size()},
                           {"split_algebra", split}});
    if (!split && c.witness.is_null()) {
      c.verdict = Verdict::fail;
      c.witness = objects.back();
    }
  }
  c.result["count"] = objects.size();
  c.result["objects"] = objects;
  return c;
}

Certificate cmd_kleisli_dense(const std::string& name, const std::string& path) {
  const auto t = monad_by_name(name);
  const auto f = map_from_json(load_json_file(path));
  check_cap(f.dom().size(), "domain");
  check_cap(f.cod().size(), "codomain");
  for (const auto* p : {&f.dom(), &f.cod()}) {
    if (!t.accepts(*p)) throw InvalidInput("map endpoints must be objects of the base category");
  }
  Certificate c;
  c.command = "kleisli dense " + name;
  c.instance = Json{{"input", path}, {"monad", t.name()}};
  const auto tx = t.apply(f.dom_ref());
  const auto ty = t.apply(f.cod_ref());
  const auto tf = t.fmap(f, *tx, *ty);
  c.result["Tf"] = table_to_json(tf);
  auto g = try_adjoint(tf, Side::right, t.enrichment());
  if (g) {
    c.result["right_adjoint"] = table_to_json(*g);
    return c;
  }
  c.verdict = Verdict::fail;
  const bool dual = t.enrichment() == Enrichment::dual_pointwise;
  const auto& txo = *tx->object;
  for (int q = 0; q < ty->size(); ++q) {
    Subset s = txo.empty_set();
    for (int p = 0; p < txo.size(); ++p) {
      if (dual ? ty->object->le(q, tf(p)) : ty->object->le(tf(p), q)) s.set(p);
    }
    const auto best = dual ? txo.least_in(s) : txo.greatest_in(s);
    if (!best) {
      c.witness = Json{{"element", ty->object->label(q)},
                       {"candidates", labels(txo, s)},
                       {"reason", dual ? "no least candidate" : "no greatest candidate"}};
      break;
    }
  }
  return c;
}

}  // namespace

int max_elements() {
  if (const char* v = std::getenv("ORDERLAB_MAX_ELEMENTS")) {
    try {
      const int n = std::stoi(v);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return 10;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-instance workbench for Kock-Zoeberlein monads", "orderlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", opts.timing, "Add the runtime to the certificate");

  std::function<Certificate()> action;
  std::string a1, a2, a3;
  int max_size = 0;
  int search_max = 5;
  int kar_max = 2;
  int probe = 3;
  bool lattices = false;
  std::vector<std::string> monads, classes;

  auto* check = app.add_subcommand("check", "Check an order or space predicate");
  check->add_option("predicate", a1)->required();
  check->add_option("input", a2, "Poset or space JSON")->required();
  check->callback([&] { action = [&] { return cmd_check(a1, a2); }; });

  auto* monad = app.add_subcommand("monad", "Apply a monad or verify its laws on an object");
  monad->add_option("name", a1, "D, I, F, F1, F2, Fc or adjbounds")->required();
  monad->add_option("action", a2, "apply, unit, mult, kz-verify or laws")->required();
  monad->add_option("input", a3)->required();
  monad->callback([&] { action = [&] { return cmd_monad(a1, a2, a3); }; });

  auto* algebra = app.add_subcommand("algebra", "Algebra structure, splitting and algebraicity");
  algebra->add_option("name", a1)->required();
  algebra->add_option("action", a2, "find, split, algebraic or algebraic-direct")->required();
  algebra->add_option("input", a3)->required();
  algebra->callback([&] { action = [&] { return cmd_algebra(a1, a2, a3); }; });

  auto* verify = app.add_subcommand("verify", "Exhaustive verification sweeps");
  verify->add_option("law", a1,
                     "kz-equiv, em-adjoint, injectivity, cauchy, kar-spl, char-algebraic, thm6, regcogen, mt-identity")
      ->required();
  verify->add_option("--monad", monads, "Monads to sweep (repeatable)");
  verify->add_option("--max-size", max_size, "Size bound")->check(CLI::PositiveNumber);
  verify->add_option("--class", classes, "alat, adom or spec (repeatable)");
  verify->add_option("--probe", probe, "Probe bound for cauchy")->check(CLI::PositiveNumber);
  verify->callback([&] { action = [&] { return cmd_verify(a1, monads, max_size, classes, probe); }; });

  auto* search = app.add_subcommand("search", "First object satisfying a predicate expression");
  search->add_option("expression", a1, "e.g. 'lattice & !distributive'")->required();
  search->add_option("--max-size", search_max, "Size bound")->capture_default_str()->check(CLI::NonNegativeNumber);
  search->add_flag("--lattices", lattices, "Only enumerate lattices");
  search->callback([&] { action = [&] { return cmd_search(a1, search_max, lattices); }; });

  auto* kar = app.add_subcommand("kar", "Idempotent split completion of the Kleisli category");
  kar->add_option("name", a1)->required();
  kar->add_option("action", a2, "enumerate")->required()->check(CLI::IsMember({"enumerate"}));
  kar->add_option("--max-size", kar_max, "Carrier size bound")->capture_default_str()->check(CLI::NonNegativeNumber);
  kar->callback([&] { action = [&] { return cmd_kar(a1, kar_max); }; });

  auto* kleisli = app.add_subcommand("kleisli", "Kleisli-category predicates");
  kleisli->add_option("action", a1, "dense")->required()->check(CLI::IsMember({"dense"}));
  kleisli->add_option("name", a2)->required();
  kleisli->add_option("input", a3, "Map JSON")->required();
  kleisli->callback([&] { action = [&] { return cmd_kleisli_dense(a2, a3); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  try {
    const auto start = std::chrono::steady_clock::now();
    const auto cert = action();
    const auto millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(cert, opts, millis, out);
    return exit_code(cert.verdict);
  } catch (const InvalidInput& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const SizeCapExceeded& e) {
    err << "size cap: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace orderlab::cli
