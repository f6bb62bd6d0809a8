#include "normalcone/runner.hpp"

#include <functional>
#include <map>
#include <set>

#include "json.hpp"
#include "normalcone/errors.hpp"
#include "normalcone/filtration.hpp"
#include "normalcone/script.hpp"

namespace normalcone {

namespace {

using json = nlohmann::json;
using script::Diagnostic;
using script::DiagnosticKind;
using script::Expr;
using script::Position;
using script::ScriptError;

constexpr std::size_t kMaxTerms = 20000;
constexpr long kMaxWeight = 1000;
constexpr std::uint64_t kDefaultSeed = 0;
constexpr std::size_t kDefaultTrials = 20;

[[noreturn]] void semantic(Position pos, std::string message) {
  throw ScriptError(Diagnostic{DiagnosticKind::Semantic, pos, std::move(message), {}});
}

// ---------------------------------------------------------------------------
// Environment

struct Object {
  enum class Kind { Ideal, Seq, Order, Filtration };
  Kind kind = Kind::Ideal;
  Ideal ideal;
  std::vector<Polynomial> seq;
  MonomialOrder order;
  Filtration filtration;
  std::string text;  ///< canonical definition, for provenance
};

std::string kind_name(Object::Kind k) {
  switch (k) {
    case Object::Kind::Ideal: return "ideal";
    case Object::Kind::Seq: return "sequence";
    case Object::Kind::Order: return "order";
    case Object::Kind::Filtration: return "filtration";
  }
  return "?";
}

struct Env {
  Ring R;
  std::string ring_text;
  std::map<std::string, Object> objects;
};

Polynomial evaluate(const Env& env, const Expr& e) {
  const Ring& R = env.R;
  const Field& F = R->field();
  auto check = [&](const Polynomial& p) {
    if (p.size() > kMaxTerms) semantic(e.pos, "expression expands to more than " + std::to_string(kMaxTerms) + " terms");
    return p;
  };
  switch (e.kind) {
    case Expr::Kind::Number: return R->one().scaled(F.from_rational(mpq_class(mpz_class(e.text))));
    case Expr::Kind::Variable: {
      const auto& names = R->names();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == e.text) return R->var(i);
      semantic(e.pos, "unknown variable '" + e.text + "'");
    }
    case Expr::Kind::Neg: return -evaluate(env, e.args[0]);
    case Expr::Kind::Add: return evaluate(env, e.args[0]) + evaluate(env, e.args[1]);
    case Expr::Kind::Sub: return evaluate(env, e.args[0]) - evaluate(env, e.args[1]);
    case Expr::Kind::Mul: {
      const Polynomial a = evaluate(env, e.args[0]), b = evaluate(env, e.args[1]);
      if (a.size() * b.size() > 4 * kMaxTerms) semantic(e.pos, "product too large");
      return check(a * b);
    }
    case Expr::Kind::Div: {
      const Polynomial a = evaluate(env, e.args[0]), b = evaluate(env, e.args[1]);
      if (!b.is_constant()) semantic(e.args[1].pos, "division by a non-constant polynomial");
      if (b.is_zero()) semantic(e.args[1].pos, "division by zero in " + F.name());
      return a.scaled(F.inv(b.constant_term()));
    }
    case Expr::Kind::Pow: {
      const Polynomial b = evaluate(env, e.args[0]);
      const int deg = std::max(b.degree(), 0);
      if (long(deg) * e.exponent > 60000) semantic(e.pos, "power exceeds the exponent limit");
      if (b.size() > 1 && e.exponent > 64) semantic(e.pos, "power of a polynomial with exponent above 64");
      if (b.size() > 1) {
        Polynomial r = R->one();
        for (unsigned k = 0; k < e.exponent; ++k) r = check(r * b);
        return r;
      }
      return b.pow(e.exponent);
    }
  }
  semantic(e.pos, "bad expression");
}

std::vector<Polynomial> evaluate_all(const Env& env, const std::vector<Expr>& v) {
  std::vector<Polynomial> out;
  for (const auto& e : v) out.push_back(evaluate(env, e));
  return out;
}

std::string list_text(const std::vector<Expr>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + script::pretty_print(v[i]);
  return s + ")";
}

MonomialOrder build_order(const Env& env, const script::OrderSpec& o) {
  const std::size_t n = env.R->nvars();
  std::vector<std::size_t> priority;
  for (const auto& v : o.priority) {
    const auto& names = env.R->names();
    auto it = std::find(names.begin(), names.end(), v);
    if (it == names.end()) semantic(o.pos, "unknown variable '" + v + "' in order priority");
    priority.push_back(static_cast<std::size_t>(it - names.begin()));
  }
  if (!priority.empty()) {
    std::set<std::size_t> s(priority.begin(), priority.end());
    if (s.size() != n || priority.size() != n) semantic(o.pos, "order priority must list every variable once");
  }
  if (o.name != "weighted" && !o.weights.empty()) semantic(o.pos, "only weighted orders take weights");
  if (o.name == "lex") return MonomialOrder::lex(n, priority);
  if (o.name == "deglex") return MonomialOrder::deglex(n, priority);
  if (o.name == "degrevlex") return MonomialOrder::degrevlex(n, priority);
  if (o.name == "weighted") {
    if (o.weights.size() != n) semantic(o.pos, "weighted order needs one weight per variable");
    std::vector<int> w;
    for (long x : o.weights) {
      if (x < 1 || x > kMaxWeight) semantic(o.pos, "order weights must lie in 1.." + std::to_string(kMaxWeight));
      w.push_back(static_cast<int>(x));
    }
    return MonomialOrder::weighted(w, priority);
  }
  semantic(o.pos, "unknown order '" + o.name + "' (expected lex, deglex, degrevlex or weighted)");
}

void declare(Env& env, const std::string& name, Position pos, Object obj) {
  if (name == "m") semantic(pos, "'m' is reserved for the maximal ideal");
  const auto& vars = env.R->names();
  if (std::find(vars.begin(), vars.end(), name) != vars.end())
    semantic(pos, "name '" + name + "' is already a ring variable");
  if (env.objects.count(name)) semantic(pos, "name '" + name + "' is already declared");
  env.objects.emplace(name, std::move(obj));
}

const Object& lookup(const Env& env, const std::string& name, Position pos) {
  auto it = env.objects.find(name);
  if (it == env.objects.end()) semantic(pos, "undeclared name '" + name + "'");
  return it->second;
}

Ring build_ring(const script::RingDecl& r, const RunOptions& opt, std::string& text) {
  Field F;
  if (r.characteristic) {
    try {
      F = Field::prime(static_cast<std::uint32_t>(r.characteristic));
      if (r.characteristic >= (1L << 31)) throw std::invalid_argument("too large");
    } catch (const std::invalid_argument&) {
      semantic(r.pos, "GF(" + std::to_string(r.characteristic) + ") is not a prime field below 2^31");
    }
  }
  std::set<std::string> seen;
  for (const auto& v : r.vars) {
    if (v == "m") semantic(r.pos, "'m' is reserved and cannot name a variable");
    if (!seen.insert(v).second) semantic(r.pos, "variable '" + v + "' declared twice");
  }
  if (r.vars.size() > 12) semantic(r.pos, "at most 12 variables are supported");
  std::optional<int> cap;
  if (r.trunc) {
    if (*r.trunc < 2 || *r.trunc > 1000) semantic(r.pos, "trunc must lie in 2..1000");
    cap = static_cast<int>(*r.trunc);
  }
  if (opt.trunc_override) cap = *opt.trunc_override;
  Env tmp;
  tmp.R = RingContext::make(F, r.vars, {}, cap);
  auto rels = evaluate_all(tmp, r.relations);
  for (std::size_t i = 0; i < rels.size(); ++i)
    if (!rels[i].is_zero() && rels[i].low_degree() == 0)
      semantic(r.relations[i].pos, "relation " + script::pretty_print(r.relations[i]) + " is a unit in the local ring");
  text = (r.characteristic ? "GF(" + std::to_string(r.characteristic) + ")" : std::string("Q")) + "[";
  for (std::size_t i = 0; i < r.vars.size(); ++i) text += (i ? "," : "") + r.vars[i];
  text += "]";
  if (!r.relations.empty()) text += "/" + list_text(r.relations);
  return RingContext::make(F, r.vars, rels, cap);
}

// ---------------------------------------------------------------------------
// Commands

enum class ParamType { Ideal, Seq, Filtration, Order, Int, IntOrAuto, Range, Polys, Word };

struct Param {
  Param(std::string n, ParamType t, bool req = true, std::vector<std::string> w = {})
      : name(std::move(n)), type(t), required(req), words(std::move(w)) {}
  std::string name;
  ParamType type;
  bool required;
  std::vector<std::string> words;  ///< Word only
};

struct Arg {
  Ideal ideal;
  std::vector<Polynomial> seq;
  Filtration filtration;
  MonomialOrder order;
  std::optional<long> integer;  ///< nullopt = auto
  script::Range range;
  std::vector<Polynomial> polys;
  std::string word;
  std::string text;
};

struct Args {
  std::map<std::string, Arg> v;
  const Arg& operator[](const std::string& k) const { return v.at(k); }
  bool has(const std::string& k) const { return v.count(k) != 0; }
};

struct Entry {
  json result = json::object();
  json checks = json::array();
  std::vector<std::string> warnings;

  void check(const std::string& name, json expected, json actual, bool pass) {
    checks.push_back({{"name", name}, {"expected", std::move(expected)}, {"actual", std::move(actual)}, {"pass", pass}});
  }
  bool passed() const {
    for (const auto& c : checks)
      if (!c["pass"].get<bool>()) return false;
    return true;
  }
};

struct Context {
  const Env& env;
  std::uint64_t seed;
  std::size_t trials;
};

using Handler = std::function<void(const Context&, const Args&, Entry&)>;

struct CommandSpec {
  std::vector<Param> positional;
  std::vector<Param> keywords;
  Handler run;
};

std::string str(const Ring& R, const Polynomial& p) { return p.to_string(R->names()); }

json polys(const Ring& R, const std::vector<Polynomial>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(str(R, p));
  return a;
}

json monomials(const Ring& R, const std::vector<Monomial>& v) {
  json a = json::array();
  for (const auto& m : v) a.push_back(monomial_to_string(m, R->names()));
  return a;
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json initial_json(const Ring& R, const InitialIdeal& in) {
  json gens = json::array();
  for (const auto& g : in.generators) {
    json j = {{"degree", g.degree}, {"representative", str(R, g.representative)}};
    if (g.form) j["form"] = str(R, *g.form);
    gens.push_back(std::move(j));
  }
  return {{"generators", gens},
          {"top_degree", in.top_degree},
          {"checked_through", in.checked_through},
          {"rees_degree", optional_int(in.rees_degree)},
          {"certified", in.certified},
          {"method", in.method}};
}

json cert_json(const BoundCertificate& b) {
  json j = {{"N", b.N}, {"formula", to_string(b.formula)}, {"a", b.a}, {"ar", b.ar}};
  j["single_c"] = optional_int(b.single_c);
  j["delta"] = optional_int(b.delta);
  j["p"] = optional_int(b.p);
  j["warnings"] = b.warnings;
  return j;
}

json report_json(const Ring& R, const PerturbationReport& r) {
  auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  json a = json::array();
  for (const auto& x : r.a_perturbed) a.push_back(optional_int(x));
  json j = {{"trial", r.trial},
            {"eps", polys(R, r.eps)},
            {"filter_regular_preserved", opt(r.filter_regular_preserved)},
            {"initial_ideal_equal", opt(r.initial_ideal_equal)},
            {"artin_rees_equal", opt(r.artin_rees_equal)},
            {"hilbert_equal", opt(r.hilbert_equal)},
            {"graded_lengths_dominated", opt(r.graded_lengths_dominated)},
            {"am_equal", opt(r.am_equal)},
            {"a_perturbed", a},
            {"passed", r.passed()}};
  if (r.error) j["error"] = *r.error;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

json trials_json(const Ring& R, const std::vector<PerturbationReport>& reps, Entry& e) {
  std::size_t pass = 0, errors = 0;
  json failures = json::array();
  for (const auto& r : reps) {
    if (r.passed()) {
      ++pass;
    } else {
      if (r.error) ++errors;
      if (failures.size() < 5) failures.push_back(report_json(R, r));
    }
  }
  e.check("all trials pass", reps.size(), pass, pass == reps.size());
  return {{"trials", reps.size()}, {"passed", pass}, {"errors", errors}, {"failures", failures}};
}

long expect_int(const Args& a) { return *a["expect"].integer; }

std::vector<long> hs_of(const Ideal& I, const Ideal& J, int n) { return hilbert_samuel(I, J, n).hs; }

json witness_json(const Ring& R, const std::optional<DestabilizingWitness>& w) {
  if (!w) return nullptr;
  return {{"eps", polys(R, w->eps)},
          {"index", w->index + 1},
          {"degree", w->degree},
          {"candidate", w->trial},
          {"structured", w->structured}};
}

int level_arg(const Args& a, const std::string& key, int fallback) {
  if (!a.has(key) || !a[key].integer) return fallback;
  return static_cast<int>(*a[key].integer);
}

const std::map<std::string, CommandSpec>& commands() {
  using P = ParamType;
  static const std::map<std::string, CommandSpec> table = [] {
    std::map<std::string, CommandSpec> t;
    const Param I{"I", P::Ideal}, J{"J", P::Ideal}, f{"f", P::Seq}, F{"F", P::Filtration};
    const Param expect_int_p{"expect", P::Int, false};
    const Param trials{"trials", P::Int, false}, seed{"seed", P::Int, false};

    t["artin_rees"] = {{I, J}, {expect_int_p}, [](const Context& c, const Args& a, Entry& e) {
                         auto r = artin_rees(a["I"].ideal, a["J"].ideal);
                         e.result = {{"value", r.value},
                                     {"rees_route", r.rees_route},
                                     {"degreewise_route", r.degreewise_route},
                                     {"tangent_cone_route", optional_int(r.tangent_cone_route)}};
                         if (a.has("expect")) e.check("ar", expect_int(a), r.value, r.value == expect_int(a));
                         (void)c;
                       }};
    t["initial"] = {{I, J}, {{"expect", P::Polys, false}}, [](const Context& c, const Args& a, Entry& e) {
                      auto in = initial_ideal(a["I"].ideal, a["J"].ideal);
                      e.result = initial_json(c.env.R, in);
                      if (a.has("expect")) {
                        if (!is_maximal_ideal(a["J"].ideal))
                          throw PreconditionError("initial ... expect= compares forms and needs J = m");
                        const bool ok = initial_ideal_matches(in, a["expect"].polys);
                        json got = json::array();
                        for (const auto& g : in.generators) got.push_back(str(c.env.R, *g.form));
                        e.check("initial forms", a["expect"].text, got, ok);
                      }
                    }};
    t["assoc_graded"] = {{I, J}, {}, [](const Context& c, const Args& a, Entry& e) {
                           auto g = assoc_graded(a["I"].ideal, a["J"].ideal);
                           e.result = {{"ambient_relations", polys(c.env.R, g.ambient_relations)},
                                       {"initial", initial_json(c.env.R, g.initial)},
                                       {"description", g.description}};
                         }};
    t["rees"] = {{I, J}, {expect_int_p}, [](const Context& c, const Args& a, Entry& e) {
                   auto q = rees_ideal(a["I"].ideal, a["J"].ideal);
                   json md = json::array();
                   for (auto [d, k] : q.minimal_degrees) md.push_back({{"degree", d}, {"count", k}});
                   e.result = {{"top_degree", q.top_degree},
                               {"rees_vars", q.rees_vars},
                               {"generators", q.generators.size()},
                               {"minimal_degrees", md}};
                   if (a.has("expect")) e.check("d(Q)", expect_int(a), q.top_degree, q.top_degree == expect_int(a));
                   (void)c;
                 }};
    t["order_of"] = {{{"g", P::Polys}, J}, {expect_int_p}, [](const Context& c, const Args& a, Entry& e) {
                       const auto& gs = a["g"].polys;
                       if (gs.size() != 1) throw PreconditionError("order_of takes one polynomial");
                       auto form = initial_form(gs[0], a["J"].ideal);
                       e.result = {{"order", form.degree}};
                       if (form.form) e.result["form"] = str(c.env.R, *form.form);
                       if (a.has("expect")) e.check("order", expect_int(a), form.degree, form.degree == expect_int(a));
                     }};
    t["filter_regular"] = {{f, J}, {{"expect", P::Polys, false}}, [](const Context& c, const Args& a, Entry& e) {
                             auto cert = certify_filter_regular(a["f"].seq, a["J"].ideal);
                             json av = json::array();
                             for (const auto& x : cert.a) av.push_back(optional_int(x));
                             e.result = {{"a", av}, {"filter_regular", cert.filter_regular}};
                             if (cert.first_failure) e.result["first_failure"] = *cert.first_failure + 1;
                             if (a.has("expect")) {
                               json want = json::array();
                               for (const auto& p : a["expect"].polys) {
                                 if (!p.is_constant()) throw PreconditionError("expected a_i must be integers");
                                 want.push_back(std::stol(p.constant_term().get_str()));
                               }
                               e.check("a_i", want, av, want == av);
                             }
                             (void)c;
                           }};
    t["bound_main"] = {{f, J}, {expect_int_p, {"expect_c", P::Int, false}}, [](const Context&, const Args& a, Entry& e) {
                         auto b = bound_main(a["f"].seq, a["J"].ideal);
                         e.result = cert_json(b);
                         if (a.has("expect")) e.check("N", expect_int(a), b.N, b.N == expect_int(a));
                         if (a.has("expect_c")) {
                           const long want = *a["expect_c"].integer;
                           e.check("c", want, optional_int(b.single_c), b.single_c && *b.single_c == want);
                         }
                       }};
    t["bound_regular"] = {{f, J}, {expect_int_p}, [](const Context&, const Args& a, Entry& e) {
                            auto b = bound_regular(a["f"].seq, a["J"].ideal);
                            e.result = cert_json(b);
                            if (a.has("expect")) e.check("N", expect_int(a), b.N, b.N == expect_int(a));
                          }};
    t["bound_hilbert"] = {{f, J}, {{"p", P::Int}, expect_int_p}, [](const Context&, const Args& a, Entry& e) {
                            auto b = bound_via_hilbert(a["f"].seq, a["J"].ideal, static_cast<int>(*a["p"].integer));
                            e.result = cert_json(b);
                            if (a.has("expect")) e.check("N", expect_int(a), b.N, b.N == expect_int(a));
                          }};
    t["verify"] = {{f, J},
                   {{"N", P::IntOrAuto, false}, trials, seed, {"single", P::Int, false}, {"am", P::Int, false}},
                   [](const Context& c, const Args& a, Entry& e) {
                     const auto& fs = a["f"].seq;
                     const Ideal& Jd = a["J"].ideal;
                     int N = level_arg(a, "N", 0);
                     if (N == 0) N = bound_main(fs, Jd).N;
                     PerturbationOptions opt;
                     if (a.has("single")) opt.single_index = static_cast<std::size_t>(*a["single"].integer - 1);
                     if (a.has("am")) opt.am_window = static_cast<int>(*a["am"].integer);
                     auto reps = verify_invariance(fs, Jd, N, c.trials, c.seed, opt);
                     e.result = trials_json(c.env.R, reps, e);
                     e.result["N"] = N;
                     e.result["seed"] = c.seed;
                   }};
    t["perturb"] = {{f, J},
                    {{"eps", P::Polys}, {"N", P::IntOrAuto, false}, {"expect", P::Word, false, {"changed", "stable"}}},
                    [](const Context& c, const Args& a, Entry& e) {
                      const auto& fs = a["f"].seq;
                      int N = level_arg(a, "N", 0);
                      if (N == 0) N = bound_main(fs, a["J"].ideal).N;
                      auto eps = a["eps"].polys;
                      if (eps.size() > fs.size()) throw PreconditionError("more perturbations than sequence elements");
                      eps.resize(fs.size(), c.env.R->zero());
                      auto r = check_perturbation(fs, a["J"].ideal, N, eps);
                      e.result = report_json(c.env.R, r);
                      e.result["N"] = N;
                      if (a.has("expect")) {
                        const bool changed = r.initial_ideal_equal && !*r.initial_ideal_equal;
                        const std::string got = changed ? "changed" : "stable";
                        e.check("initial ideal", a["expect"].word, got, got == a["expect"].word);
                      }
                    }};
    t["destabilize"] = {{f, J},
                        {{"N", P::Int}, trials, seed, {"expect", P::Word, false, {"found", "none"}}},
                        [](const Context& c, const Args& a, Entry& e) {
                          auto w = search_destabilizing(a["f"].seq, a["J"].ideal, static_cast<int>(*a["N"].integer),
                                                        c.trials, c.seed);
                          e.result = {{"witness", witness_json(c.env.R, w)}, {"seed", c.seed}};
                          if (a.has("expect")) {
                            const std::string got = w ? "found" : "none";
                            e.check("witness", a["expect"].word, got, got == a["expect"].word);
                          }
                        }};
    t["hilbert"] = {{I, J}, {{"n", P::Int}, {"expect", P::Polys, false}}, [](const Context&, const Args& a, Entry& e) {
                      auto hs = hs_of(a["I"].ideal, a["J"].ideal, static_cast<int>(*a["n"].integer));
                      e.result = {{"hs", hs}};
                      if (a.has("expect")) {
                        std::vector<long> want;
                        for (const auto& p : a["expect"].polys) want.push_back(std::stol(p.constant_term().get_str()));
                        e.check("HS", want, hs, want == hs);
                      }
                    }};
    t["hs_compare"] = {{{"I1", P::Ideal}, {"I2", P::Ideal}, J},
                       {{"n", P::Int}, expect_int_p},
                       [](const Context&, const Args& a, Entry& e) {
                         const int n = static_cast<int>(*a["n"].integer);
                         auto t1 = hilbert_samuel(a["I1"].ideal, a["J"].ideal, n);
                         auto t2 = hilbert_samuel(a["I2"].ideal, a["J"].ideal, n);
                         std::optional<int> hs_diff, graded_diff;
                         for (std::size_t k = 0; k < t1.hs.size(); ++k)
                           if (t1.hs[k] != t2.hs[k]) {
                             hs_diff = static_cast<int>(k);
                             break;
                           }
                         auto l1 = graded_lengths(t1), l2 = graded_lengths(t2);
                         for (std::size_t k = 0; k < l1.size(); ++k)
                           if (l1[k] != l2[k]) {
                             graded_diff = static_cast<int>(k);
                             break;
                           }
                         e.result = {{"hs_1", t1.hs},
                                     {"hs_2", t2.hs},
                                     {"graded_1", l1},
                                     {"graded_2", l2},
                                     {"hs_first_difference", optional_int(hs_diff)},
                                     {"graded_first_difference", optional_int(graded_diff)}};
                         if (a.has("expect"))
                           e.check("graded first difference", expect_int(a), optional_int(graded_diff),
                                   graded_diff && *graded_diff == expect_int(a));
                       }};
    t["am"] = {{I, J}, {{"r", P::Int}, {"s", P::Int}}, [](const Context&, const Args& a, Entry& e) {
                 auto am = achilles_manaresi(a["I"].ideal, a["J"].ideal, static_cast<int>(*a["r"].integer),
                                             static_cast<int>(*a["s"].integer));
                 auto ms = multiplicity_sequence(am);
                 json c = json::array();
                 for (const auto& q : ms.c) c.push_back(q.get_str());
                 e.result = {{"lengths", am.am_lengths},
                             {"sums", am.am_sums},
                             {"multiplicity_sequence", c},
                             {"d", ms.d},
                             {"stable", ms.stable}};
               }};
    t["multiplicity"] = {{I, J}, {{"n", P::Int, false}, expect_int_p}, [](const Context&, const Args& a, Entry& e) {
                           auto m = multiplicity_hs(a["I"].ideal, a["J"].ideal, level_arg(a, "n", 10));
                           e.result = {{"e", m.e}, {"dimension", m.dimension}};
                           if (a.has("expect")) e.check("e", expect_int(a), m.e, m.e == expect_int(a));
                         }};
    t["hilbert_index"] = {{f, J}, {{"n", P::Int}, trials, seed}, [](const Context& c, const Args& a, Entry& e) {
                            auto est = estimate_hilbert_index(a["f"].seq, a["J"].ideal,
                                                              static_cast<int>(*a["n"].integer), c.trials, c.seed);
                            e.result = {{"p_hat", est.p_hat},
                                        {"changed_level", optional_int(est.changed_level)},
                                        {"first_differing_index", optional_int(est.first_differing_index)},
                                        {"witness", polys(c.env.R, est.witness)},
                                        {"status", est.status},
                                        {"seed", c.seed}};
                          }};
    t["colength"] = {{I}, {expect_int_p}, [](const Context&, const Args& a, Entry& e) {
                       auto l = colength(a["I"].ideal);
                       e.result = {{"colength", l ? json(*l) : json(nullptr)}};
                       if (a.has("expect")) e.check("colength", expect_int(a), e.result["colength"], l && *l == expect_int(a));
                     }};

    // Filtrations.
    t["axioms"] = {{F}, {{"upto", P::Int, false}}, [](const Context&, const Args& a, Entry& e) {
                     auto ax = check_axioms(a["F"].filtration, level_arg(a, "upto", 6));
                     e.result = {{"unit_level0", ax.unit_level0},
                                 {"decreasing", ax.decreasing},
                                 {"multiplicative", ax.multiplicative},
                                 {"checked_through", ax.checked_through}};
                     e.check("axioms", true, ax.ok(), ax.ok());
                   }};
    t["delta"] = {{F}, {{"cap", P::Int, false}, expect_int_p}, [](const Context& c, const Args& a, Entry& e) {
                    auto rd = rees_delta(a["F"].filtration, level_arg(a, "cap", 8));
                    json gens = json::array();
                    for (const auto& [g, k] : rd.generators) gens.push_back({{"degree", k}, {"generator", str(c.env.R, g)}});
                    e.result = {{"delta", rd.delta},
                                {"status", to_string(rd.status)},
                                {"checked_through", rd.checked_through},
                                {"fresh_degrees", rd.fresh_degrees},
                                {"generators", gens}};
                    if (rd.status == DeltaStatus::Heuristic) e.warnings.push_back("delta is heuristic");
                    if (a.has("expect")) e.check("delta", expect_int(a), rd.delta, rd.delta == expect_int(a));
                  }};
    t["lemma_j1"] = {{F}, {{"n", P::Int, false}}, [](const Context&, const Args& a, Entry& e) {
                       const auto& Fl = a["F"].filtration;
                       auto rd = rees_delta(Fl);
                       auto chk = check_lemma_J1(Fl, rd.delta, level_arg(a, "n", 5));
                       e.result = {{"delta", rd.delta},
                                   {"holds", chk.holds},
                                   {"first_failure", optional_int(chk.first_failure)},
                                   {"checked_through", chk.checked_through}};
                       e.check("containment", true, chk.holds, chk.holds);
                     }};
    t["initial_f"] = {{I, F}, {}, [](const Context& c, const Args& a, Entry& e) {
                        e.result = initial_json(c.env.R, initial_ideal_filtration(a["I"].ideal, a["F"].filtration));
                      }};
    t["cross_check_f"] = {{I, F}, {{"window", P::Int}}, [](const Context&, const Args& a, Entry& e) {
                            auto bad = order_initial_cross_check(a["I"].ideal, a["F"].filtration,
                                                                 static_cast<int>(*a["window"].integer));
                            e.result = {{"first_disagreement", optional_int(bad)}};
                            e.check("agreement", nullptr, optional_int(bad), !bad);
                          }};
    t["artin_rees_f"] = {{I, F}, {expect_int_p}, [](const Context&, const Args& a, Entry& e) {
                           auto r = artin_rees_filtration(a["I"].ideal, a["F"].filtration);
                           e.result = {{"value", r.value},
                                       {"rees_route", r.rees_route},
                                       {"certificate", r.certificate},
                                       {"degreewise_route", r.degreewise_route},
                                       {"decomposition_verified", r.decomposition_verified},
                                       {"predecessor_fails",
                                        r.predecessor_fails ? json(*r.predecessor_fails) : json(nullptr)}};
                           if (a.has("expect")) e.check("ar_F", expect_int(a), r.value, r.value == expect_int(a));
                         }};
    t["bound_f"] = {{f, F}, {expect_int_p}, [](const Context&, const Args& a, Entry& e) {
                      auto b = bound_filtration(a["f"].seq, a["F"].filtration);
                      e.result = cert_json(b.cert);
                      e.result["theorem_N"] = b.theorem_N;
                      e.result["regular_N"] = optional_int(b.regular_N);
                      e.result["adic_main_N"] = optional_int(b.adic_main_N);
                      for (const auto& w : b.cert.warnings) e.warnings.push_back(w);
                      if (a.has("expect")) e.check("N", expect_int(a), b.cert.N, b.cert.N == expect_int(a));
                    }};
    t["verify_f"] = {{f, F}, {{"N", P::IntOrAuto, false}, trials, seed}, [](const Context& c, const Args& a, Entry& e) {
                       const auto& fs = a["f"].seq;
                       const auto& Fl = a["F"].filtration;
                       int N = level_arg(a, "N", 0);
                       if (N == 0) N = bound_filtration(fs, Fl).cert.N;
                       auto reps = verify_invariance_filtration(fs, Fl, N, c.trials, c.seed);
                       e.result = trials_json(c.env.R, reps, e);
                       e.result["N"] = N;
                       e.result["seed"] = c.seed;
                     }};
    t["destabilize_f"] = {{f, F},
                          {{"N", P::Int}, trials, seed, {"expect", P::Word, false, {"found", "none"}}},
                          [](const Context& c, const Args& a, Entry& e) {
                            auto w = search_destabilizing_filtration(a["f"].seq, a["F"].filtration,
                                                                     static_cast<int>(*a["N"].integer), c.trials,
                                                                     c.seed);
                            e.result = {{"witness", witness_json(c.env.R, w)}, {"seed", c.seed}};
                            if (a.has("expect")) {
                              const std::string got = w ? "found" : "none";
                              e.check("witness", a["expect"].word, got, got == a["expect"].word);
                            }
                          }};
    t["jets"] = {{f}, {{"order", P::Order}, {"window", P::Range}}, [](const Context& c, const Args& a, Entry& e) {
                   const auto& w = a["window"].range;
                   auto rep = jet_pipeline(c.env.R, a["f"].seq, a["order"].order, static_cast<int>(w.lo),
                                           static_cast<int>(w.hi));
                   json levels = json::array();
                   auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
                   for (const auto& l : rep.levels)
                     levels.push_back({{"n", l.n},
                                       {"tail_in_JN", l.tail_in_JN},
                                       {"regular", opt(l.regular)},
                                       {"initial_equal", opt(l.initial_equal)},
                                       {"initial", monomials(c.env.R, l.initial)}});
                   e.result = {{"N", rep.N},
                               {"weights", rep.weights},
                               {"initial", monomials(c.env.R, rep.initial)},
                               {"minimal_admissible", rep.minimal_admissible},
                               {"levels", levels}};
                   e.check("jets", true, rep.passed(), rep.passed());
                 }};
    return t;
  }();
  return table;
}

std::string type_name(ParamType t) {
  switch (t) {
    case ParamType::Ideal: return "an ideal or sequence name";
    case ParamType::Seq: return "a sequence name";
    case ParamType::Filtration: return "a filtration name";
    case ParamType::Order: return "an order";
    case ParamType::Int: return "an integer";
    case ParamType::IntOrAuto: return "an integer or 'auto'";
    case ParamType::Range: return "a range lo..hi";
    case ParamType::Polys: return "a parenthesized list";
    case ParamType::Word: return "a keyword";
  }
  return "?";
}

Arg resolve(const Env& env, const Param& p, const script::Value& v, const std::string& cmd) {
  Arg a;
  auto bad = [&]() -> Arg {
    semantic(v.pos, "argument '" + p.name + "' of " + cmd + " must be " + type_name(p.type));
  };
  const auto* name = std::get_if<std::string>(&v.v);
  const auto* num = std::get_if<long>(&v.v);
  switch (p.type) {
    case ParamType::Ideal: {
      if (!name) return bad();
      a.text = *name;
      if (*name == "m") {
        a.ideal = Ideal::maximal(env.R);
        return a;
      }
      const Object& o = lookup(env, *name, v.pos);
      if (o.kind == Object::Kind::Ideal)
        a.ideal = o.ideal;
      else if (o.kind == Object::Kind::Seq)
        a.ideal = Ideal(env.R, o.seq);
      else
        semantic(v.pos, "'" + *name + "' is a " + kind_name(o.kind) + ", not an ideal");
      return a;
    }
    case ParamType::Seq: {
      if (!name) return bad();
      const Object& o = lookup(env, *name, v.pos);
      if (o.kind != Object::Kind::Seq) semantic(v.pos, "'" + *name + "' is a " + kind_name(o.kind) + ", not a sequence");
      if (o.seq.empty()) semantic(v.pos, "sequence '" + *name + "' is empty");
      a.seq = o.seq;
      a.text = *name;
      return a;
    }
    case ParamType::Filtration: {
      if (!name) return bad();
      const Object& o = lookup(env, *name, v.pos);
      if (o.kind != Object::Kind::Filtration)
        semantic(v.pos, "'" + *name + "' is a " + kind_name(o.kind) + ", not a filtration");
      a.filtration = o.filtration;
      a.text = *name;
      return a;
    }
    case ParamType::Order: {
      if (const auto* spec = std::get_if<script::OrderSpec>(&v.v)) {
        a.order = build_order(env, *spec);
        a.text = script::pretty_print(*spec);
        return a;
      }
      if (!name) return bad();
      auto it = env.objects.find(*name);
      if (it != env.objects.end()) {
        if (it->second.kind != Object::Kind::Order)
          semantic(v.pos, "'" + *name + "' is a " + kind_name(it->second.kind) + ", not an order");
        a.order = it->second.order;
      } else {
        script::OrderSpec spec;
        spec.name = *name;
        spec.pos = v.pos;
        a.order = build_order(env, spec);
      }
      a.text = *name;
      return a;
    }
    case ParamType::Int:
      if (!num) return bad();
      a.integer = *num;
      a.text = std::to_string(*num);
      return a;
    case ParamType::IntOrAuto:
      if (name && *name == "auto") {
        a.text = "auto";
        return a;
      }
      if (!num) return bad();
      if (*num < 1) semantic(v.pos, "level must be positive");
      a.integer = *num;
      a.text = std::to_string(*num);
      return a;
    case ParamType::Range: {
      const auto* r = std::get_if<script::Range>(&v.v);
      if (!r) return bad();
      if (r->lo > r->hi || r->hi > 200) semantic(v.pos, "range must satisfy lo <= hi <= 200");
      a.range = *r;
      a.text = std::to_string(r->lo) + ".." + std::to_string(r->hi);
      return a;
    }
    case ParamType::Polys: {
      const auto* e = std::get_if<std::vector<Expr>>(&v.v);
      if (!e) return bad();
      a.polys = evaluate_all(env, *e);
      a.text = list_text(*e);
      return a;
    }
    case ParamType::Word:
      if (!name || std::find(p.words.begin(), p.words.end(), *name) == p.words.end()) {
        std::string w;
        for (const auto& x : p.words) w += (w.empty() ? "" : " or ") + x;
        semantic(v.pos, "argument '" + p.name + "' of " + cmd + " must be " + w);
      }
      a.word = *name;
      a.text = *name;
      return a;
  }
  return bad();
}

struct Planned {
  const script::Command* cmd = nullptr;
  const CommandSpec* spec = nullptr;
  Args args;
  std::string text;
  json inputs = json::object();
};

std::string object_text(const Env& env, const Arg& a, const Param& p) {
  if (p.type == ParamType::Ideal || p.type == ParamType::Seq || p.type == ParamType::Filtration) {
    if (a.text == "m") return "m";
    auto it = env.objects.find(a.text);
    if (it != env.objects.end()) return it->second.text;
  }
  return a.text;
}

Planned plan(const Env& env, const script::Command& c) {
  auto it = commands().find(c.name);
  if (it == commands().end()) semantic(c.pos, "unknown command '" + c.name + "'");
  const CommandSpec& spec = it->second;
  Planned pl;
  pl.cmd = &c;
  pl.spec = &spec;
  script::SessionScript one;
  one.statements.push_back(c);
  pl.text = script::pretty_print(one);
  pl.text.pop_back();
  if (c.positional.size() != spec.positional.size())
    semantic(c.pos, c.name + " takes " + std::to_string(spec.positional.size()) + " positional arguments, got " +
                        std::to_string(c.positional.size()));
  for (std::size_t i = 0; i < spec.positional.size(); ++i) {
    const Param& p = spec.positional[i];
    Arg a = resolve(env, p, c.positional[i], c.name);
    pl.inputs[p.name] = object_text(env, a, p);
    pl.args.v.emplace(p.name, std::move(a));
  }
  for (const auto& [key, val] : c.keywords) {
    auto pit = std::find_if(spec.keywords.begin(), spec.keywords.end(), [&](const Param& p) { return p.name == key; });
    if (pit == spec.keywords.end()) semantic(val.pos, "unknown argument '" + key + "' for " + c.name);
    if (pl.args.has(key)) semantic(val.pos, "argument '" + key + "' given twice");
    Arg a = resolve(env, *pit, val, c.name);
    pl.inputs[key] = a.text;
    pl.args.v.emplace(key, std::move(a));
  }
  for (const auto& p : spec.keywords)
    if (p.required && !pl.args.has(p.name)) semantic(c.pos, c.name + " requires " + p.name + "=");
  return pl;
}

struct Analysis {
  Env env;
  std::vector<Planned> plan;
};

Analysis analyze(const script::SessionScript& s, const RunOptions& opt) {
  Analysis an;
  Env& env = an.env;
  for (const auto& st : s.statements) {
    if (const auto* r = std::get_if<script::RingDecl>(&st)) {
      if (env.R) semantic(r->pos, "a script declares exactly one ring");
      env.R = build_ring(*r, opt, env.ring_text);
      continue;
    }
    Position pos = std::visit([](const auto& x) { return x.pos; }, st);
    if (!env.R) semantic(pos, "no ring declared before this statement");
    if (const auto* d = std::get_if<script::IdealDecl>(&st)) {
      Object o;
      o.kind = Object::Kind::Ideal;
      if (d->maximal) {
        o.ideal = Ideal::maximal(env.R);
        o.text = "m";
      } else if (d->ref) {
        const Object& src = lookup(env, *d->ref, d->pos);
        if (src.kind == Object::Kind::Seq)
          o.ideal = Ideal(env.R, src.seq);
        else if (src.kind == Object::Kind::Ideal)
          o.ideal = src.ideal;
        else
          semantic(d->pos, "'" + *d->ref + "' is a " + kind_name(src.kind) + ", not a sequence or ideal");
        o.text = src.text;
      } else {
        o.ideal = Ideal(env.R, evaluate_all(env, d->gens));
        o.text = list_text(d->gens);
      }
      declare(env, d->name, d->pos, std::move(o));
    } else if (const auto* q = std::get_if<script::SeqDecl>(&st)) {
      Object o;
      o.kind = Object::Kind::Seq;
      o.seq = evaluate_all(env, q->elems);
      o.text = list_text(q->elems);
      declare(env, q->name, q->pos, std::move(o));
    } else if (const auto* od = std::get_if<script::OrderDecl>(&st)) {
      Object o;
      o.kind = Object::Kind::Order;
      o.order = build_order(env, od->spec);
      o.text = script::pretty_print(od->spec);
      declare(env, od->name, od->pos, std::move(o));
    } else if (const auto* fd = std::get_if<script::FiltrationDecl>(&st)) {
      Object o;
      o.kind = Object::Kind::Filtration;
      int cap = Filtration::kDefaultCap;
      if (fd->cap) {
        if (*fd->cap < 1 || *fd->cap > 500) semantic(fd->pos, "filtration cap must lie in 1..500");
        cap = static_cast<int>(*fd->cap);
      }
      try {
        if (fd->kind == "adic") {
          Ideal J = Ideal::maximal(env.R);
          std::string jt = "m";
          if (fd->ideal != "m") {
            const Object& src = lookup(env, fd->ideal, fd->pos);
            if (src.kind == Object::Kind::Ideal)
              J = src.ideal;
            else if (src.kind == Object::Kind::Seq)
              J = Ideal(env.R, src.seq);
            else
              semantic(fd->pos, "adic filtration needs an ideal, '" + fd->ideal + "' is a " + kind_name(src.kind));
            jt = src.text;
          }
          o.filtration = Filtration::adic(J, cap);
          o.text = "adic(" + jt + ")";
        } else if (fd->kind == "order") {
          o.filtration = Filtration::from_order(env.R, build_order(env, fd->order), cap);
          o.text = "order(" + script::pretty_print(fd->order) + ")";
        } else if (fd->kind == "weighted") {
          std::vector<int> w;
          for (long x : fd->weights) {
            if (x < 1 || x > kMaxWeight)
              semantic(fd->pos, "filtration weights must lie in 1.." + std::to_string(kMaxWeight));
            w.push_back(static_cast<int>(x));
          }
          o.filtration = Filtration::weighted(env.R, w, cap);
          o.text = o.filtration.name();
        } else {
          std::vector<std::vector<Polynomial>> levels;
          o.text = "table(";
          for (std::size_t i = 0; i < fd->levels.size(); ++i) {
            levels.push_back(evaluate_all(env, fd->levels[i]));
            o.text += (i ? ", " : "") + list_text(fd->levels[i]);
          }
          o.text += ")";
          o.filtration = Filtration::table(env.R, std::move(levels), cap);
        }
      } catch (const PreconditionError& e) {
        semantic(fd->pos, e.what());
      }
      declare(env, fd->name, fd->pos, std::move(o));
    } else if (const auto* c = std::get_if<script::Command>(&st)) {
      an.plan.push_back(plan(env, *c));
    }
  }
  if (!env.R) semantic(Position{}, "no ring declared");
  return an;
}

// ---------------------------------------------------------------------------
// Rendering

json diagnostic_json(const Diagnostic& d) {
  return {{"kind", script::to_string(d.kind)},
          {"line", d.pos.line},
          {"column", d.pos.column},
          {"message", d.message},
          {"expected", d.expected}};
}

void text_value(const json& v, const std::string& indent, std::string& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (it->is_object() || (it->is_array() && !it->empty() && (*it)[0].is_object())) {
        out += indent + it.key() + ":\n";
        text_value(*it, indent + "  ", out);
      } else {
        out += indent + it.key() + " = " + it->dump() + "\n";
      }
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += indent + "- [" + std::to_string(i) + "]\n";
      text_value(v[i], indent + "  ", out);
    }
  } else {
    out += indent + v.dump() + "\n";
  }
}

std::string render_text(const json& doc) {
  std::string out = "normalcone " + doc["tool"]["version"].get<std::string>() + "  schema " +
                    doc["schema"].get<std::string>() + "  script " + doc["script_hash"].get<std::string>() + "\n";
  if (doc.contains("diagnostic")) {
    const auto& d = doc["diagnostic"];
    Diagnostic diag{DiagnosticKind::Parse,
                    Position{d["line"].get<int>(), d["column"].get<int>()},
                    d["message"].get<std::string>(),
                    d["expected"].get<std::vector<std::string>>()};
    const std::string kind = d["kind"].get<std::string>();
    diag.kind = kind == "lex" ? DiagnosticKind::Lex : kind == "semantic" ? DiagnosticKind::Semantic : DiagnosticKind::Parse;
    out += "error: " + diag.to_string() + "\n";
  }
  if (doc.contains("ring")) out += "ring " + doc["ring"]["text"].get<std::string>() + "\n";
  for (const auto& c : doc["commands"]) {
    out += "\n[" + std::to_string(c["index"].get<int>()) + "] line " + std::to_string(c["line"].get<int>()) + ": " +
           c["command"].get<std::string>() + "  => " + c["status"].get<std::string>() + "\n";
    if (c.contains("error"))
      out += "  error (" + c["error"]["kind"].get<std::string>() + "): " + c["error"]["message"].get<std::string>() +
             "\n";
    if (c.contains("result")) text_value(c["result"], "  ", out);
    for (const auto& k : c["checks"])
      out += "  check " + k["name"].get<std::string>() + ": expected " + k["expected"].dump() + ", actual " +
             k["actual"].dump() + " -> " + (k["pass"].get<bool>() ? "pass" : "FAIL") + "\n";
    for (const auto& w : c["warnings"]) out += "  warning: " + w.get<std::string>() + "\n";
  }
  const auto& s = doc["summary"];
  out += "\nsummary: " + std::to_string(s["commands"].get<int>()) + " commands, " +
         std::to_string(s["ok"].get<int>()) + " ok, " + std::to_string(s["check_failed"].get<int>()) +
         " check-failed, " + std::to_string(s["errors"].get<int>()) + " errors; exit " +
         std::to_string(s["exit_code"].get<int>()) + "\n";
  return out;
}

}  // namespace

const char* version() {
#ifdef NORMALCONE_VERSION
  return NORMALCONE_VERSION;
#else
  return "unknown";
#endif
}

std::vector<Polynomial> parse_polynomials(const Ring& R, std::string_view text) {
  std::string src = "ring R = Q[";
  for (std::size_t i = 0; i < R->nvars(); ++i) src += (i ? "," : "") + R->names()[i];
  src += "]; seq s = (" + std::string(text) + ");";
  const auto parsed = script::parse(src);
  Env env;
  env.R = R;
  return evaluate_all(env, std::get<script::SeqDecl>(parsed.statements.at(1)).elems);
}

RunResult run_script(std::string_view text, const RunOptions& options) {
  RunResult rr;
  json doc;
  doc["schema"] = kReportSchema;
  doc["tool"] = {{"name", "normalcone"}, {"version", version()}};
  doc["script_hash"] = "fnv1a64:" + script::fnv1a64(text);
  doc["seed"] = options.seed ? json(*options.seed) : json(nullptr);
  doc["trials"] = options.trials ? json(*options.trials) : json(nullptr);
  doc["commands"] = json::array();
  doc["warnings"] = json::array();

  bool resource = false, failed = false;
  try {
    const auto parsed = script::parse(text);
    const auto an = analyze(parsed, options);
    doc["ring"] = {{"text", an.env.ring_text},
                   {"field", an.env.R->field().name()},
                   {"trunc_cap", an.env.R->cap()},
                   {"relations", polys(an.env.R, an.env.R->relations())}};
    int index = 0;
    for (const auto& pl : an.plan) {
      json entry;
      entry["index"] = ++index;
      entry["line"] = pl.cmd->pos.line;
      entry["command"] = pl.text;
      entry["operation"] = pl.cmd->name;
      entry["inputs"] = pl.inputs;
      Entry e;
      Context ctx{an.env, kDefaultSeed, kDefaultTrials};
      if (pl.args.has("seed")) ctx.seed = static_cast<std::uint64_t>(*pl.args["seed"].integer);
      if (pl.args.has("trials")) ctx.trials = static_cast<std::size_t>(*pl.args["trials"].integer);
      if (options.seed) ctx.seed = *options.seed;
      if (options.trials) ctx.trials = *options.trials;
      std::string status = "ok";
      auto error = [&](const char* kind, const std::string& msg) {
        entry["error"] = {{"kind", kind}, {"message", msg}};
        status = "error";
      };
      try {
        pl.spec->run(ctx, pl.args, e);
        if (!e.passed()) status = "check-failed";
      } catch (const TruncationCapExceeded& ex) {
        error("truncation", ex.what());
        resource = true;
      } catch (const ResourceExceeded& ex) {
        error("resource", ex.what());
        resource = true;
      } catch (const std::overflow_error& ex) {
        error("resource", ex.what());
        resource = true;
      } catch (const std::length_error& ex) {
        error("resource", ex.what());
        resource = true;
      } catch (const PreconditionError& ex) {
        error("precondition", ex.what());
      } catch (const InternalInconsistency& ex) {
        error("internal", ex.what());
      } catch (const std::exception& ex) {
        error("internal", ex.what());
      }
      entry["result"] = e.result;
      entry["checks"] = e.checks;
      entry["warnings"] = e.warnings;
      entry["status"] = status;
      for (const auto& w : e.warnings) doc["warnings"].push_back("[" + std::to_string(index) + "] " + w);
      ++rr.commands;
      if (status == "ok") ++rr.ok;
      if (status == "check-failed") ++rr.check_failed;
      if (status == "error") ++rr.errors;
      if (status != "ok") failed = true;
      doc["commands"].push_back(std::move(entry));
      if (options.fail_fast && status != "ok") break;
    }
    rr.exit_code = resource ? ExitCode::ResourceError : failed ? ExitCode::CheckFailed : ExitCode::Ok;
  } catch (const ScriptError& ex) {
    doc["diagnostic"] = diagnostic_json(ex.diagnostic());
    rr.exit_code = ExitCode::ScriptError;
  } catch (const TruncationCapExceeded& ex) {
    doc["diagnostic"] = {{"kind", "semantic"}, {"line", 1}, {"column", 1}, {"message", ex.what()}, {"expected", json::array()}};
    rr.exit_code = ExitCode::ResourceError;
  } catch (const std::exception& ex) {
    doc["diagnostic"] = {{"kind", "semantic"}, {"line", 1}, {"column", 1}, {"message", ex.what()}, {"expected", json::array()}};
    rr.exit_code = ExitCode::ScriptError;
  }
  doc["summary"] = {{"commands", rr.commands},
                    {"ok", rr.ok},
                    {"check_failed", rr.check_failed},
                    {"errors", rr.errors},
                    {"exit_code", static_cast<int>(rr.exit_code)}};
  rr.report = options.format == ReportFormat::Json ? doc.dump(2) + "\n" : render_text(doc);
  return rr;
}

}  // namespace normalcone
