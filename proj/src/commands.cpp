// Copyright 2026 The sato2d Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "catalog.hpp"
#include "errors.hpp"
#include "localfield.hpp"
#include "parser.hpp"
#include "ratexp.hpp"
#include "schur.hpp"

namespace sato2d {
namespace {

using nlohmann::json;

struct Ctx {
  const Session &session;
  const Command &cmd;
  Report &rep;

  const Trunc &t() const { return session.trunc; }
  EOp op(const std::string &s) const { return parse_op(s, t(), session.field); }
  ZSeries sym(const std::string &s) const { return parse_symbol(s, session.field); }

  std::optional<std::string> opt(const std::string &k) const {
    auto it = cmd.opts.find(k);
    if (it == cmd.opts.end() || it->second.empty())
      return std::nullopt;
    return it->second.back();
  }
  std::vector<std::string> list(const std::string &k) const {
    auto it = cmd.opts.find(k);
    return it == cmd.opts.end() ? std::vector<std::string>{} : it->second;
  }
  std::optional<int> opt_int(const std::string &k) const {
    auto v = opt(k);
    if (!v)
      return std::nullopt;
    try {
      std::size_t used = 0;
      int n = std::stoi(*v, &used);
      if (used == v->size())
        return n;
    } catch (const std::exception &) {
    }
    throw UsageError("--" + k + " expects an integer, got '" + *v + "'");
  }
  void arity(std::size_t lo, std::size_t hi) const {
    std::size_t n = cmd.args.size();
    if (n < lo || n > hi)
      throw UsageError(cmd.name + " expects " +
                       (lo == hi ? std::to_string(lo)
                                 : std::to_string(lo) + (hi == SIZE_MAX ? "+" : "-" + std::to_string(hi))) +
                       " argument(s), got " + std::to_string(n));
  }
  std::vector<ZSeries> syms(const std::vector<std::string> &v) const {
    std::vector<ZSeries> out;
    for (const auto &s : v)
      out.push_back(sym(s));
    return out;
  }
  std::vector<EOp> ops(const std::vector<std::string> &v) const {
    std::vector<EOp> out;
    for (const auto &s : v)
      out.push_back(op(s));
    return out;
  }
};

std::string ord_text(const BiOrd &o) {
  return "(" + std::to_string(o.k) + ", " + std::to_string(o.l) + ")";
}

std::string key_text(const OpKey &k) {
  return "d1^" + std::to_string(k.i) + "*d2^" + std::to_string(k.s);
}

void add_list(Report &rep, const std::string &prefix, const std::vector<EOp> &v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    rep.add(prefix + std::to_string(k), v[k]);
}

void add_list(Report &rep, const std::string &prefix, const std::vector<ZSeries> &v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    rep.add(prefix + std::to_string(k), v[k]);
}

UPoly upoly_from(const ZSeries &z) {
  UPoly p;
  for (const auto &[k, c] : z.terms()) {
    if (k.s != 0 || k.i < 0)
      throw DomainError("expected a polynomial in d1");
    p += UPoly::monomial(k.i, c);
  }
  return p;
}

BiPoly bipoly(const Ctx &c, const std::string &s) { return BiPoly::from_zseries(c.sym(s)); }

void add_ring(Report &rep, const RingPresentation &ring) {
  add_list(rep, "B", ring.gens);
  if (ring.normalized_pair)
    rep.add_text("normalized_pair",
                 "B" + std::to_string(ring.normalized_pair->first) + ", B" +
                     std::to_string(ring.normalized_pair->second),
                 json::array({ring.normalized_pair->first, ring.normalized_pair->second}));
  std::string notes;
  for (const auto &n : ring.notes)
    notes += (notes.empty() ? "" : "; ") + n;
  rep.verdict("completed-operator", ring.completed, notes, rep.session.window());
}

void add_pair(Report &rep, const SchurPair &pair) {
  add_list(rep, "A", pair.a_gens);
  add_list(rep, "W", pair.w_gens);
  rep.add_text("r", std::to_string(pair.r), pair.r);
}

// --- commands -------------------------------------------------------------

void cmd_mul(Ctx &c) {
  c.arity(1, SIZE_MAX);
  EOp p = c.op(c.cmd.args[0]);
  for (std::size_t k = 1; k < c.cmd.args.size(); ++k)
    p = compose(p, c.op(c.cmd.args[k]));
  c.rep.add("product", p);
}

void cmd_comm(Ctx &c) {
  c.arity(2, 2);
  c.rep.add("commutator", commutator(c.op(c.cmd.args[0]), c.op(c.cmd.args[1])));
}

void cmd_ord(Ctx &c) {
  c.arity(1, 1);
  EOp p = c.op(c.cmd.args[0]);
  try {
    BiOrd o = ord_gamma(p);
    c.rep.add_text("ord_gamma", ord_text(o), {{"k", o.k}, {"l", o.l}});
    c.rep.verdict("monic", is_monic(p));
  } catch (const IndeterminateError &e) {
    c.rep.indeterminate("ord_gamma", e.what(), c.session.window());
  }
}

void cmd_a1(Ctx &c) {
  c.arity(1, 1);
  EOp p = c.op(c.cmd.args[0]);
  int m = 0;
  if (auto mm = c.opt_int("m")) {
    m = *mm;
  } else {
    BiOrd o = ord_gamma(p);
    m = o.k + o.l;
  }
  A1Result r = check_a1(p, m);
  std::string name = "A1(" + std::to_string(m) + ")";
  c.rep.bounds["m"] = m;
  if (r.kind == A1Result::Kind::Indeterminate)
    c.rep.indeterminate(name, r.reason, c.session.window());
  else
    c.rep.verdict(name, r.kind == A1Result::Kind::Holds,
                  r.kind == A1Result::Kind::Holds ? r.reason
                                                  : "fails at " + key_text(r.at) + ": " + r.reason,
                  c.session.window());
}

void cmd_sato(Ctx &c) {
  c.arity(1, SIZE_MAX);
  int bound = c.session.degree_bound();
  std::vector<ZSeries> basis = admissible_basis(c.syms(c.cmd.args), c.syms(c.list("a")), bound);
  EOp s = sato_solve(basis, c.t());
  c.rep.bounds["degree"] = bound;
  add_list(c.rep, "w", basis);
  c.rep.add("S", s);
  std::vector<ZSeries> dressed = admissible_basis(dressed_basis(s, bound), {}, bound);
  bool ok = dressed.size() == basis.size();
  std::string why = ok ? "dressed basis against the admissible basis" : "basis sizes differ";
  int s_lo = c.t().s_min;
  for (std::size_t k = 0; ok && k < basis.size(); ++k) {
    int lo = std::max({c.t().s_min, dressed[k].floor(), basis[k].floor()});
    s_lo = std::max(s_lo, lo);
    if (!dressed[k].equal_from(basis[k], lo)) {
      ok = false;
      why = "w" + std::to_string(k) + " differs from its image under S";
    }
  }
  c.rep.verdict("W0*S = W", ok, why,
                "x-degree < " + std::to_string(c.t().nx) + ", d2 >= " + std::to_string(s_lo));
}

void cmd_ring_from_pair(Ctx &c) {
  c.arity(0, 0);
  SchurPair pair;
  pair.a_gens = c.syms(c.list("a"));
  pair.w_gens = c.syms(c.list("w"));
  pair.r = c.opt_int("r").value_or(1);
  pair.window = c.t();
  if (pair.a_gens.empty() || pair.w_gens.empty())
    throw UsageError("ring-from-pair needs --a and --w");
  add_ring(c.rep, ring_from_pair(pair));
}

RingPresentation ring_of(const Ctx &c) {
  RingPresentation ring;
  ring.gens = c.ops(c.cmd.args);
  ring.trunc = c.t();
  for (std::size_t i = 0; i < ring.gens.size() && !ring.normalized_pair; ++i)
    for (std::size_t j = 0; j < ring.gens.size(); ++j)
      if (i != j && is_normalized_pair(ring.gens[i], ring.gens[j])) {
        ring.normalized_pair = {static_cast<int>(i), static_cast<int>(j)};
        break;
      }
  return ring;
}

void cmd_pair_from_ring(Ctx &c) {
  c.arity(2, SIZE_MAX);
  RingPresentation ring = ring_of(c);
  if (!ring.normalized_pair)
    throw DomainError("no normalized pair among the generators; run normalize first");
  SchurPair pair = pair_from_ring(ring);
  add_pair(c.rep, pair);
  StabilizerReport st = verify_stabilizer(pair);
  c.rep.bounds["stabilizer"] = st.bound;
  std::string why = std::to_string(st.checked) + " products checked";
  if (!st.residuals.empty()) {
    const auto &r = st.residuals.front();
    why += "; first residual W" + std::to_string(r.w_index) + "*A" + std::to_string(r.a_index) +
           " at " + key_text(r.at) + ": " + r.residual;
  }
  c.rep.verdict("W*A in W", st.ok, why, c.session.window());
}

void cmd_normalize(Ctx &c) {
  c.arity(2, 2);
  Normalized n = normalize_pair(c.op(c.cmd.args[0]), c.op(c.cmd.args[1]));
  c.rep.add("conjugator", n.conjugator);
  c.rep.add("P", n.p);
  c.rep.add("Q", n.q);
  c.rep.verdict("normalized", is_normalized_pair(n.p, n.q), {}, c.session.window());
}

// W and A from positional symbols or from a catalog example.
SchurPair pair_input(const Ctx &c) {
  if (auto ex = c.opt("example")) {
    UPoly p = upoly_from(c.sym(c.opt("p").value_or("1")));
    if (*ex == "ex_cuspidal")
      return build_ex_cuspidal(p, c.t()).pair;
    if (*ex == "ex_nodal")
      return build_ex_nodal(p, c.t()).pair;
    throw UsageError("--example expects ex_cuspidal or ex_nodal");
  }
  if (c.cmd.args.empty())
    throw UsageError(c.cmd.name + " needs generators or --example");
  SchurPair pair;
  pair.w_gens = c.syms(c.cmd.args);
  pair.a_gens = c.syms(c.list("a"));
  pair.r = c.opt_int("r").value_or(1);
  pair.window = c.t();
  return pair;
}

void cmd_hilbert(Ctx &c) {
  SchurPair pair = pair_input(c);
  int n_max = c.opt_int("nmax").value_or(12);
  int step = c.opt_int("step").value_or(1);
  int bound = c.session.bound ? *c.session.bound : -1;
  // Catalog input: the filtration of the ring A itself.
  SpanTable tab = c.opt("example") ? filtration_dims(pair.a_gens, {}, n_max, 1, bound)
                                   : filtration_dims(pair.w_gens, pair.a_gens, n_max, pair.r, bound);
  c.rep.bounds["n_max"] = n_max;
  c.rep.bounds["products"] = tab.bound;
  std::string dims;
  json jd = json::array();
  for (std::size_t n = 0; n < tab.dims.size(); ++n) {
    dims += (n ? "\n" : "") + std::to_string(n) + ": " + std::to_string(tab.dims[n]);
    jd.push_back(tab.dims[n]);
  }
  c.rep.add_text("dims", dims, jd);
  try {
    HilbertFit fit = hilbert_fit(tab, step);
    c.rep.add_text("c2", fit.c2.get_str(), fit.c2.get_str());
    c.rep.add_text("fit_range", std::to_string(fit.from) + ".." + std::to_string(fit.to),
                   json::array({fit.from, fit.to}));
    c.rep.verdict("c2 integral", fit.integral, {},
                  "n <= " + std::to_string(n_max) + ", products of degree <= " +
                      std::to_string(tab.bound));
  } catch (const DomainError &e) {
    c.rep.indeterminate("c2", e.what(), "n <= " + std::to_string(n_max));
  }
}

void cmd_invariants(Ctx &c) {
  SchurPair pair = pair_input(c);
  std::vector<ZSeries> gens = pair.w_gens;
  if (c.opt("example"))
    gens = pair.a_gens;
  int bound = c.session.bound ? *c.session.bound : -1;
  Invariants inv = invariants_NA(gens, bound);
  c.rep.bounds["products"] = inv.bound;
  c.rep.add_text("N", std::to_string(inv.N), inv.N);
  c.rep.add_text("N_tilde", std::to_string(inv.N_tilde), inv.N_tilde);
  c.rep.add_text("rank", inv.rank ? std::to_string(*inv.rank) : "undefined",
                 inv.rank ? json(*inv.rank) : json(nullptr));
  c.rep.verdict("strongly admissible", inv.strongly_admissible, {},
                "products of degree <= " + std::to_string(inv.bound));
}

void cmd_darboux(Ctx &c) {
  c.arity(1, SIZE_MAX);
  auto s = c.opt("s");
  if (!s)
    throw UsageError("darboux needs --s");
  int n = c.opt_int("n").value_or(1);
  RingPresentation ring = ring_of(c);
  DarbouxReport d = darboux_transform(ring, c.op(*s), n);
  c.rep.bounds["n"] = n;
  c.rep.add("F", d.F);
  for (std::size_t k = 0; k < d.conjugates.size(); ++k)
    c.rep.add_text("F^-1 B" + std::to_string(k) + " F", d.conjugates[k]);
  c.rep.verdict("PDO", d.pdo.pdo, d.pdo.reason, c.session.window());
  for (std::size_t k = 0; k < d.constant.size(); ++k)
    c.rep.verdict("constant coefficients B" + std::to_string(k), d.constant[k], {},
                  c.session.window());
  c.rep.verdict("completed-operator", d.completed_operator, {}, c.session.window());
}

std::string membership_name(Membership::Kind k) {
  switch (k) {
  case Membership::Kind::Inside:
    return "inside";
  case Membership::Kind::Outside:
    return "outside";
  default:
    return "indeterminate";
  }
}

void cmd_expand(Ctx &c) {
  c.arity(2, 2);
  RatSym r = RatSym::make(bipoly(c, c.cmd.args[0]), bipoly(c, c.cmd.args[1]));
  Expansion e = expand(r, c.t());
  c.rep.add("expansion", e.series);
  c.rep.bounds["d1_cut"] = e.d1_cut;
  c.rep.verdict("coprime", r.coprimality_checked);
  c.rep.verdict("terminated", e.terminated);
  Membership m = membership_kd1(e);
  std::string why = m.reason;
  if (m.witness)
    why += (why.empty() ? "" : "; ") + std::string("witness ") + key_text(*m.witness);
  if (m.kind == Membership::Kind::Indeterminate)
    c.rep.indeterminate("in k[d1]((d2^-1))", why, c.session.window());
  else
    c.rep.verdict("in k[d1]((d2^-1))", m.kind == Membership::Kind::Inside, why,
                  c.session.window());
}

json lemma_json(const LemmaReport &r) {
  return {{"P", r.P},
          {"Q", r.Q},
          {"m", r.m},
          {"membership", membership_name(r.membership.kind)},
          {"a1", r.a1 == A1Result::Kind::Holds ? "holds" : "fails"},
          {"ord_gamma_q", {r.ord_q.k, r.ord_q.l}},
          {"ord_q", r.total_ord_q},
          {"hypothesis", r.hypothesis},
          {"conclusion", r.conclusion}};
}

void cmd_lemma36(Ctx &c) {
  if (auto n = c.opt_int("samples")) {
    c.arity(0, 0);
    int deg = c.opt_int("deg").value_or(4);
    SweepResult s = lemma_sweep(c.session.seed, *n, deg, c.t());
    c.rep.bounds["samples"] = *n;
    c.rep.bounds["deg"] = deg;
    c.rep.add_text("samples", std::to_string(s.samples), s.samples);
    c.rep.add_text("hypothesis_true", std::to_string(s.hypothesis_true), s.hypothesis_true);
    c.rep.add_text("counterexamples", std::to_string(s.violations), s.violations);
    json cases = json::array();
    for (const auto &r : s.reports)
      if (!r.consistent())
        c.rep.add_text("counterexample", r.line(), lemma_json(r));
    for (const auto &r : s.reports)
      cases.push_back(lemma_json(r));
    c.rep.add_text("cases", std::to_string(cases.size()) + " cases", cases);
    c.rep.verdict("no counterexample", s.violations == 0, {}, c.session.window());
    return;
  }
  c.arity(2, 2);
  RatSym r = RatSym::make(bipoly(c, c.cmd.args[0]), bipoly(c, c.cmd.args[1]));
  LemmaReport lr = lemma_check(r, c.t(), c.opt_int("m"));
  c.rep.add_text("case", lr.line(), lemma_json(lr));
  c.rep.verdict("hypothesis", lr.hypothesis, {}, c.session.window());
  c.rep.verdict("conclusion", lr.conclusion, {}, c.session.window());
  c.rep.verdict("consistent", lr.consistent(), {}, c.session.window());
}

void cmd_example(Ctx &c) {
  c.arity(1, 1);
  const std::string &id = c.cmd.args[0];
  if (id == "counterexample") {
    CounterexampleInfo info = counterexample_info(c.list("g"));
    c.rep.add_text("polynomial", info.polynomial);
    c.rep.add_text("statement", info.statement);
    c.rep.add_text("flag", info.flag);
    return;
  }
  UPoly p = upoly_from(c.sym(c.opt("p").value_or("1")));
  CatalogExample ex;
  if (id == "ex_cuspidal")
    ex = build_ex_cuspidal(p, c.t());
  else if (id == "ex_nodal")
    ex = build_ex_nodal(p, c.t());
  else
    throw UsageError("unknown example '" + id + "' (ex_cuspidal, ex_nodal, counterexample)");
  c.rep.add_text("P", ex.p);
  c.rep.add("S", ex.S);
  add_ring(c.rep, ex.ring);
  add_pair(c.rep, ex.pair);
  for (const auto &b : ex.blocks)
    if (b.name != "S" && b.name.rfind("B", 0) != 0)
      c.rep.add_text(b.name, b.text);
  for (const auto &k : ex.checks) {
    std::string why = k.detail;
    if (k.informational)
      why = "informational" + std::string(why.empty() ? "" : "; ") + why;
    c.rep.verdict(k.name, k.ok, why,
                  "x-degree < " + std::to_string(k.certified) + ", d2 >= " +
                      std::to_string(k.s_lo));
  }
}

using Handler = std::function<void(Ctx &)>;

const std::map<std::string, std::pair<Handler, std::set<std::string>>> &table() {
  static const std::map<std::string, std::pair<Handler, std::set<std::string>>> t = {
      {"mul", {cmd_mul, {}}},
      {"comm", {cmd_comm, {}}},
      {"ord", {cmd_ord, {}}},
      {"a1", {cmd_a1, {"m"}}},
      {"sato", {cmd_sato, {"a"}}},
      {"ring-from-pair", {cmd_ring_from_pair, {"a", "w", "r"}}},
      {"pair-from-ring", {cmd_pair_from_ring, {}}},
      {"normalize", {cmd_normalize, {}}},
      {"hilbert", {cmd_hilbert, {"a", "r", "nmax", "step", "example", "p"}}},
      {"invariants", {cmd_invariants, {"example", "p"}}},
      {"darboux", {cmd_darboux, {"s", "n"}}},
      {"expand", {cmd_expand, {}}},
      {"lemma36", {cmd_lemma36, {"m", "samples", "deg"}}},
      {"example", {cmd_example, {"p", "g"}}},
  };
  return t;
}

} // namespace

const std::vector<std::string> &command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto &kv : table())
      v.push_back(kv.first);
    return v;
  }();
  return names;
}

Report run_command(const Session &session, const Command &cmd) {
  auto it = table().find(cmd.name);
  if (it == table().end())
    throw UsageError("unknown subcommand '" + cmd.name + "'");
  for (const auto &kv : cmd.opts)
    if (!it->second.second.count(kv.first))
      throw UsageError("unknown option --" + kv.first + " for " + cmd.name);
  session.trunc.validate();
  Report rep;
  rep.command = cmd.name;
  rep.args = cmd.args;
  rep.session = session;
  Ctx c{session, cmd, rep};
  it->second.first(c);
  return rep;
}

} // namespace sato2d
