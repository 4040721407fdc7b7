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

#include "schur.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "errors.hpp"

namespace sato2d {

namespace {

std::string key_str(const OpKey &k) {
  return "(" + std::to_string(k.i) + "," + std::to_string(k.s) + ")";
}

// Head degree i + s of a symbol.
int head_degree(const ZSeries &z) {
  OpKey k = lowest_term(z);
  return k.i + k.s;
}

void symbol_monomials(const std::vector<std::pair<ZSeries, int>> &fs, std::size_t from,
                      const ZSeries &cur, int deg, int bound, std::vector<ZSeries> &out) {
  out.push_back(cur);
  for (std::size_t k = from; k < fs.size(); ++k) {
    const int nd = deg + fs[k].second;
    if (nd > bound)
      continue;
    std::size_t next = fs[k].second > 0 ? k : k + 1;
    symbol_monomials(fs, next, z_mul(cur, fs[k].first), nd, bound, out);
  }
}

std::vector<std::pair<ZSeries, int>> with_degrees(const std::vector<ZSeries> &gens) {
  std::vector<std::pair<ZSeries, int>> out;
  for (const auto &g : gens)
    if (!g.is_zero())
      out.emplace_back(g, head_degree(g));
  return out;
}

} // namespace

std::optional<OpKey> SymbolEchelon::insert(ZSeries v) {
  v = reduce(std::move(v));
  if (v.is_zero())
    return std::nullopt;
  auto [key, lc] = *v.terms().begin();
  rows_.emplace(key, v.scaled(lc.inverse()));
  return key;
}

ZSeries SymbolEchelon::reduce(ZSeries v) const {
  while (!v.is_zero()) {
    auto [lead, lc] = *v.terms().begin();
    auto row = rows_.find(lead);
    if (row == rows_.end())
      break;
    v -= row->second.scaled(lc);
  }
  return v;
}

std::vector<ZSeries> admissible_basis(const std::vector<ZSeries> &w_gens,
                                      const std::vector<ZSeries> &a_gens, int degree_bound) {
  if (degree_bound < 0)
    throw ConfigError("degree bound must be nonnegative");
  SymbolEchelon ech;
  auto af = with_degrees(a_gens);
  for (const auto &[w, deg] : with_degrees(w_gens)) {
    if (deg > degree_bound)
      continue;
    std::vector<ZSeries> mons;
    symbol_monomials(af, 0, w, deg, degree_bound, mons);
    for (auto &m : mons)
      ech.insert(std::move(m));
  }
  for (const auto &kv : ech.rows())
    if (kv.first.s < 0 || kv.first.i < 0)
      throw ConstructionError("not a 1-space: W has an element led by " + key_str(kv.first));
  for (int n = 0; n <= degree_bound; ++n)
    for (int i = 0; i <= n; ++i)
      if (!ech.rows().count(OpKey{i, n - i}))
        throw ConstructionError("not a 1-space: no element of W is led by z1^-" +
                                std::to_string(i) + " z2^-" + std::to_string(n - i) +
                                " (gap at " + key_str(OpKey{i, n - i}) + ")");

  // Clear every non-head term of nonnegative d2-degree, lowest rows first.
  std::map<OpKey, ZSeries, OpKeyOrder> done;
  std::function<const ZSeries &(const OpKey &)> reduced = [&](const OpKey &key) -> const ZSeries & {
    auto it = done.find(key);
    if (it != done.end())
      return it->second;
    auto row = ech.rows().find(key);
    if (row == ech.rows().end())
      throw ConstructionError("tail term " + key_str(key) +
                              " has no basis element inside the degree bound");
    ZSeries v = row->second;
    for (;;) {
      std::optional<OpKey> hit;
      for (const auto &[k, c] : v.terms()) {
        if (k.s < 0)
          break;
        if (!(k == key)) {
          hit = k;
          break;
        }
      }
      if (!hit)
        break;
      QuadElem c = v.coeff(hit->i, hit->s);
      v -= reduced(*hit).scaled(c);
    }
    return done.emplace(key, std::move(v)).first->second;
  };

  std::vector<ZSeries> out;
  for (int n = 0; n <= degree_bound; ++n)
    for (int i = 0; i <= n; ++i)
      out.push_back(reduced(OpKey{i, n - i}));
  return out;
}

namespace {

// v minus its projection on the admissible basis along nonnegative d2-degrees.
ZSeries reduce_admissible(ZSeries v, const std::map<OpKey, const ZSeries *, OpKeyOrder> &basis) {
  for (;;) {
    std::optional<std::pair<OpKey, QuadElem>> hit;
    for (const auto &[k, c] : v.terms()) {
      if (k.s < 0)
        break;
      hit = std::make_pair(k, c);
      break;
    }
    if (!hit)
      return v;
    auto it = basis.find(hit->first);
    if (it == basis.end())
      throw ConstructionError("basis lacks the element led by " + key_str(hit->first));
    v -= it->second->scaled(hit->second);
  }
}

} // namespace

EOp sato_solve(const std::vector<ZSeries> &basis, const Trunc &t) {
  t.validate();
  std::map<OpKey, const ZSeries *, OpKeyOrder> by_head;
  for (const auto &w : basis) {
    OpKey h = lowest_term(w);
    if (!w.coeff(h.i, h.s).is_one())
      throw ConstructionError("basis element led by " + key_str(h) + " is not monic");
    for (const auto &[k, c] : w.terms())
      if (k.s >= 0 && !(k == h))
        throw ConstructionError("basis element led by " + key_str(h) +
                                " is not admissible: it has a term at " + key_str(k));
    by_head[h] = &w;
  }
  for (int n = 0; n < t.nx; ++n)
    for (int a = 0; a <= n; ++a)
      if (!by_head.count(OpKey{a, n - a}))
        throw ConstructionError("basis lacks the element led by " + key_str(OpKey{a, n - a}));

  // Depth to which the data are known.
  int depth = -t.s_min;
  for (const auto &[h, w] : by_head)
    if (!w->exact())
      depth = std::min(depth, -w->floor());

  // c[(q, al, be)][a]: Taylor coefficient of x1^al x2^be in the coefficient of
  // d1^a d2^-q. The image of z1^-al z2^-be only sees Taylor indices (al', be')
  // <= (al, be), so increasing total degree gives a triangular system: with the
  // lower part S_lo fixed, act(z, S_lo) + al! be! C(al, be) must lie in W.
  // Level q of the image is reliable while q + be <= depth.
  std::map<std::tuple<int, int, int>, std::map<int, QuadElem>> c;
  auto assemble = [&](int below, bool final_prec) {
    std::map<std::pair<int, int>, std::vector<XSeries::Term>> coeffs;
    for (const auto &[key, row] : c) {
      auto [q, al, be] = key;
      if (al + be >= below)
        continue;
      for (const auto &[a, v] : row)
        coeffs[{a, q}].push_back({al, be, v});
    }
    EOp s = EOp::identity(t);
    for (auto &[aq, terms] : coeffs) {
      int prec = final_prec ? std::min(t.nx, depth - aq.second + 1) : below + 1;
      s.set(aq.first, -aq.second, XSeries::from_terms(std::move(terms), prec));
    }
    return s;
  };

  std::vector<Rat> fact{Rat(1)};
  for (int n = 1; n <= t.nx; ++n)
    fact.push_back(fact.back() * n);
  for (int n = 0; n < t.nx; ++n) {
    EOp lo = assemble(n, false);
    for (int al = 0; al <= n; ++al) {
      const int be = n - al;
      ZSeries r = reduce_admissible(act(ZSeries::monomial(al, be), lo), by_head);
      QuadElem scale(Rat(-1) / (fact[al] * fact[be]));
      for (const auto &[k, v] : r.terms()) {
        if (-k.s + be > depth)
          continue;
        if (k.i < 0)
          throw ConstructionError("inconsistent Sato system: negative d1-degree at " + key_str(k));
        c[{-k.s, al, be}][k.i] = v * scale;
      }
    }
  }

  EOp out = assemble(t.nx, true);
  out.set_floor(-depth);
  if (depth >= -t.s_min)
    out.mark_dropped();
  if (check_a1(out, 0).kind == A1Result::Kind::Fails)
    throw ConstructionError("not realizable: the solved Sato operator violates A1(0)");
  return out;
}

std::vector<ZSeries> dressed_basis(const EOp &s, int bound) {
  std::vector<ZSeries> out;
  for (int n = 0; n <= bound; ++n)
    for (int i = 0; i <= n; ++i)
      out.push_back(act(ZSeries::monomial(i, n - i), s));
  return out;
}

namespace {

// Coefficients of d2-level s as an operator of level 0.
EOp level_of(const EOp &p, int s) {
  EOp r(p.trunc());
  for (const auto &[k, c] : p.terms())
    if (k.s == s)
      r.set(k.i, 0, c);
  return r;
}

// Integral from 0 in var of every coefficient, kept below x-degree nx.
EOp integrate_op(const EOp &p, Var v) {
  EOp r(p.trunc());
  for (const auto &[k, c] : p.terms())
    r.set(k.i, k.s, c.integrate(v).truncated(std::min(prec_add(c.prec(), 1), p.trunc().nx)));
  r.prune();
  return r;
}

EOp shifted(const EOp &p, int ds) {
  EOp r(p.trunc());
  for (const auto &[k, c] : p.terms())
    if (k.s + ds >= p.trunc().s_min)
      r.set(k.i, k.s + ds, c);
  return r;
}

// Solution of [d_v, S] = m S with S = 1 on {x_v = 0}; m has d2-level 0.
EOp picard(const EOp &m, Var v) {
  const Trunc &t = m.trunc();
  EOp s = EOp::identity(t);
  for (int n = 0; n <= t.nx; ++n) {
    EOp next = EOp::identity(t) + integrate_op(compose(m, s), v);
    if (compare(next, s, Quotient{t.nx, 0}).kind == Compare::Kind::Equal && n > 0)
      return next;
    s = std::move(next);
  }
  return s;
}

// Every coefficient carries a certified constant term.
bool certified_level(const EOp &lev) {
  return std::all_of(lev.terms().begin(), lev.terms().end(),
                     [](const auto &kv) { return kv.second.prec() > 0; });
}

// Nonzero x-dependence of a coefficient in var, if certified.
bool depends_on(const XSeries &c, Var v) {
  if (c.prec() <= 1 && !c.exact())
    return false;
  for (const auto &tm : c.terms())
    if ((v == Var::X1 ? tm.i : tm.j) > 0)
      return true;
  return false;
}

} // namespace

Normalized normalize_pair(const EOp &p, const EOp &q) {
  const Trunc &t = p.trunc();
  BiOrd op = ord_gamma(p), oq = ord_gamma(q);
  if (op.k != 0 || oq.k != 1)
    throw DomainError("normalize_pair needs orders (0,k) and (1,l); got (" +
                      std::to_string(op.k) + "," + std::to_string(op.l) + ") and (" +
                      std::to_string(oq.k) + "," + std::to_string(oq.l) + ")");
  if (!is_monic(p) || !is_monic(q))
    throw DomainError("normalize_pair needs monic operators");
  if (op.l < 1)
    throw DomainError("the first operator must have positive d2-order");

  // Remove the sub-leading level of p: S_x2 = -(1/k) A S.
  EOp a = level_of(p, op.l - 1).scaled(QuadElem(Rat(-1, op.l)));
  EOp s = picard(a, Var::X2);
  EOp q1 = conjugate(s, q);

  // Top level of q1 is d1 + R with R free of x2; T_x1 = -R T.
  EOp r = level_of(q1, oq.l) - EOp::monomial(t, 1, 0);
  for (const auto &[k, c] : r.terms())
    if (depends_on(c, Var::X2))
      throw ConstructionError("not normalizable: top coefficient of q depends on x2 at " +
                              key_str(OpKey{k.i, oq.l}) + " (operators do not commute)");
  EOp tt = picard(r.scaled(QuadElem(-1)), Var::X1);

  Normalized out;
  out.conjugator = compose(s, tt);
  out.p = conjugate(out.conjugator, p);
  out.q = conjugate(out.conjugator, q);
  if (!is_normalized_pair(out.p, out.q))
    throw ConstructionError("not normalizable: conjugated pair keeps a sub-leading term");
  return out;
}

bool constant_coefficients(const EOp &p, std::string *why) {
  for (const auto &[k, c] : p.terms()) {
    if (c.prec() <= 0)
      continue; // nothing certified here
    for (const auto &tm : c.terms())
      if (tm.i + tm.j > 0) {
        if (why)
          *why = "coefficient at " + key_str(k) + " is " + c.str();
        return false;
      }
  }
  return true;
}

PdoVerdict pdo_test(const EOp &p) {
  PdoVerdict v;
  v.window_limited = !p.exact_in_d2();
  for (const auto &[k, c] : p.terms()) {
    if (c.is_zero())
      continue;
    if (k.s < 0) {
      v.pdo = false;
      v.reason = "nonzero d2^" + std::to_string(k.s) + " term at " + key_str(k);
      return v;
    }
  }
  // A d1-tail shows up as coefficients that are a single band at the top of
  // their precision: their lowest x-degree touches the horizon.
  for (const auto &[k, c] : p.terms()) {
    if (k.i < 1 || c.is_zero() || c.exact())
      continue;
    OrdM o = ord_m(c);
    if (o.kind != OrdM::Kind::Finite)
      continue;
    bool hidden = o.value >= c.prec() - 1;
    // The band may continue one or two d1-steps further, below what the
    // next coefficients certify.
    for (int d = 1; d <= 2 && !hidden; ++d) {
      XSeries next = p.coeff(k.i + d, k.s);
      if (!next.is_zero())
        break;
      hidden = next.prec() <= o.value + d;
    }
    if (hidden) {
      v.pdo = false;
      v.window_limited = true;
      v.reason = "d1-tail reaches the precision horizon at " + key_str(k);
      return v;
    }
  }
  return v;
}

RingPresentation ring_from_pair(const SchurPair &pair) {
  const Trunc &t = pair.window;
  t.validate();
  auto basis = admissible_basis(pair.w_gens, pair.a_gens, t.nx - 1);
  EOp s = sato_solve(basis, t);
  EOp sinv = invert_unit(s);
  RingPresentation ring;
  ring.trunc = t;
  for (std::size_t n = 0; n < pair.a_gens.size(); ++n) {
    EOp b = compose(compose(s, lift(pair.a_gens[n], t)), sinv);
    PdoVerdict v = pdo_test(b);
    if (!v.pdo) {
      ring.completed = true;
      ring.notes.push_back("generator " + std::to_string(n) + ": " + v.reason);
    }
    ring.gens.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < ring.gens.size() && !ring.normalized_pair; ++i)
    for (std::size_t j = 0; j < ring.gens.size(); ++j) {
      if (i == j)
        continue;
      try {
        if (is_normalized_pair(ring.gens[i], ring.gens[j])) {
          ring.normalized_pair = {static_cast<int>(i), static_cast<int>(j)};
          break;
        }
      } catch (const Error &) {
        // orders not certified: not a candidate
      }
    }
  return ring;
}

Dressing dress_ring(const RingPresentation &ring) {
  if (!ring.normalized_pair)
    throw DomainError("ring has no normalized pair; run normalize_pair first");
  const Trunc &t = ring.trunc;
  const EOp &P = ring.gens.at(ring.normalized_pair->first);
  const EOp &Q = ring.gens.at(ring.normalized_pair->second);
  const int k = ord_gamma(P).l, l = ord_gamma(Q).l;
  const int depth = -t.s_min;

  // S1 with S1^-1 P S1 = d2^k, integration constants zero at x2 = 0.
  EOp s1 = EOp::identity(t);
  EOp dk = EOp::monomial(t, 0, k);
  for (int q = 1; q <= depth; ++q) {
    EOp e = compose(P, s1) - compose(s1, dk);
    EOp lev = level_of(e, k - 1 - q);
    if (!e.known(0, k - 1 - q) || !certified_level(lev)) {
      s1.set_floor(1 - q);
      break;
    }
    EOp sq = integrate_op(lev, Var::X2).scaled(QuadElem(Rat(-1, k)));
    s1 += shifted(sq, -q);
  }
  EOp q1 = conjugate(s1, Q);

  // T with x2-free coefficients making Q constant: [d1, t_q] = Q''_q - E_q.
  EOp tt = EOp::identity(t);
  EOp q2 = EOp::monomial(t, 1, l);
  for (int q = 1; q <= depth; ++q) {
    if (l - q < t.s_min)
      break;
    EOp e = compose(q1, tt) - compose(tt, q2);
    EOp lev = level_of(e, l - q);
    if (!e.known(0, l - q) || !certified_level(lev)) {
      tt.set_floor(1 - q);
      break;
    }
    EOp cst(t);
    for (const auto &[key, c] : lev.terms()) {
      if (depends_on(c, Var::X2))
        throw ConstructionError("dressing obstruction at " + key_str(OpKey{key.i, l - q}) +
                                ": coefficient depends on x2");
      cst.set(key.i, 0, XSeries::from_terms({{0, 0, c.constant_term()}}, kExact));
    }
    EOp tq = integrate_op(cst - lev, Var::X1);
    tt += shifted(tq, -q);
    q2 += shifted(cst, l - q);
  }

  Dressing out;
  out.s = compose(s1, tt);
  out.pair.window = t;
  out.pair.r = 1;
  EOp sinv = invert_unit(out.s);
  for (std::size_t n = 0; n < ring.gens.size(); ++n) {
    EOp a = compose(compose(sinv, ring.gens[n]), out.s);
    std::string why;
    if (!constant_coefficients(a, &why))
      throw ConstructionError("dressing obstruction: generator " + std::to_string(n) +
                              " is not constant after conjugation; " + why);
    out.pair.a_gens.push_back(reduce_mod_x(a));
  }
  out.pair.w_gens = dressed_basis(out.s, t.nx - 1);
  return out;
}

SchurPair pair_from_ring(const RingPresentation &ring) { return dress_ring(ring).pair; }

StabilizerReport verify_stabilizer(const SchurPair &pair) {
  StabilizerReport rep;
  SymbolEchelon ech;
  for (const auto &w : pair.w_gens) {
    if (w.is_zero())
      continue;
    rep.bound = std::max(rep.bound, head_degree(w));
    ech.insert(w);
  }
  for (std::size_t wi = 0; wi < pair.w_gens.size(); ++wi)
    for (std::size_t ai = 0; ai < pair.a_gens.size(); ++ai) {
      const ZSeries &w = pair.w_gens[wi];
      if (w.is_zero())
        continue;
      ZSeries prod = z_mul(w, pair.a_gens[ai]);
      if (prod.is_zero() || head_degree(prod) > rep.bound)
        continue;
      ++rep.checked;
      ZSeries res = ech.reduce(prod);
      if (res.is_zero())
        continue;
      rep.ok = false;
      rep.residuals.push_back({wi, ai, *res.lead(), res.str(true)});
    }
  return rep;
}

DarbouxReport darboux_transform(const RingPresentation &ring, const EOp &s, int n) {
  if (n < 0)
    throw DomainError("Darboux exponent must be nonnegative");
  const Trunc &t = ring.trunc;
  DarbouxReport rep;
  rep.F = compose(s, EOp::monomial(t, 0, n));
  rep.pdo = pdo_test(rep.F);
  rep.completed_operator = !rep.pdo.pdo;
  EOp finv = compose(EOp::monomial(t, 0, -n), invert_unit(s));
  for (const auto &g : ring.gens) {
    EOp c = compose(compose(finv, g), rep.F);
    rep.constant.push_back(constant_coefficients(c));
    rep.conjugates.push_back(c.str());
  }
  return rep;
}

Partial1Report contains_partial1(const RingPresentation &ring, int bound) {
  const Trunc &t = ring.trunc;
  std::vector<std::pair<EOp, int>> fs;
  int maxdeg = 0;
  for (const auto &g : ring.gens) {
    BiOrd o = ord_gamma(g);
    fs.emplace_back(g, o.k + o.l);
    maxdeg = std::max(maxdeg, o.k + o.l);
  }
  Partial1Report rep;
  rep.bound = bound >= 0 ? bound : 3 * maxdeg;

  std::vector<EOp> prods;
  std::function<void(std::size_t, const EOp &, int)> walk = [&](std::size_t from, const EOp &cur,
                                                                int deg) {
    prods.push_back(cur);
    for (std::size_t k = from; k < fs.size(); ++k) {
      int nd = deg + fs[k].second;
      if (nd > rep.bound)
        continue;
      walk(fs[k].second > 0 ? k : k + 1, compose(cur, fs[k].first), nd);
    }
  };
  walk(0, EOp::identity(t), 0);

  // Flatten onto Taylor monomials certified in every product.
  // The differential part (d2-degree >= 0) decides; products without a
  // certified coefficient there carry no information.
  auto nonneg_prec = [](const EOp &p) {
    int pr = kExact;
    for (const auto &[k, c] : p.terms())
      if (k.s >= 0)
        pr = std::min(pr, c.prec());
    return pr;
  };
  std::erase_if(prods, [&](const EOp &p) { return nonneg_prec(p) < 1 || p.floor() > 0; });
  int prec = t.nx, floor = 0;
  for (const auto &p : prods)
    prec = std::min(prec, nonneg_prec(p));
  using Key = std::tuple<int, int, int, int>; // s, i, x1, x2
  using Vec = std::map<Key, QuadElem, std::greater<>>;
  auto flat = [&](const EOp &p) {
    Vec v;
    for (const auto &[k, c] : p.terms()) {
      if (k.s < floor)
        continue;
      for (const auto &tm : c.terms())
        if (tm.i + tm.j < prec)
          v[{k.s, k.i, tm.i, tm.j}] += tm.c;
    }
    std::erase_if(v, [](const auto &kv) { return kv.second.is_zero(); });
    return v;
  };
  std::map<Key, Vec, std::greater<>> rows;
  auto reduce = [&rows](Vec v) {
    while (!v.empty()) {
      auto [lead, lc] = *v.begin();
      auto row = rows.find(lead);
      if (row == rows.end())
        break;
      for (const auto &[k, c] : row->second) {
        v[k] -= c * lc;
        if (v[k].is_zero())
          v.erase(k);
      }
    }
    return v;
  };
  for (const auto &p : prods) {
    Vec v = reduce(flat(p));
    if (v.empty())
      continue;
    auto [lead, lc] = *v.begin();
    QuadElem inv = lc.inverse();
    for (auto &kv : v)
      kv.second *= inv;
    rows.emplace(lead, std::move(v));
  }
  rep.contains = prec > 0 && reduce(flat(EOp::monomial(t, 1, 0))).empty();
  return rep;
}

} // namespace sato2d
