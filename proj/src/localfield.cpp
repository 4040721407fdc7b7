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

#include "localfield.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace sato2d {

UVElem UVElem::monomial(int m, int l, const QuadElem &c) {
  UVElem r;
  r.add_to(m, l, c);
  return r;
}

QuadElem UVElem::coeff(int m, int l) const {
  auto it = terms_.find(UVKey{m, l});
  return it == terms_.end() ? QuadElem() : it->second;
}

void UVElem::add_to(int m, int l, const QuadElem &c) {
  if (l >= l_cap_ || c.is_zero())
    return;
  auto [it, fresh] = terms_.try_emplace(UVKey{m, l}, c);
  if (fresh)
    return;
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
}

void UVElem::set_cap(int cap) {
  l_cap_ = cap;
  std::erase_if(terms_, [cap](const auto &kv) { return kv.first.l >= cap; });
}

UVElem &UVElem::operator+=(const UVElem &o) {
  set_cap(std::min(l_cap_, o.l_cap_));
  for (const auto &[k, c] : o.terms_)
    add_to(k.m, k.l, c);
  return *this;
}

UVElem &UVElem::operator-=(const UVElem &o) { return *this += o.scaled(QuadElem(-1)); }

UVElem UVElem::scaled(const QuadElem &c) const {
  UVElem r(l_cap_);
  if (c.is_zero())
    return r;
  r.terms_ = terms_;
  for (auto &kv : r.terms_)
    kv.second *= c;
  return r;
}

std::string UVElem::str() const {
  std::string out;
  for (const auto &[k, c] : terms_) {
    std::string mono;
    if (k.m != 0)
      mono = k.m == 1 ? "u" : "u^" + std::to_string(k.m);
    if (k.l != 0) {
      if (!mono.empty())
        mono += "*";
      mono += k.l == 1 ? "t" : "t^" + std::to_string(k.l);
    }
    bool neg = c.is_rational() && sgn(c.a()) < 0;
    std::string cs = neg ? (-c).str() : c.str();
    if (!c.is_rational() && sgn(c.a()) != 0 && !mono.empty())
      cs = "(" + cs + ")";
    std::string body = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  if (!exact())
    out += (out.empty() ? "" : " + ") + std::string("O(t^") + std::to_string(l_cap_) + ")";
  return out.empty() ? "0" : out;
}

UVElem uv_mul(const UVElem &f, const UVElem &g) {
  int cap = kNoCap;
  if (!f.exact()) {
    int gl = g.is_zero() ? g.l_cap() : g.terms().begin()->first.l;
    if (gl < kNoCap)
      cap = std::min(cap, f.l_cap() + gl);
  }
  if (!g.exact()) {
    int fl = f.is_zero() ? f.l_cap() : f.terms().begin()->first.l;
    if (fl < kNoCap)
      cap = std::min(cap, g.l_cap() + fl);
  }
  UVElem r(cap);
  for (const auto &[a, ca] : f.terms())
    for (const auto &[b, cb] : g.terms())
      r.add_to(a.m + b.m, a.l + b.l, ca * cb);
  return r;
}

UVElem psi1(const ZSeries &z) {
  int cap = kNoCap;
  if (!z.exact()) {
    int imax = 0;
    for (const auto &kv : z.terms())
      imax = std::max(imax, kv.first.i);
    cap = 1 - imax - z.floor();
  }
  UVElem r(cap);
  for (const auto &[k, c] : z.terms())
    r.add_to(k.i, -k.i - k.s, c);
  return r;
}

ZSeries psi1_inv(const UVElem &f) {
  ZSeries z(f.exact() ? kNoFloor : 1 - f.l_cap());
  for (const auto &[k, c] : f.terms()) {
    if (k.m < 0)
      throw DomainError("u^" + std::to_string(k.m) + " is not in the image of psi1");
    z.add_to(k.m, -k.l - k.m, c);
  }
  return z;
}

UVKey nu(const UVElem &f) {
  if (f.is_zero()) {
    if (f.exact())
      throw DomainError("valuation of zero is undefined");
    throw IndeterminateError("element vanishes below t^" + std::to_string(f.l_cap()) +
                             "; valuation not certified");
  }
  return f.terms().begin()->first;
}

int nu_t(const UVElem &f) { return nu(f).l; }

UVKey nu(const ZSeries &z) { return nu(psi1(z)); }

OpKey lowest_term(const ZSeries &z) {
  auto lt = z.lead();
  if (!lt) {
    if (z.exact())
      throw DomainError("lowest term of zero is undefined");
    throw IndeterminateError("symbol vanishes above d2-degree " + std::to_string(z.floor()));
  }
  return *lt;
}

int symbol_degree(const ZSeries &z) { return -nu(z).l; }

std::optional<UVKey> ValuationEchelon::insert(UVElem v) {
  v = reduce(std::move(v));
  if (v.is_zero()) {
    if (!v.exact())
      throw IndeterminateError("reduction left nothing below t^" + std::to_string(v.l_cap()) +
                               "; a larger window is needed");
    return std::nullopt;
  }
  auto [key, lc] = *v.terms().begin();
  UVElem row = v.scaled(lc.inverse());
  rows_.emplace(key, std::move(row));
  return key;
}

UVElem ValuationEchelon::reduce(UVElem v) const {
  while (!v.is_zero()) {
    auto [lead, lc] = *v.terms().begin();
    auto row = rows_.find(lead);
    if (row == rows_.end())
      break;
    v -= row->second.scaled(lc);
  }
  return v;
}

namespace {

struct Factor {
  ZSeries z;
  int deg;
};

std::vector<Factor> factors_of(const std::vector<ZSeries> &gens) {
  std::vector<Factor> out;
  for (const auto &g : gens) {
    if (g.is_zero())
      continue;
    out.push_back({g, symbol_degree(g)});
  }
  return out;
}

// All monomials prod g_k^{e_k} with total degree <= bound, including 1.
void monomials(const std::vector<Factor> &fs, std::size_t from, const ZSeries &cur, int deg,
               int bound, std::vector<ZSeries> &out) {
  out.push_back(cur);
  for (std::size_t k = from; k < fs.size(); ++k) {
    const int nd = deg + fs[k].deg;
    if (nd > bound)
      continue;
    // A factor of degree <= 0 is used at most once per monomial.
    std::size_t next = fs[k].deg > 0 ? k : k + 1;
    monomials(fs, next, z_mul(cur, fs[k].z), nd, bound, out);
  }
}

} // namespace

std::vector<UVElem> generated_span(const std::vector<ZSeries> &gens,
                                   const std::vector<ZSeries> &ring_gens, int bound) {
  std::vector<UVElem> out;
  if (ring_gens.empty()) {
    std::vector<ZSeries> mons;
    monomials(factors_of(gens), 0, ZSeries::monomial(0, 0), 0, bound, mons);
    for (const auto &m : mons)
      out.push_back(psi1(m));
    return out;
  }
  auto rf = factors_of(ring_gens);
  for (const auto &w : factors_of(gens)) {
    if (w.deg > bound)
      continue;
    std::vector<ZSeries> mons;
    monomials(rf, 0, w.z, w.deg, bound, mons);
    for (const auto &m : mons)
      out.push_back(psi1(m));
  }
  return out;
}

SpanTable filtration_dims(const std::vector<ZSeries> &gens, const std::vector<ZSeries> &ring_gens,
                          int n_max, int r, int bound) {
  if (n_max < 0 || r < 1)
    throw ConfigError("filtration needs n_max >= 0 and r >= 1");
  int maxdeg = 0;
  for (const auto &f : factors_of(gens))
    maxdeg = std::max(maxdeg, f.deg);
  for (const auto &f : factors_of(ring_gens))
    maxdeg = std::max(maxdeg, f.deg);
  SpanTable tab;
  tab.r = r;
  tab.n_max = n_max;
  // Slack above the top level catches cancellations among higher products.
  tab.bound = bound >= 0 ? bound : n_max * r + 2 * maxdeg;
  if (tab.bound < n_max * r)
    throw ConfigError("degree bound " + std::to_string(tab.bound) + " is below the top level " +
                      std::to_string(n_max * r));

  ValuationEchelon ech;
  for (auto &v : generated_span(gens, ring_gens, tab.bound))
    ech.insert(std::move(v));

  tab.dims.assign(n_max + 1, 0);
  tab.lead.assign(n_max + 1, {});
  for (const auto &[key, row] : ech.rows()) {
    if (key.l < -n_max * r)
      continue;
    // Level of the row: smallest n with t^(-n r) dividing into it.
    int n = key.l >= 0 ? 0 : (-key.l + r - 1) / r;
    tab.lead[n].push_back(key);
    if (!row.exact() && row.l_cap() <= -n_max * r)
      throw IndeterminateError("row led by u^" + std::to_string(key.m) + " t^" +
                               std::to_string(key.l) + " is cut inside the table; enlarge the window");
  }
  int acc = 0;
  for (int n = 0; n <= n_max; ++n) {
    acc += static_cast<int>(tab.lead[n].size());
    tab.dims[n] = acc;
  }
  return tab;
}

std::vector<int> graded_quotient(const SpanTable &table, int n) {
  if (n < 0 || n > table.n_max)
    throw DomainError("level " + std::to_string(n) + " is outside the table (0.." +
                      std::to_string(table.n_max) + ")");
  std::vector<int> ms;
  for (const auto &k : table.lead[n])
    ms.push_back(k.m);
  std::sort(ms.begin(), ms.end());
  return ms;
}

HilbertFit hilbert_fit(const SpanTable &table, int d) {
  if (d < 1)
    throw ConfigError("hilbert_fit needs a step d >= 1");
  std::vector<long> vals;
  for (int n = 0; n * d <= table.n_max; ++n)
    vals.push_back(table.dims[n * d]);
  if (vals.size() < 4)
    throw DomainError("hilbert_fit needs at least 4 levels, have " + std::to_string(vals.size()));
  HilbertFit fit;
  for (std::size_t n = 0; n + 2 < vals.size(); ++n)
    fit.second_diffs.push_back(vals[n + 2] - 2 * vals[n + 1] + vals[n]);
  // Longest constant tail of second differences.
  std::size_t start = fit.second_diffs.size() - 1;
  while (start > 0 && fit.second_diffs[start - 1] == fit.second_diffs.back())
    --start;
  if (fit.second_diffs.size() - start < 2)
    throw DomainError("second differences are not eventually constant up to level " +
                      std::to_string(table.n_max));
  fit.from = static_cast<int>(start);
  fit.to = static_cast<int>(vals.size()) - 1;
  fit.c2 = Rat(fit.second_diffs.back(), static_cast<long>(d) * d);
  fit.c2.canonicalize();
  fit.integral = fit.c2.get_den() == 1;
  return fit;
}

Invariants invariants_NA(const std::vector<ZSeries> &gens, int bound) {
  Invariants inv;
  int maxdeg = 0;
  for (const auto &f : factors_of(gens))
    maxdeg = std::max(maxdeg, f.deg);
  inv.bound = bound >= 0 ? bound : 3 * maxdeg;
  ValuationEchelon ech;
  for (auto &v : generated_span(gens, {}, inv.bound))
    ech.insert(std::move(v));
  bool has_m1 = false;
  for (const auto &kv : ech.rows()) {
    const UVKey &k = kv.first;
    inv.N_tilde = std::gcd(inv.N_tilde, std::abs(k.l));
    if (k.m == 0)
      inv.N = std::gcd(inv.N, std::abs(k.l));
    if (k.m == 1)
      has_m1 = true;
  }
  inv.strongly_admissible = has_m1 && inv.N == inv.N_tilde;
  if (inv.strongly_admissible)
    inv.rank = inv.N;
  return inv;
}

} // namespace sato2d
