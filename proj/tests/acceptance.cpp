// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails or exceeds its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "corpus.hpp"
#include "icsheaf/axioms.hpp"
#include "oracles.hpp"

using namespace icsheaf;
using Q = Rational;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string list(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

LocalSystem<Q> constant_on(const Stratification& s) { return LocalSystem<Q>::constant(s.open_part(1)); }

ExtendedPerversity ext(std::vector<int> v) {
  int n = static_cast<int>(v.size());
  return extend(Perversity(std::move(v)), n);
}

std::vector<long> ih_range(const Stratification& s, const ExtendedPerversity& p) {
  return intersection_cohomology(s, p, constant_on(s)).range(0, s.n());
}

Outcome ac1() {
  Outcome o;
  auto x = tetrahedron_boundary();
  auto ih = ih_range(stratify(x, {{"v0", 2}}), extend(Perversity::preset("ultra", 2), 2));
  o.require(ih == std::vector<long>{1, 0, 0}, "IH " + list(ih));
  if (o.ok) o.detail = "IH " + list(ih);
  return o;
}

Outcome ac2() {
  Outcome o;
  auto x = tetrahedron_boundary();
  auto ih = ih_range(Stratification::trivial(x), extend(Perversity::preset("ultra", 2), 2));
  o.require(ih == std::vector<long>{1, 0, 1}, "IH " + list(ih));
  if (o.ok) o.detail = "IH " + list(ih);
  return o;
}

Outcome ac3() {
  Outcome o;
  auto eq = corpus::equator_strat();
  o.require(!pseudoboundary(eq).empty(), "pseudoboundary empty");
  auto ih = ih_range(eq, extend(Perversity::preset("zero", 2), 2));
  o.require(ih == std::vector<long>{2, 0, 0}, "IH " + list(ih));
  if (o.ok) o.detail = "IH " + list(ih);
  return o;
}

Outcome ac4() {
  Outcome o;
  auto x = tetrahedron_boundary();
  auto s = stratify(x, {{"v0", 2}});
  int v0 = x->parse_name("v0");
  auto p = build_deligne(s, extend(Perversity::preset("ultra", 2), 2), constant_on(s)).result;
  auto stalk = cohomology(p.stalk(v0)).range(0, 2);
  o.require(stalk == std::vector<long>{1, 1, 0}, "stalk " + list(stalk));
  auto co = costalk_cohomology(p, v0);
  for (int j = co.lo; j <= 2; ++j) o.require(co.at(j) == 0, "costalk nonzero in degree " + std::to_string(j));
  auto k = constant_sheaf<Q>(x, CellSet::all(x->size()), 1);
  auto table = costalk_table(k);
  for (int id = 0; id < x->size(); ++id) o.require(table[id].at(2) == 1, "constant costalk H^2 at " + x->name(id));
  if (o.ok) o.detail = "stalk " + list(stalk) + ", costalk zero, constant H^2 = 1 on 14 simplices";
  return o;
}

Outcome ac5() {
  Outcome o;
  auto x = tetrahedron_boundary();
  auto s = stratify(x, {{"v0", 2}});
  auto p = extend(Perversity::preset("ultra", 2), 2);
  auto g = constant_on(s);
  auto d = build_deligne(s, p, g).result;
  auto k = constant_sheaf<Q>(x, CellSet::all(x->size()), 1);
  AxiomContext<Q> dc(d, s, p, g), kc(k, s, p, g);
  o.require(check_AX2(dc).pass(), "AX2 fails on Deligne sheaf");
  o.require(check_AX2(kc).pass(), "AX2 fails on constant sheaf");
  o.require(check_AX2prime(dc).pass(), "AX2' fails on Deligne sheaf");
  auto r = check_AX2prime(kc);
  o.require(!r.pass(), "AX2' passes on constant sheaf");
  const auto* c = r.clause("2'c");
  o.require(c && !c->pass && c->witness, "clause 2'c has no failing witness");
  if (o.ok) {
    const auto& w = *c->witness;
    o.require(w.simplex == "v0" && w.degree && *w.degree == 2 && w.observed == ExtInt(0) && w.bound == ExtInt::neg_inf(),
              "witness " + w.simplex + " " + w.observed.str() + " " + w.bound.str());
    if (o.ok) o.detail = "constant fails 2'c at (v0, 2, observed 0, bound -inf)";
  }
  return o;
}

// Largest m with p(k) >= k - 1 for all k <= m.
int ultra_range(const ExtendedPerversity& p, int n) {
  int m = 0;
  while (m < n && p(m + 1) >= m) ++m;
  return m;
}

Outcome ac6() {
  Outcome o;
  int triples = 0;
  for (const auto& sc : corpus::scenarios<Q>()) {
    if (sc.g.rank != 1 || !sc.g.edges.empty()) continue;  // the oracle only knows constant coefficients
    int n = sc.strat.n();
    int m = ultra_range(sc.p, n);
    if (m < 1) continue;
    const auto& c = sc.strat.complex();
    auto want = oracle::nerve_betti(c, sc.strat.open_part(1).ids());
    auto ih = intersection_cohomology(sc.strat, sc.p, sc.g);
    for (int j = 0; j <= m - 1; ++j) {
      long w = j < static_cast<int>(want.size()) ? want[j] : 0;
      o.require(ih.at(j) == w, sc.name + " degree " + std::to_string(j));
    }
    ++triples;
  }
  o.require(triples >= 5, "only " + std::to_string(triples) + " triples");
  if (o.ok) o.detail = std::to_string(triples) + " triples";
  return o;
}

Outcome ac7() {
  Outcome o;
  auto x = tetrahedron_boundary();
  std::vector<Stratification> strats = {stratify(x, {{"v0", 2}}), stratify(x, {{"v0", 2}, {"v1", 2}}),
                                        stratify(torus7(), {{"t0", 2}})};
  for (const auto& s : corpus::suspension_strats()) strats.push_back(s);
  int runs = 0;
  for (const auto& s : strats) {
    int n = s.n();
    std::vector<std::vector<int>> cores = {std::vector<int>(n, -1)};
    if (n == 3) cores.push_back({-1, -1, 0});
    for (const auto& core : cores) {
      auto ih = intersection_cohomology(s, ext(core), constant_on(s));
      o.require(ih.is_zero(), "nonzero IH");
      ++runs;
    }
  }
  if (o.ok) o.detail = std::to_string(runs) + " runs, all zero";
  return o;
}

Outcome ac8() {
  Outcome o;
  auto st = suspended_torus();
  int a = st->parse_name("a"), b = st->parse_name("b");
  // link oracle first
  auto lk = link(*st, a);
  std::set<std::vector<int>> cells;
  for (int t = 0; t < lk.size(); ++t) cells.insert(lk.simplex(t));
  auto betti = oracle::simplicial_betti(cells);
  auto p = ext({0, 1, 1});
  std::vector<long> want;
  for (int j = 0; j <= 3; ++j) want.push_back(j <= p(3) && j < static_cast<int>(betti.size()) ? betti[j] : 0);
  o.require(want == std::vector<long>{1, 2, 0, 0}, "link oracle " + list(want));

  CellSet sigma = closed_cells(*st, {"a", "b"});
  std::vector<CohomologyResult> ih;
  std::vector<std::vector<CohomologyResult>> stalks;
  for (const auto& s : corpus::suspension_strats()) {
    o.require(subject_to(s, sigma), "stratification not subject to sigma");
    auto d = build_deligne(s, p, constant_on(s), {true, false, Exec::parallel}).result;
    ih.push_back(hypercohomology(d));
    stalks.push_back(stalk_table(d));
  }
  for (std::size_t i = 1; i < ih.size(); ++i) {
    o.require(ih[i] == ih[0], "IH differs for stratification " + std::to_string(i + 1));
    for (int id = 0; id < st->size(); ++id)
      o.require(stalks[i][id] == stalks[0][id], "stalk differs at " + st->name(id));
  }
  for (const auto& t : stalks) {
    o.require(t[a].range(0, 3) == want, "stalk at a " + list(t[a].range(0, 3)));
    o.require(t[b].range(0, 3) == want, "stalk at b " + list(t[b].range(0, 3)));
  }
  if (o.ok) o.detail = "IH " + list(ih[0].range(0, 3)) + ", cone stalk " + list(want) + ", 3 stratifications";
  return o;
}

Outcome ac9() {
  Outcome o;
  int compared = 0, skipped = 0;
  for (const auto& sc : corpus::scenarios<Q>()) {
    if (!corpus::manifold_strata<Q>(sc.strat)) {
      ++skipped;
      continue;
    }
    for (const auto& sub : corpus::subjects(sc)) {
      AxiomContext<Q> ctx(sub.sheaf, sc.strat, sc.p, sc.g);
      bool ax1 = check_AX1(ctx).pass();
      bool ax1p = check_AX1prime(ctx).pass();
      bool ax2p = check_AX2prime(ctx).pass();
      bool ax3 = check_AX3(ctx).pass();
      o.require(ax1 == ax1p && ax1p == ax2p && ax2p == ax3, sc.name + " / " + sub.name);
      ++compared;
    }
  }
  if (o.ok)
    o.detail = std::to_string(compared) + " sheaves agree; " + std::to_string(skipped) + " scenario(s) without manifold strata skipped";
  return o;
}

// Every up-closed subset of a small complex.
std::vector<CellSet> all_opens(const SimplicialComplex& c) {
  std::vector<CellSet> out;
  int n = c.size();
  for (long mask = 1; mask < (1L << n); ++mask) {
    CellSet u(n);
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) u.insert(i);
    if (is_open(c, u)) out.push_back(u);
  }
  return out;
}

template <class K>
void costalk_identity(Outcome& o, const CellSheafComplex<K>& s, int id, const std::string& where) {
  auto a = attachment(s, s.carrier(), id, Route::roos);
  auto hs = cohomology(a.source, false);
  auto hd = cohomology(a.target, false);
  auto local = costalk_cohomology(s, id);
  int shift_by = s.complex().simplex_dim(id);
  int lo = std::min({hs.lo, hd.lo, local.lo - shift_by});
  int hi = std::max({hs.hi(), hd.hi(), local.hi() - shift_by});
  long alt = 0;
  for (int j = lo; j <= hi; ++j) alt += (j % 2 == 0 ? 1 : -1) * (local.at(j + shift_by) - hs.at(j) + hd.at(j));
  o.require(alt == 0, "costalk identity at " + where);
}

template <class K>
void observables_equal(Outcome& o, const CellSheafComplex<K>& a, const CellSheafComplex<K>& b, const std::string& where) {
  auto sa = stalk_table(a), sb = stalk_table(b);
  auto ca = costalk_table(a), cb = costalk_table(b);
  for (int id : a.carrier().ids()) o.require(sa[id] == sb[id] && ca[id] == cb[id], "reduce changed " + where);
  o.require(hypercohomology(a) == hypercohomology(b), "reduce changed hypercohomology of " + where);
}

Outcome ac10() {
  Outcome o;
  int sheaves = 0, points = 0, opens = 0;
  for (const auto& sc : corpus::scenarios<Q>()) {
    auto x = sc.strat.complex_ptr();
    auto g = to_sheaf(sc.g, x);
    auto build = build_deligne(sc.strat, sc.p, sc.g);
    auto pushed = pushforward(g, CellSet::all(x->size()));
    std::vector<const CellSheafComplex<Q>*> all = {&g, &pushed, &build.result};
    for (const auto& s : build.stages) all.push_back(&s);
    for (const auto* s : all) {
      try {
        s->validate();
      } catch (const Error& e) {
        o.require(false, sc.name + ": " + e.what());
      }
      ++sheaves;
    }
    for (int id : sc.g.carrier.ids())
      o.require(cohomology(pushed.stalk(id)) == cohomology(g.stalk(id)), sc.name + ": pushforward stalk at " + x->name(id));
    for (const auto* s : {&build.result, &pushed, &g})
      for (int id : s->carrier().ids()) {
        costalk_identity(o, *s, id, sc.name + " " + x->name(id));
        ++points;
      }
    observables_equal(o, build.result, reduce(build.result), sc.name);
    observables_equal(o, pushed, reduce(pushed), sc.name + " pushforward");
  }

  auto check_opens = [&](const ComplexPtr& c, const std::vector<CellSet>& us) {
    auto k = constant_sheaf<Q>(c, CellSet::all(c->size()), 1);
    for (const auto& u : us) {
      auto got = cohomology(sections(k, u));
      auto want = oracle::nerve_betti(*c, u.ids());
      int top = std::max(got.hi(), static_cast<int>(want.size()) - 1);
      for (int j = std::min(got.lo, 0); j <= top; ++j) {
        long w = j >= 0 && j < static_cast<int>(want.size()) ? want[j] : 0;
        o.require(got.at(j) == w, "sections vs nerve oracle");
      }
      ++opens;
    }
  };
  auto sphere = tetrahedron_boundary();
  check_opens(sphere, all_opens(*sphere));
  for (auto c : {octahedron(), torus7()}) {
    // all unions of at most two open stars, and deleted stars
    std::vector<CellSet> us;
    for (int a = 0; a < c->size(); ++a) {
      us.push_back(deleted_star(*c, a));
      for (int b = a; b < c->size(); ++b) us.push_back(open_star(*c, a) | open_star(*c, b));
    }
    std::vector<CellSet> nonempty;
    for (auto& u : us)
      if (!u.empty()) nonempty.push_back(std::move(u));
    check_opens(c, nonempty);
  }
  if (o.ok)
    o.detail = std::to_string(sheaves) + " sheaves, " + std::to_string(points) + " costalk points, " +
               std::to_string(opens) + " open subposets";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"AC1 sphere with point stratum, ultra: IH = (1,0,0)", 5, ac1},
      {"AC2 sphere trivial stratification: IH = (1,0,1)", 5, ac2},
      {"AC3 sphere with equator, zero perversity: IH = (2,0,0)", 5, ac3},
      {"AC4 stalk and costalk table", 10, ac4},
      {"AC5 AX2 vs AX2' separation", 10, ac5},
      {"AC6 ultra-range IH equals complement cohomology", 60, ac6},
      {"AC7 p(2) < 0 gives zero IH", 5, ac7},
      {"AC8 independence of the stratification at n = 3", 120, ac8},
      {"AC9 axiom system equivalences", 120, ac9},
      {"AC10 infrastructure invariants", 120, ac10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.ok && secs < c.limit;
    if (o.ok && !pass) o.detail += "; over time budget";
    failed += !pass;
    std::printf("%s %s [%.2fs / %.0fs] %s\n", pass ? "PASS" : "FAIL", c.name, secs, c.limit, o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
