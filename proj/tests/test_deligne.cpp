#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace icsheaf;

namespace {

using Q = Rational;

std::string error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

template <class K>
LocalSystem<K> constant_on(const Stratification& s) {
  return LocalSystem<K>::constant(s.open_part(1));
}

ExtendedPerversity ext(std::vector<int> v) {
  int n = static_cast<int>(v.size());
  return extend(Perversity(std::move(v)), n);
}

// Largest m with p(k) >= k - 1 for all k <= m.
int ultra_range(const ExtendedPerversity& p, int n) {
  int m = 0;
  while (m < n && p(m + 1) >= m) ++m;
  return m;
}

std::vector<Stratification> equator_strats() {
  auto o = octahedron();
  auto eq = closed_cells(*o, {"e0,e1", "e1,e2", "e2,e3", "e0,e3"});
  auto one_point = corpus::equator_strat();
  auto depths = one_point.depths();
  depths[o->parse_name("e0")] = 2;
  return {corpus::equator_strat(), default_stratification(o, eq), Stratification(o, depths)};
}

}  // namespace

TEST_CASE("deligne sheaf examples") {
  auto x = tetrahedron_boundary();
  auto trivial = Stratification::trivial(x);
  for (auto name : {"zero", "ultra", "top"}) {
    auto b = build_deligne(trivial, extend(Perversity::preset(name, 2), 2), constant_on<Q>(trivial));
    CHECK(hypercohomology(b.result).range(0, 2) == std::vector<long>{1, 0, 1});
    for (int id = 0; id < x->size(); ++id) CHECK(cohomology(b.result.stalk(id)).range(0, 2) == std::vector<long>{1, 0, 0});
  }
  auto point = stratify(x, {{"v0", 2}});
  auto b = build_deligne(point, ext({0, 1}), constant_on<Q>(point));
  CHECK(cohomology(b.result.stalk(x->parse_name("v0"))).range(0, 2) == std::vector<long>{1, 1, 0});
  CHECK(b.stages.size() == 3);
  auto sub = build_deligne(point, extend(Perversity::from_codim2({-1}), 2), constant_on<Q>(point));
  CHECK(hypercohomology(sub.result).is_zero());
}

TEST_CASE("full pushforward and complement") {
  auto x = tetrahedron_boundary();
  auto point = stratify(x, {{"v0", 2}});
  CHECK(hypercohomology(full_pushforward(constant_on<Q>(point), x)).range(0, 2) == std::vector<long>{1, 0, 0});
  auto trivial = Stratification::trivial(x);
  CHECK(hypercohomology(full_pushforward(constant_on<Q>(trivial), x)).range(0, 2) == std::vector<long>{1, 0, 1});
  CHECK(complement_cohomology(constant_on<Q>(trivial), x).range(0, 2) == std::vector<long>{1, 0, 1});
  CHECK(complement_cohomology(constant_on<Q>(point), x).range(0, 2) == std::vector<long>{1, 0, 0});
  auto eq = corpus::equator_strat();
  CHECK(complement_cohomology(constant_on<Q>(eq), eq.complex_ptr()).range(0, 2) == std::vector<long>{2, 0, 0});
  for (const auto& sc : corpus::scenarios<Q>()) {
    CAPTURE(sc.name);
    auto push = full_pushforward(sc.g, sc.strat.complex_ptr());
    CHECK(hypercohomology(push) == complement_cohomology(sc.g, sc.strat.complex_ptr()));
    std::vector<int> open = sc.g.carrier.ids();
    if (sc.g.is_constant()) {
      auto want = oracle::nerve_betti(sc.strat.complex(), open);
      auto got = complement_cohomology(sc.g, sc.strat.complex_ptr());
      CHECK(got.range(0, static_cast<int>(want.size()) - 1) == want);
    }
  }
}

TEST_CASE("intersection cohomology examples") {
  auto x = tetrahedron_boundary();
  auto ultra = extend(Perversity::preset("ultra", 2), 2);
  CHECK(intersection_cohomology(stratify(x, {{"v0", 2}}), ultra, constant_on<Q>(stratify(x, {{"v0", 2}}))).range(0, 2) ==
        std::vector<long>{1, 0, 0});
  auto trivial = Stratification::trivial(x);
  CHECK(intersection_cohomology(trivial, ultra, constant_on<Q>(trivial)).range(0, 2) == std::vector<long>{1, 0, 1});
  for (const auto& s : equator_strats()) {
    auto zero = extend(Perversity::preset("zero", 2), 2);
    CHECK(intersection_cohomology(s, zero, constant_on<Q>(s)).range(0, 2) == std::vector<long>{2, 0, 0});
  }
}

TEST_CASE("stage one is the coefficient system") {
  for (const auto& sc : corpus::scenarios<Q>()) {
    CAPTURE(sc.name);
    auto b = build_deligne(sc.strat, sc.p, sc.g);
    REQUIRE(b.stages.size() == static_cast<std::size_t>(sc.strat.n() + 1));
    const auto& first = b.stages.front();
    CHECK(first.carrier() == sc.g.carrier);
    for (int id : first.carrier().ids()) {
      auto h = cohomology(first.stalk(id));
      CHECK(h.at(0) == sc.g.rank);
      CHECK(h.euler() == sc.g.rank);
    }
    for (int k = 1; k <= sc.strat.n(); ++k) CHECK(b.stages[k].carrier() == sc.strat.open_part(k + 1));
  }
}

TEST_CASE("ultra perversities see the complement") {
  int checked = 0;
  for (const auto& sc : corpus::scenarios<Q>()) {
    CAPTURE(sc.name);
    int n = sc.strat.n();
    int m = ultra_range(sc.p, n);
    auto ih = intersection_cohomology(sc.strat, sc.p, sc.g);
    auto comp = complement_cohomology(sc.g, sc.strat.complex_ptr());
    for (int j = 0; j <= m - 1; ++j) CHECK(ih.at(j) == comp.at(j));
    if (m == n) CHECK(ih == comp);
    if (m >= 1) ++checked;
  }
  CHECK(checked >= 5);
  Zp::set_modulus(2);
  for (const auto& sc : corpus::scenarios<Zp>(false))
    if (ultra_range(sc.p, sc.strat.n()) == sc.strat.n())
      CHECK(intersection_cohomology(sc.strat, sc.p, sc.g) == complement_cohomology(sc.g, sc.strat.complex_ptr()));
}

TEST_CASE("perversities above k - 1 give the same answer") {
  auto x = tetrahedron_boundary();
  for (const auto& s : {stratify(x, {{"v0", 2}}), stratify(x, {{"v0", 2}, {"v1", 2}})}) {
    auto a = intersection_cohomology(s, ext({0, 1}), constant_on<Q>(s));
    CHECK(a == intersection_cohomology(s, ext({1, 2}), constant_on<Q>(s)));
    CHECK(a == intersection_cohomology(s, ext({1, 1}), constant_on<Q>(s)));
  }
  auto s = corpus::suspension_strats()[0];
  CHECK(intersection_cohomology(s, ext({0, 1, 1}), constant_on<Q>(s)) ==
        intersection_cohomology(s, ext({1, 1, 1}), constant_on<Q>(s)));
}

TEST_CASE("negative p(2) kills everything") {
  auto x = tetrahedron_boundary();
  std::vector<Stratification> strats = {stratify(x, {{"v0", 2}}), stratify(torus7(), {{"t0", 2}, {"t3", 2}})};
  for (const auto& s : corpus::suspension_strats()) strats.push_back(s);
  for (const auto& s : strats) {
    int n = s.n();
    std::vector<std::vector<int>> cores = {std::vector<int>(n, -1)};
    if (n == 3) cores.push_back({-1, -1, 0});
    for (const auto& core : cores) {
      auto b = build_deligne(s, ext(core), constant_on<Q>(s));
      CHECK(hypercohomology(b.result).is_zero());
      for (int id = 0; id < s.complex().size(); ++id) CHECK(cohomology(b.result.stalk(id)).is_zero());
    }
  }
}

TEST_CASE("independence of the stratification") {
  auto zero = extend(Perversity::preset("zero", 2), 2);
  auto eq = equator_strats();
  auto ref = build_deligne(eq[0], zero, constant_on<Q>(eq[0]), {true, false, Exec::parallel}).result;
  for (std::size_t i = 1; i < eq.size(); ++i) {
    auto other = build_deligne(eq[i], zero, constant_on<Q>(eq[i]), {true, false, Exec::parallel}).result;
    CHECK(hypercohomology(other) == hypercohomology(ref));
    auto sa = stalk_table(ref), sb = stalk_table(other);
    auto ca = costalk_table(ref), cb = costalk_table(other);
    for (int id = 0; id < eq[0].complex().size(); ++id) {
      CHECK(sa[id] == sb[id]);
      CHECK(ca[id] == cb[id]);
    }
  }

  auto strats = corpus::suspension_strats();
  auto p = ext({0, 1, 1});
  std::vector<CellSheafComplex<Q>> sheaves;
  for (const auto& s : strats) sheaves.push_back(build_deligne(s, p, constant_on<Q>(s), {true, false, Exec::parallel}).result);
  auto h0 = hypercohomology(sheaves[0]);
  CHECK(h0.range(0, 3) == std::vector<long>{1, 2, 0, 1});
  auto t0 = stalk_table(sheaves[0]);
  for (std::size_t i = 1; i < sheaves.size(); ++i) {
    CHECK(hypercohomology(sheaves[i]) == h0);
    auto ti = stalk_table(sheaves[i]);
    for (int id = 0; id < strats[0].complex().size(); ++id) CHECK(ti[id] == t0[id]);
  }
}

TEST_CASE("cone point stalk is the truncated link cohomology") {
  auto st = suspended_torus();
  int a = st->parse_name("a");
  auto lk = link(*st, a);
  std::set<std::vector<int>> cells;
  for (int t = 0; t < lk.size(); ++t) cells.insert(lk.simplex(t));
  auto link_betti = oracle::simplicial_betti(cells);
  REQUIRE(link_betti == std::vector<long>{1, 2, 1});
  auto p = ext({0, 1, 1});
  std::vector<long> want;
  for (int j = 0; j <= 3; ++j) want.push_back(j <= p(3) && j < 3 ? link_betti[j] : 0);
  for (const auto& s : corpus::suspension_strats()) {
    auto b = build_deligne(s, p, constant_on<Q>(s), {true, false, Exec::parallel});
    CHECK(cohomology(b.result.stalk(a)).range(0, 3) == want);
    CHECK(cohomology(b.result.stalk(st->parse_name("b"))).range(0, 3) == want);
  }
}

TEST_CASE("twisted coefficients") {
  auto q = corpus::twisted_scenario<Q>();
  CHECK(complement_cohomology(q.g, q.strat.complex_ptr()).range(0, 2) == std::vector<long>{0, 0, 0});
  CHECK(intersection_cohomology(q.strat, q.p, q.g).range(0, 2) == std::vector<long>{0, 0, 0});
  Zp::set_modulus(2);
  auto f2 = corpus::twisted_scenario<Zp>();
  CHECK(complement_cohomology(f2.g, f2.strat.complex_ptr()).range(0, 2) == std::vector<long>{1, 1, 0});
  Zp::set_modulus(3);
  auto f3 = corpus::twisted_scenario<Zp>();
  CHECK(complement_cohomology(f3.g, f3.strat.complex_ptr()).range(0, 2) == std::vector<long>{0, 0, 0});
  Zp::set_modulus(2);
}

TEST_CASE("local system validation") {
  auto x = tetrahedron_boundary();
  auto s = stratify(x, {{"v0", 2}});
  auto g = constant_on<Q>(s);
  auto bad = g;
  bad.edges[{x->parse_name("v1,v2"), x->parse_name("v1,v2,v3")}] = SparseMatrix<Q>(1, 1);
  CHECK(error_of([&] { to_sheaf(bad, x); }) == "NotInvertible(v1,v2<v1,v2,v3)");
  auto not_face = g;
  not_face.edges[{x->parse_name("v1,v2"), x->parse_name("v1,v3")}] = SparseMatrix<Q>::identity(1);
  CHECK(error_of([&] { to_sheaf(not_face, x); }) == "NotAFace(v1,v2<v1,v3)");
  auto outside = g;
  outside.edges[{x->parse_name("v0"), x->parse_name("v0,v1")}] = SparseMatrix<Q>::identity(1);
  CHECK(error_of([&] { to_sheaf(outside, x); }) == "NotAFace(v0<v0,v1)");
  auto skew = g;
  skew.edges[{x->parse_name("v2"), x->parse_name("v1,v2,v3")}] = SparseMatrix<Q>::from_triplets(1, 1, {{0, 0, Q(2)}});
  CHECK(error_of([&] { to_sheaf(skew, x); }) == "NotFunctorial(v2<v1,v2,v3)");
  CHECK(error_of([&] { build_deligne(s, ext({0, 1}), LocalSystem<Q>::constant(CellSet::all(x->size()))); })
            .rfind("CoefficientCarrier", 0) == 0);
  CHECK(error_of([&] { build_deligne(s, ext({0, 1, 1}), g); }).rfind("UnderspecifiedRange", 0) == 0);
}

TEST_CASE("reduce between stages does not change anything observable") {
  for (const auto& sc : corpus::scenarios<Q>()) {
    CAPTURE(sc.name);
    auto plain = build_deligne(sc.strat, sc.p, sc.g, {false, false, Exec::parallel}).result;
    auto reduced = build_deligne(sc.strat, sc.p, sc.g, {true, false, Exec::parallel}).result;
    CHECK(hypercohomology(plain) == hypercohomology(reduced));
    CHECK(reduced.total_dim() <= plain.total_dim());
    auto sa = stalk_table(plain), sb = stalk_table(reduced);
    auto ca = costalk_table(plain), cb = costalk_table(reduced);
    for (int id = 0; id < sc.strat.complex().size(); ++id) {
      CHECK(sa[id] == sb[id]);
      CHECK(ca[id] == cb[id]);
    }
  }
}
