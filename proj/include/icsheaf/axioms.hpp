#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "icsheaf/deligne.hpp"

namespace icsheaf {

// One evaluated condition: observed value against its bound. For vanishing
// conditions the bound is 0; for dimension conditions it may be infinite.
struct Check {
  std::string simplex;  // empty for global conditions
  std::optional<int> degree;
  ExtInt observed;
  ExtInt bound;
  bool pass = true;
  std::string note;
};

struct ClauseResult {
  std::string id;
  bool pass = true;
  bool applicable = true;
  std::optional<Check> witness;  // first failure, else the tightest check
  std::vector<Check> checks;     // per-degree record for dimension clauses
  std::string note;
};

struct AxiomReport {
  std::string system;
  std::vector<ClauseResult> clauses;

  bool pass() const {
    for (const auto& c : clauses)
      if (!c.pass || !c.applicable) return false;
    return true;
  }
  const ClauseResult* clause(const std::string& id) const {
    for (const auto& c : clauses)
      if (c.id == id) return &c;
    return nullptr;
  }
};

namespace detail {

inline long long slack(const Check& c) {
  if (c.observed == ExtInt::neg_inf() && c.bound == ExtInt::neg_inf()) return 0;
  if (!c.bound.is_finite() || !c.observed.is_finite()) return c.bound > c.observed ? LLONG_MAX : LLONG_MIN;
  return c.bound.value() - c.observed.value();
}

class ClauseBuilder {
 public:
  explicit ClauseBuilder(std::string id) { r_.id = std::move(id); }

  void add(Check c, bool record = false) {
    if (record) r_.checks.push_back(c);
    if (!c.pass) {
      if (r_.pass) r_.witness = c;
      r_.pass = false;
      return;
    }
    if (r_.pass && (!r_.witness || slack(c) < slack(*r_.witness))) r_.witness = std::move(c);
  }
  void merge(const ClauseResult& other) {
    if (other.witness) add(*other.witness);
    if (!other.applicable) r_.applicable = false;
    if (!other.note.empty()) r_.note += (r_.note.empty() ? "" : "; ") + other.note;
  }
  void note(const std::string& n) { r_.note += (r_.note.empty() ? "" : "; ") + n; }
  void not_applicable(const std::string& why) {
    r_.applicable = false;
    r_.pass = false;
    note(why);
  }
  ClauseResult done() { return std::move(r_); }

 private:
  ClauseResult r_;
};

inline Check vanish(std::string simplex, int degree, long observed) {
  return {std::move(simplex), degree, ExtInt(observed), ExtInt(0), observed == 0, {}};
}

inline int costalk_lo(const std::vector<CohomologyResult>& t, const CellSet& cells) {
  int lo = INT_MAX;
  for (int id : cells.ids()) lo = std::min(lo, t[id].lo);
  return lo == INT_MAX ? 0 : lo;
}
inline int costalk_hi(const std::vector<CohomologyResult>& t, const CellSet& cells) {
  int hi = INT_MIN;
  for (int id : cells.ids()) hi = std::max(hi, t[id].hi());
  return hi == INT_MIN ? -1 : hi;
}

}  // namespace detail

// Shared inputs for the checkers; stalk and costalk tables are computed once.
template <class K>
class AxiomContext {
 public:
  AxiomContext(const CellSheafComplex<K>& s, const Stratification& strat, const ExtendedPerversity& p,
               const LocalSystem<K>& g, Exec exec = Exec::parallel)
      : s_(s), strat_(strat), p_(p), q_(dual(p)), g_(g), exec_(exec) {
    if (!(s.carrier() == CellSet::all(s.complex().size()))) throw Error("CarrierMismatch", "sheaf must live on all of X");
    if (p.ambient_dim() != strat.n()) throw Error("UnderspecifiedRange", "perversity extended to " + std::to_string(p.ambient_dim()));
  }

  const CellSheafComplex<K>& sheaf() const { return s_; }
  const Stratification& strat() const { return strat_; }
  const ExtendedPerversity& p() const { return p_; }
  const ExtendedPerversity& q() const { return q_; }
  const LocalSystem<K>& coefficients() const { return g_; }
  int n() const { return strat_.n(); }
  Exec exec() const { return exec_; }
  std::string name(int id) const { return s_.complex().name(id); }

  const std::vector<CohomologyResult>& stalks() {
    if (stalks_.empty()) stalks_ = stalk_table(s_, exec_);
    return stalks_;
  }
  const std::vector<CohomologyResult>& costalks() {
    if (costalks_.empty()) costalks_ = costalk_table(s_, exec_);
    return costalks_;
  }
  const std::vector<CohomologyResult>& pushforward_stalks() {
    if (push_.empty()) push_ = stalk_table(full_pushforward(g_, s_.complex_ptr(), exec_), exec_);
    return push_;
  }

 private:
  const CellSheafComplex<K>& s_;
  const Stratification& strat_;
  ExtendedPerversity p_;
  ExtendedPerversity q_;
  const LocalSystem<K>& g_;
  Exec exec_;
  std::vector<CohomologyResult> stalks_, costalks_, push_;
};

namespace detail {

// Stalk cohomology vanishes in negative degrees.
template <class K>
void nonnegative(AxiomContext<K>& ctx, ClauseBuilder& b) {
  const auto& t = ctx.stalks();
  for (int id = 0; id < ctx.sheaf().complex().size(); ++id)
    for (int j = t[id].lo; j < 0; ++j) b.add(vanish(ctx.name(id), j, t[id].at(j)));
}

// S restricted to U_1 is quasi-isomorphic to G: stalks are G in degree 0,
// covers induce isomorphisms there, and sections over U_1 agree.
template <class K>
void matches_coefficients(AxiomContext<K>& ctx, const CellSet& u1, ClauseBuilder& b) {
  const auto& s = ctx.sheaf();
  const auto& c = s.complex();
  const auto& t = ctx.stalks();
  int r = ctx.coefficients().rank;
  for (int id : u1.ids()) {
    for (int j = std::min(t[id].lo, 0); j <= std::max(t[id].hi(), 0); ++j) {
      long want = j == 0 ? r : 0;
      b.add({ctx.name(id), j, ExtInt(t[id].at(j)), ExtInt(want), t[id].at(j) == want, "stalk against coefficients"});
    }
    for (int u : c.cofaces(id)) {
      if (!u1.contains(u)) continue;
      auto iso = induced_iso(s.stalk(id), t[id], s.stalk(u), t[u], s.restriction(id, u), 0);
      b.add({ctx.name(id) + "<" + ctx.name(u), 0, ExtInt(iso.defect()), ExtInt(0), iso.iso(), "restriction on H^0"});
    }
  }
  auto mine = cohomology(sections(s, u1), false);
  auto theirs = complement_cohomology(ctx.coefficients(), s.complex_ptr());
  for (int j = std::min(mine.lo, theirs.lo); j <= std::max(mine.hi(), theirs.hi()); ++j)
    b.add({"", j, ExtInt(mine.at(j)), ExtInt(theirs.at(j)), mine.at(j) == theirs.at(j), "sections over X - Sigma"});
}

template <class K>
void clc(AxiomContext<K>& ctx, const Stratification& strat, ClauseBuilder& b) {
  auto r = clc_check(ctx.sheaf(), strat, &ctx.stalks());
  if (r.pass) return;
  b.add({ctx.name(r.from) + "<" + ctx.name(r.to), r.degree, ExtInt(r.defect), ExtInt(0), false, "not clc"});
}

template <class K>
ClauseResult stalk_vanishing(AxiomContext<K>& ctx, const std::string& id) {
  ClauseBuilder b(id);
  const auto& t = ctx.stalks();
  for (int cell = 0; cell < ctx.sheaf().complex().size(); ++cell) {
    int k = ctx.strat().depth(cell);
    if (k < 1) continue;
    for (int j = static_cast<int>(ctx.p()(k)) + 1; j <= t[cell].hi(); ++j) b.add(vanish(ctx.name(cell), j, t[cell].at(j)));
  }
  return b.done();
}

// dim supp H^j <= n - p^{-1}(j) for j in the given range.
template <class K>
ClauseResult support_clause(AxiomContext<K>& ctx, const std::string& id, int j_from) {
  ClauseBuilder b(id);
  const auto& t = ctx.stalks();
  const auto& c = ctx.sheaf().complex();
  int hi = 0;
  for (int cell = 0; cell < c.size(); ++cell) hi = std::max(hi, t[cell].hi());
  for (int j = std::max(j_from, 1); j <= hi; ++j) {
    ExtInt observed = support_dimension(c, t, j);
    ExtInt bound = ctx.n() - inverse(ctx.p(), j);
    b.add({"", j, observed, bound, observed <= bound, {}}, true);
  }
  return b.done();
}

// dim {x : H^j(f_x^! S) != 0} <= n - q^{-1}(n - j) for the given degrees.
template <class K>
void cosupport_checks(AxiomContext<K>& ctx, ClauseBuilder& b, int j_from, int j_to, bool skip_n) {
  const auto& t = ctx.costalks();
  const auto& c = ctx.sheaf().complex();
  for (int j = j_from; j <= j_to; ++j) {
    if (skip_n && j == ctx.n()) continue;
    ExtInt observed = support_dimension(c, t, j);
    ExtInt bound = ctx.n() - inverse(ctx.q(), ctx.n() - j);
    b.add({"", j, observed, bound, observed <= bound, {}}, true);
  }
}

template <class K>
void cosupport_on_sigma(AxiomContext<K>& ctx, const CellSet& sigma, ClauseBuilder& b) {
  const auto& c = ctx.sheaf().complex();
  ExtInt c_p = codim_threshold(ctx.p());
  ExtInt bound = ctx.n() - c_p;
  ExtInt observed = ExtInt::neg_inf();
  int witness = -1;
  for (int id : sigma.ids())
    if (ctx.costalks()[id].at(ctx.n()) != 0 && ExtInt(c.simplex_dim(id)) > observed) {
      observed = ExtInt(c.simplex_dim(id));
      witness = id;
    }
  Check chk{witness >= 0 ? ctx.name(witness) : "", ctx.n(), observed, bound, observed <= bound, "degree n on Sigma"};
  b.add(chk, true);
}

template <class K>
ClauseResult basic_clause(AxiomContext<K>& ctx, const std::string& id, const Stratification* clc_strat) {
  ClauseBuilder b(id);
  nonnegative(ctx, b);
  matches_coefficients(ctx, ctx.strat().open_part(1), b);
  if (clc_strat) clc(ctx, *clc_strat, b);
  return b.done();
}

template <class K>
ClauseResult costalk_low_clause(AxiomContext<K>& ctx, const std::string& id, bool doubleprime) {
  ClauseBuilder b(id);
  const auto& t = ctx.costalks();
  int n = ctx.n();
  for (int cell = 0; cell < ctx.sheaf().complex().size(); ++cell) {
    int k = ctx.strat().depth(cell);
    if (k < 1) continue;
    // (1'c): j < n - q(k); (1''c) via the shift identity: j <= p(k) + 1 + n - k.
    long long last = doubleprime ? ctx.p()(k) + 1 + n - k : n - ctx.q()(k) - 1;
    for (int j = t[cell].lo; j <= last && j <= t[cell].hi(); ++j) b.add(vanish(ctx.name(cell), j, t[cell].at(j)));
  }
  return b.done();
}

template <class K>
ClauseResult matches_pushforward(AxiomContext<K>& ctx, const Stratification& strat, const std::string& id) {
  ClauseBuilder b(id);
  ExtInt c_p = codim_threshold(ctx.p());
  const auto& mine = ctx.stalks();
  const auto& want = ctx.pushforward_stalks();
  for (int cell = 0; cell < ctx.sheaf().complex().size(); ++cell) {
    ExtInt depth(strat.depth(cell));
    if (!(depth < c_p)) continue;
    int lo = std::min(mine[cell].lo, want[cell].lo);
    int hi = std::max(mine[cell].hi(), want[cell].hi());
    for (int j = lo; j <= hi; ++j)
      b.add({ctx.name(cell), j, ExtInt(mine[cell].at(j)), ExtInt(want[cell].at(j)), mine[cell].at(j) == want[cell].at(j),
             "stalk against R i_* G on U_c"});
  }
  b.note("c = " + c_p.str());
  return b.done();
}

}  // namespace detail

template <class K>
AxiomReport check_AX1(AxiomContext<K>& ctx) {
  AxiomReport r{"AX1", {}};
  r.clauses.push_back(detail::basic_clause(ctx, "1a", nullptr));
  r.clauses.push_back(detail::stalk_vanishing(ctx, "1b"));
  detail::ClauseBuilder b("1c");
  const auto& s = ctx.sheaf();
  int n = ctx.n();
  for (int k = 1; k <= n; ++k) {
    auto cells = ctx.strat().stratum(k).ids();
    if (cells.empty()) continue;
    CellSet uk = ctx.strat().open_part(k);
    std::vector<std::vector<Check>> found(cells.size());
    for_each_index(static_cast<int>(cells.size()), ctx.exec(), [&](int i) {
      int id = cells[i];
      auto a = attachment(s, uk, id);
      auto ha = cohomology(a.source, false);
      auto hb = cohomology(a.target, false);
      for (int j = std::min(ha.lo, hb.lo); j <= ctx.p()(k); ++j) {
        auto iso = induced_iso(a.source, ha, a.target, hb, a.map, j);
        found[i].push_back({ctx.name(id), j, ExtInt(iso.defect()), ExtInt(0), iso.iso(), "attachment on H^j"});
      }
    });
    for (auto& list : found)
      for (auto& chk : list) b.add(std::move(chk));
  }
  r.clauses.push_back(b.done());
  return r;
}

template <class K>
AxiomReport check_AX1prime(AxiomContext<K>& ctx) {
  AxiomReport r{"AX1'", {}};
  r.clauses.push_back(detail::basic_clause(ctx, "1'a", &ctx.strat()));
  r.clauses.push_back(detail::stalk_vanishing(ctx, "1'b"));
  r.clauses.push_back(detail::costalk_low_clause(ctx, "1'c", false));
  return r;
}

template <class K>
AxiomReport check_1doubleprime_c(AxiomContext<K>& ctx) {
  AxiomReport r{"AX1''c", {}};
  auto clc = clc_check(ctx.sheaf(), ctx.strat(), &ctx.stalks());
  if (!clc.pass) {
    detail::ClauseBuilder b("1''c");
    b.not_applicable("sheaf is not clc along the strata");
    r.clauses.push_back(b.done());
    return r;
  }
  r.clauses.push_back(detail::costalk_low_clause(ctx, "1''c", true));
  return r;
}

template <class K>
AxiomReport check_AX2(AxiomContext<K>& ctx) {
  AxiomReport r{"AX2", {}};
  r.clauses.push_back(detail::basic_clause(ctx, "2a", &ctx.strat()));
  r.clauses.push_back(detail::support_clause(ctx, "2b", 1));
  detail::ClauseBuilder b("2c");
  const auto& t = ctx.costalks();
  auto all = ctx.sheaf().carrier();
  detail::cosupport_checks(ctx, b, detail::costalk_lo(t, all), ctx.n() - 1, false);
  r.clauses.push_back(b.done());
  return r;
}

namespace detail {

template <class K>
ClauseResult cosupport_prime(AxiomContext<K>& ctx, const std::string& id, const CellSet& sigma) {
  ClauseBuilder b(id);
  const auto& t = ctx.costalks();
  auto all = ctx.sheaf().carrier();
  cosupport_checks(ctx, b, costalk_lo(t, all), std::max(costalk_hi(t, all), ctx.n()), true);
  cosupport_on_sigma(ctx, sigma, b);
  return b.done();
}

}  // namespace detail

template <class K>
AxiomReport check_AX2prime(AxiomContext<K>& ctx) {
  AxiomReport r{"AX2'", {}};
  r.clauses.push_back(detail::basic_clause(ctx, "2'a", &ctx.strat()));
  r.clauses.push_back(detail::support_clause(ctx, "2'b", 1));
  r.clauses.push_back(detail::cosupport_prime(ctx, "2'c", ctx.strat().singular()));
  return r;
}

namespace detail {

inline void check_candidates(const std::vector<Stratification>& candidates, const CellSet& sigma) {
  if (candidates.empty()) throw Error("NoCandidates");
  for (const auto& c : candidates) {
    c.validate();
    if (!subject_to(c, sigma)) throw Error("NotSubjectTo", "candidate stratification");
  }
}

}  // namespace detail

// Sigma is the singular set of ctx.strat(); candidates witness the
// existential clauses.
template <class K>
AxiomReport check_AX2doubleprime(AxiomContext<K>& ctx, const std::vector<Stratification>& candidates) {
  CellSet sigma = ctx.strat().singular();
  detail::check_candidates(candidates, sigma);
  AxiomReport r{"AX2''", {}};
  detail::ClauseBuilder a("2''a");
  detail::nonnegative(ctx, a);
  detail::matches_coefficients(ctx, ctx.strat().open_part(1), a);
  bool any = false;
  ClcReport first;
  for (const auto& cand : candidates) {
    auto clc = clc_check(ctx.sheaf(), cand, &ctx.stalks());
    if (clc.pass) {
      any = true;
      break;
    }
    if (first.pass) first = clc;
  }
  if (!any)
    a.add({ctx.name(first.from) + "<" + ctx.name(first.to), first.degree, ExtInt(first.defect), ExtInt(0), false,
           "not clc for any candidate"});
  r.clauses.push_back(a.done());
  r.clauses.push_back(detail::support_clause(ctx, "2''b", 1));
  r.clauses.push_back(detail::cosupport_prime(ctx, "2''c", sigma));
  return r;
}

template <class K>
AxiomReport check_AX3(AxiomContext<K>& ctx) {
  AxiomReport r{"AX3", {}};
  ExtInt c_p = codim_threshold(ctx.p());
  detail::ClauseBuilder a("3a");
  detail::nonnegative(ctx, a);
  detail::clc(ctx, ctx.strat(), a);
  a.merge(detail::matches_pushforward(ctx, ctx.strat(), "3a"));
  auto ra = a.done();
  ra.note = "c = " + c_p.str();
  r.clauses.push_back(std::move(ra));
  // j > c - 2
  int from = c_p == ExtInt::pos_inf() ? INT_MAX : (c_p == ExtInt::neg_inf() ? INT_MIN : static_cast<int>(c_p.value()) - 1);
  if (from == INT_MAX) {
    detail::ClauseBuilder b("3b");
    b.note("vacuous: c = inf");
    r.clauses.push_back(b.done());
  } else {
    r.clauses.push_back(detail::support_clause(ctx, "3b", from));
  }
  detail::ClauseBuilder cc("3c");
  const auto& t = ctx.costalks();
  detail::cosupport_checks(ctx, cc, detail::costalk_lo(t, ctx.sheaf().carrier()), ctx.n() - 1, false);
  r.clauses.push_back(cc.done());
  return r;
}

template <class K>
AxiomReport check_AX3doubleprime(AxiomContext<K>& ctx, const std::vector<Stratification>& candidates) {
  CellSet sigma = ctx.strat().singular();
  detail::check_candidates(candidates, sigma);
  AxiomReport r{"AX3''", {}};
  ExtInt c_p = codim_threshold(ctx.p());
  detail::ClauseBuilder a("3''a");
  detail::nonnegative(ctx, a);
  std::optional<Check> failure;
  bool any = false;
  for (const auto& cand : candidates) {
    auto clc = clc_check(ctx.sheaf(), cand, &ctx.stalks());
    auto match = detail::matches_pushforward(ctx, cand, "3''a");
    if (clc.pass && match.pass) {
      any = true;
      if (match.witness) a.add(*match.witness);
      break;
    }
    if (!failure) {
      failure = clc.pass ? *match.witness
                         : Check{ctx.name(clc.from) + "<" + ctx.name(clc.to), clc.degree, ExtInt(clc.defect), ExtInt(0),
                                 false, "not clc"};
      failure->pass = false;
      failure->note += " (no candidate satisfies clc and the U_c comparison)";
    }
  }
  if (!any) a.add(*failure);
  auto ra = a.done();
  ra.note = "c = " + c_p.str();
  r.clauses.push_back(std::move(ra));
  int from = c_p == ExtInt::pos_inf() ? INT_MAX : (c_p == ExtInt::neg_inf() ? INT_MIN : static_cast<int>(c_p.value()) - 1);
  if (from == INT_MAX) {
    detail::ClauseBuilder b("3''b");
    b.note("vacuous: c = inf");
    r.clauses.push_back(b.done());
  } else {
    r.clauses.push_back(detail::support_clause(ctx, "3''b", from));
  }
  detail::ClauseBuilder cc("3''c");
  detail::cosupport_checks(ctx, cc, detail::costalk_lo(ctx.costalks(), ctx.sheaf().carrier()), ctx.n() - 1, false);
  r.clauses.push_back(cc.done());
  return r;
}

// Dispatch by system id: AX1, AX1', AX1''c, AX2, AX2', AX2'', AX3, AX3''.
template <class K>
AxiomReport check_system(AxiomContext<K>& ctx, const std::string& system,
                         const std::vector<Stratification>& candidates = {}) {
  if (system == "AX1") return check_AX1(ctx);
  if (system == "AX1'") return check_AX1prime(ctx);
  if (system == "AX1''c") return check_1doubleprime_c(ctx);
  if (system == "AX2") return check_AX2(ctx);
  if (system == "AX2'") return check_AX2prime(ctx);
  if (system == "AX2''") return check_AX2doubleprime(ctx, candidates.empty() ? std::vector<Stratification>{ctx.strat()} : candidates);
  if (system == "AX3") return check_AX3(ctx);
  if (system == "AX3''") return check_AX3doubleprime(ctx, candidates.empty() ? std::vector<Stratification>{ctx.strat()} : candidates);
  throw Error("UnknownSystem", system);
}

}  // namespace icsheaf
