#include "commands.hpp"

#include <ostream>
#include <sstream>

#include "icsheaf/builtin.hpp"
#include "icsheaf/io.hpp"

namespace icsheaf::cli {

namespace {

struct Loaded {
  ComplexPtr complex;
  Json doc;  // the complex file, for an embedded depth map
};

Loaded load_complex(const JobOptions& o) {
  if (!o.builtin.empty()) return {builtin_complex(o.builtin), Json::object()};
  if (o.complex_path.empty()) throw Error("MissingInput", "--complex or --builtin");
  auto doc = read_json_file(o.complex_path);
  return {complex_from_json(doc), doc};
}

Stratification load_strat(const Loaded& l, const std::string& path) {
  if (!path.empty()) return stratification_from_json(l.complex, read_json_file(path));
  if (l.doc.contains("depth")) return stratification_from_json(l.complex, l.doc);
  return Stratification::trivial(l.complex);
}

ExtendedPerversity load_perversity(const JobOptions& o, int n) { return extend(parse_perversity(o.perversity, n), n); }

Json perversity_json(const ExtendedPerversity& p) {
  Perversity base(p.core());
  return {{"values", p.core()},
          {"class", to_string(classify(base))},
          {"dual", dual(p).core()},
          {"codim_threshold", to_json(codim_threshold(p))}};
}

Exec exec_of(const JobOptions& o) { return o.serial ? Exec::serial : Exec::parallel; }

template <class F>
int with_field(const JobOptions& o, F&& f) {
  auto spec = FieldSpec::parse(o.field);
  if (spec.rational) return f.template operator()<Rational>();
  Zp::set_modulus(spec.prime);
  return f.template operator()<Zp>();
}

template <class F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError(" << e.what() << ")\n";
    return 2;
  }
}

template <class K>
LocalSystem<K> load_coefficients(const JobOptions& o, const Stratification& strat) {
  if (o.coeffs_path.empty()) return LocalSystem<K>::constant(strat.open_part(1));
  return local_system_from_json<K>(read_json_file(o.coeffs_path), strat);
}

void emit(const JobOptions& o, std::ostream& out, const Json& j, const std::string& md) {
  if (o.output == "md") out << md;
  else out << j.dump(2) << "\n";
}

std::string list_str(const Json& j) { return j.dump(); }

std::vector<std::string> maximal_names(const SimplicialComplex& c, const CellSet& s) {
  std::vector<std::string> out;
  for (int id : s.ids()) {
    bool top = true;
    for (int u : c.upset(id))
      if (s.contains(u)) top = false;
    if (top) out.push_back(c.name(id));
  }
  return out;
}

}  // namespace

int cmd_check(const JobOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto l = load_complex(o);
    auto strat = load_strat(l, o.strat_path);
    strat.validate();
    const auto& c = *l.complex;
    return with_field(o, [&]<class K>() {
      auto components = stratum_sanity_check<K>(strat);
      Json comps = Json::array();
      int warnings = 0;
      for (const auto& k : components) {
        comps.push_back(to_json(k));
        if (!k.pass()) ++warnings;
      }
      Json j = {{"complex", {{"vertices", c.num_vertices()}, {"simplices", c.size()}, {"dim", c.dim()}}},
                {"stratification",
                 {{"valid", true},
                  {"trivial", strat.is_trivial()},
                  {"sigma", maximal_names(c, strat.singular())},
                  {"pseudoboundary", maximal_names(c, pseudoboundary(strat))},
                  {"components", comps},
                  {"warnings", warnings}}}};
      std::ostringstream md;
      md << "complex: " << c.size() << " simplices, dim " << c.dim() << "\n";
      md << "stratification: valid, " << warnings << " warning(s)\n\n| depth | first cell | cells | status |\n|---|---|---|---|\n";
      for (const auto& k : components)
        md << "| " << k.depth << " | " << k.first_cell << " | " << k.cells << " | " << (k.pass() ? "pass" : "warn: " + k.warning)
           << " |\n";
      emit(o, out, j, md.str());
      return 0;
    });
  });
}

int cmd_ih(const JobOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto l = load_complex(o);
    auto strat = load_strat(l, o.strat_path);
    strat.validate();
    int n = strat.n();
    auto p = load_perversity(o, n);
    return with_field(o, [&]<class K>() {
      auto g = load_coefficients<K>(o, strat);
      DeligneOptions opt{o.reduce, o.retain_stages, exec_of(o)};
      auto build = build_deligne(strat, p, g, opt);
      auto ih = hypercohomology(build.result);
      Json j = {{"field", FieldSpec::parse(o.field).name()},
                {"perversity", perversity_json(p)},
                {"ih", to_json(ih, 0, n)}};
      if (o.retain_stages) {
        Json stages = Json::array();
        for (std::size_t k = 0; k < build.stages.size(); ++k)
          stages.push_back({{"stage", k + 1},
                            {"window", {build.stages[k].lo(), build.stages[k].hi()}},
                            {"total_dim", build.stages[k].total_dim()}});
        j["stages"] = stages;
      }
      std::ostringstream md;
      md << "| degree | IH |\n|---|---|\n";
      for (int d = 0; d <= n; ++d) md << "| " << d << " | " << ih.at(d) << " |\n";
      emit(o, out, j, md.str());
      return 0;
    });
  });
}

int cmd_compare(const JobOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto l = load_complex(o);
    if (o.sigma_path.empty()) throw Error("MissingInput", "--sigma");
    if (o.strat_paths.empty()) throw Error("MissingInput", "--strat");
    const auto& c = *l.complex;
    CellSet sigma = sigma_from_json(c, read_json_file(o.sigma_path));
    std::vector<Stratification> strats;
    for (const auto& path : o.strat_paths) {
      strats.push_back(load_strat(l, path));
      strats.back().validate();
      if (!subject_to(strats.back(), sigma)) throw Error("NotSubjectTo", path);
    }
    int n = c.dim();
    auto p = load_perversity(o, n);
    return with_field(o, [&]<class K>() {
      std::vector<CohomologyResult> ih;
      std::vector<std::vector<CohomologyResult>> stalks;
      for (const auto& s : strats) {
        auto g = load_coefficients<K>(o, s);
        auto b = build_deligne(s, p, g, {o.reduce, false, exec_of(o)});
        ih.push_back(hypercohomology(b.result));
        stalks.push_back(stalk_table(b.result, exec_of(o)));
      }
      Json jobs = Json::array();
      Json first = nullptr;
      for (std::size_t i = 0; i < strats.size(); ++i) {
        jobs.push_back({{"stratification", o.strat_paths[i]}, {"ih", to_json(ih[i], 0, n)}});
        for (int d = 0; d <= n && first.is_null(); ++d)
          if (ih[i].at(d) != ih[0].at(d)) first = {{"job", i}, {"degree", d}};
      }
      bool stalks_equal = true;
      Json stalk_diff = nullptr;
      for (std::size_t i = 1; i < stalks.size() && stalks_equal; ++i)
        for (int id = 0; id < c.size(); ++id)
          if (!(stalks[i][id] == stalks[0][id])) {
            stalks_equal = false;
            stalk_diff = {{"job", i}, {"simplex", c.name(id)}};
            break;
          }
      Json j = {{"field", FieldSpec::parse(o.field).name()},
                {"perversity", perversity_json(p)},
                {"sigma", maximal_names(c, sigma)},
                {"jobs", jobs},
                {"ih_equal", first.is_null()},
                {"first_difference", first},
                {"stalks_equal", stalks_equal},
                {"first_stalk_difference", stalk_diff}};
      std::ostringstream md;
      md << "| stratification | IH |\n|---|---|\n";
      for (std::size_t i = 0; i < strats.size(); ++i)
        md << "| " << o.strat_paths[i] << " | " << list_str(to_json(ih[i], 0, n)) << " |\n";
      md << "\nIH equal: " << (first.is_null() ? "yes" : "no") << ", stalks equal: " << (stalks_equal ? "yes" : "no")
         << "\n";
      emit(o, out, j, md.str());
      return first.is_null() ? 0 : 1;
    });
  });
}

int cmd_axioms(const JobOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto l = load_complex(o);
    auto strat = load_strat(l, o.strat_path);
    strat.validate();
    int n = strat.n();
    auto p = load_perversity(o, n);
    std::vector<Stratification> candidates;
    for (const auto& path : o.candidate_paths) candidates.push_back(load_strat(l, path));
    std::vector<std::string> systems = o.systems;
    if (systems.empty()) systems = {"AX1", "AX1'", "AX1''c", "AX2", "AX2'", "AX2''", "AX3", "AX3''"};
    return with_field(o, [&]<class K>() {
      auto g = load_coefficients<K>(o, strat);
      auto build = build_deligne(strat, p, g, {o.reduce, false, exec_of(o)});
      auto run = [&](const CellSheafComplex<K>& s, Json& reports, std::string& md, bool& all) {
        AxiomContext<K> ctx(s, strat, p, g, exec_of(o));
        for (const auto& sys : systems) {
          auto r = check_system(ctx, sys, candidates);
          all = all && r.pass();
          reports.push_back(to_json(r));
          md += to_markdown(r) + "\n";
        }
      };
      Json deligne = Json::array();
      std::string md = "## Deligne sheaf\n\n";
      bool ok = true;
      run(build.result, deligne, md, ok);
      Json j = {{"field", FieldSpec::parse(o.field).name()}, {"perversity", perversity_json(p)}, {"deligne", deligne}};
      if (o.against_constant) {
        Json constant = Json::array();
        bool ignored = true;
        md += "## Constant sheaf\n\n";
        run(constant_sheaf<K>(l.complex, CellSet::all(l.complex->size()), g.rank), constant, md, ignored);
        j["constant"] = constant;
      }
      emit(o, out, j, md);
      return ok ? 0 : 1;
    });
  });
}

namespace {

struct Row {
  std::string name;
  Json expected;
  Json computed;
  bool match() const { return expected == computed; }
};

Json witness_json(const AxiomReport& r, const std::string& clause) {
  const auto* c = r.clause(clause);
  if (!c || !c->witness) return nullptr;
  const auto& w = *c->witness;
  return {{"simplex", w.simplex}, {"degree", w.degree ? Json(*w.degree) : Json(nullptr)},
          {"observed", to_json(w.observed)}, {"bound", to_json(w.bound)}};
}

template <class K>
std::vector<Row> paper_rows(const JobOptions& o) {
  std::vector<Row> rows;
  DeligneOptions opt{o.reduce, false, exec_of(o)};
  auto ih_of = [&](const Stratification& s, const ExtendedPerversity& p) {
    auto g = LocalSystem<K>::constant(s.open_part(1));
    return hypercohomology(build_deligne(s, p, g, opt).result);
  };
  auto range = [](const CohomologyResult& r, int n) { return to_json(r, 0, n); };

  auto sphere = tetrahedron_boundary();
  auto point = stratify(sphere, {{"v0", 2}});
  auto trivial = Stratification::trivial(sphere);
  auto ultra2 = extend(Perversity::preset("ultra", 2), 2);
  auto zero2 = extend(Perversity::preset("zero", 2), 2);
  rows.push_back({"S^2 > point, ultra: IH", {1, 0, 0}, range(ih_of(point, ultra2), 2)});
  rows.push_back({"S^2 trivial, ultra: IH", {1, 0, 1}, range(ih_of(trivial, ultra2), 2)});
  rows.push_back({"S^2 trivial, zero: IH", {1, 0, 1}, range(ih_of(trivial, zero2), 2)});

  auto octa = octahedron();
  auto equator = stratify(octa, {{"e0", 1}, {"e1", 1}, {"e2", 1}, {"e3", 1},
                                 {"e0,e1", 1}, {"e1,e2", 1}, {"e2,e3", 1}, {"e0,e3", 1}});
  rows.push_back({"S^2 > equator, zero: IH", {2, 0, 0}, range(ih_of(equator, zero2), 2)});

  auto g = LocalSystem<K>::constant(point.open_part(1));
  auto p_sheaf = build_deligne(point, ultra2, g, opt).result;
  auto c_sheaf = constant_sheaf<K>(sphere, CellSet::all(sphere->size()), 1);
  int x = sphere->parse_name("v0");
  rows.push_back({"Deligne stalk at x", {1, 1, 0}, range(cohomology(p_sheaf.stalk(x), false), 2)});
  rows.push_back({"Deligne costalk at x, j <= 2", {0, 0, 0}, range(costalk_cohomology(p_sheaf, x), 2)});
  auto costalks = costalk_table(c_sheaf, exec_of(o));
  int ones = 0;
  for (int id = 0; id < sphere->size(); ++id) ones += costalks[id].at(2) == 1 && costalks[id].at(0) == 0 && costalks[id].at(1) == 0;
  rows.push_back({"constant costalk is F in degree 2 at every simplex", sphere->size(), ones});

  AxiomContext<K> pc(p_sheaf, point, ultra2, g, exec_of(o));
  AxiomContext<K> cc(c_sheaf, point, ultra2, g, exec_of(o));
  auto c2p = check_AX2prime(cc);
  rows.push_back({"AX2 on Deligne sheaf", true, check_AX2(pc).pass()});
  rows.push_back({"AX2 on constant sheaf", true, check_AX2(cc).pass()});
  rows.push_back({"AX2' on Deligne sheaf", true, check_AX2prime(pc).pass()});
  rows.push_back({"AX2' on constant sheaf", false, c2p.pass()});
  rows.push_back({"AX2' constant witness (2'c)",
                  {{"simplex", "v0"}, {"degree", 2}, {"observed", 0}, {"bound", "-inf"}},
                  witness_json(c2p, "2'c")});

  auto sub = extend(Perversity({-1, -1}), 2);
  rows.push_back({"S^2 > point, [-1,-1]: IH", {0, 0, 0}, range(ih_of(point, sub), 2)});
  rows.push_back({"R i_* G over S^2 - point", {1, 0, 0},
                  range(hypercohomology(full_pushforward(g, sphere, exec_of(o))), 2)});

  auto st = suspended_torus();
  auto p011 = extend(Perversity({0, 1, 1}), 3);
  std::vector<Stratification> strats = {stratify(st, {{"a", 3}, {"b", 3}}), stratify(st, {{"a", 3}, {"b", 2}}),
                                        stratify(st, {{"a", 2}, {"b", 2}})};
  std::vector<std::vector<CohomologyResult>> tables;
  for (std::size_t i = 0; i < strats.size(); ++i) {
    auto gs = LocalSystem<K>::constant(strats[i].open_part(1));
    auto s = build_deligne(strats[i], p011, gs, opt).result;
    rows.push_back({"suspended torus, [0,1,1], stratification " + std::to_string(i + 1) + ": IH", {1, 2, 0, 1},
                    range(hypercohomology(s), 3)});
    tables.push_back(stalk_table(s, exec_of(o)));
  }
  bool same = true;
  for (const auto& t : tables)
    for (int id = 0; id < st->size(); ++id) same = same && t[id] == tables[0][id];
  rows.push_back({"suspended torus: stalks agree across stratifications", true, same});
  rows.push_back({"suspended torus: stalk at cone point", {1, 2, 0, 0}, range(tables[0][st->parse_name("a")], 3)});
  auto ultra3 = extend(Perversity::preset("ultra", 3), 3);
  rows.push_back({"suspended torus, ultra: IH", {1, 2, 1, 0}, range(ih_of(strats[0], ultra3), 3)});
  return rows;
}

}  // namespace

int cmd_paper_examples(const JobOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    return with_field(o, [&]<class K>() {
      auto rows = paper_rows<K>(o);
      Json list = Json::array();
      bool all = true;
      std::ostringstream md;
      md << "| example | expected | computed | match |\n|---|---|---|---|\n";
      for (const auto& r : rows) {
        all = all && r.match();
        list.push_back({{"name", r.name}, {"expected", r.expected}, {"computed", r.computed}, {"match", r.match()}});
        md << "| " << r.name << " | " << r.expected.dump() << " | " << r.computed.dump() << " | "
           << (r.match() ? "yes" : "NO") << " |\n";
      }
      Json j = {{"field", FieldSpec::parse(o.field).name()}, {"reduce", o.reduce}, {"examples", list}, {"all_match", all}};
      emit(o, out, j, md.str());
      return all ? 0 : 1;
    });
  });
}

}  // namespace icsheaf::cli
