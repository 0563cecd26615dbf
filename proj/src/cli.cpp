#include "chaingeo/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "chaingeo/chain_geometry.hpp"
#include "chaingeo/distant_graph.hpp"
#include "chaingeo/grassmann.hpp"
#include "chaingeo/jordan.hpp"
#include "chaingeo/ring_json.hpp"
#include "chaingeo/ring_spec.hpp"
#include "chaingeo/scene.hpp"
#include "chaingeo/verify.hpp"

namespace chaingeo {

namespace {

using json = nlohmann::json;
using lie::Cycle;

std::string num(double x) {
  if (std::abs(x) < 1e-12) x = 0;  // also avoids "-0"
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string describe(const Cycle& c) {
  if (auto* ci = std::get_if<lie::Circle<double>>(&c)) {
    return "circle center (" + num(ci->center().x()) + ", " + num(ci->center().y()) + ") radius " + num(ci->radius());
  }
  if (auto* p = std::get_if<lie::Point<double>>(&c)) {
    return "point (" + num(p->position.x()) + ", " + num(p->position.y()) + ")";
  }
  if (auto* s = std::get_if<lie::Spear<double>>(&c)) {
    return "spear through (" + num(s->foot().x()) + ", " + num(s->foot().y()) + ") direction (" +
           num(s->direction().x()) + ", " + num(s->direction().y()) + ")";
  }
  return "infinity";
}

json point_json(const FiniteRing& R, const ProjPoint& p) { return json::array({R.label(p.a), R.label(p.b)}); }

std::string set_label(const FiniteRing& R, const std::vector<Elem>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + R.label(s[i]);
  return out + "}";
}

const Cycle& scene_at(const std::vector<Cycle>& scene, int i) {
  if (i < 0 || i >= static_cast<int>(scene.size())) {
    throw Error(ErrorKind::Domain, "cycle index " + std::to_string(i) + " is out of range");
  }
  return scene[i];
}

struct Options {
  bool json = false;
  std::string path;
  std::string spec;
  int i = 0, j = 0;
  bool all_orientations = false;
  std::string svg;
  bool tables = false;
  std::string format = "dot";
  std::string field;
  std::vector<int> points;
  std::string map;
  int n = 0;
};

// ---- lie ----

void lie_coords(const Options& o, std::ostream& out) {
  const auto scene = lie::load_scene(o.path);
  json arr = json::array();
  for (std::size_t k = 0; k < scene.size(); ++k) {
    const auto q = lie::to_pentacyclic(scene[k]).canonical();
    if (o.json) {
      json coords = json::array();
      for (int c = 0; c < 5; ++c) coords.push_back(q[c]);
      arr.push_back({{"index", k}, {"cycle", lie::cycle_to_json(scene[k])}, {"coords", coords}, {"residual", q.residual()}});
    } else {
      out << k << "  " << describe(scene[k]) << "\n   (";
      for (int c = 0; c < 5; ++c) out << (c ? ", " : "") << num(q[c]);
      out << ")  residual " << num(q.residual()) << "\n";
    }
  }
  if (o.json) out << json{{"cycles", arr}}.dump(2) << "\n";
}

void lie_contact(const Options& o, std::ostream& out) {
  const auto scene = lie::load_scene(o.path);
  const Cycle& a = scene_at(scene, o.i);
  const Cycle& b = scene_at(scene, o.j);
  const double form = lie::lie_form<double>(lie::to_pentacyclic(a).normalized(), lie::to_pentacyclic(b).normalized());
  const bool contact = lie::in_contact(a, b);
  if (o.json) {
    out << json{{"i", o.i}, {"j", o.j}, {"contact", contact}, {"form", form}}.dump(2) << "\n";
  } else {
    out << "cycles " << o.i << " and " << o.j << (contact ? " are" : " are not") << " in contact (form " << num(form)
        << ")\n";
  }
}

void lie_apollonius(const Options& o, std::ostream& out) {
  const auto scene = lie::load_scene(o.path);
  if (scene.size() != 3) throw Error(ErrorKind::Domain, "apollonius needs a scene with exactly three cycles");
  std::vector<Cycle> solutions;
  json report;
  if (o.all_orientations) {
    std::array<lie::PlainCircle<double>, 3> plain;
    for (int k = 0; k < 3; ++k) {
      const auto* c = std::get_if<lie::Circle<double>>(&scene[k]);
      if (!c) throw Error(ErrorKind::Domain, "--all-orientations needs three circles");
      plain[k] = {c->center(), std::abs(c->radius())};
    }
    const auto res = lie::apollonius_all_orientations(plain[0], plain[1], plain[2]);
    solutions = res.solutions;
    report = {{"degenerate", res.degenerate}};
  } else {
    const auto res = lie::apollonius(scene[0], scene[1], scene[2]);
    solutions = res.solutions;
    report = {{"solution_space_dim", res.solution_space_dim},
              {"degenerate", res.degenerate},
              {"double_root", res.double_root},
              {"line_on_quadric", res.line_on_quadric},
              {"improper_solutions", res.improper_solutions}};
  }
  if (!o.svg.empty()) {
    std::vector<Cycle> drawn(scene);
    drawn.insert(drawn.end(), solutions.begin(), solutions.end());
    std::vector<std::string> strokes(scene.size(), "black");
    strokes.resize(drawn.size(), "#d62728");
    std::ofstream f(o.svg);
    if (!f) throw Error(ErrorKind::Domain, "cannot write '" + o.svg + "'");
    f << lie::render_svg(drawn, strokes);
  }
  if (o.json) {
    report["solutions"] = lie::scene_to_json(solutions).at("cycles");
    out << report.dump(2) << "\n";
    return;
  }
  out << solutions.size() << " solution" << (solutions.size() == 1 ? "" : "s") << "\n";
  for (const auto& s : solutions) out << "  " << describe(s) << "\n";
  for (const auto& [key, value] : report.items()) {
    if (value.is_boolean() && value.get<bool>()) out << "note: " << key << "\n";
  }
}

// ---- ring / pline ----

void ring_info(const Options& o, std::ostream& out) {
  const auto R = parse_ring(o.spec);
  json summary = ring_summary(R);
  if (o.json) {
    if (o.tables) summary["tables"] = ring_tables(R);
    out << summary.dump(2) << "\n";
    return;
  }
  out << "name         " << R.name() << "\n"
      << "size         " << R.size() << "\n"
      << "units        " << R.units().size() << "\n"
      << "radical      " << jacobson_radical(R).size() << "\n"
      << "commutative  " << yes_no(R.is_commutative()) << "\n"
      << "field        " << yes_no(R.is_field()) << "\n"
      << "local        " << yes_no(R.is_local()) << "\n";
  if (const auto* alg = R.algebra()) {
    out << "algebra      over " << alg->field.name() << ", dimension " << alg->dimension << "\n";
  } else {
    out << "algebra      none\n";
  }
  if (!o.tables) return;
  std::size_t w = 1;
  for (int a = 0; a < R.size(); ++a) w = std::max(w, R.label(a).size());
  for (const char* op : {"+", "*"}) {
    out << "\n" << std::setw(static_cast<int>(w)) << op << " |";
    for (int b = 0; b < R.size(); ++b) out << " " << std::setw(static_cast<int>(w)) << R.label(b);
    out << "\n";
    for (int a = 0; a < R.size(); ++a) {
      out << std::setw(static_cast<int>(w)) << R.label(a) << " |";
      for (int b = 0; b < R.size(); ++b) {
        out << " " << std::setw(static_cast<int>(w)) << R.label(op[0] == '+' ? R.add(a, b) : R.mul(a, b));
      }
      out << "\n";
    }
  }
}

void pline_points(const Options& o, std::ostream& out) {
  const auto R = parse_ring(o.spec);
  const ProjectiveLine line(R);
  if (o.json) {
    json pts = json::array();
    for (const auto& p : line.points()) pts.push_back(point_json(R, p));
    out << json{{"ring", R.name()}, {"points", pts}}.dump(2) << "\n";
    return;
  }
  for (int i = 0; i < line.size(); ++i) out << i << "  " << point_label(R, line.point(i)) << "\n";
}

void pline_graph(const Options& o, std::ostream& out) {
  const auto R = parse_ring(o.spec);
  const ProjectiveLine line(R);
  const auto g = distant_graph(line);
  if (o.json || o.format == "json") {
    out << to_json(R, g).dump(2) << "\n";
  } else {
    out << to_dot(R, g);
  }
}

void pline_radical(const Options& o, std::ostream& out) {
  const auto R = parse_ring(o.spec);
  const ProjectiveLine line(R);
  const auto pts = radical_points(line, distant_graph(line));
  const auto j = jacobson_radical(R);
  if (o.json) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(point_json(R, p));
    json rad = json::array();
    for (Elem e : j) rad.push_back(R.label(e));
    out << json{{"ring", R.name()}, {"points", arr}, {"radical", rad}}.dump(2) << "\n";
    return;
  }
  out << "J(" << R.name() << ") = " << set_label(R, j) << "\n";
  for (const auto& p : pts) out << point_label(R, p) << "\n";
}

// ---- chain ----

void chain_list(const Options& o, std::ostream& out) {
  const auto R = parse_ring(o.spec);
  const auto K = parse_field(o.field);
  const auto& alg = R.require_algebra();
  if (alg.field.name() != K.name()) {
    throw Error(ErrorKind::Domain, R.name() + " is built as an algebra over " + alg.field.name() + ", not " + K.name());
  }
  const ProjectiveLine line(R);
  const auto chains = all_chains(line, distant_graph(line));
  if (o.json) {
    json arr = json::array();
    for (const auto& c : chains) {
      json pts = json::array();
      for (const auto& p : c.points) pts.push_back(point_json(R, p));
      arr.push_back(pts);
    }
    out << json{{"ring", R.name()}, {"field", K.name()}, {"chains", arr}}.dump(2) << "\n";
    return;
  }
  out << chains.size() << " chains of " << alg.field.size() + 1 << " points\n";
  for (const auto& c : chains) {
    for (std::size_t k = 0; k < c.points.size(); ++k) out << (k ? " " : "") << point_label(R, c.points[k]);
    out << "\n";
  }
}

void chain_cross_ratio(const Options& o, std::ostream& out) {
  const auto R = parse_ring(o.spec);
  R.require_algebra();
  const ProjectiveLine line(R);
  if (o.points.size() != 4) throw Error(ErrorKind::Domain, "--points needs four indices");
  std::array<ProjPoint, 4> p;
  for (int k = 0; k < 4; ++k) {
    if (o.points[k] < 0 || o.points[k] >= line.size()) {
      throw Error(ErrorKind::Domain, "point index " + std::to_string(o.points[k]) + " is out of range");
    }
    p[k] = line.point(o.points[k]);
  }
  const auto cr = cross_ratio(R, p[0], p[1], p[2], p[3]);
  const bool in_k = cr.affine && meets_field(R, cr);
  if (o.json) {
    json cls = json::array();
    for (Elem e : cr.conjugacy_class) cls.push_back(R.label(e));
    json pts = json::array();
    for (const auto& q : p) pts.push_back(point_json(R, q));
    out << json{{"points", pts}, {"affine", cr.affine}, {"class", cls}, {"meets_field", in_k}}.dump(2) << "\n";
    return;
  }
  if (!cr.affine) {
    out << "cross ratio is not affine\n";
    return;
  }
  out << "cross ratio class " << set_label(R, cr.conjugacy_class) << "\n"
      << "meets " << R.require_algebra().field.name() << ": " << yes_no(in_k) << "\n";
}

ElementMap read_map(const FiniteRing& R, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Domain, "cannot open map file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, "malformed map JSON: " + std::string(e.what()));
  }
  if (j.is_object() && j.contains("builtin")) {
    const auto name = j.at("builtin").get<std::string>();
    if (name == "identity") return identity_map(R);
    if (name == "transpose") return transpose_map(R);
    throw Error(ErrorKind::Domain, "unknown builtin map '" + name + "'");
  }
  const json& arr = j.is_object() && j.contains("map") ? j.at("map") : j;
  if (!arr.is_array()) throw Error(ErrorKind::Parse, "map must be an array or {\"map\": [...]}");
  std::vector<Elem> table;
  for (const auto& v : arr) {
    if (v.is_number_integer()) {
      const auto x = v.get<long>();
      if (x < 0 || x >= R.size()) throw Error(ErrorKind::Domain, "map value " + std::to_string(x) + " is out of range");
      table.push_back(static_cast<Elem>(x));
    } else if (v.is_string()) {
      const auto e = R.parse_label(v.get<std::string>());
      if (!e) throw Error(ErrorKind::Parse, "unknown element '" + v.get<std::string>() + "' of " + R.name());
      table.push_back(*e);
    } else {
      throw Error(ErrorKind::Parse, "map entries must be indices or element labels");
    }
  }
  return element_map(R, R, std::move(table));
}

void chain_jordan_check(const Options& o, std::ostream& out) {
  const auto R = parse_ring(o.spec);
  const auto f = read_map(R, o.map);
  const bool jordan = is_jordan_isomorphism(f);
  json rep = {{"ring", R.name()},
              {"jordan", jordan},
              {"automorphism", is_algebra_isomorphism(f)},
              {"antiautomorphism", is_algebra_antiisomorphism(f)},
              {"induced", nullptr}};
  if (jordan) {
    const ProjectiveLine line(R);
    const auto g = distant_graph(line);
    const auto pm = jordan_induced_map(f, line, line);
    json induced = {{"map", pm.image},
                    {"bijective", is_bijection(pm, line.size())},
                    {"preserves_distance", preserves_distance(pm, g, g)},
                    {"chains_onto_chains", nullptr}};
    if (R.algebra() && line.size() <= kChainBudget) {
      std::vector<std::vector<int>> chains;
      for (const auto& c : all_chains(line, g)) chains.push_back(chain_indices(line, c));
      induced["chains_onto_chains"] = maps_chains_onto_chains(pm, chains, chains);
    }
    rep["induced"] = induced;
  }
  if (o.json) {
    out << rep.dump(2) << "\n";
    return;
  }
  out << "Jordan isomorphism   " << yes_no(jordan) << "\n"
      << "automorphism         " << yes_no(rep["automorphism"].get<bool>()) << "\n"
      << "antiautomorphism     " << yes_no(rep["antiautomorphism"].get<bool>()) << "\n";
  if (!jordan) return;
  const auto& ind = rep["induced"];
  out << "induced map          ";
  for (std::size_t k = 0; k < ind["map"].size(); ++k) out << (k ? " " : "") << ind["map"][k].get<int>();
  out << "\n"
      << "bijective            " << yes_no(ind["bijective"].get<bool>()) << "\n"
      << "preserves distance   " << yes_no(ind["preserves_distance"].get<bool>()) << "\n"
      << "chains onto chains   "
      << (ind["chains_onto_chains"].is_null() ? "not checked" : yes_no(ind["chains_onto_chains"].get<bool>())) << "\n";
}

// ---- grassmann / verify ----

void grassmann_cmd(const Options& o, std::ostream& out) {
  const auto K = parse_field(o.field);
  const auto rep = grassmann_check(K, o.n);
  if (o.json) {
    out << json{{"n", rep.n},
                {"field", rep.field},
                {"points", rep.points},
                {"subspaces", rep.subspaces},
                {"injective", rep.injective},
                {"surjective", rep.surjective},
                {"distant_pairs", rep.distant_pairs},
                {"complementary_pairs", rep.complementary_pairs},
                {"distant_iff_complementary", rep.distant_iff_complementary},
                {"chains", rep.chains},
                {"chains_complementary", rep.chains_complementary}}
               .dump(2)
        << "\n";
    return;
  }
  out << "P(M" << rep.n << "(" << rep.field << ")) -> " << rep.n << "-subspaces of " << rep.field << "^" << 2 * rep.n
      << "\n"
      << "points                     " << rep.points << "\n"
      << "subspaces                  " << rep.subspaces << "\n"
      << "injective                  " << yes_no(rep.injective) << "\n"
      << "surjective                 " << yes_no(rep.surjective) << "\n"
      << "distant pairs              " << rep.distant_pairs << "\n"
      << "complementary pairs        " << rep.complementary_pairs << "\n"
      << "distant iff complementary  " << yes_no(rep.distant_iff_complementary) << "\n"
      << "chains                     " << rep.chains << "\n"
      << "chains complementary       " << yes_no(rep.chains_complementary) << "\n";
}

int verify_all(const Options& o, std::ostream& out) {
  const auto results = run_all();
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  if (o.json) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(to_json(r));
    out << json{{"checks", arr}, {"passed", ok}}.dump(2) << "\n";
  } else {
    out << format_report(results);
    out << (ok ? "all checks passed\n" : "some checks FAILED\n");
  }
  return ok ? kExitOk : kExitDomainError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie circle geometry and chain geometries over finite rings", "chaingeo"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");

  auto* lie = app.add_subcommand("lie", "Oriented circles, contact and the Apollonius problem");
  lie->require_subcommand(1);
  auto* coords = lie->add_subcommand("coords", "Pentacyclic coordinates of a scene");
  coords->add_option("scene", o.path, "Scene JSON file")->required();
  auto* contact = lie->add_subcommand("contact", "Contact test for two cycles of a scene");
  contact->add_option("scene", o.path, "Scene JSON file")->required();
  contact->add_option("--i", o.i, "First cycle index")->required();
  contact->add_option("--j", o.j, "Second cycle index")->required();
  auto* apo = lie->add_subcommand("apollonius", "Cycles touching the three cycles of a scene");
  apo->add_option("scene", o.path, "Scene JSON file")->required();
  apo->add_flag("--all-orientations", o.all_orientations, "Treat inputs as unoriented circles");
  apo->add_option("--svg", o.svg, "Write a drawing of inputs and solutions");

  auto* ring = app.add_subcommand("ring", "Finite rings");
  ring->require_subcommand(1);
  auto* info = ring->add_subcommand("info", "Ring summary");
  info->add_option("spec", o.spec, "Ring specification, e.g. \"GF(2)[e]\"")->required();
  info->add_flag("--tables", o.tables, "Also print the operation tables");

  auto* pline = app.add_subcommand("pline", "Projective lines and distant graphs");
  pline->require_subcommand(1);
  auto* pts = pline->add_subcommand("points", "Points of the projective line");
  pts->add_option("spec", o.spec, "Ring specification")->required();
  auto* graph = pline->add_subcommand("graph", "Distant graph");
  graph->add_option("spec", o.spec, "Ring specification")->required();
  graph->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  auto* radical = pline->add_subcommand("radical", "Points with the neighbourhood of R(1,0)");
  radical->add_option("spec", o.spec, "Ring specification")->required();

  auto* chain = app.add_subcommand("chain", "Chain geometries");
  chain->require_subcommand(1);
  auto* list = chain->add_subcommand("list", "All chains");
  list->add_option("spec", o.spec, "Ring specification")->required();
  list->add_option("--field", o.field, "Embedded field, e.g. GF(2)")->required();
  auto* cr = chain->add_subcommand("cross-ratio", "Cross ratio of four points");
  cr->add_option("spec", o.spec, "Ring specification")->required();
  cr->add_option("--points", o.points, "Four point indices i,j,k,l")->required()->delimiter(',')->expected(4);
  auto* jc = chain->add_subcommand("jordan-check", "Check a Jordan map and its induced point map");
  jc->add_option("spec", o.spec, "Ring specification")->required();
  jc->add_option("--map", o.map, "Map JSON file")->required();

  auto* grass = app.add_subcommand("grassmann", "Projective lines over matrix rings as Grassmannians");
  grass->require_subcommand(1);
  auto* gcheck = grass->add_subcommand("check", "Compare distance and complementarity");
  gcheck->add_option("--n", o.n, "Matrix size")->required();
  gcheck->add_option("--field", o.field, "Field, e.g. GF(2)")->required();

  auto* verify = app.add_subcommand("verify", "Built-in verification suite");
  verify->require_subcommand(1);
  auto* vall = verify->add_subcommand("all", "Run every check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (coords->parsed()) lie_coords(o, out);
    else if (contact->parsed()) lie_contact(o, out);
    else if (apo->parsed()) lie_apollonius(o, out);
    else if (info->parsed()) ring_info(o, out);
    else if (pts->parsed()) pline_points(o, out);
    else if (graph->parsed()) pline_graph(o, out);
    else if (radical->parsed()) pline_radical(o, out);
    else if (list->parsed()) chain_list(o, out);
    else if (cr->parsed()) chain_cross_ratio(o, out);
    else if (jc->parsed()) chain_jordan_check(o, out);
    else if (gcheck->parsed()) grassmann_cmd(o, out);
    else if (vall->parsed()) return verify_all(o, out);
    return kExitOk;
  } catch (const std::exception& e) {
    std::string kind = "Internal";
    if (const auto* ce = dynamic_cast<const Error*>(&e)) kind = error_name(ce->kind());
    else if (dynamic_cast<const json::exception*>(&e)) kind = "Parse";
    if (o.json) {
      out << json{{"error", {{"kind", kind}, {"message", e.what()}}}}.dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return kExitDomainError;
  }
}

}  // namespace chaingeo
