// lpa: command-line front end for the Leavitt path algebra library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lpa/algebra.hpp"
#include "lpa/canonical.hpp"
#include "lpa/hom.hpp"
#include "lpa/module.hpp"
#include "lpa/render.hpp"

using namespace lpa;
using nlohmann::json;

namespace {

struct Options {
  std::string graph;
  std::string special;
  std::string format = "text";
  std::string field;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

AmbientPtr load(const Options& o) {
  GraphSpec spec = parse_graph_spec(slurp(o.graph));
  Graph g = build_graph(spec);
  std::map<std::string, std::string> choice(spec.specials.begin(), spec.specials.end());
  // "--special d" names an edge; "--special u=d" also names its vertex.
  for (const auto& item : split_list(o.special)) {
    if (auto eq = item.find('='); eq != std::string::npos) {
      choice[item.substr(0, eq)] = item.substr(eq + 1);
    } else {
      auto e = g.find_edge(item);
      if (!e) throw Error("unknown edge '" + item + "' in --special");
      choice[g.vertex_name(g.edge(*e).source)] = item;
    }
  }
  std::string field = o.field;
  if (field.empty()) {
    const char* env = std::getenv("LPA_FIELD");
    field = env ? env : "rational";
  }
  return make_ambient(std::move(g), choice, Field::parse(field));
}

std::vector<std::size_t> parse_depths(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(s)) {
    try {
      out.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--depths", "expected a comma-separated list of integers");
    }
  }
  if (out.empty()) throw CLI::ValidationError("--depths", "empty list");
  return out;
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (f == a) return;
  }
  throw CLI::ValidationError("--format", "'" + f + "' is not supported by this command");
}

int cmd_validate(const Options& o, const std::string& erg_file) {
  auto amb = load(o);
  const Graph& g = amb->graph;
  if (!erg_file.empty()) {
    auto r = parse_erg(amb, slurp(erg_file));
    auto rep = validate_erg(r);
    if (o.format == "json") {
      json v = json::array();
      for (const auto& x : rep.violations) v.push_back({{"clause", x.clause}, {"witness", x.witness}, {"message", x.message}});
      std::cout << json{{"valid", rep.ok()}, {"violations", v}}.dump(2) << "\n";
    } else {
      std::cout << (rep.ok() ? "valid\n" : rep.summary());
    }
    return rep.ok() ? 0 : 1;
  }
  auto specials = amb->special.named(g);
  if (o.format == "json") {
    json sp = json::object();
    for (const auto& [v, e] : specials) sp[v] = e;
    std::cout << json{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"special", sp}}.dump(2) << "\n";
  } else {
    std::cout << "vertices " << g.vertex_count() << "\nedges " << g.edge_count() << "\n";
    for (const auto& [v, e] : specials) std::cout << "special " << v << " " << e << "\n";
  }
  return 0;
}

int cmd_basis(const Options& o, std::size_t max_len, const std::string& at, bool count) {
  require_format(o.format, {"text", "json"});
  auto amb = load(o);
  const Graph& g = amb->graph;
  std::optional<VertexId> v;
  if (!at.empty()) {
    v = g.find_vertex(at);
    if (!v) throw Error("unknown vertex '" + at + "'");
  }
  auto paths = enumerate_basis_paths(g, amb->special, max_len, v);
  if (count) {
    std::cout << paths.size() << "\n";
  } else if (o.format == "json") {
    json out = json::array();
    for (const auto& p : paths) out.push_back(format_path(g, p));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& p : paths) std::cout << format_path(g, p) << "\n";
  }
  return 0;
}

int cmd_mul(const Options& o, const std::vector<std::string>& factors, bool reduce) {
  require_format(o.format, {"text", "json"});
  auto amb = load(o);
  AlgebraElement acc = parse_element(amb, factors.front(), reduce);
  for (std::size_t i = 1; i < factors.size(); ++i) acc = acc * parse_element(amb, factors[i], reduce);
  if (o.format == "json") {
    json terms = json::array();
    for (const auto& [p, k] : acc.terms()) terms.push_back({{"path", format_path(amb->graph, p)}, {"coefficient", k.to_string()}});
    std::cout << json{{"result", format_element(acc)}, {"terms", terms}}.dump(2) << "\n";
  } else {
    std::cout << format_element(acc) << "\n";
  }
  return 0;
}

int cmd_erg(const Options& o, const std::string& desc, std::size_t depth) {
  auto amb = load(o);
  auto c = build_canonical(amb, parse_descriptor(*amb, desc), depth);
  if (o.format == "dot") {
    std::cout << emit_dot(c.erg);
  } else if (o.format == "json") {
    std::cout << emit_json(c.erg).dump(2) << "\n";
  } else {
    std::cout << write_erg(c.erg);
  }
  return 0;
}

int cmd_classify(const Options& o, const std::string& erg_file) {
  require_format(o.format, {"text", "json"});
  auto amb = load(o);
  auto r = parse_erg(amb, slurp(erg_file));
  auto rep = validate_erg(r);
  if (!rep.ok()) throw Error("not a representation graph:\n" + rep.summary());
  if (!r.frontier().empty()) throw Error("classify needs a finite graph without frontier");
  json out = json::array();
  for (const auto& comp : erg_components(r)) {
    auto d = classify_finite(erg_restrict(r, comp));
    std::string text = format_descriptor(amb->graph, d);
    if (o.format == "json") {
      out.push_back({{"component", r.vertex_name(comp.front())}, {"size", comp.size()}, {"descriptor", text}});
    } else {
      std::cout << r.vertex_name(comp.front()) << " " << comp.size() << " " << text << "\n";
    }
  }
  if (o.format == "json") std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_act(const Options& o, const std::string& desc, const std::string& erg_file, std::size_t depth,
            const std::string& vertex, const std::string& element, bool reduce) {
  require_format(o.format, {"text", "json"});
  auto amb = load(o);
  std::optional<CanonicalErg> c;
  std::optional<ExtRepGraph> file_graph;
  if (!erg_file.empty()) {
    file_graph = parse_erg(amb, slurp(erg_file));
  } else {
    c = build_canonical(amb, parse_descriptor(*amb, desc), depth);
  }
  const ExtRepGraph& r = file_graph ? *file_graph : c->erg;
  auto w = r.find_vertex(vertex);
  if (!w) throw Error("no vertex '" + vertex + "' in the representation graph");
  auto a = parse_element(amb, element, reduce);
  auto res = act_W(r, ModuleVector::basis(*w), a);
  if (o.format == "json") {
    json out{{"defined", res.defined}};
    if (res.defined) out["result"] = format_vector(r, res.vector);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (res.defined ? format_vector(r, res.vector) : std::string("undefined: the action leaves the truncation"))
              << "\n";
  }
  return res.defined ? 0 : 1;
}

int cmd_check_schur(const Options& o, const std::string& cycle, const std::string& depths) {
  require_format(o.format, {"text", "json"});
  auto amb = load(o);
  auto rep = check_schur(amb, parse_path(amb->graph, cycle), parse_depths(depths));
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& d : rep.depths) {
      json row{{"depth", d.depth},
               {"vertices", d.vertices},
               {"interior", d.interior},
               {"generator", d.generator},
               {"proper", to_string(d.proper)},
               {"certificate", d.certificate},
               {"end_dimension", d.end_dimension},
               {"identity", d.identity},
               {"spine_rows", d.spine_rows},
               {"spine_mismatches", d.spine_mismatches}};
      if (d.every_single_closure_improper) row["every_single_closure_improper"] = *d.every_single_closure_improper;
      rows.push_back(row);
    }
    std::cout << json{{"cycle", rep.cycle},
                      {"all_special", rep.all_special},
                      {"has_exit", rep.has_exit},
                      {"exit", rep.exit_edge},
                      {"distinct_sources", rep.distinct_sources},
                      {"failed_preconditions", rep.failed_preconditions()},
                      {"depths", rows},
                      {"passed", rep.passed()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "cycle " << rep.cycle << "\n";
    std::cout << "all edges special: " << (rep.all_special ? "yes" : "no") << "\n";
    std::cout << "exit: " << (rep.has_exit ? rep.exit_edge + " at position " + std::to_string(rep.exit_position) : "none")
              << "\n";
    std::cout << "distinct sources: " << (rep.distinct_sources ? "yes" : "no") << "\n";
    for (const auto& f : rep.failed_preconditions()) std::cout << "precondition failed: " << f << "\n";
    for (const auto& d : rep.depths) {
      std::cout << "depth " << d.depth << ": vertices " << d.vertices << ", interior " << d.interior;
      if (!d.generator.empty()) std::cout << ", closure of " << d.generator << " proper " << to_string(d.proper);
      if (d.every_single_closure_improper) {
        std::cout << ", every single-vertex closure improper " << (*d.every_single_closure_improper ? "yes" : "no");
      }
      std::cout << ", End dim " << d.end_dimension << (d.identity ? " (identity)" : "") << ", spine table "
                << d.spine_rows - d.spine_mismatches << "/" << d.spine_rows << "\n";
    }
    std::cout << (rep.passed() ? "pass" : "fail") << "\n";
  }
  return rep.passed() ? 0 : 1;
}

int cmd_check_hom(const Options& o, const std::string& from, const std::string& to, const std::string& depths) {
  require_format(o.format, {"text", "json"});
  auto amb = load(o);
  auto a = parse_descriptor(*amb, from);
  auto b = parse_descriptor(*amb, to);
  json rows = json::array();
  for (auto d : parse_depths(depths)) {
    auto m = build_canonical(amb, a, d);
    auto n = build_canonical(amb, b, d);
    auto sol = hom_space(m.erg, n.erg);
    if (o.format == "json") {
      json basis = json::array();
      for (const auto& map : sol.basis) {
        json entries = json::array();
        for (const auto& e : map) {
          entries.push_back({m.erg.vertex_name(e.source), n.erg.vertex_name(e.target), e.value.to_string()});
        }
        basis.push_back(entries);
      }
      rows.push_back({{"depth", d},
                      {"source_interior", sol.source_interior},
                      {"target_interior", sol.target_interior},
                      {"unknowns", sol.unknowns},
                      {"constraints", sol.constraints},
                      {"dimension", sol.dimension},
                      {"basis", basis}});
    } else {
      std::cout << "depth " << d << ": interiors " << sol.source_interior << " -> " << sol.target_interior
                << ", unknowns " << sol.unknowns << ", constraints " << sol.constraints << ", dimension "
                << sol.dimension << "\n";
    }
  }
  if (o.format == "json") std::cout << rows.dump(2) << "\n";
  return 0;
}

int cmd_representatives(const Options& o, std::size_t max_cycle, std::size_t max_period, bool ghostly_only) {
  require_format(o.format, {"text", "json"});
  auto amb = load(o);
  json out = json::array();
  for (const auto& r : representatives(*amb, max_cycle, max_period)) {
    if (ghostly_only && !r.ghostly) continue;
    std::string text = format_descriptor(amb->graph, r.descriptor);
    if (o.format == "json") {
      out.push_back({{"descriptor", text}, {"ghostly", r.ghostly}});
    } else {
      std::cout << text << (r.ghostly ? " ghostly" : "") << "\n";
    }
  }
  if (o.format == "json") std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in Leavitt path algebras and their representation graphs"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "graph spec file")->required()->check(CLI::ExistingFile);
    sub->add_option("--special", o.special, "special edges: e or v=e, comma-separated");
    sub->add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--field", o.field, "rational or gf:<p> (default: $LPA_FIELD, else rational)");
  };

  std::string erg_file, descriptor, vertex, element, at, cycle, depths = "4,5,6", from, to;
  std::size_t depth = 3, max_len = 2, max_cycle = 2, max_period = 2;
  bool count = false, reduce = false, ghostly = false;
  std::vector<std::string> factors;

  auto* validate = app.add_subcommand("validate", "check a graph spec, or an ERG file against it");
  common(validate);
  validate->add_option("--erg", erg_file, "ERG text file")->check(CLI::ExistingFile);

  auto* basis = app.add_subcommand("basis", "enumerate basis paths");
  common(basis);
  basis->add_option("--max-len", max_len, "maximal length");
  basis->add_option("--at", at, "only paths starting at this vertex");
  basis->add_flag("--count", count, "print the number of paths only");

  auto* mul = app.add_subcommand("mul", "multiply elements left to right");
  common(mul);
  mul->add_option("elements", factors, "elements such as '2*d.e* - v'")->required();
  mul->add_flag("--reduce", reduce, "accept arbitrary words and reduce them");

  auto* erg = app.add_subcommand("erg", "build a canonical representation graph");
  common(erg);
  erg->add_option("--descriptor", descriptor, "source:v, cycle:x or inf:(c)^inf[.s]")->required();
  erg->add_option("--depth", depth, "truncation depth");

  auto* classify = app.add_subcommand("classify", "name the components of a finite ERG");
  common(classify);
  classify->add_option("--erg", erg_file, "ERG text file")->required()->check(CLI::ExistingFile);

  auto* act = app.add_subcommand("act", "act on a vertex of a representation graph");
  common(act);
  auto* act_desc = act->add_option("--descriptor", descriptor, "canonical graph to build");
  auto* act_erg = act->add_option("--erg", erg_file, "ERG text file")->check(CLI::ExistingFile);
  act_desc->excludes(act_erg);
  act->add_option("--depth", depth, "truncation depth");
  act->add_option("--vertex", vertex, "vertex name")->required();
  act->add_option("--element", element, "algebra element")->required();
  act->add_flag("--reduce", reduce, "accept arbitrary words and reduce them");

  auto* schur = app.add_subcommand("check-schur", "nonsimple module with one-dimensional End");
  common(schur);
  schur->add_option("--cycle", cycle, "cycle of real edges, e.g. e or a.b")->required();
  schur->add_option("--depths", depths, "comma-separated depths");

  auto* hom = app.add_subcommand("check-hom", "dimension of Hom between two canonical modules");
  common(hom);
  hom->add_option("--from", from, "source descriptor")->required();
  hom->add_option("--to", to, "target descriptor")->required();
  hom->add_option("--depths", depths, "comma-separated depths");

  auto* reps = app.add_subcommand("representatives", "canonical graphs up to isomorphism");
  common(reps);
  reps->add_option("--max-cycle", max_cycle, "maximal cycle length");
  reps->add_option("--max-period", max_period, "maximal period length");
  reps->add_flag("--ghostly", ghostly, "usual representation graphs only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(o, erg_file);
    if (o.format == "dot" && !*erg) throw CLI::ValidationError("--format", "dot is only available for erg");
    if (*basis) return cmd_basis(o, max_len, at, count);
    if (*mul) return cmd_mul(o, factors, reduce);
    if (*erg) return cmd_erg(o, descriptor, depth);
    if (*classify) return cmd_classify(o, erg_file);
    if (*act) {
      if (descriptor.empty() && erg_file.empty()) throw CLI::ValidationError("act", "needs --descriptor or --erg");
      return cmd_act(o, descriptor, erg_file, depth, vertex, element, reduce);
    }
    if (*schur) return cmd_check_schur(o, cycle, depths);
    if (*hom) return cmd_check_hom(o, from, to, depths);
    if (*reps) return cmd_representatives(o, max_cycle, max_period, ghostly);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
