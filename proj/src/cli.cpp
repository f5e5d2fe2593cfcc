#include "tfg/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "tfg/error.hpp"
#include "tfg/random.hpp"

namespace tfg::cli {

using io::Json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> in;
  std::string out, graph, format = "json";
  std::uint64_t seed = 1;

  std::string op, kind = "cayley", point, clopen, src, dst, support, path, subshift, source, target, code, v;
  long n = 0, m = 0, bound = 16;
  std::size_t max_n = 0, radius = 0, max_radius = 0, depth = 0, expansions = 3;
  bool extend = false, serial = false;
};

// A command produces either JSON or, for DOT dumps, plain text.
struct Output {
  Output(Json j) : json(std::move(j)) {}
  static Output dot(std::string text) {
    Output o{Json()};
    o.text = std::move(text);
    o.is_text = true;
    return o;
  }

  Json json;
  std::string text;
  bool is_text = false;
};

Json load(const std::string& path) {
  if (path.empty()) throw UsageError("missing input file");
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "'");
  return Json::parse(f);
}

const std::string& input(const Options& o, std::size_t k) {
  if (o.in.size() <= k) throw UsageError("expected at least " + std::to_string(k + 1) + " --in file(s)");
  return o.in[k];
}

GraphRef graph_arg(const Options& o) {
  if (o.graph.empty()) throw UsageError("--graph is required");
  return io::read_graph(load(o.graph));
}

Json bools(const char* key, bool b) { return {{key, b}}; }

Output clopen_op(const Options& o) {
  GraphRef g = graph_arg(o);
  ClopenSet a = io::read_clopen(g, load(input(o, 0)));
  if (o.op == "complement") return {io::write_clopen(complement(a))};
  ClopenSet b = io::read_clopen(g, load(input(o, 1)));
  if (o.op == "union") return {io::write_clopen(unite(a, b))};
  if (o.op == "intersect") return {io::write_clopen(intersect(a, b))};
  if (o.op == "difference") return {io::write_clopen(difference(a, b))};
  if (o.op == "equals") return {bools("result", equals(a, b))};
  if (o.op == "is_subset") return {bools("result", is_subset(a, b))};
  if (o.op == "disjoint") return {bools("result", disjoint(a, b))};
  throw UsageError("unknown --op '" + o.op + "'");
}

Output ball_output(const Options& o, bool tree_check) {
  GraphRef g = graph_arg(o);
  Point x = io::read_point(*g, load(o.point));
  auto emit = [&](const auto& ball) -> Output {
    if (tree_check) return {Json{{"is_tree", is_tree(ball)}, {"size", ball.size()}, {"edges", ball.edges.size()}}};
    if (o.format == "dot") return Output::dot(to_dot(*g, ball));
    return {io::write_ball(*g, ball)};
  };
  if (o.kind == "orbital") return emit(orbital_ball(g, x, o.radius));
  if (o.kind == "cayley") return emit(cayley_ball(g, x, o.radius));
  throw UsageError("--kind must be orbital or cayley");
}

SubshiftRef subshift_arg(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError(std::string(flag) + " is required");
  return io::read_subshift(load(path));
}

Output batch_command(const Options& o) { return {run_batch(load(input(o, 0)), o.serial)}; }

void write_output(const Options& o, const Output& result, std::ostream& out) {
  std::string body = result.is_text ? result.text : result.json.dump(2) + "\n";
  if (o.out.empty()) {
    out << body;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw IoError("cannot write '" + o.out + "'");
  f << body;
}

Json error_json(const std::string& code, const std::string& detail) { return {{"error", code}, {"detail", detail}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Options o;
  std::function<Output()> action;

  CLI::App app{"Topological full groups of shifts of finite type and minimal subshifts", "tfgkit"};
  app.require_subcommand(1);
  app.add_option("--in", o.in, "Input JSON file (repeatable; order matters)");
  app.add_option("--out", o.out, "Write the result here instead of standard output");
  app.add_option("--graph", o.graph, "Graph JSON file");
  app.add_option("--seed", o.seed, "Seed for randomized generators");
  app.add_option("--format", o.format, "json or dot (dot only for balls)")->check(CLI::IsMember({"json", "dot"}));

  auto group = [&](const char* name, const char* desc) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto leaf = [&](CLI::App* parent, const char* name, const char* desc, std::function<Output()> fn) {
    CLI::App* l = parent->add_subcommand(name, desc);
    l->fallthrough();
    l->callback([&action, fn = std::move(fn)] { action = fn; });
    return l;
  };

  CLI::App* graph = group("graph", "Graph validation");
  leaf(graph, "validate", "Check irreducibility and that the graph is not a cycle", [&]() -> Output {
    GraphRef g = o.graph.empty() ? io::read_graph(load(input(o, 0))) : graph_arg(o);
    return {Json{{"valid", true}, {"vertices", g->vertex_count()}, {"edges", g->edge_count()}}};
  });

  CLI::App* clopen = group("clopen", "Clopen sets as antichains of cylinders");
  leaf(clopen, "normalize", "Normal form of a set of cylinders", [&]() -> Output {
    return {io::write_clopen(io::read_clopen(graph_arg(o), load(input(o, 0))))};
  });
  leaf(clopen, "op", "Boolean algebra", [&] { return clopen_op(o); })
      ->add_option("--op", o.op, "union|intersect|difference|complement|equals|is_subset|disjoint")
      ->required();

  CLI::App* table = group("table", "Tables of path pairs");
  auto one_table = [&] {
    GraphRef g = graph_arg(o);
    return io::read_table(g, load(input(o, 0)));
  };
  leaf(table, "validate", "Check a table and report its canonical form", [&]() -> Output {
    Table t = canonicalize(one_table());
    return {Json{{"canonical", io::write_table(t)}, {"full_group_element", is_full_group_element(t)}}};
  });
  leaf(table, "canon", "Canonical form", [&]() -> Output { return {io::write_table(canonicalize(one_table()))}; });
  leaf(table, "compose", "First --in after second --in", [&]() -> Output {
    GraphRef g = graph_arg(o);
    Table a = io::read_table(g, load(input(o, 0)));
    Table b = io::read_table(g, load(input(o, 1)));
    return {io::write_table(compose(a, b))};
  });
  leaf(table, "inverse", "Inverse element", [&]() -> Output { return {io::write_table(inverse(one_table()))}; });
  leaf(table, "apply", "Image of --point", [&]() -> Output {
    Table t = one_table();
    Point x = io::read_point(*t.graph(), load(o.point));
    return {io::write_point(*t.graph(), apply(t, x))};
  })->add_option("--point", o.point, "Point JSON file")->required();
  leaf(table, "germ", "Germ at --point", [&]() -> Output {
    Table t = one_table();
    Point x = io::read_point(*t.graph(), load(o.point));
    return {io::write_germ(*t.graph(), germ_at(t, x))};
  })->add_option("--point", o.point, "Point JSON file")->required();
  leaf(table, "support", "Support clopen set", [&]() -> Output { return {io::write_clopen(support(one_table()))}; });
  leaf(table, "eq", "Do two tables define the same element", [&]() -> Output {
    GraphRef g = graph_arg(o);
    return {bools("equal", equals(io::read_table(g, load(input(o, 0))), io::read_table(g, load(input(o, 1)))))};
  });
  leaf(table, "multisection", "Element permuting the cylinders of a multisection", [&]() -> Output {
    return {io::write_table(io::read_multisection_element(graph_arg(o), load(input(o, 0))))};
  });
  leaf(table, "random", "Random full-group element", [&]() -> Output {
    Rng rng(o.seed);
    return {io::write_table(random_full_group_table(graph_arg(o), rng, o.expansions))};
  })->add_option("--expansions", o.expansions, "Leaf splits or transpositions");

  CLI::App* sigma = group("sigma", "Sigma-systems and induced homomorphisms");
  auto system = [&] { return io::read_sigma_system(load(input(o, 0))); };
  leaf(sigma, "validate", "Check a system; report its domain and sources", [&]() -> Output {
    SigmaSystem sys = system();
    Json sources = Json::object();
    for (EdgeId e = 0; e < sys.source_graph()->edge_count(); ++e)
      sources[sys.source_graph()->edge(e).id] = io::write_clopen(sys.sources()[e]);
    return {Json{{"valid", true}, {"domain", io::write_clopen(sys.domain())}, {"sources", sources}}};
  });
  leaf(sigma, "transport", "T_w for a source path --path", [&]() -> Output {
    SigmaSystem sys = system();
    Path w = io::read_path(*sys.source_graph(), load(o.path));
    return {io::write_table(path_transport(sys, w))};
  })->add_option("--path", o.path, "Path JSON file (source graph)")->required();
  auto* sigma_apply = leaf(sigma, "apply", "Induced image of the table in the second --in", [&]() -> Output {
    SigmaSystem sys = system();
    Table g = io::read_table(sys.source_graph(), load(input(o, 1)));
    return {io::write_table(induced_hom(sys, g, o.extend))};
  });
  sigma_apply->add_flag("--extend", o.extend, "Extend by the identity off the domain");
  auto* sigma_code = leaf(sigma, "code", "First --n letters of the coding map at --point", [&]() -> Output {
    SigmaSystem sys = system();
    Point y = io::read_point(*sys.target_graph(), load(o.point));
    Json ids = Json::array();
    for (EdgeId e : coding_map(sys, y, static_cast<std::size_t>(o.n))) ids.push_back(sys.source_graph()->edge(e).id);
    return {Json{{"itinerary", ids}}};
  });
  sigma_code->add_option("--point", o.point, "Point JSON file (target graph)")->required();
  sigma_code->add_option("--n", o.n, "Number of letters")->required()->check(CLI::NonNegativeNumber);
  leaf(sigma, "preimage", "Coding preimage of the cylinder of --path", [&]() -> Output {
    SigmaSystem sys = system();
    Path w = io::read_path(*sys.source_graph(), load(o.path));
    return {io::write_clopen(coding_preimage(sys, w))};
  })->add_option("--path", o.path, "Path JSON file (source graph)")->required();

  CLI::App* homology = group("homology", "Degree-zero homology");
  leaf(homology, "group", "H0 of --graph", [&]() -> Output { return {io::write_group(h0_group(graph_arg(o)))}; });
  leaf(homology, "class", "Class of --clopen in H0", [&]() -> Output {
    GraphRef g = graph_arg(o);
    AbelianGroup h = h0_group(g);
    H0Class c = h0_class(h, io::read_clopen(g, load(o.clopen)));
    Json coords = Json::array();
    for (const auto& x : c.coords) coords.push_back(io::write_integer(x));
    Json res = io::write_group(h);
    res["class"] = coords;
    return {res};
  })->add_option("--clopen", o.clopen, "Clopen JSON file")->required();
  auto* obstruction = leaf(homology, "obstruction", "Can [X_src] map to [support] in H0", [&]() -> Output {
    GraphRef s = io::read_graph(load(o.src));
    GraphRef d = io::read_graph(load(o.dst));
    auto w = embedding_support_obstruction(s, d, io::read_clopen(d, load(o.support)));
    return {Json{{"exists", w.has_value()}, {"witness", w ? io::write_witness(*w) : Json(nullptr)}}};
  });
  obstruction->add_option("--src", o.src, "Source graph")->required();
  obstruction->add_option("--dst", o.dst, "Target graph")->required();
  obstruction->add_option("--support", o.support, "Support clopen (target graph)")->required();
  auto* thompson = leaf(homology, "thompson", "Embedding obstruction for Omega_n into Omega_m", [&]() -> Output {
    if (o.n < 2 || o.m < 2) throw Error(ErrorCode::InvalidArity, "arities must be at least 2");
    GraphRef s = full_shift_graph(static_cast<unsigned>(o.n));
    GraphRef d = full_shift_graph(static_cast<unsigned>(o.m));
    return {bools("exists", embedding_support_obstruction(s, d, ClopenSet::whole(d)).has_value())};
  });
  thompson->add_option("--n", o.n)->required();
  thompson->add_option("--m", o.m)->required();

  CLI::App* metrics = group("metrics", "Growth and complexity");
  leaf(metrics, "complexity", "Path counts p(1..max-n)", [&]() -> Output {
    Json p = Json::array();
    for (const auto& c : complexity_series(graph_arg(o), o.max_n)) p.push_back(io::write_integer(c));
    return {Json{{"p", p}}};
  })->add_option("--max-n", o.max_n)->required();
  for (const char* name : {"ball", "tree-check"}) {
    const bool tree = std::string(name) == "tree-check";
    auto* b = leaf(metrics, name, tree ? "Is the ball a tree" : "Orbital or Cayley ball",
                   [&o, tree] { return ball_output(o, tree); });
    b->add_option("--kind", o.kind, "orbital or cayley");
    b->add_option("--point", o.point, "Point JSON file")->required();
    b->add_option("--radius", o.radius)->required();
  }
  auto* growth = leaf(metrics, "growth", "Maximal orbital ball sizes over the points in --in", [&]() -> Output {
    GraphRef g = graph_arg(o);
    auto pts = io::read_points(*g, load(input(o, 0)));
    auto sizes = o.serial ? growth_table_serial(g, pts, o.max_radius) : growth_table(g, pts, o.max_radius);
    return {Json{{"sizes", sizes}}};
  });
  growth->add_option("--max-radius", o.max_radius)->required();
  growth->add_flag("--serial", o.serial, "Use the serial reference kernel");

  CLI::App* zfull = group("zfull", "Full groups of two-sided subshifts");
  auto cocycle_in = [&](const SubshiftRef& s, std::size_t k) { return io::read_cocycle(s, load(input(o, k))); };
  auto with_subshift = [&](CLI::App* a) { a->add_option("--subshift", o.subshift, "Subshift JSON file")->required(); };
  with_subshift(leaf(zfull, "validate", "Check a cocycle; report it and its inverse", [&]() -> Output {
    CocycleElement g = cocycle_in(subshift_arg(o.subshift, "--subshift"), 0);
    return {Json{{"element", io::write_cocycle(g)}, {"inverse", io::write_cocycle(cocycle_inverse(g))}}};
  }));
  with_subshift(leaf(zfull, "compose", "First --in after second --in", [&]() -> Output {
    SubshiftRef s = subshift_arg(o.subshift, "--subshift");
    return {io::write_cocycle(cocycle_compose(cocycle_in(s, 0), cocycle_in(s, 1)))};
  }));
  auto* zapply = leaf(zfull, "apply", "Image of the two-sided point --point", [&]() -> Output {
    SubshiftRef s = subshift_arg(o.subshift, "--subshift");
    return {io::write_bipoint(cocycle_apply(cocycle_in(s, 0), io::read_bipoint(load(o.point))))};
  });
  with_subshift(zapply);
  zapply->add_option("--point", o.point, "Two-sided point JSON file")->required();
  with_subshift(leaf(zfull, "inverse", "Inverse element", [&]() -> Output {
    return {io::write_cocycle(cocycle_inverse(cocycle_in(subshift_arg(o.subshift, "--subshift"), 0)))};
  }));
  auto* fcheck = leaf(zfull, "factor-check", "Do admissible words map to admissible words", [&]() -> Output {
    BlockCode q = io::read_code(subshift_arg(o.source, "--source"), subshift_arg(o.target, "--target"),
                                load(input(o, 0)));
    FactorCheck r = factor_code_check(q, o.depth ? std::max<std::size_t>(o.depth, 2 * static_cast<std::size_t>(q.radius) + 1) : default_check_depth(q));
    return {Json{{"images_admissible", r.images_admissible}, {"surjectivity_checked", r.surjectivity_checked}}};
  });
  fcheck->add_option("--source", o.source)->required();
  fcheck->add_option("--target", o.target)->required();
  fcheck->add_option("--depth", o.depth, "Source word length to check");
  auto* embed = leaf(zfull, "embed", "rho(g) for the element g in --in", [&]() -> Output {
    SubshiftRef x2 = subshift_arg(o.source, "--source");
    SubshiftRef x1 = subshift_arg(o.target, "--target");
    BlockCode q = io::read_code(x2, x1, load(o.code));
    CocycleElement v = io::read_cocycle(x2, load(o.v));
    return {io::write_cocycle(embed_via_factor(v, q, cocycle_in(x1, 0), o.bound))};
  });
  embed->add_option("--source", o.source, "Subshift X2 carrying v")->required();
  embed->add_option("--target", o.target, "Subshift X1 carrying g")->required();
  embed->add_option("--code", o.code, "Block code X2 -> X1")->required();
  embed->add_option("--v", o.v, "Cocycle v over X2")->required();
  embed->add_option("--bound", o.bound, "Largest |k_g| accepted");

  auto* batch = app.add_subcommand("batch", "Run the requests of the manifest in --in");
  batch->fallthrough();
  batch->add_flag("--serial", o.serial, "Run the requests one at a time");
  batch->callback([&] { action = [&] { return batch_command(o); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Success;
  } catch (const CLI::ParseError& e) {
    out << error_json("UsageError", e.what()).dump(2) << "\n";
    return IoFailure;
  }

  try {
    write_output(o, action(), out);
    return Success;
  } catch (const Error& e) {
    write_output(o, {error_json(std::string(error_name(e.code())), e.detail())}, out);
    return ValidationFailure;
  } catch (const Json::exception& e) {
    out << error_json("ParseError", e.what()).dump(2) << "\n";
  } catch (const IoError& e) {
    out << error_json("IoError", e.what()).dump(2) << "\n";
  } catch (const UsageError& e) {
    out << error_json("UsageError", e.what()).dump(2) << "\n";
  }
  return IoFailure;
}

Json run_batch(const Json& manifest, bool serial) {
  const Json& requests = manifest.at("requests");
  if (!requests.is_array()) throw Json::type_error::create(302, "\"requests\" must be an array", &requests);
  const auto n = static_cast<std::ptrdiff_t>(requests.size());
  std::vector<Json> results(requests.size());

  auto run_one = [&](std::ptrdiff_t i) {
    const Json& req = requests[static_cast<std::size_t>(i)];
    std::vector<std::string> argv;
    bool ok = req.is_object() && req.contains("argv") && req["argv"].is_array();
    if (ok)
      for (const auto& a : req["argv"]) {
        if (!a.is_string()) ok = false;
        else argv.push_back(a.get<std::string>());
      }
    if (ok && !argv.empty() && argv.front() == "batch") ok = false;
    if (!ok) {
      results[i] = {{"exit", IoFailure}, {"error", "MalformedRequest"},
                    {"detail", "a request needs \"argv\": a list of strings, not starting with batch"}};
      return;
    }
    std::ostringstream os;
    const int code = run(argv, os);
    Json output = Json::parse(os.str(), nullptr, false);
    if (output.is_discarded()) output = os.str();
    results[i] = {{"exit", code}, {"output", output}};
  };

  if (serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) run_one(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) run_one(i);
  }
  return {{"results", results}};
}

}  // namespace tfg::cli
