#include "tfg/json_io.hpp"

#include "tfg/error.hpp"

namespace tfg::io {

GraphRef read_graph(const Json& j) {
  std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
  std::vector<EdgeSpec> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at("id").get<std::string>(), e.at("from").get<std::string>(), e.at("to").get<std::string>()});
  return validate_graph(DirectedGraph(std::move(vertices), edges));
}

Json write_graph(const DirectedGraph& g) {
  Json vertices = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.vertex_name(v));
  Json edges = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    edges.push_back({{"id", g.edge(e).id}, {"from", g.vertex_name(g.edge(e).from)}, {"to", g.vertex_name(g.edge(e).to)}});
  return {{"vertices", vertices}, {"edges", edges}};
}

Path read_path(const DirectedGraph& g, const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.starts_with("e@")) return path_from_ids(g, {}, s.substr(2));
    std::vector<std::string> ids;
    if (s.find('.') != std::string::npos) {
      std::size_t start = 0;
      for (std::size_t dot; (dot = s.find('.', start)) != std::string::npos; start = dot + 1)
        ids.push_back(s.substr(start, dot - start));
      ids.push_back(s.substr(start));
    } else {
      for (char c : s) ids.emplace_back(1, c);
    }
    return path_from_ids(g, ids);
  }
  std::optional<std::string> origin;
  if (j.contains("origin")) origin = j.at("origin").get<std::string>();
  return path_from_ids(g, j.at("edges").get<std::vector<std::string>>(), origin);
}

Json write_path(const DirectedGraph& g, const Path& p) {
  Json edges = Json::array();
  for (EdgeId e : p.edges) edges.push_back(g.edge(e).id);
  return {{"edges", edges}, {"origin", g.vertex_name(p.origin)}};
}

ClopenSet read_clopen(const GraphRef& g, const Json& j) {
  std::vector<Path> paths;
  for (const auto& p : j.at("paths")) paths.push_back(read_path(*g, p));
  return ClopenSet::normalize(g, std::move(paths));
}

Json write_clopen(const ClopenSet& c) {
  Json paths = Json::array();
  for (const auto& p : c.paths()) paths.push_back(write_path(*c.graph(), p));
  return {{"paths", paths}};
}

Point read_point(const DirectedGraph& g, const Json& j) {
  Path cycle = read_path(g, j.at("cycle"));
  Path prefix = j.contains("prefix") ? read_path(g, j.at("prefix")) : empty_path(cycle.origin);
  return Point::make(g, std::move(prefix), std::move(cycle));
}

Json write_point(const DirectedGraph& g, const Point& x) {
  return {{"prefix", write_path(g, x.prefix())}, {"cycle", write_path(g, x.cycle())}};
}

std::vector<Point> read_points(const DirectedGraph& g, const Json& j) {
  std::vector<Point> out;
  for (const auto& p : j.is_array() ? j : j.at("points")) out.push_back(read_point(g, p));
  return out;
}

Table read_table(const GraphRef& g, const Json& j) {
  std::vector<PathPair> pairs;
  for (const auto& p : j.at("pairs")) pairs.push_back({read_path(*g, p.at("v")), read_path(*g, p.at("w"))});
  return Table::from_pairs(g, std::move(pairs));
}

Json write_table(const Table& t) {
  Json pairs = Json::array();
  for (const auto& p : t.pairs())
    pairs.push_back({{"v", write_path(*t.graph(), p.v)}, {"w", write_path(*t.graph(), p.w)}});
  return {{"pairs", pairs}};
}

Json write_germ(const DirectedGraph& g, const Germ& germ) {
  return {{"point", write_point(g, germ.base)}, {"v", write_path(g, germ.v)}, {"w", write_path(g, germ.w)}};
}

Table read_multisection_element(const GraphRef& g, const Json& j) {
  std::vector<Path> components;
  for (const auto& p : j.at("components")) components.push_back(read_path(*g, p));
  Multisection m(g, std::move(components));
  std::vector<std::size_t> sigma;
  for (long s : j.at("sigma").get<std::vector<long>>()) {
    if (s < 1) throw Error(ErrorCode::InvalidMultisection, "permutation entries are 1-based");
    sigma.push_back(static_cast<std::size_t>(s - 1));
  }
  return multisection_element(m, sigma);
}

SigmaSystem read_sigma_system(const Json& j) {
  GraphRef src = read_graph(j.at("source_graph"));
  GraphRef dst = read_graph(j.at("target_graph"));
  const Json& tables = j.at("tables");
  if (tables.size() != src->edge_count())
    throw Error(ErrorCode::InvalidSystem, "need exactly one table per source edge");
  std::vector<Table> ts;
  for (EdgeId e = 0; e < src->edge_count(); ++e) {
    const std::string& id = src->edge(e).id;
    if (!tables.contains(id)) throw Error(ErrorCode::InvalidSystem, "no table for source edge '" + id + "'");
    ts.push_back(read_table(dst, tables.at(id)));
  }
  return SigmaSystem::validate(src, dst, std::move(ts));
}

Json write_sigma_system(const SigmaSystem& sys) {
  Json tables = Json::object();
  for (EdgeId e = 0; e < sys.source_graph()->edge_count(); ++e)
    tables[sys.source_graph()->edge(e).id] = write_table(sys.table(e));
  return {{"source_graph", write_graph(*sys.source_graph())},
          {"target_graph", write_graph(*sys.target_graph())},
          {"tables", tables}};
}

Json write_integer(const BigInt& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json write_group(const AbelianGroup& a) {
  Json torsion = Json::array();
  for (const auto& d : a.torsion()) torsion.push_back(write_integer(d));
  return {{"rank", a.rank()}, {"torsion", torsion}};
}

Json write_witness(const HomWitness& w) {
  Json images = Json::array();
  for (const auto& img : w.images) {
    Json row = Json::array();
    for (const auto& c : img) row.push_back(write_integer(c));
    images.push_back(row);
  }
  return images;
}

namespace {

std::string label(const DirectedGraph& g, const Point& x) { return to_string(g, x); }
std::string label(const DirectedGraph& g, const Germ& x) {
  return "(" + to_string(g, x.v) + ", " + to_string(g, x.w) + ")";
}

}  // namespace

template <class Vertex>
Json write_ball(const DirectedGraph& g, const LabeledBall<Vertex>& ball) {
  Json vertices = Json::array();
  for (std::size_t i = 0; i < ball.vertices.size(); ++i)
    vertices.push_back({{"index", i}, {"depth", ball.depth[i]}, {"label", label(g, ball.vertices[i])}});
  Json edges = Json::array();
  for (const auto& e : ball.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"generator", g.edge(e.generator).id}});
  return {{"radius", ball.radius}, {"size", ball.size()}, {"vertices", vertices}, {"edges", edges}};
}

template Json write_ball(const DirectedGraph&, const LabeledBall<Point>&);
template Json write_ball(const DirectedGraph&, const LabeledBall<Germ>&);

namespace {

char letter(const std::string& s) {
  if (s.size() != 1) throw Error(ErrorCode::InvalidSubshift, "letters must be single characters, got '" + s + "'");
  return s[0];
}

}  // namespace

SubshiftRef read_subshift(const Json& j) {
  std::string alphabet;
  for (const auto& a : j.at("alphabet")) alphabet += letter(a.get<std::string>());
  if (j.contains("substitution")) {
    if (j.contains("forbidden")) throw Error(ErrorCode::InvalidSubshift, "give either forbidden words or a substitution");
    std::map<char, Word> rules;
    for (const auto& [k, v] : j.at("substitution").items()) rules[letter(k)] = v.get<std::string>();
    return Subshift::substitution(alphabet, std::move(rules));
  }
  std::vector<Word> forbidden;
  if (j.contains("forbidden")) forbidden = j.at("forbidden").get<std::vector<Word>>();
  return Subshift::sft(alphabet, std::move(forbidden));
}

Json write_subshift(const Subshift& s) {
  Json alphabet = Json::array();
  for (char c : s.alphabet()) alphabet.push_back(std::string(1, c));
  Json out = {{"alphabet", alphabet}};
  if (s.is_sft()) {
    out["forbidden"] = s.forbidden();
  } else {
    Json rules = Json::object();
    for (const auto& [c, w] : s.rules()) rules[std::string(1, c)] = w;
    out["substitution"] = rules;
  }
  return out;
}

CocycleElement read_cocycle(const SubshiftRef& s, const Json& j) {
  std::vector<CocyclePiece> pieces;
  for (const auto& p : j.at("pieces"))
    pieces.push_back({p.at("window").get<Word>(), p.value("offset", 0L), p.at("k").get<long>()});
  return cocycle_validate(s, pieces);
}

Json write_cocycle(const CocycleElement& g) {
  Json pieces = Json::array();
  for (const auto& p : g.pieces()) pieces.push_back({{"window", p.window}, {"offset", p.offset}, {"k", p.k}});
  return {{"pieces", pieces}};
}

BlockCode read_code(const SubshiftRef& source, const SubshiftRef& target, const Json& j) {
  BlockCode q;
  q.radius = j.at("radius").get<int>();
  if (q.radius < 0) throw Error(ErrorCode::RuleIncomplete, "negative radius");
  for (const auto& [w, c] : j.at("rule").items()) q.rule[w] = letter(c.get<std::string>());
  q.source = source;
  q.target = target;
  return q;
}

BiPoint read_bipoint(const Json& j) {
  return BiPoint::make(j.at("left").get<Word>(), j.value("center", Word{}), j.at("right").get<Word>(),
                       j.value("start", 0L));
}

Json write_bipoint(const BiPoint& x) {
  return {{"left", x.left()}, {"center", x.center()}, {"right", x.right()}, {"start", x.start()}};
}

}  // namespace tfg::io
