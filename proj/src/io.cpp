#include "wtreelab/io.hpp"

#include <json.hpp>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wtreelab {

using nlohmann::json;

namespace {

std::string join_names(const std::vector<std::string>& names, const std::vector<int>& indices,
                       const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out += sep;
    out += names[static_cast<std::size_t>(indices[i])];
  }
  return out;
}

}  // namespace

WeightedTree GraphDocument::to_tree() const {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<WeightedEdge> tree_edges;
  tree_edges.reserve(edges.size());
  for (const auto& [u, v, w] : edges) {
    tree_edges.push_back({index.at(u), index.at(v), w});
  }
  return WeightedTree(vertices, std::move(tree_edges));
}

GraphDocument GraphDocument::from_tree(const WeightedTree& tree) {
  GraphDocument doc;
  doc.vertices = tree.names();
  for (const WeightedEdge& e : tree.edges()) {
    doc.edges.emplace_back(tree.names()[static_cast<std::size_t>(e.u)],
                           tree.names()[static_cast<std::size_t>(e.v)], e.w);
  }
  return doc;
}

GraphFormat graph_format_from_extension(const std::string& path) {
  auto dot = path.rfind('.');
  if (dot != std::string::npos && path.substr(dot) == ".json") return GraphFormat::json;
  return GraphFormat::edgelist;
}

namespace {

GraphDocument parse_graph_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), "document");
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw ParseError("expected an object with 'vertices' and 'edges'", "document");
  }
  GraphDocument out;
  std::set<std::string> seen;
  const json& vs = doc["vertices"];
  if (!vs.is_array()) throw ParseError("'vertices' must be an array", "vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string()) throw ParseError("vertex name must be a string", "vertices[" + std::to_string(i) + "]");
    std::string name = vs[i].get<std::string>();
    if (!seen.insert(name).second) {
      throw ParseError("duplicate vertex '" + name + "'", "vertices[" + std::to_string(i) + "]");
    }
    out.vertices.push_back(std::move(name));
  }
  const json& es = doc["edges"];
  if (!es.is_array()) throw ParseError("'edges' must be an array", "edges");
  std::set<std::pair<std::string, std::string>> edge_seen;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const json& e = es[i];
    std::string loc = "edges[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("w")) {
      throw ParseError("edge needs fields u, v, w", loc);
    }
    if (!e["u"].is_string() || !e["v"].is_string()) throw ParseError("edge endpoints must be strings", loc);
    std::string u = e["u"].get<std::string>();
    std::string v = e["v"].get<std::string>();
    if (!seen.count(u)) throw ParseError("unknown vertex '" + u + "'", loc + ".u");
    if (!seen.count(v)) throw ParseError("unknown vertex '" + v + "'", loc + ".v");
    if (!e["w"].is_number_integer()) throw ParseError("weight must be an integer", loc + ".w");
    Weight w = e["w"].get<Weight>();
    if (w < 1) throw ParseError("weight must be positive", loc + ".w");
    auto key = std::minmax(u, v);
    if (!edge_seen.insert({key.first, key.second}).second) {
      throw ParseError("duplicate edge " + u + "-" + v, loc);
    }
    out.edges.emplace_back(std::move(u), std::move(v), w);
  }
  return out;
}

GraphDocument parse_graph_edgelist(const std::string& text) {
  GraphDocument out;
  std::set<std::string> seen;
  std::set<std::pair<std::string, std::string>> edge_seen;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    std::string loc = "line " + std::to_string(line_no);
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    std::string u, v, w_text;
    if (!(fields >> u)) continue;  // blank or comment-only line
    if (!(fields >> v >> w_text)) throw ParseError("expected 'u v w'", loc);
    std::string extra;
    if (fields >> extra) throw ParseError("trailing tokens after 'u v w'", loc);
    Weight w = 0;
    try {
      std::size_t used = 0;
      w = std::stoll(w_text, &used);
      if (used != w_text.size()) throw std::invalid_argument(w_text);
    } catch (const std::exception&) {
      throw ParseError("weight '" + w_text + "' is not an integer", loc);
    }
    if (w < 1) throw ParseError("weight must be positive", loc);
    if (u == v) throw ParseError("loop edge at '" + u + "'", loc);
    for (const std::string& name : {u, v}) {
      if (seen.insert(name).second) out.vertices.push_back(name);
    }
    auto key = std::minmax(u, v);
    if (!edge_seen.insert({key.first, key.second}).second) {
      throw ParseError("duplicate edge " + u + "-" + v, loc);
    }
    out.edges.emplace_back(u, v, w);
  }
  if (out.vertices.empty()) throw ParseError("no edges found", "document");
  return out;
}

}  // namespace

GraphDocument parse_graph(const std::string& text, GraphFormat format) {
  GraphDocument doc =
      format == GraphFormat::json ? parse_graph_json(text) : parse_graph_edgelist(text);
  try {
    doc.to_tree();  // connectivity / acyclicity / simple-tree validation
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), "document");
  }
  return doc;
}

namespace {

json graph_to_json(const GraphDocument& doc) {
  json edges = json::array();
  for (const auto& [u, v, w] : doc.edges) edges.push_back({{"u", u}, {"v", v}, {"w", w}});
  return json{{"vertices", doc.vertices}, {"edges", edges}};
}

GraphDocument graph_from_json(const json& j) { return parse_graph_json(j.dump()); }

json analysis_to_json(const TreeAnalysis& analysis, const std::vector<std::string>& names) {
  auto name_list = [&](const std::vector<int>& indices) {
    json arr = json::array();
    for (int i : indices) arr.push_back(names[static_cast<std::size_t>(i)]);
    return arr;
  };
  json per_root = json::array();
  for (const RootAnalysis& ra : analysis.per_root) {
    json edges = json::array();
    for (auto [u, p] : ra.special_edges) {
      edges.push_back(json::array({names[static_cast<std::size_t>(u)], names[static_cast<std::size_t>(p)]}));
    }
    per_root.push_back({{"root", names[static_cast<std::size_t>(ra.root)]},
                        {"increasing", ra.increasing},
                        {"strictly_increasing", ra.strictly_increasing},
                        {"special_vertices", name_list(ra.special_vertices)},
                        {"special_edges", edges},
                        {"s", ra.s}});
  }
  json out{{"per_root", per_root},
           {"roots", name_list(analysis.roots)},
           {"is_increasing", analysis.is_increasing},
           {"is_strictly_increasing", analysis.is_strictly_increasing},
           {"d_max", analysis.d_max},
           {"mu", analysis.mu},
           {"a_set", name_list(analysis.a_set)},
           {"bipartition", {{"u", name_list(analysis.side_u)}, {"v", name_list(analysis.side_v)}}}};
  if (analysis.s_min) {
    out["s_min"] = *analysis.s_min;
  } else {
    out["s_min"] = nullptr;
  }
  return out;
}

TreeAnalysis analysis_from_json(const json& j, const std::vector<std::string>& names) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
  auto index_list = [&](const json& arr) {
    std::vector<int> out;
    for (const json& name : arr) out.push_back(index.at(name.get<std::string>()));
    return out;
  };
  TreeAnalysis analysis;
  for (const json& r : j.at("per_root")) {
    RootAnalysis ra;
    ra.root = index.at(r.at("root").get<std::string>());
    ra.increasing = r.at("increasing").get<bool>();
    ra.strictly_increasing = r.at("strictly_increasing").get<bool>();
    ra.special_vertices = index_list(r.at("special_vertices"));
    for (const json& e : r.at("special_edges")) {
      ra.special_edges.emplace_back(index.at(e[0].get<std::string>()), index.at(e[1].get<std::string>()));
    }
    ra.s = r.at("s").get<int>();
    analysis.per_root.push_back(std::move(ra));
  }
  analysis.roots = index_list(j.at("roots"));
  analysis.is_increasing = j.at("is_increasing").get<bool>();
  analysis.is_strictly_increasing = j.at("is_strictly_increasing").get<bool>();
  if (!j.at("s_min").is_null()) analysis.s_min = j.at("s_min").get<int>();
  analysis.d_max = j.at("d_max").get<Weight>();
  analysis.mu = j.at("mu").get<std::vector<Weight>>();
  analysis.a_set = index_list(j.at("a_set"));
  analysis.side_u = index_list(j.at("bipartition").at("u"));
  analysis.side_v = index_list(j.at("bipartition").at("v"));
  return analysis;
}

json table_to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, rank] : table.entries) {
    entries.push_back({{"i", key.first}, {"multidegree", key.second}, {"rank", rank}});
  }
  json total = json::array();
  for (const auto& [i, sum] : table.total()) total.push_back(json::array({i, sum}));
  return json{{"ring_dim", table.ring_dim}, {"entries", entries},      {"pd", table.pd()},
              {"depth", table.depth()},     {"reg_quotient", table.reg_quotient()},
              {"reg_ideal", table.reg_ideal()}, {"total", total}};
}

BettiTable table_from_json(const json& j) {
  BettiTable table;
  table.ring_dim = j.at("ring_dim").get<int>();
  for (const json& e : j.at("entries")) {
    table.entries[{e.at("i").get<int>(), e.at("multidegree").get<std::vector<Exponent>>()}] =
        e.at("rank").get<std::int64_t>();
  }
  return table;
}

json verdict_to_json(const Verdict& v) {
  json witness = json::array();
  for (const auto& [key, value] : v.witness) witness.push_back(json::array({key, value}));
  json metrics = json::object();
  for (const auto& [key, value] : v.metrics) metrics[key] = value;
  return json{{"claim", v.claim},   {"instance", v.instance}, {"status", to_string(v.status)},
              {"detail", v.detail}, {"witness", witness},     {"metrics", metrics}};
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.claim = j.at("claim").get<std::string>();
  v.instance = j.at("instance").get<std::string>();
  std::string status = j.at("status").get<std::string>();
  if (status == "holds") {
    v.status = VerdictStatus::holds;
  } else if (status == "counterexample") {
    v.status = VerdictStatus::counterexample;
  } else if (status == "skipped_resource") {
    v.status = VerdictStatus::skipped_resource;
  } else {
    throw ParseError("unknown verdict status '" + status + "'", "verdicts");
  }
  v.detail = j.at("detail").get<std::string>();
  for (const json& w : j.at("witness")) v.witness.emplace_back(w[0].get<std::string>(), w[1].get<std::string>());
  for (auto it = j.at("metrics").begin(); it != j.at("metrics").end(); ++it) {
    v.metrics[it.key()] = it.value().get<std::int64_t>();
  }
  return v;
}

json campaign_to_json(const Campaign& c) {
  json verdicts = json::array();
  for (const Verdict& v : c.verdicts) verdicts.push_back(verdict_to_json(v));
  return json{{"suite", c.suite},
              {"params",
               {{"n_min", c.params.n_min},
                {"n_max", c.params.n_max},
                {"max_weight", c.params.max_weight},
                {"count", c.params.count},
                {"seed", c.params.seed},
                {"t_max", c.params.t_max}}},
              {"instances", c.instances},
              {"holds", c.holds},
              {"counterexamples", c.counterexamples},
              {"skips", c.skips},
              {"verdicts", verdicts}};
}

Campaign campaign_from_json(const json& j) {
  Campaign c;
  c.suite = j.at("suite").get<std::string>();
  const json& p = j.at("params");
  c.params.n_min = p.at("n_min").get<int>();
  c.params.n_max = p.at("n_max").get<int>();
  c.params.max_weight = p.at("max_weight").get<Weight>();
  c.params.count = p.at("count").get<int>();
  c.params.seed = p.at("seed").get<std::uint64_t>();
  c.params.t_max = p.at("t_max").get<int>();
  c.instances = j.at("instances").get<int>();
  c.holds = j.at("holds").get<int>();
  c.counterexamples = j.at("counterexamples").get<int>();
  c.skips = j.at("skips").get<int>();
  for (const json& v : j.at("verdicts")) c.verdicts.push_back(verdict_from_json(v));
  return c;
}

std::string render_plain(const Report& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  if (report.graph) {
    out << "graph: " << report.graph->vertices.size() << " vertices;";
    for (const auto& [u, v, w] : report.graph->edges) out << " " << u << "-" << v << ":" << w;
    out << "\n";
  }
  if (report.analysis) {
    const TreeAnalysis& a = *report.analysis;
    const std::vector<std::string>& names = report.graph->vertices;
    out << "analysis:\n";
    out << "  increasing: " << (a.is_increasing ? "yes" : "no");
    if (a.is_increasing) out << " (roots: " << join_names(names, a.roots) << ")";
    out << "\n";
    out << "  strictly increasing: " << (a.is_strictly_increasing ? "yes" : "no") << "\n";
    if (a.s_min) out << "  s(G) = " << *a.s_min << "\n";
    out << "  d = " << a.d_max << "\n";
    out << "  mu =";
    for (Weight m : a.mu) out << " " << m;
    out << "\n";
    out << "  A(G) = {" << join_names(names, a.a_set) << "}\n";
    out << "  bipartition: U = {" << join_names(names, a.side_u) << "}, V = {"
        << join_names(names, a.side_v) << "}\n";
    for (const RootAnalysis& ra : a.per_root) {
      out << "  root " << names[static_cast<std::size_t>(ra.root)] << ": "
          << (ra.increasing ? (ra.strictly_increasing ? "strictly increasing" : "increasing")
                            : "not increasing");
      if (ra.increasing) {
        out << ", s = " << ra.s;
        if (!ra.special_vertices.empty()) {
          out << ", special = {" << join_names(names, ra.special_vertices) << "}";
        }
      }
      out << "\n";
    }
  }
  if (report.betti) {
    const BettiBlock& b = *report.betti;
    out << "betti (engine=" << b.engine << ", field=" << b.field << ", power=" << b.power << "):\n";
    out << "  i  multidegree  rank\n";
    for (const auto& [key, rank] : b.table.entries) {
      out << "  " << key.first << "  [";
      for (std::size_t k = 0; k < key.second.size(); ++k) {
        if (k > 0) out << ",";
        out << key.second[k];
      }
      out << "]  " << rank << "\n";
    }
    out << "  pd = " << b.table.pd() << ", depth = " << b.table.depth()
        << ", reg(S/I) = " << b.table.reg_quotient() << ", reg(I) = " << b.table.reg_ideal() << "\n";
  }
  if (report.campaign) {
    const Campaign& c = *report.campaign;
    out << "verify (suite=" << c.suite << "):\n";
    for (const Verdict& v : c.verdicts) {
      out << "  [" << to_string(v.status) << "] " << v.claim << ": " << v.instance;
      if (!v.detail.empty()) out << " -- " << v.detail;
      out << "\n";
    }
    out << "summary: " << c.instances << " instances; " << c.holds << " hold, " << c.counterexamples
        << " counterexamples, " << c.skips << " skipped\n";
  }
  return out.str();
}

std::string render_csv(const Report& report) {
  std::ostringstream out;
  out << "i,multidegree,rank\n";
  if (report.betti) {
    for (const auto& [key, rank] : report.betti->table.entries) {
      out << key.first << ",\"[";
      for (std::size_t k = 0; k < key.second.size(); ++k) {
        if (k > 0) out << ",";
        out << key.second[k];
      }
      out << "]\"," << rank << "\n";
    }
    out << "# pd=" << report.betti->table.pd() << ",depth=" << report.betti->table.depth()
        << ",reg_quotient=" << report.betti->table.reg_quotient()
        << ",reg_ideal=" << report.betti->table.reg_ideal() << "\n";
  }
  return out.str();
}

}  // namespace

std::string render_graph_json(const GraphDocument& doc) { return graph_to_json(doc).dump(2) + "\n"; }

std::string render_graph_edgelist(const GraphDocument& doc) {
  std::string out;
  for (const auto& [u, v, w] : doc.edges) {
    out += u + " " + v + " " + std::to_string(w) + "\n";
  }
  return out;
}

std::string render_report(const Report& report, RenderMode mode) {
  if (mode == RenderMode::plain) return render_plain(report);
  if (mode == RenderMode::csv) return render_csv(report);
  json out{{"command", report.command}};
  if (report.graph) out["graph"] = graph_to_json(*report.graph);
  if (report.analysis) out["analysis"] = analysis_to_json(*report.analysis, report.graph->vertices);
  if (report.betti) {
    out["betti"] = {{"engine", report.betti->engine},
                    {"field", report.betti->field},
                    {"power", report.betti->power},
                    {"table", table_to_json(report.betti->table)}};
  }
  if (report.campaign) out["campaign"] = campaign_to_json(*report.campaign);
  return out.dump(2) + "\n";
}

Report parse_report_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), "document");
  }
  Report report;
  report.command = doc.at("command").get<std::string>();
  if (doc.contains("graph")) report.graph = graph_from_json(doc["graph"]);
  if (doc.contains("analysis")) {
    if (!report.graph) throw ParseError("analysis block requires a graph block", "analysis");
    report.analysis = analysis_from_json(doc["analysis"], report.graph->vertices);
  }
  if (doc.contains("betti")) {
    BettiBlock block;
    block.engine = doc["betti"].at("engine").get<std::string>();
    block.field = doc["betti"].at("field").get<std::string>();
    block.power = doc["betti"].at("power").get<Exponent>();
    block.table = table_from_json(doc["betti"].at("table"));
    report.betti = std::move(block);
  }
  if (doc.contains("campaign")) report.campaign = campaign_from_json(doc["campaign"]);
  return report;
}

std::string export_macaulay2(const WeightedTree& tree, Exponent t) {
  if (t < 1) throw std::invalid_argument("power must be positive");
  int n = tree.size();
  std::ostringstream out;
  out << "-- edge ideal of an edge-weighted tree; power t = " << t << "\n";
  out << "-- variable order:";
  for (int i = 0; i < n; ++i) out << " x_" << i << " = " << tree.names()[static_cast<std::size_t>(i)];
  out << "\n";
  out << "R = QQ[x_0..x_" << n - 1 << "];\n";
  out << "I = ideal(";
  const auto& edges = tree.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k > 0) out << ", ";
    out << "(x_" << edges[k].u << "*x_" << edges[k].v << ")^" << edges[k].w;
  }
  out << ");\n";
  if (t == 1) {
    out << "J = I;\n";
  } else {
    out << "J = I^" << t << ";\n";
  }
  out << "<< \"regularity = \" << regularity J << endl;\n";
  out << "<< \"pdim = \" << pdim comodule J << endl;\n";
  out << "<< \"depth = \" << (numgens R - pdim comodule J) << endl;\n";
  return out.str();
}

}  // namespace wtreelab
