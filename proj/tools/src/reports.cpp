#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bdc/chainmail.hpp"
#include "bdc/diagram.hpp"
#include "bdc/documents.hpp"
#include "bdc/errors.hpp"
#include "bdc/exact.hpp"
#include "bdc/gf2.hpp"
#include "bdc/goeritz.hpp"
#include "bdc/plumbing.hpp"
#include "bdc/spinc.hpp"
#include "bdc_cli/cli.hpp"
#include "detail.hpp"

namespace bdc::cli {

Json big(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(x));
  return Json(to_string(x));
}

Json big_vector(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(big(x));
  return a;
}

Json matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(big_vector(m.row(r)));
  return a;
}

std::string rational(const Rational& q) { return to_string(q); }

Json header(std::string_view command) {
  Json j;
  j["bdc_report"] = kReportVersion;
  j["command"] = command;
  return j;
}

namespace {

int parse_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw Error(ErrorCode::MalformedInput, std::string(what) + " must be an integer: " + s);
  return v;
}

// A white graph together with names for its vertices and, for diagram
// input, the diagram data needed to attach Kauffman states.
struct WhiteInput {
  MarkedGraph w;
  PlaneGraph embedding;
  std::vector<std::string> labels;
  Json echo;
  std::optional<KnotDiagram> diagram;
  std::optional<Coloring> coloring;
  std::optional<TaitGraph> white;
  std::optional<GraphDocument> doc;
};

std::string hub_label(const std::vector<std::string>& ids) {
  std::string h = "hub";
  while (std::find(ids.begin(), ids.end(), h) != ids.end()) h += "'";
  return h;
}

WhiteInput load_white(std::string_view text, const Options& opt) {
  WhiteInput in;
  if (detect_document(text) == DocumentKind::Diagram) {
    KnotDiagram d = parse_pd(text);
    if (opt.mark) d = KnotDiagram(d.crossings(), parse_int(*opt.mark, "--mark"));
    const Coloring c = checkerboard(d);
    TaitPair tp = tait_graphs(d, c);
    in.w = tp.white;
    in.embedding = tp.white.embedding;
    for (int r : tp.white.regions) in.labels.push_back("r" + std::to_string(r));
    Json pd = Json::array();
    for (const auto& x : d.crossings()) pd.push_back({x[0], x[1], x[2], x[3]});
    in.echo = {{"kind", "diagram"},
               {"crossings", d.crossing_count()},
               {"components", d.component_count()},
               {"marked_arc", d.marked_arc()},
               {"pd", pd}};
    BDC_ASSERT(is_special(tp.white, &tp.black) == is_special(tp.white), "Tait graphs disagree on specialness");
    in.diagram = std::move(d);
    in.coloring = c;
    in.white = std::move(tp.white);
    return in;
  }
  GraphDocument doc = parse_graph_document(text);
  if (opt.mark) doc.marked = doc.vertex_index(*opt.mark);
  in.w = white_graph(doc);
  in.labels = doc.ids;
  if (!doc.marked) {
    in.labels.push_back(hub_label(doc.ids));
  } else {
    in.embedding = doc.graph;
  }
  in.echo = {{"kind", "graph"},
             {"marked", doc.marked ? Json(doc.ids[*doc.marked]) : Json(nullptr)},
             {"vertices", doc.graph.vertex_count()},
             {"edges", doc.graph.edge_count()}};
  in.doc = std::move(doc);
  return in;
}

Json labels_of(const std::vector<std::string>& labels, const std::vector<int>& vs) {
  Json a = Json::array();
  for (int v : vs) a.push_back(labels.at(static_cast<std::size_t>(v)));
  return a;
}

Json invariants(const WhiteInput& in, const GoeritzForm& g, const ObstructionReport& r) {
  Json j;
  j["m"] = g.m();
  j["det"] = big(r.det);
  j["signature"] = inertia(g.matrix).signature();
  j["special"] = r.special;
  j["goeritz"] = matrix_json(g.matrix);
  j["goeritz_vertices"] = labels_of(in.labels, g.vertex_order);
  j["marked_vertex"] = in.labels.at(static_cast<std::size_t>(in.w.marked));
  j["white_edges"] = in.w.graph.edge_count();
  j["spanning_trees"] = big(spanning_tree_count(in.w.graph));
  return j;
}

Json characteristic_json(const WhiteInput& in, const ObstructionReport& r) {
  Json a = Json::array();
  for (const auto& c : r.characteristic) a.push_back({{"vertices", labels_of(in.labels, c.vertices)}, {"cut", c.cut}});
  return a;
}

Json obstruction_json(const WhiteInput& in, const ObstructionReport& r) {
  Json j;
  j["tait_b2_bound"] = r.tait_b2_bound;
  j["tait_bound_sharp"] = r.special;
  j["spin_b2_bound"] = r.spin_b2_bound ? big(*r.spin_b2_bound) : Json(nullptr);
  j["cutbound"] = {{"verdict", to_string(r.cutbound.verdict)},
                   {"f", r.cutbound.f},
                   {"threshold", r.cutbound.threshold},
                   {"reason", r.cutbound.reason}};
  Json entries = Json::array();
  for (const auto& e : r.capbound.entries)
    entries.push_back({{"vertices", labels_of(in.labels, e.vertices)}, {"f", e.f}, {"verdict", to_string(e.verdict)}});
  j["capbound"] = {{"verdict", to_string(r.capbound.verdict)},
                   {"min_f", r.capbound.min_f},
                   {"threshold", r.capbound.threshold},
                   {"reason", r.capbound.reason},
                   {"entries", entries}};
  if (r.mu_bar) {
    Json mu = Json::array();
    for (const auto& e : *r.mu_bar)
      mu.push_back({{"vertices", labels_of(in.labels, e.vertices)},
                    {"mu_bar", rational(e.value)},
                    {"ue_lower", rational(e.ue_lower)},
                    {"ue_upper", rational(e.ue_upper)}});
    j["mu_bar"] = {{"applicable", true}, {"entries", mu}};
  } else {
    j["mu_bar"] = {{"applicable", false}, {"reason", r.mu_bar_reason}};
  }
  return j;
}

Json spinc_json(const WhiteInput& in, const GoeritzForm& g, unsigned threads) {
  std::vector<SpinCClass> classes = enumerate_spinc(g, threads);
  std::vector<KauffmanState> states;
  if (in.diagram) {
    attach_states(classes, *in.diagram, *in.coloring, *in.white, g);
    states = kauffman_states(*in.diagram);
  }
  Json a = Json::array();
  for (const auto& c : classes) {
    Json e;
    e["key"] = big_vector(c.canonical_key);
    e["representative"] = big_vector(c.representative);
    e["c1"] = c.c1_class ? big_vector(*c.c1_class) : Json(nullptr);
    e["spin"] = c.spin;
    e["q"] = rational(c.q);
    e["d"] = rational(c.d);
    if (c.state_index) {
      const KauffmanState& s = states.at(static_cast<std::size_t>(*c.state_index));
      e["state"] = {{"index", *c.state_index}, {"corners", s.corner}, {"regions", s.region}};
    } else {
      e["state"] = nullptr;
    }
    a.push_back(std::move(e));
  }
  return a;
}

// Chainmail link with names for its components.
struct LinkInput {
  ChainmailLink link;
  std::vector<std::string> labels;
  Json echo;
};

LinkInput load_link(std::string_view text, const Options& opt) {
  LinkInput out;
  std::vector<int> order;
  if (detect_document(text) == DocumentKind::Diagram) {
    WhiteInput in = load_white(text, opt);
    out.link = chainmail_from_white(in.embedding, in.w.marked, &order);
    out.labels = in.labels;
    out.echo = in.echo;
  } else {
    GraphDocument doc = parse_graph_document(text);
    if (opt.mark) doc.marked = doc.vertex_index(*opt.mark);
    out.link = chainmail_of(doc, &order);
    out.labels = doc.ids;
    out.echo = {{"kind", "graph"},
                {"marked", doc.marked ? Json(doc.ids[*doc.marked]) : Json(nullptr)},
                {"vertices", doc.graph.vertex_count()},
                {"edges", doc.graph.edge_count()}};
  }
  std::vector<std::string> component_labels;
  for (int v : order) component_labels.push_back(out.labels.at(static_cast<std::size_t>(v)));
  out.labels = std::move(component_labels);
  return out;
}

Json tree_json(const PlumbingTree& t) {
  Json vs = Json::array();
  for (int v = 0; v < t.size(); ++v) vs.push_back({{"id", t.label(v)}, {"weight", t.weights[v]}});
  Json es = Json::array();
  for (const auto& e : t.edges) es.push_back({t.label(e.u), t.label(e.v)});
  return {{"vertices", vs}, {"edges", es}};
}

Json normal_form_json(const NormalFormReport& r) {
  return {{"ok", r.ok()},
          {"n1", {{"ok", r.n1_ok}, {"violations", r.n1_violations}}},
          {"n2", {{"ok", r.n2_ok}, {"violations", r.n2_violations}}},
          {"n3", {{"ok", r.n3_ok}, {"violations", r.n3_violations}}}};
}

Json lens_json(const LensParameters& l) {
  Json j = {{"p", l.p}, {"q", l.q}};
  j["cf"] = l.p > l.q && l.q >= 1 ? Json(neg_cf(l.p, l.q)) : Json(nullptr);
  return j;
}

constexpr std::size_t kMaxSublinks = 64;

}  // namespace

Json analyze_report(std::string_view text, const Options& opt) {
  const WhiteInput in = load_white(text, opt);
  const GoeritzForm g = goeritz(in.w);
  const ObstructionReport r = obstruction_report(in.w);
  Json j = header("analyze");
  j["input"] = in.echo;
  j["invariants"] = invariants(in, g, r);
  if (in.diagram) j["invariants"]["kauffman_states"] = kauffman_states(*in.diagram).size();
  j["spinc"] = spinc_json(in, g, opt.threads);
  j["characteristic"] = characteristic_json(in, r);
  j["obstruction"] = obstruction_json(in, r);
  return j;
}

Json obstruct_report(std::string_view text, const Options& opt) {
  const WhiteInput in = load_white(text, opt);
  const GoeritzForm g = goeritz(in.w);
  const ObstructionReport r = obstruction_report(in.w);
  Json j = header("obstruct");
  j["input"] = in.echo;
  j["invariants"] = invariants(in, g, r);
  j["characteristic"] = characteristic_json(in, r);
  j["obstruction"] = obstruction_json(in, r);
  return j;
}

Json mk1_report(std::string_view text, const Options& opt) {
  const LinkInput in = load_link(text, opt);
  const ChainmailLink& l = in.link;
  const IntMatrix lk = l.linking_matrix();
  const auto m = static_cast<std::int64_t>(l.size());
  Json j = header("mk1");
  j["input"] = in.echo;
  j["link"] = {{"components", in.labels}, {"linking_matrix", matrix_json(lk)}, {"det", big(determinant(lk))}};

  const auto indicators = characteristic_indicators(lk);
  Json runs = Json::array();
  std::size_t done = 0;
  for (const auto& y : indicators) {
    if (done == kMaxSublinks) break;
    ++done;
    std::vector<int> c;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (y[i]) c.push_back(static_cast<int>(i));
    Json run;
    run["sublink"] = labels_of(in.labels, c);
    if (c.empty()) {
      run["slides"] = Json::array();
      run["survivor"] = nullptr;
      run["final_framing"] = nullptr;
    } else {
      const SlideLog log = mk1_run(l, c);
      Json slides = Json::array();
      for (const auto& s : log.slides) {
        Json fr = Json::array();
        for (const auto& x : s.framings) fr.push_back(big(x));
        slides.push_back({{"moving", in.labels.at(static_cast<std::size_t>(s.moving))},
                          {"onto", in.labels.at(static_cast<std::size_t>(s.onto))},
                          {"merge", s.merge},
                          {"framings", fr}});
      }
      run["slides"] = slides;
      run["survivor"] = in.labels.at(static_cast<std::size_t>(log.survivor));
      run["final_framing"] = big(log.final_framing);
    }
    const FillingStats st = kaplan_filling(l, c);
    const FurutaVerdict fv = furuta_check(m, st.f, st.b2);
    run["filling"] = {{"f", st.f}, {"b2", st.b2}, {"sigma", st.sigma}, {"even", st.even_form}, {"blow_ups", st.blow_ups}};
    run["furuta"] = {{"obstructed", fv.obstructed},
                     {"threshold", 9 * m},
                     {"inequality_holds", fv.inequality_holds ? Json(*fv.inequality_holds) : Json(nullptr)},
                     {"filling_satisfies_10_8", furuta_inequality(st.b2, st.sigma)}};
    runs.push_back(std::move(run));
  }
  j["sublinks_total"] = indicators.size();
  j["runs"] = runs;
  return j;
}

Json plumb_check_report(std::string_view text) {
  const PlumbingTree t = parse_tree_document(text);
  Json j = header("plumb check");
  j["input"] = tree_json(t);
  j["excessive"] = is_excessive(t);
  j["det"] = big(determinant(t.intersection_form()));
  j["canonical"] = canonical_form(t);
  j["normal_form"] = normal_form_json(check_normal_form(t));
  return j;
}

Json plumb_reduce_report(std::string_view text, const Options& opt) {
  const PlumbingTree t = parse_tree_document(text);
  const Reduction red = reduce_normal_form(t, opt.seed);
  Json j = header("plumb reduce");
  j["input"] = tree_json(t);
  j["seed"] = opt.seed ? Json(*opt.seed) : Json(nullptr);
  Json moves = Json::array();
  for (const auto& mv : red.log) moves.push_back({{"move", to_string(mv.kind)}, {"vertex", mv.vertex}, {"detail", mv.detail}});
  j["moves"] = moves;
  j["result"] = tree_json(red.tree);
  j["result_det"] = big(red.tree.size() == 0 ? BigInt(1) : determinant(red.tree.intersection_form()));
  j["canonical"] = canonical_form(red.tree);
  j["normal_form"] = normal_form_json(check_normal_form(red.tree));
  return j;
}

Json plumb_decide_report(std::string_view text) {
  const PlumbingTree t = parse_tree_document(text);
  const PlumbedDecision d = decide_plumbed(t);
  Json j = header("plumb decide");
  j["input"] = tree_json(t);
  j["verdict"] = to_string(d.verdict);
  j["det"] = big(d.det);
  Json odd = Json::array();
  for (int v : d.odd_vertices) odd.push_back(t.label(v));
  j["odd_vertices"] = odd;
  j["reason"] = d.reason;
  return j;
}

Json cf_report(std::int64_t p, std::int64_t q) {
  const std::vector<std::int64_t> a = neg_cf(p, q);
  std::vector<std::int64_t> w;
  for (auto x : a) w.push_back(-x);
  Json j = header("cf");
  j["p"] = p;
  j["q"] = q;
  j["cf"] = a;
  j["plumbing"] = w;
  j["det"] = big(abs(determinant(linear_plumbing(w).intersection_form())));
  return j;
}

Json berge_report(std::int64_t i, std::int64_t k) {
  const BergePair b = berge_ipm(i, k);
  Json j = header("berge");
  j["i"] = i;
  j["k"] = k;
  j["plus"] = lens_json(b.plus);
  j["minus"] = b.minus ? lens_json(*b.minus) : Json(nullptr);
  return j;
}

Json witness_report(std::string_view text) {
  const GraphDocument doc = parse_graph_document(text);
  if (doc.marked) throw Error(ErrorCode::MalformedInput, "witness expects a reduced graph without a marked vertex");
  const std::vector<std::int64_t> weights = required_weights(doc);
  const AccessibleWitness wit = accessible_witness(doc.graph, weights);

  std::vector<std::string> ids = doc.ids;
  ids.insert(ids.begin() + wit.hub, hub_label(doc.ids));
  Json vs = Json::array();
  for (const auto& id : ids) vs.push_back({{"id", id}});
  Json es = Json::array();
  for (const auto& e : wit.white.edges()) es.push_back({ids.at(static_cast<std::size_t>(e.u)), ids.at(static_cast<std::size_t>(e.v))});
  Json rot = Json::object();
  for (int v = 0; v < wit.white.vertex_count(); ++v) {
    Json r = Json::array();
    for (int dart : wit.white.rotation(v)) r.push_back(PlaneGraph::edge_of(dart));
    rot[ids.at(static_cast<std::size_t>(v))] = r;
  }
  Json mult = Json::object();
  for (std::size_t v = 0; v < doc.ids.size(); ++v) mult[doc.ids[v]] = wit.hub_multiplicity.at(v);

  Json j = header("witness");
  j["input"] = {{"kind", "graph"}, {"weights", weights}};
  j["hub_multiplicity"] = mult;
  j["goeritz"] = matrix_json(wit.form.matrix);
  j["white_graph"] = {{"vertices", vs}, {"edges", es}, {"rotations", rot}, {"marked", ids.at(static_cast<std::size_t>(wit.hub))}};
  return j;
}

}  // namespace bdc::cli
