#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "bdc/documents.hpp"
#include "bdc/errors.hpp"
#include "bdc/exact.hpp"
#include "bdc/goeritz.hpp"
#include "bdc/plumbing.hpp"
#include "bdc/spinc.hpp"
#include "bdc_cli/cli.hpp"
#include "detail.hpp"

namespace bdc::cli {
namespace {

// Thrown on the first structural problem; arithmetic problems are collected.
struct Broken {
  std::string what;
};

const Json& at(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Broken{std::string("missing field ") + key};
  return j[key];
}

BigInt to_big(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Broken{"not an integer: " + j.dump()};
}

std::int64_t to_i64(const Json& j) {
  if (!j.is_number_integer()) throw Broken{"not a small integer: " + j.dump()};
  return j.get<std::int64_t>();
}

Rational to_rational(const Json& j) {
  if (!j.is_string()) throw Broken{"not a rational: " + j.dump()};
  const std::string s = j.get<std::string>();
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash))) / Rational(BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Broken{"not a rational: " + s};
  }
}

IntVector to_vector(const Json& j) {
  if (!j.is_array()) throw Broken{"not an array: " + j.dump()};
  IntVector v;
  for (const auto& x : j) v.push_back(to_big(x));
  return v;
}

IntMatrix to_matrix(const Json& j) {
  if (!j.is_array()) throw Broken{"matrix is not an array"};
  const std::size_t n = j.size();
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const IntVector row = to_vector(j[r]);
    if (row.size() != n) throw Broken{"matrix is not square"};
    for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m;
}

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  std::vector<std::string> problems;
};

void check_white(const Json& r, Checker& ck, bool with_spinc) {
  const Json& inv = at(r, "invariants");
  const IntMatrix g = to_matrix(at(inv, "goeritz"));
  const auto m = static_cast<std::int64_t>(g.rows());
  ck.expect(to_i64(at(inv, "m")) == m, "m differs from the Goeritz size");
  ck.expect(g.is_symmetric(), "Goeritz matrix not symmetric");
  const BigInt det = to_big(at(inv, "det"));
  ck.expect(det == determinant(g), "det differs from the Goeritz determinant");
  ck.expect(abs(det) == to_big(at(inv, "spanning_trees")), "spanning tree count differs from |det|");
  ck.expect(at(inv, "goeritz_vertices").size() == g.rows(), "Goeritz vertex list has the wrong length");
  ck.expect(to_i64(at(inv, "signature")) == inertia(g).signature(), "signature differs");
  const bool special = at(inv, "special").get<bool>();
  const bool odd = det % 2 != 0;

  const Json& chars = at(r, "characteristic");
  const std::size_t n = chars.size();
  ck.expect(n > 0 && (n & (n - 1)) == 0, "characteristic subgraph count not a power of two");
  ck.expect(odd == (n == 1), "det odd must match a unique characteristic subgraph");
  bool has_empty = false;
  std::int64_t min_cut = -1;
  for (const auto& c : chars) {
    if (at(c, "vertices").empty()) has_empty = true;
    const std::int64_t cut = to_i64(at(c, "cut"));
    min_cut = min_cut < 0 ? cut : std::min(min_cut, cut);
  }
  ck.expect(has_empty == special, "empty characteristic subgraph must match specialness");

  const Json& ob = at(r, "obstruction");
  ck.expect(to_i64(at(ob, "tait_b2_bound")) == m, "Tait bound differs from m");
  ck.expect(at(ob, "tait_bound_sharp").get<bool>() == special, "Tait bound sharpness differs from specialness");
  const Json& sb = at(ob, "spin_b2_bound");
  if (odd) {
    ck.expect(!sb.is_null() && to_big(sb) == BigInt(m - min_cut), "spin bound differs from m - cut");
  } else {
    ck.expect(sb.is_null(), "spin bound present for even det");
  }
  const Json& cb = at(ob, "cutbound");
  const std::string cv = at(cb, "verdict").get<std::string>();
  ck.expect(to_i64(at(cb, "threshold")) == m, "cutbound threshold differs from m");
  ck.expect(to_i64(at(cb, "f")) == min_cut, "cutbound f differs from the smallest cut");
  if (special || !odd) ck.expect(cv == "not applicable", "cutbound should not apply");
  else ck.expect(cv == (min_cut >= m ? "OBSTRUCTED" : "inconclusive"), "cutbound verdict inconsistent");
  const Json& cap = at(ob, "capbound");
  const std::string pv = at(cap, "verdict").get<std::string>();
  ck.expect(to_i64(at(cap, "threshold")) == 9 * m, "capbound threshold differs from 9m");
  if (special) ck.expect(pv == "not applicable", "capbound should not apply");
  else ck.expect(pv == (min_cut >= 9 * m ? "OBSTRUCTED" : "inconclusive"), "capbound verdict inconsistent");
  if (pv == "OBSTRUCTED" && cv != "not applicable") ck.expect(cv == "OBSTRUCTED", "capbound obstructs but cutbound does not");
  const Json& mu = at(ob, "mu_bar");
  if (at(mu, "applicable").get<bool>()) {
    const Json& es = at(mu, "entries");
    ck.expect(es.size() == n, "one mu_bar entry per characteristic subgraph expected");
    for (std::size_t i = 0; i < std::min(n, es.size()); ++i)
      ck.expect(8 * to_rational(at(es[i], "mu_bar")) == Rational(to_i64(at(chars[i], "cut")) - m),
                "8 mu_bar differs from f - m");
  }

  if (!with_spinc) return;
  const Json& table = at(r, "spinc");
  ck.expect(BigInt(table.size()) == abs(det), "Spin^c class count differs from |det|");
  if (inv.contains("kauffman_states"))
    ck.expect(BigInt(to_i64(inv["kauffman_states"])) == abs(det), "Kauffman state count differs from |det|");
  std::vector<IntVector> keys;
  int spin = 0;
  for (const auto& e : table) {
    const IntVector rep = to_vector(at(e, "representative"));
    const IntVector key = to_vector(at(e, "key"));
    if (rep.size() != g.rows() || key.size() != g.rows()) {
      ck.expect(false, "Spin^c vector of the wrong length");
      continue;
    }
    ck.expect(is_characteristic(g, rep), "representative not characteristic");
    ck.expect(canonical_key(g, rep) == key, "canonical key does not match the representative");
    const Rational q = to_rational(at(e, "q"));
    ck.expect(q == quadform_inverse(g, rep), "q differs from the representative's square");
    ck.expect(to_rational(at(e, "d")) == (q + m) / 4, "d differs from (q + m)/4");
    ck.expect(at(e, "c1").is_null() != odd, "c1 class present iff det odd");
    if (at(e, "spin").get<bool>()) ++spin;
    if (inv.contains("kauffman_states")) ck.expect(!at(e, "state").is_null(), "class without a Kauffman state");
    keys.push_back(key);
  }
  ck.expect(std::is_sorted(keys.begin(), keys.end()) && std::adjacent_find(keys.begin(), keys.end()) == keys.end(),
            "keys not strictly increasing");
  ck.expect(spin == (odd ? 1 : 0), "expected exactly one spin class for odd det");
}

void check_mk1(const Json& r, Checker& ck) {
  const Json& link = at(r, "link");
  const IntMatrix lk = to_matrix(at(link, "linking_matrix"));
  const auto m = static_cast<std::int64_t>(lk.rows());
  ck.expect(lk.is_symmetric(), "linking matrix not symmetric");
  ck.expect(to_big(at(link, "det")) == determinant(lk), "link det differs");
  ck.expect(at(link, "components").size() == lk.rows(), "component list has the wrong length");
  const auto total = to_i64(at(r, "sublinks_total"));
  ck.expect(total > 0 && (total & (total - 1)) == 0, "sublink count not a power of two");
  for (const auto& run : at(r, "runs")) {
    const std::size_t c = at(run, "sublink").size();
    const Json& fill = at(run, "filling");
    const std::int64_t f = to_i64(at(fill, "f"));
    const std::int64_t b2 = to_i64(at(fill, "b2"));
    const std::int64_t sigma = to_i64(at(fill, "sigma"));
    ck.expect(at(fill, "even").get<bool>(), "filling form not even");
    if (c > 0) {
      ck.expect(at(run, "slides").size() == c - 1, "slide count differs from |C| - 1");
      ck.expect(abs(to_big(at(run, "final_framing"))) == BigInt(f), "f differs from |final framing|");
    }
    if (f >= 1) {
      ck.expect(b2 == m + f - 2, "b2 differs from m + f - 2");
      ck.expect(sigma == -m + f, "sigma differs from f - m");
    }
    const Json& fu = at(run, "furuta");
    ck.expect(at(fu, "obstructed").get<bool>() == (f >= 9 * m), "Furuta verdict differs from f >= 9m");
  }
}

PlumbingTree tree_from(const Json& t) {
  // Labels may repeat in reduction output only if the engine misbehaves.
  PlumbingTree out;
  std::map<std::string, int> index;
  for (const auto& v : at(t, "vertices")) {
    const std::string id = at(v, "id").get<std::string>();
    if (index.count(id)) throw Broken{"duplicate vertex " + id};
    index[id] = out.size();
    out.weights.push_back(to_i64(at(v, "weight")));
    out.labels.push_back(id);
  }
  for (const auto& e : at(t, "edges")) {
    if (!e.is_array() || e.size() != 2) throw Broken{"edge is not a pair"};
    const auto u = index.find(e[0].get<std::string>());
    const auto v = index.find(e[1].get<std::string>());
    if (u == index.end() || v == index.end()) throw Broken{"edge names an unknown vertex"};
    out.edges.push_back({u->second, v->second});
  }
  return out;
}

BigInt det_of(const PlumbingTree& t) { return t.size() == 0 ? BigInt(1) : determinant(t.intersection_form()); }

void check_normal_form_json(const Json& nf, Checker& ck) {
  const bool ok = at(at(nf, "n1"), "ok").get<bool>() && at(at(nf, "n2"), "ok").get<bool>() &&
                  at(at(nf, "n3"), "ok").get<bool>();
  ck.expect(at(nf, "ok").get<bool>() == ok, "normal form summary inconsistent");
}

bool cf_matches(const Json& cf, std::int64_t p, std::int64_t q) {
  // a1 - 1/(a2 - 1/(...)) evaluated from the back.
  Rational x(0);
  bool first = true;
  for (auto it = cf.rbegin(); it != cf.rend(); ++it) {
    const std::int64_t a = it->get<std::int64_t>();
    if (a < 2) return false;
    x = first ? Rational(a) : Rational(a) - 1 / x;
    first = false;
  }
  return !first && x == Rational(p) / Rational(q);
}

void check_lens(const Json& l, Checker& ck) {
  const std::int64_t p = to_i64(at(l, "p"));
  const std::int64_t q = to_i64(at(l, "q"));
  const Json& cf = at(l, "cf");
  if (!cf.is_null()) ck.expect(cf_matches(cf, p, q), "continued fraction does not evaluate to p/q");
}

void check_witness(const Json& r, Checker& ck) {
  const IntMatrix g = to_matrix(at(r, "goeritz"));
  const std::vector<std::int64_t> weights = at(at(r, "input"), "weights").get<std::vector<std::int64_t>>();
  ck.expect(g.rows() == weights.size(), "Goeritz size differs from the weight count");
  for (std::size_t i = 0; i < std::min(g.rows(), weights.size()); ++i)
    ck.expect(g(i, i) == weights[i], "Goeritz diagonal differs from the weights");
  try {
    const GraphDocument doc = parse_graph_document(at(r, "white_graph").dump());
    ck.expect(goeritz(white_graph(doc)).matrix == g, "white graph does not reproduce the Goeritz form");
  } catch (const Error& e) {
    ck.expect(false, std::string("white graph does not re-parse: ") + e.what());
  }
}

}  // namespace

std::vector<std::string> validate_report(const Json& report) {
  Checker ck;
  try {
    if (to_i64(at(report, "bdc_report")) != kReportVersion) return {"unknown report version"};
    const std::string cmd = at(report, "command").get<std::string>();
    if (report.contains("error")) {
      const Json& e = report["error"];
      ck.expect(at(e, "code").is_string() && at(e, "message").is_string(), "error without code or message");
      return ck.problems;
    }
    if (cmd == "analyze") {
      check_white(report, ck, true);
    } else if (cmd == "obstruct") {
      check_white(report, ck, false);
    } else if (cmd == "mk1") {
      check_mk1(report, ck);
    } else if (cmd == "plumb check") {
      const PlumbingTree t = tree_from(at(report, "input"));
      ck.expect(to_big(at(report, "det")) == det_of(t), "det differs from the input tree");
      ck.expect(at(report, "excessive").get<bool>() == is_excessive(t), "excessive flag differs");
      check_normal_form_json(at(report, "normal_form"), ck);
    } else if (cmd == "plumb reduce") {
      const PlumbingTree in = tree_from(at(report, "input"));
      const PlumbingTree out = tree_from(at(report, "result"));
      ck.expect(abs(det_of(in)) == abs(det_of(out)), "|det| not preserved by the reduction");
      ck.expect(to_big(at(report, "result_det")) == det_of(out), "result det differs");
      ck.expect(canonical_form(out) == at(report, "canonical").get<std::string>(), "canonical form differs");
      const Json& nf = at(report, "normal_form");
      check_normal_form_json(nf, ck);
      ck.expect(at(at(nf, "n1"), "ok").get<bool>() && at(at(nf, "n2"), "ok").get<bool>(), "result violates N1 or N2");
    } else if (cmd == "plumb decide") {
      const PlumbingTree t = tree_from(at(report, "input"));
      const BigInt det = to_big(at(report, "det"));
      ck.expect(det == det_of(t), "det differs from the input tree");
      const std::string v = at(report, "verdict").get<std::string>();
      if (det % 2 == 0) ck.expect(v == "HYPOTHESES_NOT_MET", "even det must not be decided");
      else ck.expect(v == (at(report, "odd_vertices").empty() ? "YES" : "NO"), "verdict differs from weight parity");
    } else if (cmd == "cf") {
      const std::int64_t p = to_i64(at(report, "p"));
      ck.expect(cf_matches(at(report, "cf"), p, to_i64(at(report, "q"))), "continued fraction does not evaluate to p/q");
      ck.expect(to_big(at(report, "det")) == BigInt(p), "plumbing det differs from p");
    } else if (cmd == "berge") {
      const std::int64_t i = to_i64(at(report, "i"));
      const std::int64_t k = to_i64(at(report, "k"));
      ck.expect(to_i64(at(at(report, "plus"), "p")) == i * k + 1, "plus p differs from ik + 1");
      check_lens(at(report, "plus"), ck);
      if (!at(report, "minus").is_null()) {
        ck.expect(to_i64(at(at(report, "minus"), "p")) == i * k - 1, "minus p differs from ik - 1");
        check_lens(report["minus"], ck);
      }
    } else if (cmd == "witness") {
      check_witness(report, ck);
    } else {
      return {"unknown command " + cmd};
    }
  } catch (const Broken& b) {
    ck.problems.push_back(b.what);
  } catch (const Json::exception& e) {
    ck.problems.push_back(std::string("malformed field: ") + e.what());
  } catch (const Error& e) {
    ck.problems.push_back(std::string("recomputation failed: ") + e.what());
  }
  return ck.problems;
}

}  // namespace bdc::cli
