#include "bdc/spinc.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "bdc/errors.hpp"
#include "bdc/gf2.hpp"

namespace bdc {

bool is_characteristic(const IntMatrix& g, const IntVector& v) {
  if (v.size() != g.rows()) throw Error(ErrorCode::DimensionMismatch, "covector length");
  for (std::size_t i = 0; i < v.size(); ++i)
    if ((v[i] - g(i, i)) % 2 != 0) return false;
  return true;
}

namespace {

IntVector parity_base(const IntMatrix& g) {
  IntVector c0(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) c0[i] = floor_mod(g(i, i), 2);
  return c0;
}

IntVector key_with(const IntMatrix& hnf, const IntVector& c0, const IntVector& v) {
  IntVector u(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) u[i] = (v[i] - c0[i]) / 2;
  u = reduce_mod_hnf(hnf, std::move(u));
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = c0[i] + 2 * u[i];
  return u;
}

}  // namespace

IntVector canonical_key(const IntMatrix& g, const IntVector& v) {
  if (!is_characteristic(g, v)) throw Error(ErrorCode::NotCharacteristic, "covector is not characteristic");
  return key_with(hermite_normal_form(g), parity_base(g), v);
}

bool same_spinc_class(const IntMatrix& g, const IntVector& v, const IntVector& w) {
  if (v.size() != w.size()) throw Error(ErrorCode::DimensionMismatch, "covector lengths differ");
  IntVector diff(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    diff[i] = v[i] - w[i];
    if (diff[i] % 2 != 0) return false;
    diff[i] /= 2;
  }
  return as_integral(solve_rational(g, diff)).has_value();
}

Rational d_invariant(const IntMatrix& g, const IntVector& v) {
  const OrbitMax best = orbit_maximum(g, v);
  return (best.q + Rational(static_cast<long long>(g.rows()))) / 4;
}

std::vector<SpinCClass> enumerate_spinc(const GoeritzForm& form, unsigned threads) {
  const IntMatrix& g = form.matrix;
  const std::size_t m = g.rows();
  if (m == 0) throw Error(ErrorCode::DegenerateGraph, "empty Goeritz form");
  const BigInt det = determinant(g);
  if (det == 0) throw Error(ErrorCode::Singular, "Goeritz form is singular");
  const IntMatrix hnf = hermite_normal_form(g);
  const IntVector c0 = parity_base(g);
  const bool odd = det % 2 != 0;

  // Residue box 0 <= u_i < H_ii is a complete system mod H Z^m.
  std::vector<IntVector> keys;
  IntVector u(m, 0);
  while (true) {
    IntVector v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = c0[i] + 2 * u[i];
    keys.push_back(std::move(v));
    std::size_t i = 0;
    while (i < m && u[i] + 1 == hnf(i, i)) {
      u[i] = 0;
      ++i;
    }
    if (i == m) break;
    ++u[i];
  }
  BDC_ASSERT(BigInt(keys.size()) == abs(det), "residue box size differs from |det|");

  std::vector<SpinCClass> out(keys.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t k = begin; k < keys.size(); k += step) {
      SpinCClass c;
      const OrbitMax best = orbit_maximum(g, keys[k]);
      c.canonical_key = keys[k];
      c.representative = best.argmax;
      c.q = best.q;
      c.d = (best.q + Rational(static_cast<long long>(m))) / 4;
      if (odd) {
        c.c1_class = reduce_mod_hnf(hnf, best.argmax);
        c.spin = std::all_of(c.c1_class->begin(), c.c1_class->end(), [](const BigInt& x) { return x == 0; });
      }
      out[k] = std::move(c);
    }
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(keys.size())));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          work(t, threads);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::sort(out.begin(), out.end(),
            [](const SpinCClass& a, const SpinCClass& b) { return a.canonical_key < b.canonical_key; });
  if (odd) {
    const auto spins = std::count_if(out.begin(), out.end(), [](const SpinCClass& c) { return c.spin; });
    BDC_ASSERT(spins == 1, "odd determinant must give exactly one spin class");
  }
  return out;
}

void attach_states(std::vector<SpinCClass>& classes, const KnotDiagram& d, const Coloring& col,
                   const TaitGraph& white, const GoeritzForm& g) {
  std::map<IntVector, std::size_t> index;
  for (std::size_t i = 0; i < classes.size(); ++i) index[classes[i].canonical_key] = i;
  const auto states = kauffman_states(d);
  if (states.size() != classes.size())
    throw Error(ErrorCode::CertificationFailure, "state count " + std::to_string(states.size()) +
                                                     " differs from class count " + std::to_string(classes.size()));
  for (std::size_t s = 0; s < states.size(); ++s) {
    const IntVector v = state_covector(d, col, white, states[s]);
    const auto it = index.find(canonical_key(g.matrix, v));
    BDC_ASSERT(it != index.end(), "state covector outside the enumerated classes");
    SpinCClass& c = classes[it->second];
    if (c.state_index) throw Error(ErrorCode::CertificationFailure, "two Kauffman states share a Spin^c class");
    c.state_index = static_cast<int>(s);
    if (quadform_inverse(g.matrix, v) != c.q)
      throw Error(ErrorCode::CertificationFailure, "state covector does not attain the orbit maximum");
  }
}

bool satisfies_parity_condition(const MarkedGraph& w, std::span<const int> subset) {
  const int n = w.graph.vertex_count();
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int v : subset) in[v] = true;
  std::vector<std::int64_t> to_c(static_cast<std::size_t>(n), 0);
  for (const auto& e : w.graph.edges()) {
    if (in[e.v]) ++to_c[e.u];
    if (in[e.u]) ++to_c[e.v];
  }
  for (int v : w.unmarked()) {
    const std::int64_t deg = w.graph.degree(v);
    const std::int64_t e = to_c[v] + (in[v] ? deg : 0);
    if ((e - deg) % 2 != 0) return false;
  }
  return true;
}

std::vector<CharSubgraph> characteristic_subgraphs(const MarkedGraph& w) {
  const GoeritzForm g = goeritz(w);
  std::vector<CharSubgraph> out;
  for (const auto& y : characteristic_indicators(g.matrix)) {
    CharSubgraph c;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (y[i]) c.vertices.push_back(g.vertex_order[i]);
    std::sort(c.vertices.begin(), c.vertices.end());
    BDC_ASSERT(satisfies_parity_condition(w, c.vertices), "GF(2) solution fails the graph parity condition");
    c.cut = cut_size(w, c.vertices);
    out.push_back(std::move(c));
  }
  const std::size_t n = out.size();
  BDC_ASSERT(n > 0 && (n & (n - 1)) == 0, "characteristic subgraph count is not a power of two");
  return out;
}

Rational mu_bar(const PlumbingTree& t, std::span<const int> subset) {
  t.require_tree();
  const IntMatrix q = t.intersection_form();
  IntVector w(static_cast<std::size_t>(t.size()), 0);
  for (int v : subset) {
    if (v < 0 || v >= t.size()) throw Error(ErrorCode::MalformedInput, "subset vertex out of range");
    w[v] = 1;
  }
  const IntVector qw = q * w;
  if (!is_characteristic(q, qw)) throw Error(ErrorCode::NotCharacteristic, "subset is not characteristic");
  const long long sigma = inertia(q).signature();
  return (Rational(sigma) - Rational(quadform(q, w))) / 8;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Obstructed: return "OBSTRUCTED";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::NotApplicable: return "not applicable";
  }
  return "?";
}

ObstructionReport obstruction_report(const MarkedGraph& w) {
  if (!w.graph.is_connected()) throw Error(ErrorCode::Disconnected, "white graph is not connected");
  const GoeritzForm g = goeritz(w);
  ObstructionReport r;
  r.m = g.m();
  r.det = determinant(g.matrix);
  const auto m = static_cast<std::int64_t>(r.m);
  r.tait_b2_bound = r.m;
  r.special = true;
  for (int v = 0; v < w.graph.vertex_count(); ++v)
    if (w.graph.degree(v) % 2 != 0) r.special = false;

  r.characteristic = characteristic_subgraphs(w);
  const bool empty_char = std::any_of(r.characteristic.begin(), r.characteristic.end(),
                                      [](const CharSubgraph& c) { return c.vertices.empty(); });
  BDC_ASSERT(empty_char == r.special, "empty characteristic subgraph must match specialness");
  const bool odd = r.det % 2 != 0;
  BDC_ASSERT(odd == (r.characteristic.size() == 1), "odd determinant must give a unique characteristic subgraph");

  if (odd) {
    // The spin class is the orbit of G w_C; its maximum is -cut(C).
    const CharSubgraph& c = r.characteristic.front();
    IntVector wc(r.m, 0);
    for (std::size_t i = 0; i < r.m; ++i)
      if (std::binary_search(c.vertices.begin(), c.vertices.end(), g.vertex_order[i])) wc[i] = 1;
    const OrbitMax best = orbit_maximum(g.matrix, g.matrix * wc);
    BDC_ASSERT(best.q == Rational(-c.cut), "spin orbit maximum differs from -cut");
    r.spin_b2_bound = BigInt(m - c.cut);
  }

  std::int64_t min_f = r.characteristic.front().cut;
  for (const auto& c : r.characteristic) min_f = std::min(min_f, c.cut);

  r.cutbound.threshold = m;
  r.cutbound.f = min_f;
  if (r.special) {
    r.cutbound.reason = "link is special";
  } else if (!odd) {
    r.cutbound.reason = "determinant is even";
  } else {
    r.cutbound.verdict = min_f >= m ? Verdict::Obstructed : Verdict::Inconclusive;
    r.cutbound.reason = "f = " + std::to_string(min_f) + (min_f >= m ? " >= " : " < ") + "m = " + std::to_string(m);
  }

  r.capbound.threshold = 9 * m;
  r.capbound.min_f = min_f;
  if (r.special) {
    r.capbound.reason = "link is special";
  } else {
    for (const auto& c : r.characteristic)
      r.capbound.entries.push_back(
          {c.vertices, c.cut, c.cut >= 9 * m ? Verdict::Obstructed : Verdict::Inconclusive});
    r.capbound.verdict = min_f >= 9 * m ? Verdict::Obstructed : Verdict::Inconclusive;
    r.capbound.reason =
        "min f = " + std::to_string(min_f) + (min_f >= 9 * m ? " >= " : " < ") + "9m = " + std::to_string(9 * m);
  }
  if (r.capbound.verdict == Verdict::Obstructed && r.cutbound.verdict != Verdict::NotApplicable)
    BDC_ASSERT(r.cutbound.verdict == Verdict::Obstructed, "capbound obstruction without cutbound obstruction");

  // Reduced graph as a plumbing tree with weights g_ii.
  const auto order = g.vertex_order;
  const Multigraph reduced = w.graph.induced(order);
  if (reduced.is_forest() && reduced.is_connected()) {
    PlumbingTree t;
    for (std::size_t i = 0; i < r.m; ++i) t.weights.push_back(static_cast<std::int64_t>(g.matrix(i, i)));
    t.edges = reduced.edges();
    std::vector<MuBarEntry> entries;
    for (const auto& c : r.characteristic) {
      std::vector<int> idx;
      for (int v : c.vertices) idx.push_back(static_cast<int>(std::find(order.begin(), order.end(), v) - order.begin()));
      MuBarEntry e;
      e.vertices = c.vertices;
      e.value = mu_bar(t, idx);
      BDC_ASSERT(8 * e.value == Rational(c.cut - m), "8 mu_bar differs from f - m");
      e.ue_lower = -8 * e.value / 9;
      e.ue_upper = -8 * e.value;
      entries.push_back(std::move(e));
    }
    r.mu_bar = std::move(entries);
  } else {
    r.mu_bar_reason = "reduced white graph is not a tree";
  }
  return r;
}

}  // namespace bdc
