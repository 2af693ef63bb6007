#include "bdc/chainmail.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "bdc/errors.hpp"
#include "bdc/gf2.hpp"

namespace bdc {

IntMatrix ChainmailLink::linking_matrix() const {
  const auto n = static_cast<std::size_t>(size());
  IntMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) l(i, i) = weights[i];
  for (int e = 0; e < diagram.edge_count(); ++e) {
    const auto& ed = diagram.edges()[e];
    const int s = signs.empty() ? 1 : signs[e];
    l(ed.u, ed.v) += s;
    l(ed.v, ed.u) += s;
  }
  return l;
}

ChainmailLink build_chainmail(PlaneGraph d, std::vector<std::int64_t> weights, std::vector<int> signs) {
  if (static_cast<int>(weights.size()) != d.vertex_count())
    throw Error(ErrorCode::DimensionMismatch, "one framing per vertex required");
  if (!signs.empty() && static_cast<int>(signs.size()) != d.edge_count())
    throw Error(ErrorCode::DimensionMismatch, "one sign per edge required");
  for (int s : signs)
    if (s != 1 && s != -1) throw Error(ErrorCode::MalformedInput, "clasp signs must be +1 or -1");
  if (d.vertex_count() == 0) throw Error(ErrorCode::DegenerateGraph, "chainmail link needs a vertex");
  if (!d.satisfies_euler()) throw Error(ErrorCode::InvalidEmbedding, "rotation system fails Euler's formula");
  const Multigraph g = d.abstract();
  if (g.has_loop()) throw Error(ErrorCode::NotReduced, "loop edge in a chainmail graph");
  if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "chainmail graph is not connected");
  if (signs.empty()) signs.assign(static_cast<std::size_t>(d.edge_count()), 1);
  return ChainmailLink{std::move(d), std::move(weights), std::move(signs)};
}

ChainmailLink chainmail_from_white(const PlaneGraph& white, int marked, std::vector<int>* vertex_order) {
  std::vector<int> keep;
  for (int v = 0; v < white.vertex_count(); ++v)
    if (v != marked) keep.push_back(v);
  const Multigraph full = white.abstract();
  std::vector<std::int64_t> w;
  for (int v : keep) w.push_back(-full.degree(v));
  if (vertex_order) *vertex_order = keep;
  return build_chainmail(white.induced(keep), std::move(w));
}

namespace {

// L' = E^T L E with E = I + e_onto e_moving^T, checked against the
// row/column update rule.
void slide(IntMatrix& l, int moving, int onto) {
  const std::size_t n = l.rows();
  IntMatrix e = IntMatrix::identity(n);
  e(onto, moving) = 1;
  const IntMatrix expect = e.transpose() * l * e;

  IntMatrix r = l;
  const BigInt diag = l(moving, moving) + 2 * l(moving, onto) + l(onto, onto);
  for (std::size_t x = 0; x < n; ++x) {
    if (static_cast<int>(x) == moving) continue;
    r(moving, x) = l(moving, x) + l(onto, x);
    r(x, moving) = r(moving, x);
  }
  r(moving, moving) = diag;
  BDC_ASSERT(r == expect, "slide update is not E^T L E");
  l = std::move(r);
}

std::vector<BigInt> framings(const IntMatrix& l) { return l.diagonal(); }

struct Component {
  PlaneGraph h;
  std::vector<int> label;  // H vertex -> link component
  std::vector<int> sign;   // H edge -> clasp sign
};

// Lune test for an adjacent pair: the parallel a-b edges cut the sphere
// into lunes; the pair is minimal when at most one lune holds other vertices.
bool minimal_pair(const PlaneGraph& h, int a, int b) {
  const auto& ra = h.rotation(a);
  const auto& rb = h.rotation(b);
  std::vector<int> par_a;  // positions in ra of darts to b
  for (std::size_t i = 0; i < ra.size(); ++i)
    if (h.head(ra[i]) == b) par_a.push_back(static_cast<int>(i));
  const int k = static_cast<int>(par_a.size());
  BDC_ASSERT(k > 0, "pair is not adjacent");
  if (k == 1) return true;

  std::map<int, int> lune_of_dart;  // dart -> lune index
  for (std::size_t i = 0; i < ra.size(); ++i) {
    if (h.head(ra[i]) == b) continue;
    int j = k - 1;  // last parallel position before i (cyclically)
    for (int t = 0; t < k; ++t)
      if (par_a[t] < static_cast<int>(i)) j = t;
    lune_of_dart[ra[i]] = j;
  }
  // At b the parallel darts are twins of the ones at a; after twin(e_{j+1})
  // comes lune j.
  std::map<int, int> index_at_b;
  for (int t = 0; t < k; ++t) index_at_b[PlaneGraph::twin(ra[par_a[t]])] = t;
  std::vector<int> par_b;
  for (std::size_t i = 0; i < rb.size(); ++i)
    if (h.head(rb[i]) == a) par_b.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < rb.size(); ++i) {
    if (h.head(rb[i]) == a) continue;
    int j = par_b.back();
    for (int p : par_b)
      if (p < static_cast<int>(i)) j = p;
    const int t = index_at_b[rb[j]];
    lune_of_dart[rb[i]] = (t - 1 + k) % k;
  }

  const int n = h.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (s == a || s == b || comp[s] != -1) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = ncomp;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int d : h.rotation(x)) {
        const int y = h.head(d);
        if (y == a || y == b || comp[y] != -1) continue;
        comp[y] = ncomp;
        q.push(y);
      }
    }
    ++ncomp;
  }
  std::vector<std::set<int>> lunes(static_cast<std::size_t>(ncomp));
  for (const auto& [d, lune] : lune_of_dart) lunes[comp[h.head(d)]].insert(lune);
  std::set<int> used;
  for (const auto& s : lunes) {
    BDC_ASSERT(s.size() == 1, "a component of H - {a,b} meets two lunes");
    used.insert(*s.begin());
  }
  return used.size() <= 1;
}

// Contracts the a-b bundle, keeping a; parallel edges become loops and are
// dropped.
Component contract(const Component& c, int a, int b) {
  const PlaneGraph& h = c.h;
  const auto& ra = h.rotation(a);
  const auto& rb = h.rotation(b);
  std::size_t ia = 0;
  while (h.head(ra[ia]) != b) ++ia;
  const int da = ra[ia];
  const int db = PlaneGraph::twin(da);
  std::size_t ib = 0;
  while (rb[ib] != db) ++ib;

  std::vector<int> merged;
  for (std::size_t t = 1; t < rb.size(); ++t) merged.push_back(rb[(ib + t) % rb.size()]);
  for (std::size_t t = 1; t < ra.size(); ++t) merged.push_back(ra[(ia + t) % ra.size()]);

  // New numbering: vertices without b, edges without the bundle.
  const int n = h.vertex_count();
  std::vector<int> vmap(static_cast<std::size_t>(n), -1);
  Component out;
  for (int v = 0; v < n; ++v) {
    if (v == b) continue;
    vmap[v] = static_cast<int>(out.label.size());
    out.label.push_back(c.label[v]);
  }
  vmap[b] = vmap[a];
  out.h = PlaneGraph(static_cast<int>(out.label.size()));
  std::vector<int> emap(static_cast<std::size_t>(h.edge_count()), -1);
  for (int e = 0; e < h.edge_count(); ++e) {
    const auto& ed = h.edges()[e];
    const bool bundle = (ed.u == a && ed.v == b) || (ed.u == b && ed.v == a);
    if (bundle) continue;
    emap[e] = out.h.add_edge(vmap[ed.u], vmap[ed.v]);
    out.sign.push_back(c.sign[e]);
  }
  auto map_dart = [&](int d) { return 2 * emap[PlaneGraph::edge_of(d)] + (d & 1); };
  for (int v = 0; v < n; ++v) {
    if (v == b) continue;
    std::vector<int> rot;
    const auto& src = (v == a) ? merged : h.rotation(v);
    for (int d : src)
      if (emap[PlaneGraph::edge_of(d)] != -1) rot.push_back(map_dart(d));
    out.h.set_rotation(vmap[v], std::move(rot));
  }
  BDC_ASSERT(out.h.satisfies_euler(), "bundle contraction broke planarity");
  return out;
}

}  // namespace

SlideLog mk1_run(const ChainmailLink& l, std::span<const int> c) {
  if (c.empty()) throw Error(ErrorCode::EmptyCharacteristicSet, "empty sublink needs no slides");
  if (!l.diagram.abstract().is_connected()) throw Error(ErrorCode::Disconnected, "chainmail graph is not connected");
  std::vector<int> subset(c.begin(), c.end());
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw Error(ErrorCode::MalformedInput, "repeated vertex in sublink");
  for (int v : subset)
    if (v < 0 || v >= l.size()) throw Error(ErrorCode::MalformedInput, "sublink vertex out of range");

  SlideLog log;
  IntMatrix lk = l.linking_matrix();
  const IntMatrix lk0 = lk;

  std::vector<int> emap;
  const PlaneGraph sub = l.diagram.induced(subset, &emap);
  std::vector<int> sub_sign(static_cast<std::size_t>(sub.edge_count()));
  for (int e = 0; e < l.diagram.edge_count(); ++e)
    if (emap[e] != -1) sub_sign[emap[e]] = l.signs[e];

  std::vector<int> reps;
  for (const auto& comp : sub.abstract().components()) {
    Component cur;
    std::vector<int> cmap;
    cur.h = sub.induced(comp, &cmap);
    for (int v : comp) cur.label.push_back(subset[v]);
    cur.sign.resize(static_cast<std::size_t>(cur.h.edge_count()));
    for (int e = 0; e < sub.edge_count(); ++e)
      if (cmap[e] != -1) cur.sign[cmap[e]] = sub_sign[e];

    while (cur.h.vertex_count() > 1) {
      // adjacent pairs ordered by their link labels
      std::vector<std::pair<int, int>> pairs;
      for (const auto& ed : cur.h.edges()) {
        int a = ed.u, b = ed.v;
        if (cur.label[a] > cur.label[b]) std::swap(a, b);
        pairs.push_back({a, b});
      }
      std::sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
        return std::pair(cur.label[x.first], cur.label[x.second]) < std::pair(cur.label[y.first], cur.label[y.second]);
      });
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
      std::optional<std::pair<int, int>> pick;
      for (const auto& p : pairs)
        if (minimal_pair(cur.h, p.first, p.second)) {
          pick = p;
          break;
        }
      BDC_ASSERT(pick.has_value(), "no minimal pair found");
      const auto [a, b] = *pick;
      const int la = cur.label[a], lb = cur.label[b];
      slide(lk, la, lb);
      log.slides.push_back({la, lb, false, framings(lk)});
      cur = contract(cur, a, b);
      // clasps of the merged vertex must match the updated linking numbers
      const int va = static_cast<int>(std::find(cur.label.begin(), cur.label.end(), la) - cur.label.begin());
      std::map<int, BigInt> counted;
      for (int e = 0; e < cur.h.edge_count(); ++e) {
        const auto& ed = cur.h.edges()[e];
        if (ed.u == va) counted[cur.label[ed.v]] += cur.sign[e];
        if (ed.v == va) counted[cur.label[ed.u]] += cur.sign[e];
      }
      for (int x : cur.label)
        if (x != la) BDC_ASSERT(counted[x] == lk(la, x), "contracted graph disagrees with linking matrix");
    }
    reps.push_back(cur.label.front());
  }

  // Join the components along a star centred on the first one.
  const int centre = reps.front();
  for (std::size_t i = 1; i < reps.size(); ++i) {
    BDC_ASSERT(lk(centre, reps[i]) == 0, "separate components of C are linked");
    slide(lk, centre, reps[i]);
    log.slides.push_back({centre, reps[i], true, framings(lk)});
  }
  BDC_ASSERT(log.slides.size() == subset.size() - 1, "slide count differs from |C| - 1");

  IntVector wc(static_cast<std::size_t>(l.size()), 0);
  for (int v : subset) wc[v] = 1;
  log.survivor = centre;
  log.final_framing = lk(centre, centre);
  BDC_ASSERT(log.final_framing == quadform(lk0, wc), "final framing differs from w_C^T L w_C");
  log.final_linking = std::move(lk);
  return log;
}

namespace {

bool is_characteristic_vector(const IntMatrix& a, const IntVector& w) {
  const IntVector aw = a * w;
  for (std::size_t i = 0; i < aw.size(); ++i)
    if ((aw[i] - a(i, i)) % 2 != 0) return false;
  return true;
}

// Remove component k with framing eps = +-1: A' = A - a a^T / eps.
IntMatrix blow_down(const IntMatrix& a, std::size_t k) {
  const BigInt eps = a(k, k);
  BDC_ASSERT(eps == 1 || eps == -1, "blow-down needs framing +-1");
  const std::size_t n = a.rows();
  IntMatrix out(n - 1, n - 1);
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == k) continue;
    for (std::size_t j = 0, s = 0; j < n; ++j) {
      if (j == k) continue;
      out(r, s) = a(i, j) - a(i, k) * a(k, j) * eps;  // 1/eps == eps
      ++s;
    }
    ++r;
  }
  return out;
}

// Meridian blow-up of component k with sign eps: framing of k moves by eps.
IntMatrix blow_up(const IntMatrix& a, std::size_t k, int eps) {
  const std::size_t n = a.rows();
  IntMatrix out(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  out(n, n) = eps;
  out(k, n) = out(n, k) = eps;
  out(k, k) += eps;
  return out;
}

}  // namespace

FillingStats kaplan_filling(const ChainmailLink& l, std::span<const int> c) {
  const IntMatrix lk0 = l.linking_matrix();
  const std::size_t n = lk0.rows();
  IntVector wc(n, 0);
  for (int v : c) {
    if (v < 0 || v >= l.size()) throw Error(ErrorCode::MalformedInput, "sublink vertex out of range");
    wc[v] = 1;
  }
  if (!is_characteristic_vector(lk0, wc)) throw Error(ErrorCode::NotCharacteristic, "sublink is not characteristic");

  FillingStats st;
  const Inertia in0 = inertia(lk0);
  const BigInt det0 = abs(determinant(lk0));
  IntMatrix form = lk0;
  if (c.empty()) {
    st.f = 0;
  } else {
    const SlideLog log = mk1_run(l, c);
    form = log.final_linking;
    const auto k = static_cast<std::size_t>(log.survivor);
    const auto framing = static_cast<std::int64_t>(log.final_framing);
    st.f = framing < 0 ? -framing : framing;
    // Bring the survivor to framing eps, then blow it down.
    const int eps = framing < 0 ? -1 : 1;
    const int up = framing == 0 ? 1 : -eps;  // blow-up sign
    const std::int64_t ups = framing == 0 ? 1 : st.f - 1;
    for (std::int64_t t = 0; t < ups; ++t) form = blow_up(form, k, up);
    st.blow_ups = ups;
    BDC_ASSERT(form(k, k) == 1 || form(k, k) == -1, "survivor framing is not +-1 after blow-ups");
    form = blow_down(form, k);
  }
  const Inertia in = inertia(form);
  BDC_ASSERT(in.zero == in0.zero && abs(determinant(form)) == det0, "filling changed the boundary");
  st.b2 = static_cast<std::int64_t>(form.rows());
  st.sigma = in.signature();
  st.even_form = true;
  for (std::size_t i = 0; i < form.rows(); ++i)
    if (form(i, i) % 2 != 0) st.even_form = false;
  st.form = std::move(form);
  return st;
}

FurutaVerdict furuta_check(std::int64_t m, std::int64_t f, std::optional<std::int64_t> b2) {
  if (m < 1 || f < 0) throw Error(ErrorCode::MalformedInput, "need m >= 1 and f >= 0");
  FurutaVerdict v;
  v.obstructed = f >= 9 * m;
  if (b2) {
    if (*b2 < 0) throw Error(ErrorCode::MalformedInput, "b2 must be non-negative");
    v.inequality_holds = 9 * m >= f + *b2 + 16;
  }
  return v;
}

bool furuta_inequality(std::int64_t b2, std::int64_t sigma) {
  const std::int64_t s = sigma < 0 ? -sigma : sigma;
  return 8 * b2 >= 10 * s + 16;
}

}  // namespace bdc
