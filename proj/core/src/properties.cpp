#include "noncyc/properties.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include "noncyc/error.hpp"
#include "noncyc/group_builder.hpp"
#include "noncyc/group_ops.hpp"
#include "noncyc/number_theory.hpp"

namespace noncyc {

using nlohmann::json;

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kPass: return "pass";
    case Outcome::kFail: return "fail";
    case Outcome::kNotApplicable: return "not-applicable";
    case Outcome::kTimeout: return "timeout";
  }
  return "?";
}

Outcome parse_outcome(std::string_view text) {
  for (auto o : {Outcome::kPass, Outcome::kFail, Outcome::kNotApplicable, Outcome::kTimeout})
    if (to_string(o) == text) return o;
  throw ParseError("unknown outcome: " + std::string(text));
}

void to_json(json& j, const Verdict& v) {
  j = json{{"property", v.property},
           {"group", v.group},
           {"outcome", std::string(to_string(v.outcome))},
           {"witness", v.witness},
           {"seconds", v.seconds}};
}

void from_json(const json& j, Verdict& v) {
  v.property = j.at("property").get<std::string>();
  v.group = j.at("group").get<std::string>();
  v.outcome = parse_outcome(j.at("outcome").get<std::string>());
  v.witness = j.at("witness");
  v.seconds = j.value("seconds", 0.0);
}

namespace {

struct Eval {
  Outcome outcome;
  json witness;
};

Eval pass(json w = json::object()) { return {Outcome::kPass, std::move(w)}; }
Eval fail(json w) { return {Outcome::kFail, std::move(w)}; }
Eval na(const std::string& reason) { return {Outcome::kNotApplicable, json{{"reason", reason}}}; }
Eval timed_out(const std::string& what) { return {Outcome::kTimeout, json{{"reason", what + ": search budget exhausted"}}}; }

json dist(Distance d) { return d.is_finite() ? json(d.value()) : json("inf"); }

json names_of(const FiniteGroup& g, const ElementSet& s) {
  json out = json::array();
  s.for_each([&](std::size_t x) { out.push_back(g.name(static_cast<Element>(x))); });
  return out;
}

json names_of(const FiniteGroup& g, const std::vector<Element>& xs) {
  json out = json::array();
  for (auto x : xs) out.push_back(g.name(x));
  return out;
}

json vertex_names(const SimpleGraph& graph, const FiniteGroup& g, const std::vector<std::size_t>& vs) {
  json out = json::array();
  for (auto v : vs) out.push_back(g.name(graph.elements()[v]));
  return out;
}

Eval guard_noncyclic(GroupAnalysis& a, const std::function<Eval()>& body) {
  if (a.is_cyclic()) return na("group is cyclic");
  return body();
}

bool is_power_of(std::size_t x, std::size_t p) {
  while (x % p == 0) x /= p;
  return x == 1;
}

/// Vertex of the quotient's non-cyclic graph holding the image of x, or kNoVertex.
std::size_t quotient_vertex(GroupAnalysis& a, Element x) {
  return a.quotient().bundle().vertex_of[a.cyclicizer().quotient.projection[x]];
}

// ---------------------------------------------------------------------------

Eval edge_quotient(GroupAnalysis& a) {
  return guard_noncyclic(a, [&] {
    const auto& g = a.group();
    const auto& cd = a.cyclicizer();
    auto& q = a.quotient();
    if (q.is_cyclic()) return fail(json{{"reason", "quotient by Cyc(G) is cyclic"}});
    const auto& qcd = q.cyclicizer();
    const auto& proj = cd.quotient.projection;
    const auto& verts = a.graph(GraphKind::kNoncyclic).elements();
    std::size_t checked = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        const Element x = verts[i], y = verts[j];
        if (proj[x] == proj[y]) continue;
        ++checked;
        const bool in_g = !cd.generates_cyclic(x, y);
        const bool in_q = !qcd.generates_cyclic(proj[x], proj[y]);
        if (in_g != in_q)
          return fail(json{{"x", g.name(x)},
                           {"y", g.name(y)},
                           {"image_x", q.group().name(proj[x])},
                           {"image_y", q.group().name(proj[y])},
                           {"edge_in_group", in_g},
                           {"edge_in_quotient", in_q}});
      }
    return pass(json{{"pairs_checked", checked},
                     {"quotient_order", q.group().order()},
                     {"quotient_cyc_order", qcd.cyc.count()}});
  });
}

Eval diam_quotient(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto& g = a.group();
    const std::size_t cyc_order = a.cyclicizer().cyc.count();
    const auto& proj = a.cyclicizer().quotient.projection;
    auto& q = a.quotient();
    if (q.is_cyclic()) return fail(json{{"reason", "quotient by Cyc(G) is cyclic"}});
    const auto& verts = a.graph(GraphKind::kNoncyclic).elements();
    const auto& dn = a.distances(GraphKind::kNoncyclic);
    const auto& dc = a.distances(GraphKind::kCyclic);
    const auto& qdn = q.distances(GraphKind::kNoncyclic);
    const auto& qdc = q.distances(GraphKind::kCyclic);

    std::vector<std::size_t> qv(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      qv[i] = quotient_vertex(a, verts[i]);
      if (qv[i] == kNoVertex)
        return fail(json{{"reason", "image of a vertex lies in Cyc of the quotient"}, {"x", g.name(verts[i])}});
    }
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        if (proj[verts[i]] == proj[verts[j]]) continue;
        for (auto [mine, theirs, which] : {std::tuple{&dn, &qdn, "noncyclic"}, std::tuple{&dc, &qdc, "cyclic"}}) {
          const Distance d = mine->at(i, j), e = theirs->at(qv[i], qv[j]);
          if (!(d == e))
            return fail(json{{"graph", which},
                             {"x", g.name(verts[i])},
                             {"y", g.name(verts[j])},
                             {"distance_in_group", dist(d)},
                             {"distance_in_quotient", dist(e)}});
        }
      }

    const Distance gn = dn.diameter(), gc = dc.diameter(), qn = qdn.diameter(), qc = qdc.diameter();
    json w{{"diam_noncyclic", dist(gn)},
           {"diam_noncyclic_quotient", dist(qn)},
           {"diam_cyclic", dist(gc)},
           {"diam_cyclic_quotient", dist(qc)}};
    if (!(gc == qc)) return fail(w);
    // Two elements of one coset share all neighbours and are never adjacent,
    // so they sit at distance 2; this only shows when the quotient graph is complete.
    const bool quotient_complete = qn == Distance::finite(1);
    if (cyc_order > 1 && quotient_complete) {
      w["coset_pairs_at_distance_2"] = true;
      if (!(gn == Distance::finite(2))) return fail(w);
    } else if (!(gn == qn)) {
      return fail(w);
    }

    // Component-wise, for non-isolated quotient components of the cyclic graph.
    const auto& qgraph = q.graph(GraphKind::kCyclic);
    std::size_t compared = 0;
    for (const auto& comp : connected_components(qgraph)) {
      if (comp.size() < 2) continue;
      ElementSet in_comp(qgraph.vertex_count());
      for (auto v : comp) in_comp.set(v);
      Distance qd = Distance::finite(0);
      for (auto u : comp)
        for (auto v : comp) qd = std::max(qd, qdc.at(u, v));
      std::vector<std::size_t> pre;
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (in_comp.test(qv[i])) pre.push_back(i);
      Distance gd = Distance::finite(0);
      for (auto u : pre)
        for (auto v : pre) gd = std::max(gd, dc.at(u, v));
      ++compared;
      if (!(gd == qd))
        return fail(json{{"component_of", q.group().name(qgraph.elements()[comp.front()])},
                         {"component_diameter_group", dist(gd)},
                         {"component_diameter_quotient", dist(qd)}});
    }
    w["components_compared"] = compared;
    return pass(w);
  });
}

Eval dist3_char(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto& g = a.group();
    const auto& cd = a.cyclicizer();
    const auto& verts = a.graph(GraphKind::kNoncyclic).elements();
    const auto& d = a.distances(GraphKind::kNoncyclic);
    std::size_t at3 = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        ElementSet u = cd.cyc_of[verts[i]];
        u |= cd.cyc_of[verts[j]];
        const bool covers = u.count() == g.order();
        const bool three = d.at(i, j) == Distance::finite(3);
        at3 += three;
        if (covers != three)
          return fail(json{{"x", g.name(verts[i])},
                           {"y", g.name(verts[j])},
                           {"distance", dist(d.at(i, j))},
                           {"cyc_sets_cover_group", covers}});
      }
    return pass(json{{"pairs_at_distance_3", at3}});
  });
}

Eval complement_not_complete(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto& g = a.group();
    const Distance d = a.distances(GraphKind::kCyclic).diameter();
    if (d == Distance::finite(1)) return fail(json{{"diam_cyclic", 1}});
    const auto edges = a.graph(GraphKind::kNoncyclic).edges();
    const auto& el = a.graph(GraphKind::kNoncyclic).elements();
    json w{{"diam_cyclic", dist(d)}};
    if (!edges.empty())
      w["non_adjacent_pair"] = json::array({g.name(el[edges.front().first]), g.name(el[edges.front().second])});
    return pass(w);
  });
}

Eval primepower_disconnected(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    if (!as_prime_power(a.group().order())) return na("order is not a prime power");
    const auto comps = connected_components(a.graph(GraphKind::kCyclic));
    json sizes = json::array();
    for (const auto& c : comps) sizes.push_back(c.size());
    json w{{"components", comps.size()}, {"component_sizes", sizes}};
    return comps.size() > 1 ? pass(w) : fail(w);
  });
}

Eval diam3_implies(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const Distance dn = a.distances(GraphKind::kNoncyclic).diameter();
    if (!(dn == Distance::finite(3))) return na("diam of the non-cyclic graph is " + dn.to_string());
    const Distance dc = a.distances(GraphKind::kCyclic).diameter();
    json w{{"diam_noncyclic", 3}, {"diam_cyclic", dist(dc)}};
    return dc.is_finite() && (dc.value() == 2 || dc.value() == 3) ? pass(w) : fail(w);
  });
}

Eval diam3_equiv_scan(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const Distance dn = a.distances(GraphKind::kNoncyclic).diameter();
    const Distance dc = a.distances(GraphKind::kCyclic).diameter();
    json w{{"diam_noncyclic", dist(dn)}, {"diam_cyclic", dist(dc)}};
    if ((dn == Distance::finite(3)) != (dc == Distance::finite(3))) {
      w["counterexample"] = true;
      // A pair at distance 3 in whichever graph has diameter 3.
      const auto kind = dn == Distance::finite(3) ? GraphKind::kNoncyclic : GraphKind::kCyclic;
      const auto& d = a.distances(kind);
      const auto& graph = a.graph(kind);
      for (std::size_t u = 0; u < d.size() && !w.contains("pair"); ++u)
        for (std::size_t v = u + 1; v < d.size(); ++v)
          if (d.at(u, v) == Distance::finite(3)) {
            w["pair"] = vertex_names(graph, a.group(), {u, v});
            w["pair_graph"] = kind == GraphKind::kNoncyclic ? "noncyclic" : "cyclic";
            break;
          }
      return fail(w);
    }
    return pass(w);
  });
}

json domination_json(const DominationResult& r, const SimpleGraph& graph, const FiniteGroup& g, std::size_t cap) {
  if (r.status == DominationResult::Status::kFound)
    return json{{"value", *r.value}, {"dominating_set", vertex_names(graph, g, r.witness)}};
  return json{{"value", "> " + std::to_string(cap)}};
}

Eval gamma_complement(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto& r = a.domination(GraphKind::kCyclic, 2);
    if (r.status == DominationResult::Status::kTimeout) return timed_out("domination search");
    const bool found = r.status == DominationResult::Status::kFound;
    const Distance dn = a.distances(GraphKind::kNoncyclic).diameter();
    json w{{"gamma_cyclic", domination_json(r, a.graph(GraphKind::kCyclic), a.group(), 2)},
           {"diam_noncyclic", dist(dn)}};
    if (found && *r.value < 2) return fail(w);
    const bool gamma2 = found && *r.value == 2;
    return gamma2 == (dn == Distance::finite(3)) ? pass(w) : fail(w);
  });
}

Eval gamma_one(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto& g = a.group();
    const auto& cd = a.cyclicizer();
    const auto& r = a.domination(GraphKind::kNoncyclic, 1);
    if (r.status == DominationResult::Status::kTimeout) return timed_out("domination search");
    const bool dominated = r.status == DominationResult::Status::kFound;
    std::optional<Element> involution;
    if (cd.cyc.count() == 1)
      for (Element x = 1; x < g.order() && !involution; ++x)
        if (g.element_order(x) == 2 && cd.cyc_of[x].count() == 2) involution = x;
    json w{{"gamma_is_one", dominated}, {"cyc_order", cd.cyc.count()}};
    if (dominated) w["dominating_vertex"] = vertex_names(a.graph(GraphKind::kNoncyclic), g, r.witness)[0];
    if (involution) w["involution_with_cyc_x_equal_to_span"] = g.name(*involution);
    return dominated == involution.has_value() ? pass(w) : fail(w);
  });
}

/// Odd-order elements form an abelian subgroup A of index 2 inverted by some involution.
std::optional<Element> generalized_dihedral_involution(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n % 4 != 2) return std::nullopt;
  std::vector<Element> odd;
  for (Element x = 0; x < n; ++x)
    if (g.element_order(x) % 2 == 1) odd.push_back(x);
  if (odd.size() * 2 != n) return std::nullopt;
  for (auto x : odd)
    for (auto y : odd)
      if (g.element_order(g.mul(x, y)) % 2 == 0 || !g.commute(x, y)) return std::nullopt;
  for (Element t = 1; t < n; ++t) {
    if (g.element_order(t) != 2) continue;
    if (std::all_of(odd.begin(), odd.end(), [&](Element x) { return g.conj(x, t) == g.inv(x); })) return t;
  }
  return std::nullopt;
}

Eval gamma_dihedral_family(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto& g = a.group();
    auto t = generalized_dihedral_involution(g);
    if (!t) return na("not of the form A<x> with A abelian of odd order inverted by an involution x");
    const auto& r = a.domination(GraphKind::kNoncyclic, 1);
    if (r.status == DominationResult::Status::kTimeout) return timed_out("domination search");
    json w{{"inverting_involution", g.name(*t)}};
    if (r.status != DominationResult::Status::kFound) {
      w["gamma"] = "> 1";
      return fail(w);
    }
    w["gamma"] = 1;
    w["dominating_vertex"] = vertex_names(a.graph(GraphKind::kNoncyclic), g, r.witness)[0];
    return pass(w);
  });
}

json omega_json(GroupAnalysis& a) {
  json w{{"omega", a.omega()}, {"method", a.omega_by_bnb() ? "branch-and-bound" : "maximal-cyclic-oracle"}};
  if (a.omega_by_bnb()) w["clique"] = vertex_names(a.graph(GraphKind::kNoncyclic), a.group(), a.bnb_clique().witness);
  return w;
}

Eval clique_ge3(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    json w = omega_json(a);
    return a.omega() >= 3 ? pass(w) : fail(w);
  });
}

Eval clique_quotient_eq(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    auto& q = a.quotient();
    if (q.is_cyclic()) return fail(json{{"reason", "quotient by Cyc(G) is cyclic"}});
    json w{{"omega", a.omega()}, {"omega_quotient", q.omega()}, {"quotient_order", q.group().order()}};
    return a.omega() == q.omega() ? pass(w) : fail(w);
  });
}

Eval clique_quotient_mono(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto& g = a.group();
    const auto& cyc = a.cyclicizer().cyc;
    const std::vector<ElementSet>* normals = nullptr;
    try {
      normals = &a.normal_subgroups();
    } catch (const CapExceededError& e) {
      return na(e.what());
    }
    const std::size_t omega = a.omega();
    std::size_t used = 0;
    json rows = json::array();
    for (const auto& n : *normals) {
      const bool inside = n.is_subset_of(cyc);
      std::size_t qomega = 0;
      if (n.count() == 1) {
        qomega = omega;
      } else {
        if (n.count() == g.order()) continue;
        GroupAnalysis sub(std::make_shared<const FiniteGroup>(quotient_group(g, n).group), std::nullopt, a.options());
        if (sub.is_cyclic()) continue;
        qomega = sub.omega();
      }
      ++used;
      rows.push_back(json{{"normal_order", n.count()}, {"omega_quotient", qomega}, {"inside_cyc", inside}});
      if (qomega > omega || (qomega == omega) != inside)
        return fail(json{{"omega", omega},
                         {"normal_subgroup", names_of(g, n)},
                         {"omega_quotient", qomega},
                         {"inside_cyc", inside}});
    }
    return pass(json{{"omega", omega}, {"quotients_checked", used}, {"rows", rows}});
  });
}

Eval sylow_clique(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto& g = a.group();
    if (a.cyclicizer().cyc.count() != 1) return na("Cyc(G) is not trivial");
    const std::size_t omega = a.omega();
    const auto primes = prime_divisors(g.order());
    std::vector<std::size_t> nu;
    json nus = json::object();
    for (auto p : primes) {
      nu.push_back(nu_p(g, p));
      nus[std::to_string(p)] = nu.back();
      if (nu.back() > omega) return fail(json{{"omega", omega}, {"prime", p}, {"nu", nu.back()}});
    }
    // conflict[i][j]: some element order is divisible by p_i p_j.
    const std::size_t k = primes.size();
    std::vector<std::vector<bool>> conflict(k, std::vector<bool>(k, false));
    for (auto o : g.element_orders())
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
          if (o % (primes[i] * primes[j]) == 0) conflict[i][j] = conflict[j][i] = true;
    std::size_t best = 0;
    json best_set = json::array();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      bool ok = true;
      std::size_t sum = 0;
      for (std::size_t i = 0; i < k && ok; ++i) {
        if (!(mask >> i & 1)) continue;
        sum += nu[i];
        for (std::size_t j = i + 1; j < k; ++j)
          if ((mask >> j & 1) && conflict[i][j]) ok = false;
      }
      if (!ok || sum <= best) continue;
      best = sum;
      best_set = json::array();
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) best_set.push_back(primes[i]);
    }
    json w{{"omega", omega}, {"nu", nus}, {"largest_independent_prime_set", best_set}, {"nu_sum", best}};
    return best <= omega ? pass(w) : fail(w);
  });
}

Eval pelement_center(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto& g = a.group();
    if (a.cyclicizer().cyc.count() != 1) return na("Cyc(G) is not trivial");
    const auto& z = a.center();
    const std::size_t omega = a.omega();
    json rows = json::array();
    for (auto p : prime_divisors(g.order())) {
      std::size_t k = 0;
      while (ipow(p, k) < omega) ++k;
      const std::size_t bound = ipow(p, k - 1);
      std::size_t p_elements = 0;
      for (Element x = 1; x < g.order(); ++x) {
        if (!is_power_of(g.element_order(x), p)) continue;
        ++p_elements;
        if (!z.test(g.pow(x, bound)))
          return fail(json{{"omega", omega}, {"prime", p}, {"k", k}, {"element", g.name(x)},
                           {"power_not_central", g.name(g.pow(x, bound))}});
      }
      if (k == 1 && p_elements > 0)
        return fail(json{{"omega", omega}, {"prime", p}, {"k", 1}, {"nontrivial_p_elements", p_elements}});
      const ElementSet sylow = sylow_subgroup(g, p);
      if (is_cyclic_subgroup(g, sylow) && sylow.count() > bound)
        return fail(json{{"omega", omega}, {"prime", p}, {"k", k}, {"cyclic_sylow_order", sylow.count()}});
      rows.push_back(json{{"prime", p}, {"k", k}, {"sylow_order", sylow.count()}});
    }
    return pass(json{{"omega", omega}, {"primes", rows}});
  });
}

Eval clique_char(GroupAnalysis& a, std::size_t target) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto tag = identify_small_quotient(a.quotient().group());
    const bool tag_match = target == 3 ? tag == SmallQuotientTag::kZ2xZ2
                                       : tag == SmallQuotientTag::kZ3xZ3 || tag == SmallQuotientTag::kS3;
    json w{{"omega", a.omega()}, {"quotient_tag", std::string(to_string(tag))},
           {"quotient_order", a.quotient().group().order()}};
    return (a.omega() == target) == tag_match ? pass(w) : fail(w);
  });
}

Eval exponent_p(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto& g = a.group();
    auto pp = as_prime_power(g.order());
    if (!pp || pp->second < 2 || g.exponent() != pp->first) return na("not a p-group of exponent p and rank > 1");
    const auto [p, n] = *pp;
    const std::size_t expected = (ipow(p, n) - 1) / (p - 1);
    json w{{"p", p}, {"n", n}, {"expected", expected}, {"omega", a.omega()}};
    return a.omega() == expected ? pass(w) : fail(w);
  });
}

GroupSpec product_of(const std::vector<GroupSpec>& factors) {
  if (factors.size() == 1) return factors.front();
  return GroupSpec(spec::DirectProduct{factors});
}

Eval product_clique(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto* prod = a.spec() ? a.spec()->get_if<spec::DirectProduct>() : nullptr;
    if (!prod || prod->factors.size() < 2) return na("not a direct product spec");
    const auto& fs = prod->factors;
    const std::size_t k = fs.size();
    json rows = json::array();
    const std::size_t omega = a.omega();
    // Masks containing factor 0 enumerate each bipartition once.
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); mask += 2) {
      std::vector<GroupSpec> left, right;
      for (std::size_t i = 0; i < k; ++i) (mask >> i & 1 ? left : right).push_back(fs[i]);
      const GroupSpec h = product_of(left), kk = product_of(right);
      if (std::gcd(spec_order(h), spec_order(kk)) != 1) continue;
      GroupAnalysis ha(std::make_shared<const FiniteGroup>(build_group(h)), h, a.options());
      GroupAnalysis ka(std::make_shared<const FiniteGroup>(build_group(kk)), kk, a.options());
      if (ha.is_cyclic() || ka.is_cyclic()) continue;
      json row{{"left", to_string(h)}, {"right", to_string(kk)}, {"omega_left", ha.omega()},
               {"omega_right", ka.omega()}, {"omega", omega}};
      if (ha.omega() * ka.omega() > omega) return fail(row);
      rows.push_back(row);
    }
    if (rows.empty()) return na("no coprime split into two non-cyclic factors");
    return pass(json{{"splits", rows}});
  });
}

Eval clique_oracle(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto& graph = a.graph(GraphKind::kNoncyclic);
    if (graph.vertex_count() > a.options().bnb_vertex_limit)
      return na("more than " + std::to_string(a.options().bnb_vertex_limit) + " vertices");
    const auto& c = a.bnb_clique();
    json w{{"branch_and_bound", c.size}, {"maximal_cyclic_subgroups", a.oracle_omega()}, {"search_nodes", c.nodes},
           {"clique", vertex_names(graph, a.group(), c.witness)}};
    if (!is_clique(graph, c.witness) || c.witness.size() != c.size) {
      w["reason"] = "witness is not a clique of the reported size";
      return fail(w);
    }
    return c.size == a.oracle_omega() ? pass(w) : fail(w);
  });
}

Eval noncomm_bound(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto& g = a.group();
    if (g.is_abelian()) return na("group is abelian");
    const auto& b = a.bundle();
    const auto& nc = b.noncommuting;
    for (auto [u, v] : nc.edges()) {
      const std::size_t x = b.vertex_of[nc.elements()[u]], y = b.vertex_of[nc.elements()[v]];
      if (x == kNoVertex || y == kNoVertex || !b.noncyclic.adjacent(x, y))
        return fail(json{{"reason", "non-commuting pair generates a cyclic group"},
                         {"x", g.name(nc.elements()[u])},
                         {"y", g.name(nc.elements()[v])}});
    }
    const auto c = clique_number(nc, a.options().budget);
    json w{{"omega", a.omega()}, {"omega_noncommuting", c.size}, {"noncommuting_clique", vertex_names(nc, g, c.witness)}};
    return c.size <= a.omega() ? pass(w) : fail(w);
  });
}

Eval ham_quotient(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto& g = a.group();
    const auto& cd = a.cyclicizer();
    auto& q = a.quotient();
    if (q.is_cyclic()) return fail(json{{"reason", "quotient by Cyc(G) is cyclic"}});
    const auto& qgraph = q.graph(GraphKind::kNoncyclic);
    if (qgraph.vertex_count() < 3) return na("quotient graph has fewer than 3 vertices");
    const auto& qh = q.hamiltonian();
    if (qh.status == HamiltonResult::Status::kTimeout) return timed_out("quotient Hamilton search");
    if (qh.status == HamiltonResult::Status::kNone) return na("quotient graph is not Hamiltonian");
    const auto& b = a.bundle();
    std::vector<std::size_t> lifted;
    for (auto c : cd.cyc.indices())
      for (auto v : qh.cycle) {
        const Element rep = cd.quotient.representatives[qgraph.elements()[v]];
        lifted.push_back(b.vertex_of[g.mul(rep, static_cast<Element>(c))]);
      }
    json w{{"quotient_cycle", vertex_names(qgraph, q.group(), qh.cycle)}, {"lifted_length", lifted.size()}};
    if (std::find(lifted.begin(), lifted.end(), kNoVertex) != lifted.end() ||
        !is_hamilton_cycle(b.noncyclic, lifted)) {
      w["reason"] = "lifted sequence is not a Hamilton cycle";
      return fail(w);
    }
    return pass(w);
  });
}

Eval ham_dirac(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto& g = a.group();
    const auto& cd = a.cyclicizer();
    const std::size_t n = g.order(), c = cd.cyc.count();
    for (Element x = 0; x < n; ++x)
      if (a.center().test(x) && !cd.cyc.test(x) && n + c <= 2 * cd.cyc_of[x].count())
        return na("hypothesis fails at " + g.name(x));
    const auto& graph = a.graph(GraphKind::kNoncyclic);
    const std::size_t m = graph.vertex_count();
    std::size_t min_deg = m;
    for (std::size_t v = 0; v < m; ++v) {
      min_deg = std::min(min_deg, graph.degree(v));
      if (2 * graph.degree(v) <= m)
        return fail(json{{"reason", "degree not above half"}, {"vertex", g.name(graph.elements()[v])},
                         {"degree", graph.degree(v)}, {"vertices", m}});
    }
    const auto& h = a.hamiltonian();
    if (h.status == HamiltonResult::Status::kTimeout) return timed_out("Hamilton search");
    json w{{"min_degree", min_deg}, {"vertices", m}};
    if (h.status != HamiltonResult::Status::kFound || !is_hamilton_cycle(graph, h.cycle)) {
      w["reason"] = "no Hamilton cycle found";
      return fail(w);
    }
    w["cycle_start"] = vertex_names(graph, g, std::vector<std::size_t>(h.cycle.begin(), h.cycle.begin() + 3));
    return pass(w);
  });
}

Eval planar_char(GroupAnalysis& a) {
  return guard_noncyclic(a, [&]() -> Eval {
    const auto& g = a.group();
    std::size_t involutions = 0;
    for (auto o : g.element_orders()) involutions += o == 2;
    const std::size_t n = g.order();
    std::string signature;
    if (n == 4 && g.exponent() == 2) signature = "Z2xZ2";
    if (n == 6 && !g.is_abelian()) signature = "S3";
    if (n == 8 && !g.is_abelian() && involutions == 1) signature = "Q8";
    const auto& p = a.planarity();
    const auto& graph = a.graph(GraphKind::kNoncyclic);
    json w{{"planar", p.planar}, {"signature", signature.empty() ? json(nullptr) : json(signature)},
           {"certificate", p.describe()}};
    if (!p.planar) {
      if (!p.obstruction) {
        w["reason"] = "non-planar verdict without a Kuratowski certificate";
        return fail(w);
      }
      json edges = json::array();
      for (auto [u, v] : p.kuratowski_edges)
        edges.push_back(json::array({g.name(graph.elements()[u]), g.name(graph.elements()[v])}));
      w["kuratowski_edges"] = edges;
    }
    return p.planar == !signature.empty() ? pass(w) : fail(w);
  });
}

Eval psl2_sylow(GroupAnalysis& a) {
  const auto* s = a.spec() ? a.spec()->get_if<spec::PSL2>() : nullptr;
  if (!s) return na("not a PSL2 catalog entry");
  const auto& g = a.group();
  const std::size_t q = s->q, n = g.order();
  const std::size_t p = as_prime_power(q)->first;
  json rows = json::array();

  auto check_prime = [&](std::size_t r, std::size_t expected, bool cyclic_sylow) -> std::optional<Eval> {
    const std::size_t sylow_order = p_part(n, r);
    std::size_t nontrivial = 0, of_order_r = 0;
    bool has_generator = false;
    for (auto o : g.element_orders()) {
      if (o > 1 && is_power_of(o, r)) ++nontrivial;
      if (o == r) ++of_order_r;
      if (o == sylow_order) has_generator = true;
    }
    json row{{"prime", r}, {"sylow_order", sylow_order}, {"expected", expected}, {"nu", of_order_r / (r - 1)}};
    std::size_t derived = 0;
    if (cyclic_sylow) {
      row["cyclic"] = has_generator;
      // Each cyclic Sylow r-subgroup holds exactly one subgroup of order r.
      if (!has_generator || of_order_r % (r - 1) != 0) return fail(row);
      derived = of_order_r / (r - 1);
    } else {
      // Elementary abelian Sylow p-subgroups meeting trivially.
      if (nontrivial % (sylow_order - 1) != 0) return fail(row);
      derived = nontrivial / (sylow_order - 1);
    }
    const std::size_t by_normalizer = sylow_count(g, r);
    row["count_from_elements"] = derived;
    row["count_from_normalizer"] = by_normalizer;
    if (derived != expected || by_normalizer != expected) return fail(row);
    rows.push_back(row);
    return std::nullopt;
  };

  for (auto r : prime_divisors(q + 1))
    if (r != 2)
      if (auto e = check_prime(r, q * (q - 1) / 2, true)) return *e;
  for (auto r : prime_divisors(q - 1))
    if (r != 2)
      if (auto e = check_prime(r, q * (q + 1) / 2, true)) return *e;
  if (auto e = check_prime(p, q + 1, false)) return *e;
  return pass(json{{"q", q}, {"primes", rows}});
}

Eval a5_31(GroupAnalysis& a) {
  const auto& sp = a.spec();
  const bool is_a5 = sp && *sp == GroupSpec(spec::Alternating{5});
  const bool is_s5 = sp && *sp == GroupSpec(spec::Symmetric{5});
  const bool is_sl25 = sp && *sp == GroupSpec(spec::SL2{5});
  if (!is_a5 && !is_s5 && !is_sl25) return na("not A5, S5 or SL2(5)");
  const auto& g = a.group();
  const auto& cd = a.cyclicizer();
  const auto& b = a.bundle();
  json w{{"oracle", a.oracle_omega()}, {"cyc_order", cd.cyc.count()}, {"quotient_order", cd.quotient.group.order()}};
  if (a.oracle_omega() != 31) return fail(w);
  if (a.omega_by_bnb()) {
    const auto& c = a.bnb_clique();
    w["branch_and_bound"] = c.size;
    if (c.size != 31 || !is_clique(b.noncyclic, c.witness)) return fail(w);
  }
  if (is_sl25 && (cd.cyc.count() != 2 || cd.quotient.group.order() != 60)) return fail(w);
  if (is_sl25) return pass(w);

  const auto gens = maximal_cyclic_generators(g);
  std::vector<std::size_t> clique;
  for (auto x : gens) clique.push_back(b.vertex_of[x]);
  w["canonical_clique"] = names_of(g, gens);
  if (!is_clique(b.noncyclic, clique)) return fail(w);
  // Every non-trivial a lies in some <x>, x in the clique, and may replace x.
  for (Element e = 1; e < g.order(); ++e) {
    bool placed = false;
    for (auto x : gens) {
      if (!cyclic_subgroup(g, x).test(e)) continue;
      placed = std::all_of(gens.begin(), gens.end(),
                           [&](Element c) { return c == x || !cd.generates_cyclic(e, c); });
      if (placed) break;
    }
    if (!placed) {
      w["element_outside_every_maximum_clique"] = g.name(e);
      return fail(w);
    }
  }
  if (is_s5) {
    ElementSet cover = g.empty_set();
    for (auto x : gens) {
      if (!(cd.cyc_of[x] == cyclic_subgroup(g, x))) {
        w["cyc_set_not_cyclic_subgroup"] = g.name(x);
        return fail(w);
      }
      cover |= cd.cyc_of[x];
    }
    w["union_of_cyc_sets"] = cover.count();
    if (cover.count() != g.order()) return fail(w);
  }
  return pass(w);
}

Eval c2f42_diams(GroupAnalysis& a) {
  const GroupSpec target = spec::DirectProduct{{spec::Cyclic{2}, spec::SemidirectCyclic{7, 6, 3}}};
  if (!a.spec() || !(*a.spec() == target)) return na("not C2 x C7:C6");
  const Distance dn = a.distances(GraphKind::kNoncyclic).diameter();
  const Distance dc = a.distances(GraphKind::kCyclic).diameter();
  json w{{"diam_noncyclic", dist(dn)}, {"diam_cyclic", dist(dc)}};
  return dn == Distance::finite(2) && dc == Distance::finite(4) ? pass(w) : fail(w);
}

Eval c6s3_nonexample(GroupAnalysis& a) {
  const GroupSpec target = spec::DirectProduct{{spec::Cyclic{6}, spec::Symmetric{3}}};
  if (!a.spec() || !(*a.spec() == target)) return na("not C6 x S3");
  const auto& g = a.group();
  const auto& cd = a.cyclicizer();
  // The order-3 elements of the C6 factor are exactly the central ones of order 3.
  std::optional<Element> x;
  for (Element e = 1; e < g.order() && !x; ++e)
    if (g.element_order(e) == 3 && a.center().test(e)) x = e;
  if (!x) return fail(json{{"reason", "no central element of order 3"}});
  const std::size_t cx = cd.cyc_of[*x].count(), c = cd.cyc.count();
  json w{{"x", g.name(*x)}, {"cyc_order", c}, {"cyc_x_order", cx},
         {"hypothesis_fails", g.order() + c <= 2 * cx}};
  return c == 1 && cx == 24 && g.order() + c <= 2 * cx ? pass(w) : fail(w);
}

struct Row {
  PropertyInfo info;
  std::function<Eval(GroupAnalysis&)> check;
};

const std::vector<Row>& rows() {
  static const std::vector<Row> table = {
      {{"P-EDGE-QUOTIENT", "edges between distinct cosets of Cyc(G) match the quotient graph"}, edge_quotient},
      {{"P-DIAM-QUOTIENT", "distances and diameters agree with G/Cyc(G)"}, diam_quotient},
      {{"P-DIST3-CHAR", "d(x,y)=3 iff G is the union of Cyc(x) and Cyc(y)"}, dist3_char},
      {{"P-COMPLEMENT-NOT-COMPLETE", "the cyclic graph is never complete"}, complement_not_complete},
      {{"P-PRIMEPOWER-DISCONNECTED", "prime-power order gives a disconnected cyclic graph"}, primepower_disconnected},
      {{"P-DIAM3-IMPLIES", "diameter 3 forces a connected cyclic graph of diameter 2 or 3"}, diam3_implies},
      {{"P-DIAM3-EQUIV-SCAN", "diameter 3 in one graph iff diameter 3 in the other"}, diam3_equiv_scan},
      {{"P-GAMMA-COMPLEMENT", "domination number of the cyclic graph is at least 2, equal iff diameter 3"},
       gamma_complement},
      {{"P-GAMMA-ONE", "domination number 1 iff trivial Cyc(G) and an involution with Cyc(x)=<x>"}, gamma_one},
      {{"P-GAMMA-DIHEDRAL-FAMILY", "generalized dihedral groups of odd index-2 part have domination number 1"},
       gamma_dihedral_family},
      {{"P-CLIQUE-GE3", "clique number at least 3"}, clique_ge3},
      {{"P-CLIQUE-QUOTIENT-EQ", "clique number equals that of G/Cyc(G)"}, clique_quotient_eq},
      {{"P-CLIQUE-QUOTIENT-MONO", "clique number does not grow in quotients; equality iff N inside Cyc(G)"},
       clique_quotient_mono},
      {{"P-SYLOW-CLIQUE", "subgroup counts of prime order bound the clique number"}, sylow_clique},
      {{"P-PELEMENT-CENTER", "p-element powers central when p^(k-1) < omega <= p^k"}, pelement_center},
      {{"P-CLIQUE3-CHAR", "omega=3 iff G/Cyc(G) is Z2xZ2"}, [](GroupAnalysis& a) { return clique_char(a, 3); }},
      {{"P-CLIQUE4-CHAR", "omega=4 iff G/Cyc(G) is Z3xZ3 or S3"}, [](GroupAnalysis& a) { return clique_char(a, 4); }},
      {{"P-EXPONENT-P", "exponent-p groups of order p^n have omega=(p^n-1)/(p-1)"}, exponent_p},
      {{"P-PRODUCT-CLIQUE", "coprime products multiply clique lower bounds"}, product_clique},
      {{"P-CLIQUE-ORACLE", "branch and bound agrees with the maximal cyclic subgroup count"}, clique_oracle},
      {{"P-NONCOMM-BOUND", "the non-commuting clique number is at most omega"}, noncomm_bound},
      {{"P-HAM-QUOTIENT", "a Hamilton cycle of the quotient graph lifts"}, ham_quotient},
      {{"P-HAM-DIRAC", "degree condition gives a Hamilton cycle"}, ham_dirac},
      {{"P-PLANAR-CHAR", "planar exactly for Z2xZ2, S3 and Q8"}, planar_char},
      {{"P-PSL2-SYLOW", "Sylow counts of PSL2(q)"}, psl2_sylow},
      {{"P-A5-31", "A5, S5 and SL2(5) have omega=31"}, a5_31},
      {{"P-C2F42-DIAMS", "C2 x C7:C6 has diameters 2 and 4"}, c2f42_diams},
      {{"P-C6S3-NONEXAMPLE", "C6 x S3 violates the degree hypothesis at a central order-3 element"},
       c6s3_nonexample},
  };
  return table;
}

const Row& find_row(std::string_view id) {
  for (const auto& r : rows())
    if (r.info.id == id) return r;
  throw InvalidSpecError("unknown property: " + std::string(id));
}

}  // namespace

const std::vector<PropertyInfo>& property_registry() {
  static const std::vector<PropertyInfo> infos = [] {
    std::vector<PropertyInfo> out;
    for (const auto& r : rows()) out.push_back(r.info);
    return out;
  }();
  return infos;
}

bool is_known_property(std::string_view id) {
  for (const auto& r : rows())
    if (r.info.id == id) return true;
  return false;
}

Verdict run_property(std::string_view id, GroupAnalysis& analysis) {
  const Row& row = find_row(id);
  Verdict v;
  v.property = std::string(row.info.id);
  v.group = analysis.label();
  const auto start = std::chrono::steady_clock::now();
  const auto& deadline = analysis.options().budget.deadline;
  try {
    if (deadline && start > *deadline) {
      v.outcome = Outcome::kTimeout;
      v.witness = json{{"reason", "group deadline passed before evaluation"}};
    } else {
      Eval e = row.check(analysis);
      v.outcome = e.outcome;
      v.witness = std::move(e.witness);
    }
  } catch (const BudgetExhaustedError& e) {
    v.outcome = Outcome::kTimeout;
    v.witness = json{{"reason", e.what()}};
  } catch (const Error& e) {
    v.outcome = Outcome::kFail;
    v.witness = json{{"error", e.what()}};
  }
  if (v.outcome == Outcome::kFail && v.witness.empty()) v.witness = json{{"reason", "check failed"}};
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return v;
}

Verdict run_property(std::string_view id, std::shared_ptr<const FiniteGroup> group, std::optional<GroupSpec> spec) {
  GroupAnalysis a(std::move(group), std::move(spec));
  return run_property(id, a);
}

std::vector<Verdict> run_all_properties(GroupAnalysis& analysis) {
  std::vector<Verdict> out;
  for (const auto& r : rows()) out.push_back(run_property(r.info.id, analysis));
  return out;
}

std::vector<Verdict> run_all_properties(std::shared_ptr<const FiniteGroup> group, std::optional<GroupSpec> spec) {
  GroupAnalysis a(std::move(group), std::move(spec));
  return run_all_properties(a);
}

}  // namespace noncyc
