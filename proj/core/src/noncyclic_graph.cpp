#include "noncyc/noncyclic_graph.hpp"

#include "noncyc/error.hpp"
#include "noncyc/group_ops.hpp"

namespace noncyc {

GroupGraphBundle build_bundle(std::shared_ptr<const FiniteGroup> group) {
  auto data = std::make_shared<const CyclicizerData>(CyclicizerData::compute(group));
  return build_bundle(std::move(group), std::move(data));
}

GroupGraphBundle build_bundle(std::shared_ptr<const FiniteGroup> group, std::shared_ptr<const CyclicizerData> data) {
  const FiniteGroup& g = *group;
  const std::size_t n = g.order();
  if (data->cyc.count() == n) throw CyclicGroupError();

  GroupGraphBundle b;
  b.group = group;
  b.cyclicizer = data;
  b.center = center(g);

  std::vector<Element> verts;
  b.vertex_of.assign(n, kNoVertex);
  for (Element x = 0; x < n; ++x)
    if (!data->cyc.test(x)) {
      b.vertex_of[x] = verts.size();
      verts.push_back(x);
    }
  const std::size_t m = verts.size();
  b.noncyclic = SimpleGraph(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!data->generates_cyclic(verts[i], verts[j])) b.noncyclic.add_edge(i, j);
  std::vector<std::string> labels;
  for (auto x : verts) labels.push_back(g.name(x));
  b.noncyclic.set_elements(verts);
  b.noncyclic.set_labels(labels);
  b.cyclic_graph = complement(b.noncyclic);

  std::vector<Element> nc_verts;
  b.noncommuting_vertex_of.assign(n, kNoVertex);
  for (Element x = 0; x < n; ++x)
    if (!b.center.test(x)) {
      b.noncommuting_vertex_of[x] = nc_verts.size();
      nc_verts.push_back(x);
    }
  b.noncommuting = SimpleGraph(nc_verts.size());
  for (std::size_t i = 0; i < nc_verts.size(); ++i)
    for (std::size_t j = i + 1; j < nc_verts.size(); ++j)
      if (!g.commute(nc_verts[i], nc_verts[j])) b.noncommuting.add_edge(i, j);
  std::vector<std::string> nc_labels;
  for (auto x : nc_verts) nc_labels.push_back(g.name(x));
  b.noncommuting.set_elements(std::move(nc_verts));
  b.noncommuting.set_labels(std::move(nc_labels));
  return b;
}

std::vector<Element> maximal_cyclic_generators(const FiniteGroup& g) {
  std::vector<Element> gens;
  for (const auto& c : maximal_cyclic_subgroups(g)) {
    const std::size_t size = c.count();
    std::optional<Element> gen;
    c.for_each([&](std::size_t x) {
      if (!gen && g.element_order(static_cast<Element>(x)) == size) gen = static_cast<Element>(x);
    });
    gens.push_back(*gen);
  }
  return gens;
}

std::size_t clique_number_via_maximal_cyclic(const FiniteGroup& g) {
  if (is_cyclic(g)) throw CyclicGroupError();
  return maximal_cyclic_subgroups(g).size();
}

}  // namespace noncyc
