#include "computads/constructions.hpp"

#include <algorithm>

namespace computads {

Label pair_label(const Label& a, const Label& b) {
  return "(" + a + "," + b + ")";
}

namespace {

/* boundary multiset over pair labels from a pairing */
LabelMultiset boundary_of_pairing(const Pairing& p) {
  LabelMultiset::Counts counts;
  for (const auto& [pr, k] : p.counts()) counts[pair_label(pr.first, pr.second)] += k;
  return LabelMultiset(std::move(counts));
}

}  // namespace

ProductResult product(const Computad& a, const Computad& b, Label name) {
  if (name.empty()) name = a.name() + "x" + b.name();

  std::vector<Label> cells2;
  Morphism::LabelMap left2, right2;
  for (const Label& la : a.cells2())
    for (const Label& lb : b.cells2()) {
      Label pl = pair_label(la, lb);
      left2[pl] = la;
      right2[pl] = lb;
      cells2.push_back(std::move(pl));
    }

  std::vector<ThreeCell> cells3;
  Morphism::LabelMap left3, right3;
  std::map<Label, ProductCellOrigin> cell_index;
  std::map<ProductCellOrigin, Label> by_origin;
  for (const ThreeCell& f : a.cells3())
    for (const ThreeCell& g : b.cells3()) {
      std::vector<Pairing> src_pairings = enumerate_pairings(f.src, g.src);
      std::vector<Pairing> tgt_pairings = enumerate_pairings(f.tgt, g.tgt);
      int index = 0;
      for (const Pairing& ps : src_pairings)
        for (const Pairing& pt : tgt_pairings) {
          Label cell = pair_label(f.name, g.name) + "#" + std::to_string(++index);
          cells3.push_back({cell, boundary_of_pairing(ps), boundary_of_pairing(pt)});
          left3[cell] = f.name;
          right3[cell] = g.name;
          ProductCellOrigin origin{f.name, g.name, ps, pt};
          cell_index[cell] = origin;
          by_origin[std::move(origin)] = cell;
        }
    }

  Computad object(std::move(name), std::move(cells2), std::move(cells3));
  Morphism proj_left("p", object, a, std::move(left2), std::move(left3));
  Morphism proj_right("q", object, b, std::move(right2), std::move(right3));
  internal_check(is_valid(proj_left) && is_valid(proj_right),
                 "product projections fail validation");
  return {std::move(object), std::move(proj_left), std::move(proj_right),
          std::move(cell_index), std::move(by_origin)};
}

Morphism pair_into_product(const Morphism& u, const Morphism& v,
                           const ProductResult& prod, Label name) {
  if (!(u.dom() == v.dom()))
    throw Error("pair_into_product: domains of the two morphisms differ");
  if (!(u.cod() == prod.proj_left.cod()))
    throw Error("pair_into_product: cod(u) is not the left factor");
  if (!(v.cod() == prod.proj_right.cod()))
    throw Error("pair_into_product: cod(v) is not the right factor");
  if (name.empty()) name = "<" + u.name() + "," + v.name() + ">";

  const Computad& y = u.dom();
  Morphism::LabelMap map2, map3;
  for (const Label& t : y.cells2()) {
    Label pl = pair_label(u.apply2(t), v.apply2(t));
    internal_check(prod.object.has_cell2(pl),
                   "pair_into_product: product lacks 2-cell " + pl);
    map2[t] = std::move(pl);
  }
  for (const ThreeCell& e : y.cells3()) {
    ProductCellOrigin origin;
    origin.left = u.apply3(e.name);
    origin.right = v.apply3(e.name);
    Pairing::Counts src_counts, tgt_counts;
    for (const auto& [t, k] : e.src.counts())
      src_counts[{u.apply2(t), v.apply2(t)}] += k;
    for (const auto& [t, k] : e.tgt.counts())
      tgt_counts[{u.apply2(t), v.apply2(t)}] += k;
    origin.src_pairing = Pairing(std::move(src_counts));
    origin.tgt_pairing = Pairing(std::move(tgt_counts));
    auto it = prod.by_origin.find(origin);
    internal_check(it != prod.by_origin.end(),
                   "pair_into_product: no product 3-cell realizes the image of " +
                       e.name);
    map3[e.name] = it->second;
  }
  Morphism k(std::move(name), y, prod.object, std::move(map2), std::move(map3));
  internal_check(is_valid(k), "pair_into_product result fails validation");
  return k;
}

namespace {

struct UnionFind {
  std::map<Label, Label> parent;

  void ensure(const Label& x) { parent.emplace(x, x); }

  const Label& find(const Label& x) {
    Label& p = parent.at(x);
    if (p == x) return p;
    const Label& root = find(p);
    p = root;  // path compression
    return p;
  }

  void unite(const Label& x, const Label& y) {
    Label rx = find(x), ry = find(y);
    if (rx == ry) return;
    if (ry < rx) std::swap(rx, ry);  // keep the least label as root
    parent[ry] = rx;
  }
};

Label class_label(const std::vector<Label>& members) {
  if (members.size() == 1) return members.front();
  std::string out = "[";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out += "|";
    out += members[i];
  }
  return out + "]";
}

}  // namespace

CoequalizerResult coequalizer(const Morphism& a1, const Morphism& a2,
                              Label name) {
  if (!(a1.dom() == a2.dom()) || !(a1.cod() == a2.cod()))
    throw IncompatibleParallelPair("coequalizer: the two morphisms are not parallel");
  const Computad& a = a1.cod();
  if (name.empty()) name = "coeq(" + a1.name() + "," + a2.name() + ")";

  UnionFind uf2;
  for (const Label& t : a.cells2()) uf2.ensure(t);
  for (const Label& x : a1.dom().cells2()) uf2.unite(a1.apply2(x), a2.apply2(x));
  std::map<Label, std::vector<Label>> members2;
  for (const Label& t : a.cells2()) members2[uf2.find(t)].push_back(t);

  std::map<Label, std::vector<Label>> classes2;
  Morphism::LabelMap q2;
  for (auto& [root, members] : members2) {
    std::sort(members.begin(), members.end());
    Label label = class_label(members);
    for (const Label& m : members) q2[m] = label;
    classes2[std::move(label)] = members;
  }

  UnionFind uf3;
  for (const ThreeCell& e : a.cells3()) uf3.ensure(e.name);
  for (const ThreeCell& e : a1.dom().cells3())
    uf3.unite(a1.apply3(e.name), a2.apply3(e.name));
  std::map<Label, std::vector<Label>> members3;
  for (const ThreeCell& e : a.cells3()) members3[uf3.find(e.name)].push_back(e.name);

  std::map<Label, std::vector<Label>> classes3;
  Morphism::LabelMap q3;
  std::vector<ThreeCell> cells3;
  for (auto& [root, members] : members3) {
    std::sort(members.begin(), members.end());
    Label label = class_label(members);
    const ThreeCell* rep = a.find_cell3(members.front());
    LabelMultiset src = push_forward(q2, rep->src);
    LabelMultiset tgt = push_forward(q2, rep->tgt);
    for (const Label& m : members) {
      const ThreeCell* cell = a.find_cell3(m);
      internal_check(push_forward(q2, cell->src) == src &&
                         push_forward(q2, cell->tgt) == tgt,
                     "coequalizer: boundaries of class " + label +
                         " disagree across members");
      q3[m] = label;
    }
    cells3.push_back({label, std::move(src), std::move(tgt)});
    classes3[std::move(label)] = members;
  }

  std::vector<Label> cells2;
  for (const auto& [label, members] : classes2) cells2.push_back(label);
  Computad object(std::move(name), std::move(cells2), std::move(cells3));
  Morphism q("q", a, object, std::move(q2), std::move(q3));
  internal_check(is_valid(q), "coequalizer projection fails validation");
  internal_check(compose(q, a1) == compose(q, a2),
                 "coequalizer projection does not coequalize the pair");
  return {std::move(object), std::move(q), std::move(classes2),
          std::move(classes3), a1, a2};
}

Morphism coeq_factor(const CoequalizerResult& ce, const Morphism& u,
                     Label name) {
  if (!(u.dom() == ce.q.dom()))
    throw Error("coeq_factor: dom(u) is not the domain of the quotient");
  if (!(compose(u, ce.alpha1) == compose(u, ce.alpha2)))
    throw ConeConditionViolated("coeq_factor: u does not coequalize the pair");
  if (name.empty()) name = u.name() + "/q";

  Morphism::LabelMap map2, map3;
  for (const auto& [label, members] : ce.classes2) {
    const Label& image = u.apply2(members.front());
    for (const Label& m : members)
      internal_check(u.apply2(m) == image,
                     "coeq_factor: 2-cell class " + label +
                         " has members with different images");
    map2[label] = image;
  }
  for (const auto& [label, members] : ce.classes3) {
    const Label& image = u.apply3(members.front());
    for (const Label& m : members)
      internal_check(u.apply3(m) == image,
                     "coeq_factor: 3-cell class " + label +
                         " has members with different images");
    map3[label] = image;
  }
  Morphism k(std::move(name), ce.object, u.cod(), std::move(map2), std::move(map3));
  internal_check(is_valid(k), "coeq_factor result fails validation");
  internal_check(compose(k, ce.q) == u, "coeq_factor: k . q != u");
  return k;
}

Morphism product_of_morphisms(const Morphism& h, const ProductResult& prod_xb,
                              const ProductResult& prod_ab, Label name) {
  if (!(h.dom() == prod_xb.proj_left.cod()))
    throw Error("product_of_morphisms: dom(h) is not the left factor of the domain product");
  if (!(h.cod() == prod_ab.proj_left.cod()))
    throw Error("product_of_morphisms: cod(h) is not the left factor of the codomain product");
  if (!(prod_xb.proj_right.cod() == prod_ab.proj_right.cod()))
    throw Error("product_of_morphisms: the two products have different right factors");
  if (name.empty()) name = h.name() + "x1";
  return pair_into_product(compose(h, prod_xb.proj_left), prod_xb.proj_right,
                           prod_ab, std::move(name));
}

Morphism comparison_map(const CoequalizerResult& ce_p,
                        const ProductResult& prod_cb, const Morphism& beta,
                        Label name) {
  const Computad& a = beta.dom();
  const Computad& b = prod_cb.proj_right.cod();
  ProductResult prod_ab = product(a, b);
  if (!(prod_ab.object == ce_p.q.dom()))
    throw Error("comparison_map: coequalizer domain is not the product of beta's domain with the right factor");
  if (name.empty()) name = "cmp";
  Morphism u = product_of_morphisms(beta, prod_ab, prod_cb);
  return coeq_factor(ce_p, u, std::move(name));
}

}  // namespace computads
