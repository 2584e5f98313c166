#include "computads/morphism.hpp"

namespace computads {

Morphism::Morphism(Label name, Computad dom, Computad cod, LabelMap map2,
                   LabelMap map3)
    : name_(std::move(name)),
      dom_(std::move(dom)),
      cod_(std::move(cod)),
      map2_(std::move(map2)),
      map3_(std::move(map3)) {}

const Label& Morphism::apply2(const Label& label) const {
  auto it = map2_.find(label);
  if (it == map2_.end()) throw UnmappedLabel(label);
  return it->second;
}

const Label& Morphism::apply3(const Label& name) const {
  auto it = map3_.find(name);
  if (it == map3_.end()) throw UnmappedLabel(name);
  return it->second;
}

Morphism Morphism::renamed(Label new_name) const {
  Morphism out = *this;
  out.name_ = std::move(new_name);
  return out;
}

std::vector<std::string> validate_morphism(const Morphism& f) {
  std::vector<std::string> out;
  for (const Label& a : f.dom().cells2()) {
    auto it = f.map2().find(a);
    if (it == f.map2().end()) {
      out.push_back("map2 missing entry for 2-cell " + a);
    } else if (!f.cod().has_cell2(it->second)) {
      out.push_back("2-cell " + a + ": image " + it->second +
                    " not a 2-cell of the codomain");
    }
  }
  for (const auto& [a, b] : f.map2())
    if (!f.dom().has_cell2(a))
      out.push_back("map2 entry for undeclared 2-cell " + a);
  for (const ThreeCell& e : f.dom().cells3()) {
    auto it = f.map3().find(e.name);
    if (it == f.map3().end()) {
      out.push_back("map3 missing entry for 3-cell " + e.name);
      continue;
    }
    const ThreeCell* image = f.cod().find_cell3(it->second);
    if (image == nullptr) {
      out.push_back("3-cell " + e.name + ": image " + it->second +
                    " not a 3-cell of the codomain");
      continue;
    }
    try {
      if (push_forward(f.map2(), e.src) != image->src)
        out.push_back("3-cell " + e.name + ": source boundary does not commute");
      if (push_forward(f.map2(), e.tgt) != image->tgt)
        out.push_back("3-cell " + e.name + ": target boundary does not commute");
    } catch (const UnmappedLabel& err) {
      out.push_back("3-cell " + e.name + ": boundary mentions " + err.label +
                    " which map2 does not cover");
    }
  }
  for (const auto& [e, im] : f.map3())
    if (f.dom().find_cell3(e) == nullptr)
      out.push_back("map3 entry for undeclared 3-cell " + e);
  return out;
}

bool is_valid(const Morphism& f) { return validate_morphism(f).empty(); }

Morphism identity(const Computad& x) {
  Morphism::LabelMap map2, map3;
  for (const Label& a : x.cells2()) map2[a] = a;
  for (const ThreeCell& e : x.cells3()) map3[e.name] = e.name;
  return Morphism("id_" + x.name(), x, x, std::move(map2), std::move(map3));
}

Morphism compose(const Morphism& after, const Morphism& before) {
  if (!(before.cod() == after.dom()))
    throw NonComposable("compose: cod(" + before.name() + ") != dom(" +
                        after.name() + ")");
  Morphism::LabelMap map2, map3;
  for (const auto& [a, b] : before.map2()) map2[a] = after.apply2(b);
  for (const auto& [e, im] : before.map3()) map3[e] = after.apply3(im);
  return Morphism(after.name() + "." + before.name(), before.dom(),
                  after.cod(), std::move(map2), std::move(map3));
}

}  // namespace computads
