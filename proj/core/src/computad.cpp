#include "computads/computad.hpp"

#include <algorithm>

namespace computads {

Computad::Computad(Label name, std::vector<Label> two_cells,
                   std::vector<ThreeCell> three_cells)
    : name_(std::move(name)),
      cells2_(std::move(two_cells)),
      cells3_(std::move(three_cells)) {
  std::sort(cells2_.begin(), cells2_.end());
  std::sort(cells3_.begin(), cells3_.end(),
            [](const ThreeCell& a, const ThreeCell& b) {
              return std::tie(a.name, a.src, a.tgt) <
                     std::tie(b.name, b.src, b.tgt);
            });
}

bool Computad::has_cell2(const Label& label) const {
  return std::binary_search(cells2_.begin(), cells2_.end(), label);
}

const ThreeCell* Computad::find_cell3(const Label& name) const {
  auto it = std::lower_bound(
      cells3_.begin(), cells3_.end(), name,
      [](const ThreeCell& c, const Label& n) { return c.name < n; });
  if (it == cells3_.end() || it->name != name) return nullptr;
  return &*it;
}

Computad Computad::renamed(Label new_name) const {
  Computad out = *this;
  out.name_ = std::move(new_name);
  return out;
}

std::vector<std::string> validate_computad(const Computad& x) {
  std::vector<std::string> out;
  const auto& c2 = x.cells2();
  for (std::size_t i = 1; i < c2.size(); ++i)
    if (c2[i] == c2[i - 1])
      out.push_back("duplicate 2-cell label " + c2[i]);
  const auto& c3 = x.cells3();
  for (std::size_t i = 1; i < c3.size(); ++i)
    if (c3[i].name == c3[i - 1].name)
      out.push_back("duplicate 3-cell name " + c3[i].name);
  for (const ThreeCell& e : c3) {
    for (const auto& [label, k] : e.src.counts())
      if (!x.has_cell2(label))
        out.push_back("3-cell " + e.name + ": source mentions undeclared 2-cell " + label);
    for (const auto& [label, k] : e.tgt.counts())
      if (!x.has_cell2(label))
        out.push_back("3-cell " + e.name + ": target mentions undeclared 2-cell " + label);
  }
  return out;
}

bool is_valid(const Computad& x) { return validate_computad(x).empty(); }

}  // namespace computads
