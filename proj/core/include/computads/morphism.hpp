#pragma once

#include <map>
#include <string>
#include <vector>

#include "computads/computad.hpp"

namespace computads {

/* A morphism of doubly degenerate 3-computads: a map of 2-cell labels and
   a map of 3-cell names such that boundaries commute serially, i.e.
   push_forward(map2, src(e)) == src(map3(e)) and likewise for targets.

   Endpoints are stored by value; equality compares endpoints structurally
   and the two map tables, ignoring the morphism's own name. */
class Morphism {
 public:
  using LabelMap = std::map<Label, Label>;

  Morphism() = default;
  Morphism(Label name, Computad dom, Computad cod, LabelMap map2,
           LabelMap map3);

  const Label& name() const { return name_; }
  const Computad& dom() const { return dom_; }
  const Computad& cod() const { return cod_; }
  const LabelMap& map2() const { return map2_; }
  const LabelMap& map3() const { return map3_; }

  /* image of a 2-cell label / 3-cell name; UnmappedLabel when absent */
  const Label& apply2(const Label& label) const;
  const Label& apply3(const Label& name) const;

  Morphism renamed(Label new_name) const;

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.map2_ == b.map2_ &&
           a.map3_ == b.map3_;
  }

 private:
  Label name_;
  Computad dom_;
  Computad cod_;
  LabelMap map2_;
  LabelMap map3_;
};

/* Diagnostics, empty means valid: map tables total on the domain cells,
   images declared in the codomain, and serial boundary commutation. */
std::vector<std::string> validate_morphism(const Morphism& f);
bool is_valid(const Morphism& f);

Morphism identity(const Computad& x);

/* after . before, defined when cod(before) == dom(after) structurally;
   otherwise NonComposable */
Morphism compose(const Morphism& after, const Morphism& before);

}  // namespace computads
