#pragma once

#include <compare>
#include <string>
#include <vector>

#include "computads/multiset.hpp"

namespace computads {

/* A generating 3-cell: a name plus source and target words in the free
   commutative monoid on the 2-cell labels. */
struct ThreeCell {
  Label name;
  LabelMultiset src;
  LabelMultiset tgt;

  friend bool operator==(const ThreeCell&, const ThreeCell&) = default;
  friend auto operator<=>(const ThreeCell&, const ThreeCell&) = default;
};

/* A doubly degenerate 3-computad: one 0-cell and no 1-cells are implicit,
   so the whole structure is a set of 2-cell labels plus 3-cells whose
   boundaries are multisets of those labels.

   Cell containers are kept sorted so that iteration order, printing and
   enumeration are deterministic. Construction does not validate; see
   validate_computad. */
class Computad {
 public:
  Computad() = default;
  Computad(Label name, std::vector<Label> two_cells,
           std::vector<ThreeCell> three_cells);

  const Label& name() const { return name_; }
  const std::vector<Label>& cells2() const { return cells2_; }
  const std::vector<ThreeCell>& cells3() const { return cells3_; }

  bool has_cell2(const Label& label) const;
  /* nullptr when absent; the first match if names are duplicated */
  const ThreeCell* find_cell3(const Label& name) const;

  Computad renamed(Label new_name) const;

  /* structural equality of the cell data; the object name is metadata */
  friend bool operator==(const Computad& a, const Computad& b) {
    return a.cells2_ == b.cells2_ && a.cells3_ == b.cells3_;
  }

 private:
  Label name_;
  std::vector<Label> cells2_;
  std::vector<ThreeCell> cells3_;
};

/* Well-formedness diagnostics, empty means valid: distinct 2-cell labels,
   distinct 3-cell names, every boundary supported on declared 2-cells. */
std::vector<std::string> validate_computad(const Computad& x);
bool is_valid(const Computad& x);

}  // namespace computads
