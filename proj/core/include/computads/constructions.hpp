#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "computads/morphism.hpp"

namespace computads {

/* Where a product 3-cell came from: the factor cells and the chosen
   source/target pairings of their boundaries. */
struct ProductCellOrigin {
  Label left;
  Label right;
  Pairing src_pairing;
  Pairing tgt_pairing;

  friend bool operator==(const ProductCellOrigin&, const ProductCellOrigin&) = default;
  friend auto operator<=>(const ProductCellOrigin&, const ProductCellOrigin&) = default;
};

struct ProductResult {
  Computad object;
  Morphism proj_left;
  Morphism proj_right;
  std::map<Label, ProductCellOrigin> cell_index;
  std::map<ProductCellOrigin, Label> by_origin;
};

/* the 2-cell label of the pair (a, b), e.g. "(a1,b1)" */
Label pair_label(const Label& a, const Label& b);

/* Binary product. 2-cells are all pairs (a, b). For each pair of 3-cells
   f, g there is one product 3-cell per pair of pairings of the sources
   resp. targets, named "(f,g)#i" with i the 1-based position in the
   canonical enumeration (source pairing major, target pairing minor). */
ProductResult product(const Computad& a, const Computad& b, Label name = "");

/* The morphism <u, v> : Y -> A x B induced by u : Y -> A and v : Y -> B.
   Each 3-cell e goes to the product cell whose origin is (u(e), v(e))
   with the pairings carved out of e's boundaries. */
Morphism pair_into_product(const Morphism& u, const Morphism& v,
                           const ProductResult& prod, Label name = "");

struct CoequalizerResult {
  Computad object;
  Morphism q;
  /* quotient cell -> sorted members of its class */
  std::map<Label, std::vector<Label>> classes2;
  std::map<Label, std::vector<Label>> classes3;
  /* the parallel pair this coequalizer was built from */
  Morphism alpha1;
  Morphism alpha2;
};

/* Coequalizer of a parallel pair: union-find quotient on 2-cells and on
   3-cells. A merged class of size > 1 is labelled "[least|...|greatest]";
   singleton classes keep their label. Boundaries push forward along the
   2-cell quotient and are asserted equal across all class members. */
CoequalizerResult coequalizer(const Morphism& a1, const Morphism& a2,
                              Label name = "");

/* The unique k with k . q == u, for u coequalizing the stored pair;
   ConeConditionViolated otherwise. */
Morphism coeq_factor(const CoequalizerResult& ce, const Morphism& u,
                     Label name = "");

/* h x 1 : X x B -> A x B for h : X -> A, via pair_into_product of
   (h . proj_left, proj_right). */
Morphism product_of_morphisms(const Morphism& h, const ProductResult& prod_xb,
                              const ProductResult& prod_ab, Label name = "");

/* The canonical comparison map coeq(a1 x 1, a2 x 1) -> C x B induced by
   beta x 1, where beta : A -> C coequalizes the original pair. The product
   A x B is reconstructed from beta's domain and prod_cb's right factor and
   must match ce_p's domain. */
Morphism comparison_map(const CoequalizerResult& ce_p,
                        const ProductResult& prod_cb, const Morphism& beta,
                        Label name = "");

}  // namespace computads
