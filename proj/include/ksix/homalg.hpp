#pragma once

#include <optional>
#include <vector>

#include "ksix/hom.hpp"

namespace ksix {

// A subgroup is carried by an injective hom, never by an element set, so the
// same code covers finite and infinite groups. `lattice` is the full preimage
// lattice in the ambient canonical coordinates (subgroup generators plus the
// ambient relations) in canonical HNF; membership tests solve against it.
struct Subgroup {
  FgAbGroup group;
  GroupHom incl;  // group -> ambient, injective
  IntMatrix lattice;

  const FgAbGroup& ambient() const { return incl.target(); }
  bool contains(const GroupElement& x) const;
  // Expresses x in subgroup coordinates; empty when x is outside.
  std::optional<GroupElement> restrict(const GroupElement& x) const;
};

struct Quotient {
  FgAbGroup group;
  GroupHom proj;  // ambient -> group, surjective
};

// Subgroup of g generated by the rows (canonical coordinates of g).
Subgroup subgroup_from_rows(const FgAbGroup& g, const IntMatrix& rows);
// Quotient of g by the subgroup generated by the rows.
Quotient quotient_by_rows(const FgAbGroup& g, const IntMatrix& rows);

Subgroup kernel(const GroupHom& f);
Subgroup image(const GroupHom& f);
Quotient cokernel(const GroupHom& f);

// Restriction of f to a subgroup of its source / corestriction onto a
// subgroup of its target containing the image.
GroupHom restrict_to(const GroupHom& f, const Subgroup& sub);
GroupHom corestrict_to(const GroupHom& f, const Subgroup& sub);
// The hom q.group -> target induced by f when f kills the quotiented subgroup.
GroupHom descend_to(const Quotient& q, const GroupHom& f);

struct Pullback {
  FgAbGroup group;
  GroupHom p1, p2;  // projections to the two legs
  Subgroup as_subgroup;  // of the biproduct of the legs' sources
  DirectSum ambient;
};
Pullback pullback(const GroupHom& f, const GroupHom& g);  // same target

struct Pushout {
  FgAbGroup group;
  GroupHom i1, i2;  // inclusions of the two legs
  Quotient as_quotient;  // of the biproduct of the legs' targets
  DirectSum ambient;
};
Pushout pushout(const GroupHom& f, const GroupHom& g);  // same source

// Short exact sequence 0 -> left -> mid -> right -> 0, optionally pointed by
// distinguished elements g in mid over h in right. Exactness and the pointing
// are verified at construction.
class ShortExactSeq {
 public:
  ShortExactSeq(GroupHom inj, GroupHom surj);
  ShortExactSeq(GroupHom inj, GroupHom surj, GroupElement mid_point, GroupElement right_point);

  const FgAbGroup& left() const { return inj_.source(); }
  const FgAbGroup& mid() const { return inj_.target(); }
  const FgAbGroup& right() const { return surj_.target(); }
  const GroupHom& inj() const { return inj_; }
  const GroupHom& surj() const { return surj_; }
  bool pointed() const { return mid_point_.has_value(); }
  const GroupElement& mid_point() const { return *mid_point_; }
  const GroupElement& right_point() const { return *right_point_; }

 private:
  void verify() const;
  GroupHom inj_, surj_;
  std::optional<GroupElement> mid_point_, right_point_;
};

// 0 -> Z^t -> Z^n -> h -> 0 with the canonical projection; the relation
// lattice of the canonical form is the left term.
ShortExactSeq free_resolution(const FgAbGroup& h);

// Hom(src, tgt) as a group together with the bijection onto actual homs.
// Pair (i, j) contributes a cyclic factor of modulus gcd(d_i, e_j) (gcd with 0
// meaning the other argument); the realizing matrix entry is the pair
// coordinate times e_j / gcd for a torsion target column.
class HomGroup {
 public:
  HomGroup(FgAbGroup src, FgAbGroup tgt);

  const FgAbGroup& carrier() const { return carrier_; }
  const FgAbGroup& hom_source() const { return src_; }
  const FgAbGroup& hom_target() const { return tgt_; }

  GroupHom realize(const GroupElement& x) const;
  GroupElement abstract(const GroupHom& f) const;

  // The hom carrier -> tgt evaluating realized homs at x (additive in both).
  GroupHom evaluation_at(const GroupElement& x) const;

 private:
  struct Pair {
    std::size_t i, j;
    Int modulus;  // 0 for a free pair
    Int scale;    // matrix entry per unit coordinate
  };
  FgAbGroup src_, tgt_, carrier_;
  std::vector<Pair> pairs_;
  IntMatrix to_canon_, from_canon_;  // pair coords <-> carrier coords
};

// Ext(h, k) presented through the canonical free resolution of h: the carrier
// is coker(Hom(F0,k) -> Hom(F1,k)) with one k-summand per torsion factor of h.
// A cocycle is a t-tuple of elements of k.
class ExtClassGroup {
 public:
  ExtClassGroup(FgAbGroup h, FgAbGroup k);

  const FgAbGroup& carrier() const { return carrier_; }
  const FgAbGroup& arg() const { return h_; }
  const FgAbGroup& coeff() const { return k_; }

  GroupElement class_of_cocycle(const std::vector<GroupElement>& kappa) const;
  std::vector<GroupElement> cocycle_of(const GroupElement& x) const;

 private:
  FgAbGroup h_, k_, carrier_;
  IntMatrix to_canon_, from_canon_;  // t*ngens(k) pair coords <-> carrier
};

// Pointed Ext((h, point), k). Classes are parameterized by a cocycle plus an
// offset in k for the distinguished element, modulo the simultaneous
// correction by Hom(F0, k); the base point is represented by the normalized
// coordinates of `point` inside F0 = Z^ngens(h).
class PointedExtClassGroup {
 public:
  PointedExtClassGroup(FgAbGroup h, GroupElement point, FgAbGroup k);

  const FgAbGroup& carrier() const { return carrier_; }
  const FgAbGroup& arg() const { return h_; }
  const GroupElement& point() const { return point_; }
  const FgAbGroup& coeff() const { return k_; }

  GroupElement class_of(const std::vector<GroupElement>& kappa, const GroupElement& offset) const;

  // Structural short exact sequence 0 -> k/{psi(point)} -> carrier -> Ext(h,k) -> 0.
  const ShortExactSeq& structural() const { return *structural_; }
  const Quotient& coeff_mod_unit_images() const { return *kq_; }
  const ExtClassGroup& plain() const { return *plain_; }

 private:
  FgAbGroup h_, k_;
  GroupElement point_;
  FgAbGroup carrier_;
  IntMatrix to_canon_;
  std::optional<Quotient> kq_;
  std::optional<ExtClassGroup> plain_;
  std::optional<ShortExactSeq> structural_;
};

// Class of a short exact sequence in Ext(right, left), zero iff it splits.
GroupElement ext_class(const ExtClassGroup& eg, const ShortExactSeq& s);
GroupElement pointed_ext_class(const PointedExtClassGroup& pg, const ShortExactSeq& s);

// Standard model of a class: the pushout of the canonical resolution along
// the cocycle, with the distinguished element attached for the pointed form.
ShortExactSeq realize_ext_class(const ExtClassGroup& eg, const GroupElement& cls);
ShortExactSeq realize_pointed_ext_class(const PointedExtClassGroup& pg, const GroupElement& cls);

// Baer sum of two (pointed) sequences with literally equal end groups.
ShortExactSeq baer_sum(const ShortExactSeq& s1, const ShortExactSeq& s2);

// Pullback of s along f: right' -> right (new right = f.source()); the
// pointed variant lifts the distinguished pair through f.
ShortExactSeq pullback_seq(const ShortExactSeq& s, const GroupHom& f);
// Pushout of s along f: left -> left'.
ShortExactSeq pushout_seq(const ShortExactSeq& s, const GroupHom& f);

// {psi(unit) : psi in Hom(src_of_unit, k)} as a subgroup of k.
Subgroup unit_image_subgroup(const GroupElement& unit, const FgAbGroup& k);

// The congruence-obstruction subgroup of delta1's target: the preimage under
// the cokernel projection of every value homs on ker(delta0) can give the
// unit. delta0(unit) must vanish.
Subgroup unit_shift_subgroup(const GroupHom& delta0, const GroupHom& delta1,
                             const GroupElement& unit);

// The middle row of the push-out resolution diagram: G fits into an exact
// 0 -> k1a -> G -> k0a -> 0 and phi: G -> k0b lifts psi through the cokernel
// projection of delta1 while restricting to delta1 on k1a.
struct PushoutLift {
  FgAbGroup group;
  GroupHom into;  // k1a -> G
  GroupHom onto;  // G -> k0a
  GroupHom phi;   // G -> k0b
};
PushoutLift resolve_pushout_lift(const GroupHom& delta1, const GroupHom& psi,
                                 const Quotient& coker_delta1);

// Hom groups are themselves groups, so composition against a fixed hom and
// evaluation are homs between carriers. These power every constraint solve
// (congruence witnesses, splitting searches, isomorphism parameterization).
//
// rho in from=Hom(X,Y)  |->  (g then rho) in to=Hom(W,Y),   g: W -> X
GroupHom precompose_map(const HomGroup& from, const HomGroup& to, const GroupHom& g);
// rho in from=Hom(X,Y)  |->  (rho then g) in to=Hom(X,Z),   g: Y -> Z
GroupHom postcompose_map(const HomGroup& from, const HomGroup& to, const GroupHom& g);

// Simultaneous linear system F_i(x) = t_i over a common domain group: the
// solution set is particular + kernel (empty particular when inconsistent).
struct LinearSolve {
  std::optional<GroupElement> particular;
  std::optional<Subgroup> kernel;  // of the shared domain
};
LinearSolve solve_linear(const std::vector<GroupHom>& maps,
                         const std::vector<GroupElement>& targets);

}  // namespace ksix
