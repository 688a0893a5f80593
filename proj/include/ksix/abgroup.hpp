#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ksix/int_matrix.hpp"
#include "ksix/snf.hpp"

namespace ksix {

class GroupElement;

// A finitely generated abelian group in Smith canonical form: torsion factors
// d_1 | d_2 | ... (each >= 2) followed by free_rank copies of Z. Elements are
// coordinate row vectors on the canonical generators; the torsion coordinate i
// lives in [0, d_i). Groups are immutable once built.
//
// Groups built from a presentation keep the relation matrix and the SNF
// certificate, plus the coordinate change between presentation coordinates
// and canonical ones (to_canon / from_canon). The relation lattice of the
// canonical coordinates themselves is diag(d_1..d_t) padded with zero columns.
class FgAbGroup {
 public:
  FgAbGroup() = default;  // the trivial group

  static FgAbGroup canonical(std::vector<Int> invariant_factors, std::size_t free_rank);
  static FgAbGroup free_group(std::size_t rank) { return canonical({}, rank); }
  static FgAbGroup cyclic(const Int& n);
  static FgAbGroup from_presentation(const IntMatrix& relations, std::size_t ngens);

  std::size_t ngens() const { return torsion_.size() + free_rank_; }
  std::size_t torsion_count() const { return torsion_.size(); }
  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& invariant_factors() const { return torsion_; }
  // d_i for torsion coordinates, 0 for free ones.
  Int factor(std::size_t i) const { return i < torsion_.size() ? torsion_[i] : Int(0); }

  bool is_trivial() const { return ngens() == 0; }
  bool is_free() const { return torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  Int order() const;  // 0 when infinite

  // Relation lattice of the canonical coordinates: t rows d_i * e_i in Z^ngens.
  IntMatrix relation_rows() const;

  // Presentation-coordinate data (identity maps for canonically built groups).
  const IntMatrix& presentation() const { return presentation_; }
  std::size_t presentation_gens() const { return pres_gens_; }
  const IntMatrix& to_canon() const { return to_canon_; }
  const IntMatrix& from_canon() const { return from_canon_; }
  const IntMatrix& snf_u() const { return cert_u_; }
  const IntMatrix& snf_v() const { return cert_v_; }

  GroupElement element(std::vector<Int> coords) const;
  GroupElement zero() const;
  GroupElement gen(std::size_t i) const;
  // Reduces a presentation-coordinate vector to a canonical element.
  GroupElement project(const std::vector<Int>& pres_coords) const;

  std::vector<Int> normalized(std::vector<Int> coords) const;

  // Same canonical form. All structural code identifies equal canonical forms.
  bool operator==(const FgAbGroup& rhs) const {
    return torsion_ == rhs.torsion_ && free_rank_ == rhs.free_rank_;
  }

  std::string to_string() const;  // e.g. "Z/2 + Z/4 + Z^2"

 private:
  std::vector<Int> torsion_;
  std::size_t free_rank_ = 0;
  IntMatrix presentation_;
  std::size_t pres_gens_ = 0;
  IntMatrix to_canon_;
  IntMatrix from_canon_;
  IntMatrix cert_u_, cert_v_;
};

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(FgAbGroup parent, std::vector<Int> coords);

  const FgAbGroup& parent() const { return parent_; }
  const std::vector<Int>& coords() const { return coords_; }

  GroupElement operator+(const GroupElement& rhs) const;
  GroupElement operator-(const GroupElement& rhs) const;
  GroupElement operator-() const;
  GroupElement scaled(const Int& c) const;
  bool is_zero() const;
  bool operator==(const GroupElement& rhs) const;

  std::string to_string() const;

 private:
  FgAbGroup parent_;
  std::vector<Int> coords_;
};

// Canonical biproduct with the four structure maps. The inclusions and
// projections are stored as plain matrices here; the hom layer wraps them.
struct DirectSum {
  FgAbGroup sum;
  IntMatrix incl_left, incl_right;  // ngens(left|right) x ngens(sum)
  IntMatrix proj_left, proj_right;  // ngens(sum) x ngens(left|right)
};

DirectSum direct_sum(const FgAbGroup& a, const FgAbGroup& b);

// Every element of a finite group, mixed-radix order. Throws on free rank > 0.
std::vector<GroupElement> enumerate_elements(const FgAbGroup& g);

}  // namespace ksix
