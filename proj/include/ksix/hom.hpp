#pragma once

#include <optional>
#include <string>

#include "ksix/abgroup.hpp"

namespace ksix {

// Homomorphism between canonical groups. Row i of the matrix is the image of
// the i-th canonical source generator in target coordinates. Construction
// rejects matrices that do not kill the source relations; entries are reduced
// against the target torsion so equal homs have equal matrices.
class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  static GroupHom identity(const FgAbGroup& g);
  static GroupHom zero(const FgAbGroup& source, const FgAbGroup& target);

  const FgAbGroup& source() const { return source_; }
  const FgAbGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  GroupElement apply(const GroupElement& x) const;
  GroupHom then(const GroupHom& next) const;  // *this first, then next

  bool is_zero() const { return matrix_.is_zero(); }
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }
  bool operator==(const GroupHom& rhs) const;

  std::string to_string() const;

 private:
  FgAbGroup source_, target_;
  IntMatrix matrix_;
};

// Canonical solution x of x * m = v modulo the relation lattice of target,
// i.e. a preimage of target.element(v) under the hom with matrix m. Rows of m
// index source coordinates.
std::optional<std::vector<Int>> solve_in_group(const IntMatrix& m, const FgAbGroup& target,
                                               const std::vector<Int>& v);

// Preimage of y under f (deterministic; empty when y is not in the image).
std::optional<GroupElement> preimage(const GroupHom& f, const GroupElement& y);

// Inverse of an isomorphism; empty when f is not one.
std::optional<GroupHom> inverse_hom(const GroupHom& f);

}  // namespace ksix
