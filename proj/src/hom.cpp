#include "ksix/hom.hpp"

#include <sstream>

#include "ksix/errors.hpp"
#include "ksix/zlattice.hpp"

namespace ksix {

GroupHom::GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  require(matrix_.rows() == source_.ngens() && matrix_.cols() == target_.ngens(),
          "GroupHom: matrix shape must be ngens(source) x ngens(target)");
  // d_i * row_i must vanish in the target for every torsion generator.
  for (std::size_t i = 0; i < source_.torsion_count(); ++i) {
    const Int d = source_.factor(i);
    for (std::size_t j = 0; j < target_.ngens(); ++j) {
      Int v = d * matrix_.at(i, j);
      const Int e = target_.factor(j);
      bool ok = (e == 0) ? (v == 0) : (v % e == 0);
      require(ok, "GroupHom: matrix does not respect source relations (ill-defined)");
    }
  }
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
      matrix_.at(i, j) = pos_mod(matrix_.at(i, j), target_.factor(j));
}

GroupHom GroupHom::identity(const FgAbGroup& g) {
  return GroupHom(g, g, IntMatrix::identity(g.ngens()));
}

GroupHom GroupHom::zero(const FgAbGroup& source, const FgAbGroup& target) {
  return GroupHom(source, target, IntMatrix(source.ngens(), target.ngens()));
}

GroupElement GroupHom::apply(const GroupElement& x) const {
  require(x.parent() == source_, "GroupHom::apply: element not in the source");
  IntMatrix img = IntMatrix::row_vector(x.coords()) * matrix_;
  return target_.element(img.row(0));
}

GroupHom GroupHom::then(const GroupHom& next) const {
  require(target_ == next.source_, "GroupHom::then: endpoint mismatch");
  return GroupHom(source_, next.target_, matrix_ * next.matrix_);
}

bool GroupHom::operator==(const GroupHom& rhs) const {
  return source_ == rhs.source_ && target_ == rhs.target_ && matrix_ == rhs.matrix_;
}

std::string GroupHom::to_string() const {
  std::ostringstream os;
  os << source_.to_string() << " -> " << target_.to_string() << " via " << matrix_.to_string();
  return os.str();
}

std::optional<std::vector<Int>> solve_in_group(const IntMatrix& m, const FgAbGroup& target,
                                               const std::vector<Int>& v) {
  // x * m = v + y * relations for some y: stack the relation rows below m and
  // keep the leading block of the solution.
  IntMatrix stacked = m.vstack(target.relation_rows());
  auto sol = solve_left(stacked, v);
  if (!sol) return std::nullopt;
  sol->resize(m.rows());
  return sol;
}

std::optional<GroupElement> preimage(const GroupHom& f, const GroupElement& y) {
  require(y.parent() == f.target(), "preimage: element not in the target");
  auto x = solve_in_group(f.matrix(), f.target(), y.coords());
  if (!x) return std::nullopt;
  return f.source().element(*x);
}

bool GroupHom::is_injective() const {
  // Kernel lattice projected from {(x, y) : x m + y rel = 0} must lie inside
  // the source relation lattice.
  IntMatrix stacked = matrix_.vstack(target_.relation_rows());
  IntMatrix ker = left_kernel(stacked);
  IntMatrix src_part(ker.rows(), source_.ngens());
  for (std::size_t i = 0; i < ker.rows(); ++i)
    for (std::size_t j = 0; j < source_.ngens(); ++j) src_part.at(i, j) = ker.at(i, j);
  return lattice_subset(src_part, source_.relation_rows());
}

bool GroupHom::is_surjective() const {
  IntMatrix full = matrix_.vstack(target_.relation_rows());
  for (std::size_t j = 0; j < target_.ngens(); ++j) {
    std::vector<Int> e(target_.ngens());
    e[j] = 1;
    if (!lattice_contains(full, e)) return false;
  }
  return true;
}

std::optional<GroupHom> inverse_hom(const GroupHom& f) {
  IntMatrix inv(f.target().ngens(), f.source().ngens());
  for (std::size_t j = 0; j < f.target().ngens(); ++j) {
    auto x = preimage(f, f.target().gen(j));
    if (!x) return std::nullopt;  // not surjective
    inv.set_row(j, x->coords());
  }
  try {
    GroupHom g(f.target(), f.source(), inv);
    // g is a right inverse by construction; the two-sided check rules out
    // non-injective f.
    if (!(f.then(g) == GroupHom::identity(f.source()))) return std::nullopt;
    return g;
  } catch (const validation_error&) {
    return std::nullopt;  // the row-wise preimages do not assemble to a hom
  }
}

}  // namespace ksix
