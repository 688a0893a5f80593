#include "ksix/abgroup.hpp"

#include <sstream>

#include "ksix/errors.hpp"

namespace ksix {

FgAbGroup FgAbGroup::canonical(std::vector<Int> invariant_factors, std::size_t free_rank) {
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    require(invariant_factors[i] >= 2, "FgAbGroup: invariant factors must be >= 2");
    if (i + 1 < invariant_factors.size())
      require(invariant_factors[i + 1] % invariant_factors[i] == 0,
              "FgAbGroup: invariant factors must form a divisibility chain");
  }
  FgAbGroup g;
  g.torsion_ = std::move(invariant_factors);
  g.free_rank_ = free_rank;
  g.pres_gens_ = g.ngens();
  g.presentation_ = g.relation_rows();
  g.to_canon_ = IntMatrix::identity(g.ngens());
  g.from_canon_ = g.to_canon_;
  g.cert_u_ = IntMatrix::identity(g.torsion_.size());
  g.cert_v_ = IntMatrix::identity(g.ngens());
  return g;
}

FgAbGroup FgAbGroup::cyclic(const Int& n) {
  require(n >= 0, "FgAbGroup::cyclic: modulus must be nonnegative");
  if (n == 0) return free_group(1);
  if (n == 1) return FgAbGroup();
  return canonical({n}, 0);
}

FgAbGroup FgAbGroup::from_presentation(const IntMatrix& relations, std::size_t ngens) {
  require(relations.rows() == 0 || relations.cols() == ngens,
          "from_presentation: relation width must equal the generator count");
  IntMatrix rel = relations;
  if (rel.rows() == 0) rel = IntMatrix(0, ngens);
  SnfResult snf = smith_normal_form(rel);

  FgAbGroup g;
  g.presentation_ = rel;
  g.pres_gens_ = ngens;
  g.cert_u_ = snf.u;
  g.cert_v_ = snf.v;

  const std::size_t diag = std::min(rel.rows(), ngens);
  std::size_t rank = 0;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < diag; ++i) {
    if (snf.d.at(i, i) == 0) break;
    ++rank;
    if (snf.d.at(i, i) >= 2) {
      g.torsion_.push_back(snf.d.at(i, i));
      kept.push_back(i);
    }
  }
  g.free_rank_ = ngens - rank;
  for (std::size_t j = rank; j < ngens; ++j) kept.push_back(j);

  g.to_canon_ = snf.v.take_cols(kept);
  IntMatrix from(kept.size(), ngens);
  for (std::size_t r = 0; r < kept.size(); ++r)
    for (std::size_t c = 0; c < ngens; ++c) from.at(r, c) = snf.vinv.at(kept[r], c);
  g.from_canon_ = from;
  return g;
}

Int FgAbGroup::order() const {
  if (free_rank_ > 0) return 0;
  Int n = 1;
  for (const Int& d : torsion_) n *= d;
  return n;
}

IntMatrix FgAbGroup::relation_rows() const {
  IntMatrix rel(torsion_.size(), ngens());
  for (std::size_t i = 0; i < torsion_.size(); ++i) rel.at(i, i) = torsion_[i];
  return rel;
}

std::vector<Int> FgAbGroup::normalized(std::vector<Int> coords) const {
  require(coords.size() == ngens(), "element coordinate count mismatch");
  for (std::size_t i = 0; i < torsion_.size(); ++i) coords[i] = pos_mod(coords[i], torsion_[i]);
  return coords;
}

GroupElement FgAbGroup::element(std::vector<Int> coords) const {
  return GroupElement(*this, std::move(coords));
}

GroupElement FgAbGroup::zero() const { return element(std::vector<Int>(ngens())); }

GroupElement FgAbGroup::gen(std::size_t i) const {
  require(i < ngens(), "generator index out of range");
  std::vector<Int> c(ngens());
  c[i] = 1;
  return element(std::move(c));
}

GroupElement FgAbGroup::project(const std::vector<Int>& pres_coords) const {
  require(pres_coords.size() == pres_gens_, "project: presentation coordinate mismatch");
  IntMatrix img = IntMatrix::row_vector(pres_coords) * to_canon_;
  return element(img.row(0));
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Int& d : torsion_) {
    os << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  if (free_rank_ == 1) os << (first ? "" : " + ") << "Z";
  if (free_rank_ > 1) os << (first ? "" : " + ") << "Z^" << free_rank_;
  return os.str();
}

GroupElement::GroupElement(FgAbGroup parent, std::vector<Int> coords)
    : parent_(std::move(parent)), coords_(parent_.normalized(std::move(coords))) {}

static void check_same_parent(const GroupElement& a, const GroupElement& b) {
  require(a.parent() == b.parent(), "element parents differ");
}

GroupElement GroupElement::operator+(const GroupElement& rhs) const {
  check_same_parent(*this, rhs);
  std::vector<Int> c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.coords_[i];
  return GroupElement(parent_, std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& rhs) const {
  check_same_parent(*this, rhs);
  std::vector<Int> c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= rhs.coords_[i];
  return GroupElement(parent_, std::move(c));
}

GroupElement GroupElement::operator-() const {
  std::vector<Int> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
  return GroupElement(parent_, std::move(c));
}

GroupElement GroupElement::scaled(const Int& k) const {
  std::vector<Int> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * coords_[i];
  return GroupElement(parent_, std::move(c));
}

bool GroupElement::is_zero() const {
  for (const Int& x : coords_)
    if (x != 0) return false;
  return true;
}

bool GroupElement::operator==(const GroupElement& rhs) const {
  return parent_ == rhs.parent_ && coords_ == rhs.coords_;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i].get_str();
  os << ")";
  return os.str();
}

DirectSum direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  const std::size_t na = a.ngens(), nb = b.ngens();
  IntMatrix rel(a.torsion_count() + b.torsion_count(), na + nb);
  for (std::size_t i = 0; i < a.torsion_count(); ++i) rel.at(i, i) = a.factor(i);
  for (std::size_t i = 0; i < b.torsion_count(); ++i)
    rel.at(a.torsion_count() + i, na + i) = b.factor(i);
  FgAbGroup sum = FgAbGroup::from_presentation(rel, na + nb);

  DirectSum out;
  out.incl_left = sum.to_canon().take_rows(0, na);
  out.incl_right = sum.to_canon().take_rows(na, nb);
  IntMatrix from = sum.from_canon();  // ngens(sum) x (na + nb)
  std::vector<std::size_t> left_cols(na), right_cols(nb);
  for (std::size_t j = 0; j < na; ++j) left_cols[j] = j;
  for (std::size_t j = 0; j < nb; ++j) right_cols[j] = na + j;
  out.proj_left = from.take_cols(left_cols);
  out.proj_right = from.take_cols(right_cols);
  out.sum = std::move(sum);
  return out;
}

std::vector<GroupElement> enumerate_elements(const FgAbGroup& g) {
  require(g.is_finite(), "enumerate_elements: group is infinite");
  std::vector<GroupElement> out;
  std::vector<Int> c(g.ngens());
  while (true) {
    out.push_back(g.element(c));
    std::size_t i = 0;
    for (; i < c.size(); ++i) {
      c[i] += 1;
      if (c[i] < g.factor(i)) break;
      c[i] = 0;
    }
    if (i == c.size()) break;
  }
  return out;
}

}  // namespace ksix
