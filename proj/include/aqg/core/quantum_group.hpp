#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aqg/core/linalg.hpp"
#include "aqg/core/tensor.hpp"
#include "aqg/error.hpp"
#include "aqg/scalars/scalar.hpp"

namespace aqg {

/// Structure constants of a finite-dimensional Hopf (*-)algebra with
/// integrals, relative to a basis a_0 .. a_{d-1}.
///
///   mult(i, j, k)    a_i a_j = sum_k mult(i, j, k) a_k
///   comult(i, j, k)  Delta(a_i) = sum_{j,k} comult(i, j, k) a_j (x) a_k
///   antipode(i, k)   S(a_i) = sum_k antipode(i, k) a_k
///   star(i, k)       a_i^* = sum_k star(i, k) a_k, extended antilinearly
///
/// counit, left_integral (phi) and right_integral (psi) hold values on the
/// basis; unit holds the coordinates of 1 when the algebra is unital.
template <Scalar S>
struct QuantumGroupData {
  std::string name;
  std::vector<std::string> labels;
  Tensor3<S> mult;
  Tensor3<S> comult;
  std::vector<S> counit;
  Matrix<S> antipode;
  std::optional<Matrix<S>> star;
  std::optional<std::vector<S>> unit;
  std::vector<S> left_integral;
  std::vector<S> right_integral;

  std::size_t dim() const { return labels.size(); }
};

template <Scalar S>
class FiniteQuantumGroup;

template <Scalar S>
using QuantumGroupPtr = std::shared_ptr<const FiniteQuantumGroup<S>>;

/// Immutable quantum group. Construction checks only shapes; the Hopf
/// axioms are checked by verify_axioms so that corrupted tensors can still
/// be represented and diagnosed.
template <Scalar S>
class FiniteQuantumGroup {
  struct Token {};

 public:
  static QuantumGroupPtr<S> create(QuantumGroupData<S> data) {
    return std::make_shared<const FiniteQuantumGroup>(Token{}, std::move(data));
  }

  FiniteQuantumGroup(Token, QuantumGroupData<S> data) : data_(std::move(data)) {
    const std::size_t d = data_.dim();
    if (d == 0) throw StructureError("quantum group must have positive dimension");
    auto check = [&](bool ok, const char* what) {
      if (!ok) throw StructureError(std::string("shape mismatch in ") + what);
    };
    check(data_.mult.extent() == d, "mult");
    check(data_.comult.extent() == d, "comult");
    check(data_.counit.size() == d, "counit");
    check(data_.antipode.rows() == d && data_.antipode.cols() == d, "antipode");
    check(!data_.star || (data_.star->rows() == d && data_.star->cols() == d), "star");
    check(!data_.unit || data_.unit->size() == d, "unit");
    check(data_.left_integral.size() == d, "left_integral");
    check(data_.right_integral.size() == d, "right_integral");

    left_gram_ = gram_of(data_.left_integral);
    right_gram_ = gram_of(data_.right_integral);
    left_gram_inverse_ = inverse(left_gram_);
    right_gram_inverse_ = inverse(right_gram_);
    antipode_inverse_ = inverse(data_.antipode);
  }

  const QuantumGroupData<S>& data() const { return data_; }
  const std::string& name() const { return data_.name; }
  std::size_t dim() const { return data_.dim(); }
  bool is_star() const { return data_.star.has_value(); }
  bool has_unit() const { return data_.unit.has_value(); }

  /// P(i, j) = phi(a_i a_j); also the pairing <a_i, phi(. a_j)>.
  const Matrix<S>& gram() const { return left_gram_; }
  /// Q(i, j) = psi(a_i a_j).
  const Matrix<S>& right_gram() const { return right_gram_; }
  const std::optional<Matrix<S>>& gram_inverse() const { return left_gram_inverse_; }
  const std::optional<Matrix<S>>& right_gram_inverse() const { return right_gram_inverse_; }
  /// Matrix of S^{-1} in the same row convention as antipode.
  const std::optional<Matrix<S>>& antipode_inverse_matrix() const { return antipode_inverse_; }

  const Matrix<S>& require_gram_inverse() const {
    if (!left_gram_inverse_) throw FaithfulnessError(name() + ": left integral is not faithful");
    return *left_gram_inverse_;
  }
  const Matrix<S>& require_right_gram_inverse() const {
    if (!right_gram_inverse_) throw FaithfulnessError(name() + ": right integral is not faithful");
    return *right_gram_inverse_;
  }
  const std::vector<S>& require_unit() const {
    if (!data_.unit) throw StructureError(name() + ": algebra has no unit");
    return *data_.unit;
  }

  // Coordinate-level operations. Vectors are coordinates in the basis.

  std::vector<S> multiply(const std::vector<S>& a, const std::vector<S>& b) const {
    const std::size_t d = dim();
    std::vector<S> out(d, S(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (is_zero(a[i])) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (is_zero(b[j])) continue;
        const S c = a[i] * b[j];
        for (std::size_t k = 0; k < d; ++k) {
          if (!is_zero(data_.mult(i, j, k))) out[k] += c * data_.mult(i, j, k);
        }
      }
    }
    return out;
  }

  /// Delta(a) as a d x d matrix: entry (j, k) is the coefficient of a_j (x) a_k.
  Matrix<S> coproduct(const std::vector<S>& a) const {
    const std::size_t d = dim();
    Matrix<S> out(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      if (is_zero(a[i])) continue;
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          if (!is_zero(data_.comult(i, j, k))) out(j, k) += a[i] * data_.comult(i, j, k);
        }
    }
    return out;
  }

  /// Product in A (x) A of two d x d coefficient matrices.
  Matrix<S> multiply_tensor(const Matrix<S>& x, const Matrix<S>& y) const {
    const std::size_t d = dim();
    Matrix<S> out(d, d);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) {
        if (is_zero(x(p, q))) continue;
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t s = 0; s < d; ++s) {
            if (is_zero(y(r, s))) continue;
            const S c = x(p, q) * y(r, s);
            for (std::size_t u = 0; u < d; ++u) {
              if (is_zero(data_.mult(p, r, u))) continue;
              const S cu = c * data_.mult(p, r, u);
              for (std::size_t v = 0; v < d; ++v) {
                if (!is_zero(data_.mult(q, s, v))) out(u, v) += cu * data_.mult(q, s, v);
              }
            }
          }
      }
    return out;
  }

  S counit(const std::vector<S>& a) const { return dot(data_.counit, a); }
  S phi(const std::vector<S>& a) const { return dot(data_.left_integral, a); }
  S psi(const std::vector<S>& a) const { return dot(data_.right_integral, a); }

  std::vector<S> antipode(const std::vector<S>& a) const { return data_.antipode.transpose() * a; }

  std::vector<S> antipode_inverse(const std::vector<S>& a) const {
    if (!antipode_inverse_) throw StructureError(name() + ": antipode is not invertible");
    return antipode_inverse_->transpose() * a;
  }

  /// a^* = sum_i conj(a_i) a_i^*.
  std::vector<S> star(const std::vector<S>& a) const {
    if (!data_.star) throw PreconditionError(name() + ": no *-structure");
    std::vector<S> c(a.size(), S(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = conj(a[i]);
    return data_.star->transpose() * c;
  }

  std::vector<S> basis(std::size_t i) const { return unit_vector<S>(dim(), i); }

 private:
  Matrix<S> gram_of(const std::vector<S>& functional) const {
    const std::size_t d = dim();
    Matrix<S> g(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          if (!is_zero(data_.mult(i, j, k))) g(i, j) += data_.mult(i, j, k) * functional[k];
        }
    return g;
  }

  QuantumGroupData<S> data_;
  Matrix<S> left_gram_;
  Matrix<S> right_gram_;
  std::optional<Matrix<S>> left_gram_inverse_;
  std::optional<Matrix<S>> right_gram_inverse_;
  std::optional<Matrix<S>> antipode_inverse_;
};

/// a in A, as coordinates in the owner's basis.
template <Scalar S>
struct Element {
  QuantumGroupPtr<S> owner;
  std::vector<S> coords;

  friend bool operator==(const Element& a, const Element& b) { return a.owner == b.owner && a.coords == b.coords; }
};

/// A linear functional on A, stored by its values omega(a_i) on the basis.
template <Scalar S>
struct Functional {
  QuantumGroupPtr<S> owner;
  std::vector<S> values;

  S operator()(const Element<S>& a) const;

  friend bool operator==(const Functional& a, const Functional& b) {
    return a.owner == b.owner && a.values == b.values;
  }
};

template <Scalar S>
void require_same_owner(const QuantumGroupPtr<S>& a, const QuantumGroupPtr<S>& b) {
  if (a != b) throw OwnerMismatch();
}

template <Scalar S>
S Functional<S>::operator()(const Element<S>& a) const {
  require_same_owner(owner, a.owner);
  return dot(values, a.coords);
}

template <Scalar S>
Element<S> make_element(const QuantumGroupPtr<S>& owner, std::vector<S> coords) {
  if (coords.size() != owner->dim()) {
    throw PreconditionError("element has " + std::to_string(coords.size()) + " coordinates, expected " +
                            std::to_string(owner->dim()));
  }
  return {owner, std::move(coords)};
}

template <Scalar S>
Functional<S> make_functional(const QuantumGroupPtr<S>& owner, std::vector<S> values) {
  if (values.size() != owner->dim()) {
    throw PreconditionError("functional has " + std::to_string(values.size()) + " values, expected " +
                            std::to_string(owner->dim()));
  }
  return {owner, std::move(values)};
}

template <Scalar S>
Element<S> basis_element(const QuantumGroupPtr<S>& owner, std::size_t i) {
  return {owner, owner->basis(i)};
}

template <Scalar S>
Element<S> unit_element(const QuantumGroupPtr<S>& owner) {
  return {owner, owner->require_unit()};
}

template <Scalar S>
Element<S> operator+(const Element<S>& a, const Element<S>& b) {
  require_same_owner(a.owner, b.owner);
  return {a.owner, add(a.coords, b.coords)};
}

template <Scalar S>
Element<S> operator*(const S& c, const Element<S>& a) {
  return {a.owner, scale(a.coords, c)};
}

template <Scalar S>
Element<S> multiply(const Element<S>& a, const Element<S>& b) {
  require_same_owner(a.owner, b.owner);
  return {a.owner, a.owner->multiply(a.coords, b.coords)};
}

template <Scalar S>
Element<S> star(const Element<S>& a) {
  return {a.owner, a.owner->star(a.coords)};
}

template <Scalar S>
Element<S> antipode(const Element<S>& a) {
  return {a.owner, a.owner->antipode(a.coords)};
}

template <Scalar S>
Element<S> antipode_inverse(const Element<S>& a) {
  return {a.owner, a.owner->antipode_inverse(a.coords)};
}

template <Scalar S>
S counit(const Element<S>& a) {
  return a.owner->counit(a.coords);
}

template <Scalar S>
S phi(const Element<S>& a) {
  return a.owner->phi(a.coords);
}

template <Scalar S>
S psi(const Element<S>& a) {
  return a.owner->psi(a.coords);
}

/// Re-expresses a quantum group in a new basis b_k = sum_i change(k, i) a_i.
/// `change` must be invertible.
template <Scalar S>
QuantumGroupData<S> change_basis(const QuantumGroupData<S>& a, const Matrix<S>& change,
                                 std::vector<std::string> new_labels) {
  const std::size_t d = a.dim();
  const auto inv_opt = inverse(change);
  if (!inv_opt) throw StructureError("change of basis is not invertible");
  const Matrix<S>& inv = *inv_opt;
  QuantumGroupData<S> out;
  out.name = a.name;
  out.labels = std::move(new_labels);

  // Coordinates (in the new basis) of a vector given in the old basis: inv^T v.
  const Matrix<S> to_new = inv.transpose();
  out.mult = Tensor3<S>(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      std::vector<S> prod(d, S(0));
      for (std::size_t i = 0; i < d; ++i) {
        if (is_zero(change(k, i))) continue;
        for (std::size_t j = 0; j < d; ++j) {
          if (is_zero(change(l, j))) continue;
          const S c = change(k, i) * change(l, j);
          for (std::size_t r = 0; r < d; ++r) {
            if (!is_zero(a.mult(i, j, r))) prod[r] += c * a.mult(i, j, r);
          }
        }
      }
      const auto coords = to_new * prod;
      for (std::size_t s = 0; s < d; ++s) out.mult(k, l, s) = coords[s];
    }

  out.comult = Tensor3<S>(d);
  for (std::size_t k = 0; k < d; ++k) {
    Matrix<S> old(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      if (is_zero(change(k, i))) continue;
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
          if (!is_zero(a.comult(i, p, q))) old(p, q) += change(k, i) * a.comult(i, p, q);
        }
    }
    // old = sum_{p,q} old(p,q) a_p (x) a_q, a_p = sum_s inv(p, s) b_s.
    const Matrix<S> converted = inv.transpose() * old * inv;
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t) out.comult(k, s, t) = converted(s, t);
  }

  out.counit = change * a.counit;
  out.antipode = change * a.antipode * inv;
  if (a.star) {
    Matrix<S> conj_change(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) conj_change(i, j) = conj(change(i, j));
    out.star = conj_change * (*a.star) * inv;
  }
  if (a.unit) out.unit = to_new * (*a.unit);
  out.left_integral = change * a.left_integral;
  out.right_integral = change * a.right_integral;
  return out;
}

/// Change of basis that sends the new basis vector k to the old a_{perm[k]}.
template <Scalar S>
Matrix<S> permutation_change(const std::vector<std::size_t>& perm) {
  Matrix<S> out(perm.size(), perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out(k, perm[k]) = S(1);
  return out;
}

/// Name of the first structure tensor that differs, ignoring names and labels.
template <Scalar S>
std::optional<std::string> structure_difference(const QuantumGroupData<S>& a, const QuantumGroupData<S>& b) {
  if (a.dim() != b.dim()) return "dim";
  if (!(a.mult == b.mult)) return "mult";
  if (!(a.comult == b.comult)) return "comult";
  if (a.counit != b.counit) return "counit";
  if (!(a.antipode == b.antipode)) return "antipode";
  if (a.star.has_value() != b.star.has_value() || (a.star && !(*a.star == *b.star))) return "star";
  if (a.unit != b.unit) return "unit";
  if (a.left_integral != b.left_integral) return "left_integral";
  if (a.right_integral != b.right_integral) return "right_integral";
  return std::nullopt;
}

/// Converts exact structure constants to another backend.
template <Scalar Target>
QuantumGroupData<Target> convert_data(const QuantumGroupData<Cyclotomic>& a, double tolerance = kDefaultTolerance) {
  const std::size_t d = a.dim();
  auto cv = [&](const Cyclotomic& x) { return convert_scalar<Target>(x, tolerance); };
  auto cvec = [&](const std::vector<Cyclotomic>& v) {
    std::vector<Target> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(cv(x));
    return out;
  };
  auto cmat = [&](const Matrix<Cyclotomic>& m) {
    Matrix<Target> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = cv(m(i, j));
    return out;
  };
  auto ctensor = [&](const Tensor3<Cyclotomic>& t) {
    Tensor3<Target> out(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) out(i, j, k) = cv(t(i, j, k));
    return out;
  };
  QuantumGroupData<Target> out;
  out.name = a.name;
  out.labels = a.labels;
  out.mult = ctensor(a.mult);
  out.comult = ctensor(a.comult);
  out.counit = cvec(a.counit);
  out.antipode = cmat(a.antipode);
  if (a.star) out.star = cmat(*a.star);
  if (a.unit) out.unit = cvec(*a.unit);
  out.left_integral = cvec(a.left_integral);
  out.right_integral = cvec(a.right_integral);
  return out;
}

}  // namespace aqg
