#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liecurv/algebra.hpp"
#include "liecurv/backend.hpp"

namespace liecurv {

/// b(e_i) for every basis vector e_i of g, as (dim h) x (dim h) matrices.
struct ActionSpec {
  std::vector<Matrix> generators;
};

/// Entry (g-index, h-row, h-col, value), 1-based, as read from configuration files.
struct ActionEntry {
  int g_index;
  int row;
  int col;
  double value;
};
ActionSpec action_from_entries(std::size_t dim_g, std::size_t dim_h, const std::vector<ActionEntry>& entries);

/// Derivation and homomorphism checks for an action of g on h.
ValidationReport validate_action(const MetricAlgebra& g, const MetricAlgebra& h, const ActionSpec& action,
                                 const Tolerances& tol = {});

/// The semidirect product g x| h of two metric algebras under an action by derivations.
///
/// Holds both factors, the action, the cached metric transposes b(e_i)^T, the h-map tensor and the
/// assembled product algebra (bracket ([X1,X2], [Y1,Y2] + b(X1)Y2 - b(X2)Y1), block-diagonal Gram).
/// Construction rejects actions that are not homomorphisms into the derivations of h.
class SemidirectAlgebra {
 public:
  using GElement = AlgebraElement;
  using HElement = AlgebraElement;
  using Element = Pair<GElement, HElement>;

  SemidirectAlgebra(MetricAlgebra g, MetricAlgebra h, ActionSpec action, std::string name = {});

  const MetricAlgebra& g() const { return g_; }
  const MetricAlgebra& h() const { return h_; }
  const MetricAlgebra& product() const { return product_; }
  const ActionSpec& action() const { return action_; }
  const std::string& name() const { return name_; }
  std::size_t dim_g() const { return g_.dim(); }
  std::size_t dim_h() const { return h_.dim(); }

  Matrix act_matrix(const GElement& x) const;
  Matrix act_transpose_matrix(const GElement& x) const;

  HElement act(const GElement& x, const HElement& y) const;
  HElement act_transpose(const GElement& x, const HElement& y) const;
  /// The bilinear map h: h x h -> g with <b(X)Y1, Y2> = <h(Y1,Y2), X>, from the cached tensor.
  GElement h_map(const HElement& y1, const HElement& y2) const;

  /// b(e_i) + b(e_i)^T = 0 for every basis vector, within the action tolerance.
  bool is_isometric() const { return isometric_; }

  /// (ad(X1)^T X2 - h(Y1,Y2), ad(Y1)^T Y2 + b(X1)^T Y2).
  Element product_ad_transpose(const Element& a, const Element& b) const;

  Vector join(const Element& e) const;
  Element split(const Vector& v) const;

 private:
  MetricAlgebra g_;
  MetricAlgebra h_;
  ActionSpec action_;
  std::string name_;
  std::vector<Matrix> action_transpose_;
  // h_tensor_[k] is the bilinear form with h(y1, y2)_k = y1^T h_tensor_[k] y2.
  std::vector<Matrix> h_tensor_;
  bool isometric_ = false;
  MetricAlgebra product_;
};

/// Solves <h(Y1,Y2), X> = <b(X)Y1, Y2> over the basis of g directly, without the cached tensor.
AlgebraElement derive_h(const SemidirectAlgebra& sd, const AlgebraElement& y1, const AlgebraElement& y2);

/// Direct-sum assembly of the product spec (structure constants and block Gram).
MetricAlgebraSpec assemble_product_spec(const MetricAlgebra& g, const MetricAlgebra& h, const ActionSpec& action,
                                        std::string name);

bool check_isometric(const SemidirectAlgebra& sd);

/// |<h(Y1,Y2), ad(X1)X2> - (<b(X1)^T Y2, b(X2)Y1> - <b(X2)^T Y2, b(X1)Y1>)|, relative to the
/// magnitude of the summands.
double check_h_identity(const SemidirectAlgebra& sd, const AlgebraElement& y1, const AlgebraElement& y2,
                        const AlgebraElement& x1, const AlgebraElement& x2);

/// |<ad(Y1)Y2, b(X)^T Y3> - (<b(X)Y2, ad(Y1)^T Y3> - <b(X)Y1, ad(Y2)^T Y3>)|, relative.
double check_derivation_identity(const SemidirectAlgebra& sd, const AlgebraElement& x, const AlgebraElement& y1,
                                 const AlgebraElement& y2, const AlgebraElement& y3);

}  // namespace liecurv
