#include "symtwirl/symspace.hpp"

#include <cmath>

#include "symtwirl/errors.hpp"
#include "symtwirl/typestat.hpp"

namespace symtwirl {

namespace {

int letters_of_dim(std::size_t dim, int d) {
  int n = 0;
  std::size_t v = 1;
  while (v < dim) {
    v *= static_cast<std::size_t>(d);
    ++n;
  }
  if (v != dim) throw DimensionError("operator dimension is not a power of d");
  return n == 0 ? 1 : n;
}

}  // namespace

std::vector<Eigen::VectorXcd> sym_basis(int d, int n, std::size_t max_dim) {
  const std::size_t dim = tensor_dimension(d, n);
  if (dim > max_dim) throw SizeLimitError("symmetric basis dimension exceeds limit");
  std::vector<Eigen::VectorXcd> basis;
  for (const TypeDistribution& mu : enumerate_types(n, d)) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    const auto words = type_class(mu);
    const double amp = 1.0 / std::sqrt(static_cast<double>(words.size()));
    for (const IndexTuple& word : words)
      v(static_cast<Eigen::Index>(tuple_to_index(word))) = amp;
    basis.push_back(std::move(v));
  }
  return basis;
}

FloatOperator sym_projector(int d, int n, std::size_t max_dim) {
  const std::size_t dim = tensor_dimension(d, n);
  if (dim > max_dim) throw SizeLimitError("symmetric projector dimension exceeds limit");
  FloatOperator p = FloatOperator::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  for (const auto& v : sym_basis(d, n, max_dim)) p += v * v.adjoint();
  return p;
}

bool is_permutation_invariant(const ExactOperator& rho, int d) {
  const std::size_t dim = rho.dim();
  const int n = letters_of_dim(dim, d);
  if (n == 1) return true;
  for (int i = 1; i < n; ++i) {
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) images.push_back(j);
    std::swap(images[static_cast<std::size_t>(i) - 1], images[static_cast<std::size_t>(i)]);
    if (conjugate_by_permutation(Permutation(std::move(images)), rho, d) != rho) return false;
  }
  return true;
}

namespace {

PurificationCheck purification_impl(const FloatOperator& rho, int d, double tol,
                                    bool checked_exact) {
  const std::size_t dim = static_cast<std::size_t>(rho.rows());
  const int n = letters_of_dim(dim, d);

  if (!checked_exact) {
    // float path: invariance precondition within tolerance
    for (const auto& pi : enumerate_permutations(n)) {
      const auto table = action_index_table(pi, d);
      double dev = 0.0;
      for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t w = 0; w < dim; ++w)
          dev = std::max(dev, std::abs(rho(static_cast<Eigen::Index>(table[x]),
                                           static_cast<Eigen::Index>(table[w])) -
                                       rho(static_cast<Eigen::Index>(x),
                                           static_cast<Eigen::Index>(w))));
      if (dev > tol) throw ContractError("purification check requires a permutation-invariant state");
    }
  }

  Eigen::SelfAdjointEigenSolver<FloatOperator> es(rho);
  if (es.eigenvalues().minCoeff() < -tol)
    throw ContractError("purification check requires a positive semidefinite state");

  // sqrt(rho) from the spectral projectors, then psi = vec(sqrt(rho)):
  // psi[(x, y)] = sqrt(rho)[x, y]
  FloatOperator root = FloatOperator::Zero(rho.rows(), rho.cols());
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = std::max(0.0, es.eigenvalues()(i));
    root += std::sqrt(lam) * (es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint());
  }
  Eigen::VectorXcd psi(static_cast<Eigen::Index>(dim * dim));
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y)
      psi(static_cast<Eigen::Index>(x * dim + y)) =
          root(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y));

  PurificationCheck result;
  result.witness = psi;
  double worst = 0.0;
  for (const auto& pi : enumerate_permutations(n)) {
    const auto table = action_index_table(pi, d);
    for (std::size_t x = 0; x < dim; ++x)
      for (std::size_t y = 0; y < dim; ++y) {
        const std::complex<double> moved = psi(static_cast<Eigen::Index>(x * dim + y));
        const std::complex<double> there =
            psi(static_cast<Eigen::Index>(table[x] * dim + table[y]));
        worst = std::max(worst, std::abs(moved - there));
      }
  }
  result.max_deviation = worst;
  result.invariant = worst <= tol;
  return result;
}

}  // namespace

PurificationCheck purification_in_doubled_sym(const ExactOperator& rho, int d, double tol) {
  if (!is_permutation_invariant(rho, d))
    throw ContractError("purification check requires a permutation-invariant state");
  return purification_impl(to_float(rho), d, tol, /*checked_exact=*/true);
}

PurificationCheck purification_in_doubled_sym(const FloatOperator& rho, int d, double tol) {
  return purification_impl(rho, d, tol, /*checked_exact=*/false);
}

}  // namespace symtwirl
