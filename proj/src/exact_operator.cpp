#include "symtwirl/exact_operator.hpp"

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "symtwirl/errors.hpp"

namespace symtwirl {

ExactOperator ExactOperator::identity(std::size_t dim) {
  ExactOperator m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = ComplexRational(Rational(1));
  return m;
}

ExactOperator ExactOperator::matrix_unit(std::size_t dim, std::size_t row, std::size_t col) {
  ExactOperator m(dim);
  m.at(row, col) = ComplexRational(Rational(1));
  return m;
}

std::size_t ExactOperator::dim() const {
  if (!is_square()) throw DimensionError("operator is not square");
  return rows_;
}

ExactOperator& ExactOperator::operator+=(const ExactOperator& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in +");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ExactOperator& ExactOperator::operator-=(const ExactOperator& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in -");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ExactOperator operator*(const Rational& s, const ExactOperator& m) {
  ExactOperator out = m;
  for (auto& e : out.a_) e = s * e;
  return out;
}

ExactOperator operator*(const ExactOperator& a, const ExactOperator& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix shape mismatch in *");
  ExactOperator out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ComplexRational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const ComplexRational& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

ExactOperator ExactOperator::adjoint() const {
  ExactOperator out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
  return out;
}

ComplexRational ExactOperator::trace() const {
  ComplexRational t;
  for (std::size_t i = 0; i < dim(); ++i) t += at(i, i);
  return t;
}

bool ExactOperator::is_hermitian() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (at(i, j) != at(j, i).conj()) return false;
  return true;
}

bool ExactOperator::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

ExactOperator permutation_matrix(const Permutation& pi, int d, std::size_t max_dim) {
  const std::size_t dim = tensor_dimension(d, pi.n());
  if (dim > max_dim)
    throw SizeLimitError("permutation matrix dimension " + std::to_string(dim) +
                         " exceeds limit " + std::to_string(max_dim));
  ExactOperator u(dim);
  const auto table = action_index_table(pi, d);
  for (std::size_t x = 0; x < dim; ++x) u.at(table[x], x) = ComplexRational(Rational(1));
  return u;
}

ExactOperator conjugate_by_index_table(const std::vector<std::size_t>& table,
                                       const ExactOperator& a) {
  const std::size_t dim = a.dim();
  if (table.size() != dim) throw DimensionError("index table does not match operator dimension");
  ExactOperator out(dim);
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t w = 0; w < dim; ++w) out.at(table[x], table[w]) = a.at(x, w);
  return out;
}

ExactOperator conjugate_by_permutation(const Permutation& pi, const ExactOperator& a, int d) {
  const std::size_t dim = tensor_dimension(d, pi.n());
  if (a.dim() != dim) throw DimensionError("operator dimension is not d^n for this permutation");
  return conjugate_by_index_table(action_index_table(pi, d), a);
}

std::string scalar_to_json(const ComplexRational& z) {
  nlohmann::json j;
  j["re"] = fraction_string(z.re);
  j["im"] = fraction_string(z.im);
  return j.dump();
}

ComplexRational scalar_from_json(const std::string& text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    return {parse_fraction(j.at("re").get<std::string>()),
            parse_fraction(j.at("im").get<std::string>())};
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("malformed scalar: ") + e.what());
  }
}

FloatOperator to_float(const ExactOperator& a) {
  FloatOperator out(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_complex(a.at(i, j));
  return out;
}

ExactOperator to_exact(const FloatOperator& a, std::uint64_t max_denominator) {
  ExactOperator out(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(a.cols()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          ComplexRational(nearest_rational(a(i, j).real(), max_denominator),
                          nearest_rational(a(i, j).imag(), max_denominator));
  return out;
}

namespace {

void require_hermitian(const FloatOperator& a, double tol, const char* who) {
  if (a.rows() != a.cols()) throw DimensionError(std::string(who) + ": matrix is not square");
  const double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol)
    throw ContractError(std::string(who) + ": matrix is not Hermitian within tolerance");
}

}  // namespace

double trace_norm(const FloatOperator& a, double hermiticity_tol) {
  if (a.size() == 0) return 0.0;
  require_hermitian(a, hermiticity_tol, "trace_norm");
  Eigen::SelfAdjointEigenSolver<FloatOperator> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

double von_neumann_entropy(const FloatOperator& rho, double tol) {
  require_hermitian(rho, tol, "von_neumann_entropy");
  if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol)
    throw ContractError("von_neumann_entropy: trace is not 1 within tolerance");
  Eigen::SelfAdjointEigenSolver<FloatOperator> es(rho, Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (lam < -tol) throw ContractError("von_neumann_entropy: negative eigenvalue");
    if (lam > 0.0) h -= lam * std::log2(lam);
  }
  return h < 0.0 ? 0.0 : h;
}

FloatOperator maximally_entangled_state(std::size_t D, std::size_t max_dim) {
  if (D < 1) throw ContractError("D must be positive");
  if (D * D > max_dim) throw SizeLimitError("doubled space dimension exceeds limit");
  Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(D * D));
  const double amp = 1.0 / std::sqrt(static_cast<double>(D));
  for (std::size_t x = 0; x < D; ++x) phi(static_cast<Eigen::Index>(x * D + x)) = amp;
  return phi * phi.adjoint();
}

FloatOperator partial_trace(const FloatOperator& a, std::size_t dim_a, std::size_t dim_b,
                            int which) {
  if (a.rows() != a.cols() ||
      static_cast<std::size_t>(a.rows()) != dim_a * dim_b)
    throw DimensionError("partial_trace: dimensions do not factor the matrix");
  if (which == 0) {
    FloatOperator out = FloatOperator::Zero(static_cast<Eigen::Index>(dim_b),
                                            static_cast<Eigen::Index>(dim_b));
    for (std::size_t i = 0; i < dim_b; ++i)
      for (std::size_t j = 0; j < dim_b; ++j)
        for (std::size_t k = 0; k < dim_a; ++k)
          out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
              a(static_cast<Eigen::Index>(k * dim_b + i), static_cast<Eigen::Index>(k * dim_b + j));
    return out;
  }
  FloatOperator out = FloatOperator::Zero(static_cast<Eigen::Index>(dim_a),
                                          static_cast<Eigen::Index>(dim_a));
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_a; ++j)
      for (std::size_t k = 0; k < dim_b; ++k)
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
            a(static_cast<Eigen::Index>(i * dim_b + k), static_cast<Eigen::Index>(j * dim_b + k));
  return out;
}

Rational random_rational(std::mt19937_64& rng, int max_abs_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

ComplexRational random_complex_rational(std::mt19937_64& rng) {
  return {random_rational(rng), random_rational(rng)};
}

ExactOperator random_rational_operator(std::size_t dim, std::mt19937_64& rng) {
  ExactOperator m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = random_complex_rational(rng);
  return m;
}

ExactOperator random_rational_hermitian(std::size_t dim, std::mt19937_64& rng) {
  ExactOperator m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m.at(i, i) = ComplexRational(random_rational(rng));
    for (std::size_t j = i + 1; j < dim; ++j) {
      m.at(i, j) = random_complex_rational(rng);
      m.at(j, i) = m.at(i, j).conj();
    }
  }
  return m;
}

ExactOperator random_rational_state(std::size_t dim, std::mt19937_64& rng) {
  while (true) {
    ExactOperator b = random_rational_operator(dim, rng);
    ExactOperator g = b * b.adjoint();
    ComplexRational tr = g.trace();
    if (tr.re == 0) continue;  // essentially never for random entries
    return (Rational(1) / tr.re) * g;
  }
}

}  // namespace symtwirl
