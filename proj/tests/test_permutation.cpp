#include <doctest.h>

#include <algorithm>
#include <set>

#include "symtwirl/errors.hpp"
#include "symtwirl/exact_operator.hpp"
#include "symtwirl/permutation.hpp"

using namespace symtwirl;

TEST_CASE("enumeration is lexicographic and complete") {
  CHECK(enumerate_permutations(1).size() == 1);
  CHECK(enumerate_permutations(1)[0] == Permutation::identity(1));

  const auto s3 = enumerate_permutations(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3.front() == Permutation({1, 2, 3}));
  CHECK(s3.back() == Permutation({3, 2, 1}));
  CHECK(std::is_sorted(s3.begin(), s3.end()));

  const auto s5 = enumerate_permutations(5);
  CHECK(s5.size() == 120);
  CHECK(std::set<Permutation>(s5.begin(), s5.end()).size() == 120);

  CHECK_THROWS_AS(enumerate_permutations(9), SizeLimitError);
  CHECK_THROWS_AS(enumerate_permutations(12, 11), SizeLimitError);
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({1, 1, 3}), ContractError);
  CHECK_THROWS_AS(Permutation({0, 1}), ContractError);
  CHECK_THROWS_AS(Permutation({2, 3}), ContractError);
}

TEST_CASE("composition and inverse") {
  const Permutation id3 = Permutation::identity(3);
  const Permutation swap12({2, 1, 3});
  const Permutation cyc({2, 3, 1});

  CHECK(compose(id3, cyc) == cyc);
  CHECK(compose(cyc, id3) == cyc);
  CHECK(compose(swap12, swap12) == id3);
  // by the table result(i) = outer(inner(i)): (2,3,1) twice sends 1->3, 2->1, 3->2
  CHECK(compose(cyc, cyc) == Permutation({3, 1, 2}));

  CHECK(inverse(id3) == id3);
  CHECK(inverse(swap12) == swap12);
  CHECK(inverse(cyc) == Permutation({3, 1, 2}));
  for (const auto& pi : enumerate_permutations(4))
    CHECK(compose(pi, inverse(pi)) == Permutation::identity(4));

  CHECK_THROWS_AS(compose(id3, Permutation::identity(2)), DimensionError);
}

TEST_CASE("tuple action") {
  const IndexTuple x = make_tuple(2, {1, 2, 2});
  CHECK(act_on_tuple(Permutation::identity(3), x) == x);

  const IndexTuple abc = make_tuple(3, {1, 2, 3});
  CHECK(act_on_tuple(Permutation({2, 1, 3}), abc) == make_tuple(3, {2, 1, 3}));

  // result_i = x_{pi(i)} for pi = (2,3,1) on (1,1,2)
  CHECK(act_on_tuple(Permutation({2, 3, 1}), make_tuple(2, {1, 1, 2})) ==
        make_tuple(2, {1, 2, 1}));

  CHECK_THROWS_AS(act_on_tuple(Permutation::identity(2), x), DimensionError);
  CHECK_THROWS_AS(make_tuple(2, {1, 3}), ContractError);
}

TEST_CASE("action preserves the multiset of entries") {
  for (const auto& pi : enumerate_permutations(4)) {
    const IndexTuple x = make_tuple(3, {2, 1, 3, 1});
    auto sorted_entries = [](const IndexTuple& t) {
      auto e = t.entries;
      std::sort(e.begin(), e.end());
      return e;
    };
    CHECK(sorted_entries(act_on_tuple(pi, x)) == sorted_entries(x));
  }
}

TEST_CASE("composition of actions is contravariant") {
  const int d = 2, n = 3;
  const std::size_t dim = tensor_dimension(d, n);
  for (const auto& sigma : enumerate_permutations(n))
    for (const auto& pi : enumerate_permutations(n))
      for (std::size_t b = 0; b < dim; ++b) {
        const IndexTuple x = index_to_tuple(b, d, n);
        CHECK(act_on_tuple(sigma, act_on_tuple(pi, x)) ==
              act_on_tuple(compose(pi, sigma), x));
      }
}

TEST_CASE("action is a bijection on index tuples") {
  const int d = 2;
  for (int n = 1; n <= 4; ++n) {
    const std::size_t dim = tensor_dimension(d, n);
    for (const auto& pi : enumerate_permutations(n)) {
      std::set<std::size_t> images;
      for (std::size_t b = 0; b < dim; ++b)
        images.insert(tuple_to_index(act_on_tuple(pi, index_to_tuple(b, d, n))));
      CHECK(images.size() == dim);
    }
  }
}

TEST_CASE("basis index encoding is a big-endian bijection") {
  const int d = 3, n = 4;
  const std::size_t dim = tensor_dimension(d, n);
  CHECK(dim == 81);
  for (std::size_t b = 0; b < dim; ++b)
    CHECK(tuple_to_index(index_to_tuple(b, d, n)) == b);
  // entry 1 is the most significant digit
  CHECK(tuple_to_index(make_tuple(3, {2, 1, 1, 1})) == 27);
  CHECK(tuple_to_index(make_tuple(3, {1, 1, 1, 2})) == 1);
}

TEST_CASE("permutation matrices") {
  const int d = 2;
  CHECK(permutation_matrix(Permutation::identity(2), d) == ExactOperator::identity(4));

  // the swap on two qubits exchanges |12> and |21>, fixes |11> and |22>
  const ExactOperator swp = permutation_matrix(Permutation({2, 1}), d);
  const std::size_t i11 = 0, i12 = 1, i21 = 2, i22 = 3;
  CHECK(swp.at(i11, i11) == ComplexRational(Rational(1)));
  CHECK(swp.at(i22, i22) == ComplexRational(Rational(1)));
  CHECK(swp.at(i21, i12) == ComplexRational(Rational(1)));
  CHECK(swp.at(i12, i21) == ComplexRational(Rational(1)));
  CHECK(swp.at(i12, i12) == ComplexRational());

  // every row and column of a representation matrix holds exactly one 1
  const ExactOperator u = permutation_matrix(Permutation({3, 1, 4, 2}), d);
  for (std::size_t c = 0; c < u.dim(); ++c) {
    ComplexRational row_sum, col_sum;
    for (std::size_t r = 0; r < u.dim(); ++r) {
      col_sum += u.at(r, c);
      row_sum += u.at(c, r);
    }
    CHECK(col_sum == ComplexRational(Rational(1)));
    CHECK(row_sum == ComplexRational(Rational(1)));
  }

  CHECK_THROWS_AS(permutation_matrix(Permutation::identity(8), 4), SizeLimitError);
}

TEST_CASE("matrix of the inverse is the transpose") {
  for (const auto& pi : enumerate_permutations(3)) {
    const ExactOperator u = permutation_matrix(pi, 2);
    const ExactOperator v = permutation_matrix(inverse(pi), 2);
    CHECK(v == u.adjoint());  // real 0/1 entries: adjoint = transpose
  }
}

TEST_CASE("cycle counting") {
  CHECK(Permutation::identity(5).cycle_count() == 5);
  CHECK(Permutation({2, 1, 3}).cycle_count() == 2);
  CHECK(Permutation({2, 3, 1}).cycle_count() == 1);
  CHECK(Permutation({2, 1, 4, 3}).cycle_count() == 2);
}
