#include "symtwirl/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "symtwirl/errors.hpp"

namespace symtwirl {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1) throw ContractError("permutation needs at least one letter");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
      throw ContractError("image list is not a bijection of {1..n}");
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (image(i) != i) return false;
  return true;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(images_[j]) - 1;
    }
  }
  return cycles;
}

std::vector<Permutation> enumerate_permutations(int n, int max_letters) {
  if (n < 1) throw ContractError("n must be positive");
  if (n > max_letters)
    throw SizeLimitError("permutation enumeration limited to n <= " + std::to_string(max_letters));
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.n() != inner.n()) throw DimensionError("composition of permutations of different n");
  std::vector<int> im(static_cast<std::size_t>(outer.n()));
  for (int i = 1; i <= outer.n(); ++i) im[static_cast<std::size_t>(i) - 1] = outer.image(inner.image(i));
  return Permutation(std::move(im));
}

Permutation inverse(const Permutation& pi) {
  std::vector<int> im(static_cast<std::size_t>(pi.n()));
  for (int i = 1; i <= pi.n(); ++i) im[static_cast<std::size_t>(pi.image(i)) - 1] = i;
  return Permutation(std::move(im));
}

IndexTuple make_tuple(int d, std::vector<int> entries) {
  if (d < 1) throw ContractError("d must be positive");
  if (entries.empty()) throw ContractError("index tuple needs at least one entry");
  for (int e : entries)
    if (e < 1 || e > d) throw ContractError("tuple entry outside {1..d}");
  return IndexTuple{d, std::move(entries)};
}

IndexTuple act_on_tuple(const Permutation& pi, const IndexTuple& x) {
  if (pi.n() != x.n()) throw DimensionError("permutation and tuple have different n");
  std::vector<int> out(x.entries.size());
  for (int i = 1; i <= pi.n(); ++i)
    out[static_cast<std::size_t>(i) - 1] = x.entries[static_cast<std::size_t>(pi.image(i)) - 1];
  return IndexTuple{x.d, std::move(out)};
}

std::size_t tuple_to_index(const IndexTuple& x) {
  std::size_t v = 0;
  for (int e : x.entries) v = v * static_cast<std::size_t>(x.d) + static_cast<std::size_t>(e - 1);
  return v;
}

IndexTuple index_to_tuple(std::size_t value, int d, int n) {
  std::vector<int> entries(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    entries[static_cast<std::size_t>(i)] = static_cast<int>(value % static_cast<std::size_t>(d)) + 1;
    value /= static_cast<std::size_t>(d);
  }
  return IndexTuple{d, std::move(entries)};
}

std::vector<std::size_t> action_index_table(const Permutation& pi, int d) {
  const int n = pi.n();
  const std::size_t dim = tensor_dimension(d, n);
  std::vector<std::size_t> table(dim);
  for (std::size_t b = 0; b < dim; ++b)
    table[b] = tuple_to_index(act_on_tuple(pi, index_to_tuple(b, d, n)));
  return table;
}

std::size_t tensor_dimension(int d, int n) {
  if (d < 1 || n < 1) throw ContractError("d and n must be positive");
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) {
    if (dim > (static_cast<std::size_t>(1) << 40))
      throw SizeLimitError("d^n exceeds supported range");
    dim *= static_cast<std::size_t>(d);
  }
  return dim;
}

}  // namespace symtwirl
