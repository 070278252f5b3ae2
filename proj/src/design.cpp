#include "symtwirl/design.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "symtwirl/errors.hpp"
#include "symtwirl/exact_operator.hpp"

namespace symtwirl {

namespace {

int pattern_alphabet(int d, int n) { return std::min(d * d, n); }

std::vector<int> apply_to_word(const Permutation& pi, const std::vector<int>& word) {
  std::vector<int> out(word.size());
  for (int i = 1; i <= pi.n(); ++i)
    out[static_cast<std::size_t>(i) - 1] = word[static_cast<std::size_t>(pi.image(i)) - 1];
  return out;
}

std::vector<int> letter_counts(const Pattern& p) {
  int maxsym = 0;
  for (int s : p) maxsym = std::max(maxsym, s);
  std::vector<int> counts(static_cast<std::size_t>(maxsym), 0);
  for (int s : p) ++counts[static_cast<std::size_t>(s) - 1];
  return counts;
}

Integer stabilizer_order(const Pattern& p) {
  Integer s = 1;
  for (int c : letter_counts(p)) s *= factorial(static_cast<unsigned>(c));
  return s;
}

// Stirling numbers of the second kind up to the largest n we enumerate.
Integer stirling2(unsigned n, unsigned k) {
  static constexpr unsigned kMax = 16;
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMax + 1>, kMax + 1> t{};
    t[0][0] = 1;
    for (unsigned i = 1; i <= kMax; ++i)
      for (unsigned j = 1; j <= i; ++j)
        t[i][j] = t[i - 1][j - 1] + static_cast<std::uint64_t>(j) * t[i - 1][j];
    return t;
  }();
  if (n > kMax || k > kMax) throw SizeLimitError("Stirling table exhausted");
  return Integer(table[n][k]);
}

}  // namespace

std::string pattern_string(const Pattern& p) {
  std::string s;
  s.reserve(p.size());
  for (int sym : p) s.push_back(static_cast<char>('a' + sym - 1));
  return s;
}

std::vector<Pattern> enumerate_patterns(int d, int n) {
  if (d < 1 || n < 1) throw ContractError("d and n must be positive");
  const int k = pattern_alphabet(d, n);
  std::vector<Pattern> out;
  Pattern cur(static_cast<std::size_t>(n));
  // restricted-growth strings: first symbol 1, each next at most prior max + 1
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    const int limit = std::min(used + 1, k);
    for (int s = 1; s <= limit; ++s) {
      cur[static_cast<std::size_t>(pos)] = s;
      self(self, pos + 1, std::max(used, s));
    }
  };
  rec(rec, 0, 0);
  return out;
}

ConstraintSystem ConstraintSystem::build(int d, int n, int max_letters) {
  if (d < 1 || n < 1) throw ContractError("d and n must be positive");
  if (n > max_letters)
    throw SizeLimitError("constraint system limited to n <= " + std::to_string(max_letters));
  ConstraintSystem sys(d, n);
  sys.patterns_ = enumerate_patterns(d, n);
  const Integer nfact = factorial(static_cast<unsigned>(n));
  for (const Pattern& p : sys.patterns_) {
    const Integer stab = stabilizer_order(p);
    sys.target_value_.push_back(Rational(stab, nfact));
    sys.orbit_size_.push_back(nfact / stab);
  }
  return sys;
}

Integer ConstraintSystem::row_count() const {
  Integer rows = 0;
  for (const Integer& o : orbit_size_) rows += o;
  return rows;
}

ConstraintSystem::Dense ConstraintSystem::materialize(std::size_t max_rows) const {
  if (row_count() > Integer(max_rows))
    throw SizeLimitError("constraint matrix with " + row_count().str() +
                         " rows exceeds materialization limit");
  const auto perms = enumerate_permutations(n_);
  Dense dense;
  for (std::size_t p = 0; p < patterns_.size(); ++p) {
    // orbit elements in lexicographic order: multiset permutations of the pattern
    std::vector<int> word = patterns_[p];
    std::sort(word.begin(), word.end());
    std::map<std::vector<int>, std::size_t> row_of;
    do {
      row_of.emplace(word, dense.matrix.size());
      dense.row_pattern.push_back(p);
      dense.row_image.push_back(word);
      dense.matrix.emplace_back(perms.size(), 0);
      dense.target.push_back(target_value_[p]);
    } while (std::next_permutation(word.begin(), word.end()));
    for (std::size_t c = 0; c < perms.size(); ++c)
      dense.matrix[row_of.at(apply_to_word(perms[c], patterns_[p]))][c] = 1;
  }
  return dense;
}

Integer fixed_pattern_count(const Permutation& tau, int d) {
  const int k = pattern_alphabet(d, tau.n());
  const unsigned cycles = static_cast<unsigned>(tau.cycle_count());
  Integer count = 0;
  for (unsigned j = 1; j <= std::min<unsigned>(static_cast<unsigned>(k), cycles); ++j)
    count += stirling2(cycles, j);
  return count;
}

VerifyResult verify_design(const DistributionOverSn& candidate, const ConstraintSystem& sys) {
  if (candidate.n() != sys.n()) throw DimensionError("candidate n does not match system");
  for (std::size_t p = 0; p < sys.patterns().size(); ++p) {
    std::map<std::vector<int>, Rational> acc;
    for (const auto& [pi, w] : candidate.weights())
      acc[apply_to_word(pi, sys.patterns()[p])] += w;
    // coverage of the whole orbit is implied: the block mass is 1, so a
    // missing image forces some present image above the target
    for (const auto& [image, mass] : acc) {
      if (mass != sys.target_value(p)) {
        VerifyResult r;
        r.ok = false;
        r.pattern = pattern_string(sys.patterns()[p]);
        r.image = image;
        r.expected = sys.target_value(p);
        r.actual = mass;
        return r;
      }
    }
  }
  return VerifyResult{};
}

bool verify_design_operational(const DistributionOverSn& candidate, int d, int trials,
                               std::uint64_t seed, std::size_t max_dim) {
  const int n = candidate.n();
  const std::size_t dim = tensor_dimension(d, n);
  if (dim > max_dim) throw SizeLimitError("d^n exceeds exact-operator limit");

  if (dim <= 16) {
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        const ExactOperator unit = ExactOperator::matrix_unit(dim, r, c);
        if (weighted_twirl(candidate, unit, d) != uniform_twirl(unit, d, n, TwirlPath::kNaive))
          return false;
      }
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const ExactOperator a = random_rational_operator(dim, rng);
    if (weighted_twirl(candidate, a, d) != uniform_twirl(a, d, n, TwirlPath::kNaive)) return false;
  }
  return true;
}

namespace {

// Gram matrix of the constraint columns: entry (i, j) counts the patterns on
// which permutations i and j act identically. Augmenting every entry by one
// accounts for the normalization row, and the kernel of the Gram matrix
// equals the kernel of the column matrix itself, with identical pivot
// structure (the Gram matrix is positive semidefinite).
struct ActiveEntry {
  Permutation pi;
  Rational weight;
};

std::vector<std::vector<Integer>> gram_matrix(const std::vector<ActiveEntry>& active, int d) {
  const std::size_t m = active.size();
  std::vector<std::vector<Integer>> g(m, std::vector<Integer>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const Integer v = fixed_pattern_count(compose(active[i].pi, inverse(active[j].pi)), d) + 1;
      g[i][j] = v;
      g[j][i] = v;
    }
  }
  return g;
}

// The direction must kill every constraint column exactly; checked sparsely
// against the real (pattern, image) rows rather than trusted from the Gram
// route.
void check_direction_kills_columns(const std::vector<ActiveEntry>& active,
                                   const std::vector<Rational>& dir,
                                   const ConstraintSystem& sys) {
  Rational total = 0;
  for (const Rational& c : dir) total += c;
  if (total != 0) throw std::logic_error("null direction does not preserve total mass");
  for (const Pattern& p : sys.patterns()) {
    std::map<std::vector<int>, Rational> acc;
    for (std::size_t i = 0; i < active.size(); ++i)
      acc[apply_to_word(active[i].pi, p)] += dir[i];
    for (const auto& [image, v] : acc)
      if (v != 0) throw std::logic_error("null direction does not kill constraint columns");
  }
}

}  // namespace

WeightedDesign caratheodory_reduce(const DistributionOverSn& start, const ConstraintSystem& sys) {
  // cost is cubic in the active support per step; a full S_7 start would
  // not terminate in reasonable time or memory
  if (start.support_size() > 720)
    throw SizeLimitError("support reduction limited to starts with at most 720 permutations");

  {
    const VerifyResult pre = verify_design(start, sys);
    if (!pre.ok)
      throw ContractError("reduction start is not a design (pattern " + pre.pattern + ")");
  }

  std::vector<ActiveEntry> active;
  active.reserve(start.support_size());
  for (const auto& [pi, w] : start.weights()) active.push_back({pi, w});

  while (true) {
    const std::size_t m = active.size();
    const auto gram = gram_matrix(active, sys.d());
    RationalMatrix g(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) g.at(i, j) = Rational(gram[i][j]);

    const auto direction = first_kernel_vector(g);
    if (!direction) break;
    check_direction_kills_columns(active, *direction, sys);

    // largest step keeping all weights nonnegative; at least one entry of
    // the direction is positive because the entries sum to zero
    bool found = false;
    Rational step = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((*direction)[i] <= 0) continue;
      const Rational ratio = active[i].weight / (*direction)[i];
      if (!found || ratio < step) {
        found = true;
        step = ratio;
      }
    }
    if (!found) throw std::logic_error("null direction has no positive entry");

    std::size_t drop = m;
    for (std::size_t i = 0; i < m; ++i) {
      active[i].weight -= step * (*direction)[i];
      if (active[i].weight == 0 && (drop == m || active[drop].pi < active[i].pi)) drop = i;
    }
    if (drop == m) throw std::logic_error("no weight reached zero along the step");
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(drop));
  }

  std::map<Permutation, Rational> support;
  for (const auto& e : active)
    if (e.weight != 0) support.emplace(e.pi, e.weight);
  WeightedDesign design{sys.d(), DistributionOverSn(sys.n(), std::move(support))};

  const VerifyResult post = verify_design(design.distribution, sys);
  if (!post.ok) throw std::logic_error("reduced design failed exact verification");
  return design;
}

bool is_uniform_forced(const ConstraintSystem& sys) {
  if (sys.d() * sys.d() >= sys.n()) return true;  // an all-distinct pattern pins each column
  const auto perms = enumerate_permutations(sys.n());
  const std::size_t m = perms.size();
  if (m > 720) throw SizeLimitError("uniqueness rank test limited to n <= 6");
  RationalMatrix g(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const Rational v(fixed_pattern_count(compose(perms[i], inverse(perms[j])), sys.d()) + 1);
      g.at(i, j) = v;
      g.at(j, i) = v;
    }
  return !first_kernel_vector(g).has_value();
}

MinimalSearchResult minimal_support_exhaustive(const ConstraintSystem& sys,
                                               std::uint64_t budget) {
  if (sys.n() > 4) throw SizeLimitError("exhaustive search limited to n <= 4");

  MinimalSearchResult result;
  // 2^24 subsets are out of reach at n = 4; the uniqueness rank test
  // certifies the answer there instead. Smaller n is searched honestly.
  if (sys.n() == 4 && is_uniform_forced(sys)) {
    result.design = WeightedDesign{sys.d(), DistributionOverSn::uniform(sys.n())};
    result.certified_minimal = true;
    return result;
  }

  const auto perms = enumerate_permutations(sys.n());
  const ConstraintSystem::Dense dense = sys.materialize();
  const std::size_t rows = dense.matrix.size();

  auto try_subset = [&](const std::vector<std::size_t>& subset)
      -> std::optional<WeightedDesign> {
    RationalMatrix m(rows + 1, subset.size());
    std::vector<Rational> b(rows + 1);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < subset.size(); ++c)
        m.at(r, c) = Rational(dense.matrix[r][subset[c]]);
      b[r] = dense.target[r];
    }
    for (std::size_t c = 0; c < subset.size(); ++c) m.at(rows, c) = 1;
    b[rows] = 1;
    const auto x = solve_nonnegative(m, b);
    if (!x) return std::nullopt;
    std::map<Permutation, Rational> support;
    for (std::size_t c = 0; c < subset.size(); ++c)
      if ((*x)[c] > 0) support.emplace(perms[subset[c]], (*x)[c]);
    return WeightedDesign{sys.d(), DistributionOverSn(sys.n(), std::move(support))};
  };

  for (std::size_t k = 1; k <= perms.size(); ++k) {
    std::vector<std::size_t> subset(k);
    // lexicographically first k-combination
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;
    while (true) {
      if (result.feasibility_solves >= budget) return result;  // explicit unknown
      ++result.feasibility_solves;
      if (auto found = try_subset(subset)) {
        result.design = std::move(found);
        result.certified_minimal = true;
        return result;
      }
      // next combination
      std::size_t i = k;
      while (i > 0 && subset[i - 1] == perms.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return result;  // no design at any size: cannot happen, the full set verifies
}

FeatureVector raw_feature_vector(const Permutation& pi, int d) {
  const int n = pi.n();
  Integer raw_dim = integer_pow(Integer(d), static_cast<unsigned>(4 * n));
  if (raw_dim > 20000)
    throw SizeLimitError("raw feature vectors limited to d^(4n) <= 20000");
  const std::size_t dim = tensor_dimension(d, n);
  const auto table = action_index_table(pi, d);
  FeatureVector fv{pi, {}};
  fv.coords.reserve(dim * dim);
  const std::uint64_t big = static_cast<std::uint64_t>(dim);
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      const std::uint64_t w = table[x], z = table[y];
      fv.coords.push_back(((w * big + x) * big + y) * big + z);
    }
  std::sort(fv.coords.begin(), fv.coords.end());
  return fv;
}

bool verify_design_raw(const DistributionOverSn& candidate, int d) {
  const int n = candidate.n();
  std::map<std::uint64_t, Rational> weighted;
  for (const auto& [pi, w] : candidate.weights())
    for (std::uint64_t c : raw_feature_vector(pi, d).coords) weighted[c] += w;

  std::map<std::uint64_t, Rational> uniform;
  const Rational u(Integer(1), factorial(static_cast<unsigned>(n)));
  for (const auto& pi : enumerate_permutations(n))
    for (std::uint64_t c : raw_feature_vector(pi, d).coords) uniform[c] += u;

  return weighted == uniform;
}

std::string design_to_json(const WeightedDesign& design) {
  nlohmann::json j;
  j["d"] = design.d;
  j["n"] = design.n();
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& [pi, w] : design.distribution.weights()) {
    nlohmann::json entry;
    entry["perm"] = pi.images();
    entry["w"] = fraction_string(w);
    weights.push_back(std::move(entry));
  }
  j["weights"] = std::move(weights);
  return j.dump(2) + "\n";
}

WeightedDesign design_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("design file is not valid JSON: ") + e.what());
  }
  try {
    const int d = j.at("d").get<int>();
    const int n = j.at("n").get<int>();
    if (d < 1 || n < 1) throw ContractError("design file needs d >= 1 and n >= 1");
    std::map<Permutation, Rational> support;
    for (const auto& entry : j.at("weights")) {
      Permutation pi(entry.at("perm").get<std::vector<int>>());
      if (pi.n() != n) throw ContractError("permutation length does not match n");
      const Rational w = parse_fraction(entry.at("w").get<std::string>());
      if (!support.emplace(std::move(pi), w).second)
        throw ContractError("duplicate permutation in design file");
    }
    return WeightedDesign{d, DistributionOverSn(n, std::move(support))};
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("design file schema violation: ") + e.what());
  }
}

void save_design(const WeightedDesign& design, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ContractError("cannot open for writing: " + path);
  out << design_to_json(design);
}

WeightedDesign load_design(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot open design file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return design_from_json(buf.str());
}

}  // namespace symtwirl
