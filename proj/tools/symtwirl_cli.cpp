// Command-line frontend: design construction and verification, bound
// reports, type statistics, approximate-design brackets, and channel-design
// verification. JSON reports go to stdout, human-readable summaries to
// stderr. Exit codes: 0 success/verified, 1 verification failure, 2 invalid
// input or size limit.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symtwirl/approx_channel.hpp"
#include "symtwirl/bounds.hpp"
#include "symtwirl/design.hpp"
#include "symtwirl/errors.hpp"
#include "symtwirl/typestat.hpp"

namespace {

using namespace symtwirl;

struct Options {
  int d = 2;
  int n = 2;
  int dh = 2;
  int dk = 2;
  std::optional<double> eps;
  int trials = 20;
  std::uint64_t seed = 0;
  std::string design_path;
  std::string out_path;
  std::size_t max_dim = kDefaultMaxOperatorDim;
};

int run_design_find(const Options& opt) {
  const ConstraintSystem sys = ConstraintSystem::build(opt.d, opt.n);
  const WeightedDesign design = caratheodory_reduce(DistributionOverSn::uniform(opt.n), sys);
  if (!verify_design_operational(design.distribution, opt.d, opt.trials, opt.seed, opt.max_dim)) {
    std::cerr << "operational cross-check failed\n";
    return 1;
  }

  const Integer lower = support_lower_bound(opt.d, opt.n);
  const Integer upper = support_upper_bound(opt.d, opt.n);

  std::optional<bool> forced;
  if (opt.d * opt.d >= opt.n || factorial(static_cast<unsigned>(opt.n)) <= 120)
    forced = is_uniform_forced(sys);

  nlohmann::json j;
  j["d"] = opt.d;
  j["n"] = opt.n;
  j["support_size"] = design.support_size();
  j["support_lower"] = lower.str();
  j["support_upper"] = upper.str();
  j["entropy_bits"] = shannon_entropy(design.distribution);
  j["entropy_rate"] = shannon_entropy(design.distribution) / opt.n;
  if (forced) j["uniform_forced"] = *forced;
  j["design"] = nlohmann::json::parse(design_to_json(design));
  std::cout << j.dump(2) << "\n";

  std::cerr << "design on S_" << opt.n << " at d=" << opt.d << ": support "
            << design.support_size() << " within [" << lower << ", " << upper << "]";
  if (forced) std::cerr << (*forced ? " (uniform is forced)" : "");
  std::cerr << "\n";

  if (!opt.out_path.empty()) {
    save_design(design, opt.out_path);
    std::cerr << "wrote " << opt.out_path << "\n";
  }
  return 0;
}

int run_design_verify(const Options& opt) {
  const WeightedDesign design = load_design(opt.design_path);
  const ConstraintSystem sys = ConstraintSystem::build(design.d, design.n());
  const VerifyResult result = verify_design(design.distribution, sys);
  nlohmann::json j;
  j["d"] = design.d;
  j["n"] = design.n();
  j["support_size"] = design.support_size();
  j["verified"] = result.ok;
  if (!result.ok) {
    j["violated_pattern"] = result.pattern;
    j["violated_image"] = result.image;
    j["expected"] = fraction_string(result.expected);
    j["actual"] = fraction_string(result.actual);
  }
  std::cout << j.dump(2) << "\n";
  if (result.ok) {
    std::cerr << "design verified exactly\n";
    return 0;
  }
  std::cerr << "verification FAILED at pattern " << result.pattern << "\n";
  return 1;
}

int run_bounds(const Options& opt) {
  std::optional<WeightedDesign> design;
  if (!opt.design_path.empty()) design = load_design(opt.design_path);
  const BoundsReport report = bounds_report(opt.d, opt.n, design, opt.eps);
  std::cout << report.to_json();
  std::cerr << "bounds for d=" << opt.d << ", n=" << opt.n << " emitted\n";
  return 0;
}

int run_types(const Options& opt) {
  nlohmann::json j;
  j["n"] = opt.n;
  j["d"] = opt.d;
  nlohmann::json list = nlohmann::json::array();
  Integer total = 0;
  for (const TypeDistribution& mu : enumerate_types(opt.n, opt.d)) {
    nlohmann::json entry;
    entry["counts"] = mu.counts();
    entry["class_size"] = type_class_size(mu).str();
    entry["entropy_bits"] = mu.entropy_bits();
    total += type_class_size(mu);
    list.push_back(std::move(entry));
  }
  j["types"] = std::move(list);
  j["total_words"] = total.str();
  const TypeDistribution star = max_entropy_type(opt.n, opt.d);
  j["max_entropy_type"] = star.counts();
  j["max_entropy_bits"] = star.entropy_bits();
  std::cout << j.dump(2) << "\n";
  std::cerr << "enumerated " << enumerate_types(opt.n, opt.d).size() << " types\n";
  return 0;
}

int run_approx(const Options& opt) {
  const WeightedDesign design = load_design(opt.design_path);
  const ApproxDesignReport report = approx_design_report(design.distribution, design.d);
  std::cout << report.to_json();
  std::cerr << "eps within [" << report.eps_lower << ", " << report.eps_upper
            << "], witness: " << report.witness << "\n";
  return 0;
}

int run_channel_verify(const Options& opt) {
  const WeightedDesign design = load_design(opt.design_path);
  const bool ok = verify_channel_design(design.distribution, opt.dh, opt.dk, 2, opt.seed);
  nlohmann::json j;
  j["dh"] = opt.dh;
  j["dk"] = opt.dk;
  j["n"] = design.n();
  j["verified"] = ok;
  j["state_dimension"] = opt.dh * opt.dk;
  std::cout << j.dump(2) << "\n";
  std::cerr << (ok ? "channel design verified (via state design at d = dK*dH)\n"
                   : "channel-design verification FAILED\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted symmetric designs: construction, exact verification, bounds"};
  app.require_subcommand(1);
  Options opt;

  auto add_dn = [&](CLI::App* cmd) {
    cmd->add_option("--d", opt.d, "local dimension")->check(CLI::PositiveNumber);
    cmd->add_option("--n", opt.n, "number of tensor factors")->check(CLI::PositiveNumber);
  };

  CLI::App* design = app.add_subcommand("design", "construct or verify designs");
  design->require_subcommand(1);
  CLI::App* find = design->add_subcommand("find", "reduce the uniform distribution to a design");
  add_dn(find);
  find->add_option("--out", opt.out_path, "write the design file here");
  find->add_option("--trials", opt.trials, "operational cross-check trials");
  find->add_option("--seed", opt.seed, "seed for randomized checks");
  find->add_option("--max-dim", opt.max_dim, "override the d^n size limit");

  CLI::App* verify = design->add_subcommand("verify", "exact verification of a design file");
  verify->add_option("--design", opt.design_path, "design file")->required();

  CLI::App* bounds = app.add_subcommand("bounds", "closed-form bound report");
  add_dn(bounds);
  bounds->add_option("--eps", opt.eps, "diamond-norm distance for the approximate floor");
  bounds->add_option("--design", opt.design_path, "include design verdicts for this file");

  CLI::App* types = app.add_subcommand("types", "type enumeration and statistics");
  add_dn(types);

  CLI::App* approx = app.add_subcommand("approx", "diamond bracket and entropy floor");
  approx->add_option("--design", opt.design_path, "design file")->required();

  CLI::App* channel = app.add_subcommand("channel", "channel-design operations");
  channel->require_subcommand(1);
  CLI::App* chverify = channel->add_subcommand("verify", "verify a channel design");
  chverify->add_option("--design", opt.design_path, "design file")->required();
  chverify->add_option("--dh", opt.dh, "input local dimension")->check(CLI::PositiveNumber);
  chverify->add_option("--dk", opt.dk, "output local dimension")->check(CLI::PositiveNumber);
  chverify->add_option("--seed", opt.seed, "seed for spot checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (find->parsed()) return run_design_find(opt);
    if (verify->parsed()) return run_design_verify(opt);
    if (bounds->parsed()) return run_bounds(opt);
    if (types->parsed()) return run_types(opt);
    if (approx->parsed()) return run_approx(opt);
    if (chverify->parsed()) return run_channel_verify(opt);
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return 2;
  } catch (const ContractError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
