// Command-line surface for the stamp chain library: verification,
// basis/chain conversion, extremal search, plan compilation, the two
// demos, and the embedded tables.
//
// Exit status: 0 = all requested properties verified / command succeeded;
// 1 = a verification failed or a domain error; 2 = usage or parse error.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <stampchain/stampchain.hpp>

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string full_precision(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

// Demo inputs are mt19937_64 streams reduced mod the demo prime; mt19937_64
// is fully specified by the standard, so seeded runs are reproducible
// across platforms.
std::uint64_t next_entry(std::mt19937_64& gen) { return gen() % stampchain::kDemoModulus; }

// --as chain requests the addition-chain property; --as basis requests
// admissibility; --n N additionally requests range >= N. With nothing
// requested the command is informational and exits 0.
int cmd_verify(const std::vector<std::int64_t>& elements, const std::string& as,
               std::optional<std::int64_t> n) {
  const stampchain::StampSet set(elements);
  const auto r = stampchain::range(set);
  bool all_requested_hold = true;

  std::cout << "range=" << r.range << " admissible=" << (stampchain::is_admissible(set) ? "yes" : "no");

  if (as == "basis" && !n) {
    if (!stampchain::is_admissible(set)) all_requested_hold = false;
  }
  if (as == "chain") {
    const auto check = stampchain::is_addition_chain(set);
    if (check.ok) {
      std::cout << " chain=yes";
    } else {
      std::cout << " chain=no (" << check.failing_element << " not generated by prefix)";
      all_requested_hold = false;
    }
  }
  if (n) {
    const bool covers = r.range >= *n;
    if (as == "chain") {
      const bool chain_for_n = covers && stampchain::is_addition_chain(set).ok;
      std::cout << " stamp_chain_for_" << *n << "=" << (chain_for_n ? "yes" : "no");
      if (!chain_for_n) all_requested_hold = false;
    } else {
      std::cout << " basis_for_" << *n << "=" << (covers ? "yes" : "no");
      if (!covers) all_requested_hold = false;
    }
  }
  std::cout << '\n';
  return all_requested_hold ? 0 : 1;
}

int cmd_convert(const std::vector<std::int64_t>& elements, const std::string& direction) {
  const stampchain::StampSet set(elements);
  const stampchain::ShiftedSet out = direction == "to-chain" ? stampchain::chain_from_basis(set)
                                                             : stampchain::basis_from_chain(set);
  std::cout << out.result.to_string() << " (range " << stampchain::range(out.result).range
            << ")\n";
  return 0;
}

int cmd_search(int k, std::optional<std::uint64_t> max_nodes, unsigned workers) {
  stampchain::SearchBudget budget;
  budget.max_nodes = max_nodes;
  budget.parallel_width = workers;
  budget.max_k = std::max(budget.max_k, k);
  const auto outcome = stampchain::search_extremal(k, budget);
  for (const auto& set : outcome.record.sets) {
    std::cout << outcome.record.k << ' ' << outcome.record.range << ' ' << set.to_string()
              << '\n';
  }
  if (!outcome.complete()) {
    std::cerr << "node budget exhausted after " << outcome.nodes_visited
              << " nodes; best-so-far shown, result may be incomplete\n";
    return 1;
  }
  return 0;
}

int cmd_plan(std::int64_t n, const std::vector<std::int64_t>& chain_elems,
             const std::string& format) {
  stampchain::StampSet chain = [&] {
    if (!chain_elems.empty()) return stampchain::StampSet(chain_elems);
    try {
      return stampchain::minimal_chain_for(n);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("n=" + std::to_string(n) +
                                  " is beyond embedded tables (max 214); supply --chain");
    }
  }();
  const auto plan = stampchain::compile_plan(chain, n);

  if (format == "structured") {
    std::cout << stampchain::serialize_plan(plan);
    return 0;
  }

  const auto stats = stampchain::plan_stats(plan);
  std::cout << "chain: " << chain.to_string() << " (k=" << stats.k << ", range "
            << stampchain::range(chain).range << ")\n";
  std::cout << "phase 1 (" << stats.multiplications << " multiplications):\n";
  for (const auto& step : plan.phase1) {
    std::cout << "  x^" << chain.stamp(step.j) << " = x^" << chain.stamp(step.h) << " * x^"
              << chain.stamp(step.i) << '\n';
  }
  std::cout << "phase 2 (" << stats.singles << " singles, " << stats.pairs << " pairs):\n";
  for (const auto& entry : plan.phase2) {
    if (entry.is_pair) {
      std::cout << "  y_" << entry.c << " = v(x^" << chain.stamp(entry.h) << ", x^"
                << chain.stamp(entry.i) << ")\n";
    } else {
      std::cout << "  y_" << entry.c << " = u(x^" << chain.stamp(entry.i) << ")\n";
    }
  }
  std::cout << "stats: k=" << stats.k << " n=" << stats.n
            << " multiplications=" << stats.multiplications << " singles=" << stats.singles
            << " pairs=" << stats.pairs << " savings=" << stats.savings_num << '/'
            << stats.savings_den << " (" << full_precision(stats.savings_ratio) << ")\n";
  return 0;
}

int cmd_demo_subsetconv(int N, std::int64_t n, std::uint64_t seed, const std::string& algo,
                        const std::string& input_path, const std::string& dump_path) {
  const stampchain::SetFunction<std::uint64_t> f = [&] {
    if (!input_path.empty()) {
      std::ifstream in(input_path);
      if (!in) throw std::invalid_argument("cannot open " + input_path);
      std::ostringstream text;
      text << in.rdbuf();
      return stampchain::load_set_function<std::uint64_t>(text.str());
    }
    std::mt19937_64 gen(seed);
    std::vector<std::uint64_t> table(std::size_t{1} << N);
    for (auto& v : table) v = next_entry(gen);
    return stampchain::SetFunction<std::uint64_t>(N, std::move(table));
  }();
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) throw std::invalid_argument("cannot open " + dump_path);
    out << stampchain::dump_set_function(f);
  }

  const auto algorithm = algo == "naive" ? stampchain::ConvolutionAlgorithm::naive
                                         : stampchain::ConvolutionAlgorithm::ranked;
  const stampchain::SubsetConvMultiplier<std::uint64_t> multiplier{algorithm};
  const auto plan = stampchain::compile_plan(stampchain::minimal_chain_for(n), n);

  const auto t0 = Clock::now();
  const auto planned = stampchain::run_plan(plan, f, multiplier);
  const double plan_ms = elapsed_ms(t0);
  const auto t1 = Clock::now();
  const auto reference = stampchain::run_straightforward(n, f, multiplier);
  const double ref_ms = elapsed_ms(t1);

  const bool equal = planned.outputs == reference.outputs;
  std::cout << "chain: " << plan.chain.to_string() << " (k=" << plan.chain.length() << ")\n";
  std::cout << "plan: " << planned.multiply_count << " convolutions, reference: "
            << reference.multiply_count << ", outputs "
            << (equal ? "equal" : "DIFFER") << '\n';
  std::cout << "wall-clock: plan " << plan_ms << " ms, reference " << ref_ms << " ms\n";
  return equal ? 0 : 1;
}

int cmd_demo_matrix(int m, std::int64_t n, std::uint64_t seed, int p, int q, bool use_float) {
  auto run = [&](auto scalar_tag) -> int {
    using Scalar = decltype(scalar_tag);
    std::mt19937_64 gen(seed);
    stampchain::Matrix<Scalar> x(m, m);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        if constexpr (std::floating_point<Scalar>) {
          x.at(r, c) = static_cast<Scalar>((gen() >> 11) * 0x1.0p-53);  // uniform [0, 1)
        } else {
          x.at(r, c) = Scalar(static_cast<std::int64_t>(next_entry(gen)));
        }
      }
    }
    const stampchain::MatrixEntryMultiplier<Scalar> multiplier(m, p, q);
    const auto plan = stampchain::compile_plan(stampchain::minimal_chain_for(n), n);

    const auto t0 = Clock::now();
    const auto planned = stampchain::run_plan(plan, x, multiplier);
    const double plan_ms = elapsed_ms(t0);
    const auto t1 = Clock::now();
    const auto reference = stampchain::run_straightforward(n, x, multiplier);
    const double ref_ms = elapsed_ms(t1);

    bool equal = planned.outputs.size() == reference.outputs.size();
    for (std::size_t i = 0; equal && i < planned.outputs.size(); ++i) {
      equal = multiplier.value_equal(planned.outputs[i], reference.outputs[i]);
    }
    std::cout << "chain: " << plan.chain.to_string() << " (k=" << plan.chain.length() << ")\n";
    std::cout << "plan: " << planned.multiply_count << " products, reference: "
              << reference.multiply_count << ", outputs " << (equal ? "equal" : "DIFFER")
              << '\n';
    std::cout << "wall-clock: plan " << plan_ms << " ms, reference " << ref_ms << " ms\n";
    if (std::floating_point<Scalar> && !planned.outputs.empty()) {
      if constexpr (std::floating_point<Scalar>) {
        std::cout << "y_" << n << " = " << full_precision(double(planned.outputs.back()))
                  << '\n';
      }
    }
    return equal ? 0 : 1;
  };
  return use_float ? run(double{}) : run(stampchain::DemoScalar{});
}

int cmd_tables(const std::string& kind) {
  if (kind == "bases") {
    std::cout << stampchain::extremal_bases_asset();
  } else if (kind == "chains") {
    std::cout << stampchain::extremal_chains_asset();
  } else {
    for (int k = 1; k <= 25; ++k) std::cout << k << ' ' << stampchain::nbar(k) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stamp chains: addition chains that are also additive 2-bases"};
  app.require_subcommand(1);

  std::vector<std::int64_t> elements;
  std::string as_kind;  // empty = nothing requested, informational output
  std::optional<std::int64_t> verify_n;
  auto* verify = app.add_subcommand("verify", "check range, admissibility and chain property");
  verify->add_option("elements", elements, "set elements")->required()->expected(-1);
  verify->add_option("--as", as_kind, "property family to assert")
      ->check(CLI::IsMember({"chain", "basis"}));
  verify->add_option("--n", verify_n, "target range to assert");

  std::vector<std::int64_t> conv_elements;
  std::string direction = "to-chain";
  auto* convert = app.add_subcommand("convert", "basis <-> chain correspondence");
  convert->add_option("elements", conv_elements, "set elements")->required()->expected(-1);
  convert->add_option("--direction", direction, "to-chain or to-basis")
      ->check(CLI::IsMember({"to-chain", "to-basis"}));

  int search_k = 1;
  std::optional<std::uint64_t> max_nodes;
  unsigned workers = 0;
  auto* search = app.add_subcommand("search", "exhaustive extremal-basis search");
  search->add_option("--k", search_k, "basis length")->required()->check(CLI::Range(1, 64));
  search->add_option("--max-nodes", max_nodes, "node-count budget");
  search->add_option("--workers", workers, "parallel subtree workers (0 = auto)");

  std::int64_t plan_n = 1;
  std::vector<std::int64_t> plan_chain;
  std::string plan_format = "text";
  auto* plan = app.add_subcommand("plan", "compile a multiplication plan");
  plan->add_option("--n", plan_n, "compute y_1..y_n")->required();
  plan->add_option("--chain", plan_chain, "explicit stamp chain")->expected(-1);
  plan->add_option("--format", plan_format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* demo = app.add_subcommand("demo", "run both executors and compare");
  demo->require_subcommand(1);
  int sc_N = 10;
  std::int64_t sc_n = 20;
  std::uint64_t sc_seed = 1;
  std::string sc_algo = "ranked";
  std::string sc_input, sc_dump;
  auto* subsetconv = demo->add_subcommand("subsetconv", "cluster-count posterior curve");
  subsetconv->add_option("--N", sc_N, "ground set size")->check(CLI::Range(0, 20));
  subsetconv->add_option("--n", sc_n, "cluster count cap")->required();
  subsetconv->add_option("--seed", sc_seed, "RNG seed");
  subsetconv->add_option("--algorithm", sc_algo, "full-convolution algorithm")
      ->check(CLI::IsMember({"ranked", "naive"}));
  subsetconv->add_option("--input", sc_input, "read the set function from a dump file");
  subsetconv->add_option("--dump-input", sc_dump, "write the set function used to a dump file");
  int mx_m = 8;
  std::int64_t mx_n = 22;
  std::uint64_t mx_seed = 1;
  int mx_p = 1, mx_q = 1;
  bool mx_float = false;
  auto* matrix = demo->add_subcommand("matrix", "single-entry matrix powers");
  matrix->add_option("--m", mx_m, "matrix dimension")->required()->check(CLI::Range(1, 512));
  matrix->add_option("--n", mx_n, "power cap")->required();
  matrix->add_option("--seed", mx_seed, "RNG seed");
  matrix->add_option("--p", mx_p, "target row (1-based)");
  matrix->add_option("--q", mx_q, "target column (1-based)");
  matrix->add_flag("--float", mx_float, "floating point instead of modular arithmetic");

  std::string kind = "bases";
  auto* tables = app.add_subcommand("tables", "print the embedded tables");
  tables->add_option("--kind", kind, "bases, chains or nbar")
      ->check(CLI::IsMember({"bases", "chains", "nbar"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(elements, as_kind, verify_n);
    if (convert->parsed()) return cmd_convert(conv_elements, direction);
    if (search->parsed()) return cmd_search(search_k, max_nodes, workers);
    if (plan->parsed()) return cmd_plan(plan_n, plan_chain, plan_format);
    if (demo->parsed()) {
      if (subsetconv->parsed()) {
        return cmd_demo_subsetconv(sc_N, sc_n, sc_seed, sc_algo, sc_input, sc_dump);
      }
      if (matrix->parsed()) return cmd_demo_matrix(mx_m, mx_n, mx_seed, mx_p, mx_q, mx_float);
    }
    if (tables->parsed()) return cmd_tables(kind);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
