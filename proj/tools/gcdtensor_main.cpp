// command-line front end: every operation behind JSON-in/JSON-out subcommands
// exit codes: 0 success, 1 usage or validation error, 2 mathematical violation

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcdt/determinant.hpp"
#include "gcdt/gcd_tensor.hpp"
#include "gcdt/json_io.hpp"
#include "gcdt/numtheory.hpp"
#include "gcdt/poset.hpp"
#include "gcdt/positivity.hpp"
#include "gcdt/tensor.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_violation = 2;

struct MathViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty() || out_path == "-") {
    std::cout << payload << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
  out << payload << "\n";
}

gcdt::IntegerSet parse_set(const std::string& csv) {
  std::vector<std::uint64_t> vals;
  std::string tok;
  std::istringstream ss(csv);
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw std::invalid_argument("bad set element '" + tok + "'");
    }
    vals.push_back(v);
  }
  return gcdt::IntegerSet(vals);
}

std::vector<std::string> parse_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream ss(csv);
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

gcdt::ArithmeticFn named_fn(const std::string& name) {
  if (name == "identity") return gcdt::identity_fn();
  if (name == "one") return gcdt::one_fn();
  if (name == "square") return gcdt::power_fn(2);
  if (name == "cube") return gcdt::power_fn(3);
  if (name == "totient") return gcdt::euler_phi_fn();
  throw std::invalid_argument("unknown weight function '" + name +
                              "' (expected identity|one|square|cube|totient)");
}

// resolved configuration echoed to stderr so stdout stays pure payload
void echo_config(const std::string& command, const nlohmann::ordered_json& flags) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["config"] = flags;
  std::cerr << j.dump() << "\n";
}

gcdt::AnyTensor load_tensor(const std::string& path) {
  return gcdt::tensor_from_json(read_file(path));
}

gcdt::Tensor<double> as_float64(const gcdt::AnyTensor& t) {
  if (std::holds_alternative<gcdt::Tensor<gcdt::BigInt>>(t)) {
    return gcdt::to_float64(std::get<gcdt::Tensor<gcdt::BigInt>>(t));
  }
  if (std::holds_alternative<gcdt::Tensor<gcdt::BigRat>>(t)) {
    return gcdt::to_float64(std::get<gcdt::Tensor<gcdt::BigRat>>(t));
  }
  return std::get<gcdt::Tensor<double>>(t);
}

// extracts the set from the diagonal and insists the tensor is exactly the
// gcd tensor on it, so downstream weights actually reconstruct the input
gcdt::IntegerSet set_from_gcd_tensor(const gcdt::Tensor<gcdt::BigInt>& t) {
  std::vector<std::uint64_t> vals;
  std::vector<std::size_t> idx(t.order(), 0);
  for (std::size_t i = 0; i < t.dim(); ++i) {
    std::fill(idx.begin(), idx.end(), i);
    vals.push_back(t.at(idx).convert_to<std::uint64_t>());
  }
  gcdt::IntegerSet s(vals);
  if (!(gcdt::build_gcd_tensor(s, t.order()) == t)) {
    throw std::invalid_argument("input tensor is not the gcd tensor of its diagonal set");
  }
  return s;
}

bool closed_form_matches(const gcdt::DetReport& closed, const gcdt::DetReport& oracle) {
  if (!oracle.expanded) throw std::logic_error("oracle reports are always expanded");
  if (closed.expanded) return closed.value == oracle.value;
  // forced expansion for the comparison; refuse absurd sizes
  if (closed.exponent > 1u << 20) {
    throw std::invalid_argument("closed form too large to expand for verification");
  }
  const std::uint64_t e = closed.exponent.convert_to<std::uint64_t>();
  gcdt::BigRat value = 1;
  for (const gcdt::BigRat& b : closed.bases) value *= gcdt::ratpow(b, e);
  return value == oracle.value;
}

struct CommonFlags {
  std::string set_csv;
  std::string in_path;
  std::string out_path;
  std::uint64_t order = 2;
  std::uint64_t seed = 0;
};

int run(int argc, char** argv) {
  CLI::App app{"gcd tensors: construction, decomposition, factorization, determinants, probes"};
  app.require_subcommand(1);

  // ---- build ----
  CommonFlags b;
  auto* cmd_build = app.add_subcommand("build", "construct the gcd tensor of a set");
  cmd_build->add_option("--set", b.set_csv, "comma-separated positive integers")->required();
  cmd_build->add_option("--order", b.order, "tensor order (>= 2)")->capture_default_str();
  cmd_build->add_option("--out", b.out_path, "output path (default stdout)");

  // ---- decompose ----
  CommonFlags d;
  std::string d_scheme = "phi";
  std::string d_g = "identity";
  double d_power = 1.0;
  auto* cmd_dec = app.add_subcommand("decompose", "weighted outer-power decomposition");
  cmd_dec->add_option("--set", d.set_csv, "comma-separated positive integers");
  cmd_dec->add_option("--in", d.in_path, "gcd tensor JSON (set taken from the diagonal)");
  cmd_dec->add_option("--order", d.order, "tensor order (with --set)")->capture_default_str();
  cmd_dec->add_option("--scheme", d_scheme, "phi|psi|mult|fractional")->capture_default_str();
  cmd_dec->add_option("--g", d_g, "weight function for --scheme mult")->capture_default_str();
  cmd_dec->add_option("--power", d_power, "exponent for --scheme fractional")
      ->capture_default_str();
  cmd_dec->add_option("--out", d.out_path, "output path");

  // ---- factorize ----
  CommonFlags f;
  std::string f_scheme = "phi";
  auto* cmd_fac = app.add_subcommand("factorize", "diagonal-times-incidence factorization");
  cmd_fac->add_option("--set", f.set_csv, "comma-separated positive integers")->required();
  cmd_fac->add_option("--order", f.order, "tensor order")->capture_default_str();
  cmd_fac->add_option("--scheme", f_scheme, "phi|psi")->capture_default_str();
  cmd_fac->add_option("--out", f.out_path, "output path");

  // ---- det ----
  CommonFlags dt;
  std::string dt_closed;
  std::string dt_g = "square";
  bool dt_oracle = false;
  bool dt_verify = false;
  auto* cmd_det = app.add_subcommand("det", "determinant: closed form, oracle, or both");
  cmd_det->add_option("--set", dt.set_csv, "comma-separated positive integers");
  cmd_det->add_option("--in", dt.in_path, "tensor JSON for the oracle");
  cmd_det->add_option("--order", dt.order, "tensor order (with --set)")->capture_default_str();
  cmd_det->add_option("--closed-form", dt_closed, "phi|psi|mult");
  cmd_det->add_option("--g", dt_g, "weight function for --closed-form mult")
      ->capture_default_str();
  cmd_det->add_flag("--oracle", dt_oracle, "brute-force determinant of the tensor");
  cmd_det->add_flag("--verify-oracle", dt_verify,
                    "compare closed form against the oracle; mismatch exits 2");
  cmd_det->add_option("--out", dt.out_path, "output path");

  // ---- hadamard-power ----
  CommonFlags hp;
  std::string hp_power = "2";
  auto* cmd_pow = app.add_subcommand("hadamard-power", "entrywise power of a tensor");
  cmd_pow->add_option("--set", hp.set_csv, "comma-separated positive integers");
  cmd_pow->add_option("--in", hp.in_path, "tensor JSON");
  cmd_pow->add_option("--order", hp.order, "tensor order (with --set)")->capture_default_str();
  cmd_pow->add_option("--power", hp_power, "exponent: integers stay exact, otherwise float64")
      ->capture_default_str();
  cmd_pow->add_option("--out", hp.out_path, "output path");

  // ---- psd-check ----
  CommonFlags pc;
  std::uint64_t pc_trials = 200;
  auto* cmd_psd = app.add_subcommand("psd-check", "search for a negative form value");
  cmd_psd->add_option("--set", pc.set_csv, "comma-separated positive integers");
  cmd_psd->add_option("--in", pc.in_path, "tensor JSON");
  cmd_psd->add_option("--order", pc.order, "tensor order (with --set)")->capture_default_str();
  cmd_psd->add_option("--trials", pc_trials, "random sphere samples")->capture_default_str();
  cmd_psd->add_option("--seed", pc.seed, "random seed")->capture_default_str();
  cmd_psd->add_option("--out", pc.out_path, "output path");

  // ---- extreme-form ----
  CommonFlags ef;
  std::string ef_mode = "min";
  std::uint64_t ef_restarts = gcdt::default_restarts;
  std::uint64_t ef_iterations = gcdt::default_iterations;
  auto* cmd_ext = app.add_subcommand("extreme-form", "extreme form value on the order-norm sphere");
  cmd_ext->add_option("--set", ef.set_csv, "comma-separated positive integers");
  cmd_ext->add_option("--in", ef.in_path, "tensor JSON");
  cmd_ext->add_option("--order", ef.order, "tensor order (with --set)")->capture_default_str();
  cmd_ext->add_option("--mode", ef_mode, "min|max")->capture_default_str();
  cmd_ext->add_option("--restarts", ef_restarts, "optimizer restarts")->capture_default_str();
  cmd_ext->add_option("--iterations", ef_iterations, "iterations per restart")
      ->capture_default_str();
  cmd_ext->add_option("--seed", ef.seed, "random seed")->capture_default_str();
  cmd_ext->add_option("--out", ef.out_path, "output path");

  // ---- scan-conjecture ----
  CommonFlags sc;
  std::uint64_t sc_n = 2;
  std::uint64_t sc_max = 40;
  auto* cmd_scan = app.add_subcommand(
      "scan-conjecture", "determinant lower-bound sweep; any violation exits 2");
  cmd_scan->add_option("--n", sc_n, "subset size")->capture_default_str();
  cmd_scan->add_option("--order", sc.order, "tensor order")->capture_default_str();
  cmd_scan->add_option("--max", sc_max, "scan subsets of {1..max}")->capture_default_str();
  cmd_scan->add_option("--out", sc.out_path, "output path");

  // ---- lattice-build ----
  CommonFlags lb;
  std::string lb_set;
  bool lb_tensor = false;
  auto* cmd_lb = app.add_subcommand("lattice-build", "validate a lattice; optionally emit a meet tensor");
  cmd_lb->add_option("--in", lb.in_path, "lattice JSON")->required();
  cmd_lb->add_option("--set", lb_set, "subset labels (with --tensor)");
  cmd_lb->add_option("--order", lb.order, "tensor order (with --tensor)")->capture_default_str();
  cmd_lb->add_flag("--tensor", lb_tensor, "emit the meet tensor of --set instead of the summary");
  cmd_lb->add_option("--out", lb.out_path, "output path");

  // ---- lattice-det ----
  CommonFlags ld;
  std::string ld_set;
  bool ld_verify = false;
  auto* cmd_ld = app.add_subcommand("lattice-det", "closed-form determinant of a meet tensor");
  cmd_ld->add_option("--in", ld.in_path, "lattice JSON")->required();
  cmd_ld->add_option("--set", ld_set, "meet-closed subset labels")->required();
  cmd_ld->add_option("--order", ld.order, "tensor order")->capture_default_str();
  cmd_ld->add_flag("--verify-oracle", ld_verify,
                   "compare against the brute-force determinant; mismatch exits 2");
  cmd_ld->add_option("--out", ld.out_path, "output path");

  // ---- lattice-decompose ----
  CommonFlags lc;
  std::string lc_set;
  std::string lc_closure;
  auto* cmd_lc = app.add_subcommand("lattice-decompose",
                                    "totient-weight identity for a meet tensor");
  cmd_lc->add_option("--in", lc.in_path, "lattice JSON")->required();
  cmd_lc->add_option("--set", lc_set, "subset labels")->required();
  cmd_lc->add_option("--order", lc.order, "tensor order")->capture_default_str();
  cmd_lc->add_option("--closure", lc_closure,
                     "meet-closed superset labels (default: meet closure of --set)");
  cmd_lc->add_option("--out", lc.out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }

  if (cmd_build->parsed()) {
    echo_config("build", {{"set", b.set_csv}, {"order", b.order}, {"out", b.out_path}});
    gcdt::IntegerSet s = parse_set(b.set_csv);
    gcdt::Tensor<gcdt::BigInt> t = gcdt::build_gcd_tensor(s, b.order);
    write_output(b.out_path, gcdt::tensor_to_json(t));
    return exit_ok;
  }

  if (cmd_dec->parsed()) {
    echo_config("decompose", {{"set", d.set_csv},
                              {"in", d.in_path},
                              {"order", d.order},
                              {"scheme", d_scheme},
                              {"g", d_g},
                              {"power", d_power},
                              {"out", d.out_path}});
    gcdt::IntegerSet s;
    std::size_t order = d.order;
    if (!d.in_path.empty()) {
      gcdt::AnyTensor any = load_tensor(d.in_path);
      if (!std::holds_alternative<gcdt::Tensor<gcdt::BigInt>>(any)) {
        throw std::invalid_argument("decompose --in expects an exact integer tensor");
      }
      const auto& t = std::get<gcdt::Tensor<gcdt::BigInt>>(any);
      s = set_from_gcd_tensor(t);
      order = t.order();
    } else if (!d.set_csv.empty()) {
      s = parse_set(d.set_csv);
    } else {
      throw std::invalid_argument("decompose needs --set or --in");
    }

    std::string payload;
    if (d_scheme == "phi") {
      payload = gcdt::decomposition_to_json(
          gcdt::scp_decompose(s, order, gcdt::SchemeKind::phi_factor_closed));
    } else if (d_scheme == "psi") {
      payload = gcdt::decomposition_to_json(
          gcdt::scp_decompose(s, order, gcdt::SchemeKind::psi_gcd_closed));
    } else if (d_scheme == "mult") {
      payload = gcdt::decomposition_to_json(
          gcdt::scp_decompose_multiplicative(s, order, named_fn(d_g), d_g));
    } else if (d_scheme == "fractional") {
      payload = gcdt::decomposition_to_json(gcdt::scp_decompose_fractional(s, order, d_power));
    } else {
      throw std::invalid_argument("unknown scheme '" + d_scheme +
                                  "' (expected phi|psi|mult|fractional)");
    }
    write_output(d.out_path, payload);
    return exit_ok;
  }

  if (cmd_fac->parsed()) {
    echo_config("factorize", {{"set", f.set_csv},
                              {"order", f.order},
                              {"scheme", f_scheme},
                              {"out", f.out_path}});
    gcdt::IntegerSet s = parse_set(f.set_csv);
    gcdt::SchemeKind kind;
    if (f_scheme == "phi") {
      kind = gcdt::SchemeKind::phi_factor_closed;
    } else if (f_scheme == "psi") {
      kind = gcdt::SchemeKind::psi_gcd_closed;
    } else {
      throw std::invalid_argument("unknown scheme '" + f_scheme + "' (expected phi|psi)");
    }
    gcdt::GcdFactorization fac = gcdt::factorize(s, f.order, kind);
    write_output(f.out_path,
                 gcdt::factorization_to_json(fac, gcdt::WeightScheme{kind, "", 0.0}));
    return exit_ok;
  }

  if (cmd_det->parsed()) {
    echo_config("det", {{"set", dt.set_csv},
                        {"in", dt.in_path},
                        {"order", dt.order},
                        {"closed_form", dt_closed},
                        {"g", dt_g},
                        {"oracle", dt_oracle},
                        {"verify_oracle", dt_verify},
                        {"out", dt.out_path}});
    const bool has_set = !dt.set_csv.empty();
    const bool has_in = !dt.in_path.empty();

    auto oracle_from_inputs = [&]() -> gcdt::DetReport {
      if (has_in) {
        gcdt::AnyTensor any = load_tensor(dt.in_path);
        if (std::holds_alternative<gcdt::Tensor<gcdt::BigInt>>(any)) {
          return gcdt::tensor_det_oracle(std::get<gcdt::Tensor<gcdt::BigInt>>(any));
        }
        if (std::holds_alternative<gcdt::Tensor<gcdt::BigRat>>(any)) {
          return gcdt::tensor_det_oracle(std::get<gcdt::Tensor<gcdt::BigRat>>(any));
        }
        throw std::invalid_argument("determinant oracle needs exact entries, not float64");
      }
      if (!has_set) throw std::invalid_argument("det needs --set or --in");
      const gcdt::IntegerSet s = parse_set(dt.set_csv);
      if (dt_closed == "mult") {
        // oracle target is the transformed tensor, matching the closed form
        return gcdt::tensor_det_oracle(
            gcdt::multiplicative_transform(s, dt.order, named_fn(dt_g)));
      }
      return gcdt::tensor_det_oracle(gcdt::build_gcd_tensor(s, dt.order));
    };

    auto closed_from_inputs = [&]() -> gcdt::DetReport {
      if (!has_set) throw std::invalid_argument("--closed-form needs --set");
      const gcdt::IntegerSet s = parse_set(dt.set_csv);
      if (dt_closed == "phi") {
        return gcdt::det_closed_form(s, dt.order, gcdt::SchemeKind::phi_factor_closed);
      }
      if (dt_closed == "psi") {
        return gcdt::det_closed_form(s, dt.order, gcdt::SchemeKind::psi_gcd_closed);
      }
      if (dt_closed == "mult") {
        return gcdt::det_closed_form_multiplicative(s, dt.order, named_fn(dt_g));
      }
      throw std::invalid_argument("unknown closed form '" + dt_closed +
                                  "' (expected phi|psi|mult)");
    };

    if (dt_verify) {
      if (dt_closed.empty()) dt_closed = "phi";
      const gcdt::DetReport closed = closed_from_inputs();
      const gcdt::DetReport oracle = oracle_from_inputs();
      const bool ok = closed_form_matches(closed, oracle);
      write_output(dt.out_path, gcdt::det_verification_to_json(closed, oracle, ok));
      if (!ok) {
        std::cerr << "error: closed form disagrees with the oracle determinant\n";
        return exit_violation;
      }
      return exit_ok;
    }
    if (dt_oracle && dt_closed.empty()) {
      write_output(dt.out_path, gcdt::det_report_to_json(oracle_from_inputs()));
      return exit_ok;
    }
    if (!dt_closed.empty() && !dt_oracle) {
      write_output(dt.out_path, gcdt::det_report_to_json(closed_from_inputs()));
      return exit_ok;
    }
    throw std::invalid_argument("det needs exactly one of --closed-form, --oracle, --verify-oracle");
  }

  if (cmd_pow->parsed()) {
    echo_config("hadamard-power", {{"set", hp.set_csv},
                                   {"in", hp.in_path},
                                   {"order", hp.order},
                                   {"power", hp_power},
                                   {"out", hp.out_path}});
    gcdt::AnyTensor any;
    if (!hp.in_path.empty()) {
      any = load_tensor(hp.in_path);
    } else if (!hp.set_csv.empty()) {
      any = gcdt::build_gcd_tensor(parse_set(hp.set_csv), hp.order);
    } else {
      throw std::invalid_argument("hadamard-power needs --set or --in");
    }

    // integer exponents stay in exact arithmetic; anything else drops to float64
    bool integral = !hp_power.empty();
    long long int_power = 0;
    {
      auto [p, ec] = std::from_chars(hp_power.data(), hp_power.data() + hp_power.size(),
                                     int_power);
      integral = integral && ec == std::errc() && p == hp_power.data() + hp_power.size();
    }

    std::string payload;
    if (integral && int_power >= 0) {
      const auto e = static_cast<std::uint64_t>(int_power);
      if (std::holds_alternative<gcdt::Tensor<gcdt::BigInt>>(any)) {
        payload = gcdt::tensor_to_json(gcdt::entrywise_map(
            std::get<gcdt::Tensor<gcdt::BigInt>>(any),
            [e](const gcdt::BigInt& v) { return gcdt::ipow(v, e); }));
      } else if (std::holds_alternative<gcdt::Tensor<gcdt::BigRat>>(any)) {
        payload = gcdt::tensor_to_json(gcdt::entrywise_map(
            std::get<gcdt::Tensor<gcdt::BigRat>>(any),
            [e](const gcdt::BigRat& v) { return gcdt::ratpow(v, e); }));
      } else {
        payload = gcdt::tensor_to_json(gcdt::entrywise_map(
            std::get<gcdt::Tensor<double>>(any),
            [int_power](double v) { return std::pow(v, static_cast<double>(int_power)); }));
      }
    } else if (integral) {  // negative integer: exact reciprocal powers
      const auto e = static_cast<std::uint64_t>(-int_power);
      auto recip = [e](const gcdt::BigRat& v) {
        if (v == 0) throw std::invalid_argument("negative power of a zero entry");
        return gcdt::BigRat(1) / gcdt::ratpow(v, e);
      };
      if (std::holds_alternative<gcdt::Tensor<gcdt::BigInt>>(any)) {
        payload = gcdt::tensor_to_json(
            gcdt::entrywise_map(std::get<gcdt::Tensor<gcdt::BigInt>>(any),
                                [&](const gcdt::BigInt& v) { return recip(gcdt::BigRat(v)); }));
      } else if (std::holds_alternative<gcdt::Tensor<gcdt::BigRat>>(any)) {
        payload =
            gcdt::tensor_to_json(gcdt::entrywise_map(std::get<gcdt::Tensor<gcdt::BigRat>>(any), recip));
      } else {
        payload = gcdt::tensor_to_json(gcdt::entrywise_map(
            std::get<gcdt::Tensor<double>>(any),
            [int_power](double v) { return std::pow(v, static_cast<double>(int_power)); }));
      }
    } else {
      double r = 0.0;
      try {
        r = std::stod(hp_power);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad power '" + hp_power + "'");
      }
      gcdt::Tensor<double> t = as_float64(any);
      payload = gcdt::tensor_to_json(gcdt::entrywise_map(t, [r](double v) {
        const double out = std::pow(v, r);
        if (!std::isfinite(out)) {
          throw std::invalid_argument("fractional power undefined on a negative or zero entry");
        }
        return out;
      }));
    }
    write_output(hp.out_path, payload);
    return exit_ok;
  }

  if (cmd_psd->parsed()) {
    echo_config("psd-check", {{"set", pc.set_csv},
                              {"in", pc.in_path},
                              {"order", pc.order},
                              {"trials", pc_trials},
                              {"seed", pc.seed},
                              {"out", pc.out_path}});
    gcdt::Tensor<double> t;
    if (!pc.in_path.empty()) {
      t = as_float64(load_tensor(pc.in_path));
    } else if (!pc.set_csv.empty()) {
      t = gcdt::to_float64(gcdt::build_gcd_tensor(parse_set(pc.set_csv), pc.order));
    } else {
      throw std::invalid_argument("psd-check needs --set or --in");
    }
    write_output(pc.out_path,
                 gcdt::positivity_report_to_json(gcdt::psd_sample_check(t, pc_trials, pc.seed)));
    return exit_ok;
  }

  if (cmd_ext->parsed()) {
    echo_config("extreme-form", {{"set", ef.set_csv},
                                 {"in", ef.in_path},
                                 {"order", ef.order},
                                 {"mode", ef_mode},
                                 {"restarts", ef_restarts},
                                 {"iterations", ef_iterations},
                                 {"seed", ef.seed},
                                 {"out", ef.out_path}});
    gcdt::Tensor<double> t;
    if (!ef.in_path.empty()) {
      t = as_float64(load_tensor(ef.in_path));
    } else if (!ef.set_csv.empty()) {
      t = gcdt::to_float64(gcdt::build_gcd_tensor(parse_set(ef.set_csv), ef.order));
    } else {
      throw std::invalid_argument("extreme-form needs --set or --in");
    }
    gcdt::ExtremeMode mode;
    if (ef_mode == "min") {
      mode = gcdt::ExtremeMode::min;
    } else if (ef_mode == "max") {
      mode = gcdt::ExtremeMode::max;
    } else {
      throw std::invalid_argument("unknown mode '" + ef_mode + "' (expected min|max)");
    }
    write_output(ef.out_path, gcdt::extreme_result_to_json(gcdt::extreme_form_on_sphere(
                                  t, mode, ef_restarts, ef_iterations, ef.seed)));
    return exit_ok;
  }

  if (cmd_scan->parsed()) {
    echo_config("scan-conjecture",
                {{"n", sc_n}, {"order", sc.order}, {"max", sc_max}, {"out", sc.out_path}});
    gcdt::ScanReport rep = gcdt::conjecture_scan(sc_n, sc.order, sc_max);
    write_output(sc.out_path, gcdt::scan_report_to_json(rep));
    if (rep.violations > 0) {
      std::cerr << "error: " << rep.violations << " determinant lower-bound violation(s) found\n";
      return exit_violation;
    }
    return exit_ok;
  }

  if (cmd_lb->parsed()) {
    echo_config("lattice-build", {{"in", lb.in_path},
                                  {"set", lb_set},
                                  {"order", lb.order},
                                  {"tensor", lb_tensor},
                                  {"out", lb.out_path}});
    const gcdt::LatticeSpec spec = gcdt::lattice_from_json(read_file(lb.in_path));
    const gcdt::MeetSemilattice l = gcdt::MeetSemilattice::build(spec.elements, spec.pairs);
    if (!lb_tensor) {
      write_output(lb.out_path, gcdt::lattice_summary_to_json(l));
      return exit_ok;
    }
    if (lb_set.empty()) throw std::invalid_argument("--tensor needs --set");
    if (!spec.has_valuation) throw std::invalid_argument("meet tensor needs a valuation 'g'");
    const std::vector<std::string> subset = parse_labels(lb_set);
    std::string payload;
    if (spec.valuation_is_float) {
      payload = gcdt::tensor_to_json(
          gcdt::build_meet_tensor(l, subset, spec.float_valuation, lb.order));
    } else {
      payload = gcdt::tensor_to_json(
          gcdt::build_meet_tensor(l, subset, spec.exact_valuation, lb.order));
    }
    write_output(lb.out_path, payload);
    return exit_ok;
  }

  if (cmd_ld->parsed()) {
    echo_config("lattice-det", {{"in", ld.in_path},
                                {"set", ld_set},
                                {"order", ld.order},
                                {"verify_oracle", ld_verify},
                                {"out", ld.out_path}});
    const gcdt::LatticeSpec spec = gcdt::lattice_from_json(read_file(ld.in_path));
    const gcdt::MeetSemilattice l = gcdt::MeetSemilattice::build(spec.elements, spec.pairs);
    if (!spec.has_valuation) throw std::invalid_argument("lattice-det needs a valuation 'g'");
    if (spec.valuation_is_float) {
      throw std::invalid_argument("closed-form determinants need an exact valuation; "
                                  "write values as integers or \"p/q\" strings");
    }
    const std::vector<std::string> subset = parse_labels(ld_set);
    const gcdt::DetReport closed =
        gcdt::det_closed_form_meet(l, subset, spec.exact_valuation, ld.order);
    if (!ld_verify) {
      write_output(ld.out_path, gcdt::det_report_to_json(closed));
      return exit_ok;
    }
    const gcdt::Tensor<gcdt::BigRat> t =
        gcdt::build_meet_tensor(l, subset, spec.exact_valuation, ld.order);
    const gcdt::DetReport oracle = gcdt::tensor_det_oracle(t);
    const bool ok = closed_form_matches(closed, oracle);
    write_output(ld.out_path, gcdt::det_verification_to_json(closed, oracle, ok));
    if (!ok) {
      std::cerr << "error: closed form disagrees with the oracle determinant\n";
      return exit_violation;
    }
    return exit_ok;
  }

  if (cmd_lc->parsed()) {
    echo_config("lattice-decompose", {{"in", lc.in_path},
                                      {"set", lc_set},
                                      {"order", lc.order},
                                      {"closure", lc_closure},
                                      {"out", lc.out_path}});
    const gcdt::LatticeSpec spec = gcdt::lattice_from_json(read_file(lc.in_path));
    const gcdt::MeetSemilattice l = gcdt::MeetSemilattice::build(spec.elements, spec.pairs);
    if (!spec.has_valuation) throw std::invalid_argument("lattice-decompose needs a valuation 'g'");
    const std::vector<std::string> subset = parse_labels(lc_set);
    const std::vector<std::string> closure =
        lc_closure.empty() ? l.meet_closure(subset) : parse_labels(lc_closure);
    std::string payload;
    if (spec.valuation_is_float) {
      payload = gcdt::meet_factorization_to_json(
          gcdt::meet_decompose_factorize(l, subset, spec.float_valuation, lc.order, closure),
          subset);
    } else {
      payload = gcdt::meet_factorization_to_json(
          gcdt::meet_decompose_factorize(l, subset, spec.exact_valuation, lc.order, closure),
          subset);
    }
    write_output(lc.out_path, payload);
    return exit_ok;
  }

  throw std::invalid_argument("no command given");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const MathViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_violation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}
