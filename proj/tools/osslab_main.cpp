// Command-line front end: build, inspect, check, classify and fuzz
// algebraic curvature models.
//
// Exit codes: 0 pass, 1 check failure, 2 usage error, 3 I/O or format error.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "osslab/checkers.hpp"
#include "osslab/corpus.hpp"
#include "osslab/fourdim.hpp"
#include "osslab/generators.hpp"
#include "osslab/model_io.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("OSSLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("OSSLAB_SEED is not a valid unsigned integer: " +
                                  std::string(env));
    }
  }
  return 0;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string join_values(const osslab::Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += format_value(v[i]);
  }
  return out;
}

void print_report_line(const osslab::CheckReport& r) {
  std::cout << r.check << ": " << (r.pass ? "PASS" : "FAIL") << "  maxResidual="
            << format_value(r.maxResidual) << "  tolerance=" << format_value(r.threshold);
  if (r.samplesUsed > 0) std::cout << "  samples=" << r.samplesUsed;
  if (r.marginal) std::cout << "  [marginal]";
  std::cout << "\n";
  if (r.witness) {
    std::cout << "  witness:";
    if (!r.witness->direction.empty())
      std::cout << " direction=(" << join_values(r.witness->direction) << ")";
    std::cout << " eigenvalue=" << format_value(r.witness->eigenvalue)
              << " residual=" << format_value(r.witness->residual) << "\n";
  }
}

struct MakeOptions {
  std::string kind;
  int dim = 4;
  bool dimGiven = false;
  double c = 0.0;
  bool cGiven = false;
  std::vector<double> lambdas;
  std::uint64_t seed = 0;
  double scale = 1.0;
  double eps = 0.05;
  std::string out;
};

int run_make(const MakeOptions& o) {
  osslab::CurvatureTensor model = osslab::CurvatureTensor::zero(4);
  json generator;

  if (o.kind == "canonical") {
    if (o.lambdas.size() != 3)
      throw std::invalid_argument("--kind canonical requires --lambdas l1,l2,l3");
    if (o.dimGiven && o.dim != 4)
      throw std::invalid_argument("canonical models are 4-dimensional");
    model = osslab::canonical_osserman(o.lambdas[0], o.lambdas[1], o.lambdas[2]);
    generator = {{"kind", "canonical"}, {"dimension", 4}, {"lambdas", o.lambdas}};
  } else if (o.kind == "space-form") {
    if (!o.cGiven) throw std::invalid_argument("--kind space-form requires --c");
    model = osslab::space_form(o.dim, o.c);
    generator = {{"kind", "space-form"}, {"dimension", o.dim}, {"c", o.c}};
  } else if (o.kind == "random") {
    model = osslab::random_curvature(o.dim, o.seed, o.scale);
    generator = {{"kind", "random"}, {"dimension", o.dim}, {"seed", o.seed},
                 {"scale", o.scale}};
  } else {  // perturbed
    if (o.lambdas.size() == 3) {
      if (o.dimGiven && o.dim != 4)
        throw std::invalid_argument("a canonical perturbation base is 4-dimensional");
      model = osslab::canonical_osserman(o.lambdas[0], o.lambdas[1], o.lambdas[2]);
      generator = {{"kind", "perturbed"}, {"dimension", 4}, {"lambdas", o.lambdas}};
    } else if (o.cGiven) {
      model = osslab::space_form(o.dim, o.c);
      generator = {{"kind", "perturbed"}, {"dimension", o.dim}, {"c", o.c}};
    } else {
      throw std::invalid_argument("--kind perturbed requires a base: --lambdas or --c");
    }
    model = osslab::perturb(model, o.seed, o.eps);
    generator["seed"] = o.seed;
    generator["eps"] = o.eps;
  }

  if (o.out.empty() || o.out == "-")
    std::cout << osslab::model_to_json(model, generator).dump(2) << "\n";
  else
    osslab::write_model(o.out, model, generator);
  return kExitPass;
}

struct CheckOptions {
  std::string file;
  std::string what = "all";
  int samples = 200;
  std::uint64_t seed = 0;
  double tol = osslab::kDefaultTol;
  bool jsonOut = false;
};

int run_check(const CheckOptions& o) {
  const osslab::ModelFile mf = osslab::read_model(o.file);
  const auto& model = mf.tensor;
  const int n = model.dimension();
  osslab::SampleConfig cfg;
  cfg.count = o.samples;
  cfg.seed = o.seed;

  const bool sampledApplies = n == 3 || n == 4;
  std::vector<osslab::CheckReport> reports;

  if (o.what == "einstein") {
    reports.push_back(osslab::einstein_check(model, o.tol));
  } else if (o.what == "selfdual") {
    reports.push_back(osslab::self_dual_report(model, o.tol));
  } else if (o.what == "osserman") {
    if (!sampledApplies)
      throw std::invalid_argument("the Osserman check needs a 3- or 4-dimensional model");
    reports.push_back(osslab::osserman_check_sampled(model, cfg, o.tol));
  } else if (o.what == "duality") {
    if (!sampledApplies)
      throw std::invalid_argument("the duality check needs a 3- or 4-dimensional model");
    reports.push_back(osslab::rakic_duality_check(model, cfg, o.tol));
  } else {  // all
    reports.push_back(osslab::einstein_check(model, o.tol));
    if (n == 4) reports.push_back(osslab::self_dual_report(model, o.tol));
    if (sampledApplies) {
      reports.push_back(osslab::osserman_check_sampled(model, cfg, o.tol));
      reports.push_back(osslab::rakic_duality_check(model, cfg, o.tol));
    }
    if (n == 4) reports.push_back(osslab::osserman_check_exact(model, o.tol));
  }

  bool allPass = true;
  for (const auto& r : reports) allPass = allPass && r.pass;

  if (o.jsonOut) {
    if (reports.size() == 1) {
      std::cout << osslab::report_to_json(reports.front()).dump(2) << "\n";
    } else {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(osslab::report_to_json(r));
      std::cout << arr.dump(2) << "\n";
    }
  } else {
    for (const auto& r : reports) print_report_line(r);
    if (n == 4 && (o.what == "selfdual" || o.what == "all"))
      std::cout << "chirality: " << osslab::to_string(osslab::self_dual_check(model, o.tol))
                << "\n";
  }
  return allPass ? kExitPass : kExitCheckFail;
}

struct SpectrumOptions {
  std::string file;
  std::vector<double> direction;
  int samples = 1;
  std::uint64_t seed = 0;
};

int run_spectrum(const SpectrumOptions& o) {
  const osslab::ModelFile mf = osslab::read_model(o.file);
  const auto& model = mf.tensor;
  if (!o.direction.empty()) {
    if (static_cast<int>(o.direction.size()) != model.dimension())
      throw std::invalid_argument("--direction needs " + std::to_string(model.dimension()) +
                                  " coordinates");
    std::cout << join_values(osslab::perp_spectrum(model, o.direction)) << "\n";
    return kExitPass;
  }
  osslab::SampleConfig cfg;
  cfg.count = o.samples;
  cfg.seed = o.seed;
  cfg.includeStructured = false;
  for (const auto& x : osslab::sample_unit_vectors(model.dimension(), cfg))
    std::cout << join_values(osslab::perp_spectrum(model, x)) << "\n";
  return kExitPass;
}

struct ClassifyOptions {
  std::string file;
  std::vector<double> direction;
  double tol = osslab::kDefaultTol;
};

int run_classify(const ClassifyOptions& o) {
  const osslab::ModelFile mf = osslab::read_model(o.file);
  const auto& model = mf.tensor;
  osslab::Vec x = o.direction;
  if (x.empty()) {
    x.assign(model.dimension(), 0.0);
    x[0] = 1.0;
  } else if (static_cast<int>(x.size()) != model.dimension()) {
    throw std::invalid_argument("--direction needs " + std::to_string(model.dimension()) +
                                " coordinates");
  }

  try {
    const osslab::AdaptedBasis basis = osslab::adapted_basis(model, x, o.tol);
    std::cout << "x: " << join_values(basis.x) << "\n"
              << "y: " << join_values(basis.y) << "\n"
              << "z: " << join_values(basis.z) << "\n"
              << "w: " << join_values(basis.w) << "\n";
    std::cout << "lambda:";
    for (double l : basis.lambda) std::cout << " " << format_value(l);
    std::cout << "\n";
    const auto c = osslab::classify_structure(basis.lambda, o.tol);
    std::cout << "case: " << osslab::to_string(c) << "\n";
    return kExitPass;
  } catch (const osslab::NotAdapted& e) {
    std::cerr << "not adapted: " << e.what() << "\n";
    return kExitCheckFail;
  }
}

struct FuzzOptions {
  int dim = 4;
  int trials = 100;
  std::uint64_t seed = 0;
  double tol = osslab::kDefaultTol;
  bool jsonOut = false;
};

int run_fuzz_cmd(const FuzzOptions& o) {
  osslab::SampleConfig cfg;  // per-trial seeds are derived inside run_fuzz
  cfg.seed = o.seed;
  const osslab::FuzzSummary s = osslab::run_fuzz(o.dim, o.trials, o.seed, o.tol, cfg);

  if (o.jsonOut) {
    json trials = json::array();
    for (const auto& t : s.perTrial)
      trials.push_back({{"kind", t.kind},
                        {"label", t.label},
                        {"dualityPass", t.dualityPass},
                        {"ossermanPass", t.ossermanPass},
                        {"agree", t.agree},
                        {"exactConsistent", t.exactConsistent},
                        {"marginal", t.marginal}});
    const json out = {{"check", "fuzz"},
                      {"dim", s.dim},
                      {"trials", s.trials},
                      {"seed", s.seed},
                      {"agreements", s.agreements},
                      {"marginal", s.marginalCount},
                      {"nonMarginalDisagreements", s.nonMarginalDisagreements},
                      {"verdict", s.nonMarginalDisagreements == 0 ? "pass" : "fail"},
                      {"trialsDetail", trials}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "fuzz: dim=" << s.dim << " trials=" << s.trials << " seed=" << s.seed << "\n";
    std::cout << "agreements: " << s.agreements << "/" << s.trials << "\n";
    std::cout << "marginal: " << s.marginalCount << "\n";
    std::cout << "non-marginal disagreements: " << s.nonMarginalDisagreements << "\n";
    for (const auto& t : s.perTrial)
      if (!(t.agree && t.exactConsistent))
        std::cout << "  disagreement: " << t.label << (t.marginal ? " [marginal]" : "")
                  << " duality=" << (t.dualityPass ? "pass" : "fail")
                  << " osserman=" << (t.ossermanPass ? "pass" : "fail") << "\n";
  }
  return s.nonMarginalDisagreements == 0 ? kExitPass : kExitCheckFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebraic curvature models: Jacobi spectra, Osserman and duality checks"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  MakeOptions mo;
  mo.seed = seed;
  auto* make = app.add_subcommand("make", "generate a model file");
  make->add_option("--kind", mo.kind, "canonical | space-form | random | perturbed")
      ->required()
      ->check(CLI::IsMember({"canonical", "space-form", "random", "perturbed"}));
  auto* dimOpt = make->add_option("--dim", mo.dim, "model dimension (2..8)");
  auto* cOpt = make->add_option("--c", mo.c, "space-form curvature constant");
  make->add_option("--lambdas", mo.lambdas, "canonical eigenvalues l1,l2,l3")->delimiter(',');
  make->add_option("--seed", mo.seed, "generator seed");
  make->add_option("--scale", mo.scale, "random-tensor scale");
  make->add_option("--eps", mo.eps, "perturbation size");
  make->add_option("--out", mo.out, "output file (default: stdout)");

  CheckOptions co;
  co.seed = seed;
  auto* check = app.add_subcommand("check", "run verification checks on a model file");
  check->add_option("file", co.file, "model file")->required();
  check->add_option("--what", co.what, "osserman | duality | einstein | selfdual | all")
      ->check(CLI::IsMember({"osserman", "duality", "einstein", "selfdual", "all"}));
  check->add_option("--samples", co.samples, "number of sampled directions");
  check->add_option("--seed", co.seed, "sampling seed");
  check->add_option("--tol", co.tol, "check tolerance");
  check->add_flag("--json", co.jsonOut, "emit machine-readable report(s)");

  SpectrumOptions so;
  so.seed = seed;
  auto* spectrum = app.add_subcommand("spectrum", "print restricted Jacobi spectra");
  spectrum->add_option("file", so.file, "model file")->required();
  spectrum->add_option("--direction", so.direction, "base direction v1,...,vn")->delimiter(',');
  spectrum->add_option("--samples", so.samples, "number of sampled directions");
  spectrum->add_option("--seed", so.seed, "sampling seed");

  ClassifyOptions lo;
  auto* classify = app.add_subcommand("classify", "adapted basis and eigenvalue structure");
  classify->add_option("file", lo.file, "model file")->required();
  classify->add_option("--direction", lo.direction, "base direction (default e1)")
      ->delimiter(',');
  classify->add_option("--tol", lo.tol, "residual tolerance");

  FuzzOptions fo;
  fo.seed = seed;
  auto* fuzz = app.add_subcommand("fuzz", "equivalence experiment over a mixed corpus");
  fuzz->add_option("--dim", fo.dim, "model dimension")->required()->check(CLI::IsMember({3, 4}));
  fuzz->add_option("--trials", fo.trials, "number of corpus models")->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", fo.seed, "corpus seed");
  fuzz->add_option("--tol", fo.tol, "check tolerance");
  fuzz->add_flag("--json", fo.jsonOut, "emit a machine-readable summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  mo.dimGiven = dimOpt->count() > 0;
  mo.cGiven = cOpt->count() > 0;

  try {
    if (make->parsed()) return run_make(mo);
    if (check->parsed()) return run_check(co);
    if (spectrum->parsed()) return run_spectrum(so);
    if (classify->parsed()) return run_classify(lo);
    if (fuzz->parsed()) return run_fuzz_cmd(fo);
  } catch (const osslab::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const osslab::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const osslab::ZeroVector& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const osslab::WrongDimension& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const osslab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
