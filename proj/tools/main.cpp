#include <CLI11.hpp>

#include <array>
#include <sstream>
#include <string>

#include "commands.hpp"

namespace {

// Accepts "w,x,y,z" or "[w,x,y,z]".
bool parse_axis(const std::string& text, std::array<double, 4>& out) {
  std::string cleaned;
  for (char c : text) {
    if (c != '[' && c != ']' && c != ' ') cleaned.push_back(c);
  }
  std::stringstream ss(cleaned);
  std::string item;
  std::size_t idx = 0;
  while (std::getline(ss, item, ',')) {
    if (idx >= 4) return false;
    try {
      std::size_t pos = 0;
      out[idx++] = std::stod(item, &pos);
      if (pos != item.size()) return false;
    } catch (const std::exception&) {
      return false;
    }
  }
  return idx == 4;
}

}  // namespace

int main(int argc, char** argv) {
  qfc::cli::JobConfig cfg;
  std::string frame_m_text;
  std::string frame_n_text;

  CLI::App app{"Functional calculus for quaternionic normal operators"};
  app.set_version_flag("--version", "qfc 0.1.0");
  app.require_subcommand(1);
  app.add_option("--frame-m", frame_m_text,
                 "First frame axis as w,x,y,z (default 0,1,0,0)");
  app.add_option("--frame-n", frame_n_text,
                 "Second frame axis as w,x,y,z (default 0,0,1,0)");
  app.add_option("--tol", cfg.tol, "Normality gate tolerance");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");

  auto* spectrum = app.add_subcommand(
      "spectrum", "Sphere classes and restricted spectrum of an operator");
  spectrum->add_option("matrix", cfg.input, "Operator file")->required();
  spectrum->add_option("--out", cfg.out, "Report destination");
  spectrum->add_option("--report", cfg.report, "Alias of --out");

  auto* apply = app.add_subcommand("apply", "Evaluate f(T) for a builtin f");
  apply->add_option("matrix", cfg.input, "Operator file")->required();
  apply->add_option("function", cfg.function_dsl, "Function description")
      ->required();
  apply->add_option("--out", cfg.out, "Matrix destination");
  apply->add_option("--report", cfg.report, "Cross-check report destination");

  auto* measure = app.add_subcommand(
      "measure", "Spectral measure atoms with axiom residuals");
  measure->add_option("matrix", cfg.input, "Operator file")->required();
  measure->add_option("--out", cfg.out, "Report destination");

  auto* verify = app.add_subcommand(
      "verify", "Run the property suite against an operator");
  verify->add_option("matrix", cfg.input, "Operator file")->required();
  verify->add_option("--suite", cfg.suite, "all (default) or fast");
  verify->add_option("--report", cfg.report, "Report destination");
  verify->add_option("--out", cfg.out, "Alias of --report");

  CLI11_PARSE(app, argc, argv);

  if (!frame_m_text.empty() && !parse_axis(frame_m_text, cfg.frame_m)) {
    std::fputs("invalid --frame-m; expected four numbers\n", stderr);
    return qfc::cli::kPrecondition;
  }
  if (!frame_n_text.empty() && !parse_axis(frame_n_text, cfg.frame_n)) {
    std::fputs("invalid --frame-n; expected four numbers\n", stderr);
    return qfc::cli::kPrecondition;
  }

  if (spectrum->parsed()) {
    if (cfg.out.empty()) cfg.out = cfg.report;
    return qfc::cli::run_spectrum(cfg);
  }
  if (apply->parsed()) return qfc::cli::run_apply(cfg);
  if (measure->parsed()) return qfc::cli::run_measure(cfg);
  if (verify->parsed()) return qfc::cli::run_verify(cfg);
  return qfc::cli::kOk;
}
