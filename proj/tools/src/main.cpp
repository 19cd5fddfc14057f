#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "ghc/cli/run.hpp"

namespace {

struct Flags {
  std::string series;
  int rank = 0;
  std::string subalgebra;
  std::string lambda;
  std::string lambda_h;
  long max_m = 20;
  bool dedup = false;
  std::string toral;
  std::string eta;
};

bool given(const CLI::App *sub, const std::string &name) {
  const auto *opt = sub->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

bool declared(const CLI::App *sub, const std::string &name) { return sub->get_option_no_throw(name) != nullptr; }

int emit(const ghc::cli::Response &r, const std::string &output) {
  if (!r.diagnostic.empty()) std::cerr << "ghc: " << r.diagnostic << "\n";
  const auto text = ghc::cli::render(r.body);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "ghc: cannot write " << output << "\n";
      return ghc::cli::kInputError;
    }
    out << text;
  }
  return r.exit_code;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Generalized Harish-Chandra module toolkit"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("--output,-o", output, "Write the JSON result to this file (default stdout)");

  Flags f;
  using ghc::cli::Json;

  struct Spec {
    const char *name;
    const char *help;
    bool subalgebra, lambda, lambda_h, max_m, dedup, toral, eta, series_rank;
  };
  const Spec specs[] = {
      {"root-system", "Roots in canonical order, Cartan matrix, heights", false, false, false, false, false, false, false, true},
      {"shadow", "Shadow decomposition of a closed root subset", true, false, false, false, false, false, false, true},
      {"fk-test", "Cone finite-type test (type A)", true, false, false, false, false, false, false, true},
      {"solvable-test", "Finite-type test for solvable root subalgebras", true, false, false, false, false, false, false, true},
      {"primal-test", "Primality of a reductive root subalgebra", true, false, false, false, false, true, false, true},
      {"mathieu", "Bounded-weight predicates and degrees", false, true, false, false, false, false, true, true},
      {"ktype-series", "k-type multiplicities of A^1(lambda)", false, true, true, true, false, false, false, true},
      {"exponents", "Exponents from the principal sl(2)", false, false, false, false, false, false, false, true},
      {"census", "Classify every closed root subset of A_n (n <= 4)", false, false, false, false, true, false, false, true},
  };

  std::string request_file;
  auto *run_cmd = app.add_subcommand("run", "Execute a JSON request {\"command\":...,\"parameters\":{...}}");
  run_cmd->add_option("request", request_file, "Request file, or - for stdin")->default_val("-");

  for (const auto &s : specs) {
    auto *sub = app.add_subcommand(s.name, s.help);
    if (s.series_rank) {
      sub->add_option("--series", f.series, "Series letter A-G")->required(std::string(s.name) != "mathieu");
      sub->add_option("--rank", f.rank, "Rank")->required(std::string(s.name) != "mathieu");
    }
    if (s.subalgebra) sub->add_option("--subalgebra", f.subalgebra, "Comma-separated root indices");
    if (s.lambda) sub->add_option("--lambda", f.lambda, "Comma-separated e-coordinates, e.g. 3/2,1/2");
    if (s.lambda_h) sub->add_option("--lambda-h", f.lambda_h, "Value lambda(h); a non-integral lambda is chosen");
    if (s.max_m) sub->add_option("--max-m", f.max_m, "Largest m in the series")->default_val(20);
    if (s.dedup) sub->add_flag("--dedup", f.dedup, "One row per Weyl-group orbit");
    if (s.toral) sub->add_option("--toral", f.toral, "full, coroots, or ';'-separated vectors")->default_val("full");
    if (s.eta) sub->add_option("--eta", f.eta, "Fiber coordinates, comma-separated");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ghc::cli::kInputError;
  }

  if (run_cmd->parsed()) {
    std::string text;
    if (request_file == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(request_file, std::ios::binary);
      if (!in) {
        std::cerr << "ghc: cannot read " << request_file << "\n";
        return ghc::cli::kInputError;
      }
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return emit(ghc::cli::run_text(text), output);
  }

  auto *sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Json params = Json::object();
  if (given(sub, "--series")) params["series"] = f.series;
  if (given(sub, "--rank")) params["rank"] = f.rank;
  if (declared(sub, "--subalgebra")) params["subalgebra"] = f.subalgebra;
  if (given(sub, "--lambda")) params["lambda"] = f.lambda;
  if (given(sub, "--lambda-h")) params["lambda_h"] = f.lambda_h;
  if (declared(sub, "--max-m")) params["max_m"] = f.max_m;
  if (declared(sub, "--dedup")) params["dedup"] = f.dedup;
  if (given(sub, "--eta")) params["eta"] = f.eta;
  if (declared(sub, "--toral")) {
    if (f.toral == "full" || f.toral == "coroots") {
      params["toral"] = f.toral;
    } else {
      Json rows = Json::array();
      std::stringstream ss(f.toral);
      std::string row;
      while (std::getline(ss, row, ';')) rows.push_back(row);
      params["toral"] = rows;
    }
  }
  return emit(ghc::cli::run(Json{{"command", name}, {"parameters", params}}), output);
}
