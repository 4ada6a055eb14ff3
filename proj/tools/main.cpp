#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "matchmod/pipeline.hpp"

namespace {

int write_outputs(const std::string& text, const std::string& json,
                  const std::string& json_path) {
  std::cout << text;
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot open " << json_path << " for writing\n";
      return 2;
    }
    out << json;
  }
  return 0;
}

std::optional<matchmod::MuLabel> parse_mu(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::string s = text;
  std::erase(s, '(');
  std::erase(s, ')');
  auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("expected --mu 4t,2s");
  int four_t = std::stoi(s.substr(0, comma));
  int two_s = std::stoi(s.substr(comma + 1));
  if (four_t < 0 || two_s < 0 || four_t % 4 != 0 || two_s % 2 != 0)
    throw std::invalid_argument("mu must be a composition (4t,2s)");
  matchmod::MuLabel mu;
  mu.t = four_t / 4;
  mu.s = two_s / 2;
  mu.n = mu.s + 2 * mu.t;
  for (int bit = 0; bit < 30; ++bit)
    if (mu.t & (1 << bit)) mu.I.insert(bit);
  return mu;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact decomposition of the GF(2) permutation module of Sym(2n) on its "
               "fixed-point-free involutions"};
  app.require_subcommand(1);

  int n = 2;
  std::string json_path;
  std::string mu_text;
  matchmod::PipelineOptions opts;

  auto add_common = [&](CLI::App* sub, bool with_precision) {
    sub->add_option("--n", n, "half the degree: the module is k Xi_{2n}")->required();
    sub->add_option("--json", json_path, "write a JSON report to this path");
    sub->add_option("--max-elements", opts.max_elements, "group closure cap");
    if (with_precision)
      sub->add_option("--precision", opts.precision, "2-adic precision k (default 16)");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list mu labels, W_mu and Q_mu");
  add_common(enumerate, false);

  CLI::App* decompose = app.add_subcommand("decompose", "decompose k Xi_{2n} and match mu");
  add_common(decompose, true);

  CLI::App* characters = app.add_subcommand("characters", "print the phi_mu tables");
  add_common(characters, false);
  characters->add_option("--mu", mu_text, "single composition, e.g. 4,2 for (4t,2s)");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite for n");
  add_common(verify, true);
  verify->add_flag("--skip-decompose", opts.skip_decompose,
                   "character and fixed-point-set checks only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    matchmod::set_closure_cap(opts.max_elements);
    auto start = std::chrono::steady_clock::now();
    int status = 0;
    if (enumerate->parsed()) {
      auto rows = matchmod::cmd_enumerate(n);
      status = write_outputs(matchmod::render_text(rows), matchmod::render_json(rows, n),
                             json_path);
    } else if (decompose->parsed()) {
      auto report = matchmod::cmd_decompose(n, opts);
      status = write_outputs(matchmod::render_text(report), matchmod::render_json(report),
                             json_path);
      if (status == 0 && !report.all_matched) status = 1;
    } else if (characters->parsed()) {
      auto rows = matchmod::cmd_characters(n, parse_mu(mu_text));
      status = write_outputs(matchmod::render_text(rows, n), matchmod::render_json(rows, n),
                             json_path);
    } else if (verify->parsed()) {
      auto report = matchmod::cmd_verify(n, opts);
      status = write_outputs(matchmod::render_text(report), matchmod::render_json(report),
                             json_path);
      if (status == 0 && !report.all_passed()) status = 1;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::cerr << "elapsed: " << elapsed << " ms\n";
    return status;
  } catch (const matchmod::limit_error& e) {
    std::cerr << "limit error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
