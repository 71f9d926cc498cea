#include "isodual/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"

#include "isodual/error.hpp"
#include "isodual/json_io.hpp"
#include "isodual/sweep.hpp"

namespace isodual {

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kDisagreement = 2;

void write_report_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write report file: " + path);
  out << body;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"isotone-map ideals, their Alexander duals, and the duality classifier"};
  app.require_subcommand(1);

  int gen_n = 1;
  int gen_bound = kDefaultGenerateBound;
  auto* gen = app.add_subcommand("gen", "emit all posets of size n up to isomorphism, one JSON per line");
  gen->add_option("n", gen_n, "poset size")->required();
  gen->add_option("--max-n", gen_bound, "size guard for generation");

  std::string arg_p, arg_q, arg_ideal;
  std::uint64_t hom_cap = kDefaultHomCap;
  std::uint64_t cover_cap = kDefaultCoverCap;

  auto* hom = app.add_subcommand("hom", "enumerate isotone maps P -> Q, one image array per line");
  hom->add_option("P", arg_p, "source poset (file or inline JSON)")->required();
  hom->add_option("Q", arg_q, "target poset (file or inline JSON)")->required();
  hom->add_option("--hom-cap", hom_cap, "enumeration cap");

  auto* ideal = app.add_subcommand("ideal", "build the isotone-map ideal of a poset pair");
  ideal->add_option("P", arg_p, "row poset (file or inline JSON)")->required();
  ideal->add_option("Q", arg_q, "column poset (file or inline JSON)")->required();
  ideal->add_option("--hom-cap", hom_cap, "enumeration cap");

  auto* dual = app.add_subcommand("dual", "Alexander dual of an ideal");
  dual->add_option("ideal", arg_ideal, "ideal (file or inline JSON)")->required();
  dual->add_option("--cover-cap", cover_cap, "dualization cap");

  auto* check = app.add_subcommand("check", "predict and compute duality for one pair");
  check->add_option("P", arg_p, "first poset (file or inline JSON)")->required();
  check->add_option("Q", arg_q, "second poset (file or inline JSON)")->required();
  check->add_option("--hom-cap", hom_cap, "enumeration cap");
  check->add_option("--cover-cap", cover_cap, "dualization cap");

  SweepConfig sweep_config;
  bool min_n_given = false;
  std::string sweep_output;
  std::string sweep_format = "json";
  auto* sweep = app.add_subcommand("sweep", "verify the classification over all small poset pairs");
  sweep->add_option("--max-n", sweep_config.max_n, "largest poset size");
  sweep->add_option("--min-n", sweep_config.min_n, "smallest poset size (default: max-n)")
      ->each([&](const std::string&) { min_n_given = true; });
  sweep->add_option("--hom-cap", sweep_config.hom_cap, "enumeration cap");
  sweep->add_option("--cover-cap", sweep_config.cover_cap, "dualization cap");
  sweep->add_option("--workers", sweep_config.workers, "worker thread count");
  sweep->add_option("--output", sweep_output, "report path (default: standard output)");
  sweep->add_option("--format", sweep_format, "report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (gen->parsed()) {
      for (const Poset& p : generate_posets(gen_n, gen_bound)) out << to_json(p).dump() << "\n";
      return kOk;
    }
    if (hom->parsed()) {
      Poset p = poset_from_json(parse_json_arg(arg_p));
      Poset q = poset_from_json(parse_json_arg(arg_q));
      for (const IsotoneMap& phi : enumerate_hom(p, q, hom_cap))
        out << to_json(phi).dump() << "\n";
      return kOk;
    }
    if (ideal->parsed()) {
      Poset p = poset_from_json(parse_json_arg(arg_p));
      Poset q = poset_from_json(parse_json_arg(arg_q));
      out << to_json(build_L(p, q, hom_cap)).dump() << "\n";
      return kOk;
    }
    if (dual->parsed()) {
      Ideal input = ideal_from_json(parse_json_arg(arg_ideal));
      out << to_json(alexander_dual(input, cover_cap)).dump() << "\n";
      return kOk;
    }
    if (check->parsed()) {
      Poset p = poset_from_json(parse_json_arg(arg_p));
      Poset q = poset_from_json(parse_json_arg(arg_q));
      PairReport report = verify_pair(p, q, hom_cap, cover_cap);
      out << to_json(report).dump() << "\n";
      return report.agree ? kOk : kDisagreement;
    }
    if (sweep->parsed()) {
      if (!min_n_given) sweep_config.min_n = sweep_config.max_n;
      SweepReport report = run_sweep(sweep_config);
      std::string body = sweep_format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n";
      if (sweep_output.empty())
        out << body;
      else
        write_report_file(sweep_output, body);
      err << "pairs " << report.pairs_checked << ", agreements " << report.agreements
          << ", disagreements " << report.disagreements.size() << "\n";
      return report.disagreements.empty() ? kOk : kDisagreement;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "error: no command\n";
  return kInputError;
}

}  // namespace isodual
