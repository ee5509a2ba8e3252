// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// lrpk: command-line front end over the liblrpk C interface.
//
// Exit codes: 0 ok, 1 a checked identity failed, 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "lrpk/lrpk.h"

namespace {

struct SessionDeleter {
  void operator()(lrpk_session* s) const { lrpk_session_free(s); }
};
using Session = std::unique_ptr<lrpk_session, SessionDeleter>;

// "-" reads the whole of stdin, once.
std::string resolve(const std::string& arg) {
  if (arg != "-") return arg;
  static bool consumed = false;
  if (consumed) throw CLI::ValidationError("stdin", "only one argument may be read from stdin");
  consumed = true;
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

int report(lrpk_session* s, lrpk_status st) {
  switch (st) {
    case LRPK_OK:
      std::cout << lrpk_output(s) << '\n';
      return 0;
    case LRPK_VIOLATION:
      std::cout << lrpk_output(s) << '\n';
      return 1;
    case LRPK_INTERNAL:
      std::cerr << "lrpk: internal error: " << lrpk_last_error(s) << '\n';
      return 1;
    default:
      std::cerr << "lrpk: " << lrpk_status_name(st) << ": " << lrpk_last_error(s) << '\n';
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pictures, Littlewood-Richardson crystals and the RSK-type bijection between them"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lrpk_version()));

  int max_cells = 0;
  app.add_option("--max-cells", max_cells, "Cell bound for tableau and picture enumeration (overrides LRPK_MAX_CELLS)")
      ->check(CLI::PositiveNumber);

  std::string kappa1, kappa2;
  bool count_only = false;
  auto* pictures = app.add_subcommand("pictures", "Enumerate the pictures from kappa1 to kappa2");
  pictures->add_option("--kappa1", kappa1, "Skew shape JSON {\"outer\":[..],\"inner\":[..]} or -")->required();
  pictures->add_option("--kappa2", kappa2, "Skew shape JSON or -")->required();
  pictures->add_flag("--count-only", count_only, "Print only the number of pictures");

  std::string picture = "-";
  auto* to_pair = app.add_subcommand("to-pair", "Map a picture to its pair of LR crystal elements");
  to_pair->add_option("--picture,input", picture, "Picture JSON or - (default)");

  std::string pair_doc = "-";
  auto* to_picture = app.add_subcommand("to-picture", "Map a to-pair document back to its picture");
  to_picture->add_option("--pair,input", pair_doc, "{\"context\":..,\"pair\":..} JSON or - (default)");

  std::string lambda, mu, nu;
  bool cross_check = false;
  auto* lr = app.add_subcommand("lr-coeff", "Littlewood-Richardson coefficient c^nu_{lambda mu}");
  lr->add_option("--lambda", lambda, "Partition JSON, e.g. [2,1]")->required();
  lr->add_option("--mu", mu, "Partition JSON")->required();
  lr->add_option("--nu", nu, "Partition JSON")->required();
  lr->add_flag("--cross-check", cross_check, "Also count pictures and LR skew tableaux and compare");

  std::string tableau;
  int rank = 0;
  auto* member = app.add_subcommand("membership", "Membership witness of a tableau in B(mu)^nu_lambda");
  member->add_option("--tableau", tableau, "Straight tableau JSON or -")->required();
  member->add_option("--lambda", lambda, "Partition JSON")->required();
  member->add_option("--nu", nu, "Partition JSON")->required();
  member->add_option("--rank", rank, "Rank n (default: from the shapes)");

  std::string array = "-";
  auto* rsk = app.add_subcommand("rsk", "Column-insertion RSK of a lexicographic two-rowed array");
  rsk->add_option("--array,input", array, "{\"top\":[..],\"bottom\":[..]} JSON or - (default)");

  std::string pq = "-";
  auto* unrsk = app.add_subcommand("unrsk", "Inverse RSK of a same-shaped tableau pair");
  unrsk->add_option("--tableaux,input", pq, "{\"P\":tableau,\"Q\":tableau} JSON or - (default)");

  std::string suite;
  std::uint64_t seed = 1;
  int size = 0;
  int instances = 0;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite,suite", suite, "roundtrip, cardinality, rsk-bijection, bumping-lemma, knuth-crystal, lr-highest or all")
      ->required();
  verify->add_option("--seed", seed, "Seed for randomized suites");
  verify->add_option("--size", size, "Override the suite's family size bound")->check(CLI::PositiveNumber);
  verify->add_option("--instances", instances, "Number of random instances")->check(CLI::PositiveNumber);
  verify->add_flag("--timing", timing, "Include elapsed_ms in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Session s(lrpk_session_new());
  if (!s) {
    std::cerr << "lrpk: out of memory\n";
    return 2;
  }
  if (max_cells > 0 && lrpk_set_limits(s.get(), max_cells, max_cells, 8) != LRPK_OK) return report(s.get(), LRPK_INVALID_INPUT);

  try {
    if (*pictures) {
      const std::string a = resolve(kappa1);
      const std::string b = resolve(kappa2);
      return report(s.get(), lrpk_pictures(s.get(), a.c_str(), b.c_str(), count_only ? 1 : 0));
    }
    if (*to_pair) return report(s.get(), lrpk_to_pair(s.get(), resolve(picture).c_str()));
    if (*to_picture) return report(s.get(), lrpk_to_picture(s.get(), resolve(pair_doc).c_str()));
    if (*lr) {
      const std::string l = resolve(lambda), m = resolve(mu), n = resolve(nu);
      return report(s.get(), lrpk_lr_coefficient(s.get(), l.c_str(), m.c_str(), n.c_str(), cross_check ? 1 : 0));
    }
    if (*member) {
      const std::string t = resolve(tableau), l = resolve(lambda), n = resolve(nu);
      return report(s.get(), lrpk_lr_membership(s.get(), t.c_str(), l.c_str(), n.c_str(), rank));
    }
    if (*rsk) return report(s.get(), lrpk_rsk(s.get(), resolve(array).c_str()));
    if (*unrsk) return report(s.get(), lrpk_unrsk(s.get(), resolve(pq).c_str()));
    if (*verify) return report(s.get(), lrpk_verify(s.get(), suite.c_str(), seed, size, instances, timing ? 1 : 0));
  } catch (const CLI::Error& e) {
    std::cerr << "lrpk: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
