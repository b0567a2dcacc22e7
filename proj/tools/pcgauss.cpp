// pcgauss: subgroup igs, order, index and equality in polycyclic groups.
//
//   pcgauss <command> <file.pcp> [words...] [-- words...] [--machine]
//           [--bound N]
//
// Options must precede a `--` separator; everything after it is the second
// word list of `member` and `equal`.

#include "pcgauss/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto [head, tail] = pcgauss::cli::split_lists(args);

  pcgauss::cli::Request req;
  req.second_words = std::move(tail);

  CLI::App app{"Induced generating sequences in polycyclic groups"};
  app.add_option("command", req.command, "collect | igs | order | index | "
                                         "member | equal | canonical | verify")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(
          pcgauss::cli::commands.begin(), pcgauss::cli::commands.end())));
  app.add_option("presentation", req.presentation_path, "PCP file")
      ->required();
  app.add_option("words", req.words, "words such as g1^2*g3^-1");
  app.add_flag("--machine", req.machine, "line-oriented output");
  app.add_option("--bound", req.bound,
                 "element bound for oracle enumeration in verify");

  std::reverse(head.begin(), head.end());
  try {
    app.parse(head);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : pcgauss::cli::input_error;
  }
  return pcgauss::cli::run(req, std::cout, std::cerr);
}
