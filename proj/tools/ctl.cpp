#include <iostream>
#include <string>
#include <vector>

#include "ctl/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    std::cout
        << "ctl - exact modular character theory for small permutation groups\n"
           "\n"
           "usage:\n"
           "  ctl table <group> [--json]\n"
           "  ctl blocks <group> -p <prime> [--json]\n"
           "  ctl weights <group> -p <prime> [--block <id>] [--json]\n"
           "  ctl awc <group> -p <prime> [--json]\n"
           "  ctl triple check --level g|c|b --spec <file.json> [--seed-projrep <file>] [--json]\n"
           "  ctl triple lift --spec <file.json> [--json]\n"
           "  ctl thm54 --spec <file.json> [--json]\n"
           "\n"
           "groups: S<n>, A<n>, C<n>, D<2n>, K4, Q8, SL23, GL23, composites\n"
           "like S3xC2 and C2wr2, or a file in the two-line text format\n"
           "(degree: n / gens: ...).  CTL_MAX_ORDER bounds enumeration\n"
           "(default 10000).\n";
    return args.empty() ? 2 : 0;
  }
  ctl::RunResult result = ctl::execute_command(args);
  std::cout << result.text;
  return result.exit_code;
}
