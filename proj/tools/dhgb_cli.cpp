#include <fstream>
#include <iostream>
#include <vector>

#include "dhgb/session.hpp"

namespace {

constexpr const char* kUsage = R"(usage: dhgb <session-file|-> [asvar NAME] <command> [options]

commands:
  gb                      Groebner basis of the declared polynomials
  homogenize              homogenize each declared polynomial
  dehomogenize            dehomogenize each declared polynomial
  dhcheck --element       dh-closedness of each (homogeneous) polynomial
  dhcheck --ideal         dh-closedness of the generated graded ideal
  pipeline                homogenize, complete, dehomogenize, re-homogenize
  normal [--maxdeg N]     normal monomials and quotient dimensions
  present [--maxdeg N]    defining relations of A, G(A) and the Rees algebra

options:
  --degree-bound N        mandatory for free-algebra completion
  --maxdeg N              degree cap for normal/present (default 10)
  --trace                 append reduction traces to gb output

The session file is read from stdin when the file argument is "-".
)";

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << kUsage;
    return 2;
  }
  std::vector<std::string> args(argv + 2, argv + argc);
  std::string path = argv[1];

  dhgb::CommandResult res;
  if (path == "-") {
    res = dhgb::run_session(std::cin, args);
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot open " << path << "\n";
      return 2;
    }
    res = dhgb::run_session(in, args);
  }
  if (res.exit_code == 0)
    std::cout << res.text;
  else
    std::cerr << res.text;
  return res.exit_code;
}
