// Acceptance harness entry point. Prints one line per criterion and exits
// nonzero unless all nine pass. The CLI binary path comes from the build so
// the determinism criterion can spawn it.

#include "greedylab/acceptance.hpp"

#ifndef GREEDYLAB_CLI_PATH
#define GREEDYLAB_CLI_PATH ""
#endif

int main() { return greedylab::acceptance::acceptance_main(GREEDYLAB_CLI_PATH); }
