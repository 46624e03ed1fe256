#ifndef TWISTCOH_CLI_HPP
#define TWISTCOH_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "twistcoh/algebra.hpp"

namespace twc {

constexpr int kSchemaVersion = 1;

// Runs one command; the JSON report goes to `out`, diagnostics to `err`.
// Exit code 0 on computed verdicts, 1 on engine or input errors, 2 on usage errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// A nondegenerate functional: dual basis vectors first, then seeded random combinations.
FrobeniusForm find_frobenius_form(const AlgebraPtr& a, uint64_t seed, int trials = 200);

}  // namespace twc

#endif
