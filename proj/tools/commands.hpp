#pragma once

#include "serialize.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

// One function per subcommand. Each validates its inputs (throwing
// invalid_argument / runtime_error for the driver to turn into exit 2),
// prints exactly one report to `out`, and returns the exit code:
// 0 = computed, nothing found; 1 = obstruction or conjecture violation.

namespace charrel::cli {

int cmd_dims(unsigned n, unsigned k, Format f, std::ostream& out);
int cmd_classify(unsigned n, Format f, std::ostream& out);
int cmd_rp(unsigned n, unsigned target, const std::string& cls_filter, Format f,
           std::ostream& out);
int cmd_cp(unsigned n, unsigned target, Format f, std::ostream& out);
int cmd_numbers(const std::string& file, unsigned k, const std::string& cls,
                unsigned hyp, Format f, std::ostream& out);
int cmd_dold_basis(unsigned n, unsigned k, Format f, std::ostream& out);
int cmd_sweep(unsigned n_max, const std::string& kspec, unsigned jobs,
              const std::string& checkpoint_path, Format f, std::ostream& out,
              std::ostream& warn);
int cmd_binom(std::uint64_t b, std::uint64_t a, Format f, std::ostream& out);

}  // namespace charrel::cli
