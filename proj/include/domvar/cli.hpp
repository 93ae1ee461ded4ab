#pragma once

#include "domvar/instances.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace domvar {

enum class Algo { Dp, Branch, Simple, Oracle };

std::string_view to_string(Algo a);
std::optional<Algo> parse_algo(std::string_view token);

/// Algorithm used when none is requested, or empty when the (variant, kind)
/// pair has no parameterized algorithm.
std::optional<Algo> default_algo(Variant v, ModulatorKind kind);

/// Throws UsageError for pairs without an algorithm of that kind.
DomSolution solve_instance(const DomInstance &inst, Algo algo);

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum ExitCode { kExitSolved = 0, kExitUsage = 1, kExitInput = 2, kExitInvariant = 3 };

/// `r <id> <variant> <algo> <status> <size> <micros> <name>=<value>...`
std::string report_line(std::string_view id, const DomInstance &inst, Algo algo, const DomSolution &sol,
                        long long micros);

/// Entry point of the command-line tool.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace domvar
