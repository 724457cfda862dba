#ifndef MOMENTLAB_CLI_HPP
#define MOMENTLAB_CLI_HPP

/**
 * @file cli.hpp
 * @brief Command-line front end: gen, classify, support, verify, transform, ops.
 *
 * Exit status: 0 when every requested check passes, 1 when a verification or
 * classification fails (the report is still written), 2 on option or input
 * errors.
 */

#include "momentlab/polynomial.hpp"
#include "momentlab/surd.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace momentlab::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// MOMENTLAB_PRECISION when set, else 1e-7. Throws InvalidArgument when the
/// variable is not a positive number.
double default_tolerance();

/// "lo,hi" where each token is an exact rational or "s-2sqrt(t)" /
/// "s+2sqrt(t)" resolved with the given s and t.
Interval parse_interval(std::string_view text, const std::optional<Rational>& s,
                        const std::optional<Rational>& t);

/// "c0,c1,...@k" is c0 x^k + c1 x^{k+1} + ...; the "@k" suffix is optional.
Polynomial parse_lincomb(std::string_view text);

/// "d=2,l=0" (either key may be omitted; defaults d=1, l=0).
std::pair<unsigned, std::size_t> parse_sub(std::string_view text);

}  // namespace momentlab::cli

#endif
