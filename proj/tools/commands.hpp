#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include "config.hpp"

namespace uag::cli {

/// Exit codes shared by every subcommand.
enum Exit : int { kSuccess = 0, kNegative = 1, kInputError = 2, kCapExceeded = 3 };

int cmd_solve(const std::string& algebra, const std::string& system, const Settings& s, std::ostream& out);
int cmd_closure(const std::string& algebra, const std::string& system, const std::optional<std::string>& pair,
                const Settings& s, std::ostream& out);
int cmd_lattice(const std::string& algebra, std::size_t vars, const Settings& s, std::ostream& out);
int cmd_equiv(const std::string& first, const std::string& second, bool cross_validate, const Settings& s,
              std::ostream& out);
int cmd_twist(const std::string& palgebra, const std::string& sigma, const Settings& s, std::ostream& out);
int cmd_opposite(const std::string& palgebra, const Settings& s, std::ostream& out);
int cmd_mirror(const std::string& polynomial, const std::string& field, const Settings& s, std::ostream& out);
int cmd_aequiv(const std::string& first, const std::string& second, const Settings& s, std::ostream& out);
int cmd_category_export(const std::string& algebra, std::size_t min_vars, std::size_t max_vars, std::size_t depth,
                        const Settings& s, std::ostream& out);
int cmd_alpha_check(const std::string& palgebra, const std::string& sigma, const std::string& system,
                    std::size_t samples, std::size_t max_listed, const Settings& s, std::ostream& out);
int cmd_duality_check(const std::string& algebra, const std::optional<std::string>& system,
                      const std::optional<std::string>& points, std::optional<std::size_t> vars, const Settings& s,
                      std::ostream& out);

}  // namespace uag::cli
