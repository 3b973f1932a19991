#pragma once

#include "wentzell/modes.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace wentzell::cli {

/// Cache directory: the explicit flag, else WENTZELL_CACHE_DIR, else .wentzell_cache.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

/// File name keyed by (S, c, mu, M_max, residual_tol).
std::filesystem::path cache_path(const std::filesystem::path& dir, const PhysicalParams& p, std::size_t M_max,
                                 double residual_tol);

/// JSON with {S, c, mu, residual_tol, entries: [{m, q, parity, c_norm, d_bdy}]}, 17 significant digits.
std::string serialize_table(const ModeTable& table);
ModeTable parse_table(const std::string& text, const PhysicalParams& p);

struct CachedTable {
    ModeTable table;
    std::filesystem::path path;
    bool hit = false;
};

/// Loads a matching cache entry or builds the table and stores it.
CachedTable load_or_build(const std::filesystem::path& dir, const PhysicalParams& p, std::size_t M_max,
                          double residual_tol);

} // namespace wentzell::cli
