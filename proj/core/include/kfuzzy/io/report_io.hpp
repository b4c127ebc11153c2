#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "kfuzzy/fuzzy/laplacian.hpp"
#include "kfuzzy/group/grid_function.hpp"

namespace kfuzzy::io {

// Writes to a temporary file in the same directory and renames it over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view content);

// 64-bit FNV-1a, printed as 16 hex digits by hash_hex.
std::uint64_t fnv1a(std::string_view data);
std::string hash_hex(std::uint64_t h);

// One row per sample: t, y1 … y_{D−1}, re, im[, residual_re, residual_im]. With stride s > 1 only
// samples whose grid indices are all multiples of s are written.
std::string grid_function_csv(const group::GridFunction& f, const group::GridFunction* residual = nullptr,
                              std::size_t stride = 1);
// Axes and a free-form description, written next to the CSV.
std::string grid_function_header_json(const group::GridFunction& f, std::string_view description);

// Per-mode summary: index, eigenvalue, μ², fitted λ/kind/overlap, residuals, μ² fit.
std::string mode_summary_csv(const fuzzy::SpectralReport& report);

// Eigenvalues, per-mode matches and summary metrics. `timestamp` is the only field that may differ
// between runs with identical inputs.
std::string spectral_report_json(const fuzzy::SpectralReport& report, std::string_view config_hash,
                                 std::string_view timestamp);

}  // namespace kfuzzy::io
