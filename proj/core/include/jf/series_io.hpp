#pragma once

/**
 * JSON persistence for QZSeries.
 *
 * Schema (all coefficients exact fraction strings, entries sorted by
 * (n, r), zeros omitted):
 *
 *   {
 *     "gridDenom": 4,
 *     "order": "15/1",          // "inf" for exact polynomials
 *     "weight": -2,             // or null
 *     "index": 1,               // or null
 *     "coeffs": [ {"n": 1, "r": -1, "v": "1/1"}, ... ]   // n is scaled
 *   }
 *
 * Serialization is deterministic: the same series always produces the
 * same bytes.
 */

#include "jf/qzseries.hpp"

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <string>

namespace jf {

nlohmann::ordered_json series_to_json(const QZSeries& s);
QZSeries series_from_json(const nlohmann::json& j);

/// Canonical text form: 2-space indent, trailing newline.
std::string series_to_string(const QZSeries& s);
QZSeries series_from_string(const std::string& text);

void write_series_file(const std::string& path, const QZSeries& s);
QZSeries read_series_file(const std::string& path);

}  // namespace jf
