#pragma once

#include <string>
#include <vector>

#include "alphaspec/labeling.hpp"
#include "alphaspec/ordering.hpp"
#include "alphaspec/spectral.hpp"

namespace alphaspec::cli {

enum class Format { Table, Csv, Json };

// All emitters are deterministic: fixed field order, 12 significant digits in
// CSV and JSON, 12 decimals in tables.
std::string emit(const OrderingReport& report, Format format, bool timing = false, double runtime_ms = 0.0);
std::string emit(const CertificateReport& report, Format format);
std::string emit(const SpectralResult& result, Format format);
std::string emit(const std::vector<SweepRow>& rows, Format format, bool timing = false);

}  // namespace alphaspec::cli
