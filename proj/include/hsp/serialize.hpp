#pragma once

#include "hsp/oracle.hpp"
#include "hsp/region.hpp"

#include <string>

namespace hsp {

/// Serialized form of a computed region: metadata plus the sampled support
/// data and the polygon. Arrays have m_beta + 1 entries; the polygon ring is
/// written closed (first vertex repeated at the end).
struct RegionDocument {
    int n = 0;
    double r = 0.0;
    double rho = 0.0;
    double alpha = 0.0;
    int m_beta = 0;
    int quad_order = 0;
    std::string version;
    std::vector<double> beta, h, curve_re, curve_im;
    std::vector<std::pair<double, double>> polygon;
};

RegionDocument make_region_document(const Region& region, double alpha, int quad_order,
                                    const std::string& version);

std::string to_json(const RegionDocument& doc);
RegionDocument region_document_from_json(const std::string& text);
std::string to_csv(const RegionDocument& doc);
std::string to_svg(const RegionDocument& doc);

std::string to_json(const TrialReport& report);

} // namespace hsp
